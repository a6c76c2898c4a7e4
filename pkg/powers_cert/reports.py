#
# Copyright (c) 2026 The powers-cert authors
#
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Run reports"""

import dataclasses
import hashlib
import json
import logging
import time
from typing import Any, Dict, Optional

SCHEMA = "powers-cert-report/1"


def digest(text: str) -> str:
    """sha256 of an input's text form"""
    return "sha256:" + hashlib.sha256(text.encode("utf8")).hexdigest()


@dataclasses.dataclass
class RunReport:
    """Everything needed to reproduce a command run

    `config` echoes every budget and seed actually used, `inputs` maps
    input names to their text and digest. Only `wall_time` and `version`
    may differ between two runs of the same command.
    """

    command: str
    config: Dict[str, Any]
    inputs: Dict[str, Any] = dataclasses.field(default_factory=dict)
    result: Optional[Dict[str, Any]] = None
    status: str = "ok"
    wall_time: float = 0.0
    version: str = ""
    environment: Dict[str, str] = dataclasses.field(default_factory=dict)

    def add_input(self, name: str, text: str) -> "RunReport":
        """Record an input by its text and digest"""
        self.inputs[name] = {"text": text, "digest": digest(text)}
        return self

    def payload(self) -> Dict[str, Any]:
        """Deterministic part of the report"""
        return {
            "command": self.command,
            "config": self.config,
            "inputs": self.inputs,
            "status": self.status,
            "result": self.result,
        }

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        data = self.payload()
        data["schema"] = SCHEMA
        data["wall_time"] = round(self.wall_time, 6)
        data["version"] = self.version
        data["environment"] = self.environment
        return data

    def to_json(self, indent: int = 2) -> str:
        """JSON text with sorted keys"""
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


class Stopwatch:
    """Wall time of a command or suite, logged when stopped"""

    def __init__(self, label: str) -> None:
        self.label = label
        self.start_time = 0.0
        self.last_duration = 0.0

    def start(self) -> "Stopwatch":
        """Start measuring"""
        self.start_time = time.monotonic()
        return self

    def stop(self) -> float:
        """Stop measuring, 0 if never started"""
        if not self.start_time:
            return 0.0
        self.last_duration = time.monotonic() - self.start_time
        logging.info("%s: %.3fs", self.label, self.last_duration)
        return self.last_duration
