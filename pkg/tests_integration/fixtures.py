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
"""Integration fixtures"""

import json
import subprocess
import sys
from typing import Any, Dict


def powers_cert_cli(*args) -> subprocess.CompletedProcess:
    """Execute the powers-cert cli command with given arguments"""
    return subprocess.run(
        [
            sys.executable,
            "-m",
            "powers_cert",
            *args,
        ],
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        check=False,
    )


def run_report(proc: subprocess.CompletedProcess) -> Dict[str, Any]:
    """Parse the JSON report printed on stdout"""
    return json.loads(proc.stdout.decode())
