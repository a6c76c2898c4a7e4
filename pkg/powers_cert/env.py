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
"""Environment utilities"""

import os
from typing import Dict, Optional, Tuple

PREFIX = "POWERS_CERT_"


def parse_env_line(line: str) -> Optional[Tuple[str, str]]:
    """Parse one dotenv line into a key and an expanded value

    Empty lines and comments (starting with "#" or ";") return None.
    Single quoted values are literal, double quoted and bare values
    expand "$NAME" or "${NAME}" references.
    """
    line = line.strip()
    if not line or line.startswith(("#", ";")):
        return None

    key, _, value = line.partition("=")
    key, value = key.strip(), value.strip()
    if len(value) >= 2 and value[0] == value[-1] == "'":
        return key, value[1:-1]
    if len(value) >= 2 and value[0] == value[-1] == '"':
        value = value[1:-1]
    return key, os.path.expandvars(value)


def loadenv(path: str) -> Dict[str, str]:
    """Load environment variables from a dotenv file

    Below is an example of a dotenv file:
    >>>
    POWERS_CERT_RADIUS=10
    POWERS_CERT_LOG_DIR="$HOME/.cache/powers-cert"

    # Literal values can be surrounded with single quotes.
    POWERS_CERT_LOG_DIR='$HOME'
    >>>

    Args:
        path (str): Dotenv file path

    Returns:
        Dict[str, str]: Variables which were set
    """
    values = {}
    with open(path, "r", encoding="utf8") as file:
        for line in file:
            parsed = parse_env_line(line)
            if parsed is None:
                continue
            key, value = parsed
            os.environ[key] = value
            values[key] = value
    return values


def config_env() -> Dict[str, str]:
    """Current POWERS_CERT_* variables (echoed into run reports)"""
    return {
        key: value for key, value in sorted(os.environ.items()) if key.startswith(PREFIX)
    }
