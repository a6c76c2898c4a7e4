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
"""Integration test fixtures"""

import os

import pytest
from powers_cert.env import loadenv


@pytest.fixture(autouse=True)
def acceptance_env(tmp_path):
    """Acceptance environment (optionally loaded from TEST_ENV_FILE)"""
    test_env = os.getenv("TEST_ENV_FILE", ".env")
    if os.path.exists(test_env):
        loadenv(test_env)
    os.environ["POWERS_CERT_LOG_DIR"] = str(tmp_path)
    yield tmp_path
