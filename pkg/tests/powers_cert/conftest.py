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
"""Shared fixtures"""
import os

import pytest

from powers_cert.groups import parse_group
from tests.env import Environment
from tests.fixtures import RunLog


@pytest.fixture(name="env")
def fixture_env():
    """Environment fixture"""
    yield Environment()


@pytest.fixture(name="run_log")
def fixture_run_log():
    """powers-cert log fixture"""
    log = RunLog()
    yield log


@pytest.fixture(name="f2")
def fixture_f2():
    """Free group on two generators"""
    yield parse_group("F2")


@pytest.fixture(autouse=True)
def run_before_and_after_tests(run_log: RunLog, tmpdir):
    """Fixture to execute asserts before and after a test is run"""
    # Setup: Write logs into the test's own directory
    os.environ["POWERS_CERT_LOG_DIR"] = str(tmpdir)

    yield

    # Show log log output
    run_log.print_output()
