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
"""dixmier command tests"""
from click.testing import CliRunner
from powers_cert.cli.core import ExitCodes
from powers_cert.main import cli
from tests.env import Environment
from tests.fixtures import report


def test_dixmier_success(env: Environment):
    """Test δa + δA is averaged below 1/2"""
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        cli,
        ["dixmier", "--group", "F2", "--element", "a+A", "--epsilon", "0.5"],
        env=env.create_small_budgets(),
    )
    assert result.exit_code == ExitCodes.OK
    data = report(result)
    assert data["result"]["success"] is True
    assert data["result"]["distances"][0] == "2/1"
    assert data["result"]["distances_float"][-1] < 0.5


def test_dixmier_central(env: Environment):
    """Test central elements exit with the not found code"""
    runner = CliRunner(mix_stderr=False)
    result = runner.invoke(
        cli,
        ["dixmier", "--group", "F2xZ", "--element", "e|(1)", "--epsilon", "1/2"],
        env=env.create_small_budgets(),
    )
    assert result.exit_code == ExitCodes.NOT_FOUND
    data = report(result)
    assert data["status"] == "failed"
    assert data["result"]["stalled"] is True
    assert data["result"]["distances"] == ["1/1"]
    assert "stalled=True" in result.stderr
