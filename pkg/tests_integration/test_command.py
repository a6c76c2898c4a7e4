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
"""End to end command tests"""

import json
import math
from pathlib import Path

from .fixtures import powers_cert_cli, run_report


def test_kesten_bracket():
    """Test the Kesten element brackets √3/2 with the default budgets"""
    proc = powers_cert_cli("norm", "--group", "F2", "--element", "(1/4)(a+A+b+B)")
    assert proc.returncode == 0
    result = run_report(proc)["result"]
    oracle = math.sqrt(3) / 2
    assert 0.86 <= result["lower"] <= oracle <= result["upper"] <= 0.92
    assert result["upper"] - result["lower"] <= 0.05


def test_search_then_verify(tmp_path: Path):
    """Test a certificate written by search is accepted by verify"""
    cert = tmp_path / "cert.json"
    proc = powers_cert_cli(
        "search", "--group", "F2", "--targets", "a", "--epsilon", "0.95", "-o", str(cert)
    )
    assert proc.returncode == 0
    assert json.loads(cert.read_text())["schema"] == "powers-cert/1"

    proc = powers_cert_cli("verify", str(cert))
    assert proc.returncode == 0
    assert run_report(proc)["result"]["valid"] is True


def test_multi_target():
    """Test one family for several targets"""
    proc = powers_cert_cli(
        "search", "--group", "F2", "--targets", "a;b;ab", "--epsilon", "0.95"
    )
    assert proc.returncode == 0
    certificate = run_report(proc)["result"]["certificate"]
    assert certificate["targets"] == ["a", "b", "ab"]
    assert len(certificate["upper_bounds"]) == 3


def test_central_target():
    """Test central targets report the amenable radical obstruction"""
    proc = powers_cert_cli(
        "search", "--group", "F2xZ", "--targets", "e|(1)", "--epsilon", "0.99"
    )
    assert proc.returncode == 1
    assert run_report(proc)["result"]["obstruction"] == "amenable-radical"
