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
"""Acceptance suites"""

import logging

import pytest

from .fixtures import powers_cert_cli, run_report


@pytest.mark.parametrize(
    "suite",
    (
        "kesten",
        "two-generator",
        "certificate",
        "multi-target",
        "radical",
        "cone",
        "dixmier",
    ),
)
def test_suite(suite: str):
    """Test every acceptance suite passes with the default budgets"""
    proc = powers_cert_cli("bench", suite)
    logging.info("stderr: %s", proc.stderr.decode())
    assert proc.returncode == 0
    results = run_report(proc)["result"]["suites"]
    assert len(results) == 1
    assert results[0]["name"] == suite
    assert results[0]["passed"] is True
