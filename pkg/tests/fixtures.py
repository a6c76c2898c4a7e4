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
"""Testing fixtures"""
import json
from typing import Any, Dict

from click.testing import Result
from hypothesis import strategies as st

from powers_cert.algebra import element
from powers_cert.cli.core import CliLogger
from powers_cert.groups import ball


class RunLog:
    """powers-cert log fixture"""

    def print_output(self):
        """Print log output"""
        log_path = CliLogger.log_path()
        if log_path.is_file():
            print(f"--powers-cert.log ({log_path})--\n" + log_path.read_text())


def report(result: Result) -> Dict[str, Any]:
    """Run report printed on stdout"""
    return json.loads(result.stdout)


def exact_elements(group, radius: int = 1, max_terms: int = 4):
    """Exact elements supported on a small ball"""
    return st.lists(
        st.tuples(
            st.sampled_from(ball(group, radius).words()),
            st.fractions(min_value=-2, max_value=2, max_denominator=4),
        ),
        max_size=max_terms,
    ).map(lambda terms: element(group, terms))
