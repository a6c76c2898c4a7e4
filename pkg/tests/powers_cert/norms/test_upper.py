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
"""Upper bound tests"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from powers_cert.algebra import parse_element, to_float
from powers_cert.errors import BudgetExceeded, ModeMismatch, WrongBackend
from powers_cert.groups import parse_group
from powers_cert.norms import (
    BoundConfig,
    l1_power_bounds,
    upper_bound_haagerup,
    upper_bound_l1,
    upper_bound_l1_power,
    upper_bound_schur,
)
from tests.fixtures import exact_elements

F2 = parse_group("F2")
KESTEN = parse_element("(1/4)(a+A+b+B)", F2)


def test_l1():
    """Test the triangle inequality bound"""
    assert upper_bound_l1(KESTEN) == 1
    assert upper_bound_l1(parse_element("a - 2b", F2)) == 3
    with pytest.raises(ModeMismatch):
        upper_bound_l1(to_float(KESTEN))


def test_haagerup():
    """Test the length strata bound"""
    assert upper_bound_haagerup(KESTEN) == 1
    assert upper_bound_haagerup(parse_element("3 + a", F2)) == 5
    with pytest.raises(WrongBackend):
        upper_bound_haagerup(parse_element("(1)", parse_group("Z")))


def test_schur_kesten():
    """Test the weighted Schur test reaches √3/2 on the Kesten element"""
    bound = upper_bound_schur(KESTEN)
    assert math.sqrt(3) / 2 <= float(bound) <= math.sqrt(3) / 2 + 1e-5


def test_schur_free_generators():
    """Test the weighted Schur test on sums of free generators"""
    assert upper_bound_schur(parse_element("a + b", F2)) == 2
    bound = upper_bound_schur(parse_element("(1/3)(a + b + c)", parse_group("F3")))
    assert 2 * math.sqrt(2) / 3 <= float(bound) <= 2 * math.sqrt(2) / 3 + 1e-5


def test_schur_budget():
    """Test large Schur tests are refused"""
    with pytest.raises(BudgetExceeded):
        upper_bound_schur(KESTEN, BoundConfig(schur_cap=10))


def test_l1_power_on_signed_elements():
    """Test l1 of powers beats l1 when coefficients cancel"""
    value = parse_element("(1/2)(a - A)", F2)
    bounds = list(l1_power_bounds(value, 2))
    assert [k for k, _ in bounds] == [0, 1, 2]
    assert all(bound <= 1 for _, bound in bounds)
    assert upper_bound_l1_power(value, 2) == bounds[-1][1]
    # ‖(a - A)/2‖ = 1 in F2, every bound stays above it
    assert all(bound >= 1 for _, bound in bounds)


def test_l1_power_budget():
    """Test powers outgrowing the work cap"""
    value = parse_element("a + A + b + B", F2)
    with pytest.raises(BudgetExceeded):
        list(l1_power_bounds(value, 3, work_cap=100))


@settings(max_examples=50, deadline=None)
@given(exact_elements(F2))
def test_l1_powers_are_nonincreasing(value):
    """Test l1(b^(2^k))^(1/2^(k+1)) never increases with k"""
    bounds = [bound for _, bound in l1_power_bounds(value, 2)]
    assert bounds == sorted(bounds, reverse=True)
