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
"""Two-sided estimate tests"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powers_cert.algebra import (
    conjugate_by,
    l1,
    l2_squared,
    parse_element,
    scale,
    to_float,
    zero,
)
from powers_cert.errors import BudgetExceeded
from powers_cert.groups import ball, parse_group
from powers_cert.norms import (
    FREE_BASIS,
    BoundConfig,
    NormEstimate,
    certified_upper,
    estimate,
)
from tests.fixtures import exact_elements

F2 = parse_group("F2")


def test_kesten():
    """Test the Kesten element is bracketed tightly around √3/2"""
    result = estimate(parse_element("(1/4)(a+A+b+B)", F2))
    assert result.lower >= 0.86
    assert result.upper <= 0.92
    assert result.contains(math.sqrt(3) / 2)
    assert result.lower_method == "radial"
    assert result.upper_method == "schur"
    assert not result.shortfalls


def test_two_generators():
    """Test δa + δb is bracketed around 2"""
    result = estimate(parse_element("a + b", F2))
    assert result.contains(2.0)
    assert result.width <= 0.1
    assert result.upper_exact == 2


def test_symmetric_walk_on_z():
    """Test the symmetric random walk on Z has norm 1"""
    result = estimate(parse_element("(1/2)((1)+(-1))", parse_group("Z")))
    assert result.upper == 1
    assert result.lower >= 0.95


def test_free_basis_transfer_is_used():
    """Test averaged conjugates are bounded on their free basis"""
    value = parse_element("(1/3)(a + baB + bbaBB)", F2)
    # the Schur test on the original words does not fit the cap
    bound, method = certified_upper(value, BoundConfig(schur_cap=100))
    assert method == "schur" + FREE_BASIS
    assert abs(float(bound) - 2 * math.sqrt(2) / 3) < 1e-5


def test_zero_element():
    """Test the zero element"""
    result = estimate(zero(F2))
    assert result.lower == result.upper == 0
    assert certified_upper(zero(F2), BoundConfig()) == (Fraction(0), "zero")


def test_float_and_complex_elements():
    """Test float mode elements"""
    real = estimate(to_float(parse_element("(1/4)(a+A+b+B)", F2)))
    assert real.contains(math.sqrt(3) / 2)
    rotated = estimate(scale(1j, to_float(parse_element("a", F2))))
    assert rotated.contains(1.0)
    assert rotated.upper_method == "l1"


def test_budgets_are_shrunk():
    """Test budgets that do not fit are shrunk and reported"""
    value = parse_element("(1/4)(a+A+b+B)", F2)
    result = estimate(value, BoundConfig(ball_cap=100))
    assert result.radius == 3
    assert result.shortfalls == ("radius 8->3",)
    assert result.contains(math.sqrt(3) / 2)


def test_strict_budgets():
    """Test strict mode raises with the partial estimate"""
    value = parse_element("(1/4)(a+A+b+B)", F2)
    with pytest.raises(BudgetExceeded) as ex:
        estimate(value, BoundConfig(ball_cap=100, strict=True))
    assert isinstance(ex.value.partial, NormEstimate)
    assert ex.value.partial.radius == 3


def test_estimate_json():
    """Test the JSON form of an estimate"""
    result = estimate(parse_element("a + b", F2), BoundConfig(radius=4))
    assert NormEstimate.from_dict(result.to_dict()) == result


SMALL = BoundConfig(radius=4, max_iterations=50, moment_depth=4, radial_radius=16)


@settings(max_examples=25, deadline=None)
@given(exact_elements(F2), st.sampled_from(ball(F2, 2).words()))
def test_unitary_invariance(value, conjugator):
    """Test brackets of a and of a conjugate of a overlap"""
    result = estimate(value, SMALL)
    conjugated = estimate(conjugate_by(conjugator, value), SMALL)
    assert result.lower <= conjugated.upper
    assert conjugated.lower <= result.upper


@settings(max_examples=25, deadline=None)
@given(exact_elements(F2))
def test_elementary_bounds(value):
    """Test l2(a) <= ‖λ(a)‖ <= l1(a) against the bracket"""
    result = estimate(value, SMALL)
    assert result.lower <= result.upper
    assert math.sqrt(float(l2_squared(value))) <= result.upper + 1e-9
    assert result.lower <= float(l1(value)) + 1e-9
