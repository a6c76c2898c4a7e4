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
"""Group ring element tests"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powers_cert.algebra import (
    Mode,
    adjoint,
    conjugate_by,
    convolve,
    delta,
    element,
    integer_scaled,
    is_nonnegative,
    l1,
    l2_squared,
    parse_element,
    restrict_length,
    scale,
    to_exact,
    to_float,
    trace,
    zero,
)
from powers_cert.errors import BudgetExceeded, GroupMismatch, ModeMismatch
from powers_cert.groups import ball, parse_group, parse_word

F2 = parse_group("F2")
WORDS = ball(F2, 2).words()

elements = st.lists(
    st.tuples(
        st.sampled_from(WORDS),
        st.fractions(min_value=-3, max_value=3, max_denominator=6),
    ),
    max_size=5,
).map(lambda terms: element(F2, terms))


@given(elements, elements)
def test_trace_is_tracial(x, y):
    """Test τ(xy) = τ(yx)"""
    assert trace(x * y) == trace(y * x)


@given(elements)
def test_parseval(x):
    """Test τ(x*x) is the squared l2 norm"""
    assert trace(adjoint(x) * x) == l2_squared(x)


@given(elements, elements)
def test_involution(x, y):
    """Test (xy)* = y*x* and x** = x"""
    assert adjoint(x * y) == adjoint(y) * adjoint(x)
    assert adjoint(adjoint(x)) == x


@given(elements, elements, elements)
def test_ring_laws(x, y, z):
    """Test associativity and distributivity"""
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == zero(F2)


def test_zero_coefficients_are_dropped():
    """Test terms cancelling to zero"""
    a = parse_word("a", F2)
    value = element(F2, [(a, 1), (a, -1)])
    assert value.is_zero
    assert len(value) == 0
    assert value.degree == 0


def test_norms_and_trace():
    """Test l1, l2 and τ"""
    value = parse_element("2 - 3a + (1/2)aB", F2)
    assert trace(value) == 2
    assert l1(value) == Fraction(11, 2)
    assert l2_squared(value) == Fraction(53, 4)
    assert value.degree == 2
    assert restrict_length(value, 1) == parse_element("-3a", F2)


def test_conjugate_by():
    """Test δ_s a δ_s^-1"""
    b = parse_word("b", F2)
    assert conjugate_by(b, parse_element("a + 2A", F2)) == parse_element("baB + 2bAB", F2)


def test_support_order():
    """Test support is listed in ball order"""
    value = parse_element("B + aa + e + a", F2)
    assert [str(word) for word in value.support()] == ["e", "a", "B", "aa"]


def test_is_nonnegative():
    """Test nonnegative coefficients"""
    assert is_nonnegative(parse_element("a + (1/2)b", F2))
    assert not is_nonnegative(parse_element("a - b", F2))


def test_modes():
    """Test conversion between exact and float mode"""
    value = parse_element("(1/4)(a + A)", F2)
    as_float = to_float(value)
    assert as_float.mode == Mode.FLOAT
    assert to_exact(as_float) == value
    with pytest.raises(ModeMismatch):
        value + as_float
    with pytest.raises(ModeMismatch):
        delta(parse_word("a", F2), 0.5)
    with pytest.raises(ModeMismatch):
        to_exact(scale(1j, as_float))


def test_group_mismatch():
    """Test elements of different groups"""
    other = parse_element("a", parse_group("F3"))
    with pytest.raises(GroupMismatch):
        parse_element("a", F2) + other


def test_support_cap():
    """Test the support cap of exact products"""
    value = parse_element("a + A + b + B", F2)
    with pytest.raises(BudgetExceeded):
        convolve(value, value, support_cap=3)


def test_integer_scaled():
    """Test writing an element over a common denominator"""
    terms, denominator = integer_scaled(parse_element("(1/4)a + (1/6)b", F2))
    assert denominator == 12
    assert terms == {(0,): 3, (2,): 2}


def test_abelian_convolution():
    """Test products in Z"""
    group = parse_group("Z")
    value = parse_element("(1/2)((1) + (-1))", group)
    square = value * value
    assert square == parse_element("(1/4)(2) + (1/2) + (1/4)(-2)", group)


def test_elements_are_hashable():
    """Test equal elements hash alike whatever the term order"""
    left = parse_element("a + 2b", F2)
    right = parse_element("2b + a", F2)
    assert left == right
    assert hash(left) == hash(right)
    assert len({left, right, parse_element("a", F2)}) == 2
    assert hash(zero(F2)) == hash(scale(0, left))


@given(elements, elements)
def test_hash_agrees_with_equality(x, y):
    """Test equal elements always share a hash"""
    if x == y:
        assert hash(x) == hash(y)
    assert hash(x + y) == hash(y + x)
