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
"""Word tests"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powers_cert.errors import GroupMismatch, InvalidGenerator
from powers_cert.groups import (
    commutes,
    conjugate,
    format_word,
    generators,
    identity,
    in_amenable_radical,
    inv,
    is_central,
    mul,
    parse_group,
    parse_word,
    power,
    reduce,
)

F2 = parse_group("F2")
Z2 = parse_group("Z2")
F2XZ = parse_group("F2xZ")


def letters(group, max_size=12):
    """Raw letter sequences of a group"""
    return st.lists(
        st.integers(min_value=0, max_value=len(group.generator_keys()) - 1),
        max_size=max_size,
    )


def words(group):
    """Reduced words of a group"""
    return letters(group).map(lambda value: reduce(value, group))


@pytest.mark.parametrize("group", [F2, Z2, F2XZ], ids=str)
def test_group_laws(group):
    """Test associativity, identity and inverses"""

    @settings(max_examples=10_000, deadline=None)
    @given(words(group), words(group), words(group))
    def check(x, y, z):
        e = identity(group)
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, e) == x == mul(e, x)
        assert mul(x, inv(x)) == e
        assert inv(inv(x)) == x
        assert inv(mul(x, y)) == mul(inv(y), inv(x))

    check()


@pytest.mark.parametrize("group", [F2, Z2, F2XZ], ids=str)
def test_conjugate_composition(group):
    """Test conjugating by a product conjugates twice"""

    @settings(max_examples=10_000, deadline=None)
    @given(words(group), words(group), words(group))
    def check(s1, s2, t):
        assert conjugate(mul(s1, s2), t) == conjugate(s1, conjugate(s2, t))
        assert conjugate(identity(group), t) == t

    check()


@given(letters(F2))
def test_reduce_is_free_reduction(value):
    """Test reduced words never contain a letter next to its inverse"""
    key = reduce(value, F2).key
    assert all(left != right ^ 1 for left, right in zip(key, key[1:]))


@given(words(F2))
def test_text_form(word):
    """Test words are parsed back from their text"""
    assert parse_word(format_word(word), F2) == word


def test_reduce():
    """Test reducing letter sequences"""
    assert reduce([0, 1, 2], F2) == parse_word("b", F2)
    assert reduce([0, 2, 3, 1], F2).is_identity
    assert reduce([0, 0, 2], Z2).key == (2, 1)
    with pytest.raises(InvalidGenerator):
        reduce([4], F2)


def test_length():
    """Test word lengths"""
    assert parse_word("aBBa", F2).length == 4
    assert parse_word("(2,-3)", Z2).length == 5
    assert parse_word("aB|(-2)", F2XZ).length == 4
    assert identity(F2).length == 0


def test_generators():
    """Test signed generators"""
    assert [str(word) for word in generators(F2)] == ["a", "A", "b", "B"]
    assert [str(word) for word in generators(Z2)] == ["(1,0)", "(-1,0)", "(0,1)", "(0,-1)"]


def test_conjugate_and_power():
    """Test conjugation and powers"""
    a, b = parse_word("a", F2), parse_word("b", F2)
    assert str(conjugate(b, a)) == "baB"
    assert str(power(b, 3)) == "bbb"
    assert str(power(b, -2)) == "BB"
    assert power(a, 0).is_identity
    assert str(a * b) == "ab"


def test_commutes():
    """Test commuting words"""
    a, b = parse_word("a", F2), parse_word("b", F2)
    assert commutes(a, power(a, 3))
    assert not commutes(a, b)
    assert commutes(parse_word("(1,0)", Z2), parse_word("(0,1)", Z2))


def test_center_and_radical():
    """Test central words of the backends"""
    assert not is_central(parse_word("a", F2))
    assert is_central(identity(F2))
    assert is_central(parse_word("a", parse_group("F1")))
    assert is_central(parse_word("(1,0)", Z2))
    assert in_amenable_radical(parse_word("e|(1)", F2XZ))
    assert not in_amenable_radical(parse_word("a|(1)", F2XZ))


def test_group_mismatch():
    """Test words of different groups do not multiply"""
    with pytest.raises(GroupMismatch):
        mul(parse_word("a", F2), parse_word("a", parse_group("F3")))
