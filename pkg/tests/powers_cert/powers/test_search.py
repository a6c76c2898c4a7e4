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
"""Certificate search tests"""
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from powers_cert.errors import GroupMismatch, IdentityTarget
from powers_cert.groups import parse_group, parse_word, reduce
from powers_cert.powers import (
    AMENABLE_RADICAL,
    Certificate,
    NotFound,
    SearchConfig,
    Strategy,
    conjugator_pools,
    search_certificate,
    verify_certificate,
)

F2 = parse_group("F2")


def words(*texts):
    """Parse words of F2"""
    return [parse_word(text, F2) for text in texts]


def test_generator_below_095():
    """Test three geometric conjugators push a below 0.95"""
    result = search_certificate(words("a"), SearchConfig(epsilon=Fraction(19, 20)))
    assert isinstance(result, Certificate)
    assert [str(word) for word in result.conjugators] == ["b", "bb", "bbb"]
    assert result.weights == (Fraction(1, 3),) * 3
    assert abs(float(result.bound) - 2 * math.sqrt(2) / 3) < 1e-5
    assert verify_certificate(result)


def test_generator_below_06():
    """Test eleven conjugators are needed below 0.6"""
    cfg = SearchConfig(epsilon=Fraction(3, 5), fw_iterations=1)
    result = search_certificate(words("a"), cfg)
    assert isinstance(result, Certificate)
    assert len(result.conjugators) == 11
    assert abs(float(result.bound) - 2 * math.sqrt(10) / 11) < 1e-5


def test_multi_target():
    """Test one family averages a, b and ab"""
    result = search_certificate(
        words("a", "b", "ab"), SearchConfig(epsilon=Fraction(19, 20))
    )
    assert isinstance(result, Certificate)
    assert [str(word) for word in result.conjugators] == ["aB", "aBaB", "aBaBaB"]
    assert all(bound < Fraction(19, 20) for bound in result.upper_bounds)


def test_radical_target():
    """Test central targets of F2xZ are reported as an obstruction"""
    group = parse_group("F2xZ")
    result = search_certificate(
        [parse_word("e|(1)", group)], SearchConfig(epsilon=Fraction(99, 100))
    )
    assert isinstance(result, NotFound)
    assert result.best == 1
    assert result.obstruction == AMENABLE_RADICAL
    assert result.to_dict()["found"] is False


def test_not_found_within_budget():
    """Test the best family is reported when epsilon is out of reach"""
    cfg = SearchConfig(epsilon=Fraction(1, 10), max_n=2, max_length=1, fw_iterations=2)
    result = search_certificate(words("a"), cfg)
    assert isinstance(result, NotFound)
    assert result.obstruction is None
    assert result.best == 1
    assert result.attempts == 4


def test_invalid_targets():
    """Test identity targets and mixed groups"""
    with pytest.raises(IdentityTarget):
        search_certificate(words("e"))
    with pytest.raises(GroupMismatch):
        search_certificate(words("a") + [parse_word("a", parse_group("F3"))])


def test_pools():
    """Test the conjugator families of every strategy"""
    geometric = conjugator_pools(words("a"), SearchConfig(max_n=2))
    assert [[str(w) for w in family] for family in list(geometric)[:3]] == [
        ["b"],
        ["b", "bb"],
        ["B"],
    ]

    exhaustive = list(
        conjugator_pools(words("a"), SearchConfig(strategy=Strategy.EXHAUSTIVE, max_n=3))
    )
    assert [[str(w) for w in family] for family in exhaustive] == [
        ["a"],
        ["a", "b"],
        ["a", "b", "B"],
    ]

    cfg = SearchConfig(strategy=Strategy.RANDOM_WORDS, max_n=4, seed=7)
    first = [[str(w) for w in family] for family in conjugator_pools(words("a"), cfg)]
    second = [[str(w) for w in family] for family in conjugator_pools(words("a"), cfg)]
    assert first == second
    assert [len(family) for family in first] == [1, 2, 3, 4]


def test_exhaustive_strategy():
    """Test walking a ball keeps the conjugates of a free"""
    cfg = SearchConfig(
        epsilon=Fraction(3, 5), strategy=Strategy.EXHAUSTIVE, max_length=5
    )
    result = search_certificate(words("a"), cfg)
    assert isinstance(result, Certificate)
    assert [str(word) for word in result.conjugators] == [
        "a",
        "b",
        "B",
        "bb",
        "BB",
        "bbb",
        "BBB",
        "bbbb",
        "BBBB",
        "bbbbb",
        "BBBBB",
    ]
    assert result.bound < Fraction(3, 5)
    assert abs(float(result.bound) - 2 * math.sqrt(10) / 11) < 1e-4
    assert verify_certificate(result)


def test_exhaustive_strategy_short_ball():
    """Test the families found in ball(3) stop at seven conjugators"""
    cfg = SearchConfig(strategy=Strategy.EXHAUSTIVE, max_length=3)
    families = list(conjugator_pools(words("a"), cfg))
    assert [len(family) for family in families] == [1, 2, 3, 4, 5, 6, 7]


short_words = st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3).map(
    lambda letters: reduce(letters, F2)
)


@settings(max_examples=20, deadline=None)
@given(st.lists(short_words, min_size=1, max_size=2))
def test_found_certificates_verify(targets):
    """Test every certificate found is accepted by verification"""
    assume(not any(target.is_identity for target in targets))
    result = search_certificate(
        targets, SearchConfig(epsilon=Fraction(19, 20), max_n=4, max_length=2)
    )
    if isinstance(result, Certificate):
        assert verify_certificate(result)
        assert all(bound < result.epsilon for bound in result.upper_bounds)
    else:
        assert result.best >= result.epsilon
