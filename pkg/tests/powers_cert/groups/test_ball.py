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
"""Cayley ball tests"""
import pytest

from powers_cert.errors import BudgetExceeded
from powers_cert.groups import ball, largest_radius, parse_group


def test_ball_order(f2):
    """Test words are ordered by length and then a < A < b < B"""
    words = [str(word) for word in ball(f2, 2).words()]
    assert words[:5] == ["e", "a", "A", "b", "B"]
    assert words[5:9] == ["aa", "ab", "aB", "AA"]
    assert len(words) == 17


def test_ball_index(f2):
    """Test indexes are stable"""
    value = ball(f2, 3)
    assert all(value.index[key] == i for i, key in enumerate(value.keys))
    assert value.keys[0] == ()


def test_abelian_ball_order():
    """Test abelian balls use the same letter order"""
    words = [str(word) for word in ball(parse_group("Z2"), 1).words()]
    assert words == ["(0,0)", "(1,0)", "(-1,0)", "(0,1)", "(0,-1)"]


def test_ball_budget(f2):
    """Test balls larger than the cap are refused"""
    with pytest.raises(BudgetExceeded):
        ball(f2, 8, max_size=1000)
    assert largest_radius(f2, 8, 1000) == 5
    with pytest.raises(ValueError):
        ball(f2, -1)
