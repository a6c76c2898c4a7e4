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
"""Frank-Wolfe tests"""
import math
from fractions import Fraction

import pytest

from powers_cert.errors import IdentityTarget
from powers_cert.groups import parse_group, parse_word
from powers_cert.powers import Objective, SearchConfig, minimize_simplex, snap_weights

F2 = parse_group("F2")
THIRD = Fraction(1, 3)


def words(*texts):
    """Parse words of F2"""
    return [parse_word(text, F2) for text in texts]


def test_free_family_stays_uniform():
    """Test uniform weights are optimal for conjugates forming a free basis"""
    result = minimize_simplex(words("a")[0], words("e", "b", "bb"), SearchConfig())
    assert result.weights == (THIRD, THIRD, THIRD)
    assert abs(float(result.objective) - 2 * math.sqrt(2) / 3) < 1e-5
    assert result.iterations == SearchConfig().fw_iterations
    assert result.estimate.contains(2 * math.sqrt(2) / 3, slack=1e-9)


def test_stop_below():
    """Test the minimization stops once the objective is low enough"""
    result = minimize_simplex(
        words("a"), words("e", "b", "bb"), SearchConfig(), stop_below=Fraction(1)
    )
    assert result.iterations == 0
    assert result.objective < 1


def test_single_conjugator():
    """Test one conjugator has nothing to optimize"""
    result = minimize_simplex(words("a"), words("b"), SearchConfig())
    assert result.weights == (Fraction(1),)
    assert result.objective == 1
    assert result.iterations == 0


def test_summed_objective():
    """Test the summed objective bounds every target by the combined element"""
    cfg = SearchConfig(objective=Objective.SUMMED, fw_iterations=2)
    result = minimize_simplex(words("a", "b"), words("e", "ab"), cfg)
    assert len(result.upper_bounds) == 2
    assert result.upper_bounds[0] == result.upper_bounds[1] == result.objective


def test_identity_target():
    """Test the identity is refused"""
    with pytest.raises(IdentityTarget):
        minimize_simplex(words("e"), words("a"), SearchConfig())
    with pytest.raises(ValueError):
        minimize_simplex(words("a"), [], SearchConfig())


def test_snap_weights():
    """Test snapped weights are exact and sum to 1"""
    weights = snap_weights([0.2, 0.30000001, 0.5], 1000)
    assert sum(weights) == 1
    assert weights == (Fraction(1, 5), Fraction(3, 10), Fraction(1, 2))
    assert snap_weights([0.0, 0.0], 10) == (Fraction(1, 2), Fraction(1, 2))
    assert min(snap_weights([-1e-12, 1.0], 100)) == 0
