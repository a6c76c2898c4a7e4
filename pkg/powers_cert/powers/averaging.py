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
"""Averages of conjugates"""

import dataclasses
from fractions import Fraction
from typing import List, Sequence

from ..algebra import AlgebraElement, Mode, add, zero
from ..errors import GroupMismatch, IdentityGenerator, WeightError
from ..groups import Word, conjugate, power


@dataclasses.dataclass(frozen=True)
class ConjugateAverage:
    """A_j = Σ_k c_k δ(s_k t_j s_k^-1) per target and their sum"""

    per_target: List[AlgebraElement]
    combined: AlgebraElement


def check_weights(weights: Sequence, count: int) -> List[Fraction]:
    """Check that weights form an exact convex combination

    Raises:
        WeightError: Wrong count, negative weights or sum != 1
    """
    if len(weights) != count:
        raise WeightError(f"Expected {count} weights, got {len(weights)}")
    values = []
    for weight in weights:
        if isinstance(weight, (bool, float)):
            raise WeightError(f"Weights must be exact rationals: {weight!r}")
        values.append(Fraction(weight))
    if any(weight < 0 for weight in values):
        raise WeightError(f"Weights must not be negative: {values}")
    if sum(values) != 1:
        raise WeightError(f"Weights must sum to 1: sum={sum(values)}")
    return values


def conjugate_average(
    targets: Sequence[Word], conjugators: Sequence[Word], weights: Sequence
) -> ConjugateAverage:
    """Weighted averages of the conjugates of every target

    Args:
        targets (Sequence[Word]): Targets t_j
        conjugators (Sequence[Word]): Conjugators s_k
        weights (Sequence): Exact convex weights c_k

    Raises:
        WeightError: weights are not a convex combination
        GroupMismatch: words from different groups

    Returns:
        ConjugateAverage: Per target elements and the combined element
    """
    values = check_weights(weights, len(conjugators))
    if not targets:
        raise ValueError("At least one target is required")
    group = targets[0].group
    for word in list(targets) + list(conjugators):
        if word.group != group:
            raise GroupMismatch(group, word.group)

    per_target = []
    for target in targets:
        terms = {}
        for conjugator, weight in zip(conjugators, values):
            key = conjugate(conjugator, target).key
            terms[key] = terms.get(key, 0) + weight
        per_target.append(AlgebraElement(group, terms, Mode.EXACT))

    combined = zero(group)
    for value in per_target:
        combined = add(combined, value)
    return ConjugateAverage(per_target=per_target, combined=combined)


def geometric_conjugators(generator: Word, count: int) -> List[Word]:
    """Geometric schedule (g, g^2, ..., g^n)

    Raises:
        IdentityGenerator: g is the identity
    """
    if generator.is_identity:
        raise IdentityGenerator("The identity does not generate a conjugator schedule")
    if count < 1:
        raise ValueError(f"Count must be positive: {count}")
    return [power(generator, exponent) for exponent in range(1, count + 1)]
