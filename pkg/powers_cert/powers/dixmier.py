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
"""Dixmier averaging with group unitaries"""

import dataclasses
import logging
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from ..algebra import AlgebraElement, Mode, add, conjugate_by, delta, element_to_dict
from ..algebra import format_fraction, scale, trace
from ..errors import ModeMismatch
from ..groups import Word, ball, generators, identity, power
from ..norms import certified_upper
from .config import SearchConfig
from .parallel import evaluate


@dataclasses.dataclass(frozen=True)
class DixmierReport:
    """Trace of a greedy averaging run

    `distances[i]` is the certified upper bound of ‖a_i − τ(a)·1‖, the
    sequence is strictly decreasing. `conjugators[i]` produced a_(i+1).
    """

    success: bool
    stalled: bool
    trace: Fraction
    distances: Tuple[Fraction, ...]
    methods: Tuple[str, ...]
    conjugators: Tuple[Word, ...]
    result: AlgebraElement
    epsilon: Fraction

    @property
    def steps(self) -> int:
        """Number of accepted averaging steps"""
        return len(self.conjugators)

    @property
    def distance(self) -> Fraction:
        """Last certified distance"""
        return self.distances[-1]

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        return {
            "success": self.success,
            "stalled": self.stalled,
            "trace": format_fraction(self.trace),
            "epsilon": format_fraction(self.epsilon),
            "steps": self.steps,
            "distances": [format_fraction(value) for value in self.distances],
            "distances_float": [float(value) for value in self.distances],
            "methods": list(self.methods),
            "conjugators": [str(word) for word in self.conjugators],
            "result": element_to_dict(self.result),
        }


def dixmier_pool(group, cfg: SearchConfig) -> List[Word]:
    """Unitaries tried by every greedy step

    Non identity words up to dixmier_length followed by the generator powers
    g^(2^p) for p < dixmier_powers, without duplicates.
    """
    words = [
        word
        for word in ball(group, cfg.dixmier_length, cfg.bound.ball_cap).words()
        if not word.is_identity
    ]
    for exponent in range(cfg.dixmier_powers):
        for generator in generators(group):
            words.append(power(generator, 2**exponent))
    return list(dict.fromkeys(words))


def dixmier_average(a: AlgebraElement, cfg: SearchConfig = SearchConfig()) -> DixmierReport:
    """Average a towards τ(a)·1 with group unitaries

    Every step replaces a_i by (a_i + δ_s a_i δ_s^-1)/2 for the pool element s
    whose average has the smallest certified distance to τ(a)·1. Steps are
    only accepted when they strictly improve the distance, otherwise the run
    stalls. τ is preserved exactly by every step.

    Args:
        a (AlgebraElement): Exact element
        cfg (SearchConfig, optional): epsilon, max_steps and the pool budgets

    Raises:
        ModeMismatch: a is not exact
        BudgetExceeded: The pool ball does not fit into ball_cap

    Returns:
        DixmierReport: Certified distances of the accepted steps
    """
    if a.mode != Mode.EXACT:
        raise ModeMismatch("Dixmier averaging requires an exact element")

    group = a.group
    tau = trace(a)
    scalar = delta(identity(group), tau)
    half = Fraction(1, 2)

    def distance(value: AlgebraElement) -> Tuple[Fraction, str]:
        return certified_upper(value - scalar, cfg.bound)

    current = a
    bound, method = distance(current)
    distances, methods, chosen = [bound], [method], []
    pool = dixmier_pool(group, cfg) if bound >= cfg.epsilon else []
    stalled = False

    while bound >= cfg.epsilon and len(chosen) < cfg.max_steps:
        candidates = [
            scale(half, add(current, conjugate_by(word, current))) for word in pool
        ]
        results = evaluate(distance, candidates, cfg.threads)
        best = min(range(len(results)), key=lambda i: (results[i][0], i))
        if results[best][0] >= bound:
            stalled = True
            break
        current = candidates[best]
        bound, method = results[best]
        distances.append(bound)
        methods.append(method)
        chosen.append(pool[best])
        logging.debug(
            "Dixmier step %s: conjugator=%s, distance=%s",
            len(chosen),
            pool[best],
            float(bound),
        )

    success = bound < cfg.epsilon
    logging.info(
        "Dixmier averaging: success=%s, stalled=%s, steps=%s, distance=%s",
        success,
        stalled,
        len(chosen),
        float(bound),
    )
    return DixmierReport(
        success=success,
        stalled=stalled,
        trace=tau,
        distances=tuple(distances),
        methods=tuple(methods),
        conjugators=tuple(chosen),
        result=current,
        epsilon=cfg.epsilon,
    )
