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
"""Frank-Wolfe minimization of averaged conjugates over the simplex"""

import dataclasses
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import IdentityTarget
from ..groups import Word, conjugate, largest_radius
from ..norms import NormEstimate, TranslationOperator, certified_upper, power_iteration
from ..norms import quick_estimate
from .averaging import conjugate_average
from .config import Objective, SearchConfig
from .parallel import evaluate


@dataclasses.dataclass(frozen=True)
class SimplexResult:
    """Best certified weights found by minimize_simplex.

    `objective` is the largest per-target upper bound (or the bound of the
    combined element for the summed objective). It is the value at the
    weights found, never a claim about the infimum over the whole group.
    """

    weights: Tuple[Fraction, ...]
    upper_bounds: Tuple[Fraction, ...]
    objective: Fraction
    estimate: NormEstimate
    iterations: int


def snap_weights(weights: Sequence[float], denominator: int) -> Tuple[Fraction, ...]:
    """Snap float weights to rationals with bounded denominators summing to 1"""
    values = [
        max(Fraction(float(weight)).limit_denominator(denominator), Fraction(0))
        for weight in weights
    ]
    total = sum(values)
    if total == 0:
        return tuple(Fraction(1, len(values)) for _ in values)
    return tuple(value / total for value in values)


def _as_targets(targets: Union[Word, Sequence[Word]]) -> List[Word]:
    targets = [targets] if isinstance(targets, Word) else list(targets)
    if not targets:
        raise ValueError("At least one target is required")
    if any(target.is_identity for target in targets):
        raise IdentityTarget("Targets must not be the identity")
    return targets


class _Minimizer:
    """State of one Frank-Wolfe run"""

    def __init__(
        self, targets: List[Word], conjugators: List[Word], cfg: SearchConfig
    ) -> None:
        self.targets = targets
        self.conjugators = conjugators
        self.cfg = cfg
        self.group = targets[0].group
        self.radius = largest_radius(
            self.group, cfg.gradient_radius, cfg.bound.ball_cap
        )
        self._operators = {}

    def certify(self, weights: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        """Certified upper bounds per target (or of the combined element)"""
        average = conjugate_average(self.targets, self.conjugators, weights)
        elements = (
            [average.combined]
            if self.cfg.objective == Objective.SUMMED
            else average.per_target
        )
        results = evaluate(
            lambda value: certified_upper(value, self.cfg.bound)[0],
            elements,
            self.cfg.threads,
        )
        if self.cfg.objective == Objective.SUMMED:
            return tuple(results * len(self.targets))
        return tuple(results)

    def _operator(self, index: int) -> TranslationOperator:
        if index not in self._operators:
            if index < 0:
                keys = [
                    conjugate(s, t).key for t in self.targets for s in self.conjugators
                ]
            else:
                keys = [conjugate(s, self.targets[index]).key for s in self.conjugators]
            self._operators[index] = TranslationOperator(
                self.group, keys, self.radius, self.cfg.bound.ball_cap
            )
        return self._operators[index]

    def gradient(self, weights: np.ndarray, worst: int) -> np.ndarray:
        """Linearized gradient Re⟨λ(s_k t s_k^-1)ξ, η⟩ at the top singular pair"""
        if self.cfg.objective == Objective.SUMMED:
            operator = self._operator(-1)
            coefficients = np.tile(weights, len(self.targets))
        else:
            operator = self._operator(worst)
            coefficients = weights
        iteration = power_iteration(
            operator.matrix(coefficients),
            seed=self.cfg.seed,
            max_iterations=self.cfg.gradient_iterations,
            tolerance=self.cfg.bound.tolerance,
            noise_size=self.group.ball_size(2),
        )
        grads = operator.gradients(iteration.xi, iteration.eta)
        if self.cfg.objective == Objective.SUMMED:
            grads = grads.reshape(len(self.targets), len(self.conjugators)).sum(axis=0)
        return grads


def minimize_simplex(
    targets: Union[Word, Sequence[Word]],
    conjugators: Sequence[Word],
    cfg: SearchConfig,
    stop_below: Optional[Fraction] = None,
) -> SimplexResult:
    """Minimize ‖Σ c_k λ(s_k t s_k^-1)‖ over the simplex of weights c

    Frank-Wolfe with step 2/(t+2) starting at uniform weights. Every iterate
    is snapped to exact rationals and certified; the best certified iterate
    wins (the first one on ties). Several targets share one set of weights
    and the objective is the largest of their bounds.

    Args:
        targets (Word | Sequence[Word]): Target t (or targets t_j)
        conjugators (Sequence[Word]): Conjugators s_k
        cfg (SearchConfig): Search budgets
        stop_below (Fraction, optional): Stop as soon as the objective is below

    Raises:
        IdentityTarget: A target is the identity

    Returns:
        SimplexResult: Best weights and their certified bounds
    """
    targets = _as_targets(targets)
    conjugators = list(conjugators)
    if not conjugators:
        raise ValueError("At least one conjugator is required")

    minimizer = _Minimizer(targets, conjugators, cfg)
    count = len(conjugators)
    weights = np.full(count, 1.0 / count)

    best_weights = snap_weights(weights, cfg.snap_denominator)
    best_bounds = current_bounds = minimizer.certify(best_weights)
    iterations = 0

    while count > 1 and iterations < cfg.fw_iterations:
        if stop_below is not None and max(best_bounds) < stop_below:
            break
        iterations += 1
        worst = int(np.argmax([float(bound) for bound in current_bounds]))
        grads = minimizer.gradient(weights, worst)
        vertex = int(np.argmin(grads))
        step = 2.0 / (iterations + 2.0)
        weights = (1.0 - step) * weights
        weights[vertex] += step

        snapped = snap_weights(weights, cfg.snap_denominator)
        current_bounds = minimizer.certify(snapped)
        if max(current_bounds) < max(best_bounds):
            best_weights, best_bounds = snapped, current_bounds

    objective = max(best_bounds)
    average = conjugate_average(targets, conjugators, best_weights)
    if cfg.objective == Objective.SUMMED:
        worst_element = average.combined
    else:
        worst_element = average.per_target[
            max(range(len(targets)), key=lambda j: best_bounds[j])
        ]
    logging.info(
        "Simplex minimization: conjugators=%s, objective=%s, iterations=%s",
        count,
        float(objective),
        iterations,
    )
    return SimplexResult(
        weights=best_weights,
        upper_bounds=best_bounds,
        objective=objective,
        estimate=quick_estimate(worst_element, cfg.bound, minimizer.radius),
        iterations=iterations,
    )
