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
"""Upper bounds for the reduced C*-norm (all exact, rounded up)"""

import logging
import math
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from ..algebra import AlgebraElement, Mode, convolve_terms, integer_scaled, l2_squared
from ..algebra import l1 as l1_norm
from ..algebra import restrict_length
from ..errors import BudgetExceeded, ModeMismatch, WrongBackend
from ..groups import ball
from .config import BoundConfig
from .roots import root_upper, sqrt_upper

# Weights of the Schur test are rationalized with this denominator cap
SCHUR_WEIGHT_DENOMINATOR = 4096

# log(theta) search interval of the Schur test
SCHUR_LOG_BOUNDS = (-12.0, 0.0)


def _require_exact(value: AlgebraElement) -> None:
    if value.mode != Mode.EXACT:
        raise ModeMismatch("Certified upper bounds need an exact element")


def upper_bound_l1(value: AlgebraElement) -> Fraction:
    """Triangle inequality bound ‖λ(a)‖ <= l1(a)"""
    _require_exact(value)
    return l1_norm(value)


def l1_power_bounds(
    value: AlgebraElement,
    depth: int,
    support_cap: int = BoundConfig.support_cap,
    work_cap: int = BoundConfig.work_cap,
) -> Iterator[Tuple[int, Fraction]]:
    """Yield (k, l1(b^(2^k))^(1/2^(k+1))) for k = 0..depth with b = a*a

    Raises:
        BudgetExceeded: A power outgrows the caps (after yielding what fits)
    """
    _require_exact(value)
    group = value.group
    terms, denominator = integer_scaled(value)
    inv_key = group.inv_key
    if len(terms) ** 2 > work_cap:
        raise BudgetExceeded(f"Convolution work exceeds cap: {len(terms)}^2 > {work_cap}")
    power = convolve_terms(
        group, {inv_key(key): c for key, c in terms.items()}, terms, support_cap
    )
    for k in range(depth + 1):
        if k:
            if len(power) ** 2 > work_cap:
                raise BudgetExceeded(
                    f"Convolution work exceeds cap: {len(power)}^2 > {work_cap}"
                )
            power = convolve_terms(group, power, power, support_cap)
        exponent = 2 ** (k + 1)
        total = sum(abs(c) for c in power.values())
        yield k, root_upper(Fraction(total, denominator**exponent), exponent)


def upper_bound_l1_power(
    value: AlgebraElement,
    depth: int,
    support_cap: int = BoundConfig.support_cap,
    work_cap: int = BoundConfig.work_cap,
) -> Fraction:
    """l1(b^(2^k))^(1/2^(k+1)) with b = a*a, rounded up

    Valid since ‖λ(b)‖ <= l1(b) and ‖λ(a)‖^2 = ‖λ(b)‖ = ‖λ(b^(2^k))‖^(1/2^k).
    No truncation is allowed, so a blowup raises BudgetExceeded.
    """
    if value.is_zero:
        return Fraction(0)
    bound = Fraction(0)
    for _, bound in l1_power_bounds(value, depth, support_cap, work_cap):
        pass
    return bound


def upper_bound_haagerup(value: AlgebraElement) -> Fraction:
    """Σ_d (d+1)·l2(a_d) over the length strata a_d of a free group element

    Raises:
        WrongBackend: Group is not a free group
    """
    if not value.group.is_free:
        raise WrongBackend(f"Haagerup bound needs a free group: {value.group}")
    _require_exact(value)
    lengths = sorted({len(key) for key in value.terms})
    return sum(
        (
            (length + 1) * sqrt_upper(l2_squared(restrict_length(value, length)))
            for length in lengths
        ),
        Fraction(0),
    )


class _SchurProfiles:
    """Row sums of the Schur test as polynomials in theta.

    For h(x) = theta^|x| the row sum at x is Σ_g |a(g)| theta^(|g^-1 x| - |x|).
    The exponent only depends on the first deg(a) letters of x, so the
    maximum over the whole group is attained on ball(deg a).
    """

    def __init__(self, value: AlgebraElement, cfg: BoundConfig) -> None:
        group = value.group
        degree = value.degree
        words = ball(group, degree, cfg.ball_cap)
        if len(words) * len(value) > cfg.schur_cap:
            raise BudgetExceeded(
                f"Schur test is too large: ball={len(words)}, support={len(value)}"
            )
        inv_key = group.inv_key
        mul_keys = group.mul_keys
        weights = [(key, abs(c)) for key, c in value.terms.items()]
        self.rows = self._profiles(
            [(inv_key(key), c) for key, c in weights], words.keys, mul_keys
        )
        self.columns = self._profiles(weights, words.keys, mul_keys)

    @staticmethod
    def _profiles(weights, keys, mul_keys) -> List[Dict[int, Fraction]]:
        profiles = set()
        for x in keys:
            profile: Dict[int, Fraction] = {}
            for key, weight in weights:
                exponent = len(mul_keys(key, x)) - len(x)
                profile[exponent] = profile.get(exponent, 0) + weight
            profiles.add(tuple(sorted(profile.items())))
        return [dict(profile) for profile in sorted(profiles)]

    @staticmethod
    def _float_max(profiles: List[Dict[int, Fraction]], theta: float) -> float:
        return max(
            sum(float(weight) * theta**exponent for exponent, weight in profile.items())
            for profile in profiles
        )

    @staticmethod
    def _exact_max(profiles: List[Dict[int, Fraction]], theta: Fraction) -> Fraction:
        return max(
            sum(
                (weight * theta**exponent for exponent, weight in profile.items()),
                Fraction(0),
            )
            for profile in profiles
        )

    def objective(self, log_theta: float) -> float:
        """Float value of sqrt(alpha·beta) at theta = exp(log_theta)"""
        theta = math.exp(log_theta)
        return math.sqrt(
            self._float_max(self.rows, theta) * self._float_max(self.columns, theta)
        )

    def bound(self, theta: Fraction) -> Fraction:
        """Certified bound at a rational theta"""
        alpha = self._exact_max(self.rows, theta)
        beta = self._exact_max(self.columns, theta)
        if alpha == beta:
            return alpha
        return sqrt_upper(alpha * beta)


def upper_bound_schur(value: AlgebraElement, cfg: BoundConfig = BoundConfig()) -> Fraction:
    """Weighted Schur test with the weight h(x) = theta^|x| on a free group

    theta is chosen by a bounded scalar minimization in floating point and
    then rationalized, the bound itself is evaluated exactly.

    Raises:
        WrongBackend: Group is not a free group
        BudgetExceeded: ball(deg a) x support exceeds cfg.schur_cap
    """
    if not value.group.is_free:
        raise WrongBackend(f"Schur bound needs a free group: {value.group}")
    _require_exact(value)
    if value.is_zero:
        return Fraction(0)

    profiles = _SchurProfiles(value, cfg)
    best = profiles.bound(Fraction(1))

    result = minimize_scalar(
        profiles.objective, bounds=SCHUR_LOG_BOUNDS, method="bounded"
    )
    theta = Fraction(float(np.exp(result.x))).limit_denominator(SCHUR_WEIGHT_DENOMINATOR)
    if 0 < theta < 1:
        best = min(best, profiles.bound(theta))

    logging.debug("Schur bound: theta=%s, value=%s", theta, float(best))
    return best
