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
"""Two-sided certified estimates of ‖λ(a)‖"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..algebra import AlgebraElement, Mode, is_nonnegative, l1, l2_squared, to_exact
from ..algebra.codec import format_fraction, parse_fraction
from ..errors import BudgetExceeded, ModeMismatch
from ..groups import largest_radius
from .config import BoundConfig
from .lower import (
    lower_bound_radial,
    moment_traces,
    power_lower,
    radial_profile,
)
from .roots import float_down, float_up, root_lower, sqrt_lower
from .transfer import free_basis_transfer
from .upper import l1_power_bounds, upper_bound_haagerup, upper_bound_schur

# Suffix of method tags computed on the free basis rewrite
FREE_BASIS = "@free-basis"


@dataclasses.dataclass(frozen=True)
class NormEstimate:
    """Certified bracket lower <= ‖λ(a)‖ <= upper and the budgets used"""

    # pylint: disable=too-many-instance-attributes

    lower: float
    upper: float
    lower_method: str
    upper_method: str
    radius: int
    iterations: int
    moment_depth: int
    power_depth: int
    upper_exact: Fraction = Fraction(0)
    shortfalls: Tuple[str, ...] = ()

    @property
    def width(self) -> float:
        """Width of the bracket"""
        return self.upper - self.lower

    def contains(self, value: float, slack: float = 0.0) -> bool:
        """Bracket contains a value"""
        return self.lower - slack <= value <= self.upper + slack

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        data = dataclasses.asdict(self)
        data["upper_exact"] = format_fraction(self.upper_exact)
        data["shortfalls"] = list(self.shortfalls)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NormEstimate":
        """Build from the JSON form"""
        values = dict(data)
        values["upper_exact"] = parse_fraction(values.get("upper_exact", "0"))
        values["shortfalls"] = tuple(values.get("shortfalls", ()))
        return cls(**values)


def zero_estimate() -> NormEstimate:
    """Exact bracket of the zero element"""
    return NormEstimate(0.0, 0.0, "zero", "zero", 0, 0, 0, 0, Fraction(0))


def _exact_or_none(value: AlgebraElement) -> Optional[AlgebraElement]:
    if value.mode == Mode.EXACT:
        return value
    try:
        return to_exact(value)
    except ModeMismatch:
        return None


def _best(candidates: List[Tuple[Any, str]], pick: Callable) -> Tuple[Any, str]:
    # first candidate wins ties
    best = candidates[0]
    for candidate in candidates[1:]:
        if pick(candidate[0], best[0]):
            best = candidate
    return best


def _upper_candidates(
    value: AlgebraElement, cfg: BoundConfig, shortfalls: List[str], suffix: str = ""
) -> Tuple[List[Tuple[Fraction, str]], int]:
    """Certified upper bounds of an exact element"""
    candidates: List[Tuple[Fraction, str]] = [(l1(value), "l1" + suffix)]
    power_depth = cfg.power_depth

    # l1 is multiplicative on nonnegative elements: every l1-power bound equals l1
    if not is_nonnegative(value):
        power_depth = -1
        try:
            for k, bound in l1_power_bounds(
                value, cfg.power_depth, cfg.support_cap, cfg.work_cap
            ):
                candidates.append((bound, f"l1-power:k={k}" + suffix))
                power_depth = k
        except BudgetExceeded as ex:
            shortfalls.append(f"power depth {cfg.power_depth}->{power_depth}: {ex}")

    if value.group.is_free:
        candidates.append((upper_bound_haagerup(value), "haagerup" + suffix))
        try:
            candidates.append((upper_bound_schur(value, cfg), "schur" + suffix))
        except BudgetExceeded as ex:
            logging.debug("Skipping Schur bound: %s", ex)

    return candidates, max(power_depth, 0)


def _all_upper_candidates(
    value: AlgebraElement, cfg: BoundConfig, shortfalls: List[str]
) -> Tuple[List[Tuple[Fraction, str]], int]:
    candidates, power_depth = _upper_candidates(value, cfg, shortfalls)
    transferred = free_basis_transfer(value)
    if transferred is not None:
        extra, _ = _upper_candidates(transferred, cfg, [], FREE_BASIS)
        candidates.extend(extra)
    return candidates, power_depth


def certified_upper(value: AlgebraElement, cfg: BoundConfig) -> Tuple[Fraction, str]:
    """Best exact upper bound of ‖λ(a)‖ and its method tag"""
    if value.is_zero:
        return Fraction(0), "zero"
    exact = _exact_or_none(value)
    if exact is None:
        return _complex_l1(value), "l1"
    candidates, _ = _all_upper_candidates(exact, cfg, [])
    return _best(candidates, lambda new, old: new < old)


def _complex_l1(value: AlgebraElement) -> Fraction:
    # abs() of a complex float is correctly rounded, leave room for the sum
    total = Fraction(float_up(Fraction(l1(value))))
    return total * (1 + Fraction(len(value), 2**50))


def quick_estimate(value: AlgebraElement, cfg: BoundConfig, radius: int) -> NormEstimate:
    """Cheap bracket: l2 and a power iteration at `radius` below, certified_upper above"""
    if value.is_zero:
        return zero_estimate()
    upper, upper_method = certified_upper(value, cfg)
    radius = largest_radius(value.group, radius, cfg.ball_cap)
    iteration = power_lower(value, radius, cfg)
    lower, lower_method = iteration.value, "power-iteration"
    l2_lower = math.sqrt(l2_squared(value)) * (1 - 1e-12)
    if value.mode == Mode.EXACT:
        l2_lower = float_down(sqrt_lower(l2_squared(value)))
    if l2_lower > lower:
        lower, lower_method = l2_lower, "moments:m=1"
    return NormEstimate(
        lower=lower,
        upper=float_up(upper),
        lower_method=lower_method,
        upper_method=upper_method,
        radius=radius,
        iterations=iteration.iterations,
        moment_depth=1,
        power_depth=0,
        upper_exact=upper,
    )


def _power_radius(value: AlgebraElement, cfg: BoundConfig) -> int:
    radius = largest_radius(value.group, cfg.radius, cfg.ball_cap)
    while radius > 0 and value.group.ball_size(radius) * len(value) > cfg.work_cap:
        radius -= 1
    return radius


def estimate(value: AlgebraElement, cfg: BoundConfig = BoundConfig()) -> NormEstimate:
    """Certified bracket [lower, upper] of ‖λ(a)‖

    Lower bounds: power iteration on a ball, trace moments, and (for radial
    free group elements, also after a free basis rewrite) radial compression.
    Upper bounds: l1, l1 of powers, Haagerup and the weighted Schur test
    (the latter two on free groups, also after a free basis rewrite).

    Budgets that do not fit into the caps are shrunk and recorded in
    `shortfalls`, in strict mode that raises BudgetExceeded instead with the
    partial estimate attached.
    """
    if value.is_zero:
        return zero_estimate()

    shortfalls: List[str] = []
    exact = _exact_or_none(value)

    radius = _power_radius(value, cfg)
    if radius < cfg.radius:
        shortfalls.append(f"radius {cfg.radius}->{radius}")
    iteration = power_lower(value, radius, cfg)
    lowers: List[Tuple[float, str]] = [(iteration.value, "power-iteration")]

    moment_depth = 0
    if exact is not None:
        try:
            for moment, trace_value in moment_traces(
                exact, cfg.moment_depth, cfg.support_cap, cfg.work_cap
            ):
                lowers.append(
                    (
                        float_down(root_lower(trace_value, 2 * moment)),
                        f"moments:m={moment}",
                    )
                )
                moment_depth = moment
        except BudgetExceeded as ex:
            shortfalls.append(f"moment depth {cfg.moment_depth}->{moment_depth}: {ex}")

        for candidate, suffix in ((exact, ""), (free_basis_transfer(exact), FREE_BASIS)):
            if candidate is not None and radial_profile(candidate) is not None:
                lowers.append(
                    (lower_bound_radial(candidate, cfg.radial_radius), "radial" + suffix)
                )

        uppers, power_depth = _all_upper_candidates(exact, cfg, shortfalls)
    else:
        uppers, power_depth = [(_complex_l1(value), "l1")], 0

    lower, lower_method = _best(lowers, lambda new, old: new > old)
    upper_exact, upper_method = _best(uppers, lambda new, old: new < old)

    result = NormEstimate(
        lower=lower,
        upper=float_up(upper_exact),
        lower_method=lower_method,
        upper_method=upper_method,
        radius=radius,
        iterations=iteration.iterations,
        moment_depth=moment_depth,
        power_depth=power_depth,
        upper_exact=upper_exact,
        shortfalls=tuple(shortfalls),
    )
    logging.info(
        "Norm estimate: group=%s, lower=%s (%s), upper=%s (%s)",
        value.group,
        result.lower,
        lower_method,
        result.upper,
        upper_method,
    )

    if shortfalls and cfg.strict:
        raise BudgetExceeded("Budgets exceeded: " + "; ".join(shortfalls), partial=result)
    return result
