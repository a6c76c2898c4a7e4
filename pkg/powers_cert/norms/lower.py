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
"""Lower bounds for the reduced C*-norm

Every lower bound is the norm of λ(a) applied to an explicit finitely
supported vector (or a trace moment), so it is valid no matter how well the
underlying iteration converged. Truncating the power iteration vector to a
ball only slows convergence down: the quotient ‖λ(a)ξ‖/‖ξ‖ is always taken on
the untruncated image of ξ.
"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse

from ..algebra import AlgebraElement, Mode, convolve_terms, integer_scaled
from ..errors import BudgetExceeded, ModeMismatch, WrongBackend
from ..groups import Ball, ball
from ..groups.descriptor import GroupDescriptor, Key
from .config import BoundConfig
from .roots import root_lower

# Float lower bounds are shaved to absorb rounding
FLOAT_SHAVE = 1e-9

START_NOISE_RADIUS = 2
START_NOISE_SCALE = 0.1


class TranslationOperator:
    """Left translations by a fixed list of words acting on ℓ²(ball).

    Rows index the image words: the ball words come first (in ball order) so
    that the adjoint maps an image vector straight back onto the ball.
    """

    def __init__(
        self,
        group: GroupDescriptor,
        keys: Sequence[Key],
        radius: int,
        ball_cap: int,
    ) -> None:
        self.group = group
        self.keys = list(keys)
        self.ball: Ball = ball(group, radius, ball_cap)
        index: Dict[Key, int] = dict(self.ball.index)
        mul_keys = group.mul_keys
        size = len(self.ball)
        self.rows: List[np.ndarray] = []
        for key in self.keys:
            self.rows.append(
                np.fromiter(
                    (
                        index.setdefault(mul_keys(key, word), len(index))
                        for word in self.ball.keys
                    ),
                    dtype=np.int64,
                    count=size,
                )
            )
        self.image_size = len(index)

    def matrix(self, coefficients: Sequence) -> scipy.sparse.csr_matrix:
        """Sparse matrix of the combination Σ c_k λ(w_k) restricted to the ball"""
        size = len(self.ball)
        coefficients = np.asarray(coefficients)
        dtype = np.complex128 if np.iscomplexobj(coefficients) else np.float64
        data = np.repeat(coefficients.astype(dtype), size)
        rows = np.concatenate(self.rows) if self.rows else np.zeros(0, np.int64)
        cols = np.tile(np.arange(size), len(self.rows))
        # duplicate (row, col) pairs are summed
        return scipy.sparse.csr_matrix(
            (data, (rows, cols)), shape=(self.image_size, size)
        )

    def gradients(self, xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        """Re⟨λ(w_k)ξ, η⟩ for every word w_k"""
        return np.array(
            [np.real(np.vdot(eta[rows], xi)) for rows in self.rows], dtype=np.float64
        )


@dataclasses.dataclass
class PowerIteration:
    """Result of a power iteration

    `xi` is a unit vector on the ball and `eta` the unit vector in the
    direction of its image, `value` the certified lower bound.
    """

    value: float
    xi: np.ndarray
    eta: np.ndarray
    iterations: int


def power_iteration(
    matrix: scipy.sparse.spmatrix,
    seed: int,
    max_iterations: int,
    tolerance: float,
    noise_size: int,
) -> PowerIteration:
    """Power iteration on M^H M starting from δ_e plus seeded noise

    Args:
        matrix (scipy.sparse.spmatrix): Compression of λ(a), columns index the ball
        seed (int): Noise seed
        max_iterations (int): Iteration budget
        tolerance (float): Relative change in the quotient that stops the iteration
        noise_size (int): Number of leading ball entries that receive noise

    Returns:
        PowerIteration: Best quotient found and its vectors
    """
    size = matrix.shape[1]
    dtype = np.complex128 if np.iscomplexobj(matrix.data) else np.float64
    rng = np.random.default_rng(seed)
    xi = np.zeros(size, dtype=dtype)
    xi[0] = 1.0
    noise = min(noise_size, size)
    if noise > 1:
        xi[1:noise] += START_NOISE_SCALE * rng.uniform(0.0, 1.0, noise - 1)

    adjoint = matrix.conj().T.tocsr()
    best = 0.0
    best_xi, best_eta = xi, np.zeros(matrix.shape[0], dtype=dtype)
    previous = 0.0
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        norm_xi = np.linalg.norm(xi)
        eta = matrix @ xi
        norm_eta = np.linalg.norm(eta)
        quotient = norm_eta / norm_xi
        if quotient > best:
            best, best_xi, best_eta = quotient, xi / norm_xi, eta / norm_eta
        if norm_eta == 0:
            break

        following = adjoint @ eta
        norm_following = np.linalg.norm(following)
        if norm_following == 0:
            break
        xi = following / norm_following

        if abs(quotient - previous) <= tolerance * quotient:
            break
        previous = quotient

    logging.debug("Power iteration: value=%s, iterations=%s", best, iterations)
    return PowerIteration(
        value=max(float(best) - FLOAT_SHAVE, 0.0),
        xi=best_xi,
        eta=best_eta,
        iterations=iterations,
    )


def _float_coefficients(value: AlgebraElement) -> List:
    return [
        complex(c) if isinstance(c, complex) else float(c) for c in value.terms.values()
    ]


def power_lower(
    value: AlgebraElement, radius: int, cfg: BoundConfig
) -> PowerIteration:
    """Power iteration lower bound at a given ball radius"""
    operator = TranslationOperator(
        value.group, list(value.terms.keys()), radius, cfg.ball_cap
    )
    return power_iteration(
        operator.matrix(_float_coefficients(value)),
        seed=cfg.seed,
        max_iterations=cfg.max_iterations,
        tolerance=cfg.tolerance,
        noise_size=value.group.ball_size(START_NOISE_RADIUS),
    )


def lower_bound_power(value: AlgebraElement, cfg: BoundConfig) -> float:
    """Compression lower bound from power iteration on ball(cfg.radius)

    Raises:
        BudgetExceeded: The ball does not fit into cfg.ball_cap
    """
    if value.is_zero:
        return 0.0
    return power_lower(value, cfg.radius, cfg).value


def _inverse_terms(group: GroupDescriptor, terms: Dict[Key, int]) -> Dict[Key, int]:
    inv_key = group.inv_key
    return {inv_key(key): c for key, c in terms.items()}


def _check_work(left: int, right: int, work_cap: int) -> None:
    if left * right > work_cap:
        raise BudgetExceeded(
            f"Convolution work exceeds cap: {left}x{right} > {work_cap}"
        )


def moment_traces(
    value: AlgebraElement,
    depth: int,
    support_cap: int,
    work_cap: int,
) -> Iterator[Tuple[int, Fraction]]:
    """Yield (m, τ((a*a)^m)) for m = 1..depth.

    The powers of a*a are computed exactly on integer coefficients and
    τ(b^m) is read off as Σ_w b^i(w) b^j(w^-1) with i + j = m, so only
    powers up to ceil(depth/2) are needed.

    Raises:
        BudgetExceeded: A power outgrows the caps (after yielding what fits)
    """
    if value.mode != Mode.EXACT:
        raise ModeMismatch("Trace moments need an exact element")
    group = value.group
    terms, denominator = integer_scaled(value)
    _check_work(len(terms), len(terms), work_cap)
    base = convolve_terms(group, _inverse_terms(group, terms), terms, support_cap)
    powers = [{group.identity_key: 1}, base]
    inv_key = group.inv_key
    for moment in range(1, depth + 1):
        left = (moment + 1) // 2
        while len(powers) <= left:
            _check_work(len(powers[-1]), len(base), work_cap)
            powers.append(convolve_terms(group, powers[-1], base, support_cap))
        x, y = powers[left], powers[moment - left]
        total = sum(c * y.get(inv_key(key), 0) for key, c in x.items())
        yield moment, Fraction(total, denominator ** (2 * moment))


def lower_bound_moments(
    value: AlgebraElement,
    moment: int,
    support_cap: int = BoundConfig.support_cap,
    work_cap: int = BoundConfig.work_cap,
) -> Fraction:
    """Trace moment lower bound τ((a*a)^m)^(1/2m), rounded down

    Raises:
        ModeMismatch: Element is not exact
        BudgetExceeded: Support blows up
    """
    if moment < 1:
        raise ValueError(f"Moment must be positive: {moment}")
    if value.is_zero:
        return Fraction(0)
    trace_value = Fraction(0)
    for _, trace_value in moment_traces(value, moment, support_cap, work_cap):
        pass
    return root_lower(trace_value, 2 * moment)


def radial_profile(value: AlgebraElement) -> Optional[Dict[int, object]]:
    """Coefficient per word length if the element is radial.

    An element of a free group is radial when its coefficient depends only on
    the word length and every sphere it touches is filled completely.
    """
    group = value.group
    if not group.is_free or value.is_zero:
        return None
    profile: Dict[int, object] = {}
    counts: Dict[int, int] = {}
    for key, coeff in value.terms.items():
        length = len(key)
        if profile.setdefault(length, coeff) != coeff:
            return None
        counts[length] = counts.get(length, 0) + 1
    if any(counts[length] != group.sphere_size(length) for length in counts):
        return None
    return profile


def lower_bound_radial(value: AlgebraElement, radius: int) -> float:
    """Compression of a radial element to radial vectors on spheres 0..radius.

    On radial vectors the sphere sums χ_d satisfy χ1·χ1 = χ2 + 2k·χ0 and
    χ1·χd = χ(d+1) + q·χ(d-1) with q = 2k - 1, which turns λ(a) into a
    banded matrix in the orthonormal basis of normalized spheres.

    Raises:
        WrongBackend: Element is not a radial element of a free group
    """
    profile = radial_profile(value)
    if profile is None:
        raise WrongBackend("Radial bound needs a radial element of a free group")

    rank = value.group.rank
    q = 2 * rank - 1
    degree = max(profile)
    size = radius + degree + 1

    step = np.zeros((size, size))
    if size > 1:
        step[0, 1] = step[1, 0] = math.sqrt(2 * rank)
    for i in range(1, size - 1):
        step[i, i + 1] = step[i + 1, i] = math.sqrt(q)

    complex_mode = any(isinstance(c, complex) for c in profile.values())
    dtype = np.complex128 if complex_mode else np.float64
    spheres = [np.eye(size), step]
    for length in range(2, degree + 1):
        back = q + 1 if length == 2 else q
        spheres.append(step @ spheres[-1] - back * spheres[-2])

    operator = np.zeros((size, size), dtype=dtype)
    for length, coeff in profile.items():
        operator = operator + (complex(coeff) if complex_mode else float(coeff)) * spheres[
            length
        ]
    operator = operator[:, : radius + 1]

    _, _, right = np.linalg.svd(operator)
    vector = right[0].conj()
    quotient = np.linalg.norm(operator @ vector) / np.linalg.norm(vector)
    logging.debug("Radial compression: radius=%s, value=%s", radius, quotient)
    return max(float(quotient) - FLOAT_SHAVE, 0.0)
