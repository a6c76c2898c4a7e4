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
"""Finitely supported elements of the group ring"""

import dataclasses
import enum
import math
import numbers
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from ..errors import BudgetExceeded, GroupMismatch, ModeMismatch
from ..groups import GroupDescriptor, Word
from ..groups.descriptor import Key

DEFAULT_SUPPORT_CAP = 5_000_000

Scalar = Union[Fraction, float, complex]


class Mode(str, enum.Enum):
    """Scalar mode"""

    EXACT = "exact"
    FLOAT = "float"


def coerce_scalar(value, mode: Mode) -> Scalar:
    """Convert a value into the scalar type of a mode.

    Exact mode only accepts rationals (ints, Fractions or decimal strings),
    floats have to be converted explicitly with `to_exact`.
    """
    if mode == Mode.EXACT:
        if isinstance(value, bool):
            raise ModeMismatch(f"Not an exact scalar: {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise ModeMismatch(f"Not an exact scalar: {value!r}")

    if isinstance(value, complex):
        return value if value.imag else value.real
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, numbers.Complex):
        return complex(value)
    raise ModeMismatch(f"Not a float scalar: {value!r}")


@dataclasses.dataclass(frozen=True)
class AlgebraElement:
    """Element of the group ring CG.

    `terms` maps group keys to non-zero coefficients and is never mutated
    after construction.
    """

    group: GroupDescriptor
    terms: Mapping[Key, Scalar]
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {key: c for key, c in self.terms.items() if c != 0}
        )

    def __hash__(self) -> int:
        return hash((self.group, self.mode, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, scale(-1, other))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return convolve(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({coeff})·{self.group.format_key(key)}" for key, coeff in self.items()
        )

    @property
    def is_zero(self) -> bool:
        """Element is zero"""
        return not self.terms

    @property
    def degree(self) -> int:
        """Largest word length in the support (0 for the zero element)"""
        return max((self.group.key_length(key) for key in self.terms), default=0)

    def coefficient(self, word: Word) -> Scalar:
        """Coefficient of a word"""
        if word.group != self.group:
            raise GroupMismatch(self.group, word.group)
        return self.terms.get(word.key, self._zero())

    def items(self) -> List[Tuple[Key, Scalar]]:
        """Terms in ball order"""
        group = self.group
        return sorted(
            self.terms.items(),
            key=lambda item: (group.key_length(item[0]), group.sort_key(item[0])),
        )

    def support(self) -> List[Word]:
        """Support in ball order"""
        return [Word(self.group, key) for key, _ in self.items()]

    def _zero(self) -> Scalar:
        return Fraction(0) if self.mode == Mode.EXACT else 0.0


def element(
    group: GroupDescriptor,
    terms: Iterable[Tuple[Word, object]],
    mode: Mode = Mode.EXACT,
) -> AlgebraElement:
    """Build an element from (word, coefficient) pairs, summing repeats"""
    values: Dict[Key, Scalar] = {}
    for word, coeff in terms:
        if word.group != group:
            raise GroupMismatch(group, word.group)
        values[word.key] = values.get(word.key, 0) + coerce_scalar(coeff, mode)
    return AlgebraElement(group, values, mode)


def zero(group: GroupDescriptor, mode: Mode = Mode.EXACT) -> AlgebraElement:
    """Zero element"""
    return AlgebraElement(group, {}, mode)


def delta(word: Word, coeff=1, mode: Mode = Mode.EXACT) -> AlgebraElement:
    """Point mass c·δ_w"""
    return AlgebraElement(word.group, {word.key: coerce_scalar(coeff, mode)}, mode)


def _check_compatible(left: AlgebraElement, right: AlgebraElement) -> None:
    if left.group != right.group:
        raise GroupMismatch(left.group, right.group)
    if left.mode != right.mode:
        raise ModeMismatch(f"Mode mismatch: {left.mode.value} != {right.mode.value}")


def add(left: AlgebraElement, right: AlgebraElement) -> AlgebraElement:
    """Sum of two elements"""
    _check_compatible(left, right)
    values = dict(left.terms)
    for key, coeff in right.terms.items():
        values[key] = values.get(key, 0) + coeff
    return AlgebraElement(left.group, values, left.mode)


def scale(coeff, value: AlgebraElement) -> AlgebraElement:
    """Scalar multiple"""
    factor = coerce_scalar(coeff, value.mode)
    return AlgebraElement(
        value.group, {key: factor * c for key, c in value.terms.items()}, value.mode
    )


def convolve(
    left: AlgebraElement,
    right: AlgebraElement,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> AlgebraElement:
    """Convolution product (a·b)(w) = sum over uv=w of a(u)b(v)

    Raises:
        BudgetExceeded: Support of the product grows beyond support_cap
    """
    _check_compatible(left, right)
    return AlgebraElement(
        left.group,
        convolve_terms(left.group, left.terms, right.terms, support_cap),
        left.mode,
    )


def convolve_terms(
    group: GroupDescriptor,
    left: Mapping[Key, Scalar],
    right: Mapping[Key, Scalar],
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> Dict[Key, Scalar]:
    """Convolve raw term maps (any ring of coefficients)"""
    mul_keys = group.mul_keys
    right_items = list(right.items())
    result: Dict[Key, Scalar] = {}
    for u, x in left.items():
        for v, y in right_items:
            w = mul_keys(u, v)
            result[w] = result.get(w, 0) + x * y
        if len(result) > support_cap:
            raise BudgetExceeded(
                f"Convolution support exceeds cap: cap={support_cap}, group={group}"
            )
    return {key: c for key, c in result.items() if c != 0}


def adjoint(value: AlgebraElement) -> AlgebraElement:
    """Involution a*(w) = conj(a(w^-1))"""
    inv_key = value.group.inv_key
    return AlgebraElement(
        value.group,
        {inv_key(key): c.conjugate() for key, c in value.terms.items()},
        value.mode,
    )


def conjugate_by(conjugator: Word, value: AlgebraElement) -> AlgebraElement:
    """δ_s · a · δ_s^-1"""
    group = value.group
    if conjugator.group != group:
        raise GroupMismatch(group, conjugator.group)
    s, s_inv = conjugator.key, group.inv_key(conjugator.key)
    return AlgebraElement(
        group,
        {
            group.mul_keys(group.mul_keys(s, key), s_inv): c
            for key, c in value.terms.items()
        },
        value.mode,
    )


def trace(value: AlgebraElement) -> Scalar:
    """Canonical trace: the coefficient of the identity"""
    return value.terms.get(value.group.identity_key, value._zero())


def l1(value: AlgebraElement) -> Scalar:
    """Sum of absolute coefficients"""
    if value.mode == Mode.EXACT:
        return sum((abs(c) for c in value.terms.values()), Fraction(0))
    return math.fsum(abs(c) for c in value.terms.values())


def l2_squared(value: AlgebraElement) -> Scalar:
    """Sum of squared absolute coefficients (exact in exact mode)"""
    if value.mode == Mode.EXACT:
        return sum((c * c for c in value.terms.values()), Fraction(0))
    return math.fsum(abs(c) ** 2 for c in value.terms.values())


def l2(value: AlgebraElement) -> float:
    """Euclidean norm of the coefficients"""
    return math.sqrt(l2_squared(value))


def restrict_length(value: AlgebraElement, length: int) -> AlgebraElement:
    """Restriction to words of exactly the given length"""
    key_length = value.group.key_length
    return AlgebraElement(
        value.group,
        {key: c for key, c in value.terms.items() if key_length(key) == length},
        value.mode,
    )


def is_nonnegative(value: AlgebraElement) -> bool:
    """All coefficients are real and non-negative"""
    return all(
        not isinstance(c, complex) and c >= 0 for c in value.terms.values()
    )


def to_float(value: AlgebraElement) -> AlgebraElement:
    """Explicit conversion to float mode"""
    if value.mode == Mode.FLOAT:
        return value
    return AlgebraElement(
        value.group, {key: float(c) for key, c in value.terms.items()}, Mode.FLOAT
    )


def to_exact(value: AlgebraElement) -> AlgebraElement:
    """Explicit conversion of real float coefficients to exact rationals.

    The conversion is exact (every float is a dyadic rational).
    """
    if value.mode == Mode.EXACT:
        return value
    if any(isinstance(c, complex) for c in value.terms.values()):
        raise ModeMismatch("Complex coefficients have no exact representation")
    return AlgebraElement(
        value.group, {key: Fraction(c) for key, c in value.terms.items()}, Mode.EXACT
    )


def integer_scaled(value: AlgebraElement) -> Tuple[Dict[Key, int], int]:
    """Write an exact element as (1/D)·A with integer coefficients.

    Returns:
        Tuple[Dict[Key, int], int]: Integer terms of A and the denominator D
    """
    if value.mode != Mode.EXACT:
        raise ModeMismatch("Integer scaling needs an exact element")
    denominator = 1
    for coeff in value.terms.values():
        denominator = math.lcm(denominator, coeff.denominator)
    return (
        {
            key: coeff.numerator * (denominator // coeff.denominator)
            for key, coeff in value.terms.items()
        },
        denominator,
    )

