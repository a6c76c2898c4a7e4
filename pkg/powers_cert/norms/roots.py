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
"""Certified roots and outward rounding of exact rationals"""

import math
from fractions import Fraction

# Roots are bracketed to 2^-40 (about 1e-12)
ROOT_PRECISION_BITS = 40


def _integer_root_floor(value: int, degree: int) -> int:
    """Largest r with r**degree <= value"""
    if value < 0:
        raise ValueError("Root of a negative number")
    if value < 2:
        return value
    if degree == 2:
        return math.isqrt(value)
    low, high = 0, 1 << (value.bit_length() // degree + 1)
    while low < high:
        mid = (low + high + 1) // 2
        if mid**degree <= value:
            low = mid
        else:
            high = mid - 1
    return low


def root_lower(value: Fraction, degree: int, bits: int = ROOT_PRECISION_BITS) -> Fraction:
    """Dyadic rational r with r <= value^(1/degree) (within 2^-bits)"""
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"Root of a negative number: {value}")
    scaled = value.numerator * (1 << (bits * degree)) // value.denominator
    return Fraction(_integer_root_floor(scaled, degree), 1 << bits)


def root_upper(value: Fraction, degree: int, bits: int = ROOT_PRECISION_BITS) -> Fraction:
    """Dyadic rational r with r >= value^(1/degree) (within 2^-bits)"""
    value = Fraction(value)
    if value < 0:
        raise ValueError(f"Root of a negative number: {value}")
    numerator = value.numerator * (1 << (bits * degree))
    root = _integer_root_floor(numerator // value.denominator, degree)
    if root**degree * value.denominator < numerator:
        root += 1
    return Fraction(root, 1 << bits)


def sqrt_lower(value: Fraction) -> Fraction:
    """Certified lower bound of a square root"""
    return root_lower(value, 2)


def sqrt_upper(value: Fraction) -> Fraction:
    """Certified upper bound of a square root"""
    return root_upper(value, 2)


def float_down(value: Fraction) -> float:
    """Largest float <= value"""
    result = float(value)
    if Fraction(result) > value:
        result = math.nextafter(result, -math.inf)
    return result


def float_up(value: Fraction) -> float:
    """Smallest float >= value"""
    result = float(value)
    if Fraction(result) < value:
        result = math.nextafter(result, math.inf)
    return result
