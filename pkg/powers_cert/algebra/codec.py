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
"""JSON form of elements and rationals

    {
        "group": "F2",
        "mode": "exact",
        "terms": [{"word": "a", "coeff": "1/4"}, ...]
    }
"""

import json
from fractions import Fraction
from typing import Any, Dict

from ..errors import ParseError
from ..groups import GroupDescriptor, parse_group
from .element import AlgebraElement, Mode, coerce_scalar


def format_fraction(value: Fraction) -> str:
    """Rational as a "p/q" string"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(value: Any) -> Fraction:
    """Parse a rational from "p/q", an integer or a decimal string"""
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(str(value), "expected a rational as 'p/q'")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as ex:
        raise ParseError(str(value), "expected a rational as 'p/q'") from ex


def _format_coeff(coeff, mode: Mode):
    if mode == Mode.EXACT:
        return format_fraction(coeff)
    if isinstance(coeff, complex):
        return [coeff.real, coeff.imag]
    return coeff


def _parse_coeff(value: Any, mode: Mode):
    if mode == Mode.EXACT:
        return parse_fraction(value)
    if isinstance(value, list) and len(value) == 2:
        return coerce_scalar(complex(value[0], value[1]), mode)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(str(value), "expected a float coefficient")
    return coerce_scalar(value, mode)


def element_to_dict(value: AlgebraElement) -> Dict[str, Any]:
    """JSON compatible form of an element (terms in ball order)"""
    return {
        "group": str(value.group),
        "mode": value.mode.value,
        "terms": [
            {
                "word": value.group.format_key(key),
                "coeff": _format_coeff(coeff, value.mode),
            }
            for key, coeff in value.items()
        ],
    }


def element_from_dict(
    data: Dict[str, Any], group: GroupDescriptor = None
) -> AlgebraElement:
    """Element from its JSON form

    Args:
        data (Dict[str, Any]): JSON data
        group (GroupDescriptor, optional): Expected group. Defaults to the
            group named in the data.
    """
    if not isinstance(data, dict):
        raise ParseError(str(data), "element must be a JSON object")
    try:
        named = parse_group(str(data["group"]))
        mode = Mode(data.get("mode", Mode.EXACT.value))
        raw_terms = data["terms"]
    except (KeyError, ValueError) as ex:
        raise ParseError(str(data), f"invalid element: {ex}") from ex

    if group is not None and named != group:
        raise ParseError(str(data), f"element group {named} does not match {group}")

    terms: Dict[Any, Any] = {}
    for term in raw_terms:
        if not isinstance(term, dict) or "word" not in term or "coeff" not in term:
            raise ParseError(str(term), "term needs 'word' and 'coeff'")
        key = named.parse_key(str(term["word"]))
        terms[key] = terms.get(key, 0) + _parse_coeff(term["coeff"], mode)
    return AlgebraElement(named, terms, mode)


def dumps_element(value: AlgebraElement) -> str:
    """Serialize an element to JSON text"""
    return json.dumps(element_to_dict(value), indent=2)


def loads_element(text: str, group: GroupDescriptor = None) -> AlgebraElement:
    """Parse an element from JSON text"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError(text[:40], f"invalid json: {ex}") from ex
    return element_from_dict(data, group)
