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
"""Inline element grammar

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := [scalar ['*']] factor (['*'] factor)* | scalar
    factor  := word | '(' expr ')'
    scalar  := number | '(' number ')'
    number  := integer | integer '/' integer | decimal

A parenthesized number is a scalar only when it is directly followed by
'(' or a letter, so "(1/2)((1)+(-1))" reads as one half times the sum of
the words (1) and (-1) of Z.

Examples:
    (1/4)(a+A+b+B)
    a + 2b - (1/3)aB
    (a+A)(b+B)
    (1/2)(e|(1) + a|(0))
"""

import re
from fractions import Fraction

from ..errors import ParseError
from ..groups import GroupDescriptor
from .element import AlgebraElement, Mode, add, convolve, scale

_NUMBER = re.compile(r"\d+(\.\d+)?(/\d+)?|\.\d+")
_PAREN_NUMBER = re.compile(r"\(\s*([+-]?\s*(\d+(\.\d+)?(/\d+)?|\.\d+))\s*\)")
_COMPONENT = r"(?:[A-Za-z]+|\(\s*-?\d+(?:\s*,\s*-?\d+)*\s*\))"
_WORD = re.compile(_COMPONENT + r"(?:\s*\|\s*" + _COMPONENT + r")*")


class _ElementParser:
    """Recursive descent parser"""

    # pylint: disable=too-few-public-methods

    def __init__(self, text: str, group: GroupDescriptor) -> None:
        self.text = text
        self.group = group
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, reason: str) -> ParseError:
        return ParseError(self.text, reason, self.pos)

    def parse(self) -> AlgebraElement:
        """Parse the whole text"""
        if not self.text.strip():
            raise self._error("empty element")
        value = self._expr()
        if self._peek():
            raise self._error(f"unexpected {self._peek()!r}")
        return value

    def _expr(self) -> AlgebraElement:
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        value = scale(sign, self._term())
        while self._peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            value = add(value, scale(sign, self._term()))
        return value

    def _starts_factor(self) -> bool:
        char = self._peek()
        return char == "(" or char.isalpha()

    def _term(self) -> AlgebraElement:
        coeff = self._scalar()
        if coeff is not None:
            if self._peek() == "*":
                self.pos += 1
            if not self._starts_factor():
                return self._constant(coeff)
            value = scale(coeff, self._factor())
        else:
            value = self._factor()

        while True:
            if self._peek() == "*":
                self.pos += 1
            elif not self._starts_factor():
                return value
            value = convolve(value, self._factor())

    def _constant(self, coeff: Fraction) -> AlgebraElement:
        return AlgebraElement(self.group, {self.group.identity_key: coeff}, Mode.EXACT)

    def _scalar(self):
        self._skip()
        match = _NUMBER.match(self.text, self.pos)
        if match:
            self.pos = match.end()
            return self._fraction(match.group(0))

        match = _PAREN_NUMBER.match(self.text, self.pos)
        if match:
            after = match.end()
            following = self.text[after] if after < len(self.text) else ""
            if following == "(" or following.isalpha():
                self.pos = after
                return self._fraction(match.group(1).replace(" ", ""))
        return None

    def _fraction(self, text: str) -> Fraction:
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as ex:
            raise self._error(f"invalid number {text!r}") from ex

    def _factor(self) -> AlgebraElement:
        self._skip()
        match = _WORD.match(self.text, self.pos)
        if match:
            start = self.pos
            self.pos = match.end()
            try:
                key = self.group.parse_key(match.group(0))
            except ParseError as ex:
                raise ParseError(self.text, ex.reason, start) from ex
            return self._constant_word(key)

        if self._peek() == "(":
            self.pos += 1
            value = self._expr()
            if self._peek() != ")":
                raise self._error("missing ')'")
            self.pos += 1
            return value

        raise self._error("expected a word or '('")

    def _constant_word(self, key) -> AlgebraElement:
        return AlgebraElement(self.group, {key: Fraction(1)}, Mode.EXACT)


def parse_element(text: str, group: GroupDescriptor) -> AlgebraElement:
    """Parse an element written in the inline grammar (exact mode)"""
    return _ElementParser(text, group).parse()
