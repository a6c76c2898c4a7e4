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
"""Reduced words and the group operations on them"""

import dataclasses
from typing import Iterable, List

from ..errors import GroupMismatch, InvalidGenerator, ParseError
from .descriptor import GroupDescriptor, Key


@dataclasses.dataclass(frozen=True)
class Word:
    """Group element in normal form"""

    group: GroupDescriptor
    key: Key

    def __str__(self) -> str:
        return format_word(self)

    def __mul__(self, other: "Word") -> "Word":
        return mul(self, other)

    @property
    def length(self) -> int:
        """Word length |w|"""
        return self.group.key_length(self.key)

    @property
    def is_identity(self) -> bool:
        """Word is the identity"""
        return self.group.is_identity_key(self.key)


def _check_same(left: Word, right: Word) -> None:
    if left.group != right.group:
        raise GroupMismatch(left.group, right.group)


def identity(group: GroupDescriptor) -> Word:
    """Identity of a group"""
    return Word(group, group.identity_key)


def generators(group: GroupDescriptor) -> List[Word]:
    """Signed generators (g1, g1^-1, g2, g2^-1, ...)"""
    return [Word(group, key) for key in group.generator_keys()]


def reduce(letters: Iterable[int], group: GroupDescriptor) -> Word:
    """Reduce a raw letter sequence.

    Letter i refers to the i-th signed generator of the group, so for free
    groups letter 2*j is generator j and 2*j+1 its inverse.

    Args:
        letters (Iterable[int]): Letter indexes
        group (GroupDescriptor): Group

    Raises:
        InvalidGenerator: Letter is outside of the group's rank

    Returns:
        Word: The reduced word equal to the product of the letters
    """
    letters = list(letters)
    if group.is_free:
        return Word(group, group.reduce_letters(letters))

    gens = group.generator_keys()
    key = group.identity_key
    for letter in letters:
        if not isinstance(letter, int) or not 0 <= letter < len(gens):
            raise InvalidGenerator(letter, len(gens) // 2)
        key = group.mul_keys(key, gens[letter])
    return Word(group, key)


def mul(left: Word, right: Word) -> Word:
    """Multiply two words"""
    _check_same(left, right)
    return Word(left.group, left.group.mul_keys(left.key, right.key))


def inv(word: Word) -> Word:
    """Inverse of a word"""
    return Word(word.group, word.group.inv_key(word.key))


def conjugate(conjugator: Word, target: Word) -> Word:
    """Conjugate s t s^-1"""
    _check_same(conjugator, target)
    group = target.group
    key = group.mul_keys(
        group.mul_keys(conjugator.key, target.key), group.inv_key(conjugator.key)
    )
    return Word(group, key)


def power(word: Word, exponent: int) -> Word:
    """Integer power of a word (by repeated squaring)"""
    group = word.group
    base = word.key if exponent >= 0 else group.inv_key(word.key)
    exponent = abs(exponent)
    result = group.identity_key
    while exponent:
        if exponent & 1:
            result = group.mul_keys(result, base)
        base = group.mul_keys(base, base)
        exponent >>= 1
    return Word(group, result)


def commutes(left: Word, right: Word) -> bool:
    """Words commute"""
    return mul(left, right) == mul(right, left)


def is_central(word: Word) -> bool:
    """Word lies in the center of its group"""
    return word.group.is_central_key(word.key)


def in_amenable_radical(word: Word) -> bool:
    """Word lies in the amenable radical of its group.

    For the implemented backends the radical is the product of the abelian
    and rank one free factors, which is also the center.
    """
    return is_central(word)


def parse_word(text: str, group: GroupDescriptor) -> Word:
    """Parse the text form of a word"""
    if not isinstance(text, str):
        raise ParseError(str(text), "expected a string")
    return Word(group, group.parse_key(text))


def format_word(word: Word) -> str:
    """Text form of a word"""
    return word.group.format_key(word.key)
