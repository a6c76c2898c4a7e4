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
"""Group descriptors

A descriptor knows how to multiply, invert, measure, order and print the
raw keys of its group. Words (see `words.py`) pair a descriptor with a key.

Key layout:
 * FreeGroup: tuple of letter codes, generator i is 2*i and its inverse 2*i+1
 * FreeAbelian: tuple of integer exponents (one per generator)
 * DirectProduct: pair of component keys
"""

import abc
import dataclasses
import re
from typing import Hashable, List, Sequence, Tuple

from ..errors import InvalidDescriptor, InvalidGenerator, ParseError

# "e" is reserved for the identity
ALPHABET = "abcdfghijklmnopqrstuvwxyz"

MAX_PRODUCT_DEPTH = 2

Key = Hashable

_VECTOR = re.compile(r"^\(\s*-?\d+(\s*,\s*-?\d+)*\s*\)$")


class GroupDescriptor(abc.ABC):
    """Group backend"""

    @property
    def depth(self) -> int:
        """DirectProduct nesting depth"""
        return 0

    @property
    def leaves(self) -> int:
        """Number of non-product factors"""
        return 1

    @property
    @abc.abstractmethod
    def identity_key(self) -> Key:
        """Key of the identity"""

    @abc.abstractmethod
    def mul_keys(self, left: Key, right: Key) -> Key:
        """Multiply two keys"""

    @abc.abstractmethod
    def inv_key(self, key: Key) -> Key:
        """Invert a key"""

    @abc.abstractmethod
    def key_length(self, key: Key) -> int:
        """Word length of a key"""

    @abc.abstractmethod
    def sort_key(self, key: Key) -> Tuple:
        """Lexicographic sort key within a sphere"""

    @abc.abstractmethod
    def generator_keys(self) -> List[Key]:
        """Signed generators in ball order (g1 < g1^-1 < g2 < ...)"""

    @abc.abstractmethod
    def spheres(self, radius: int) -> List[List[Key]]:
        """Keys of length 0..radius, one sorted list per length"""

    @abc.abstractmethod
    def sphere_size(self, length: int) -> int:
        """Number of keys of exactly the given length"""

    @abc.abstractmethod
    def parse_key(self, text: str) -> Key:
        """Parse the text form of a key"""

    @abc.abstractmethod
    def format_key(self, key: Key) -> str:
        """Text form of a key"""

    @abc.abstractmethod
    def is_central_key(self, key: Key) -> bool:
        """Key lies in the center of the group"""

    @abc.abstractmethod
    def validate_key(self, key: Key) -> Key:
        """Check that a raw key is a normal form of this group"""

    @property
    def is_free(self) -> bool:
        """Group is a non-abelian-capable free group backend"""
        return False

    def ball_size(self, radius: int) -> int:
        """Number of keys of length at most radius"""
        return sum(self.sphere_size(r) for r in range(radius + 1))

    def is_identity_key(self, key: Key) -> bool:
        """Key is the identity"""
        return key == self.identity_key


@dataclasses.dataclass(frozen=True)
class FreeGroup(GroupDescriptor):
    """Free group F_k"""

    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidDescriptor(f"Free group rank must be positive: {self.rank}")

    def __str__(self) -> str:
        return f"F{self.rank}"

    @property
    def is_free(self) -> bool:
        return True

    @property
    def identity_key(self) -> Key:
        return ()

    def reduce_letters(self, letters: Sequence[int]) -> Tuple[int, ...]:
        """Freely reduce a sequence of letter codes"""
        stack: List[int] = []
        for letter in letters:
            if not isinstance(letter, int) or not 0 <= letter < 2 * self.rank:
                raise InvalidGenerator(letter, self.rank)
            if stack and stack[-1] == letter ^ 1:
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    def mul_keys(self, left: Key, right: Key) -> Key:
        cancel = 0
        limit = min(len(left), len(right))
        while cancel < limit and left[-1 - cancel] == right[cancel] ^ 1:
            cancel += 1
        return left[: len(left) - cancel] + right[cancel:]

    def inv_key(self, key: Key) -> Key:
        return tuple(letter ^ 1 for letter in reversed(key))

    def key_length(self, key: Key) -> int:
        return len(key)

    def sort_key(self, key: Key) -> Tuple:
        return key

    def generator_keys(self) -> List[Key]:
        return [(letter,) for letter in range(2 * self.rank)]

    def spheres(self, radius: int) -> List[List[Key]]:
        result = [[()]]
        for _ in range(radius):
            result.append(
                [
                    word + (letter,)
                    for word in result[-1]
                    for letter in range(2 * self.rank)
                    if not word or letter != word[-1] ^ 1
                ]
            )
        return result

    def sphere_size(self, length: int) -> int:
        if length == 0:
            return 1
        return 2 * self.rank * (2 * self.rank - 1) ** (length - 1)

    def parse_key(self, text: str) -> Key:
        value = text.strip()
        if value == "e":
            return ()
        letters = []
        for pos, char in enumerate(value):
            index = ALPHABET.find(char.lower())
            if index < 0:
                raise ParseError(text, f"unexpected character {char!r}", pos)
            if index >= self.rank:
                raise InvalidGenerator(char, self.rank)
            letters.append(2 * index + (1 if char.isupper() else 0))
        if not letters:
            raise ParseError(text, "empty word")
        return self.reduce_letters(letters)

    def format_key(self, key: Key) -> str:
        if not key:
            return "e"
        if self.rank > len(ALPHABET):
            raise InvalidDescriptor(f"No text form for words of {self}")
        return "".join(
            ALPHABET[letter >> 1].upper() if letter & 1 else ALPHABET[letter >> 1]
            for letter in key
        )

    def is_central_key(self, key: Key) -> bool:
        return self.rank == 1 or not key

    def validate_key(self, key: Key) -> Key:
        key = tuple(key)
        if self.reduce_letters(key) != key:
            raise ParseError(str(key), "word is not reduced")
        return key


@dataclasses.dataclass(frozen=True)
class FreeAbelian(GroupDescriptor):
    """Free abelian group Z^d"""

    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidDescriptor(
                f"Free abelian group rank must be positive: {self.rank}"
            )

    def __str__(self) -> str:
        return "Z" if self.rank == 1 else f"Z{self.rank}"

    @property
    def identity_key(self) -> Key:
        return (0,) * self.rank

    def mul_keys(self, left: Key, right: Key) -> Key:
        return tuple(x + y for x, y in zip(left, right))

    def inv_key(self, key: Key) -> Key:
        return tuple(-x for x in key)

    def key_length(self, key: Key) -> int:
        return sum(abs(x) for x in key)

    def sort_key(self, key: Key) -> Tuple:
        # same order as the letters of the sorted word, a < A < b < B
        letters: List[int] = []
        for index, value in enumerate(key):
            letters.extend([2 * index + (value < 0)] * abs(value))
        return tuple(letters)

    def generator_keys(self) -> List[Key]:
        result = []
        for index in range(self.rank):
            for sign in (1, -1):
                key = [0] * self.rank
                key[index] = sign
                result.append(tuple(key))
        return result

    def _vectors(self, length: int, coords: int) -> List[Tuple[int, ...]]:
        if coords == 1:
            return [(length,), (-length,)] if length else [(0,)]
        result = []
        for value in range(-length, length + 1):
            for rest in self._vectors(length - abs(value), coords - 1):
                result.append((value,) + rest)
        return result

    def spheres(self, radius: int) -> List[List[Key]]:
        return [
            sorted(self._vectors(r, self.rank), key=self.sort_key)
            for r in range(radius + 1)
        ]

    def sphere_size(self, length: int) -> int:
        if length == 0:
            return 1
        # choose i nonzero coordinates, their signs, and a composition of length
        total = 0
        for nonzero in range(1, min(self.rank, length) + 1):
            total += (
                2**nonzero
                * _binomial(self.rank, nonzero)
                * _binomial(length - 1, nonzero - 1)
            )
        return total

    def parse_key(self, text: str) -> Key:
        value = text.strip()
        if value == "e":
            return self.identity_key
        if not _VECTOR.match(value):
            raise ParseError(text, "expected an integer vector like (1,0)")
        key = tuple(int(part) for part in value[1:-1].split(","))
        if len(key) != self.rank:
            raise InvalidGenerator(value, self.rank)
        return key

    def format_key(self, key: Key) -> str:
        return "(" + ",".join(str(x) for x in key) + ")"

    def is_central_key(self, key: Key) -> bool:
        return True

    def validate_key(self, key: Key) -> Key:
        key = tuple(key)
        if len(key) != self.rank or not all(isinstance(x, int) for x in key):
            raise ParseError(str(key), f"expected {self.rank} integer exponents")
        return key


@dataclasses.dataclass(frozen=True)
class DirectProduct(GroupDescriptor):
    """Direct product of two backends"""

    left: GroupDescriptor
    right: GroupDescriptor

    def __post_init__(self):
        for part in (self.left, self.right):
            if not isinstance(part, GroupDescriptor):
                raise InvalidDescriptor(f"Not a group descriptor: {part!r}")

    def __str__(self) -> str:
        right = str(self.right)
        if isinstance(self.right, DirectProduct):
            right = f"({right})"
        return f"{self.left}x{right}"

    @property
    def depth(self) -> int:
        return 1 + max(self.left.depth, self.right.depth)

    @property
    def leaves(self) -> int:
        return self.left.leaves + self.right.leaves

    @property
    def identity_key(self) -> Key:
        return (self.left.identity_key, self.right.identity_key)

    def mul_keys(self, left: Key, right: Key) -> Key:
        return (
            self.left.mul_keys(left[0], right[0]),
            self.right.mul_keys(left[1], right[1]),
        )

    def inv_key(self, key: Key) -> Key:
        return (self.left.inv_key(key[0]), self.right.inv_key(key[1]))

    def key_length(self, key: Key) -> int:
        return self.left.key_length(key[0]) + self.right.key_length(key[1])

    def sort_key(self, key: Key) -> Tuple:
        return (self.left.sort_key(key[0]), self.right.sort_key(key[1]))

    def generator_keys(self) -> List[Key]:
        return [(key, self.right.identity_key) for key in self.left.generator_keys()] + [
            (self.left.identity_key, key) for key in self.right.generator_keys()
        ]

    def spheres(self, radius: int) -> List[List[Key]]:
        left = self.left.spheres(radius)
        right = self.right.spheres(radius)
        result = []
        for r in range(radius + 1):
            sphere = [
                (u, v) for j in range(r + 1) for u in left[j] for v in right[r - j]
            ]
            result.append(sorted(sphere, key=self.sort_key))
        return result

    def sphere_size(self, length: int) -> int:
        return sum(
            self.left.sphere_size(j) * self.right.sphere_size(length - j)
            for j in range(length + 1)
        )

    def parse_key(self, text: str) -> Key:
        parts = text.split("|")
        if len(parts) != self.leaves:
            raise ParseError(
                text, f"expected {self.leaves} components separated by '|'"
            )
        split = self.left.leaves
        return (
            self.left.parse_key("|".join(parts[:split])),
            self.right.parse_key("|".join(parts[split:])),
        )

    def format_key(self, key: Key) -> str:
        return f"{self.left.format_key(key[0])} | {self.right.format_key(key[1])}"

    def is_central_key(self, key: Key) -> bool:
        return self.left.is_central_key(key[0]) and self.right.is_central_key(key[1])

    def validate_key(self, key: Key) -> Key:
        if not isinstance(key, (tuple, list)) or len(key) != 2:
            raise ParseError(str(key), "expected a pair of component words")
        return (self.left.validate_key(key[0]), self.right.validate_key(key[1]))


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


class _GroupParser:
    """Recursive descent parser for group text such as F2xZ or F2x(ZxZ)"""

    # pylint: disable=too-few-public-methods

    _FACTOR = re.compile(r"(F|Z)(\d*)")

    def __init__(self, text: str) -> None:
        self.text = text
        self.value = text.replace(" ", "")
        self.pos = 0

    def parse(self) -> GroupDescriptor:
        group = self._product()
        if self.pos != len(self.value):
            raise ParseError(self.text, "unexpected trailing text", self.pos)
        return group

    def _product(self) -> GroupDescriptor:
        group = self._factor()
        while self.pos < len(self.value) and self.value[self.pos] == "x":
            self.pos += 1
            group = DirectProduct(group, self._factor())
        return group

    def _factor(self) -> GroupDescriptor:
        if self.pos < len(self.value) and self.value[self.pos] == "(":
            self.pos += 1
            group = self._product()
            if self.pos >= len(self.value) or self.value[self.pos] != ")":
                raise ParseError(self.text, "missing ')'", self.pos)
            self.pos += 1
            return group

        match = self._FACTOR.match(self.value, self.pos)
        if not match:
            raise ParseError(self.text, "expected F<rank> or Z<rank>", self.pos)
        self.pos = match.end()
        kind, digits = match.groups()
        if kind == "F":
            if not digits:
                raise ParseError(self.text, "free group needs a rank", self.pos)
            return FreeGroup(int(digits))
        return FreeAbelian(int(digits) if digits else 1)


def parse_group(text: str, max_depth: int = MAX_PRODUCT_DEPTH) -> GroupDescriptor:
    """Parse a group descriptor from text

    Args:
        text (str): Group text, e.g. F2, Z, Z3, F2xZ
        max_depth (int, optional): Maximum DirectProduct nesting depth.

    Returns:
        GroupDescriptor: Parsed descriptor
    """
    group = _GroupParser(text).parse()
    if group.depth > max_depth:
        raise InvalidDescriptor(
            f"Direct product nesting is too deep: depth={group.depth}, max={max_depth}"
        )
    return group


def format_group(group: GroupDescriptor) -> str:
    """Text form of a group descriptor"""
    return str(group)
