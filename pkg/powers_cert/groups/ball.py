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
"""Cayley balls"""

import dataclasses
import logging
from typing import Dict, List, Tuple

from ..errors import BudgetExceeded
from .descriptor import GroupDescriptor, Key
from .words import Word

DEFAULT_MAX_BALL = 200_000


@dataclasses.dataclass(frozen=True)
class Ball:
    """Words of length at most `radius` with stable indexes.

    Index 0 is the identity, words are ordered by length and then
    lexicographically with a < A < b < B < ...
    """

    group: GroupDescriptor
    radius: int
    keys: Tuple[Key, ...]
    index: Dict[Key, int] = dataclasses.field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.keys)

    def words(self) -> List[Word]:
        """Words of the ball in index order"""
        return [Word(self.group, key) for key in self.keys]


def ball_size(group: GroupDescriptor, radius: int) -> int:
    """Number of words of length at most radius"""
    return group.ball_size(radius)


def ball(group: GroupDescriptor, radius: int, max_size: int = DEFAULT_MAX_BALL) -> Ball:
    """Enumerate the Cayley ball of a given radius

    Args:
        group (GroupDescriptor): Group
        radius (int): Radius (>= 0)
        max_size (int, optional): Largest ball that may be built

    Raises:
        BudgetExceeded: The ball is larger than max_size

    Returns:
        Ball: Indexed words
    """
    if radius < 0:
        raise ValueError(f"Radius must be non-negative: {radius}")

    size = group.ball_size(radius)
    if size > max_size:
        raise BudgetExceeded(
            f"Ball is too large: group={group}, radius={radius}, "
            f"size={size}, max={max_size}"
        )

    keys = tuple(key for sphere in group.spheres(radius) for key in sphere)
    logging.debug("Built ball: group=%s, radius=%s, size=%s", group, radius, size)
    return Ball(
        group=group,
        radius=radius,
        keys=keys,
        index={key: i for i, key in enumerate(keys)},
    )


def largest_radius(group: GroupDescriptor, radius: int, max_size: int) -> int:
    """Largest radius <= radius whose ball fits into max_size"""
    while radius > 0 and group.ball_size(radius) > max_size:
        radius -= 1
    return radius
