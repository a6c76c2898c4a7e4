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
"""Finitely generated subgroups of free groups (Stallings folding)"""

from typing import Dict, List, Sequence

from ..errors import GroupMismatch, WrongBackend
from .words import Word


class FoldedGraph:
    """Labelled graph of a subgroup of a free group.

    Every generating word is attached as a loop at the base vertex 0 and the
    graph is folded on the fly, so at any time no vertex has two outgoing
    edges with the same letter.
    """

    def __init__(self) -> None:
        self._parent: List[int] = [0]
        self._size: List[int] = [1]
        self._edges: List[Dict[int, int]] = [{}]

    def _new_vertex(self) -> int:
        self._parent.append(len(self._parent))
        self._size.append(1)
        self._edges.append({})
        return len(self._parent) - 1

    def find(self, vertex: int) -> int:
        """Representative of a vertex"""
        while self._parent[vertex] != vertex:
            self._parent[vertex] = self._parent[self._parent[vertex]]
            vertex = self._parent[vertex]
        return vertex

    def _set_edge(self, source: int, letter: int, target: int, pending: list):
        source = self.find(source)
        existing = self._edges[source].get(letter)
        if existing is None:
            self._edges[source][letter] = target
        elif self.find(existing) != self.find(target):
            pending.append((existing, target))

    def _union(self, left: int, right: int, pending: list):
        left, right = self.find(left), self.find(right)
        if left == right:
            return
        if self._size[left] < self._size[right]:
            left, right = right, left
        self._parent[right] = left
        self._size[left] += self._size[right]
        moved, self._edges[right] = self._edges[right], {}
        for letter, target in moved.items():
            self._set_edge(left, letter, target, pending)

    def add_edge(self, source: int, letter: int, target: int) -> None:
        """Add an edge (and its reverse) and fold"""
        pending: list = []
        self._set_edge(source, letter, target, pending)
        self._set_edge(target, letter ^ 1, source, pending)
        while pending:
            left, right = pending.pop()
            self._union(left, right, pending)

    def add_loop(self, letters: Sequence[int]) -> None:
        """Attach a loop at the base vertex reading the given letters"""
        current = 0
        for pos, letter in enumerate(letters):
            target = 0 if pos == len(letters) - 1 else self._new_vertex()
            self.add_edge(current, letter, target)
            current = target

    @property
    def rank(self) -> int:
        """Rank of the fundamental group (E - V + 1)"""
        roots = [v for v in range(len(self._parent)) if self.find(v) == v]
        edges = sum(len(self._edges[v]) for v in roots) // 2
        return edges - len(roots) + 1


def subgroup_rank(words: Sequence[Word]) -> int:
    """Rank of the subgroup generated by words of a free group"""
    if not words:
        return 0
    group = words[0].group
    if not group.is_free:
        raise WrongBackend(f"Subgroup rank is only available for free groups: {group}")

    graph = FoldedGraph()
    for word in words:
        if word.group != group:
            raise GroupMismatch(group, word.group)
        if word.key:
            graph.add_loop(word.key)
    return graph.rank


def is_free_basis(words: Sequence[Word]) -> bool:
    """Words freely generate the subgroup they generate.

    A generating set of a free group of rank r with exactly r elements is a
    basis, so it suffices to compare the rank of the folded graph.
    """
    if not words or any(word.is_identity for word in words):
        return False
    if len(set(words)) != len(words):
        return False
    return subgroup_rank(words) == len(words)
