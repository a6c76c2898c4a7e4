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
"""Rewriting free group elements onto a free basis of their support

If the non-identity support of a (one word of every inverse pair) freely
generates a subgroup H of rank m, then a lives in CH ≅ CF_m and has the same
reduced norm there: λ_G restricted to H is a multiple of λ_H.
"""

import logging
from typing import Optional

from ..algebra import AlgebraElement
from ..groups import FreeGroup, Word, is_free_basis


def free_basis_transfer(value: AlgebraElement) -> Optional[AlgebraElement]:
    """Rewrite an element onto the free basis formed by its support

    Returns:
        Optional[AlgebraElement]: Element of F_m with degree 1, or None when
            the support is not a free basis or nothing would be gained
    """
    group = value.group
    if not group.is_free:
        return None

    inv_key = group.inv_key
    representatives = []
    seen = set()
    for key, _ in value.items():
        if not key or key in seen:
            continue
        representatives.append(key)
        seen.add(key)
        seen.add(inv_key(key))

    if not representatives or max(len(key) for key in representatives) <= 1:
        return None
    if not is_free_basis([Word(group, key) for key in representatives]):
        return None

    target = FreeGroup(len(representatives))
    mapping = {(): ()}
    for index, key in enumerate(representatives):
        mapping[key] = (2 * index,)
        mapping[inv_key(key)] = (2 * index + 1,)

    logging.debug("Free basis transfer: %s -> %s", group, target)
    return AlgebraElement(
        target, {mapping[key]: coeff for key, coeff in value.terms.items()}, value.mode
    )
