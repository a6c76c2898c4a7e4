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
"""Group backends"""

from .ball import Ball, ball, ball_size, largest_radius
from .descriptor import (
    ALPHABET,
    MAX_PRODUCT_DEPTH,
    DirectProduct,
    FreeAbelian,
    FreeGroup,
    GroupDescriptor,
    format_group,
    parse_group,
)
from .subgroups import is_free_basis, subgroup_rank
from .words import (
    Word,
    commutes,
    conjugate,
    format_word,
    generators,
    identity,
    in_amenable_radical,
    inv,
    is_central,
    mul,
    parse_word,
    power,
    reduce,
)
