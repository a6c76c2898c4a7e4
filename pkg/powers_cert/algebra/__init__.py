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
"""Group ring arithmetic"""

from .codec import (
    dumps_element,
    element_from_dict,
    element_to_dict,
    format_fraction,
    loads_element,
    parse_fraction,
)
from .element import (
    DEFAULT_SUPPORT_CAP,
    AlgebraElement,
    Mode,
    add,
    adjoint,
    conjugate_by,
    convolve,
    convolve_terms,
    delta,
    element,
    integer_scaled,
    is_nonnegative,
    l1,
    l2,
    l2_squared,
    restrict_length,
    scale,
    to_exact,
    to_float,
    trace,
    zero,
)
from .grammar import parse_element
