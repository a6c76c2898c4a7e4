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
"""Certified bounds on reduced group C*-algebra norms"""

from .config import BoundConfig
from .estimate import (
    FREE_BASIS,
    NormEstimate,
    certified_upper,
    estimate,
    quick_estimate,
    zero_estimate,
)
from .lower import (
    FLOAT_SHAVE,
    PowerIteration,
    TranslationOperator,
    lower_bound_moments,
    lower_bound_power,
    lower_bound_radial,
    moment_traces,
    power_iteration,
    radial_profile,
)
from .roots import float_down, float_up, root_lower, root_upper, sqrt_lower, sqrt_upper
from .transfer import free_basis_transfer
from .upper import (
    l1_power_bounds,
    upper_bound_haagerup,
    upper_bound_l1,
    upper_bound_l1_power,
    upper_bound_schur,
)
