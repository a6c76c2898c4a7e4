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
"""Averaging certificates and Dixmier averaging"""

from .averaging import (
    ConjugateAverage,
    check_weights,
    conjugate_average,
    geometric_conjugators,
)
from .certificate import (
    SCHEMA,
    Certificate,
    check_certificate,
    dumps_certificate,
    load_certificate,
    loads_certificate,
    recompute_bounds,
    save_certificate,
    verify_certificate,
)
from .config import Objective, SearchConfig, Strategy
from .dixmier import DixmierReport, dixmier_average, dixmier_pool
from .parallel import evaluate
from .search import AMENABLE_RADICAL, NotFound, conjugator_pools, search_certificate
from .simplex import SimplexResult, minimize_simplex, snap_weights
