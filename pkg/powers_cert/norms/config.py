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
"""Budgets for norm bounds"""

import dataclasses
from typing import Any, Dict

from ..groups.ball import DEFAULT_MAX_BALL
from ..algebra.element import DEFAULT_SUPPORT_CAP


@dataclasses.dataclass(frozen=True)
class BoundConfig:
    """Budgets of a norm estimate.

    Attributes:
        radius: Ball radius used to truncate power iteration vectors
        max_iterations: Power iteration steps
        moment_depth: Largest trace moment m of (a*a)^m
        power_depth: Largest k of the l1 bound of (a*a)^(2^k)
        seed: Seed of the start vector noise
        tolerance: Relative change that stops the power iteration
        radial_radius: Number of spheres in the radial compression
        support_cap: Largest support of an exact convolution
        work_cap: Largest number of term products of one exact convolution
        ball_cap: Largest ball that may be enumerated
        schur_cap: Largest (ball size x support) of a weighted Schur test
        strict: Fail instead of shrinking budgets that do not fit the caps
    """

    # pylint: disable=too-many-instance-attributes

    radius: int = 8
    max_iterations: int = 200
    moment_depth: int = 10
    power_depth: int = 3
    seed: int = 0
    tolerance: float = 1e-10
    radial_radius: int = 64
    support_cap: int = DEFAULT_SUPPORT_CAP
    work_cap: int = 20_000_000
    ball_cap: int = DEFAULT_MAX_BALL
    schur_cap: int = 250_000
    strict: bool = False

    def __post_init__(self):
        for name in (
            "max_iterations",
            "moment_depth",
            "support_cap",
            "work_cap",
            "ball_cap",
            "schur_cap",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"Budget must be positive: {name}={getattr(self, name)}")
        for name in ("radius", "power_depth", "radial_radius"):
            if getattr(self, name) < 0:
                raise ValueError(
                    f"Budget must not be negative: {name}={getattr(self, name)}"
                )
        if not self.tolerance > 0:
            raise ValueError(f"Tolerance must be positive: {self.tolerance}")

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundConfig":
        """Build from a dictionary (unknown keys are ignored)"""
        names = {field.name for field in dataclasses.fields(cls)}
        return cls(**{key: value for key, value in data.items() if key in names})

    def replace(self, **changes) -> "BoundConfig":
        """Copy with changed budgets"""
        return dataclasses.replace(self, **changes)
