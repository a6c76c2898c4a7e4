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
"""Search budgets"""

import dataclasses
import enum
from fractions import Fraction
from typing import Any, Dict

from ..algebra.codec import format_fraction, parse_fraction
from ..norms import BoundConfig


class Strategy(str, enum.Enum):
    """Conjugator pool strategy"""

    GEOMETRIC = "geometric"
    RANDOM_WORDS = "random-words"
    EXHAUSTIVE = "exhaustive"


class Objective(str, enum.Enum):
    """What a certificate bounds.

    per-target: every averaged target A_j separately.
    summed: the combined element Σ_j A_j, which bounds every A_j since the
    A_j are positive combinations inside the same cone.
    """

    PER_TARGET = "per-target"
    SUMMED = "summed"


@dataclasses.dataclass(frozen=True)
class SearchConfig:
    """Budgets of a certificate search or a Dixmier averaging run"""

    # pylint: disable=too-many-instance-attributes

    epsilon: Fraction = Fraction(1, 2)
    strategy: Strategy = Strategy.GEOMETRIC
    max_n: int = 16
    max_length: int = 3
    fw_iterations: int = 10
    gradient_radius: int = 6
    gradient_iterations: int = 50
    snap_denominator: int = 10**6
    objective: Objective = Objective.PER_TARGET
    seed: int = 0
    threads: int = 1
    max_steps: int = 12
    dixmier_length: int = 2
    dixmier_powers: int = 8
    bound: BoundConfig = BoundConfig()

    def __post_init__(self):
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "objective", Objective(self.objective))
        if not self.epsilon > 0:
            raise ValueError(f"Epsilon must be positive: {self.epsilon}")
        for name in (
            "max_n",
            "max_length",
            "fw_iterations",
            "gradient_iterations",
            "snap_denominator",
            "threads",
            "max_steps",
            "dixmier_length",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"Budget must be positive: {name}={getattr(self, name)}")
        if self.gradient_radius < 0 or self.dixmier_powers < 0:
            raise ValueError("Budgets must not be negative")

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        data = dataclasses.asdict(self)
        data["epsilon"] = format_fraction(self.epsilon)
        data["strategy"] = self.strategy.value
        data["objective"] = self.objective.value
        data["bound"] = self.bound.to_dict()
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchConfig":
        """Build from a dictionary (unknown keys are ignored)"""
        names = {field.name for field in dataclasses.fields(cls)}
        values = {key: value for key, value in data.items() if key in names}
        if "epsilon" in values:
            values["epsilon"] = parse_fraction(values["epsilon"])
        if "bound" in values:
            values["bound"] = BoundConfig.from_dict(values["bound"])
        return cls(**values)

    def replace(self, **changes) -> "SearchConfig":
        """Copy with changed budgets"""
        return dataclasses.replace(self, **changes)
