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
"""Errors raised by the library"""

from typing import Any, Optional


class PowersCertError(Exception):
    """Base class for all powers-cert errors"""


class InvalidGenerator(PowersCertError):
    """Letter references a generator outside of the group's rank"""

    def __init__(self, letter: Any, rank: int) -> None:
        self.letter = letter
        self.rank = rank
        super().__init__(f"Invalid generator: letter={letter!r}, rank={rank}")


class InvalidDescriptor(PowersCertError):
    """Group descriptor is not supported"""


class GroupMismatch(PowersCertError):
    """Operands belong to different groups"""

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"Group mismatch: {left} != {right}")


class ModeMismatch(PowersCertError):
    """Operands use different scalar modes"""


class ParseError(PowersCertError):
    """Text could not be parsed"""

    def __init__(self, text: str, reason: str, position: Optional[int] = None) -> None:
        self.text = text
        self.reason = reason
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"Could not parse {text!r}{where}: {reason}")


class BudgetExceeded(PowersCertError):
    """A configured budget was exceeded.

    The partial result computed before the budget was hit (if any) is
    available via the `partial` attribute.
    """

    def __init__(self, message: str, partial: Any = None) -> None:
        self.partial = partial
        super().__init__(message)


class WrongBackend(PowersCertError):
    """Operation is not available for the group backend"""


class WeightError(PowersCertError):
    """Weights do not form a convex combination"""


class IdentityTarget(PowersCertError):
    """The identity was given as a target"""


class IdentityGenerator(PowersCertError):
    """The identity was given as a generator of a conjugator schedule"""


class MalformedCertificate(PowersCertError):
    """Certificate is not well-formed"""
