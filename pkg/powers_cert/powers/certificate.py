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
"""Exactly re-checkable averaging certificates"""

import dataclasses
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Tuple, Union

from ..algebra.codec import format_fraction, parse_fraction
from ..errors import PowersCertError, MalformedCertificate, WeightError
from ..groups import GroupDescriptor, Word, format_group, parse_group, parse_word
from ..norms import BoundConfig, certified_upper
from .averaging import check_weights, conjugate_average
from .config import Objective

SCHEMA = "powers-cert/1"


@dataclasses.dataclass(frozen=True)
class Certificate:
    """Conjugators and convex weights averaging every target below epsilon

    `upper_bounds` are the certified bounds of the averaged targets (all equal
    to the bound of the combined element for the summed objective).
    """

    # pylint: disable=too-many-instance-attributes

    group: GroupDescriptor
    targets: Tuple[Word, ...]
    conjugators: Tuple[Word, ...]
    weights: Tuple[Fraction, ...]
    upper_bounds: Tuple[Fraction, ...]
    epsilon: Fraction
    objective: Objective = Objective.PER_TARGET
    bound_config: BoundConfig = BoundConfig()

    @property
    def bound(self) -> Fraction:
        """Largest certified upper bound"""
        return max(self.upper_bounds)

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form, rationals as "p/q" strings"""
        return {
            "schema": SCHEMA,
            "group": format_group(self.group),
            "targets": [str(word) for word in self.targets],
            "conjugators": [str(word) for word in self.conjugators],
            "weights": [format_fraction(weight) for weight in self.weights],
            "upper_bounds": [format_fraction(bound) for bound in self.upper_bounds],
            "epsilon": format_fraction(self.epsilon),
            "objective": self.objective.value,
            "bound_config": self.bound_config.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        """Build from the JSON form

        Raises:
            MalformedCertificate: Schema, words or weights are invalid
        """
        if not isinstance(data, dict):
            raise MalformedCertificate("Certificate must be a JSON object")
        if data.get("schema") != SCHEMA:
            raise MalformedCertificate(
                f"Unsupported certificate schema: {data.get('schema')!r}"
            )
        try:
            group = parse_group(data["group"])
            targets = tuple(parse_word(text, group) for text in data["targets"])
            conjugators = tuple(parse_word(text, group) for text in data["conjugators"])
            weights = tuple(parse_fraction(value) for value in data["weights"])
            upper_bounds = tuple(parse_fraction(value) for value in data["upper_bounds"])
            certificate = cls(
                group=group,
                targets=targets,
                conjugators=conjugators,
                weights=weights,
                upper_bounds=upper_bounds,
                epsilon=parse_fraction(data["epsilon"]),
                objective=Objective(data.get("objective", Objective.PER_TARGET.value)),
                bound_config=BoundConfig.from_dict(data.get("bound_config", {})),
            )
        except (KeyError, TypeError, ValueError, PowersCertError) as ex:
            raise MalformedCertificate(f"Invalid certificate: {ex}") from ex
        check_certificate(certificate)
        return certificate


def check_certificate(certificate: Certificate) -> None:
    """Check that a certificate is well formed

    Raises:
        MalformedCertificate: Weights, targets or groups are invalid
    """
    if not certificate.targets:
        raise MalformedCertificate("Certificate has no targets")
    if not certificate.conjugators:
        raise MalformedCertificate("Certificate has no conjugators")
    for word in certificate.targets + certificate.conjugators:
        if word.group != certificate.group:
            raise MalformedCertificate(
                f"Word {word} belongs to {word.group}, not to {certificate.group}"
            )
    if any(target.is_identity for target in certificate.targets):
        raise MalformedCertificate("Targets must not be the identity")
    if len(certificate.upper_bounds) != len(certificate.targets):
        raise MalformedCertificate(
            f"Expected {len(certificate.targets)} upper bounds, "
            f"got {len(certificate.upper_bounds)}"
        )
    if not certificate.epsilon > 0:
        raise MalformedCertificate(f"Epsilon must be positive: {certificate.epsilon}")
    try:
        check_weights(certificate.weights, len(certificate.conjugators))
    except WeightError as ex:
        raise MalformedCertificate(str(ex)) from ex


def recompute_bounds(certificate: Certificate) -> Tuple[Fraction, ...]:
    """Certified upper bounds recomputed from the certificate's inputs only"""
    check_certificate(certificate)
    average = conjugate_average(
        certificate.targets, certificate.conjugators, certificate.weights
    )
    if certificate.objective == Objective.SUMMED:
        bound, _ = certified_upper(average.combined, certificate.bound_config)
        return tuple(bound for _ in certificate.targets)
    return tuple(
        certified_upper(value, certificate.bound_config)[0]
        for value in average.per_target
    )


def verify_certificate(certificate: Certificate) -> bool:
    """Recompute every bound from scratch and compare it to epsilon

    Raises:
        MalformedCertificate: The certificate is not well formed

    Returns:
        bool: True if every recomputed bound is below epsilon
    """
    bounds = recompute_bounds(certificate)
    valid = all(bound < certificate.epsilon for bound in bounds)
    logging.info(
        "Verified certificate: valid=%s, bounds=%s, epsilon=%s",
        valid,
        [format_fraction(bound) for bound in bounds],
        format_fraction(certificate.epsilon),
    )
    return valid


def dumps_certificate(certificate: Certificate) -> str:
    """Certificate as JSON text"""
    return json.dumps(certificate.to_dict(), indent=2, sort_keys=True)


def loads_certificate(text: str) -> Certificate:
    """Certificate from JSON text

    Raises:
        MalformedCertificate: Invalid JSON or schema
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise MalformedCertificate(f"Invalid JSON: {ex}") from ex
    return Certificate.from_dict(data)


def save_certificate(certificate: Certificate, path: Union[str, Path]) -> None:
    """Write a certificate to a file"""
    Path(path).write_text(dumps_certificate(certificate) + "\n", encoding="utf8")


def load_certificate(path: Union[str, Path]) -> Certificate:
    """Read a certificate from a file"""
    return loads_certificate(Path(path).read_text(encoding="utf8"))
