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
"""Search for averaging certificates"""

import dataclasses
import logging
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..algebra.codec import format_fraction
from ..errors import GroupMismatch, IdentityTarget
from ..groups import (
    FreeGroup,
    Word,
    ball,
    commutes,
    conjugate,
    in_amenable_radical,
    is_free_basis,
)
from .averaging import geometric_conjugators
from .certificate import Certificate
from .config import SearchConfig, Strategy
from .simplex import SimplexResult, minimize_simplex

AMENABLE_RADICAL = "amenable-radical"


@dataclasses.dataclass(frozen=True)
class NotFound:
    """No certificate was found within the budgets

    This is never a disproof unless `obstruction` is set: then every target
    average is provably at least `best` for all conjugators and weights.
    """

    best: Fraction
    epsilon: Fraction
    obstruction: Optional[str] = None
    conjugators: Tuple[Word, ...] = ()
    weights: Tuple[Fraction, ...] = ()
    attempts: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        return {
            "found": False,
            "best": format_fraction(self.best),
            "epsilon": format_fraction(self.epsilon),
            "obstruction": self.obstruction,
            "conjugators": [str(word) for word in self.conjugators],
            "weights": [format_fraction(weight) for weight in self.weights],
            "attempts": self.attempts,
        }


def _check_targets(targets: Union[Word, Sequence[Word]]) -> List[Word]:
    targets = [targets] if isinstance(targets, Word) else list(targets)
    if not targets:
        raise ValueError("At least one target is required")
    for target in targets:
        if target.group != targets[0].group:
            raise GroupMismatch(targets[0].group, target.group)
        if target.is_identity:
            raise IdentityTarget(f"Target must not be the identity: {target}")
    return targets


def _pool(targets: List[Word], cfg: SearchConfig) -> List[Word]:
    """Non identity words up to max_length in ball order"""
    words = ball(targets[0].group, cfg.max_length, cfg.bound.ball_cap).words()
    return [word for word in words if not word.is_identity]


def _geometric(targets: List[Word], cfg: SearchConfig) -> Iterator[List[Word]]:
    for seed in _pool(targets, cfg):
        if any(commutes(seed, target) for target in targets):
            continue
        for count in range(1, cfg.max_n + 1):
            yield geometric_conjugators(seed, count)


def _random_words(targets: List[Word], cfg: SearchConfig) -> Iterator[List[Word]]:
    pool = _pool(targets, cfg)
    rng = np.random.default_rng(cfg.seed)
    for count in range(1, min(cfg.max_n, len(pool)) + 1):
        picks = rng.choice(len(pool), size=count, replace=False)
        yield [pool[int(index)] for index in sorted(picks)]


def _independent(targets: List[Word], family: List[Word]) -> bool:
    for target in targets:
        conjugates = [conjugate(word, target) for word in family]
        if isinstance(target.group, FreeGroup):
            if not is_free_basis(conjugates):
                return False
        elif len(set(conjugates)) != len(conjugates):
            return False
    return True


def _exhaustive(targets: List[Word], cfg: SearchConfig) -> Iterator[List[Word]]:
    """Every word of the pool in ball order, growing one family

    A word joins the family when the conjugates of each target stay a free
    basis (distinct conjugates outside free groups). Every growth is yielded.
    """
    family: List[Word] = []
    for word in _pool(targets, cfg):
        if len(family) >= cfg.max_n:
            return
        if _independent(targets, family + [word]):
            family = family + [word]
            yield family


STRATEGIES = {
    Strategy.GEOMETRIC: _geometric,
    Strategy.RANDOM_WORDS: _random_words,
    Strategy.EXHAUSTIVE: _exhaustive,
}


def conjugator_pools(
    targets: Union[Word, Sequence[Word]], cfg: SearchConfig
) -> Iterator[List[Word]]:
    """Candidate conjugator families in the order they are tried"""
    return STRATEGIES[cfg.strategy](_check_targets(targets), cfg)


def _certificate(
    targets: List[Word],
    conjugators: List[Word],
    result: SimplexResult,
    cfg: SearchConfig,
) -> Certificate:
    kept = [
        (word, weight)
        for word, weight in zip(conjugators, result.weights)
        if weight != 0
    ]
    return Certificate(
        group=targets[0].group,
        targets=tuple(targets),
        conjugators=tuple(word for word, _ in kept),
        weights=tuple(weight for _, weight in kept),
        upper_bounds=result.upper_bounds,
        epsilon=cfg.epsilon,
        objective=cfg.objective,
        bound_config=cfg.bound,
    )


def search_certificate(
    targets: Union[Word, Sequence[Word]], cfg: SearchConfig = SearchConfig()
) -> Union[Certificate, NotFound]:
    """Find conjugators and weights averaging every target below epsilon

    Conjugator families are tried in the strategy's order and the weights
    are optimized jointly over all targets. The first family whose certified
    bounds are all below epsilon wins. The result only depends on the
    targets and the config.

    Args:
        targets (Word | Sequence[Word]): Targets t_j
        cfg (SearchConfig, optional): Search budgets

    Raises:
        IdentityTarget: A target is the identity

    Returns:
        Certificate | NotFound: Certificate or the best value found
    """
    targets = _check_targets(targets)

    radical = [target for target in targets if in_amenable_radical(target)]
    if radical and cfg.epsilon <= 1:
        # radical targets are central here, every average is exactly δ_t
        logging.info(
            "Targets lie in the amenable radical: %s", [str(t) for t in radical]
        )
        return NotFound(best=Fraction(1), epsilon=cfg.epsilon, obstruction=AMENABLE_RADICAL)

    best: Optional[Tuple[List[Word], SimplexResult]] = None
    attempts = 0
    for conjugators in STRATEGIES[cfg.strategy](targets, cfg):
        attempts += 1
        result = minimize_simplex(targets, conjugators, cfg, stop_below=cfg.epsilon)
        logging.debug(
            "Tried conjugators=%s, objective=%s",
            [str(word) for word in conjugators],
            float(result.objective),
        )
        if best is None or result.objective < best[1].objective:
            best = (conjugators, result)
        if result.objective < cfg.epsilon:
            certificate = _certificate(targets, conjugators, result, cfg)
            logging.info(
                "Found certificate: conjugators=%s, bound=%s, attempts=%s",
                len(certificate.conjugators),
                float(certificate.bound),
                attempts,
            )
            return certificate

    if best is None:
        logging.info("No conjugator family available for %s", [str(t) for t in targets])
        return NotFound(best=Fraction(1), epsilon=cfg.epsilon, attempts=attempts)

    conjugators, result = best
    logging.info(
        "No certificate found: best=%s, epsilon=%s, attempts=%s",
        float(result.objective),
        float(cfg.epsilon),
        attempts,
    )
    return NotFound(
        best=result.objective,
        epsilon=cfg.epsilon,
        conjugators=tuple(conjugators),
        weights=result.weights,
        attempts=attempts,
    )
