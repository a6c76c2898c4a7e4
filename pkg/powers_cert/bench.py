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
"""Acceptance suites with machine readable results"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Any, Callable, Dict, List

import numpy as np

from .algebra import adjoint, element, parse_element
from .groups import ball, parse_group, parse_word
from .norms import certified_upper, estimate, quick_estimate
from .powers import (
    Certificate,
    SearchConfig,
    conjugate_average,
    dixmier_average,
    search_certificate,
    verify_certificate,
)
from .reports import Stopwatch

SLACK = 1e-9


@dataclasses.dataclass
class SuiteResult:
    """Outcome of one acceptance suite"""

    name: str
    passed: bool
    checks: Dict[str, Any]
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """JSON compatible form"""
        return dataclasses.asdict(self)


def suite_kesten(cfg: SearchConfig) -> Dict[str, Any]:
    """Kesten element of F2 brackets √3/2"""
    group = parse_group("F2")
    result = estimate(parse_element("(1/4)(a+A+b+B)", group), cfg.bound)
    oracle = math.sqrt(3) / 2
    return {
        "passed": result.lower >= 0.86
        and result.upper <= 0.92
        and result.width <= 0.05
        and result.contains(oracle),
        "estimate": result.to_dict(),
        "oracle": oracle,
    }


def suite_two_generator(cfg: SearchConfig) -> Dict[str, Any]:
    """δa + δb brackets 2"""
    group = parse_group("F2")
    result = estimate(parse_element("a+b", group), cfg.bound)
    return {
        "passed": result.contains(2.0) and result.width <= 0.1,
        "estimate": result.to_dict(),
        "oracle": 2.0,
    }


def suite_certificate(cfg: SearchConfig) -> Dict[str, Any]:
    """Generator a of F2 averaged below 0.95 and 0.6"""
    target = parse_word("a", parse_group("F2"))
    checks = {}
    passed = True
    for epsilon, max_conjugators in ((Fraction(19, 20), 4), (Fraction(3, 5), 12)):
        result = search_certificate([target], cfg.replace(epsilon=epsilon))
        found = isinstance(result, Certificate)
        ok = (
            found
            and len(result.conjugators) <= max_conjugators
            and verify_certificate(result)
        )
        checks[str(epsilon)] = result.to_dict()
        passed = passed and ok
    return {"passed": passed, "results": checks}


def suite_multi_target(cfg: SearchConfig) -> Dict[str, Any]:
    """One conjugator family for a, b and ab"""
    group = parse_group("F2")
    targets = [parse_word(text, group) for text in ("a", "b", "ab")]
    result = search_certificate(targets, cfg.replace(epsilon=Fraction(19, 20)))
    found = isinstance(result, Certificate)
    return {
        "passed": found and verify_certificate(result),
        "result": result.to_dict(),
    }


def suite_radical(cfg: SearchConfig) -> Dict[str, Any]:
    """Central target of F2xZ can not be averaged"""
    group = parse_group("F2xZ")
    target = parse_word("e|(1)", group)
    conjugators = ball(group, 2, cfg.bound.ball_cap).words()
    weights = [Fraction(1, len(conjugators))] * len(conjugators)
    average = conjugate_average([target], conjugators, weights).per_target[0]
    upper, _ = certified_upper(average, cfg.bound)
    result = search_certificate([target], cfg.replace(epsilon=Fraction(99, 100)))
    return {
        "passed": average == element(group, [(target, 1)])
        and upper == 1
        and not isinstance(result, Certificate)
        and result.best == 1,
        "upper": str(upper),
        "result": result.to_dict(),
    }


def suite_cone(cfg: SearchConfig, count: int = 1000) -> Dict[str, Any]:
    """Bracket inequalities of positive combinations

    lb(x) <= ub(x + y), lb(x) <= ub(x + x*) and lb(x + x*) <= 2 ub(x)
    """
    group = parse_group("F2")
    words = [word for word in ball(group, 2).words() if not word.is_identity]
    rng = np.random.default_rng(cfg.seed)
    bound = cfg.bound

    def random_positive():
        size = int(rng.integers(1, 5))
        picks = rng.choice(len(words), size=size, replace=False)
        return element(
            group,
            [
                (words[int(i)], Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9))))
                for i in picks
            ],
        )

    failures: List[str] = []
    for _ in range(count):
        x, y = random_positive(), random_positive()
        symmetric = x + adjoint(x)
        lower_x = quick_estimate(x, bound, 3).lower
        checks = (
            ("x<=x+y", lower_x, float(certified_upper(x + y, bound)[0])),
            ("x<=x+x*", lower_x, float(certified_upper(symmetric, bound)[0])),
            (
                "x+x*<=2x",
                quick_estimate(symmetric, bound, 3).lower,
                2 * float(certified_upper(x, bound)[0]),
            ),
        )
        for name, left, right in checks:
            if left > right + SLACK:
                failures.append(f"{name}: {left} > {right}")
    return {"passed": not failures, "count": count, "failures": failures[:10]}


def suite_dixmier(cfg: SearchConfig) -> Dict[str, Any]:
    """a + a^-1 averaged below 1/2, central elements stay at distance 1"""
    free = parse_group("F2")
    report = dixmier_average(parse_element("a+A", free), cfg.replace(epsilon=Fraction(1, 2)))
    product = parse_group("F2xZ")
    central = dixmier_average(
        parse_element("e|(1)", product), cfg.replace(epsilon=Fraction(1, 2))
    )
    return {
        "passed": report.success
        and not central.success
        and central.distance == 1,
        "free": report.to_dict(),
        "central": central.to_dict(),
    }


SUITES: Dict[str, Callable[[SearchConfig], Dict[str, Any]]] = {
    "kesten": suite_kesten,
    "two-generator": suite_two_generator,
    "certificate": suite_certificate,
    "multi-target": suite_multi_target,
    "radical": suite_radical,
    "cone": suite_cone,
    "dixmier": suite_dixmier,
}


def suite_names() -> List[str]:
    """Names accepted by run_suites"""
    return list(SUITES) + ["all"]


def run_suites(name: str = "all", cfg: SearchConfig = SearchConfig()) -> List[SuiteResult]:
    """Run one suite (or all) and collect the results

    Raises:
        KeyError: Unknown suite name
    """
    names = list(SUITES) if name == "all" else [name]
    for item in names:
        if item not in SUITES:
            raise KeyError(f"Unknown suite: {item}")

    results = []
    for item in names:
        timer = Stopwatch(f"Suite {item}").start()
        checks = SUITES[item](cfg)
        timer.stop()
        passed = bool(checks.pop("passed"))
        logging.info("Suite %s: passed=%s", item, passed)
        results.append(SuiteResult(item, passed, checks, round(timer.last_duration, 3)))
    return results


def format_table(results: List[SuiteResult]) -> str:
    """Plain text pass/fail table"""
    width = max([len("suite")] + [len(result.name) for result in results])
    lines = [f"{'suite':<{width}}  result  seconds"]
    for result in results:
        status = "pass" if result.passed else "FAIL"
        lines.append(f"{result.name:<{width}}  {status:<6}  {result.wall_time:.3f}")
    return "\n".join(lines)

