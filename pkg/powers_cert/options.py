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
"""Options"""

import functools
import logging
import os
from fractions import Fraction
from typing import Any

import click

from .bench import suite_names
from .env import loadenv
from .errors import InvalidDescriptor, ParseError
from .groups import parse_group
from .norms import BoundConfig
from .powers import Objective, SearchConfig, Strategy

BOUND_DEFAULTS = BoundConfig()
SEARCH_DEFAULTS = SearchConfig()


def load_envfile(ctx: click.Context, _param: click.Parameter, value: Any):
    """Load environment variables from a file

    Args:
        ctx (click.Context): Click context
        _param (click.Parameter): Click parameter
        value (Any): Parameter value
    """
    if not value or ctx.resilient_parsing:
        return value

    click.echo(f"Loading env-file: {value}", err=True)
    if os.path.exists(value) and os.path.isfile(value):
        loadenv(value)
    else:
        logging.info("env file does not exist or is not a file: %s", value)
    return value


def validate_group(ctx: click.Context, _param, value) -> Any:
    """Parse a group descriptor such as F2, Z3 or F2xZ

    Args:
        ctx (Any): Click context
        _param (Any): Click param
        value (Any): Parameter value

    Returns:
        Any: Group descriptor
    """
    if value is None or ctx.resilient_parsing:
        return value
    try:
        return parse_group(value)
    except (InvalidDescriptor, ParseError) as ex:
        raise click.BadParameter(str(ex)) from ex


def validate_fraction(ctx: click.Context, _param, value) -> Any:
    """Parse an exact positive rational such as 0.95 or 19/20

    Args:
        ctx (Any): Click context
        _param (Any): Click param
        value (Any): Parameter value

    Returns:
        Any: Fraction
    """
    if value is None or ctx.resilient_parsing:
        return value
    try:
        result = Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as ex:
        raise click.BadParameter(f"Expected a rational, got {value!r}") from ex
    if result <= 0:
        raise click.BadParameter(f"Must be positive: {value}")
    return result


def split_targets(ctx: click.Context, _param, value) -> Any:
    """Split semicolon separated targets (commas are used by abelian words)

    Args:
        ctx (Any): Click context
        _param (Any): Click param
        value (Any): Parameter value

    Returns:
        Any: Tuple of target texts
    """
    if not value or ctx.resilient_parsing:
        return value
    return tuple(
        part.strip() for item in value for part in item.split(";") if part.strip()
    )


GROUP = click.option(
    "--group",
    "-g",
    "group",
    envvar="POWERS_CERT_GROUP",
    default="F2",
    show_default=True,
    show_envvar=True,
    callback=validate_group,
    help="Group descriptor, e.g. F2, Z, Z3 or F2xZ",
)

ELEMENT = click.option(
    "--element",
    "-e",
    "element",
    type=str,
    required=False,
    help="Group ring element, e.g. '(1/4)(a+A+b+B)'",
)

ELEMENT_FILE = click.option(
    "--element-file",
    "element_file",
    type=click.Path(exists=True, dir_okay=False),
    required=False,
    help="File with an element (inline text or element JSON)",
)

TARGETS = click.option(
    "--targets",
    "-t",
    "targets",
    multiple=True,
    required=True,
    callback=split_targets,
    help="Target words. Repeat the option or separate them with ';'",
)

OUTPUT = click.option(
    "--output",
    "-o",
    "output",
    type=click.Path(dir_okay=False, writable=True),
    required=False,
    help="Also write the certificate (search) or report (other commands) to a file",
)

RADIUS = click.option(
    "--radius",
    "-r",
    type=click.IntRange(0),
    envvar="POWERS_CERT_RADIUS",
    default=BOUND_DEFAULTS.radius,
    show_default=True,
    show_envvar=True,
    help="Ball radius of the power iteration lower bound",
)

MAX_ITERATIONS = click.option(
    "--max-iterations",
    "--iters",
    "max_iterations",
    type=click.IntRange(1),
    envvar="POWERS_CERT_MAX_ITERATIONS",
    default=BOUND_DEFAULTS.max_iterations,
    show_default=True,
    show_envvar=True,
    help="Power iteration steps",
)

MOMENT_DEPTH = click.option(
    "--moment-depth",
    "--moments",
    "moment_depth",
    type=click.IntRange(1),
    envvar="POWERS_CERT_MOMENT_DEPTH",
    default=BOUND_DEFAULTS.moment_depth,
    show_default=True,
    show_envvar=True,
    help="Largest trace moment m of (a*a)^m",
)

POWER_DEPTH = click.option(
    "--power-depth",
    "--powers",
    "power_depth",
    type=click.IntRange(0),
    envvar="POWERS_CERT_POWER_DEPTH",
    default=BOUND_DEFAULTS.power_depth,
    show_default=True,
    show_envvar=True,
    help="Largest k of the l1 bound of (a*a)^(2^k)",
)

SEED = click.option(
    "--seed",
    type=int,
    envvar="POWERS_CERT_SEED",
    default=BOUND_DEFAULTS.seed,
    show_default=True,
    show_envvar=True,
    help="Random seed (start vectors and random conjugator pools)",
)

TOLERANCE = click.option(
    "--tolerance",
    "--tol",
    "tolerance",
    type=click.FloatRange(0, min_open=True),
    envvar="POWERS_CERT_TOLERANCE",
    default=BOUND_DEFAULTS.tolerance,
    show_default=True,
    show_envvar=True,
    help="Relative change that stops the power iteration",
)

RADIAL_RADIUS = click.option(
    "--radial-radius",
    type=click.IntRange(0),
    envvar="POWERS_CERT_RADIAL_RADIUS",
    default=BOUND_DEFAULTS.radial_radius,
    show_default=True,
    show_envvar=True,
    help="Number of spheres of the radial compression lower bound",
)

SUPPORT_CAP = click.option(
    "--support-cap",
    type=click.IntRange(1),
    envvar="POWERS_CERT_SUPPORT_CAP",
    default=BOUND_DEFAULTS.support_cap,
    show_default=True,
    show_envvar=True,
    help="Largest support of an exact product",
)

WORK_CAP = click.option(
    "--work-cap",
    type=click.IntRange(1),
    envvar="POWERS_CERT_WORK_CAP",
    default=BOUND_DEFAULTS.work_cap,
    show_default=True,
    show_envvar=True,
    help="Largest number of term products of one exact product",
)

BALL_CAP = click.option(
    "--ball-cap",
    type=click.IntRange(1),
    envvar="POWERS_CERT_BALL_CAP",
    default=BOUND_DEFAULTS.ball_cap,
    show_default=True,
    show_envvar=True,
    help="Largest ball that may be enumerated",
)

STRICT = click.option(
    "--strict",
    envvar="POWERS_CERT_STRICT",
    is_flag=True,
    default=False,
    show_envvar=True,
    help="Fail with exit code 3 instead of shrinking budgets that do not fit",
)

EPSILON = click.option(
    "--epsilon",
    envvar="POWERS_CERT_EPSILON",
    default=str(SEARCH_DEFAULTS.epsilon),
    show_default=True,
    show_envvar=True,
    callback=validate_fraction,
    help="Bound to certify, as a decimal or p/q",
)

STRATEGY = click.option(
    "--strategy",
    type=click.Choice([item.value for item in Strategy]),
    envvar="POWERS_CERT_STRATEGY",
    default=SEARCH_DEFAULTS.strategy.value,
    show_default=True,
    show_envvar=True,
    help="Conjugator pool strategy",
)

MAX_N = click.option(
    "--max-n",
    type=click.IntRange(1),
    envvar="POWERS_CERT_MAX_N",
    default=SEARCH_DEFAULTS.max_n,
    show_default=True,
    show_envvar=True,
    help="Largest number of conjugators",
)

MAX_LENGTH = click.option(
    "--max-length",
    type=click.IntRange(1),
    envvar="POWERS_CERT_MAX_LENGTH",
    default=SEARCH_DEFAULTS.max_length,
    show_default=True,
    show_envvar=True,
    help="Largest length of pool words",
)

FW_ITERATIONS = click.option(
    "--fw-iterations",
    type=click.IntRange(1),
    envvar="POWERS_CERT_FW_ITERATIONS",
    default=SEARCH_DEFAULTS.fw_iterations,
    show_default=True,
    show_envvar=True,
    help="Frank-Wolfe iterations per conjugator family",
)

GRADIENT_RADIUS = click.option(
    "--gradient-radius",
    type=click.IntRange(0),
    envvar="POWERS_CERT_GRADIENT_RADIUS",
    default=SEARCH_DEFAULTS.gradient_radius,
    show_default=True,
    show_envvar=True,
    help="Ball radius of the Frank-Wolfe gradient",
)

OBJECTIVE = click.option(
    "--objective",
    type=click.Choice([item.value for item in Objective]),
    envvar="POWERS_CERT_OBJECTIVE",
    default=SEARCH_DEFAULTS.objective.value,
    show_default=True,
    show_envvar=True,
    help="Certify every averaged target or their sum",
)

THREADS = click.option(
    "--threads",
    type=click.IntRange(1),
    envvar="POWERS_CERT_THREADS",
    default=SEARCH_DEFAULTS.threads,
    show_default=True,
    show_envvar=True,
    help="Worker threads for candidate evaluation",
)

MAX_STEPS = click.option(
    "--max-steps",
    type=click.IntRange(1),
    envvar="POWERS_CERT_MAX_STEPS",
    default=SEARCH_DEFAULTS.max_steps,
    show_default=True,
    show_envvar=True,
    help="Largest number of Dixmier averaging steps",
)

DIXMIER_POWERS = click.option(
    "--dixmier-powers",
    type=click.IntRange(0),
    envvar="POWERS_CERT_DIXMIER_POWERS",
    default=SEARCH_DEFAULTS.dixmier_powers,
    show_default=True,
    show_envvar=True,
    help="Generator powers g^(2^p), p < N, added to the Dixmier pool",
)

LOGGING_VERBOSE = click.option(
    "--verbose",
    "-v",
    envvar="POWERS_CERT_VERBOSE",
    is_flag=True,
    default=False,
    show_envvar=True,
    help="Print Debug Information into the Logs and Console when set",
)

ENV_FILE = click.option(
    "--env-file",
    "env_file",
    envvar="POWERS_CERT_ENV_FILE",
    is_eager=True,
    expose_value=True,
    show_envvar=True,
    type=click.Path(
        exists=True,
    ),
    callback=load_envfile,
    help="Environment file to load. Any settings loaded via this file will control other options",
)

ARG_CERTIFICATE = click.argument(
    "certificate", type=click.Path(exists=True, dir_okay=False), nargs=1, required=True
)

ARG_SUITE = click.argument(
    "suite", type=click.Choice(suite_names()), nargs=1, required=False, default="all"
)


def _apply(options, f):
    # Need to reverse the order to control the list order
    return functools.reduce(lambda x, opt: opt(x), reversed(options), f)


def common_options(f):
    """Common Options"""
    return _apply([ENV_FILE, LOGGING_VERBOSE], f)


def bound_options(f):
    """Norm bound budgets"""
    return _apply(
        [
            RADIUS,
            MAX_ITERATIONS,
            MOMENT_DEPTH,
            POWER_DEPTH,
            SEED,
            TOLERANCE,
            RADIAL_RADIUS,
            SUPPORT_CAP,
            WORK_CAP,
            BALL_CAP,
            STRICT,
        ],
        f,
    )


def search_options(f):
    """Certificate search budgets (includes the norm bound budgets)"""
    return _apply(
        [
            EPSILON,
            STRATEGY,
            MAX_N,
            MAX_LENGTH,
            FW_ITERATIONS,
            GRADIENT_RADIUS,
            OBJECTIVE,
            THREADS,
            bound_options,
        ],
        f,
    )
