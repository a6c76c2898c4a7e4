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
"""Exit codes and the command run context"""

import logging
import os
import pathlib
import signal
import sys
from enum import IntEnum
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable, Dict, NoReturn, Optional

import click

from .. import __version__
from ..algebra import AlgebraElement, loads_element, parse_element
from ..env import config_env
from ..errors import BudgetExceeded, PowersCertError
from ..groups import GroupDescriptor
from ..norms import BoundConfig
from ..powers import SearchConfig
from ..reports import RunReport, Stopwatch


class ExitCodes(IntEnum):
    """Exit codes"""

    OK = 0
    NOT_FOUND = 1
    USAGE = 2
    BUDGET_EXCEEDED = 3

    UNKNOWN = 9

    TERMINATE = 100


class RunContext:
    """Options and user feedback of one command run"""

    # pylint: disable=too-many-instance-attributes

    group: Optional[GroupDescriptor] = None
    element = None
    element_file = None
    targets = ()
    output = None
    verbose = False
    env_file = None

    radius = BoundConfig.radius
    max_iterations = BoundConfig.max_iterations
    moment_depth = BoundConfig.moment_depth
    power_depth = BoundConfig.power_depth
    seed = BoundConfig.seed
    tolerance = BoundConfig.tolerance
    radial_radius = BoundConfig.radial_radius
    support_cap = BoundConfig.support_cap
    work_cap = BoundConfig.work_cap
    ball_cap = BoundConfig.ball_cap
    strict = BoundConfig.strict

    epsilon = SearchConfig.epsilon
    strategy = SearchConfig.strategy
    max_n = SearchConfig.max_n
    max_length = SearchConfig.max_length
    fw_iterations = SearchConfig.fw_iterations
    gradient_radius = SearchConfig.gradient_radius
    objective = SearchConfig.objective
    threads = SearchConfig.threads
    max_steps = SearchConfig.max_steps
    dixmier_powers = SearchConfig.dixmier_powers

    def __init__(self, ctx: click.Context, src_dict: Dict[str, Any] = None) -> None:
        self._ctx = ctx
        if src_dict is not None:
            self.fromdict(src_dict)

        configure_logger(CliLogger.log_path(), self.verbose)

    def fromdict(self, src_dict: Dict[str, Any]) -> "RunContext":
        """Load options from a dictionary

        Args:
            src_dict (Dict[str, Any]): Click parameters

        Returns:
            RunContext: Options after the values have been set
        """
        assert isinstance(src_dict, dict)
        for key, value in src_dict.items():
            if hasattr(self, key):
                setattr(self, key, value)
        return self

    def bound_config(self) -> BoundConfig:
        """Norm bound budgets from the options"""
        return BoundConfig(
            radius=self.radius,
            max_iterations=self.max_iterations,
            moment_depth=self.moment_depth,
            power_depth=self.power_depth,
            seed=self.seed,
            tolerance=self.tolerance,
            radial_radius=self.radial_radius,
            support_cap=self.support_cap,
            work_cap=self.work_cap,
            ball_cap=self.ball_cap,
            strict=self.strict,
        )

    def search_config(self) -> SearchConfig:
        """Search budgets from the options"""
        return SearchConfig(
            epsilon=self.epsilon,
            strategy=self.strategy,
            max_n=self.max_n,
            max_length=self.max_length,
            fw_iterations=self.fw_iterations,
            gradient_radius=self.gradient_radius,
            objective=self.objective,
            seed=self.seed,
            threads=self.threads,
            max_steps=self.max_steps,
            dixmier_powers=self.dixmier_powers,
            bound=self.bound_config(),
        )

    def read_element(self) -> AlgebraElement:
        """Element from --element or --element-file

        Files may hold the inline grammar or the element JSON form.
        """
        if (self.element is None) == (self.element_file is None):
            self._ctx.fail("Exactly one of --element or --element-file is required")
        if self.element is not None:
            return parse_element(self.element, self.group)
        text = Path(self.element_file).read_text(encoding="utf8").strip()
        if text.startswith("{"):
            return loads_element(text, self.group)
        return parse_element(text, self.group)

    def element_text(self) -> str:
        """Text of the element input"""
        if self.element is not None:
            return self.element
        return Path(self.element_file).read_text(encoding="utf8").strip()

    def run(
        self,
        command: str,
        func: Callable[[RunReport], ExitCodes],
        write_output: bool = True,
    ) -> NoReturn:
        """Run a command, print its report and exit with the mapped exit code

        func fills in the report and returns the exit code. Library errors
        are mapped to exit codes: budget errors print the partial report.

        Args:
            command (str): Command name
            func (Callable[[RunReport], ExitCodes]): Command body
            write_output (bool, optional): Write the report to --output
        """
        register_signals()
        report = RunReport(
            command=command,
            config={},
            version=__version__,
            environment=config_env(),
        )
        timer = Stopwatch(f"{command} duration").start()
        exit_code = ExitCodes.OK
        try:
            exit_code = func(report)
        except BudgetExceeded as ex:
            partial = ex.partial.to_dict() if hasattr(ex.partial, "to_dict") else None
            report.status = "budget-exceeded"
            report.result = {"error": str(ex), "partial": partial}
            self.show_error(f"Budget exceeded: {ex}")
            exit_code = ExitCodes.BUDGET_EXCEEDED
        except PowersCertError as ex:
            self.show_error(f"Error: {ex}")
            self._ctx.exit(ExitCodes.USAGE)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except Exception as ex:
            logging.exception("Unexpected error")
            self.show_error(f"Unexpected error: {ex}")
            self._ctx.exit(ExitCodes.UNKNOWN)

        report.wall_time = timer.stop()
        click.echo(report.to_json())
        if self.output and write_output:
            Path(self.output).write_text(report.to_json() + "\n", encoding="utf8")
        self._ctx.exit(exit_code)

    def show_error(self, msg: str, *args, **kwargs):
        """Show an error to the user and log it

        Args:
            msg (str): User message to print on the console
        """
        if not self.verbose:
            click.secho(msg, fg="red", err=True)
        logging.warning(msg, *args, **kwargs)

    def show_info(self, msg: str, *args, **kwargs):
        """Show an info message to the user and log it

        Args:
            msg (str): User message to print on the console
        """
        if not self.verbose:
            click.secho(msg, err=True)
        logging.info(msg, *args, **kwargs)

    def show_warning(self, msg: str, *args, **kwargs):
        """Show a warning to the user and log it

        Args:
            msg (str): User message to print on the console
        """
        if not self.verbose:
            click.secho(msg, fg="yellow", err=True)
        logging.warning(msg, *args, **kwargs)


class CliLogger:
    """CLI Logger"""

    # pylint: disable=too-few-public-methods

    @classmethod
    def log_path(cls) -> pathlib.Path:
        """Get the log path"""
        return (
            pathlib.Path(os.getenv("POWERS_CERT_LOG_DIR", "~/.powers-cert/")).expanduser()
            / "powers-cert.log"
        )


def configure_logger(path: pathlib.Path, verbose: bool = False) -> logging.Logger:
    """Configure logger

    Args:
        path (pathlib.Path): Path where the persistent logger should write to.
        verbose (bool, optional): Use verbose logging. Defaults to False.

    Returns:
        logging.Logger: Created logger
    """
    path.parent.mkdir(parents=True, exist_ok=True)

    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    log_file_formatter = logging.Formatter(
        "%(asctime)s %(threadName)s %(levelname)s %(name)s %(message)s"
    )

    # Remove handlers of earlier invocations in the same process
    for handler in list(logger.handlers):
        if isinstance(handler, RotatingFileHandler):
            handler.close()
    logger.handlers = []

    if verbose:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(
            logging.Formatter("[powers-cert]  %(levelname)-5s %(message)s")
        )
        console_handler.setLevel(logging.DEBUG)
        logger.addHandler(console_handler)

    # Max 5 log files each 10 MB.
    rotate_handler = RotatingFileHandler(
        filename=str(path), maxBytes=10000000, backupCount=5
    )
    rotate_handler.setFormatter(log_file_formatter)
    rotate_handler.setLevel(logging.INFO)

    # Log to Rotating File
    logger.addHandler(rotate_handler)
    return logger


def signal_handler(_signal, _frame):
    """Signal handler"""
    sys.exit(ExitCodes.TERMINATE)


def register_signals():
    """Register signal handlers"""
    signal.signal(signal.SIGINT, signal_handler)
