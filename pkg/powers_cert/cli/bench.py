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
"""bench command"""

import click

from .. import options
from ..bench import format_table, run_suites
from .core import ExitCodes, RunContext


@click.command()
@options.ARG_SUITE
@options.search_options
@options.OUTPUT
@options.common_options
@click.pass_context
def bench(ctx: click.Context, suite: str, *_args, **kwargs):
    """Run acceptance suites and print a pass/fail table

    \b
        SUITE is one of kesten, two-generator, certificate, multi-target,
        radical, cone, dixmier or all (default)

    The table is printed on stderr, the JSON report on stdout. Exits with 0
    when every suite passed and with 1 otherwise.

    \b
    Example:

        \b
        powers-cert bench kesten
    """
    opts = RunContext(ctx, kwargs)

    def _run(report):
        cfg = opts.search_config()
        report.config = {"suite": suite, "search": cfg.to_dict()}
        results = run_suites(suite, cfg)
        report.result = {"suites": [result.to_dict() for result in results]}
        opts.show_info(format_table(results))
        if all(result.passed for result in results):
            return ExitCodes.OK
        report.status = "failed"
        return ExitCodes.NOT_FOUND

    opts.run("bench", _run)
