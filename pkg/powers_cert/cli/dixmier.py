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
"""dixmier command"""

import click

from .. import options
from ..powers import dixmier_average
from .core import ExitCodes, RunContext


@click.command()
@options.GROUP
@options.ELEMENT
@options.ELEMENT_FILE
@options.EPSILON
@options.MAX_STEPS
@options.DIXMIER_POWERS
@options.THREADS
@options.bound_options
@options.OUTPUT
@options.common_options
@click.pass_context
def dixmier(ctx: click.Context, *_args, **kwargs):
    """Average an element towards its trace with group unitaries

    Prints the certified distance of every accepted step. Exits with 0 when
    the distance fell below epsilon and with 1 otherwise.

    \b
    Example:

        \b
        powers-cert dixmier --group F2 --element "a+A" --epsilon 0.5
    """
    opts = RunContext(ctx, kwargs)

    def _run(report):
        cfg = opts.search_config()
        report.config = {"group": str(opts.group), "search": cfg.to_dict()}
        value = opts.read_element()
        report.add_input("element", opts.element_text())
        result = dixmier_average(value, cfg)
        report.result = result.to_dict()
        if result.success:
            return ExitCodes.OK
        report.status = "failed"
        opts.show_warning(
            f"Distance stayed at {float(result.distance):.6f} "
            f"(epsilon={float(cfg.epsilon)}, stalled={result.stalled})"
        )
        return ExitCodes.NOT_FOUND

    opts.run("dixmier", _run)
