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
"""norm command"""

import click

from .. import options
from ..norms import estimate
from .core import ExitCodes, RunContext


@click.command()
@options.GROUP
@options.ELEMENT
@options.ELEMENT_FILE
@options.bound_options
@options.OUTPUT
@options.common_options
@click.pass_context
def norm(ctx: click.Context, *_args, **kwargs):
    """Certified bracket of the reduced C*-norm of an element

    \b
    The element uses the inline grammar: rational coefficients, '+'/'-',
    parenthesized scalars and products, upper case letters for inverses.

    \b
    Example 1: Kesten element of the free group on two generators

        \b
        powers-cert norm --group F2 --element "(1/4)(a+A+b+B)"

    Example 2: Symmetric random walk on the integers with a larger ball

        \b
        powers-cert norm --group Z --element "(1/2)((1)+(-1))" --radius 100
    """
    opts = RunContext(ctx, kwargs)

    def _run(report):
        cfg = opts.bound_config()
        report.config = {"group": str(opts.group), "bound": cfg.to_dict()}
        value = opts.read_element()
        report.add_input("element", opts.element_text())
        result = estimate(value, cfg)
        report.result = result.to_dict()
        for shortfall in result.shortfalls:
            opts.show_warning(f"Budget reduced: {shortfall}")
        return ExitCodes.OK

    opts.run("norm", _run)
