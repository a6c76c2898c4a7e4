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
"""search command"""

import click

from .. import options
from ..groups import parse_word
from ..powers import Certificate, save_certificate, search_certificate
from .core import ExitCodes, RunContext


@click.command()
@options.GROUP
@options.TARGETS
@options.search_options
@options.OUTPUT
@options.common_options
@click.pass_context
def search(ctx: click.Context, *_args, **kwargs):
    """Search conjugators averaging every target below epsilon

    Exits with 0 when a certificate was found and with 1 otherwise.
    Not finding a certificate is no proof that none exists, unless the
    report names an obstruction.

    \b
    Example 1: Certify the generator a of F2 below 0.95

        \b
        powers-cert search --group F2 --targets a --epsilon 0.95 -o cert.json

    Example 2: One family for several targets

        \b
        powers-cert search --group F2 --targets "a;b;ab" --epsilon 0.95

    Example 3: Central targets can never be averaged away

        \b
        powers-cert search --group F2xZ --targets "e|(1)" --epsilon 0.99
    """
    opts = RunContext(ctx, kwargs)

    def _run(report):
        cfg = opts.search_config()
        report.config = {"group": str(opts.group), "search": cfg.to_dict()}
        report.add_input("targets", ";".join(opts.targets))
        targets = [parse_word(text, opts.group) for text in opts.targets]

        result = search_certificate(targets, cfg)
        if isinstance(result, Certificate):
            report.result = {"found": True, "certificate": result.to_dict()}
            if opts.output:
                save_certificate(result, opts.output)
                opts.show_info(f"Certificate written to {opts.output}")
            return ExitCodes.OK

        report.status = "not-found"
        report.result = result.to_dict()
        opts.show_warning(
            f"No certificate found: best={float(result.best):.6f}, "
            f"epsilon={float(result.epsilon)}"
        )
        return ExitCodes.NOT_FOUND

    opts.run("search", _run, write_output=False)
