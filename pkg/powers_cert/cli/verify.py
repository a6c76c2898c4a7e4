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
"""verify command"""

from pathlib import Path

import click

from .. import options
from ..algebra import format_fraction
from ..powers import loads_certificate, recompute_bounds
from .core import ExitCodes, RunContext


@click.command()
@options.ARG_CERTIFICATE
@options.OUTPUT
@options.common_options
@click.pass_context
def verify(ctx: click.Context, certificate: str, *_args, **kwargs):
    """Recompute the bounds of a certificate file

    Exits with 0 if every recomputed bound is below the certificate's
    epsilon, with 1 if not and with 2 if the file is malformed.

    \b
    Example:

        \b
        powers-cert verify cert.json
    """
    opts = RunContext(ctx, kwargs)

    def _run(report):
        text = Path(certificate).read_text(encoding="utf8")
        report.add_input("certificate", text)
        cert = loads_certificate(text)
        report.config = {
            "group": str(cert.group),
            "bound": cert.bound_config.to_dict(),
        }
        bounds = recompute_bounds(cert)
        valid = all(bound < cert.epsilon for bound in bounds)
        report.result = {
            "valid": valid,
            "epsilon": format_fraction(cert.epsilon),
            "upper_bounds": [format_fraction(bound) for bound in bounds],
            "recorded_upper_bounds": [
                format_fraction(bound) for bound in cert.upper_bounds
            ],
        }
        if valid:
            return ExitCodes.OK
        report.status = "invalid"
        opts.show_warning("Certificate is not valid")
        return ExitCodes.NOT_FOUND

    opts.run("verify", _run)
