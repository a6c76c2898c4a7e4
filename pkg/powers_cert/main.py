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
"""Main cli interface to powers-cert"""

import click

from .cli.bench import bench
from .cli.dixmier import dixmier
from .cli.norm import norm
from .cli.search import search
from .cli.verify import verify
from .cli.version import version

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


@click.group(
    context_settings=CONTEXT_SETTINGS,
    invoke_without_command=True,
    no_args_is_help=True,
)
def cli():
    """Certified reduced C*-norm bounds, averaging certificates and Dixmier averaging"""


cli.add_command(norm)
cli.add_command(search)
cli.add_command(verify)
cli.add_command(dixmier)
cli.add_command(bench)
cli.add_command(version)
