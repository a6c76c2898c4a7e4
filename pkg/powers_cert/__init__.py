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
"""powers-cert version"""
import importlib


def _get_version():
    # pylint: disable=bare-except, import-outside-toplevel
    try:
        # Needs to be dynamically imported as the version file is not
        # committed to the project as it is generated during the build.
        version = importlib.import_module("powers_cert._version")
        return version.version
    except:
        return "0.0.1"


__version__ = _get_version()
