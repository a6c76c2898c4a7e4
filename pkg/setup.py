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

from setuptools import setup, find_packages
from pathlib import Path


this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()

setup(
    python_requires=">=3.9",
    name="powers-cert",
    long_description=long_description,
    long_description_content_type="text/markdown",
    description="Certified reduced group C*-algebra norm bounds and averaging certificates",
    license="Apache v2",
    packages=find_packages(exclude=["tests", "tests.*", "tests_integration"]),
    entry_points={
        "console_scripts": ["powers-cert=powers_cert.main:cli"],
    },
    install_requires=[
        "click>=8.0.3,<8.2",
        "numpy>=1.21",
        "scipy>=1.7",
    ],
    zip_safe=False,
)
