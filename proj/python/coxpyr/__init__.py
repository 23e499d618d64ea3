# Copyright 2026 The coxpyr authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Hyperbolic Coxeter pyramids: enumeration, growth rates, volumes, order."""

from coxpyr._core import (
    __version__,
    canonicalize,
    denominator,
    enumerate_pyramids,
    growth_rate,
    growth_report,
    lobachevsky,
    order_dot,
    order_report,
    perron_power,
    volume,
    volume_report,
)

__all__ = [
    "__version__",
    "canonicalize",
    "denominator",
    "enumerate_pyramids",
    "growth_rate",
    "growth_report",
    "lobachevsky",
    "order_dot",
    "order_report",
    "perron_power",
    "volume",
    "volume_report",
]
