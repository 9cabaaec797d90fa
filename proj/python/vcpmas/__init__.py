# Copyright 2026 The vcpmas Authors
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
"""Population monotonic allocation schemes for vertex cover games."""

import json

from ._core import (
    CapExceeded,
    ContractViolation,
    Error,
    FormatError,
    Graph,
    MalformedScheme,
    NotBalanced,
    NotPopulationMonotonic,
    UnsupportedInstance,
    classify,
    construct,
    count_integral,
    enumerate_integral,
    gamma,
    matching_number,
    recognize,
    scheme_json,
    stable_match,
    verify,
)


def scheme(graph, prefs=None, max_edges=16):
    """Full scheme table as a dict keyed by coalition, e.g. "0,2"."""
    return json.loads(scheme_json(graph, prefs, max_edges))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
