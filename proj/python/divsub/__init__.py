# Copyright 2026 The divsub Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Diverse solution sets for submodular maximisation."""

import json

from divsub._core import (
    Graph,
    Instance,
    dgs_entropy_upper_bound,
    entropy,
    graph_from_edges,
    load_graph,
    onemax_max_entropy,
    solve,
)

__all__ = [
    "Graph",
    "Instance",
    "dgs_entropy_upper_bound",
    "entropy",
    "graph_from_edges",
    "load_graph",
    "onemax_max_entropy",
    "run_grid",
    "solve",
]


def run_grid(instance,
             constraint="uniform",
             budgets=(10,),
             margins=(2,),
             mus=(5,),
             repetitions=30,
             seed=0,
             t_max=10000,
             workers=0):
    """Runs a benchmark grid; returns per-run records, cells and checks."""
    from divsub import _core
    return json.loads(
        _core._run_grid_json(instance, constraint, list(budgets), list(margins),
                             list(mus), repetitions, seed, t_max, workers))
