# Copyright 2026 The vqlslab Authors
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
"""Python front end to the vqlslab C++ core.

Angles are (q, 3) arrays, row j holding the Ry, Rz, Ry angles of qubit j.
"""

from ._core import (
    DegenerateCostError,
    LinearSystem,
    ParseError,
    __version__,
    ansatz_state,
    cli,
    cost,
    cost_gradient,
    dataset_line,
    decompose,
    gen_random_system,
    init_minnorm,
    init_pca,
    init_rowmean,
    init_uniform,
    load_instance,
    load_predictions,
    normalize_system,
    optimize,
    reconstruct,
    save_instance,
    solution_fidelity,
)

__all__ = [
    "DegenerateCostError",
    "LinearSystem",
    "ParseError",
    "__version__",
    "ansatz_state",
    "cli",
    "cost",
    "cost_gradient",
    "dataset_line",
    "decompose",
    "gen_random_system",
    "init_minnorm",
    "init_pca",
    "init_rowmean",
    "init_uniform",
    "load_instance",
    "load_predictions",
    "normalize_system",
    "optimize",
    "reconstruct",
    "save_instance",
    "solution_fidelity",
]
