# Copyright 2026 The hdetent Authors
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

"""Combinatorial hyperdeterminant, qudit entanglement measures and checks."""

from ._hdetent import (
    BudgetExceeded,
    StateFileError,
    concurrence,
    convex_roof,
    ent_hat_matrix,
    ghz_state,
    hdet,
    hdet_even,
    hdet_naive,
    lemma1_critical_value,
    lemma1_f,
    measure,
    monotonicity_trial,
    random_density_matrix,
    random_state,
    run_suite,
    suite_names,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "StateFileError",
    "concurrence",
    "convex_roof",
    "ent_hat_matrix",
    "ghz_state",
    "hdet",
    "hdet_even",
    "hdet_naive",
    "lemma1_critical_value",
    "lemma1_f",
    "measure",
    "monotonicity_trial",
    "random_density_matrix",
    "random_state",
    "run_suite",
    "suite_names",
]
