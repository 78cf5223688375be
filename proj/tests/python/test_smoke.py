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

import math

import numpy as np
import pytest

import hdetent


def test_matrix_hdet_is_determinant():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert abs(hdetent.hdet(a) - np.linalg.det(a)) < 1e-10 * abs(np.linalg.det(a))


def test_even_matches_naive():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(2, 2, 2, 2)) + 1j * rng.normal(size=(2, 2, 2, 2))
    assert abs(hdetent.hdet_even(a) - hdetent.hdet_naive(a)) < 1e-10 * abs(hdetent.hdet_even(a))
    assert hdetent.hdet(np.ones((2, 2, 2))) == 0


def test_budget():
    with pytest.raises(hdetent.BudgetExceeded):
        hdetent.hdet(np.ones((3, 3, 3, 3)), max_terms=10)


def test_ghz_and_concurrence():
    psi = hdetent.ghz_state(2, 2)
    assert math.isclose(hdetent.measure(psi, 2, 2), 0.5, abs_tol=1e-12)
    phi = hdetent.random_state(2, 2, seed=3)
    assert math.isclose(hdetent.concurrence(phi, 2), 2 * hdetent.measure(phi, 2, 2), abs_tol=1e-10)


def test_quadratic_form():
    m = hdetent.ent_hat_matrix(1)
    sy = np.array([[0, -1j], [1j, 0]])
    assert np.allclose(m, -0.5 * np.kron(sy, sy), atol=1e-14)


def test_roof_and_trials():
    rho = hdetent.random_density_matrix(2, 2, 1, seed=4)
    r = hdetent.convex_roof(rho, 2, 2, restarts=1, iterations=5)
    assert r["rank"] == 1
    assert hdetent.monotonicity_trial(5, 1, 2)["pass"]
    assert hdetent.lemma1_f([0.5, 0.5], [0.5, 0.5], 2.0) == pytest.approx(1.0)
    assert hdetent.lemma1_critical_value([0.5, 0.5], 1.0) == pytest.approx(1.0)


def test_run_suite():
    assert "props" in hdetent.suite_names()
    records = hdetent.run_suite("props", seed=1, trials=2)
    assert records and all(r["pass"] for r in records)
    with pytest.raises(ValueError):
        hdetent.run_suite("nope")
