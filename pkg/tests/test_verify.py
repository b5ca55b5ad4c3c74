"""The identity-check registry: determinism, coverage, failure plumbing."""

import pytest

from quatspin import verify


def test_registry_covers_all_suites():
    names = verify.check_names()
    assert len(names) >= 40
    suites = verify.suite_names()
    assert suites == ["algebra", "spin", "rotation", "spinor", "hydrogen",
                      "dirac", "all"]
    for wanted in ("homomorphism", "pauli-products", "eigen-z",
                   "rotation-conjugation", "clebsch-oracle",
                   "eigenvalue-agreement", "ode-residual", "clifford-relations"):
        assert wanted in names


def test_unknown_names_raise():
    with pytest.raises(KeyError):
        verify.run_check("definitely-not-a-check")
    with pytest.raises(KeyError):
        verify.run_suite("definitely-not-a-suite")


def test_fast_suites_pass():
    for suite in ("algebra", "spin", "rotation", "spinor", "dirac"):
        for res in verify.run_suite(suite):
            assert res.passed, (res.name, res.max_dev, res.tol)
            assert res.suite == suite
            assert res.max_dev <= res.tol


def test_check_results_are_deterministic():
    a = verify.run_check("homomorphism", seed=321)
    b = verify.run_check("homomorphism", seed=321)
    assert a == b
    c = verify.run_check("product-associativity", samples=50, seed=1)
    d = verify.run_check("product-associativity", samples=50, seed=1)
    assert c == d


def test_tol_scale_can_force_failure():
    res = verify.run_check("homomorphism", tol_scale=1e-30)
    assert not res.passed
    assert res.max_dev > res.tol


def test_sample_count_is_respected():
    small = verify.run_check("product-associativity", samples=10)
    assert small.passed
    assert "10" in small.detail


def test_selected_hydrogen_checks():
    for name in ("energy-degeneracy", "energy-reference-values",
                 "radial-shape", "probability-shells"):
        res = verify.run_check(name)
        assert res.passed, (name, res.max_dev)
