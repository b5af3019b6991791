"""Suite harness: passing catalogs, the mutation self-test, determinism."""

import json

import pytest

from tracelab.verifier import (
    AlgebraSpec,
    InstanceSpec,
    corrupted_trace,
    default_catalog,
    run_suites,
    suite_section1,
    suite_section2,
    suite_section3,
)

SMALL = InstanceSpec(
    algebras=(
        AlgebraSpec("f2_dual", "F2", ("x",), ("x^2",)),
        AlgebraSpec("f2_fat", "F2", ("x", "y"), ("x^2", "x*y", "y^2")),
        AlgebraSpec("q_jet3", "Q", ("x",), ("x^3",)),
    ),
    semigroups=((1,), (2, 3), (3, 4)),
    duality_samples=10,
    colon_route_samples=3,
    random_modules=2,
    sampled_ideals=3,
)


def test_default_catalog_contents():
    spec = default_catalog()
    names = {a.name for a in spec.algebras}
    assert len(spec.algebras) == 19
    assert {"q_dual", "f2_fat", "f3_mixed", "f2_quadrics3"} <= names
    assert (3, 4) in spec.semigroups and len(spec.semigroups) == 7


def test_small_catalog_all_suites_pass():
    for result in run_suites(SMALL):
        assert result.passed, result.failures[:2]
        assert result.checks > 0


def test_suite_results_serialize_without_elapsed():
    result = suite_section2(SMALL)
    payload = result.to_json()
    assert set(payload) == {"suite", "checks", "passed", "failures"}


def test_mutation_is_caught_with_witness():
    result = suite_section1(SMALL, trace_fn=corrupted_trace)
    assert not result.passed
    assert any(f.left is not None and f.right is not None for f in result.failures)
    for f in result.failures:
        assert "algebra" in f.instance
        assert f.instance["algebra"]["relations"]


def test_mutation_failure_reconstructible():
    result = suite_section1(SMALL, trace_fn=corrupted_trace)
    f = next(f for f in result.failures if f.left is not None)
    blob = json.dumps(f.to_json(), sort_keys=True)
    parsed = json.loads(blob)
    assert parsed["instance"]["algebra"]["field"] in ("F2", "Q")
    assert "basis_columns" in parsed["left"]


def test_deterministic_results():
    a = [r.to_json() for r in run_suites(SMALL)]
    b = [r.to_json() for r in run_suites(SMALL)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites(SMALL, suites=("section9",))


def test_section3_handles_redundant_relations():
    spec = InstanceSpec(
        algebras=(AlgebraSpec("dup", "F2", ("x",), ("x^2", "x^3")),),
        semigroups=(),
        duality_samples=5,
        colon_route_samples=2,
        random_modules=1,
    )
    assert suite_section3(spec).passed
