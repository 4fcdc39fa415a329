import json

import pytest

from bclab.io import dumps
from bclab.verify import (
    ANCHORS,
    GROUPS,
    PropertyReport,
    SuiteConfig,
    UnknownPropertyError,
    property_names,
    registry,
    report_document,
    resolve_selection,
    run_suite,
)
from bclab.core import HyperbolicNumber


def test_every_required_anchor_is_covered():
    covered = {p.anchor for p in registry().values()}
    missing = [a for a in ANCHORS["required"] if a not in covered]
    assert not missing, missing


def test_every_property_has_an_anchor_and_group():
    assert set(ANCHORS["properties"]) == set(registry())
    for p in registry().values():
        assert p.group in GROUPS
        assert p.samples > 0 and p.tol >= 0


def test_groups_partition_registry():
    names = [n for g in GROUPS for n in property_names(g)]
    assert sorted(names) == sorted(registry())


def test_resolve_selection():
    assert resolve_selection("all") == list(registry())
    assert resolve_selection("idempotent-roundtrip, ring-laws") == ["idempotent-roundtrip", "ring-laws"]
    assert resolve_selection(["core", "ring-laws"]) == property_names("core")
    with pytest.raises(UnknownPropertyError):
        resolve_selection(["no-such"])


def test_unknown_property_raises_before_running():
    with pytest.raises(UnknownPropertyError):
        run_suite(SuiteConfig(), ["idempotent-roundtrip", "no-such"])


def test_seed_range():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(seed=-1), ["idempotent-roundtrip"])
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(seed=2**64), ["idempotent-roundtrip"])
    run_suite(SuiteConfig(seed=2**64 - 1, samples=5), ["idempotent-roundtrip"])


def test_roundtrip_example():
    (r,) = run_suite(SuiteConfig(seed=3, samples=10_000), ["idempotent-roundtrip"])
    assert r.passed and r.trials == 10_000
    assert r.max_residual.a1 <= 1e-12 and r.max_residual.a2 <= 1e-12


def test_report_pass_rule():
    ok = PropertyReport("x", "a", 3, 0, HyperbolicNumber(1e-13, 2e-13), 1e-12)
    assert ok.passed
    assert not PropertyReport("x", "a", 3, 1, HyperbolicNumber(0, 0), 1e-12).passed
    assert not PropertyReport("x", "a", 3, 0, HyperbolicNumber(0, 2e-12), 1e-12).passed
    assert ok.to_json()["pass"] is True


def test_tolerance_override_can_fail_a_property():
    cfg = SuiteConfig(seed=1, samples=200, tol={"ring-laws": 0.0})
    (r,) = run_suite(cfg, ["ring-laws"])
    assert not r.passed and r.failures > 0


def test_substreams_independent_of_selection():
    cfg = SuiteConfig(seed=9, samples=50)
    alone = run_suite(cfg, ["hyperbolic-triangle"])[0].to_json()
    together = [r.to_json() for r in run_suite(cfg, ["core"]) if r.name == "hyperbolic-triangle"][0]
    assert alone == together


def test_determinism_small_samples():
    cfg = SuiteConfig(seed=123, samples=20, truncation=64)
    a = dumps(report_document(run_suite(cfg), cfg))
    b = dumps(report_document(run_suite(cfg), cfg))
    assert a == b
    assert json.loads(a)["seed"] == 123


def test_different_seeds_differ():
    a = run_suite(SuiteConfig(seed=1, samples=50), ["hyperbolic-norm-multiplicative"])[0]
    b = run_suite(SuiteConfig(seed=2, samples=50), ["hyperbolic-norm-multiplicative"])[0]
    assert a.to_json() != b.to_json()


@pytest.mark.parametrize("group", GROUPS)
def test_groups_pass_with_small_samples(group):
    reports = run_suite(SuiteConfig(seed=4, samples=30, truncation=128), group)
    failed = [r for r in reports if not r.passed]
    assert not failed, failed
