"""Acceptance criteria 1-14, each at its pinned tolerance.

Every criterion prints one ``PASS``/``FAIL`` line; the lines are repeated
in the pytest terminal summary.  Run standalone with
``python tests/test_acceptance.py`` to get just the lines.
"""

import math
import sys

import numpy as np
import pytest

from bclab.core import BicomplexNumber, hyperbolic_norm
from bclab.hardy import BERGMAN, DIRICHLET, HARDY, kernel_norm_sq, mult_ratio_extrema
from bclab.io import dumps
from bclab.verify import SuiteConfig, report_document, run_suite

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run outside pytest
    ACCEPTANCE_LINES = []

SEED = 0


def record(number, title, checks):
    """``checks`` is a list of ``(description, ok)``; prints one line and returns the verdict."""
    ok = all(c for _, c in checks)
    bad = [d for d, c in checks if not c]
    detail = "; ".join(d for d, _ in checks) if ok else "failed: " + "; ".join(bad)
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}  {title}  [{detail}]"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


_CACHE = {}


def suite():
    """Default-config run of every property, computed once."""
    if "reports" not in _CACHE:
        cfg = SuiteConfig(seed=SEED)
        reports = run_suite(cfg)
        _CACHE["reports"] = {r.name: r for r in reports}
        _CACHE["document"] = dumps(report_document(reports, cfg))
    return _CACHE["reports"]


def prop(name, tol, min_trials):
    r = suite()[name]
    m = r.max_residual
    ok = r.failures == 0 and m.a1 <= tol and m.a2 <= tol and r.trials >= min_trials
    return f"{name}: {r.trials} trials, {r.failures} failures, max ({m.a1:.2e}, {m.a2:.2e}) <= {tol:g}", ok


def rand_cplx(rng, n, rmax=1.0):
    return rmax * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))


# ---------------------------------------------------------------------------

def criterion_1():
    # independent oracle: products through the 2x2 complex matrix model
    rng = np.random.default_rng([SEED, 1])
    z, w, u, v = (rand_cplx(rng, 10_000) for _ in range(4))
    worst = 0.0
    for a, b, c, d in zip(z, w, u, v):
        Z, W = BicomplexNumber(a, b), BicomplexNumber(c, d)
        M = np.array([[a, -b], [b, a]]) @ np.array([[c, -d], [d, c]])
        P = Z * W
        back = BicomplexNumber.from_idempotent(Z.z1, Z.z2)
        worst = max(worst, abs(P.z - M[0, 0]), abs(P.w - M[1, 0]), abs(back.z - a), abs(back.w - b))
    return record(1, "idempotent round-trip and ring laws", [
        prop("idempotent-roundtrip", 1e-12, 10_000),
        prop("ring-laws", 1e-12, 10_000),
        (f"matrix-model products on 10^4 pairs: max {worst:.2e} <= 1e-12", worst <= 1e-12),
    ])


def criterion_2():
    return record(2, "hyperbolic norm multiplicative", [prop("hyperbolic-norm-multiplicative", 1e-10, 10_000)])


def criterion_3():
    return record(3, "scalar C*-identity", [prop("scalar-cstar-identity", 1e-12, 10_000)])


def criterion_4():
    return record(4, "matrix C*-identity on 5x5", [prop("matrix-cstar-identity", 1e-8, 1_000)])


def criterion_5():
    return record(5, "real-norm inequalities", [prop("real-norm-inequalities", 1e-8, 1_000)])


def criterion_6():
    return record(6, "quotient norm and quotient C*-identity", [
        prop("quotient-norm-oracle", 1e-3, 100),
        prop("quotient-cstar", 1e-8, 1_000),
    ])


def criterion_7():
    # 3000 draws give 1000 general, 1000 hermitian and 1000 unitary inputs per map
    cfg = SuiteConfig(seed=SEED, samples=3_000)
    names = ["hom-conjugation", "hom-positivity", "hom-hermitian", "hom-unitary"]
    tols = [1e-12, 1e-12, 1e-12, 1e-10]
    checks = []
    for r, tol in zip(run_suite(cfg, names), tols):
        m = r.max_residual
        ok = r.failures == 0 and m.a1 <= tol and m.a2 <= tol and r.trials >= 4 * 1_000
        checks.append((f"{r.name}: {r.trials} trials, max {max(m.a1, m.a2):.2e} <= {tol:g}", ok))
    checks.append(prop("kernel-equals-I1", 0.0, 10_000))
    return record(7, "ring homomorphisms and kernel", checks)


def criterion_8():
    return record(8, "growth estimate", [prop("growth-estimate", 0.0, 1_000)])


def criterion_9():
    return record(9, "reproducing property, three weights", [prop("reproducing-property", 1e-10, 3_000)])


def criterion_10():
    # independent oracle for T(|W|^2): textbook closed forms in x = |w_l|^2
    rng = np.random.default_rng([SEED, 10])
    closed = {
        "hardy": lambda x: 1 / (1 - x),
        "bergman": lambda x: 1 / (1 - x) ** 2,
        "dirichlet": lambda x: 1.0 if x == 0 else -math.log1p(-x) / x,
    }
    worst = 0.0
    for w in (HARDY, BERGMAN, DIRICHLET):
        for _ in range(1_000):
            W = BicomplexNumber.from_idempotent(*rand_cplx(rng, 2, 0.9))
            got = kernel_norm_sq(w, W, 200)
            r = hyperbolic_norm(W)
            want = [closed[w.kind.value](r.a1 ** 2), closed[w.kind.value](r.a2 ** 2)]
            worst = max(worst, abs(got.a1 - want[0]), abs(got.a2 - want[1]))
    return record(10, "kernel closed form vs series, kernel norm", [
        prop("kernel-closed-vs-series", 1e-10, 3_000),
        prop("kernel-norm-generating", 1e-10, 3_000),
        (f"kernel_norm_sq vs closed T(|W|^2), 3000 samples: max {worst:.2e} <= 1e-10", worst <= 1e-10),
    ])


def criterion_11():
    return record(11, "automorphism sandwich", [prop("automorphism-sandwich", 1e-6, 2_000)])


def criterion_12():
    return record(12, "composition norm bracket", [prop("composition-norm-bracket", 1e-6, 100)])


def criterion_13():
    N = 10_000
    h = mult_ratio_extrema(HARDY, N)
    d = mult_ratio_extrema(DIRICHLET, N)
    b = mult_ratio_extrema(BERGMAN, N)
    scan = BERGMAN.beta_array(N)
    ratio = scan[0][1:] / scan[0][:-1]
    root2, root_half = math.sqrt(2), math.sqrt(0.5)
    return record(13, "multiplication-operator ratio extrema", [
        ("Hardy sup = inf = (1, 1)", h.sup.a1 == h.sup.a2 == h.inf.a1 == h.inf.a2 == 1.0),
        ("Dirichlet sup = (sqrt2, sqrt2)", max(abs(d.sup.a1 - root2), abs(d.sup.a2 - root2)) <= 1e-12),
        ("Bergman inf = (sqrt0.5, sqrt0.5)", max(abs(b.inf.a1 - root_half), abs(b.inf.a2 - root_half)) <= 1e-12),
        ("Bergman scan increasing toward 1",
         b.trend == "increasing" and bool(np.all(np.diff(ratio) > 0)) and ratio[-1] < 1 and 1 - ratio[-1] < 1e-4),
        prop("multiplication-operator", 1e-12, 1_000),
    ])


def criterion_14():
    suite()
    cfg = SuiteConfig(seed=SEED)
    again = dumps(report_document(run_suite(cfg), cfg))
    same = again == _CACHE["document"]
    return record(14, "determinism", [(f"two full runs, {len(again)} bytes, identical", same)])


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13, criterion_14]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
