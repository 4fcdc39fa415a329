"""Seeded property suite.

Every registered property draws its own random stream from
``SeedSequence([seed, crc32(name)])`` (PCG64), so results do not depend on
which other properties run or in what order.  Each trial yields a pair of
nonnegative residuals (one per idempotent component where that makes
sense, otherwise the same value twice) plus an optional hard-failure flag;
a property passes when no trial failed and the max residual is within
tolerance in both components.

Sampling: complex values get a uniform argument and a uniform radius;
samples restricted to a disc use ``radius * sqrt(u)`` so they are uniform
in area.
"""

import json
import math
import zlib
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import cstar, hardy, operators
from .core import (
    E1,
    BicomplexNumber,
    HyperbolicNumber,
    OrderRelation,
    bc_inner,
    bc_mul,
    classify,
    classify_cartesian,
    conjugate,
    euclidean_norm,
    h_compare,
    hyperbolic_norm,
)
from .cstar import BCMatrix, IdealTag, RingHom

__all__ = [
    "SuiteConfig",
    "PropertyReport",
    "UnknownPropertyError",
    "GROUPS",
    "property_names",
    "run_suite",
    "resolve_selection",
    "report_document",
]


class UnknownPropertyError(KeyError):
    pass


@dataclass
class SuiteConfig:
    """``samples`` and ``truncation`` override every property's own default
    when set; ``tol`` overrides per property name; ``dim`` is the matrix size
    for the C*-algebra properties."""

    seed: int = 0
    samples: int = None
    tol: dict = field(default_factory=dict)
    truncation: int = None
    dim: int = 5


class PropertyReport:
    __slots__ = ("name", "paper_anchor", "trials", "failures", "max_residual", "tol")

    def __init__(self, name, paper_anchor, trials, failures, max_residual, tol):
        self.name = name
        self.paper_anchor = paper_anchor
        self.trials = int(trials)
        self.failures = int(failures)
        self.max_residual = max_residual
        self.tol = float(tol)

    @property
    def passed(self):
        r = self.max_residual
        return self.failures == 0 and r.a1 <= self.tol and r.a2 <= self.tol

    def to_json(self):
        return {
            "name": self.name,
            "paper_anchor": self.paper_anchor,
            "trials": self.trials,
            "failures": self.failures,
            "max_residual": [self.max_residual.a1, self.max_residual.a2],
            "tol": self.tol,
            "pass": self.passed,
        }

    def __repr__(self):
        state = "pass" if self.passed else "FAIL"
        return f"<{self.name} {state} {self.failures}/{self.trials} r={self.max_residual!r}>"


def _load_anchors():
    text = resources.files("bclab").joinpath("anchors.json").read_text(encoding="utf-8")
    return json.loads(text)


ANCHORS = _load_anchors()


class _Property:
    __slots__ = ("name", "group", "samples", "tol", "fn")

    def __init__(self, name, group, samples, tol, fn):
        self.name = name
        self.group = group
        self.samples = samples
        self.tol = tol
        self.fn = fn

    @property
    def anchor(self):
        return ANCHORS["properties"][self.name]


_REGISTRY = {}
GROUPS = ("core", "cstar", "hardy", "operators")


def _register(name, group, samples, tol):
    def deco(fn):
        if name in _REGISTRY:
            raise ValueError(f"duplicate property {name}")
        _REGISTRY[name] = _Property(name, group, samples, tol, fn)
        return fn

    return deco


def property_names(group=None):
    return [p.name for p in _REGISTRY.values() if group is None or p.group == group]


def registry():
    return dict(_REGISTRY)


class _Trials:
    """Accumulates per-trial residual pairs and hard failures."""

    def __init__(self):
        self.r1 = []
        self.r2 = []
        self.bad = []

    def add(self, r1, r2=None, bad=False):
        self.r1.append(float(r1))
        self.r2.append(float(r1 if r2 is None else r2))
        self.bad.append(bool(bad))

    def extend(self, r1, r2=None, bad=None):
        r1 = np.asarray(r1, dtype=float).ravel()
        r2 = r1 if r2 is None else np.asarray(r2, dtype=float).ravel()
        bad = np.zeros(r1.size, dtype=bool) if bad is None else np.asarray(bad, dtype=bool).ravel()
        self.r1.extend(r1.tolist())
        self.r2.extend(r2.tolist())
        self.bad.extend(bad.tolist())


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

def _cplx(rng, size, rmax=1.0, disc=False):
    theta = rng.uniform(0.0, 2 * np.pi, size)
    u = rng.uniform(0.0, 1.0, size)
    r = rmax * (np.sqrt(u) if disc else u)
    return r * np.exp(1j * theta)


def _unit(rng, size):
    return np.exp(1j * rng.uniform(0.0, 2 * np.pi, size))


def _bc_idem(rng, n, rmax=1.0, disc=False):
    z1 = _cplx(rng, n, rmax, disc)
    z2 = _cplx(rng, n, rmax, disc)
    return [BicomplexNumber.from_idempotent(a, b) for a, b in zip(z1, z2)]


def _bc_cart(rng, n, rmax=1.0):
    z = _cplx(rng, n, rmax)
    w = _cplx(rng, n, rmax)
    return [BicomplexNumber(a, b) for a, b in zip(z, w)]


def _matrix(rng, dim):
    return BCMatrix(_cplx(rng, (dim, dim)), _cplx(rng, (dim, dim)))


def _haar_unitary(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def _series(rng, degree, weights, rmax=1.0):
    c1 = _cplx(rng, degree + 1, rmax)
    c2 = _cplx(rng, degree + 1, rmax)
    return hardy.SeriesFunction.from_components(c1, c2, weights)


def _automorphism(rng, wmax):
    lam = BicomplexNumber.from_idempotent(*_unit(rng, 2))
    w = BicomplexNumber.from_idempotent(*_cplx(rng, 2, wmax, disc=True))
    return operators.DiscAutomorphism(lam, w)


def _bc_diff(a, b):
    d = a - b
    return abs(d.z1), abs(d.z2)


def _h_absdiff(a, b):
    d = abs(a - b)
    return d.a1, d.a2


def _violation(lhs, rhs):
    """Componentwise amount by which ``lhs <=' rhs`` fails (0 if it holds)."""
    return max(lhs.a1 - rhs.a1, 0.0), max(lhs.a2 - rhs.a2, 0.0)


_BUILTIN = (hardy.HARDY, hardy.BERGMAN, hardy.DIRICHLET)
_HOMS = (RingHom.PROJ_E1, RingHom.PROJ_E2, RingHom.TO_C_PLUS, RingHom.TO_C_MINUS)


# ---------------------------------------------------------------------------
# core
# ---------------------------------------------------------------------------

@_register("idempotent-roundtrip", "core", 10_000, 1e-12)
def _p_roundtrip(rng, n, cfg):
    t = _Trials()
    for Z in _bc_cart(rng, n, 2.0):
        Y = BicomplexNumber.from_idempotent(Z.z1, Z.z2)
        t.add(abs(Y.z - Z.z), abs(Y.w - Z.w))
    return t


@_register("ring-laws", "core", 10_000, 1e-12)
def _p_ring_laws(rng, n, cfg):
    # relative residuals: cartesian product vs idempotent product,
    # distributivity, commutativity and associativity
    t = _Trials()
    a_s, b_s, c_s = _bc_cart(rng, n), _bc_cart(rng, n), _bc_cart(rng, n)
    for a, b, c in zip(a_s, b_s, c_s):
        na, nb, nc = abs(a), abs(b), abs(c)
        ab = bc_mul(a, b)
        s1 = max(na * nb, 1e-300)
        r1 = abs(ab.z1 - a.z1 * b.z1) / s1
        r2 = abs(ab.z2 - a.z2 * b.z2) / s1
        lhs = bc_mul(a, b + c)
        rhs = ab + bc_mul(a, c)
        s2 = max(na * (nb + nc), 1e-300)
        d1, d2 = _bc_diff(lhs, rhs)
        e1, e2 = _bc_diff(ab, bc_mul(b, a))
        s3 = max(na * nb * nc, 1e-300)
        f1, f2 = _bc_diff(bc_mul(ab, c), bc_mul(a, bc_mul(b, c)))
        t.add(max(r1, d1 / s2, e1 / s1, f1 / s3), max(r2, d2 / s2, e2 / s1, f2 / s3))
    return t


@_register("conjugation-involution", "core", 10_000, 1e-12)
def _p_conjugation(rng, n, cfg):
    t = _Trials()
    a_s, b_s = _bc_cart(rng, n), _bc_cart(rng, n)
    for a, b in zip(a_s, b_s):
        r = [0.0, 0.0]
        scale = max(abs(a) * abs(b), 1e-300)
        for kind in ("dag1", "dag2", "dag3"):
            inv = _bc_diff(conjugate(conjugate(a, kind), kind), a)
            mul = _bc_diff(conjugate(bc_mul(a, b), kind), bc_mul(conjugate(a, kind), conjugate(b, kind)))
            r = [max(r[l], inv[l], mul[l] / scale) for l in range(2)]
        # dag3 in idempotent form conjugates both components
        a3 = conjugate(a, "dag3")
        r = [max(r[0], abs(a3.z1 - a.z1.conjugate())), max(r[1], abs(a3.z2 - a.z2.conjugate()))]
        t.add(*r)
    return t


@_register("zero-divisor-trichotomy", "core", 10_000, 0.0)
def _p_trichotomy(rng, n, cfg):
    # one third invertible, one third zero divisors built in cartesian form
    # as (z, +-iz), the rest exact zeros mixed with tiny perturbations
    t = _Trials()
    kinds = rng.integers(0, 3, n)
    zs = _cplx(rng, n, 2.0)
    ws = _cplx(rng, n, 2.0)
    signs = rng.choice([-1.0, 1.0], n)
    for k, z, w, s in zip(kinds, zs, ws, signs):
        if k == 0:
            Z, want = BicomplexNumber(z, w), "invertible"
            if abs(z * z + w * w) == 0:
                want = "zero-divisor"
        elif k == 1:
            Z, want = BicomplexNumber(z, s * 1j * z), "zero-divisor"
            if z == 0:
                want = "zero"
        else:
            Z, want = BicomplexNumber(0, 0), "zero"
        got_i = classify(Z)
        got_c = classify_cartesian(Z)
        t.add(0.0, bad=not (got_i == got_c == want))
    return t


@_register("hyperbolic-norm-multiplicative", "core", 10_000, 1e-10)
def _p_hnorm_mult(rng, n, cfg):
    t = _Trials()
    for a, b in zip(_bc_idem(rng, n, 3.0), _bc_idem(rng, n, 3.0)):
        lhs = hyperbolic_norm(bc_mul(a, b))
        rhs = hyperbolic_norm(a) * hyperbolic_norm(b)
        t.add(abs(lhs.a1 - rhs.a1) / max(rhs.a1, 1e-300), abs(lhs.a2 - rhs.a2) / max(rhs.a2, 1e-300))
    return t


@_register("hyperbolic-triangle", "core", 10_000, 1e-12)
def _p_triangle(rng, n, cfg):
    t = _Trials()
    for a, b in zip(_bc_idem(rng, n, 3.0), _bc_idem(rng, n, 3.0)):
        t.add(*_violation(hyperbolic_norm(a + b), hyperbolic_norm(a) + hyperbolic_norm(b)))
    return t


def _order_oracle(a, b):
    d1, d2 = b.a1 - a.a1, b.a2 - a.a2
    if d1 == 0 and d2 == 0:
        return OrderRelation.EQUAL
    if d1 >= 0 and d2 >= 0:
        return OrderRelation.LESS_EQ
    if d1 <= 0 and d2 <= 0:
        return OrderRelation.GREATER_EQ
    return OrderRelation.INCOMPARABLE


@_register("partial-order", "core", 10_000, 0.0)
def _p_partial_order(rng, n, cfg):
    # small integer components so that ties and incomparable pairs are common
    t = _Trials()
    vals = rng.integers(-2, 3, (n, 3, 2)).astype(float)
    seen_incomparable = False
    for row in vals:
        a, b, c = (HyperbolicNumber(*v) for v in row)
        ab = h_compare(a, b)
        ok = h_compare(a, a) is OrderRelation.EQUAL
        ok &= ab is _order_oracle(a, b)
        mirror = {OrderRelation.LESS_EQ: OrderRelation.GREATER_EQ,
                  OrderRelation.GREATER_EQ: OrderRelation.LESS_EQ}
        ok &= h_compare(b, a) is mirror.get(ab, ab)
        # antisymmetry
        if (a <= b) and (b <= a):
            ok &= a == b
        # transitivity
        if (a <= b) and (b <= c):
            ok &= a <= c
        seen_incomparable |= ab is OrderRelation.INCOMPARABLE
        t.add(0.0, bad=not ok)
    t.add(0.0, bad=not seen_incomparable)
    return t


@_register("euclidean-real-norm", "core", 10_000, 1e-12)
def _p_euclid(rng, n, cfg):
    # |Z| = sqrt(|z|^2 + |w|^2) equals the real size of |Z|_k
    t = _Trials()
    for Z in _bc_cart(rng, n, 2.0):
        e = euclidean_norm(Z)
        m = hyperbolic_norm(Z).magnitude()
        t.add(abs(e - m) / max(e, 1e-300))
    return t


@_register("bc-inner-product", "core", 10_000, 1e-12)
def _p_bc_inner(rng, n, cfg):
    t = _Trials()
    a_s, b_s, c_s, l_s = (_bc_idem(rng, n) for _ in range(4))
    for a, b, c, lam in zip(a_s, b_s, c_s, l_s):
        h = hyperbolic_norm(a) ** 2
        r1, r2 = _bc_diff(bc_inner(a, a), h.to_bicomplex())
        s1, s2 = _bc_diff(bc_inner(a + b, c), bc_inner(a, c) + bc_inner(b, c))
        u1, u2 = _bc_diff(bc_inner(a, bc_mul(lam, b)), bc_mul(conjugate(lam, "dag3"), bc_inner(a, b)))
        t.add(max(r1, s1, u1), max(r2, s2, u2))
    return t


@_register("scalar-cstar-identity", "core", 10_000, 1e-12)
def _p_scalar_cstar(rng, n, cfg):
    t = _Trials()
    for Z in _bc_cart(rng, n):
        lhs = hyperbolic_norm(bc_mul(conjugate(Z, "dag3"), Z))
        rhs = hyperbolic_norm(Z) ** 2
        t.add(*_h_absdiff(lhs, rhs))
    return t


# ---------------------------------------------------------------------------
# cstar
# ---------------------------------------------------------------------------

@_register("dnorm-submultiplicative", "cstar", 1_000, 1e-8)
def _p_submult(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        A, B = _matrix(rng, cfg.dim), _matrix(rng, cfg.dim)
        nA, nB = cstar.d_norm(A), cstar.d_norm(B)
        rhs = nA * nB
        v1, v2 = _violation(cstar.d_norm(A @ B), rhs)
        t.add(v1 / (1 + rhs.a1), v2 / (1 + rhs.a2))
    return t


@_register("matrix-cstar-identity", "cstar", 1_000, 1e-8)
def _p_matrix_cstar(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        A = _matrix(rng, cfg.dim)
        res = cstar.check_cstar_identity(A)
        sq = cstar.d_norm(A) ** 2
        t.add(res.a1 / (1 + sq.a1), res.a2 / (1 + sq.a2))
    return t


@_register("real-norm-inequalities", "cstar", 1_000, 1e-8)
def _p_real_norm(rng, n, cfg):
    # residual = how far any slack falls below zero
    t = _Trials()
    root2 = math.sqrt(2.0)
    for _ in range(n):
        x, y = _matrix(rng, cfg.dim), _matrix(rng, cfg.dim)
        nx, ny = cstar.real_norm(x), cstar.real_norm(y)
        nxx = cstar.real_norm(cstar.star(x) @ x)
        nxy = cstar.real_norm(x @ y)
        slack = min(nxx - nx * nx, root2 * nx * nx - nxx, root2 * nx * ny - nxy)
        t.add(max(-slack, 0.0))
    return t


@_register("star-norm-invariance", "cstar", 1_000, 1e-8)
def _p_star_norm(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        A = _matrix(rng, cfg.dim)
        nA = cstar.d_norm(A)
        d1, d2 = _h_absdiff(cstar.d_norm(cstar.star(A)), nA)
        t.add(d1 / (1 + nA.a1), d2 / (1 + nA.a2))
    return t


@_register("star-inverse", "cstar", 1_000, 1e-8)
def _p_star_inverse(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        A = _matrix(rng, cfg.dim)
        try:
            rhs = cstar.star(cstar.bc_matrix_inverse(A))
            lhs = cstar.bc_matrix_inverse(cstar.star(A))
        except cstar.SingularError:
            t.add(0.0, bad=True)
            continue
        d = lhs.max_abs_diff(rhs)
        t.add(d.a1 / (1 + np.max(np.abs(rhs.A1))), d.a2 / (1 + np.max(np.abs(rhs.A2))))
    return t


@_register("hermitian-decomposition", "cstar", 1_000, 1e-12)
def _p_hermitian(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        A = _matrix(rng, cfg.dim)
        u, v = cstar.hermitian_decompose(A)
        back = u + v * 1j
        d = back.max_abs_diff(A)
        hu = u.max_abs_diff(cstar.star(u))
        hv = v.max_abs_diff(cstar.star(v))
        t.add(max(d.a1, hu.a1, hv.a1), max(d.a2, hu.a2, hv.a2))
    return t


@_register("unitary-norm", "cstar", 1_000, 1e-10)
def _p_unitary(rng, n, cfg):
    t = _Trials()
    one = HyperbolicNumber(1.0, 1.0)
    for _ in range(n):
        U = BCMatrix(_haar_unitary(rng, cfg.dim), _haar_unitary(rng, cfg.dim))
        try:
            nU = cstar.check_unitary_norm(U)
        except cstar.NotUnitaryError:
            t.add(0.0, bad=True)
            continue
        t.add(*_h_absdiff(nU, one))
    return t


def _hom_samples(rng, n):
    """Thirds: general, hermitian (real components), unitary (unit components)."""
    k = n // 3
    out = _bc_idem(rng, n - 2 * k, 2.0)
    out += [BicomplexNumber.from_idempotent(a, b) for a, b in rng.uniform(-2, 2, (k, 2))]
    out += [BicomplexNumber.from_idempotent(a, b) for a, b in _unit(rng, (k, 2))]
    return out


def _hom_property(key):
    def run(rng, n, cfg):
        t = _Trials()
        samples = _hom_samples(rng, n)
        for f in _HOMS:
            for Z in samples:
                rep = cstar.hom_property_check(f, [Z])
                if rep["count"][key]:
                    t.add(rep["max_residual"][key])
        return t

    return run


_register("hom-conjugation", "cstar", 1_000, 1e-12)(_hom_property("conjugation"))
_register("hom-positivity", "cstar", 1_000, 1e-12)(_hom_property("positivity"))
_register("hom-hermitian", "cstar", 1_000, 1e-12)(_hom_property("hermitian"))
_register("hom-unitary", "cstar", 1_000, 1e-10)(_hom_property("unitary"))


def _ideal_samples(rng, n):
    """Labelled samples: elements of I1 as ``z + j(iz)``, of I2 as ``z - j(iz)``, generic."""
    kinds = rng.integers(0, 4, n)
    zs = _cplx(rng, n, 2.0)
    ws = _cplx(rng, n, 2.0)
    out = []
    for k, z, w in zip(kinds, zs, ws):
        if k <= 1:
            out.append((BicomplexNumber(z, 1j * z), "I1"))
        elif k == 2:
            out.append((BicomplexNumber(z, -1j * z), "I2"))
        else:
            out.append((BicomplexNumber(z, w), None))
    return out


@_register("kernel-equals-I1", "cstar", 10_000, 0.0)
def _p_kernel_i1(rng, n, cfg):
    t = _Trials()
    for Z, label in _ideal_samples(rng, n):
        fz = cstar.hom_apply(RingHom.TO_C_PLUS, Z)
        in_kernel = abs(fz.z) <= 1e-14 * (1 + euclidean_norm(Z))
        a = cstar.ideal_membership(Z, IdealTag.I1)
        b = cstar.ideal_membership_cartesian(Z, IdealTag.I1)
        want = label == "I1" or Z.is_zero()
        t.add(0.0, bad=not (in_kernel == a == b == want))
    return t


@_register("maximal-ideals", "cstar", 1_000, 1e-12)
def _p_maximal(rng, n, cfg):
    # ToC_plus is onto C(i), multiplicative, and kills exactly I1; ToC_minus
    # kills exactly I2; every Z splits as an I1 part plus an I2 part
    t = _Trials()
    cs = _cplx(rng, n, 2.0)
    a_s, b_s = _bc_cart(rng, n), _bc_cart(rng, n)
    for c, a, b in zip(cs, a_s, b_s):
        onto = abs(cstar.hom_apply(RingHom.TO_C_PLUS, BicomplexNumber(c, 0)).z - c)
        fab = cstar.hom_apply(RingHom.TO_C_PLUS, bc_mul(a, b)).z
        fa = cstar.hom_apply(RingHom.TO_C_PLUS, a).z
        fb = cstar.hom_apply(RingHom.TO_C_PLUS, b).z
        mult = abs(fab - fa * fb) / (1 + abs(a) * abs(b))
        p1 = BicomplexNumber.from_idempotent(a.z1, 0)
        p2 = BicomplexNumber.from_idempotent(0, a.z2)
        split = max(_bc_diff(p1 + p2, a))
        bad = not (cstar.ideal_membership(p1, IdealTag.I1) and cstar.ideal_membership(p2, IdealTag.I2))
        bad |= cstar.ideal_membership(p1, IdealTag.I2) and not p1.is_zero()
        minus_kernel = abs(cstar.hom_apply(RingHom.TO_C_MINUS, p2).z)
        r = max(onto, mult, split, minus_kernel)
        t.add(r, bad=bad)
    return t


@_register("quotient-norm-oracle", "cstar", 100, 1e-3)
def _p_quotient_oracle(rng, n, cfg):
    t = _Trials()
    for k, Z in enumerate(_bc_idem(rng, n, 3.0)):
        ideal = IdealTag.I1 if k % 2 == 0 else IdealTag.I2
        t.add(*_h_absdiff(cstar.quotient_norm(Z, ideal), cstar.quotient_norm_bruteforce(Z, ideal)))
    return t


@_register("quotient-cstar", "cstar", 1_000, 1e-8)
def _p_quotient_cstar(rng, n, cfg):
    t = _Trials()
    for k, Z in enumerate(_bc_idem(rng, n, 3.0)):
        ideal = IdealTag.I1 if k % 2 == 0 else IdealTag.I2
        lhs = cstar.quotient_norm(bc_mul(conjugate(Z, "dag3"), Z), ideal)
        rhs = cstar.quotient_norm(Z, ideal) ** 2
        t.add(*_h_absdiff(lhs, rhs))
    return t


@_register("ideal-self-adjoint", "cstar", 1_000, 0.0)
def _p_self_adjoint(rng, n, cfg):
    t = _Trials()
    for k, x in enumerate(_cplx(rng, n, 3.0)):
        ideal = IdealTag.I1 if k % 2 == 0 else IdealTag.I2
        Z = BicomplexNumber(x, 1j * x) if ideal is IdealTag.I1 else BicomplexNumber(x, -1j * x)
        Zs = conjugate(Z, "dag3")
        ok = cstar.ideal_membership(Zs, ideal) and cstar.ideal_membership_cartesian(Zs, ideal)
        t.add(0.0, bad=not ok)
    return t


@_register("proper-ideal-invertible-witness", "cstar", 1_000, 1e-12)
def _p_witness(rng, n, cfg):
    t = _Trials()
    zs = _cplx(rng, n, 3.0)
    zs = np.where(np.abs(zs) < 1e-3, 1e-3, zs)
    for z1 in zs:
        r = cstar.invertible_in_ideal_witness(z1)
        inside = cstar.ideal_membership(BicomplexNumber.from_idempotent(z1, 0), IdealTag.I1)
        t.add(*_bc_diff(r, E1), bad=not inside)
    return t


# ---------------------------------------------------------------------------
# hardy
# ---------------------------------------------------------------------------

@_register("growth-estimate", "hardy", 1_000, 0.0)
def _p_growth(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        f = _series(rng, int(rng.integers(0, 65)), hardy.HARDY)
        Z = BicomplexNumber.from_idempotent(*_cplx(rng, 2, 0.9, disc=True))
        rel = hardy.growth_bound_check(f, Z)
        v = _violation(hyperbolic_norm(hardy.evaluate(f, Z)), hardy.growth_bound(f, Z))
        t.add(*v, bad=not rel.holds_le())
    return t


@_register("uniform-convergence", "hardy", 200, 1e-12)
def _p_uniform(rng, n, cfg):
    # partial sums f_m of a geometrically decaying f; on a polar grid of the
    # polydisc of radius r the error obeys the growth bound
    t = _Trials()
    for _ in range(n):
        deg = 64
        decay = rng.uniform(0.5, 0.95, 2)
        c1 = _cplx(rng, deg + 1) * decay[0] ** np.arange(deg + 1)
        c2 = _cplx(rng, deg + 1) * decay[1] ** np.arange(deg + 1)
        f = hardy.SeriesFunction.from_components(c1, c2)
        r = HyperbolicNumber(*rng.uniform(0.0, 0.9, 2))
        for m in (1, 2, 4, 8, 16, 32):
            fm = hardy.SeriesFunction.from_components(c1[: m + 1], c2[: m + 1])
            diff = fm - f
            sup = hardy.sup_on_polydisc(diff, r, radial=8, angular=32)
            bound = hardy.uniform_error_bound(diff, r)
            v1, v2 = _violation(sup, bound)
            t.add(v1 / (1 + bound.a1), v2 / (1 + bound.a2))
    return t


@_register("hardy-norm-inner", "hardy", 1_000, 1e-12)
def _p_norm_inner(rng, n, cfg):
    t = _Trials()
    for k in range(n):
        w = _BUILTIN[k % 3]
        deg = int(rng.integers(0, 33))
        f, g, h = (_series(rng, deg, w) for _ in range(3))
        a = BicomplexNumber.from_idempotent(*_cplx(rng, 2))
        nf, ng = hardy.d_norm(f), hardy.d_norm(g)
        scale = (1 + nf * ng).a1, (1 + nf * ng).a2
        ff = hardy.inner(f, f)
        r = [abs(ff.z1.imag), abs(ff.z2.imag)]
        r = [max(r[0], abs(ff.z1.real - hardy.d_norm_sq(f).a1) / scale[0]),
             max(r[1], abs(ff.z2.real - hardy.d_norm_sq(f).a2) / scale[1])]
        sym = _bc_diff(hardy.inner(g, f), conjugate(hardy.inner(f, g), "dag3"))
        lin = _bc_diff(hardy.inner(f * a + g, h), bc_mul(a, hardy.inner(f, h)) + hardy.inner(g, h))
        sep = _bc_diff(hardy.inner(f * E1, g * BicomplexNumber.from_idempotent(0, 1)), BicomplexNumber(0, 0))
        m = int(rng.integers(0, 20))
        mono = hardy.inner(hardy.SeriesFunction.monomial(m, w), hardy.SeriesFunction.monomial(m, w))
        bsq = w.beta_sq(m)
        orth = _bc_diff(mono, BicomplexNumber.from_idempotent(bsq[0][m], bsq[1][m]))
        off = _bc_diff(hardy.inner(hardy.SeriesFunction.monomial(m, w), hardy.SeriesFunction.monomial(m + 1, w)),
                       BicomplexNumber(0, 0))
        r = [max(r[l], sym[l] / scale[l], lin[l] / (scale[l] + 1), sep[l], orth[l] / (1 + m), off[l])
             for l in range(2)]
        t.add(*r)
    return t


@_register("multiplication-operator", "hardy", 1_000, 1e-12)
def _p_mult_operator(rng, n, cfg):
    # exact extrema of beta(n+1)/beta(n) for the builtin weights, then the
    # shift Z*f checked against them on random f: inf ||f|| <=' ||Zf|| <=' sup ||f||
    t = _Trials()
    big = 10_000
    ex = {w.kind.value: hardy.mult_ratio_extrema(w, big) for w in _BUILTIN}
    one = HyperbolicNumber(1.0, 1.0)
    hr = ex["hardy"]
    t.add(*map(max, zip(_h_absdiff(hr.sup, one), _h_absdiff(hr.inf, one))))
    t.add(*_h_absdiff(ex["dirichlet"].sup, HyperbolicNumber(math.sqrt(2), math.sqrt(2))))
    t.add(*_h_absdiff(ex["bergman"].inf, HyperbolicNumber(math.sqrt(0.5), math.sqrt(0.5))))
    bg = ex["bergman"]
    t.add(0.0, bad=not (bg.trend == "increasing" and bg.sup.a1 < 1 and bg.sup.a2 < 1))
    for k in range(n):
        w = _BUILTIN[k % 3]
        deg = int(rng.integers(0, 65))
        f = _series(rng, deg, w)
        zf = hardy.SeriesFunction.from_components(np.concatenate([[0], f.c1]), np.concatenate([[0], f.c2]), w)
        e = hardy.mult_ratio_extrema(w, deg + 1)
        nf, nzf = hardy.d_norm(f), hardy.d_norm(zf)
        hi = _violation(nzf, e.sup * nf)
        lo = _violation(e.inf * nf, nzf)
        t.add(max(hi[0], lo[0]) / (1 + nf.a1), max(hi[1], lo[1]) / (1 + nf.a2))
    return t


@_register("generating-function-convergence", "hardy", 300, 1e-10)
def _p_generating(rng, n, cfg):
    # T_N(Z) - T_2N(Z) shrinks under doubling until below tolerance
    t = _Trials()
    cap = 8192
    for k in range(n):
        w = _BUILTIN[k % 3]
        Z = BicomplexNumber.from_idempotent(*_cplx(rng, 2, 0.9, disc=True))
        N = 16
        diffs = []
        while N <= cap:
            d = hardy.generating_eval(w, Z, 2 * N) - hardy.generating_eval(w, Z, N)
            diffs.append(max(abs(d.z1), abs(d.z2)))
            if diffs[-1] < 1e-10:
                break
            N *= 2
        monotone = all(b <= a for a, b in zip(diffs, diffs[1:]))
        t.add(diffs[-1], bad=not monotone)
    return t


@_register("reproducing-property", "hardy", 1_000, 1e-10)
def _p_reproducing(rng, n, cfg):
    t = _Trials()
    for w in _BUILTIN:
        for _ in range(n):
            deg = int(rng.integers(0, 65))
            f = _series(rng, deg, w)
            W = BicomplexNumber.from_idempotent(*_cplx(rng, 2, 0.9, disc=True))
            N = deg if cfg.truncation is None else max(deg, cfg.truncation)
            t.add(*_bc_diff(hardy.inner(f, hardy.kernel(w, W, N)), hardy.evaluate(f, W)))
    return t


def _product_limited_pair(rng, rmax):
    """W, Z in the disc with ``|w_l z_l| <= rmax`` per component."""
    wr = 0.95 * np.sqrt(rng.uniform(0, 1, 2))
    zr = np.minimum(0.99, rmax / np.maximum(wr, 1e-300)) * np.sqrt(rng.uniform(0, 1, 2))
    W = BicomplexNumber.from_idempotent(*(wr * _unit(rng, 2)))
    Z = BicomplexNumber.from_idempotent(*(zr * _unit(rng, 2)))
    return W, Z


@_register("kernel-closed-vs-series", "hardy", 1_000, 1e-10)
def _p_kernel_closed(rng, n, cfg):
    t = _Trials()
    N = 200 if cfg.truncation is None else cfg.truncation
    for w in _BUILTIN:
        for _ in range(n):
            W, Z = _product_limited_pair(rng, 0.5)
            series = hardy.evaluate(hardy.kernel(w, W, N), Z)
            t.add(*_bc_diff(hardy.kernel_closed(w.kind, W, Z), series))
    return t


@_register("kernel-norm-generating", "hardy", 1_000, 1e-10)
def _p_kernel_norm(rng, n, cfg):
    # ||K_W||^2 three ways: generating function at |W|_k^2, coefficient sum
    # of the truncated kernel, closed form at (|W|_k, |W|_k)
    t = _Trials()
    N = 200 if cfg.truncation is None else cfg.truncation
    for w in _BUILTIN:
        for _ in range(n):
            W = BicomplexNumber.from_idempotent(*_cplx(rng, 2, 0.9, disc=True))
            gen = hardy.kernel_norm_sq(w, W, N)
            coef = hardy.d_norm_sq(hardy.kernel(w, W, N))
            R = hyperbolic_norm(W).to_bicomplex()
            closed = hardy.kernel_closed(w.kind, R, R)
            c = HyperbolicNumber(closed.z1.real, closed.z2.real)
            a = _h_absdiff(gen, coef)
            b = _h_absdiff(gen, c)
            t.add(max(a[0], b[0] / (1 + c.a1)), max(a[1], b[1] / (1 + c.a2)))
    return t


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

@_register("automorphism-self-map", "operators", 1_000, 1e-12)
def _p_automorphism(rng, n, cfg):
    t = _Trials()
    for _ in range(n):
        psi = _automorphism(rng, 0.95)
        Z = BicomplexNumber.from_idempotent(*_cplx(rng, 2, 0.999, disc=True))
        img = psi(Z)
        at0 = _bc_diff(psi(BicomplexNumber(0, 0)), bc_mul(psi.lam, psi.w))
        ok = psi.verify_self_map() and abs(img.z1) < 1 and abs(img.z2) < 1
        t.add(*at0, bad=not ok)
    return t


@_register("automorphism-sandwich", "operators", 100, 1e-6)
def _p_sandwich(rng, n, cfg):
    # n automorphisms with |W| components <= 0.5, 20 functions of degree <= 32 each
    t = _Trials()
    N = 512 if cfg.truncation is None else cfg.truncation
    for _ in range(n):
        psi = _automorphism(rng, 0.5)
        L, U = operators.thm36_bounds(psi)
        fs = [_series(rng, int(rng.integers(0, 33)), hardy.HARDY) for _ in range(20)]
        for f, g in zip(fs, operators.compose_many(fs, psi, N)):
            nf, ng = hardy.d_norm(f), hardy.d_norm(g)
            lo = _violation(L * nf, ng)
            hi = _violation(ng, U * nf)
            t.add(max(lo[0], hi[0]), max(lo[1], hi[1]))
    return t


def _affine(rng):
    # |b| <= 0.5 and |a| + |b| < 1 per component
    b = _cplx(rng, 2, 0.5, disc=True)
    a = (1 - np.abs(b)) * np.sqrt(rng.uniform(0, 1, 2)) * 0.999 * _unit(rng, 2)
    return operators.HoloSelfMap.affine(BicomplexNumber.from_idempotent(*a), BicomplexNumber.from_idempotent(*b))


@_register("composition-norm-bracket", "operators", 100, 1e-6)
def _p_bracket(rng, n, cfg):
    # first half automorphisms, second half affine self-maps
    t = _Trials()
    N = 128 if cfg.truncation is None else cfg.truncation
    half = n // 2
    for k in range(n):
        phi = _automorphism(rng, 0.5) if k < n - half else _affine(rng)
        L, U = operators.cor37_bounds(phi)
        est = operators.estimate_norm(phi, hardy.HARDY, N)
        lo = _violation(L, est)
        hi = _violation(est, U)
        t.add(max(lo[0], hi[0]), max(lo[1], hi[1]))
    return t


@_register("composition-factorization", "operators", 200, 0.0)
def _p_factorization(rng, n, cfg):
    # component 1 of C_Phi depends only on the first components of the symbol
    t = _Trials()
    N = 32
    for _ in range(n):
        lam1, lam2, lam2b = _unit(rng, 3)
        w1, w2, w2b = _cplx(rng, 3, 0.9, disc=True)
        p = operators.DiscAutomorphism(BicomplexNumber.from_idempotent(lam1, lam2),
                                       BicomplexNumber.from_idempotent(w1, w2))
        q = operators.DiscAutomorphism(BicomplexNumber.from_idempotent(lam1, lam2b),
                                       BicomplexNumber.from_idempotent(w1, w2b))
        A = operators.composition_matrix(p, hardy.HARDY, N).matrix
        B = operators.composition_matrix(q, hardy.HARDY, N).matrix
        d1 = float(np.max(np.abs(A.A1 - B.A1)))
        f = _series(rng, 8, hardy.HARDY) * E1
        g = operators.compose_series(f, p, N)
        t.add(d1, float(np.max(np.abs(g.c2))))
    return t


def _small_map(rng, deg):
    c1 = np.concatenate([[0], _cplx(rng, deg) / deg])
    c2 = np.concatenate([[0], _cplx(rng, deg) / deg])
    return operators.HoloSelfMap.from_components(c1, c2)


@_register("composition-associativity", "operators", 200, 1e-8)
def _p_associativity(rng, n, cfg):
    # (f o Phi) o Theta == f o (Phi o Theta) through degree N; exact for
    # zero constant terms since degree-m coefficients only see degrees <= m
    t = _Trials()
    N = 64
    for _ in range(n):
        f = _series(rng, int(rng.integers(1, 9)), hardy.HARDY)
        phi = _small_map(rng, int(rng.integers(1, 9)))
        theta = _small_map(rng, int(rng.integers(1, 9)))
        left = operators.compose_series(operators.compose_series(f, phi, N), theta, N)
        inner_map = operators.HoloSelfMap.from_series(operators.compose_series(phi.as_series(), theta, N))
        right = operators.compose_series(f, inner_map, N)
        a1, a2 = left.padded(N)
        b1, b2 = right.padded(N)
        s = 1 + float(max(np.max(np.abs(a1)), np.max(np.abs(a2))))
        t.add(float(np.max(np.abs(a1 - b1))) / s, float(np.max(np.abs(a2 - b2))) / s)
    return t


@_register("isometric-rotations", "operators", 100, 1e-10)
def _p_rotations(rng, n, cfg):
    # Psi(Z) = lambda Z: L = U = 1, estimate (1, 1) at every N, norms preserved
    t = _Trials()
    one = HyperbolicNumber(1.0, 1.0)
    zero = BicomplexNumber(0, 0)
    for k in range(n):
        lam = BicomplexNumber.from_idempotent(*_unit(rng, 2))
        psi = lam if k else BicomplexNumber(1, 0)
        rot = operators.DiscAutomorphism(psi, zero)
        L, U = operators.thm36_bounds(rot)
        r = [max(a, b) for a, b in zip(_h_absdiff(L, one), _h_absdiff(U, one))]
        for N in (8, 32, 128):
            r = [max(a, b) for a, b in zip(r, _h_absdiff(operators.estimate_norm(rot, hardy.HARDY, N), one))]
        w = _BUILTIN[k % 3]
        f = _series(rng, int(rng.integers(0, 33)), w)
        g = operators.compose_series(f, rot, 64)
        r = [max(a, b) for a, b in zip(r, _h_absdiff(hardy.d_norm(g), hardy.d_norm(f)))]
        t.add(*r)
    return t


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def _stream(seed, name):
    return np.random.default_rng(np.random.SeedSequence([int(seed), zlib.crc32(name.encode())]))


def resolve_selection(selection):
    """Expand names, group names or "all" into registered property names."""
    if selection is None or selection == "all":
        return list(_REGISTRY)
    if isinstance(selection, str):
        selection = [s.strip() for s in selection.split(",") if s.strip()]
    names = []
    for s in selection:
        if s in GROUPS:
            names.extend(property_names(s))
        elif s in _REGISTRY:
            names.append(s)
        else:
            raise UnknownPropertyError(s)
    return list(dict.fromkeys(names))


def run_property(name, config):
    p = _REGISTRY[name]
    n = p.samples if config.samples is None else int(config.samples)
    tol = float(config.tol.get(name, p.tol))
    t = p.fn(_stream(config.seed, name), n, config)
    r1 = max(t.r1, default=0.0)
    r2 = max(t.r2, default=0.0)
    fails = sum(b or a > tol or c > tol for a, c, b in zip(t.r1, t.r2, t.bad))
    return PropertyReport(name, p.anchor, len(t.r1), fails, HyperbolicNumber(r1, r2), tol)


def run_suite(config=None, selection="all"):
    """Run the selected properties (names, group names, or ``"all"``).

    Raises :class:`UnknownPropertyError` before running anything if a name
    is not registered.
    """
    config = SuiteConfig() if config is None else config
    if not 0 <= int(config.seed) < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    names = resolve_selection(selection)
    return [run_property(name, config) for name in names]


def report_document(reports, config):
    return {
        "seed": int(config.seed),
        "samples": config.samples,
        "truncation": config.truncation,
        "pass": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
