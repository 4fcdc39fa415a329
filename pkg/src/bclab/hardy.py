"""Bicomplex weighted Hardy spaces of the unit disc.

Elements are truncated power series ``f(Z) = sum a_n Z**n`` with bicomplex
coefficients.  A :class:`SeriesFunction` keeps the two idempotent coefficient
arrays ``(c1, c2)``, so ``f = e1 f1(z1) + e2 f2(z2)`` and every operation
below is two classical weighted-Hardy-space computations side by side.

The weight ``beta(n) = ||Z**n||`` is a hyperbolic number with strictly
positive components.  Builtin kinds: Hardy ``1``, Bergman
``(n+1)**-1/2``, Dirichlet ``(n+1)**1/2``.
"""

import enum
import os
import warnings
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import _kernels
from .core import (
    BicomplexNumber,
    DomainError,
    HyperbolicNumber,
    h_compare,
    h_sqrt,
    hyperbolic_norm,
)

__all__ = [
    "WeightKind",
    "WeightSequence",
    "SeriesFunction",
    "WeightMismatchError",
    "OutsideDiscWarning",
    "RatioExtrema",
    "default_truncation",
    "HARDY",
    "BERGMAN",
    "DIRICHLET",
    "d_norm_sq",
    "d_norm",
    "inner",
    "evaluate",
    "evaluate_many",
    "generating_eval",
    "kernel",
    "kernel_closed",
    "kernel_norm_sq",
    "growth_bound",
    "growth_bound_check",
    "mult_ratio_extrema",
]


def default_truncation():
    """Truncation degree used when none is given (``BCLAB_DEFAULT_N``, else 256)."""
    return int(os.environ.get("BCLAB_DEFAULT_N", "256"))


class WeightMismatchError(ValueError):
    """Two series live in spaces with different weights."""


class OutsideDiscWarning(UserWarning):
    """A truncated series was evaluated outside the bicomplex unit disc."""


class WeightKind(str, enum.Enum):
    HARDY = "hardy"
    BERGMAN = "bergman"
    DIRICHLET = "dirichlet"
    CUSTOM = "custom"


class WeightSequence:
    """The sequence ``beta(n)`` of positive hyperbolic weights.

    For ``kind="custom"`` pass ``beta``, a callable ``n -> HyperbolicNumber``
    (or a pair of reals) with both components strictly positive.
    """

    def __init__(self, kind="hardy", beta: Optional[Callable] = None, name=None):
        self.kind = WeightKind(kind)
        if self.kind is WeightKind.CUSTOM:
            if beta is None:
                raise ValueError("custom weights need a beta callable")
            self._beta = beta
        elif beta is not None:
            raise ValueError("beta is only accepted for custom weights")
        else:
            self._beta = None
        self.name = name or self.kind.value
        self._cache = np.zeros((2, 0))

    def __repr__(self):
        return f"WeightSequence({self.name!r})"

    def __eq__(self, other):
        if not isinstance(other, WeightSequence):
            return NotImplemented
        if self.kind is WeightKind.CUSTOM or other.kind is WeightKind.CUSTOM:
            return self is other or (self.kind == other.kind and self._beta is other._beta)
        return self.kind == other.kind

    def __hash__(self):
        return hash((self.kind, id(self._beta) if self._beta else None))

    def beta(self, n):
        b = self.beta_array(int(n))[:, int(n)]
        return HyperbolicNumber(b[0], b[1])

    def beta_array(self, N):
        """Shape ``(2, N+1)`` array of the weight components for ``n = 0..N``."""
        if self._cache.shape[1] > N:
            return self._cache[:, : N + 1]
        n = np.arange(N + 1, dtype=np.float64)
        if self.kind is WeightKind.HARDY:
            b = np.ones((2, N + 1))
        elif self.kind is WeightKind.BERGMAN:
            b = np.tile(1.0 / np.sqrt(n + 1), (2, 1))
        elif self.kind is WeightKind.DIRICHLET:
            b = np.tile(np.sqrt(n + 1), (2, 1))
        else:
            b = np.empty((2, N + 1))
            for k in range(N + 1):
                v = self._beta(k)
                b[0, k], b[1, k] = tuple(v)
            if not np.all(np.isfinite(b)) or np.any(b <= 0):
                raise ValueError("custom weights must have strictly positive components")
        b.flags.writeable = False
        self._cache = b
        return b

    def beta_sq(self, N):
        b = self.beta_array(N)
        return b * b


HARDY = WeightSequence("hardy")
BERGMAN = WeightSequence("bergman")
DIRICHLET = WeightSequence("dirichlet")

_BUILTIN = {"hardy": HARDY, "bergman": BERGMAN, "dirichlet": DIRICHLET}


def _weights(w):
    if isinstance(w, WeightSequence):
        return w
    return _BUILTIN[WeightKind(w).value]


class SeriesFunction:
    """Truncated power series with bicomplex coefficients.

    ``tail`` is an optional pair of floats estimating the squared norm
    dropped by truncation in each component, filled in by operations that
    truncate (composition); ``inf`` means the coefficients did not decay.
    """

    __slots__ = ("c1", "c2", "weights", "tail")

    def __init__(self, coeffs=(), weights=HARDY):
        coeffs = list(coeffs)
        c1 = np.array([a.z1 for a in coeffs], dtype=np.complex128)
        c2 = np.array([a.z2 for a in coeffs], dtype=np.complex128)
        self._set(c1, c2, _weights(weights), None)

    def _set(self, c1, c2, weights, tail):
        if c1.size == 0:
            c1 = np.zeros(1, dtype=np.complex128)
            c2 = np.zeros(1, dtype=np.complex128)
        c1.flags.writeable = False
        c2.flags.writeable = False
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, name, value):
        raise AttributeError("SeriesFunction is immutable")

    @classmethod
    def from_components(cls, c1, c2, weights=HARDY, tail=None):
        c1 = np.array(c1, dtype=np.complex128).ravel()
        c2 = np.array(c2, dtype=np.complex128).ravel()
        m = max(c1.size, c2.size)
        c1 = np.pad(c1, (0, m - c1.size))
        c2 = np.pad(c2, (0, m - c2.size))
        self = cls.__new__(cls)
        self._set(c1, c2, _weights(weights), tail)
        return self

    @classmethod
    def monomial(cls, n, weights=HARDY, coeff=None):
        coeff = BicomplexNumber(1, 0) if coeff is None else coeff
        c1 = np.zeros(n + 1, dtype=np.complex128)
        c2 = np.zeros(n + 1, dtype=np.complex128)
        c1[n], c2[n] = coeff.z1, coeff.z2
        return cls.from_components(c1, c2, weights)

    @property
    def degree(self):
        return self.c1.size - 1

    @property
    def coeffs(self):
        return [BicomplexNumber.from_idempotent(a, b) for a, b in zip(self.c1, self.c2)]

    def padded(self, N):
        """Component arrays padded (or cut) to length ``N + 1``."""
        out = []
        for c in (self.c1, self.c2):
            if c.size >= N + 1:
                out.append(c[: N + 1])
            else:
                out.append(np.pad(c, (0, N + 1 - c.size)))
        return out

    def with_weights(self, weights):
        return SeriesFunction.from_components(self.c1, self.c2, weights, self.tail)

    def _combine(self, other, op):
        if not isinstance(other, SeriesFunction):
            return NotImplemented
        _check_weights(self, other)
        N = max(self.degree, other.degree)
        a1, a2 = self.padded(N)
        b1, b2 = other.padded(N)
        return SeriesFunction.from_components(op(a1, b1), op(a2, b2), self.weights)

    def __add__(self, other):
        return self._combine(other, np.add)

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __mul__(self, scalar):
        if isinstance(scalar, SeriesFunction):
            return NotImplemented
        if not isinstance(scalar, BicomplexNumber):
            scalar = BicomplexNumber(scalar, 0)
        return SeriesFunction.from_components(scalar.z1 * self.c1, scalar.z2 * self.c2, self.weights)

    __rmul__ = __mul__

    def __call__(self, Z):
        return evaluate(self, Z)

    def __repr__(self):
        return f"SeriesFunction(degree={self.degree}, weights={self.weights.name!r})"


def _check_weights(f, g):
    if f.weights != g.weights:
        raise WeightMismatchError(f"{f.weights!r} != {g.weights!r}")


def d_norm_sq(f):
    """``sum |a_n|_k**2 beta(n)**2`` as a hyperbolic number."""
    bsq = f.weights.beta_sq(f.degree)
    s1 = float(np.sum(np.abs(f.c1) ** 2 * bsq[0]))
    s2 = float(np.sum(np.abs(f.c2) ** 2 * bsq[1]))
    return HyperbolicNumber(s1, s2)


def d_norm(f):
    return h_sqrt(d_norm_sq(f))


def inner(f, g):
    """``<f, g> = sum a_n b_n^dag3 beta(n)**2`` (bicomplex-valued)."""
    _check_weights(f, g)
    N = min(f.degree, g.degree)
    bsq = f.weights.beta_sq(N)
    s1 = np.sum(f.c1[: N + 1] * np.conj(g.c1[: N + 1]) * bsq[0])
    s2 = np.sum(f.c2[: N + 1] * np.conj(g.c2[: N + 1]) * bsq[1])
    return BicomplexNumber.from_idempotent(s1, s2)


def _warn_outside(points1, points2):
    if np.any(np.abs(points1) >= 1) or np.any(np.abs(points2) >= 1):
        warnings.warn("evaluation outside the bicomplex unit disc", OutsideDiscWarning, stacklevel=3)


def evaluate(f, Z):
    """``f(Z) = e1 f1(z1) + e2 f2(z2)`` by Horner's rule."""
    _warn_outside(np.array([Z.z1]), np.array([Z.z2]))
    v1 = _kernels.horner(f.c1, np.array([Z.z1]))[0]
    v2 = _kernels.horner(f.c2, np.array([Z.z2]))[0]
    return BicomplexNumber.from_idempotent(v1, v2)


def evaluate_many(f, z1, z2):
    """Vectorised evaluation at the points ``e1 z1[k] + e2 z2[k]``.

    Returns the two component value arrays.
    """
    z1 = np.asarray(z1, dtype=np.complex128).ravel()
    z2 = np.asarray(z2, dtype=np.complex128).ravel()
    _warn_outside(z1, z2)
    return _kernels.horner(f.c1, z1), _kernels.horner(f.c2, z2)


def _generating_coeffs(weights, N):
    bsq = _weights(weights).beta_sq(N)
    return 1.0 / bsq[0], 1.0 / bsq[1]


def generating_eval(weights, Z, N=None):
    """Truncated generating function ``T(Z) = sum_{n<=N} Z**n / beta(n)**2``."""
    N = default_truncation() if N is None else N
    g1, g2 = _generating_coeffs(weights, N)
    v1 = _kernels.horner(g1, np.array([Z.z1]))[0]
    v2 = _kernels.horner(g2, np.array([Z.z2]))[0]
    return BicomplexNumber.from_idempotent(v1, v2)


def kernel(weights, W, N=None):
    """Reproducing kernel ``K_W(Z) = T(W^dag3 Z)`` truncated to degree ``N``.

    Coefficient ``n`` is ``(W^dag3)**n / beta(n)**2``; in idempotent form
    ``W^dag3 = (conj w1, conj w2)``.
    """
    weights = _weights(weights)
    N = default_truncation() if N is None else N
    n = np.arange(N + 1)
    g1, g2 = _generating_coeffs(weights, N)
    k1 = np.conj(W.z1) ** n * g1
    k2 = np.conj(W.z2) ** n * g2
    return SeriesFunction.from_components(k1, k2, weights)


def _neg_log1m_over(u):
    """``-log(1 - u) / u`` with the removable singularity at 0 filled by 1."""
    x = -u
    w = 1.0 + x
    if w == 1.0:
        # log1p(x) == x to working precision
        return 1.0 + 0j
    log1p = np.log(w) * (x / (w - 1.0))
    return -log1p / u


def kernel_closed(kind, W, Z):
    """Closed-form kernel ``K_W(Z)`` for the builtin weights.

    Hardy ``1/(1-u)``, Bergman ``1/(1-u)**2``, Dirichlet
    ``(1/u) log(1/(1-u))`` with ``u = conj(w_l) z_l`` per component.
    """
    kind = WeightKind(kind.kind if isinstance(kind, WeightSequence) else kind)
    out = []
    for w, z in ((W.z1, Z.z1), (W.z2, Z.z2)):
        u = complex(np.conj(w) * z)
        if kind is WeightKind.HARDY:
            out.append(1.0 / (1.0 - u))
        elif kind is WeightKind.BERGMAN:
            out.append(1.0 / (1.0 - u) ** 2)
        elif kind is WeightKind.DIRICHLET:
            out.append(1.0 + 0j if u == 0 else complex(_neg_log1m_over(u)))
        else:
            raise ValueError("closed-form kernels exist only for builtin weights")
    return BicomplexNumber.from_idempotent(*out)


def kernel_norm_sq(weights, W, N=None):
    """``||K_W||**2 = T(|W|_k**2)``, computed from the generating function."""
    N = default_truncation() if N is None else N
    r = hyperbolic_norm(W) ** 2
    t = generating_eval(weights, r.to_bicomplex(), N)
    return HyperbolicNumber(t.z1.real, t.z2.real)


def growth_bound(f, Z):
    """``||f|| / sqrt(1 - |Z|_k**2)`` (Hardy weights)."""
    r = hyperbolic_norm(Z)
    if r.a1 >= 1 or r.a2 >= 1:
        raise DomainError("Z must lie in the open bicomplex unit disc")
    return d_norm(f) / h_sqrt(1 - r * r)


def growth_bound_check(f, Z):
    """Compare ``|f(Z)|_k`` with the Hardy-space growth bound."""
    if f.weights.kind is not WeightKind.HARDY:
        raise ValueError("the growth estimate is stated for Hardy weights")
    bound = growth_bound(f, Z)
    return h_compare(hyperbolic_norm(evaluate(f, Z)), bound)


class RatioExtrema(NamedTuple):
    """Extrema of ``beta(n+1)/beta(n)`` over ``0 <= n < N``.

    ``trend`` is ``"increasing"``, ``"decreasing"``, ``"constant"`` or
    ``"mixed"``; for a monotone ratio the corresponding extremum is a limit
    that the finite scan only approaches.
    """

    sup: HyperbolicNumber
    inf: HyperbolicNumber
    trend: str
    argsup: tuple
    arginf: tuple


def _trend(r):
    d = np.diff(r, axis=1)
    if np.all(d == 0):
        return "constant"
    if np.all(d >= 0):
        return "increasing"
    if np.all(d <= 0):
        return "decreasing"
    return "mixed"


def mult_ratio_extrema(weights, N):
    if N < 1:
        raise ValueError("N must be at least 1")
    b = _weights(weights).beta_array(N)
    r = b[:, 1:] / b[:, :-1]
    sup = HyperbolicNumber(r[0].max(), r[1].max())
    inf = HyperbolicNumber(r[0].min(), r[1].min())
    return RatioExtrema(
        sup,
        inf,
        _trend(r),
        (int(r[0].argmax()), int(r[1].argmax())),
        (int(r[0].argmin()), int(r[1].argmin())),
    )


def uniform_error_bound(diff, r):
    """``||diff|| / sqrt(1 - r**2)`` for a hyperbolic radius ``r <' 1``."""
    if r.a1 >= 1 or r.a2 >= 1 or not r.is_nonneg():
        raise DomainError("radius must lie in [0, 1) componentwise")
    return d_norm(diff) / h_sqrt(1 - r * r)


def sup_on_polydisc(f, r, radial=16, angular=64):
    """Max of ``|f(Z)|_k`` over a polar grid of ``|Z|_k <=' r`` (an estimate)."""
    out = []
    theta = np.linspace(0, 2 * np.pi, angular, endpoint=False)
    for c, rad in ((f.c1, r.a1), (f.c2, r.a2)):
        rho = rad * np.geomspace(1e-3, 1.0, radial)
        pts = np.concatenate([[0.0], (rho[:, None] * np.exp(1j * theta)[None, :]).ravel()])
        out.append(float(np.max(np.abs(_kernels.horner(c, pts)))))
    return HyperbolicNumber(*out)

