"""Composition operators on the bicomplex Hardy space.

``C_Phi f = f o Phi`` splits as ``e1 C_Phi1 + e2 C_Phi2``, so compositions
are computed one idempotent component at a time on truncated coefficient
arrays.  Powers of the symbol's series come from
:func:`bclab._kernels.truncated_powers` (iterated truncated convolution),
which is exact through the truncation degree.
"""

import math
from typing import NamedTuple

import numpy as np

from . import _kernels
from .core import (
    BicomplexNumber,
    DomainError,
    h_sqrt,
    hyperbolic_norm,
    in_unit_disc,
)
from .cstar import BCMatrix, d_norm
from .hardy import HARDY, SeriesFunction, _weights, default_truncation

__all__ = [
    "DiscAutomorphism",
    "HoloSelfMap",
    "CompositionMatrix",
    "NotSelfMapError",
    "DegenerateError",
    "automorphism_eval",
    "compose_series",
    "compose_many",
    "composition_matrix",
    "estimate_norm",
    "thm36_bounds",
    "cor37_bounds",
]


class NotSelfMapError(ValueError):
    """The symbol does not map the bicomplex unit disc into itself."""


class DegenerateError(ZeroDivisionError):
    """A Mobius denominator vanished."""


class HoloSelfMap:
    """Power series ``Phi(Z) = sum c_n Z**n`` meant as a self-map of the disc.

    Only ``|Phi(0)|_k <' 1`` is enforced.  :meth:`grid_check` samples
    ``|Phi_l(z)| < 1`` on a circle of radius 0.99; that is a sanity check,
    not a proof.
    """

    __slots__ = ("c1", "c2")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        self._set(np.array([c.z1 for c in coeffs], dtype=np.complex128),
                  np.array([c.z2 for c in coeffs], dtype=np.complex128))

    def _set(self, c1, c2):
        if c1.size == 0:
            c1 = c2 = np.zeros(1, dtype=np.complex128)
        c1.flags.writeable = False
        c2.flags.writeable = False
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    def __setattr__(self, name, value):
        raise AttributeError("HoloSelfMap is immutable")

    @classmethod
    def from_components(cls, c1, c2):
        c1 = np.array(c1, dtype=np.complex128).ravel()
        c2 = np.array(c2, dtype=np.complex128).ravel()
        m = max(c1.size, c2.size)
        self = cls.__new__(cls)
        self._set(np.pad(c1, (0, m - c1.size)), np.pad(c2, (0, m - c2.size)))
        return self

    @classmethod
    def from_series(cls, f):
        return cls.from_components(f.c1, f.c2)

    @classmethod
    def identity(cls):
        return cls.from_components([0, 1], [0, 1])

    @classmethod
    def affine(cls, a, b):
        """``Phi(Z) = a Z + b``."""
        return cls.from_components([b.z1, a.z1], [b.z2, a.z2])

    @property
    def degree(self):
        return self.c1.size - 1

    @property
    def coeffs(self):
        return [BicomplexNumber.from_idempotent(a, b) for a, b in zip(self.c1, self.c2)]

    def at_zero(self):
        return BicomplexNumber.from_idempotent(self.c1[0], self.c2[0])

    def constant_ok(self):
        return in_unit_disc(self.at_zero())

    def as_series(self, weights=HARDY):
        return SeriesFunction.from_components(self.c1, self.c2, weights)

    def __call__(self, Z):
        v1 = _kernels.horner(self.c1, np.array([Z.z1]))[0]
        v2 = _kernels.horner(self.c2, np.array([Z.z2]))[0]
        return BicomplexNumber.from_idempotent(v1, v2)

    def grid_check(self, radius=0.99, samples=360):
        pts = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
        return bool(np.all(np.abs(_kernels.horner(self.c1, pts)) < 1)
                    and np.all(np.abs(_kernels.horner(self.c2, pts)) < 1))

    def __repr__(self):
        return f"HoloSelfMap(degree={self.degree})"


class DiscAutomorphism:
    """``Psi(Z) = lambda (Z + W) / (1 + W^dag3 Z)`` with ``|lambda|_k = 1``."""

    __slots__ = ("lam", "w")

    def __init__(self, lam, w, tol=1e-12):
        n = hyperbolic_norm(lam)
        if abs(n.a1 - 1) > tol or abs(n.a2 - 1) > tol:
            raise ValueError(f"|lambda|_k must be (1, 1), got {n!r}")
        if not in_unit_disc(w):
            raise NotSelfMapError("W must lie in the bicomplex unit disc")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("DiscAutomorphism is immutable")

    def __call__(self, Z):
        return automorphism_eval(self, Z)

    def __repr__(self):
        return f"DiscAutomorphism(lam={self.lam!r}, w={self.w!r})"

    def taylor(self, N):
        """Coefficients through degree ``N`` as a :class:`HoloSelfMap`.

        Per component ``(z + w)/(1 + conj(w) z) = w + (1 - |w|**2)
        sum_{n>=1} (-conj(w))**(n-1) z**n``.
        """
        comps = []
        n = np.arange(1, N + 1)
        for lam, w in ((self.lam.z1, self.w.z1), (self.lam.z2, self.w.z2)):
            c = np.empty(N + 1, dtype=np.complex128)
            c[0] = w
            c[1:] = (1 - abs(w) ** 2) * (-np.conj(w)) ** (n - 1)
            comps.append(lam * c)
        return HoloSelfMap.from_components(*comps)

    def verify_self_map(self, radius=0.999, samples=360):
        """Sample the circle ``|z_l| = radius`` and check images stay in the disc."""
        pts = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
        for lam, w in ((self.lam.z1, self.w.z1), (self.lam.z2, self.w.z2)):
            img = lam * (pts + w) / (1 + np.conj(w) * pts)
            if not np.all(np.abs(img) < 1):
                return False
        return True


def automorphism_eval(psi, Z):
    out = []
    for lam, w, z in ((psi.lam.z1, psi.w.z1, Z.z1), (psi.lam.z2, psi.w.z2, Z.z2)):
        den = 1 + w.conjugate() * z
        if den == 0:
            raise DegenerateError("1 + conj(w) z vanished")
        out.append(lam * (z + w) / den)
    return BicomplexNumber.from_idempotent(*out)


def _as_selfmap(phi, N):
    if isinstance(phi, DiscAutomorphism):
        return phi.taylor(N)
    if isinstance(phi, SeriesFunction):
        return HoloSelfMap.from_series(phi)
    return phi


def _tail_estimate(c, bsq):
    """Geometric extrapolation of the squared norm beyond the last coefficient."""
    m = np.abs(c) ** 2 * bsq
    block = min(8, m.size // 2)
    if block == 0:
        return math.inf
    b2 = float(np.sum(m[-block:]))
    b1 = float(np.sum(m[-2 * block:-block]))
    if b2 == 0.0:
        return 0.0
    if b1 == 0.0 or b2 >= b1:
        return math.inf
    rho = b2 / b1
    return b2 * rho / (1 - rho)


def _power_tables(phi, M, N):
    return (_kernels.truncated_powers(phi.c1, M, N),
            _kernels.truncated_powers(phi.c2, M, N))


def _compose_with_tables(f, tables, phi, N):
    out = []
    for a, t in zip((f.c1, f.c2), tables):
        out.append(a @ t[: a.size])
    bsq = f.weights.beta_sq(N)
    if phi.c1[0] == 0 and phi.c2[0] == 0 and f.degree * phi.degree <= N:
        tail = (0.0, 0.0)
    else:
        tail = (_tail_estimate(out[0], bsq[0]), _tail_estimate(out[1], bsq[1]))
    return SeriesFunction.from_components(out[0], out[1], f.weights, tail=tail)


def compose_series(f, phi, N=None):
    """Coefficients of ``f o Phi`` through degree ``N``.

    ``phi`` may be a :class:`HoloSelfMap`, a :class:`DiscAutomorphism` or a
    :class:`SeriesFunction`.  The result is exact through degree ``N``; its
    ``tail`` holds an estimate of the squared norm beyond ``N`` (exactly
    zero when ``Phi(0) = 0`` and the polynomial composition fits).
    """
    N = default_truncation() if N is None else N
    phi = _as_selfmap(phi, N)
    if not phi.constant_ok():
        raise NotSelfMapError("|Phi(0)|_k must be < 1 componentwise")
    tables = _power_tables(phi, f.degree, N)
    return _compose_with_tables(f, tables, phi, N)


def compose_many(fs, phi, N=None):
    """:func:`compose_series` for several functions sharing one power table."""
    N = default_truncation() if N is None else N
    phi = _as_selfmap(phi, N)
    if not phi.constant_ok():
        raise NotSelfMapError("|Phi(0)|_k must be < 1 componentwise")
    M = max(f.degree for f in fs)
    tables = _power_tables(phi, M, N)
    return [_compose_with_tables(f, tables, phi, N) for f in fs]


class CompositionMatrix(NamedTuple):
    """Truncated matrix of ``C_Phi`` in the basis ``Z**n / beta(n)``."""

    N: int
    matrix: BCMatrix


def composition_matrix(phi, weights=HARDY, N=None):
    """Entry ``(m, n)`` is ``[Z**m](Phi**n) * beta(m) / beta(n)``, ``m, n <= N``."""
    N = default_truncation() if N is None else N
    phi = _as_selfmap(phi, N)
    if not phi.constant_ok():
        raise NotSelfMapError("|Phi(0)|_k must be < 1 componentwise")
    b = _weights(weights).beta_array(N)
    mats = []
    for l, t in enumerate(_power_tables(phi, N, N)):
        mats.append((b[l][:, None] * t.T) / b[l][None, :])
    return CompositionMatrix(N, BCMatrix(*mats))


def estimate_norm(phi, weights=HARDY, N=None):
    """D-norm of the truncated composition matrix (a lower bound of ``||C_Phi||``)."""
    return d_norm(composition_matrix(phi, weights, N).matrix)


def thm36_bounds(psi):
    """Lower/upper factors ``((1 -+ rho)/(1 +- rho))**1/2`` with ``rho = |W|_k``."""
    rho = hyperbolic_norm(psi.w)
    lower = h_sqrt((1 - rho) / (1 + rho))
    upper = h_sqrt((1 + rho) / (1 - rho))
    return lower, upper


def cor37_bounds(phi):
    """Bracket ``(1/(1 - rho**2))**1/2 <=' ||C_Phi|| <=' ((1+rho)/(1-rho))**1/2``."""
    if isinstance(phi, DiscAutomorphism):
        rho = hyperbolic_norm(phi.w)
    else:
        rho = hyperbolic_norm(_as_selfmap(phi, 0).at_zero())
    if rho.a1 >= 1 or rho.a2 >= 1:
        raise DomainError("|Phi(0)|_k must be < 1 componentwise")
    lower = h_sqrt(1 / (1 - rho * rho))
    upper = h_sqrt((1 + rho) / (1 - rho))
    return lower, upper
