"""Finite-dimensional D-normed bicomplex C*-algebra.

A :class:`BCMatrix` is an ``n x n`` matrix with bicomplex entries, stored
as its pair of idempotent complex matrices ``(A1, A2)`` so that
``A = e1 A1 + e2 A2``.  Everything here acts on the two components
independently; the involution is the componentwise conjugate transpose
(which is the dag3 conjugation entrywise, transposed).
"""

import enum
import math
import warnings

import numpy as np
import scipy.linalg

from . import _kernels
from .core import (
    E1,
    BicomplexNumber,
    HyperbolicNumber,
    bc_mul,
    conjugate,
    hyperbolic_norm,
)

__all__ = [
    "BCMatrix",
    "IdealTag",
    "RingHom",
    "SingularError",
    "NotUnitaryError",
    "star",
    "d_norm",
    "real_norm",
    "operator_norm",
    "check_cstar_identity",
    "hermitian_decompose",
    "check_star_inverse",
    "check_unitary_norm",
    "hom_apply",
    "hom_property_check",
    "quotient_norm",
    "quotient_norm_bruteforce",
    "ideal_membership",
    "ideal_membership_cartesian",
    "invertible_in_ideal_witness",
]

POWER_TOL = 1e-12
POWER_MAX_SQUARINGS = 64
PIVOT_RTOL = 1e-12


class SingularError(np.linalg.LinAlgError):
    """A component matrix is numerically singular."""


class NotUnitaryError(ValueError):
    """The matrix does not satisfy ``A* A = A A* = 1``."""


class BCMatrix:
    """Immutable square bicomplex matrix in idempotent form."""

    __slots__ = ("A1", "A2")

    def __init__(self, A1, A2=None):
        A1 = np.array(A1, dtype=np.complex128)
        A2 = A1.copy() if A2 is None else np.array(A2, dtype=np.complex128)
        if A1.ndim != 2 or A1.shape[0] != A1.shape[1] or A1.shape != A2.shape:
            raise ValueError(f"need two square matrices of equal size, got {A1.shape} and {A2.shape}")
        if not (np.all(np.isfinite(A1)) and np.all(np.isfinite(A2))):
            raise ValueError("matrix entries must be finite")
        A1.flags.writeable = False
        A2.flags.writeable = False
        object.__setattr__(self, "A1", A1)
        object.__setattr__(self, "A2", A2)

    def __setattr__(self, name, value):
        raise AttributeError("BCMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n), np.eye(n))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n)), np.zeros((n, n)))

    @classmethod
    def from_entries(cls, rows):
        """Build from a nested list of :class:`BicomplexNumber`."""
        A1 = [[e.z1 for e in row] for row in rows]
        A2 = [[e.z2 for e in row] for row in rows]
        return cls(A1, A2)

    @classmethod
    def from_cartesian(cls, Z, W):
        """Build from the matrices of cartesian parts, ``A = Z + j W``."""
        Z = np.asarray(Z, dtype=np.complex128)
        W = np.asarray(W, dtype=np.complex128)
        return cls(Z - 1j * W, Z + 1j * W)

    @property
    def n(self):
        return self.A1.shape[0]

    dim = n

    def entry(self, r, c):
        return BicomplexNumber.from_idempotent(self.A1[r, c], self.A2[r, c])

    def __add__(self, other):
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return BCMatrix(self.A1 + other.A1, self.A2 + other.A2)

    def __sub__(self, other):
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return BCMatrix(self.A1 - other.A1, self.A2 - other.A2)

    def __neg__(self):
        return BCMatrix(-self.A1, -self.A2)

    def __matmul__(self, other):
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return BCMatrix(self.A1 @ other.A1, self.A2 @ other.A2)

    def __mul__(self, scalar):
        if isinstance(scalar, BCMatrix):
            return NotImplemented
        if isinstance(scalar, HyperbolicNumber):
            s1, s2 = scalar.a1, scalar.a2
        elif isinstance(scalar, BicomplexNumber):
            s1, s2 = scalar.z1, scalar.z2
        else:
            s1 = s2 = complex(scalar)
        return BCMatrix(s1 * self.A1, s2 * self.A2)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return np.array_equal(self.A1, other.A1) and np.array_equal(self.A2, other.A2)

    __hash__ = None

    def allclose(self, other, atol=1e-12, rtol=0.0):
        return (np.allclose(self.A1, other.A1, atol=atol, rtol=rtol)
                and np.allclose(self.A2, other.A2, atol=atol, rtol=rtol))

    def max_abs_diff(self, other):
        """Componentwise max-entry distance as a hyperbolic number."""
        d1 = float(np.max(np.abs(self.A1 - other.A1), initial=0.0))
        d2 = float(np.max(np.abs(self.A2 - other.A2), initial=0.0))
        return HyperbolicNumber(d1, d2)

    def is_hermitian(self, atol=1e-12):
        return self.allclose(star(self), atol=atol)

    def __repr__(self):
        return f"BCMatrix(n={self.n}, A1={self.A1.tolist()!r}, A2={self.A2.tolist()!r})"


def star(A):
    return BCMatrix(A.A1.conj().T, A.A2.conj().T)


def operator_norm(M):
    """Largest singular value of a complex matrix.

    Closed form for sizes 1 and 2, the power method on ``M^H M`` above that.
    """
    M = np.asarray(M, dtype=np.complex128)
    n = M.shape[1]
    if M.size == 0:
        return 0.0
    if n == 1:
        return float(np.linalg.norm(M[:, 0]))
    if n == 2 and M.shape[0] == 2:
        # eigenvalues of the Hermitian Gram matrix [[p, q], [q*, s]]
        a, b = M[:, 0], M[:, 1]
        p = float(np.vdot(a, a).real)
        s = float(np.vdot(b, b).real)
        q = np.vdot(a, b)
        lam = (p + s) / 2 + math.hypot((p - s) / 2, abs(q))
        return math.sqrt(lam)
    lam, _ = _kernels.gram_top_eig(M, POWER_TOL, POWER_MAX_SQUARINGS)
    return math.sqrt(max(lam, 0.0))


def d_norm(A):
    """D-valued operator norm ``(||A1||, ||A2||)``."""
    return HyperbolicNumber(operator_norm(A.A1), operator_norm(A.A2))


def real_norm(A):
    """Real norm ``sqrt((||A1||**2 + ||A2||**2) / 2)``."""
    return d_norm(A).magnitude()


def check_cstar_identity(A):
    """Componentwise ``| ||A* A||_D - ||A||_D**2 |``."""
    lhs = d_norm(star(A) @ A)
    rhs = d_norm(A) ** 2
    return abs(lhs - rhs)


def hermitian_decompose(A):
    """Split ``A = u + i v`` with ``u`` and ``v`` hermitian."""
    As = star(A)
    u = BCMatrix((A.A1 + As.A1) / 2, (A.A2 + As.A2) / 2)
    v = BCMatrix((A.A1 - As.A1) / 2j, (A.A2 - As.A2) / 2j)
    return u, v


def _component_inverse(M):
    with warnings.catch_warnings():
        # an exactly zero pivot is reported below as SingularError
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(M, check_finite=False)
    pivots = np.abs(np.diag(lu))
    if pivots.max(initial=0.0) == 0.0 or pivots.min() <= PIVOT_RTOL * pivots.max():
        raise SingularError("component matrix is numerically singular")
    return scipy.linalg.lu_solve((lu, piv), np.eye(M.shape[0], dtype=np.complex128), check_finite=False)


def bc_matrix_inverse(A):
    return BCMatrix(_component_inverse(A.A1), _component_inverse(A.A2))


def check_star_inverse(A, tol=1e-8):
    """``(A*)^-1 == (A^-1)*`` within ``tol`` (relative to the inverse size)."""
    lhs = bc_matrix_inverse(star(A))
    rhs = star(bc_matrix_inverse(A))
    d = lhs.max_abs_diff(rhs)
    scale1 = 1.0 + float(np.max(np.abs(rhs.A1)))
    scale2 = 1.0 + float(np.max(np.abs(rhs.A2)))
    return d.a1 <= tol * scale1 and d.a2 <= tol * scale2


def is_unitary(A, tol=1e-8):
    eye = BCMatrix.identity(A.n)
    As = star(A)
    return (As @ A).allclose(eye, atol=tol) and (A @ As).allclose(eye, atol=tol)


def check_unitary_norm(A, tol=1e-8):
    if not is_unitary(A, tol):
        raise NotUnitaryError("A* A = A A* = 1 does not hold")
    return d_norm(A)


# ---------------------------------------------------------------------------
# ring homomorphisms and ideals of BC
# ---------------------------------------------------------------------------

class RingHom(enum.Enum):
    IDENTITY = "Identity"
    ZERO = "Zero"
    PROJ_E1 = "ProjE1"
    PROJ_E2 = "ProjE2"
    TO_C_PLUS = "ToC_plus"
    TO_C_MINUS = "ToC_minus"


class IdealTag(enum.Enum):
    I1 = "I1"  # e1 BC
    I2 = "I2"  # e2 BC


def hom_apply(f, Z):
    """Apply one of the listed ring homomorphisms.

    The two maps onto C(i) return their value embedded in BC with zero
    j-part: ``z + j w -> z + i w`` and ``z + j w -> z - i w``.
    """
    f = RingHom(f)
    if f is RingHom.IDENTITY:
        return Z
    if f is RingHom.ZERO:
        return BicomplexNumber(0, 0)
    if f is RingHom.PROJ_E1:
        return BicomplexNumber.from_idempotent(Z.z1, 0)
    if f is RingHom.PROJ_E2:
        return BicomplexNumber.from_idempotent(0, Z.z2)
    if f is RingHom.TO_C_PLUS:
        return BicomplexNumber(Z.z + 1j * Z.w, 0)
    return BicomplexNumber(Z.z - 1j * Z.w, 0)


def _dplus_residual(Z):
    """Distance of ``Z`` from D+: imaginary parts plus negative real parts."""
    return max(abs(Z.z1.imag), abs(Z.z2.imag), -Z.z1.real, -Z.z2.real, 0.0)


def _d_residual(Z):
    return max(abs(Z.z1.imag), abs(Z.z2.imag))


def hom_property_check(f, samples, unit_tol=1e-12):
    """Check the *-homomorphism properties of ``f`` on each sample.

    Returns a dict of per-property max residuals and the number of samples
    each property was evaluated on:

    ``conjugation``  ``|f(Z^dag3) - f(Z)^dag3|``
    ``positivity``   distance of ``f(Z^dag3 Z)`` from D+
    ``hermitian``    imaginary size of ``f(Z)`` for samples with ``Z = Z^dag3``
    ``unitary``      ``| |f(Z)|_k - |f(1)|_k |`` for samples with ``Z^dag3 Z = 1``

    ``f(1)`` is the unity of the image of ``f``; it is 1 for the maps onto
    C(i) and ``e1``/``e2`` for the projections, whose images are the ideals.
    """
    f = RingHom(f)
    if f is RingHom.ZERO:
        raise ValueError("the zero homomorphism is excluded")
    unit_image = hyperbolic_norm(hom_apply(f, BicomplexNumber(1, 0)))
    res = {"conjugation": 0.0, "positivity": 0.0, "hermitian": 0.0, "unitary": 0.0}
    counts = {k: 0 for k in res}
    for Z in samples:
        fz = hom_apply(f, Z)
        zs = conjugate(Z, "dag3")
        d = hom_apply(f, zs) - conjugate(fz, "dag3")
        res["conjugation"] = max(res["conjugation"], abs(d.z1), abs(d.z2))
        counts["conjugation"] += 1

        res["positivity"] = max(res["positivity"], _dplus_residual(hom_apply(f, bc_mul(zs, Z))))
        counts["positivity"] += 1

        scale = 1.0 + max(abs(Z.z1), abs(Z.z2))
        if (Z - zs).isclose(BicomplexNumber(0, 0), abs_tol=unit_tol * scale):
            res["hermitian"] = max(res["hermitian"], _d_residual(fz))
            counts["hermitian"] += 1
        if bc_mul(zs, Z).isclose(BicomplexNumber(1, 0), abs_tol=unit_tol):
            diff = abs(hyperbolic_norm(fz) - unit_image)
            res["unitary"] = max(res["unitary"], diff.a1, diff.a2)
            counts["unitary"] += 1
    return {"max_residual": res, "count": counts}


def quotient_norm(Z, ideal):
    """``|Z + I|_k``: (0, |z2|) modulo I1 and (|z1|, 0) modulo I2."""
    ideal = IdealTag(ideal)
    if ideal is IdealTag.I1:
        return HyperbolicNumber(0.0, abs(Z.z2))
    return HyperbolicNumber(abs(Z.z1), 0.0)


def quotient_norm_bruteforce(Z, ideal, radius=10.0, angles=360, refine=40):
    """Numerical infimum of ``|Z - y|_k`` over ``y`` in the ideal.

    The ideal element ``e1 x`` (or ``e2 x``) is searched over a log-radial
    grid ``|x| in {0} U [1e-3, radius]`` followed by zoomed local grids
    around the best point.  The infimum in the partial order is taken
    componentwise, which is legitimate because the components decouple.
    """
    ideal = IdealTag(ideal)
    radii = np.concatenate([[0.0], np.geomspace(1e-3, radius, 200)])
    theta = np.linspace(0.0, 2 * np.pi, angles, endpoint=False)
    grid = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    target = Z.z1 if ideal is IdealTag.I1 else Z.z2
    # distance in the ideal's component; the other component is unaffected
    vals = np.abs(target - grid)
    k = int(np.argmin(vals))
    best_x, best = grid[k], float(vals[k])
    step = max(radius * 2 * np.pi / angles, 1e-3)
    offs = np.linspace(-1.0, 1.0, 21)
    local = (offs[:, None] + 1j * offs[None, :]).ravel()
    for _ in range(refine):
        cand = best_x + step * local
        cand = cand[np.abs(cand) <= radius]
        v = np.abs(target - cand)
        k = int(np.argmin(v))
        if v[k] < best:
            best_x, best = cand[k], float(v[k])
        step /= 4
    if ideal is IdealTag.I1:
        return HyperbolicNumber(best, abs(Z.z2))
    return HyperbolicNumber(abs(Z.z1), best)


def _member_threshold(Z):
    return 1e-14 * (1.0 + math.hypot(abs(Z.z), abs(Z.w)))


def ideal_membership(Z, ideal):
    """Idempotent test: ``Z in I1`` iff ``z2 = 0``; ``Z in I2`` iff ``z1 = 0``."""
    ideal = IdealTag(ideal)
    comp = Z.z2 if ideal is IdealTag.I1 else Z.z1
    return abs(comp) <= _member_threshold(Z)


def ideal_membership_cartesian(Z, ideal):
    """Cartesian test: ``Z in I1`` iff ``w = i z``; ``Z in I2`` iff ``w = -i z``."""
    ideal = IdealTag(ideal)
    sign = 1 if ideal is IdealTag.I1 else -1
    return abs(Z.w - sign * 1j * Z.z) <= _member_threshold(Z)


def invertible_in_ideal_witness(z1):
    """For ``z1 != 0`` return ``(e1 z1) (e1 / z1)``, which equals ``e1``."""
    a = BicomplexNumber.from_idempotent(z1, 0)
    b = bc_mul(E1, BicomplexNumber(1 / complex(z1), 0))
    return bc_mul(a, b)
