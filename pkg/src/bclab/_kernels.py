"""Hot numeric loops, with a numba path and a pure-numpy path.

The numba path is used when numba imports cleanly and the environment
variable ``BCLAB_DISABLE_NUMBA`` is unset (or ``0``).  Both paths are always
importable as ``numba_impl`` / ``numpy_impl`` so tests and the benchmark can
compare them directly.

Every kernel works on one idempotent component at a time (plain complex
arrays); the bicomplex bookkeeping lives in the callers.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _flag_disabled():
    return os.environ.get("BCLAB_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _flag_disabled()


# ---------------------------------------------------------------------------
# pure numpy
# ---------------------------------------------------------------------------

def _horner_np(coeffs, points):
    out = np.zeros(points.shape, dtype=np.complex128)
    for c in coeffs[::-1]:
        out = out * points + c
    return out


def _truncated_powers_np(phi, m, n):
    phi = np.asarray(phi, dtype=np.complex128)[: n + 1]
    table = np.zeros((m + 1, n + 1), dtype=np.complex128)
    table[0, 0] = 1.0
    for k in range(1, m + 1):
        table[k] = np.convolve(table[k - 1], phi)[: n + 1]
    return table


def _gram_top_eig_np(a, tol, maxsq):
    b = a.conj().T @ a
    scale = np.linalg.norm(b)
    if scale == 0.0:
        return 0.0, 0
    p = b / scale
    lam_old = -1.0
    lam = 0.0
    k = 0
    for k in range(1, maxsq + 1):
        p = p @ p
        p = p / np.linalg.norm(p)
        # p ~ v v^H: its largest column is a multiple of the top eigenvector
        j = int(np.argmax(np.sum(np.abs(p) ** 2, axis=0)))
        x = p[:, j] / np.linalg.norm(p[:, j])
        y = a @ x
        lam = float(np.vdot(y, y).real)
        if abs(lam - lam_old) <= tol * lam:
            break
        lam_old = lam
    return lam, k


numpy_impl = SimpleNamespace(
    name="numpy",
    horner=_horner_np,
    truncated_powers=_truncated_powers_np,
    gram_top_eig=_gram_top_eig_np,
)


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _horner_nb(coeffs, points):
        out = np.zeros(points.shape[0], dtype=np.complex128)
        deg = coeffs.shape[0]
        for p in range(points.shape[0]):
            z = points[p]
            acc = 0.0 + 0.0j
            for k in range(deg - 1, -1, -1):
                acc = acc * z + coeffs[k]
            out[p] = acc
        return out

    @njit(cache=True)
    def _truncated_powers_nb(phi, m, n):
        lphi = min(phi.shape[0], n + 1)
        table = np.zeros((m + 1, n + 1), dtype=np.complex128)
        table[0, 0] = 1.0
        for k in range(1, m + 1):
            prev = table[k - 1]
            row = table[k]
            for i in range(n + 1):
                pi = prev[i]
                if pi == 0:
                    continue
                top = min(lphi, n + 1 - i)
                for j in range(top):
                    row[i + j] += pi * phi[j]
        return table

    @njit(cache=True)
    def _gram_top_eig_nb(a, tol, maxsq):
        b = np.dot(np.ascontiguousarray(a.conj().T), a)
        scale = np.sqrt(np.sum(np.abs(b) ** 2))
        if scale == 0.0:
            return 0.0, 0
        p = b / scale
        n = b.shape[0]
        lam_old = -1.0
        lam = 0.0
        k = 0
        for k in range(1, maxsq + 1):
            p = np.dot(p, p)
            p /= np.sqrt(np.sum(np.abs(p) ** 2))
            best = -1.0
            j = 0
            for c in range(n):
                s = 0.0
                for r in range(n):
                    s += p[r, c].real ** 2 + p[r, c].imag ** 2
                if s > best:
                    best = s
                    j = c
            x = p[:, j] / np.sqrt(best)
            y = np.dot(a, np.ascontiguousarray(x))
            lam = 0.0
            for r in range(y.shape[0]):
                lam += y[r].real ** 2 + y[r].imag ** 2
            if abs(lam - lam_old) <= tol * lam:
                break
            lam_old = lam
        return lam, k

    numba_impl = SimpleNamespace(
        name="numba",
        horner=_horner_nb,
        truncated_powers=_truncated_powers_nb,
        gram_top_eig=_gram_top_eig_nb,
    )
else:  # pragma: no cover
    numba_impl = None


active = numba_impl if USE_NUMBA else numpy_impl


def horner(coeffs, points):
    """Evaluate ``sum coeffs[k] * p**k`` at every point of a 1-D array."""
    return active.horner(np.ascontiguousarray(coeffs, dtype=np.complex128),
                         np.ascontiguousarray(points, dtype=np.complex128))


def truncated_powers(phi, m, n):
    """Rows ``0..m`` hold the coefficients of ``phi**k`` truncated to degree ``n``."""
    return active.truncated_powers(np.ascontiguousarray(phi, dtype=np.complex128), int(m), int(n))


def gram_top_eig(a, tol=1e-12, max_squarings=64):
    """Largest eigenvalue of ``a^H a``; returns ``(lam, squarings)``.

    Power method on the Gram matrix ``B = a^H a`` run by repeated squaring:
    after ``k`` squarings the normalised ``B**(2**k)`` is (numerically) the
    projector onto the top eigenvector, and ``lam`` is the Rayleigh quotient
    of its dominant column.  Stops once ``lam`` changes by at most
    ``tol * lam``.
    """
    lam, k = active.gram_top_eig(np.ascontiguousarray(a, dtype=np.complex128), float(tol), int(max_squarings))
    return float(lam), int(k)
