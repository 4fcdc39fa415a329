import os
import subprocess
import sys

import numpy as np
import pytest

from bclab import _kernels

IMPLS = [_kernels.numpy_impl] + ([_kernels.numba_impl] if _kernels.numba_impl else [])


@pytest.fixture
def rng():
    return np.random.default_rng(5)


def rc(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.mark.parametrize("impl", IMPLS, ids=lambda i: i.name)
def test_horner_against_polyval(rng, impl):
    c = rc(rng, 33)
    p = 0.9 * rc(rng, 50) / 2
    assert np.allclose(impl.horner(c, p), np.polyval(c[::-1], p), rtol=1e-13)
    assert np.allclose(impl.horner(c[:1], p), c[0])


@pytest.mark.parametrize("impl", IMPLS, ids=lambda i: i.name)
def test_truncated_powers_against_repeated_product(rng, impl):
    phi = 0.4 * rc(rng, 6)
    m, n = 7, 20
    got = impl.truncated_powers(phi, m, n)
    assert got.shape == (m + 1, n + 1)
    power = np.array([1.0 + 0j])
    for k in range(m + 1):
        want = np.zeros(n + 1, complex)
        want[: min(power.size, n + 1)] = power[: n + 1]
        assert np.allclose(got[k], want, atol=1e-13)
        power = np.convolve(power, phi)[: n + 1]


@pytest.mark.parametrize("impl", IMPLS, ids=lambda i: i.name)
def test_gram_top_eig_against_svd(rng, impl):
    for n in (1, 3, 17, 60):
        a = rc(rng, n, n)
        lam, k = impl.gram_top_eig(a, 1e-12, 64)
        s = np.linalg.svd(a, compute_uv=False)[0]
        assert abs(lam - s * s) <= 1e-10 * s * s
        assert 0 <= k <= 64
    lam, _ = impl.gram_top_eig(np.zeros((4, 4), complex), 1e-12, 64)
    assert lam == 0


def test_gram_top_eig_repeated_singular_value():
    u = np.linalg.qr(np.random.default_rng(1).standard_normal((6, 6)))[0]
    a = u @ np.diag([2.0, 2.0, 1.0, 0.5, 0.1, 0.0]) @ u.T
    for impl in IMPLS:
        lam, _ = impl.gram_top_eig(a.astype(complex), 1e-12, 64)
        assert abs(lam - 4.0) < 1e-10


@pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")
def test_paths_agree(rng):
    c, p = rc(rng, 65), 0.5 * rc(rng, 200)
    assert np.allclose(_kernels.numpy_impl.horner(c, p), _kernels.numba_impl.horner(c, p), rtol=1e-13)
    phi = 0.3 * rc(rng, 12)
    assert np.allclose(_kernels.numpy_impl.truncated_powers(phi, 16, 40),
                       _kernels.numba_impl.truncated_powers(phi, 16, 40), atol=1e-13)


def _active_name(flag):
    env = dict(os.environ)
    env.pop("BCLAB_DISABLE_NUMBA", None)
    if flag is not None:
        env["BCLAB_DISABLE_NUMBA"] = flag
    out = subprocess.run([sys.executable, "-c", "from bclab import _kernels; print(_kernels.active.name)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _active_name("1") == "numpy"
    assert _active_name("true") == "numpy"


@pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")
def test_default_is_numba():
    assert _active_name(None) == "numba"
    assert _active_name("0") == "numba"
