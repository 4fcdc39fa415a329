import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bclab.core import (
    E1,
    E2,
    ONE,
    ZERO,
    BicomplexNumber,
    DomainError,
    HyperbolicNumber,
    OrderRelation,
    ZeroDivisorError,
    ZeroError,
    bc_add,
    bc_inner,
    bc_mul,
    classify,
    classify_cartesian,
    conjugate,
    euclidean_norm,
    from_polar,
    h_compare,
    h_sqrt,
    hyperbolic_norm,
    in_unit_disc,
    inverse,
    is_zero_divisor,
    modulus_sq,
)

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)
bicomplex = st.builds(BicomplexNumber, cplx, cplx)


def as_matrix(Z):
    # z + jw  <->  [[z, -w], [w, z]]: an independent model of the ring
    return np.array([[Z.z, -Z.w], [Z.w, Z.z]])


def close(a, b, tol=1e-12):
    return abs(a.z - b.z) <= tol and abs(a.w - b.w) <= tol


# -- construction ----------------------------------------------------------

def test_decompose_example():
    Z = BicomplexNumber(2 + 3j, 1 - 1j)
    assert Z.idempotent == (1 + 2j, 3 + 4j)
    # recomposition oracle
    assert close(BicomplexNumber.from_idempotent(*Z.idempotent), Z, 0)


def test_idempotents_are_the_defining_elements():
    # e1 = (1 + ij)/2, e2 = (1 - ij)/2 and ij = k = (0, i)
    assert E1 == BicomplexNumber(0.5, 0.5j)
    assert E2 == BicomplexNumber(0.5, -0.5j)


@given(bicomplex)
def test_roundtrip(Z):
    Y = BicomplexNumber.from_idempotent(Z.z1, Z.z2)
    scale = 1 + abs(Z)
    assert abs(Y.z - Z.z) <= 4e-16 * scale and abs(Y.w - Z.w) <= 4e-16 * scale


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        BicomplexNumber(float("nan"), 0)
    with pytest.raises(ValueError):
        HyperbolicNumber(float("inf"), 0)


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.z = 3


# -- ring ------------------------------------------------------------------

def test_add_examples():
    assert bc_add(BicomplexNumber(1, 0), BicomplexNumber(0, 1)) == BicomplexNumber(1, 1)
    assert E1 + E2 == ONE
    a = BicomplexNumber(2 + 3j, 1 - 1j)
    assert a + BicomplexNumber(-2 - 3j, -1 + 1j) == ZERO


def test_mul_examples():
    assert bc_mul(E1, E2) == ZERO
    assert bc_mul(E1, E1) == E1
    a = BicomplexNumber(2 + 3j, 1 - 1j)
    assert bc_mul(a, ONE) == a


@settings(max_examples=300)
@given(bicomplex, bicomplex)
def test_product_matches_matrix_model(a, b):
    p = bc_mul(a, b)
    m = as_matrix(a) @ as_matrix(b)
    scale = 1 + abs(a) * abs(b)
    assert abs(p.z - m[0, 0]) <= 1e-12 * scale and abs(p.w - m[1, 0]) <= 1e-12 * scale
    # and the idempotent components multiply independently
    assert abs(p.z1 - a.z1 * b.z1) <= 1e-12 * scale
    assert abs(p.z2 - a.z2 * b.z2) <= 1e-12 * scale


@given(bicomplex, bicomplex, bicomplex)
def test_distributive(a, b, c):
    lhs = bc_mul(a, b + c)
    rhs = bc_mul(a, b) + bc_mul(a, c)
    assert close(lhs, rhs, 1e-12 * (1 + abs(a) * (abs(b) + abs(c))))


def test_scalar_and_operator_overloads():
    a = BicomplexNumber(1 + 1j, 2)
    assert a * 2 == BicomplexNumber(2 + 2j, 4)
    assert 2 * a == a * 2
    assert a - a == ZERO
    assert -a + a == ZERO
    assert close((a / a), ONE)
    assert close(a ** 3, a * a * a, 1e-12)
    assert close(a ** -1, inverse(a), 1e-15)


# -- conjugations and moduli -----------------------------------------------

def test_conjugation_examples():
    assert conjugate(E1, "dag3") == E1
    z = 2 + 5j
    assert conjugate(BicomplexNumber(z, 0), "dag2") == BicomplexNumber(z, 0)
    assert conjugate(BicomplexNumber(1j, 1j), "dag1") == BicomplexNumber(-1j, -1j)


@given(bicomplex, bicomplex, st.sampled_from(["dag1", "dag2", "dag3"]))
def test_conjugations_are_involutive_ring_maps(a, b, kind):
    assert conjugate(conjugate(a, kind), kind) == a
    lhs = conjugate(bc_mul(a, b), kind)
    rhs = bc_mul(conjugate(a, kind), conjugate(b, kind))
    assert close(lhs, rhs, 1e-12 * (1 + abs(a) * abs(b)))


@given(bicomplex)
def test_dag3_conjugates_idempotent_components(a):
    c = conjugate(a, "dag3")
    s = 1e-15 * (1 + abs(a))
    assert abs(c.z1 - a.z1.conjugate()) <= s and abs(c.z2 - a.z2.conjugate()) <= s


def test_modulus_examples():
    # z^2 + w^2 = 0 makes Z a zero divisor, here |(1, i)|_i^2 = 0
    assert modulus_sq(BicomplexNumber(1, 1j), "i") == ZERO
    m = modulus_sq(BicomplexNumber.from_idempotent(3 + 4j, 0), "k")
    assert m.isclose(HyperbolicNumber(25, 0).to_bicomplex())
    for kind in "jik":
        assert modulus_sq(ZERO, kind) == ZERO


def test_modulus_kinds_match_definitions():
    Z = BicomplexNumber(1 + 2j, -0.5 + 1j)
    assert modulus_sq(Z, "j") == bc_mul(Z, BicomplexNumber(Z.z.conjugate(), Z.w.conjugate()))
    assert modulus_sq(Z, "i") == bc_mul(Z, BicomplexNumber(Z.z, -Z.w))
    mi = modulus_sq(Z, "i")
    assert abs(mi.z - (Z.z ** 2 + Z.w ** 2)) < 1e-14 and mi.w == 0


def test_hyperbolic_norm_examples():
    assert hyperbolic_norm(BicomplexNumber.from_idempotent(3 + 4j, 1)) == HyperbolicNumber(5, 1)
    assert hyperbolic_norm(ONE) == HyperbolicNumber(1, 1)
    assert hyperbolic_norm(BicomplexNumber.from_idempotent(2j, 0)) == HyperbolicNumber(2, 0)


def test_hyperbolic_norm_from_k_modulus():
    Z = BicomplexNumber(0.3 - 1j, 2 + 0.1j)
    m = modulus_sq(Z, "k").to_hyperbolic()
    assert hyperbolic_norm(Z).isclose(h_sqrt(m))


@given(bicomplex, bicomplex)
def test_hyperbolic_norm_multiplicative(a, b):
    lhs = hyperbolic_norm(bc_mul(a, b))
    rhs = hyperbolic_norm(a) * hyperbolic_norm(b)
    assert lhs.isclose(rhs, rel_tol=1e-10, abs_tol=1e-9)


@given(bicomplex, bicomplex)
def test_hyperbolic_triangle(a, b):
    lhs = hyperbolic_norm(a + b)
    rhs = hyperbolic_norm(a) + hyperbolic_norm(b)
    assert lhs <= rhs + 1e-12 * (1 + rhs.magnitude())


def test_euclidean_norm_examples():
    assert euclidean_norm(BicomplexNumber(0, 1)) == 1
    assert math.isclose(euclidean_norm(E1), 1 / math.sqrt(2), rel_tol=1e-15)
    assert euclidean_norm(ZERO) == 0


@given(bicomplex)
def test_euclidean_is_real_size_of_hyperbolic_norm(a):
    assert math.isclose(euclidean_norm(a), hyperbolic_norm(a).magnitude(), rel_tol=1e-12, abs_tol=1e-300)


# -- zero divisors and inverses --------------------------------------------

def test_inverse_examples():
    Z = BicomplexNumber.from_idempotent(2, 4)
    assert inverse(Z).isclose(BicomplexNumber.from_idempotent(0.5, 0.25))
    # oracle: Z^dag2 / |Z|_i^2
    zd = conjugate(Z, "dag2")
    m = Z.z ** 2 + Z.w ** 2
    assert inverse(Z).isclose(BicomplexNumber(zd.z / m, zd.w / m))
    assert inverse(ONE) == ONE
    with pytest.raises(ZeroDivisorError):
        inverse(E1)
    with pytest.raises(ZeroError):
        inverse(ZERO)
    assert isinstance(ZeroDivisorError("x"), ZeroDivisionError)


@given(bicomplex)
def test_trichotomy_tests_agree(a):
    assert classify(a) == classify_cartesian(a)


@pytest.mark.parametrize("Z, want", [
    (ZERO, "zero"),
    (E1, "zero-divisor"),
    (BicomplexNumber(2 + 1j, 1j * (2 + 1j)), "zero-divisor"),
    (BicomplexNumber(2 + 1j, -1j * (2 + 1j)), "zero-divisor"),
    (BicomplexNumber(1, 1j), "zero-divisor"),
    (ONE, "invertible"),
    (BicomplexNumber(1, 1), "invertible"),
])
def test_trichotomy_examples(Z, want):
    assert classify(Z) == want
    assert classify_cartesian(Z) == want
    assert is_zero_divisor(Z) == (want == "zero-divisor")


def test_zero_threshold_is_relative():
    big = BicomplexNumber.from_idempotent(1e6, 1e-9)
    # 1e-9 <= 1e-14 * (1 + |Z|) fails: |Z| ~ 7e5 gives threshold ~7e-9
    assert classify(big) == "zero-divisor"
    assert classify(BicomplexNumber.from_idempotent(1, 1e-9)) == "invertible"


# -- hyperbolic numbers ----------------------------------------------------

@pytest.mark.parametrize("a, b, want", [
    ((1, 1), (2, 3), OrderRelation.LESS_EQ),
    ((1, 3), (2, 2), OrderRelation.INCOMPARABLE),
    ((2, 2), (2, 2), OrderRelation.EQUAL),
    ((3, 2), (2, 2), OrderRelation.GREATER_EQ),
])
def test_h_compare_examples(a, b, want):
    assert h_compare(HyperbolicNumber(*a), HyperbolicNumber(*b)) is want


def test_h_compare_near_equal_is_equal_not_incomparable():
    a = HyperbolicNumber(1.0, 1.0)
    b = HyperbolicNumber(1.0 + 1e-16, 1.0 - 1e-16)
    assert h_compare(a, b) is OrderRelation.EQUAL


def test_h_sqrt_examples():
    assert h_sqrt(HyperbolicNumber(4, 9)) == HyperbolicNumber(2, 3)
    assert h_sqrt(HyperbolicNumber(0, 0)) == HyperbolicNumber(0, 0)
    assert h_sqrt(HyperbolicNumber(2, 2)) == HyperbolicNumber(math.sqrt(2), math.sqrt(2))
    with pytest.raises(DomainError):
        h_sqrt(HyperbolicNumber(-1, 1))


def test_hyperbolic_cartesian_form():
    a = HyperbolicNumber.from_cartesian(3, 1)
    assert (a.a1, a.a2) == (4, 2)
    assert (a.x, a.y) == (3, 1)
    assert a.is_nonneg() and a.is_positive()
    assert not HyperbolicNumber(1, 0).is_positive()


@given(st.tuples(finite, finite), st.tuples(finite, finite))
def test_hyperbolic_embedding_commutes_with_arithmetic(p, q):
    a, b = HyperbolicNumber(*p), HyperbolicNumber(*q)
    assert (a * b).to_bicomplex().isclose(bc_mul(a.to_bicomplex(), b.to_bicomplex()), abs_tol=1e-9)
    assert (a + b).to_bicomplex().isclose(a.to_bicomplex() + b.to_bicomplex(), abs_tol=1e-9)


# -- inner product and disc ------------------------------------------------

def test_bc_inner_examples():
    assert bc_inner(ONE, ONE) == ONE
    assert bc_inner(E1, E2) == ZERO
    Z = BicomplexNumber.from_idempotent(3 + 4j, 0)
    assert bc_inner(Z, Z).isclose(E1 * 25)


@given(bicomplex, bicomplex, bicomplex)
def test_bc_inner_linear_and_conjugate_homogeneous(a, b, lam):
    s = 1e-12 * (1 + abs(lam) * abs(a) * abs(b) + abs(a) * abs(b))
    assert close(bc_inner(a + lam, b), bc_inner(a, b) + bc_inner(lam, b), s + 1e-12 * abs(lam) * abs(b))
    lhs = bc_inner(a, bc_mul(lam, b))
    rhs = bc_mul(conjugate(lam, "dag3"), bc_inner(a, b))
    assert close(lhs, rhs, 1e-12 * (1 + abs(a) * abs(lam) * abs(b)) * 4)


def test_in_unit_disc_examples():
    assert in_unit_disc(ZERO)
    assert not in_unit_disc(BicomplexNumber.from_idempotent(0.5, 1.5j))
    assert in_unit_disc(BicomplexNumber.from_idempotent(0.9, 0.9j))
    assert not in_unit_disc(ONE)


def test_from_polar():
    Z = from_polar(0.5, 1.0, 2.0, -0.5)
    assert cmath.isclose(Z.z1, cmath.rect(0.5, 1.0))
    assert cmath.isclose(Z.z2, cmath.rect(2.0, -0.5))
