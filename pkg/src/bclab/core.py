"""Bicomplex and hyperbolic numbers.

A bicomplex number ``Z = z + j w`` (``z, w`` complex in ``i``, ``ij = ji``,
``i**2 = j**2 = -1``) is stored in both its cartesian form ``(z, w)`` and its
idempotent form ``(z1, z2)`` with ``Z = e1 z1 + e2 z2``, ``z1 = z - i w`` and
``z2 = z + i w``.  Products, conjugations and norms are componentwise in the
idempotent form, which is why both are kept.

Hyperbolic numbers ``x + k y`` (``k = ij``, ``k**2 = 1``) are stored by their
real idempotent components ``(a1, a2)``.  They carry the partial order
``a <=' b  iff  b - a`` has both components nonnegative.
"""

import cmath
import enum
import math

__all__ = [
    "BicomplexNumber",
    "HyperbolicNumber",
    "OrderRelation",
    "Conjugation",
    "Modulus",
    "BicomplexError",
    "ZeroDivisorError",
    "ZeroError",
    "DomainError",
    "ZERO_TOL",
    "E1",
    "E2",
    "ONE",
    "ZERO",
    "J",
    "I",
    "K",
    "bc_add",
    "bc_mul",
    "conjugate",
    "modulus_sq",
    "hyperbolic_norm",
    "euclidean_norm",
    "inverse",
    "h_compare",
    "h_sqrt",
    "bc_inner",
    "in_unit_disc",
    "is_zero_divisor",
    "classify",
]

# A complex component counts as zero below ZERO_TOL * (1 + |Z|).
ZERO_TOL = 1e-14


class BicomplexError(ArithmeticError):
    """Base class for bicomplex arithmetic errors."""


class ZeroDivisorError(BicomplexError, ZeroDivisionError):
    """Raised when inverting a nonzero zero divisor."""


class ZeroError(BicomplexError, ZeroDivisionError):
    """Raised when inverting zero."""


class DomainError(BicomplexError, ValueError):
    """An argument lies outside the domain of the operation."""


def _as_complex(value, what):
    c = complex(value)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return c


class BicomplexNumber:
    """Immutable bicomplex number ``z + j w``.

    Build one from the cartesian pair with ``BicomplexNumber(z, w)`` or from
    the idempotent pair with :meth:`from_idempotent`.
    """

    __slots__ = ("_z", "_w", "_z1", "_z2")

    def __init__(self, z=0.0, w=0.0):
        z = _as_complex(z, "z")
        w = _as_complex(w, "w")
        iw = 1j * w
        object.__setattr__(self, "_z", z)
        object.__setattr__(self, "_w", w)
        object.__setattr__(self, "_z1", z - iw)
        object.__setattr__(self, "_z2", z + iw)

    @classmethod
    def from_idempotent(cls, z1, z2):
        z1 = _as_complex(z1, "z1")
        z2 = _as_complex(z2, "z2")
        self = cls.__new__(cls)
        object.__setattr__(self, "_z", (z1 + z2) / 2)
        object.__setattr__(self, "_w", 1j * (z1 - z2) / 2)
        object.__setattr__(self, "_z1", z1)
        object.__setattr__(self, "_z2", z2)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("BicomplexNumber is immutable")

    z = property(lambda self: self._z)
    w = property(lambda self: self._w)
    z1 = property(lambda self: self._z1)
    z2 = property(lambda self: self._z2)

    @property
    def cartesian(self):
        return self._z, self._w

    @property
    def idempotent(self):
        return self._z1, self._z2

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return bc_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return BicomplexNumber(-self._z, -self._w)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return BicomplexNumber(self._z - other._z, self._w - other._w)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return bc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return bc_mul(self, inverse(other))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return bc_mul(other, inverse(self))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        return BicomplexNumber.from_idempotent(self._z1 ** n, self._z2 ** n)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._z == other._z and self._w == other._w

    def __hash__(self):
        return hash((self._z, self._w))

    def __repr__(self):
        return f"BicomplexNumber(z={self._z!r}, w={self._w!r})"

    def __str__(self):
        return f"e1*({_fmt(self._z1)}) + e2*({_fmt(self._z2)})"

    def __abs__(self):
        return euclidean_norm(self)

    # -- conveniences ------------------------------------------------------

    def conj(self, kind="dag3"):
        return conjugate(self, kind)

    def isclose(self, other, rel_tol=1e-12, abs_tol=1e-12):
        other = _coerce(other)
        d = max(abs(self._z1 - other._z1), abs(self._z2 - other._z2))
        scale = max(abs(self._z1), abs(self._z2), abs(other._z1), abs(other._z2))
        return d <= max(abs_tol, rel_tol * scale)

    def is_zero(self):
        return self._z == 0 and self._w == 0

    def is_hyperbolic(self, tol=0.0):
        """True when both idempotent components are real (up to ``tol``)."""
        return abs(self._z1.imag) <= tol and abs(self._z2.imag) <= tol

    def to_hyperbolic(self, tol=1e-12):
        if not self.is_hyperbolic(tol * (1.0 + euclidean_norm(self))):
            raise DomainError(f"{self} is not a hyperbolic number")
        return HyperbolicNumber(self._z1.real, self._z2.real)


def _fmt(c):
    return f"{c.real:.17g}{c.imag:+.17g}i"


def _coerce(value):
    if isinstance(value, BicomplexNumber):
        return value
    if isinstance(value, HyperbolicNumber):
        return value.to_bicomplex()
    if isinstance(value, (int, float, complex)):
        return BicomplexNumber(value, 0.0)
    return NotImplemented


class HyperbolicNumber:
    """Immutable hyperbolic number ``e1 a1 + e2 a2`` with real components."""

    __slots__ = ("_a1", "_a2")

    def __init__(self, a1, a2=None):
        if a2 is None:
            a2 = a1
        a1 = float(a1)
        a2 = float(a2)
        if not (math.isfinite(a1) and math.isfinite(a2)):
            raise ValueError("hyperbolic components must be finite")
        object.__setattr__(self, "_a1", a1)
        object.__setattr__(self, "_a2", a2)

    @classmethod
    def from_cartesian(cls, x, y):
        """``x + k y`` has idempotent components ``(x + y, x - y)``."""
        return cls(x + y, x - y)

    def __setattr__(self, name, value):
        raise AttributeError("HyperbolicNumber is immutable")

    a1 = property(lambda self: self._a1)
    a2 = property(lambda self: self._a2)

    @property
    def x(self):
        return (self._a1 + self._a2) / 2

    @property
    def y(self):
        return (self._a1 - self._a2) / 2

    def __iter__(self):
        yield self._a1
        yield self._a2

    def __getitem__(self, i):
        return (self._a1, self._a2)[i]

    def __len__(self):
        return 2

    def is_nonneg(self):
        return self._a1 >= 0 and self._a2 >= 0

    def is_positive(self):
        return self._a1 > 0 and self._a2 > 0

    def to_bicomplex(self):
        return BicomplexNumber.from_idempotent(self._a1, self._a2)

    def magnitude(self):
        """Real-valued size ``sqrt((a1**2 + a2**2) / 2)``."""
        return math.hypot(self._a1, self._a2) / math.sqrt(2)

    def _binop(self, other, op):
        if isinstance(other, (int, float)):
            other = HyperbolicNumber(other)
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return HyperbolicNumber(op(self._a1, other._a1), op(self._a2, other._a2))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        if isinstance(other, BicomplexNumber):
            return bc_mul(self.to_bicomplex(), other)
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __pow__(self, p):
        return HyperbolicNumber(self._a1 ** p, self._a2 ** p)

    def __neg__(self):
        return HyperbolicNumber(-self._a1, -self._a2)

    def __abs__(self):
        return HyperbolicNumber(abs(self._a1), abs(self._a2))

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = HyperbolicNumber(other)
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return self._a1 == other._a1 and self._a2 == other._a2

    def __hash__(self):
        return hash((self._a1, self._a2))

    def __le__(self, other):
        return h_compare(self, other) in (OrderRelation.LESS_EQ, OrderRelation.EQUAL)

    def __ge__(self, other):
        return h_compare(self, other) in (OrderRelation.GREATER_EQ, OrderRelation.EQUAL)

    def __repr__(self):
        return f"HyperbolicNumber({self._a1!r}, {self._a2!r})"

    def isclose(self, other, rel_tol=1e-12, abs_tol=1e-12):
        other = other if isinstance(other, HyperbolicNumber) else HyperbolicNumber(other)
        return (math.isclose(self._a1, other._a1, rel_tol=rel_tol, abs_tol=abs_tol)
                and math.isclose(self._a2, other._a2, rel_tol=rel_tol, abs_tol=abs_tol))

    def max(self, other):
        return HyperbolicNumber(max(self._a1, other._a1), max(self._a2, other._a2))

    def min(self, other):
        return HyperbolicNumber(min(self._a1, other._a1), min(self._a2, other._a2))

    def sqrt(self):
        return h_sqrt(self)


class OrderRelation(enum.Enum):
    LESS_EQ = "LessEq"
    GREATER_EQ = "GreaterEq"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"

    def holds_le(self):
        return self in (OrderRelation.LESS_EQ, OrderRelation.EQUAL)

    def holds_ge(self):
        return self in (OrderRelation.GREATER_EQ, OrderRelation.EQUAL)


class Conjugation(str, enum.Enum):
    DAG1 = "dag1"
    DAG2 = "dag2"
    DAG3 = "dag3"


class Modulus(str, enum.Enum):
    J = "j"
    I = "i"  # noqa: E741
    K = "k"


ZERO = BicomplexNumber(0, 0)
ONE = BicomplexNumber(1, 0)
I = BicomplexNumber(1j, 0)  # noqa: E741
J = BicomplexNumber(0, 1)
K = BicomplexNumber(0, 1j)  # k = ij
E1 = BicomplexNumber.from_idempotent(1, 0)
E2 = BicomplexNumber.from_idempotent(0, 1)


def bc_add(a, b):
    return BicomplexNumber(a.z + b.z, a.w + b.w)


def bc_mul(a, b):
    """Cartesian product ``(zu - wv) + j(wu + zv)``."""
    z, w = a.z, a.w
    u, v = b.z, b.w
    return BicomplexNumber(z * u - w * v, w * u + z * v)


def conjugate(a, kind="dag3"):
    """The three bicomplex conjugations.

    dag1 bars both parts, dag2 negates the j-part, dag3 does both.
    """
    kind = Conjugation(kind)
    if kind is Conjugation.DAG1:
        return BicomplexNumber(a.z.conjugate(), a.w.conjugate())
    if kind is Conjugation.DAG2:
        return BicomplexNumber(a.z, -a.w)
    return BicomplexNumber(a.z.conjugate(), -a.w.conjugate())


_MODULUS_CONJ = {Modulus.J: Conjugation.DAG1, Modulus.I: Conjugation.DAG2, Modulus.K: Conjugation.DAG3}


def modulus_sq(a, kind="k"):
    """``Z`` times its dag1/dag2/dag3 conjugate for kind j/i/k."""
    return bc_mul(a, conjugate(a, _MODULUS_CONJ[Modulus(kind)]))


def hyperbolic_norm(a):
    return HyperbolicNumber(abs(a.z1), abs(a.z2))


def euclidean_norm(a):
    return math.hypot(abs(a.z), abs(a.w))


def _zero_threshold(a):
    return ZERO_TOL * (1.0 + euclidean_norm(a))


def classify(a):
    """One of ``"zero"``, ``"zero-divisor"`` or ``"invertible"`` (idempotent test)."""
    thr = _zero_threshold(a)
    n1 = abs(a.z1) <= thr
    n2 = abs(a.z2) <= thr
    if n1 and n2:
        return "zero"
    if n1 or n2:
        return "zero-divisor"
    return "invertible"


def classify_cartesian(a):
    """Same trichotomy decided from ``z**2 + w**2`` instead of the components.

    ``z**2 + w**2 = z1 * z2``, so the scale of the threshold is squared.
    """
    thr = _zero_threshold(a)
    if abs(a.z) <= thr and abs(a.w) <= thr:
        return "zero"
    s = a.z * a.z + a.w * a.w
    scale = max(abs(a.z1), abs(a.z2))
    if abs(s) <= thr * scale:
        return "zero-divisor"
    return "invertible"


def is_zero_divisor(a):
    return classify(a) == "zero-divisor"


def inverse(a):
    """``Z^-1 = Z^dag2 / |Z|_i**2``, defined when ``z**2 + w**2 != 0``."""
    cls = classify(a)
    if cls == "zero":
        raise ZeroError("zero has no inverse")
    if cls == "zero-divisor":
        raise ZeroDivisorError(f"{a} is a zero divisor")
    zd = conjugate(a, Conjugation.DAG2)
    m = a.z * a.z + a.w * a.w
    return BicomplexNumber(zd.z / m, zd.w / m)


def h_compare(a, b, rel_tol=ZERO_TOL):
    """Partial order on hyperbolic numbers.

    Component differences within ``rel_tol * (1 + max |component|)`` count
    as zero, so that nearly equal values are never reported incomparable.
    """
    signs = []
    for x, y in ((a.a1, b.a1), (a.a2, b.a2)):
        d = y - x
        if abs(d) <= rel_tol * (1.0 + max(abs(x), abs(y))):
            signs.append(0)
        else:
            signs.append(1 if d > 0 else -1)
    if signs == [0, 0]:
        return OrderRelation.EQUAL
    if min(signs) >= 0:
        return OrderRelation.LESS_EQ
    if max(signs) <= 0:
        return OrderRelation.GREATER_EQ
    return OrderRelation.INCOMPARABLE


def h_sqrt(a):
    if not a.is_nonneg():
        raise DomainError(f"{a!r} is not in D+")
    return HyperbolicNumber(math.sqrt(a.a1), math.sqrt(a.a2))


def bc_inner(a, b):
    """Scalar inner product ``<Z, W> = Z * W^dag3``."""
    return bc_mul(a, conjugate(b, Conjugation.DAG3))


def in_unit_disc(a):
    return abs(a.z1) < 1 and abs(a.z2) < 1


def from_polar(r1, t1, r2, t2):
    return BicomplexNumber.from_idempotent(cmath.rect(r1, t1), cmath.rect(r2, t2))
