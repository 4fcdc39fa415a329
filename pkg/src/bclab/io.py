"""JSON encodings and command-line literals.

Bicomplex numbers::

    {"cartesian": {"z": [re, im], "w": [re, im]}}
    {"idempotent": {"z1": [re, im], "z2": [re, im]}}

Hyperbolic numbers ``{"idempotent": [a1, a2]}``, series
``{"weights": "hardy", "coeffs": [<bicomplex>, ...]}``, matrices
``{"n": n, "A1": [[[re, im], ...], ...], "A2": ...}``.
"""

import json
import re

import numpy as np

from .core import BicomplexNumber, HyperbolicNumber
from .cstar import BCMatrix
from .hardy import SeriesFunction, WeightKind
from .operators import DiscAutomorphism, HoloSelfMap

__all__ = [
    "complex_to_json",
    "complex_from_json",
    "bc_to_json",
    "bc_from_json",
    "h_to_json",
    "h_from_json",
    "series_to_json",
    "series_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "phi_from_json",
    "parse_complex",
    "parse_bicomplex",
]


def complex_to_json(c):
    c = complex(c)
    return [c.real, c.imag]


def complex_from_json(v):
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ValueError(f"expected [re, im], got {v!r}")


def bc_to_json(Z, form="cartesian"):
    if form == "idempotent":
        return {"idempotent": {"z1": complex_to_json(Z.z1), "z2": complex_to_json(Z.z2)}}
    return {"cartesian": {"z": complex_to_json(Z.z), "w": complex_to_json(Z.w)}}


def bc_from_json(obj):
    if isinstance(obj, (int, float, list)):
        return BicomplexNumber(complex_from_json(obj), 0)
    if "cartesian" in obj:
        c = obj["cartesian"]
        return BicomplexNumber(complex_from_json(c["z"]), complex_from_json(c.get("w", 0)))
    if "idempotent" in obj:
        c = obj["idempotent"]
        return BicomplexNumber.from_idempotent(complex_from_json(c["z1"]), complex_from_json(c["z2"]))
    raise ValueError(f"not a bicomplex number: {obj!r}")


def h_to_json(a):
    return {"idempotent": [a.a1, a.a2]}


def h_from_json(obj):
    a1, a2 = obj["idempotent"]
    return HyperbolicNumber(a1, a2)


def series_to_json(f, form="cartesian"):
    out = {"weights": f.weights.kind.value, "coeffs": [bc_to_json(a, form) for a in f.coeffs]}
    if f.tail is not None:
        out["tail"] = [_finite_or_none(t) for t in f.tail]
    return out


def _finite_or_none(x):
    return x if np.isfinite(x) else None


def series_from_json(obj, weights=None):
    kind = weights or obj.get("weights", "hardy")
    if WeightKind(kind) is WeightKind.CUSTOM:
        raise ValueError("custom weights cannot be read from JSON")
    return SeriesFunction([bc_from_json(c) for c in obj["coeffs"]], kind)


def matrix_to_json(A):
    enc = lambda M: [[complex_to_json(x) for x in row] for row in M]  # noqa: E731
    return {"n": A.n, "A1": enc(A.A1), "A2": enc(A.A2)}


def matrix_from_json(obj):
    dec = lambda M: [[complex_from_json(x) for x in row] for row in M]  # noqa: E731
    A = BCMatrix(dec(obj["A1"]), dec(obj["A2"]))
    if "n" in obj and obj["n"] != A.n:
        raise ValueError(f"declared n={obj['n']} but matrices are {A.n}x{A.n}")
    return A


def phi_from_json(obj):
    """A symbol: ``{"automorphism": {"lambda": bc, "w": bc}}`` or ``{"coeffs": [...]}``."""
    if "automorphism" in obj:
        a = obj["automorphism"]
        return DiscAutomorphism(bc_from_json(a.get("lambda", 1)), bc_from_json(a["w"]))
    if "coeffs" in obj:
        return HoloSelfMap([bc_from_json(c) for c in obj["coeffs"]])
    raise ValueError("phi needs 'automorphism' or 'coeffs'")


# ---------------------------------------------------------------------------
# literals
# ---------------------------------------------------------------------------

_TERM = re.compile(r"\s*(?P<sign>[+-]?)\s*(?P<basis>e[12])\s*(?:\*\s*(?P<coef>\([^()]*\)|[^+\-()\s]+))?\s*")


def parse_complex(text):
    """``"1.5"``, ``"2i"``, ``"1-2i"``, ``"(1+2i)"`` or JSON ``"[re, im]"``."""
    s = text.strip()
    if s.startswith("["):
        return complex_from_json(json.loads(s))
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.replace(" ", "")
    if s in ("i", "+i", "-i"):
        s = s.replace("i", "1i")
    return complex(s.replace("i", "j"))


def parse_bicomplex(text):
    """Parse a bicomplex literal.

    Accepts bicomplex JSON, a complex literal (embedded with zero j-part), or
    the idempotent shorthand ``e1*a+e2*b``.  Coefficients containing a sign
    or exponent must be parenthesised, e.g. ``e1*(1-2i)+e2*(1e-3)``.
    """
    s = text.strip()
    if s.startswith("{"):
        return bc_from_json(json.loads(s))
    if "e1" in s or "e2" in s:
        parts = {"e1": 0j, "e2": 0j}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if m is None:
                raise ValueError(f"cannot parse bicomplex literal {text!r}")
            c = parse_complex(m.group("coef") or "1")
            parts[m.group("basis")] += -c if m.group("sign") == "-" else c
            pos = m.end()
        return BicomplexNumber.from_idempotent(parts["e1"], parts["e2"])
    return BicomplexNumber(parse_complex(s), 0)


def dumps(obj):
    """Deterministic JSON text (sorted keys, full float repr)."""
    return json.dumps(obj, sort_keys=True, allow_nan=False)
