"""Exact univariate polynomial arithmetic over big rationals.

Three dense, immutable carrier types:

* ``QPoly``  -- polynomial in q with arbitrary-precision integer coefficients.
* ``XPoly``  -- polynomial in x with ``fractions.Fraction`` coefficients.
* ``QXPoly`` -- polynomial in x whose coefficients are ``QPoly`` values.

Coefficient sequences are stored in ascending order (index k holds the
coefficient of the k-th power) and are trailing-zero trimmed, so the zero
polynomial has an empty tuple.  Its degree is the sentinel ``-inf``, which
keeps degree-gap rules in the interlacing code unambiguous.

All operations are pure and exact; mixing kinds in ring operations raises
``TypeError``.  JSON serialization uses decimal strings for every integer so
round-trips are bit-exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisibilityError, UsageError

NEG_INF = float("-inf")

Rational = Fraction


def _sign(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# QPoly: integer polynomials in q
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QPoly:
    """Dense integer polynomial in q, ascending coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return QPoly(tuple(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = _as_qpoly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers of polynomials are undefined")
        out = QPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, q0) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact quotient in Z[q]; raises DivisibilityError otherwise."""
        other = _as_qpoly(other)
        if not other:
            raise UsageError("division by the zero polynomial")
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs):
            if rem[-1] == 0:
                rem.pop()
                continue
            t, r = divmod(rem[-1], lead)
            if r != 0:
                raise DivisibilityError("leading coefficient not divisible", remainder=QPoly(tuple(rem)))
            shift = len(rem) - len(other.coeffs)
            quo[shift] = t
            for k in range(len(other.coeffs)):
                rem[shift + k] -= t * other.coeffs[k]
            rem.pop()
        if any(rem):
            raise DivisibilityError("inexact polynomial division", remainder=QPoly(tuple(rem)))
        return QPoly(tuple(quo))

    def __str__(self) -> str:
        return _render(self.coeffs, "q")

    def __repr__(self) -> str:
        return f"QPoly({str(self)!r})"


def _as_qpoly(v):
    if isinstance(v, QPoly):
        return v
    if isinstance(v, int):
        return QPoly((v,))
    return NotImplemented


Q_ZERO = QPoly()
Q_ONE = QPoly((1,))
Q_VAR = QPoly((0, 1))
ONE_PLUS_Q = QPoly((1, 1))


# ---------------------------------------------------------------------------
# XPoly: rational polynomials in x
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class XPoly:
    """Dense polynomial in x over exact rationals, ascending coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise UsageError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return XPoly(tuple(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return XPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return XPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return XPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers of polynomials are undefined")
        out = XPoly((Fraction(1),))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def derivative(self) -> "XPoly":
        """Formal derivative."""
        return XPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def monic(self) -> "XPoly":
        if not self.coeffs:
            raise UsageError("the zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        return XPoly(tuple(c / lead for c in self.coeffs))

    def shift_up(self, k: int = 1) -> "XPoly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return XPoly((Fraction(0),) * k + self.coeffs)

    def __str__(self) -> str:
        return _render(self.coeffs, "x")

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"


def _as_xpoly(v):
    if isinstance(v, XPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return XPoly((Fraction(v),))
    return NotImplemented


X_ZERO = XPoly()
X_ONE = XPoly((Fraction(1),))
X_VAR = XPoly((Fraction(0), Fraction(1)))


def xpoly(*coeffs) -> XPoly:
    """Convenience constructor from ascending int/Fraction coefficients."""
    return XPoly(tuple(Fraction(c) for c in coeffs))


def qpoly(*coeffs) -> QPoly:
    return QPoly(tuple(int(c) for c in coeffs))


# ---------------------------------------------------------------------------
# QXPoly: polynomials in x with QPoly coefficients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QXPoly:
    """Polynomial in x whose coefficients are integer polynomials in q."""

    coeffs: tuple[QPoly, ...] = ()

    def __post_init__(self):
        c = tuple(v if isinstance(v, QPoly) else _require_qpoly(v) for v in self.coeffs)
        while c and c[-1].is_zero():
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> QPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Q_ZERO

    @property
    def leading(self) -> QPoly:
        if not self.coeffs:
            raise UsageError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        other = _as_qxpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return QXPoly(tuple(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=Q_ZERO)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_qxpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_qxpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QXPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            other_q = _as_qpoly(other)
            return QXPoly(tuple(c * other_q for c in self.coeffs))
        if not isinstance(other, QXPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QXPoly()
        out = [Q_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return QXPoly(tuple(out))

    __rmul__ = __mul__

    def eval_q(self, q0) -> XPoly:
        """Substitute q := q0 exactly in every coefficient."""
        return XPoly(tuple(c.evaluate(q0) for c in self.coeffs))

    def shift_up(self, k: int = 1) -> "QXPoly":
        if not self.coeffs:
            return self
        return QXPoly((Q_ZERO,) * k + self.coeffs)

    def __str__(self) -> str:
        return _render_qx(self.coeffs)

    def __repr__(self) -> str:
        return f"QXPoly({str(self)!r})"


def _require_qpoly(v) -> QPoly:
    q = _as_qpoly(v)
    if q is NotImplemented:
        raise UsageError(f"QXPoly coefficients must be QPoly or int, got {type(v).__name__}")
    return q


def _as_qxpoly(v):
    if isinstance(v, QXPoly):
        return v
    if isinstance(v, (int, QPoly)):
        return QXPoly((_as_qpoly(v),))
    return NotImplemented


def qxpoly(*coeffs) -> QXPoly:
    """Constructor from ascending coefficients, each a QPoly, int, or int tuple."""
    out = []
    for c in coeffs:
        if isinstance(c, (tuple, list)):
            out.append(QPoly(tuple(c)))
        else:
            out.append(_require_qpoly(c))
    return QXPoly(tuple(out))


QX_X = QXPoly((Q_ZERO, Q_ONE))


# ---------------------------------------------------------------------------
# Shared operations
# ---------------------------------------------------------------------------


def eval_q(p: QXPoly, q0) -> XPoly:
    return p.eval_q(q0)


def exact_divide(a, b):
    """Exact quotient a / b in the matching polynomial ring.

    Accepts XPoly/XPoly and QXPoly/QXPoly (a QPoly or int divisor is promoted
    to a constant QXPoly).  Raises DivisibilityError, carrying the remainder,
    when b does not divide a exactly.
    """
    if isinstance(a, XPoly):
        b = _as_xpoly(b)
        if b is NotImplemented:
            raise UsageError("kind mismatch in exact_divide")
        return _exact_divide_x(a, b)
    if isinstance(a, QXPoly):
        b = _as_qxpoly(b)
        if b is NotImplemented:
            raise UsageError("kind mismatch in exact_divide")
        return _exact_divide_qx(a, b)
    raise UsageError(f"unsupported dividend type {type(a).__name__}")


def _exact_divide_x(a: XPoly, b: XPoly) -> XPoly:
    if b.is_zero():
        raise UsageError("division by the zero polynomial")
    rem = list(a.coeffs)
    if len(rem) < len(b.coeffs):
        if any(rem):
            raise DivisibilityError("divisor degree exceeds dividend degree", remainder=a)
        return X_ZERO
    quo = [Fraction(0)] * (len(rem) - len(b.coeffs) + 1)
    lead = b.coeffs[-1]
    while len(rem) >= len(b.coeffs):
        if rem[-1] == 0:
            rem.pop()
            continue
        t = rem[-1] / lead
        shift = len(rem) - len(b.coeffs)
        quo[shift] = t
        for k in range(len(b.coeffs)):
            rem[shift + k] -= t * b.coeffs[k]
        rem.pop()
    if any(rem):
        raise DivisibilityError("inexact polynomial division", remainder=XPoly(tuple(rem)))
    return XPoly(tuple(quo))


def _exact_divide_qx(a: QXPoly, b: QXPoly) -> QXPoly:
    if b.is_zero():
        raise UsageError("division by the zero polynomial")
    rem = list(a.coeffs)
    if len(rem) < len(b.coeffs):
        if any(rem):
            raise DivisibilityError("divisor degree exceeds dividend degree", remainder=a)
        return QXPoly()
    quo = [Q_ZERO] * (len(rem) - len(b.coeffs) + 1)
    lead = b.coeffs[-1]
    while len(rem) >= len(b.coeffs):
        if rem[-1].is_zero():
            rem.pop()
            continue
        try:
            t = rem[-1].exact_div(lead)
        except DivisibilityError:
            raise DivisibilityError("inexact polynomial division", remainder=QXPoly(tuple(rem)))
        shift = len(rem) - len(b.coeffs)
        quo[shift] = t
        for k in range(len(b.coeffs)):
            rem[shift + k] = rem[shift + k] - t * b.coeffs[k]
        rem.pop()
    if any(c for c in rem):
        raise DivisibilityError("inexact polynomial division", remainder=QXPoly(tuple(rem)))
    return QXPoly(tuple(quo))


def derivative(p: XPoly) -> XPoly:
    return p.derivative()


def poly_gcd(a: XPoly, b: XPoly) -> XPoly:
    """Monic greatest common divisor over the rationals."""
    if a.is_zero() and b.is_zero():
        raise UsageError("gcd of two zero polynomials is undefined")
    while not b.is_zero():
        a, b = b, _poly_rem(a, b)
    return a.monic()


def _poly_rem(a: XPoly, b: XPoly) -> XPoly:
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    while len(rem) >= len(b.coeffs):
        if rem[-1] == 0:
            rem.pop()
            continue
        t = rem[-1] / lead
        shift = len(rem) - len(b.coeffs)
        for k in range(len(b.coeffs) - 1):
            rem[shift + k] -= t * b.coeffs[k]
        rem.pop()
    return XPoly(tuple(rem))


# ---------------------------------------------------------------------------
# Coefficient-shape diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoeffProps:
    nonnegative: bool
    symmetric: bool
    unimodal: bool
    log_concave: bool


def coeff_props(p: XPoly) -> CoeffProps:
    """Shape report for the coefficient sequence.

    Symmetry is tested against reversal of the span between the lowest and
    highest nonzero coefficients; unimodality and log-concavity are tested on
    that same span (zeros inside the span count).  The zero polynomial gets
    all four flags vacuously true.
    """
    c = p.coeffs
    if not c:
        return CoeffProps(True, True, True, True)
    nonneg = all(v >= 0 for v in c)
    lo = next(k for k, v in enumerate(c) if v != 0)
    hi = len(c) - 1
    span = c[lo : hi + 1]
    symmetric = span == tuple(reversed(span))
    unimodal = True
    falling = False
    for prev, cur in zip(span, span[1:]):
        if cur < prev:
            falling = True
        elif cur > prev and falling:
            unimodal = False
            break
    log_concave = all(span[k] * span[k] >= span[k - 1] * span[k + 1] for k in range(1, len(span) - 1))
    return CoeffProps(nonneg, symmetric, unimodal, log_concave)


# ---------------------------------------------------------------------------
# JSON serialization (decimal-string integers, bit-exact round-trip)
# ---------------------------------------------------------------------------


def xpoly_to_json(p: XPoly) -> dict:
    return {"var": "x", "coeffs": [[str(c.numerator), str(c.denominator)] for c in p.coeffs]}


def xpoly_from_json(d: dict) -> XPoly:
    if d.get("var") != "x":
        raise UsageError("not a serialized XPoly")
    return XPoly(tuple(Fraction(int(num), int(den)) for num, den in d["coeffs"]))


def qxpoly_to_json(p: QXPoly) -> dict:
    return {"vars": ["x", "q"], "coeffs": [[str(v) for v in c.coeffs] for c in p.coeffs]}


def qxpoly_from_json(d: dict) -> QXPoly:
    if d.get("vars") != ["x", "q"]:
        raise UsageError("not a serialized QXPoly")
    return QXPoly(tuple(QPoly(tuple(int(v) for v in c)) for c in d["coeffs"]))


def poly_to_json(p) -> dict:
    if isinstance(p, XPoly):
        return xpoly_to_json(p)
    if isinstance(p, QXPoly):
        return qxpoly_to_json(p)
    raise UsageError(f"unsupported polynomial type {type(p).__name__}")


def poly_from_json(d: dict):
    if "var" in d:
        return xpoly_from_json(d)
    return qxpoly_from_json(d)


# ---------------------------------------------------------------------------
# Pretty printing
# ---------------------------------------------------------------------------


def _render(coeffs: Iterable, var: str) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _render_qx(coeffs: tuple[QPoly, ...]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c.is_zero():
            continue
        if len(c.coeffs) == 1:
            head = _render(c.coeffs, "q")
        else:
            head = f"({_render(c.coeffs, 'q')})"
        if k == 0:
            body = head
        else:
            if head == "1":
                head = ""
            body = f"{head}x" if k == 1 else f"{head}x^{k}"
        parts.append(body)
    if not parts:
        return "0"
    return " + ".join(parts)
