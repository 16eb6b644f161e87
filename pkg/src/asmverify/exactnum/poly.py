"""Dense univariate polynomials over an arbitrary exact coefficient field.

Coefficients are stored little-endian (index = degree) with trailing zeros
trimmed; the zero polynomial has an empty coefficient tuple and degree
``-inf``.  Coefficients may be ints, Fractions, or any field-like object
supporting +, -, *, / and equality with integer 0/1 (Qw and RatFun here).

When every coefficient is an int or Fraction, multiplication and exact
division clear denominators and drop to the big-integer kernels in
``intpoly``; all other coefficient types take the generic schoolbook path.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import intpoly

MINUS_INFINITY = float("-inf")


class NonzeroRemainderError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class ZeroPolynomialError(ValueError):
    """Operation undefined for the zero polynomial."""


def _int_view(coeffs):
    """(integer coefficient list, common denominator) or None.

    Returns the representation coeffs[i] == ints[i] / den with den >= 1,
    or None when a coefficient is neither int nor Fraction.
    """
    den = 1
    for c in coeffs:
        if type(c) is int:
            continue
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
        else:
            return None
    if den == 1:
        return [c if type(c) is int else c.numerator for c in coeffs], 1
    return [int(c * den) for c in coeffs], den


def _scaled(ints, den):
    """Coefficient list for ints/den, keeping exact ints when den == 1."""
    if den == 1:
        return ints
    return [Fraction(v, den) for v in ints]


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=(), trim=True):
        coeffs = list(coeffs)
        if trim:
            n = len(coeffs)
            while n and not coeffs[n - 1]:
                n -= 1
            del coeffs[n:]
        self.coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def const(c) -> "Poly":
        return Poly((c,))

    @staticmethod
    def monomial(k: int, c=1) -> "Poly":
        return Poly([0] * k + [c])

    # -- structure ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if len(a) != len(b):
                return False
            return all(x == y for x, y in zip(a, b))
        return self == Poly.const(other)

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations ----------------------------------------------
    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], trim=False)

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if not other:
                return Poly.zero()
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero()
        va, vb = _int_view(a), _int_view(b)
        if va is not None and vb is not None:
            ints = intpoly.mul(va[0], vb[0])
            return Poly(_scaled(ints, va[1] * vb[1]), trim=False)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- evaluation and substitution ------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale_arg(self, factor) -> "Poly":
        """p(factor * x): coefficient of x**k picks up factor**k."""
        out = []
        fk = 1
        for c in self.coeffs:
            out.append(c * fk)
            fk = fk * factor
        return Poly(out)

    def inflate(self, k: int) -> "Poly":
        """p(x**k)."""
        if k < 1:
            raise ValueError("inflation exponent must be >= 1")
        if not self.coeffs:
            return Poly.zero()
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(out, trim=False)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    # -- division -------------------------------------------------------
    def exact_div(self, other: "Poly") -> "Poly":
        """Exact quotient; raises NonzeroRemainderError if other ∤ self."""
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return Poly.zero()
        if self.degree < other.degree:
            raise NonzeroRemainderError("degree of dividend below divisor")
        va, vb = _int_view(self.coeffs), _int_view(other.coeffs)
        if va is not None and vb is not None:
            bp = intpoly.primitive(vb[0])
            c = vb[0][-1] // bp[-1]  # signed content of the divisor
            try:
                q = intpoly.divexact(va[0], bp)
            except intpoly.NotDivisible:
                raise NonzeroRemainderError("polynomial division is not exact") from None
            scale = Fraction(vb[1], va[1] * c)
            if scale == 1:
                return Poly(q, trim=False)
            return Poly([v * scale for v in q], trim=False)
        q, r = self._divmod_generic(other)
        if not r.is_zero():
            raise NonzeroRemainderError("polynomial division is not exact")
        return q

    def _divmod_generic(self, other: "Poly"):
        lead = other.leading
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            head = rem[k + len(other.coeffs) - 1]
            if not head:
                continue
            c = head / lead
            quot[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
        return Poly(quot), Poly(rem)

    def synthetic_div(self, point):
        """(quotient, remainder) for division by (x - point)."""
        if self.is_zero():
            return Poly.zero(), 0
        out = [0] * (len(self.coeffs) - 1)
        acc = 0
        for k in range(len(self.coeffs) - 1, 0, -1):
            acc = acc * point + self.coeffs[k]
            out[k - 1] = acc
        rem = acc * point + self.coeffs[0]
        return Poly(out), rem

    # -- display --------------------------------------------------------
    def format(self, var: str = "x", fmt=str) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = fmt(c)
            if k == 0:
                parts.append(cs)
            elif k == 1:
                parts.append(f"{cs}*{var}" if cs != "1" else var)
            else:
                parts.append(f"{cs}*{var}^{k}" if cs != "1" else f"{var}^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.format()})"


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Module-level alias for the exact-division kernel."""
    return a.exact_div(b)


def vanishing_order(p: Poly, point) -> int:
    """Largest k with (x - point)**k dividing p, by repeated synthetic division."""
    if p.is_zero():
        raise ZeroPolynomialError("vanishing order of the zero polynomial is undefined")
    order = 0
    while True:
        quotient, rem = p.synthetic_div(point)
        if rem:
            return order
        order += 1
        p = quotient
        if p.is_zero():
            return order
