"""Low-level kernels for dense integer-coefficient polynomials.

A polynomial is a plain list of Python ints, index = degree, trailing zeros
stripped; [] is the zero polynomial.  The hot operations (multiplication,
exact division, gcd) run on packed big integers: a polynomial whose
coefficients fit in a signed window of 2**B is evaluated at 2**B, turning
polynomial arithmetic into single big-int operations that CPython executes
with subquadratic multiplication.  Packing splits positive and negative
parts so the byte-level fast path applies; unpacking reads balanced
base-2**B digits, so negative coefficients survive the round trip.

All results are exact: the Kronecker shortcuts either verify their output
by re-multiplication or fall back to schoolbook routines.
"""

from __future__ import annotations

import math

IntPoly = list


def trim(c: list[int]) -> list[int]:
    """Strip trailing zeros in place and return the list."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, v in enumerate(b):
        out[i] += v
    return trim(out)


def sub(a: list[int], b: list[int]) -> list[int]:
    out = a[:] + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return trim(out)


def neg(a: list[int]) -> list[int]:
    return [-v for v in a]


def max_abs(a: list[int]) -> int:
    return max((abs(v) for v in a), default=0)


def content(a: list[int]) -> int:
    """gcd of all coefficients (0 for the zero polynomial)."""
    g = 0
    for v in a:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def primitive(a: list[int]) -> list[int]:
    """Divide out the content; sign-normalize to a positive leading coefficient."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a[:]
    return [v // g for v in a]


def _pack(a: list[int], width_bits: int) -> int:
    """Evaluate the polynomial at 2**width_bits.  width_bits % 8 == 0."""
    step = width_bits // 8
    pos = bytearray(len(a) * step)
    neg_ = bytearray(len(a) * step)
    any_neg = False
    for i, v in enumerate(a):
        if v > 0:
            pos[i * step : i * step + step] = v.to_bytes(step, "little")
        elif v < 0:
            neg_[i * step : i * step + step] = (-v).to_bytes(step, "little")
            any_neg = True
    val = int.from_bytes(pos, "little")
    if any_neg:
        val -= int.from_bytes(neg_, "little")
    return val


def _unpack(val: int, width_bits: int) -> list[int]:
    """Balanced base-2**width_bits digits of val (digits in [-half, half])."""
    if val == 0:
        return []
    if val < 0:
        return [-d for d in _unpack(-val, width_bits)]
    step = width_bits // 8
    half = 1 << (width_bits - 1)
    full = 1 << width_bits
    raw = val.to_bytes((val.bit_length() // 8) + 1 + step, "little")
    out = []
    carry = 0
    for i in range(0, len(raw), step):
        d = int.from_bytes(raw[i : i + step], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    if carry:
        out.append(carry)
    return trim(out)


def _width_for(bound: int) -> int:
    """Smallest multiple of 8 strictly exceeding bound's bit length + 1."""
    return ((bound.bit_length() + 2 + 7) // 8) * 8


def mul(a: list[int], b: list[int]) -> list[int]:
    """Exact product via Kronecker substitution."""
    if not a or not b:
        return []
    if len(a) == 1:
        s = a[0]
        return trim([s * v for v in b])
    if len(b) == 1:
        s = b[0]
        return trim([s * v for v in a])
    bound = max_abs(a) * max_abs(b) * min(len(a), len(b))
    width = _width_for(bound)
    out = _unpack(_pack(a, width) * _pack(b, width), width)
    # exact by construction: every product coefficient fits in the window
    return out


def mul_scalar(a: list[int], s: int) -> list[int]:
    if s == 0:
        return []
    return [s * v for v in a]


def shift(a: list[int], k: int) -> list[int]:
    """Multiply by x**k."""
    if not a:
        return []
    return [0] * k + a


class NotDivisible(Exception):
    """Exact polynomial division left a remainder."""


def _divexact_school(a: list[int], b: list[int]) -> list[int]:
    """Schoolbook exact division over Z[x]; raises NotDivisible."""
    if not a:
        return []
    la, lb = len(a), len(b)
    if la < lb:
        raise NotDivisible
    r = a[:]
    q = [0] * (la - lb + 1)
    lead = b[-1]
    for k in range(la - lb, -1, -1):
        head = r[k + lb - 1]
        if head % lead:
            raise NotDivisible
        c = head // lead
        q[k] = c
        if c:
            for i in range(lb):
                r[k + i] -= c * b[i]
    if any(r):
        raise NotDivisible
    return trim(q)


def divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a // b in Z[x]; raises NotDivisible otherwise.

    Kronecker route: if a = q*b then a(2**w) = q(2**w)*b(2**w) for every w,
    so a nonzero integer remainder proves indivisibility immediately.  A zero
    remainder yields a candidate that is verified by re-multiplication
    (guarding against digit aliasing when q's coefficients overflow the
    window); on verification failure the window is widened, then the
    schoolbook routine settles the question.
    """
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        raise NotDivisible
    if len(b) == 1:
        s = b[0]
        if any(v % s for v in a):
            raise NotDivisible
        return [v // s for v in a]
    width = _width_for(max(max_abs(a), max_abs(b)) * len(a))
    for _ in range(3):
        qv, rv = divmod(_pack(a, width), _pack(b, width))
        if rv:
            raise NotDivisible
        q = _unpack(qv, width)
        if mul(q, b) == a:
            return q
        width *= 2
    return _divexact_school(a, b)


def divides(b: list[int], a: list[int]) -> bool:
    try:
        divexact(a, b)
        return True
    except NotDivisible:
        return False


def eval_at(a: list[int], x: int) -> int:
    """Horner evaluation at an integer point."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _prs_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd via the subresultant remainder sequence (fallback path)."""
    f, g = primitive(a), primitive(b)
    if len(f) < len(g):
        f, g = g, f
    h_ = 1
    gamma = 1
    while g:
        delta = len(f) - len(g)
        # pseudo-remainder of f by g
        r = f[:]
        lead = g[-1]
        for _ in range(delta + 1):
            if len(r) < len(g):
                r = mul_scalar(r, lead)
                continue
            c = r[-1]
            r = mul_scalar(r[:-1], lead)
            for i in range(len(g) - 1):
                r[i + len(r) - len(g) + 1] -= c * g[i]
            trim(r)
        f, g = g, r
        if g:
            div = gamma * h_**delta
            g = [v // div for v in g]
            gamma = f[-1]
            h_ = h_ ** (1 - delta) * gamma**delta if delta <= 1 else gamma**delta // h_ ** (delta - 1)
    return primitive(f)


def gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive polynomial gcd, positive leading coefficient.

    Heuristic evaluation gcd: reconstruct a candidate from gcd(a(xi), b(xi))
    in balanced base-xi digits and certify it by exact trial division of both
    inputs; maximality is enforced by recursing on the cofactors.  Widens the
    evaluation point on failure and falls back to the subresultant sequence.
    """
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    pa, pb = primitive(a), primitive(b)
    if pa == [1] or pb == [1]:
        return [1]
    width = _width_for(min(max_abs(pa), max_abs(pb)) * 256)
    for _ in range(4):
        vg = math.gcd(_pack(pa, width), _pack(pb, width))
        cand = primitive(_unpack(vg, width))
        if cand == [1]:
            return [1]
        if divides(cand, pa) and divides(cand, pb):
            extra = gcd(divexact(pa, cand), divexact(pb, cand))
            return cand if extra == [1] else mul(cand, extra)
        width *= 2
    g = _prs_gcd(pa, pb)
    return g if g[-1] > 0 else neg(g)
