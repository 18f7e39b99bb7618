"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'num/den'")
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``; no decimals, no floats."""
    text = text.strip()
    num, _, den = text.partition("/")
    try:
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class UniPoly:
    """Immutable polynomial, coefficients ascending, trailing zeros stripped.

    >>> p = UniPoly([-1, 0, 1])      # z^2 - 1
    >>> p(3), p.degree
    (Fraction(8, 1), 2)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # -- constructors
    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, alpha, beta) -> "UniPoly":
        """alpha*z + beta"""
        return cls([beta, alpha])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UniPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    # -- basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def trailing_zeros(self) -> int:
        """Largest e with z^e dividing the polynomial (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other)
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if body and mono:
                body += "*"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body + mono))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])

    # -- arithmetic
    def _coerce(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            k = _frac(other)
            return UniPoly([c * k for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_linear(self, alpha, beta) -> "UniPoly":
        """p(alpha*z + beta)."""
        lin = UniPoly.linear(alpha, beta)
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc
        q = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            k = len(r) - 1 - db
            f = r[-1] / lb
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[i + k] -= f * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd; gcd(0, 0) is 0."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroDivisionError("square-free part of the zero polynomial")
        if self.degree < 1:
            return UniPoly.const(1)
        return (self // self.gcd(self.derivative())).monic()

    def to_integer(self) -> list[int]:
        """Primitive integer coefficients with the same sign (positive multiple)."""
        if not self.coeffs:
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return [x // g for x in ints]

    def sign_variations(self) -> int:
        """Descartes sign changes in the coefficient sequence."""
        signs = [1 if c > 0 else -1 for c in self.coeffs if c]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def coefficient_distance_sq(self, other: "UniPoly") -> Fraction:
        d = self - other
        return sum((c * c for c in d.coeffs), Fraction(0))


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: p = lc * prod f_k^k with f_k square-free and coprime.

    Returns [(f_k, k)] for nonconstant f_k only, k increasing.
    """
    if p.is_zero():
        raise ZeroDivisionError("square-free decomposition of the zero polynomial")
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    g = p.gcd(dp)
    b = p // g
    d = (dp // g) - b.derivative()
    k = 1
    while b.degree >= 1:
        a = b.gcd(d)
        if a.degree >= 1:
            out.append((a.monic(), k))
        b = b // a
        d = (d // a) - b.derivative()
        k += 1
    return out
