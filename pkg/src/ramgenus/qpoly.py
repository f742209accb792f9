"""Polynomial arithmetic over Q, with exact factorization into irreducibles.

Factorization over Q[x] delegates to sympy (Zassenhaus/van Hoeij); everything
else is self-contained Fraction arithmetic. Coefficients are stored ascending
with trailing zeros stripped, mirroring PolyFp.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .errors import ZeroValuationError
from .gfpoly import PolyFp


@dataclass(frozen=True)
class PolyQ:
    """A polynomial over Q: Fraction coefficients ascending, normalized."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, coeffs) -> "PolyQ":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c) -> "PolyQ":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "PolyQ":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroValuationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_value(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other: "PolyQ") -> "PolyQ":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyQ(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        if self.is_zero() or other.is_zero():
            return PolyQ(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(tuple(out))

    def scale(self, c) -> "PolyQ":
        c = Fraction(c)
        return PolyQ(tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        inv = 1 / other.leading()
        dq = other.degree
        q = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return PolyQ(tuple(q)), PolyQ(tuple(rem))

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def gcd(self, other: "PolyQ") -> "PolyQ":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, x0) -> Fraction:
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def reverse(self) -> "PolyQ":
        """x^deg * f(1/x)."""
        return PolyQ(tuple(reversed(self.coeffs)))

    def integer_model(self) -> tuple[Fraction, tuple[int, ...]]:
        """(content, primitive integer coefficients): f = content * primitive."""
        if self.is_zero():
            return Fraction(0), ()
        from math import lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        sign = 1 if ints[-1] > 0 else -1
        g *= sign
        return Fraction(g, den), tuple(v // g for v in ints)

    def reduce_mod(self, p: int) -> PolyFp:
        """Reduction modulo p; requires every denominator to be a p-unit."""
        out = []
        for c in self.coeffs:
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"coefficient {c} is not p-integral at {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return PolyFp(p, tuple(out))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append("x" if c == 1 else f"{cs}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{cs}*x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    def sort_key(self) -> tuple:
        return (self.degree, tuple(self.coeffs[::-1]))


def _to_sympy(f: PolyQ):
    import sympy

    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) * x**i
        for i, c in enumerate(f.coeffs)
    )
    return sympy.Poly(expr, x, domain="QQ")


def factor_q(f: PolyQ) -> tuple[Fraction, list[tuple[PolyQ, int]]]:
    """Factor a nonzero f over Q into (constant, [(monic irreducible, mult)]).

    constant * prod(factor^mult) == f exactly.
    """
    if f.is_zero():
        raise ZeroValuationError("cannot factor the zero polynomial")
    if f.is_constant():
        return f.constant_value(), []
    import sympy

    const, parts = _to_sympy(f).factor_list()
    constant = Fraction(const.p, const.q)
    out: list[tuple[PolyQ, int]] = []
    for poly, mult in parts:
        cs = [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]
        g = PolyQ(tuple(cs))
        lead = g.leading()
        constant *= lead**mult
        out.append((g.monic(), int(mult)))
    out.sort(key=lambda t: t[0].sort_key())
    return constant, out


def is_irreducible_q(f: PolyQ) -> bool:
    """Exact irreducibility over Q for a nonconstant polynomial."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    _, parts = factor_q(f)
    return len(parts) == 1 and parts[0][1] == 1


def rational_roots(f: PolyQ) -> list[Fraction]:
    """All rational roots, with multiplicity ignored, via the rational root
    theorem on the primitive integer model."""
    if f.is_zero():
        raise ZeroValuationError("every rational is a root of 0")
    roots = []
    g = f
    # strip x^m so the constant term is nonzero
    shift = 0
    while not g.is_zero() and g.coeffs[0] == 0:
        g = PolyQ(g.coeffs[1:])
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if g.is_constant():
        return roots
    _, ints = g.integer_model()
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n: int) -> list[int]:
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return sorted(set(out))

    for num in divisors(a0):
        for den in divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if g.evaluate(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)
