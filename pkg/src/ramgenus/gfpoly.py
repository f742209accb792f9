"""Polynomial arithmetic over F_p, factorization, and residue-field tests.

Polynomials are stored as tuples of coefficients in ascending degree order
with the zero polynomial represented by the empty tuple. All values are
immutable; every operation returns a fresh polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd as int_gcd

from .errors import UnsupportedFieldError, ZeroValuationError
from .exactarith import is_prime

_KNOWN_PRIMES: set[int] = set()


def _check_char(p: int) -> None:
    if p not in _KNOWN_PRIMES:
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        _KNOWN_PRIMES.add(p)


@dataclass(frozen=True)
class PolyFp:
    """A polynomial over F_p: coefficients ascending, trailing zeros stripped."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_char(self.p)
        cs = tuple(c % self.p for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def of(cls, p: int, coeffs) -> "PolyFp":
        return cls(p, tuple(coeffs))

    @classmethod
    def constant(cls, p: int, c: int) -> "PolyFp":
        return cls(p, (c,))

    @classmethod
    def x(cls, p: int) -> "PolyFp":
        return cls(p, (0, 1))

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroValuationError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_value(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def _check(self, other: "PolyFp") -> None:
        if self.p != other.p:
            raise ValueError("mixed characteristics")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolyFp(self.p, tuple((x + y) % self.p for x, y in zip(a, b)))

    def __neg__(self) -> "PolyFp":
        return PolyFp(self.p, tuple(-c % self.p for c in self.coeffs))

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        return self + (-other)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyFp(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return PolyFp(self.p, tuple(out))

    def scale(self, c: int) -> "PolyFp":
        return PolyFp(self.p, tuple(a * c % self.p for a in self.coeffs))

    def __divmod__(self, other: "PolyFp") -> tuple["PolyFp", "PolyFp"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dlead_inv = pow(other.leading(), -1, p)
        dq = other.degree
        q = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * dlead_inv % p
            if c:
                q[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] = (rem[i - dq + j] - c * b) % p
        return PolyFp(p, tuple(q)), PolyFp(p, tuple(rem))

    def __floordiv__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[1]

    def monic(self) -> "PolyFp":
        if self.is_zero():
            return self
        return self.scale(pow(self.leading(), -1, self.p))

    def gcd(self, other: "PolyFp") -> "PolyFp":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "PolyFp":
        return PolyFp(
            self.p, tuple(i * c % self.p for i, c in enumerate(self.coeffs) if i)
        )

    def evaluate(self, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + c) % self.p
        return acc

    def reverse(self) -> "PolyFp":
        """x^deg * f(1/x): the coefficient list reversed."""
        return PolyFp(self.p, tuple(reversed(self.coeffs)))

    def pow_mod(self, e: int, modulus: "PolyFp") -> "PolyFp":
        if e < 0:
            return fq_inv(self.pow_mod(-e, modulus), modulus)
        base = self % modulus
        result = PolyFp.constant(self.p, 1)
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(parts)

    def sort_key(self) -> tuple:
        return (self.degree, self.coeffs[::-1])


# -- residue field F_p[x]/(pi) ----------------------------------------------


def fq_inv(a: PolyFp, pi: PolyFp) -> PolyFp:
    """Inverse of a modulo pi via the extended Euclidean algorithm."""
    a = a % pi
    if a.is_zero():
        raise ZeroDivisionError("inverse of 0 in residue field")
    p = a.p
    r0, r1 = pi, a
    s0, s1 = PolyFp(p, ()), PolyFp.constant(p, 1)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    # r0 is a nonzero constant gcd
    return s0.scale(pow(r0.constant_value(), -1, p)) % pi


def is_square_fq(r: PolyFp, pi: PolyFp) -> bool:
    """Is r a square in the residue field F_p[x]/(pi)?  Euler criterion
    r^((q-1)/2) = 1 with q = p^deg(pi); odd p only."""
    p = r.p
    if p == 2:
        raise UnsupportedFieldError("square test in characteristic 2 is out of scope")
    if not pi.is_monic() or not is_irreducible_fp(pi):
        raise ValueError("modulus must be a monic irreducible polynomial")
    if (r % pi).is_zero():
        raise ZeroValuationError("square test of 0 in the residue field")
    q = p**pi.degree
    return r.pow_mod((q - 1) // 2, pi) == PolyFp.constant(p, 1)


def residue_class_is_nth_power(r: PolyFp, pi: PolyFp, n: int) -> bool:
    """Is r an n-th power in F_q^x, q = p^deg(pi)?

    The n-th power subgroup has index g = gcd(n, q-1), so the test is
    r^((q-1)/g) = 1; this also handles g < n correctly (the class group
    F_q^x / (F_q^x)^n is cyclic of order g).
    """
    p = r.p
    if (r % pi).is_zero():
        raise ZeroValuationError("power-class test of 0 in the residue field")
    q = p**pi.degree
    g = int_gcd(n, q - 1)
    return r.pow_mod((q - 1) // g, pi) == PolyFp.constant(p, 1)


# -- factorization over F_p ---------------------------------------------------


def _squarefree_decomposition(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Monic squarefree decomposition [(g_i, m_i)] with f = prod g_i^{m_i},
    correct in characteristic p (handles f' = 0 via the Frobenius identity
    a^p = a on F_p)."""
    p = f.p
    out: list[tuple[PolyFp, int]] = []

    def rec(g: PolyFp, mult: int) -> None:
        if g.is_constant():
            return
        d = g.derivative()
        if d.is_zero():
            # g(x) = h(x^p) = h1(x)^p with h1 the p-th-root coefficient poly
            root = PolyFp(p, tuple(g.coeffs[::p]))
            rec(root, mult * p)
            return
        c = g.gcd(d)
        w = g // c
        i = 1
        while not w.is_constant():
            y = w.gcd(c)
            z = w // y
            if not z.is_constant():
                out.append((z.monic(), mult * i))
            w = y
            c = c // y
            i += 1
        if not c.is_constant():
            rec(c, mult)

    rec(f.monic(), 1)
    return out


def _distinct_degree(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Split a monic squarefree f into [(product of irreducibles of degree d, d)]."""
    p = f.p
    out = []
    x = PolyFp.x(p)
    h = x
    g = f
    d = 0
    while g.degree > 2 * (d + 1) - 1 and not g.is_constant():
        d += 1
        h = h.pow_mod(p, g)
        factor_d = g.gcd(h - x)
        if not factor_d.is_constant():
            out.append((factor_d, d))
            g = g // factor_d
            h = h % g
    if not g.is_constant():
        out.append((g, g.degree))
    return out


def _equal_degree_split(f: PolyFp, d: int, rng: random.Random) -> list[PolyFp]:
    """Cantor-Zassenhaus: split a monic squarefree product of irreducibles of
    equal degree d into the irreducibles."""
    p = f.p
    if f.degree == d:
        return [f]
    one = PolyFp.constant(p, 1)
    while True:
        r = PolyFp(p, tuple(rng.randrange(p) for _ in range(f.degree)))
        if r.is_constant():
            continue
        if p == 2:
            # trace map sum r^(2^i) over the degree-d subfield
            t = r % f
            acc = t
            for _ in range(d - 1):
                t = t * t % f
                acc = (acc + t) % f
            g = f.gcd(acc)
        else:
            g = f.gcd(r)
            if g.is_constant():
                e = (p**d - 1) // 2
                g = f.gcd(r.pow_mod(e, f) - one)
        if not g.is_constant() and g.degree < f.degree:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(
                f // g, d, rng
            )


def poly_factor_fp(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Factor a nonzero polynomial over F_p into monic irreducibles.

    Returns [(monic irreducible, multiplicity)] sorted by (degree, coeffs);
    the product times f's leading coefficient reconstructs f.
    """
    if f.is_zero():
        raise ZeroValuationError("cannot factor the zero polynomial")
    if f.is_constant():
        return []
    # seeded per input so results are reproducible run to run
    rng = random.Random(("gfpoly", f.p, f.coeffs).__repr__())
    out: list[tuple[PolyFp, int]] = []
    for g, mult in _squarefree_decomposition(f):
        for prod, d in _distinct_degree(g):
            for irr in _equal_degree_split(prod, d, rng):
                out.append((irr.monic(), mult))
    out.sort(key=lambda t: t[0].sort_key())
    return out


def is_irreducible_fp(f: PolyFp) -> bool:
    """Rabin's irreducibility test for a nonconstant polynomial over F_p."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    p, n = f.p, f.degree
    x = PolyFp.x(p)
    # x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n
    h = x
    powers = {}
    for i in range(1, n + 1):
        h = h.pow_mod(p, f)
        powers[i] = h
    if powers[n] != x % f:
        return False
    m = n
    qs = set()
    d = 2
    while d * d <= m:
        if m % d == 0:
            qs.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        qs.add(m)
    for q in qs:
        if not f.gcd(powers[n // q] - x).is_constant():
            return False
    return True


def monic_polys(p: int, degree: int):
    """Yield all monic polynomials of the given degree over F_p."""
    if degree == 0:
        yield PolyFp.constant(p, 1)
        return
    counters = [0] * degree
    while True:
        yield PolyFp(p, tuple(counters) + (1,))
        i = 0
        while i < degree:
            counters[i] += 1
            if counters[i] < p:
                break
            counters[i] = 0
            i += 1
        else:
            return


def irreducible_monics(p: int, max_degree: int) -> list[PolyFp]:
    """All monic irreducible polynomials over F_p of degree 1..max_degree."""
    out = []
    for d in range(1, max_degree + 1):
        for f in monic_polys(p, d):
            if is_irreducible_fp(f):
                out.append(f)
    return out
