"""Exact univariate polynomials over Q, Sturm sequences and root isolation.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``x**i``) as ints
or :class:`fractions.Fraction`; integral fractions are normalised to int so
that integer polynomials compare equal regardless of how they were built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"polynomial coefficients must be rational, got {type(c).__name__}")


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear_root(cls, a) -> "Polynomial":
        """The monic factor ``x - a``."""
        return cls((-a, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([p + q for p, q in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            if p:
                for j, q in enumerate(other.coeffs):
                    out[i + j] += p * q
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.lead)
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - dq - 1, -1, -1):
            c = rem[i + dq] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Polynomial":
        lead = Fraction(self.lead)
        return Polynomial(Fraction(c) / lead for c in self.coeffs)

    def squarefree(self) -> "Polynomial":
        g = gcd(self, self.derivative())
        return (self // g).monic()

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return "Polynomial(" + " + ".join(terms) + ")"


def _coerce(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial.const(p)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def product(factors: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial((1,))
    for f in factors:
        out = out * f
    return out


# ---- characteristic polynomials -----------------------------------------


def charpoly(rows: Sequence[Sequence]) -> Polynomial:
    """det(xI - M) by the Faddeev-LeVerrier recursion.

    For an integer matrix every division is exact, so the arithmetic stays in
    Python ints; rational matrices go through Fraction.
    """
    n = len(rows)
    M = [list(map(_norm, r)) for r in rows]
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    integral = all(isinstance(c, int) for r in M for c in r)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    # N_k = M (N_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(N_k)/k
    N = [row[:] for row in M]
    for k in range(1, n + 1):
        tr = sum(N[i][i] for i in range(n))
        if integral:
            c, rem = divmod(-tr, k)
            assert rem == 0, "Faddeev-LeVerrier division must be exact"
        else:
            c = Fraction(-tr) / k
        coeffs[n - k] = c
        if k == n:
            break
        for i in range(n):
            N[i][i] += c
        N = _matmul(M, N)
    return Polynomial(coeffs)


def _matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


# ---- Sturm sequences and root isolation ---------------------------------


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        seq.append(-r)
    seq.pop()
    return seq


def _sign_changes(seq: Sequence[Polynomial], x) -> int:
    changes = 0
    prev = 0
    for q in seq:
        v = q(x)
        if v:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                changes += 1
            prev = s
    return changes


def count_roots(p: Polynomial, a, b, seq: list[Polynomial] | None = None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (a, b]."""
    seq = sturm_sequence(p) if seq is None else seq
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = Fraction(p.lead)
    return 1 + max((abs(Fraction(c) / lead) for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    """Closed interval [lo, hi] holding exactly one real root."""

    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return self.mid


def isolate_real_roots(p: Polynomial, tol=Fraction(1, 10**12)) -> list[RootInterval]:
    """Distinct real roots of ``p`` as ascending intervals of width <= ``tol``."""
    if p.degree < 1:
        return []
    q = p.squarefree()
    seq = sturm_sequence(q)
    tol = Fraction(tol)
    B = root_bound(q)
    out: list[RootInterval] = []
    stack = [(-B, B, count_roots(q, -B, B, seq))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append(_refine(q, a, b, tol))
            continue
        m = (a + b) / 2
        left = count_roots(q, a, m, seq)
        stack.append((m, b, cnt - left))
        stack.append((a, m, left))
    out.sort(key=lambda iv: iv.lo)
    return out


def _refine(q: Polynomial, a: Fraction, b: Fraction, tol: Fraction) -> RootInterval:
    # q squarefree with exactly one root in (a, b]
    if q(b) == 0:
        return RootInterval(b, b)
    va = q(a)
    # a may itself be a (different) root; the sign just right of it is q'(a)'s
    sa = (va if va else q.derivative()(a)) > 0
    while b - a > tol:
        m = (a + b) / 2
        v = q(m)
        if v == 0:
            return RootInterval(m, m)
        if (v > 0) == sa:
            a = m
        else:
            b = m
    return RootInterval(a, b)


def real_roots(p: Polynomial, tol=Fraction(1, 10**12)) -> list[float]:
    return [iv.mid for iv in isolate_real_roots(p, tol)]


def largest_real_root(p: Polynomial, tol=Fraction(1, 10**12)) -> RootInterval:
    roots = isolate_real_roots(p, tol)
    if not roots:
        raise ValueError("polynomial has no real roots")
    return roots[-1]
