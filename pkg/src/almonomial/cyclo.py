"""Exact arithmetic in cyclotomic fields Q(zeta_e).

A value is a polynomial in zeta_e with rational coefficients, kept in the
canonical reduced form: the remainder modulo the e-th cyclotomic polynomial,
so the coefficient vector has length phi(e) and equality of values is
coefficient equality.  Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "reduction_table",
]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"euler_phi expects n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _polydiv_exact(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of an exact division of integer polynomials (monic divisor)."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        quot[i - dd] = c
        if c:
            for j, d in enumerate(den):
                num[i - dd + j] -= c * d
    if any(num[:dd]):
        raise ValueError("division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients (low to high, monic) of the e-th cyclotomic polynomial."""
    if e < 1:
        raise ValueError(f"conductor must be >= 1, got {e}")
    # (x^e - 1) divided by the product of all lower cyclotomic polynomials.
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            num = _polydiv_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def reduction_table(e: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_e for k = 0..e-1, each row a phi(e)-vector of integers.

    Since zeta_e^e = 1, callers may index with any exponent taken mod e.
    """
    phi = cyclotomic_polynomial(e)
    d = len(phi) - 1  # = euler_phi(e)
    rows: list[tuple[int, ...]] = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x, then reduce the single overflow coefficient
        lead = cur[d - 1]
        cur = [0] + cur[:-1]
        if lead:
            for j in range(d):
                cur[j] -= lead * phi[j]
    return tuple(rows)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Cyclotomic:
    """An element of Q(zeta_e) in canonical reduced form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable, *, _reduced: bool = False):
        self.conductor = int(conductor)
        if self.conductor < 1:
            raise ValueError("conductor must be >= 1")
        if _reduced:
            self.coeffs = tuple(coeffs)
            return
        table = reduction_table(self.conductor)
        d = len(table[0])
        acc = [Fraction(0)] * d
        for k, c in enumerate(coeffs):
            c = _as_fraction(c)
            if not c:
                continue
            row = table[k % self.conductor]
            for j in range(d):
                if row[j]:
                    acc[j] += c * row[j]
        self.coeffs = tuple(acc)

    # -- constructors ------------------------------------------------------

    @classmethod
    def rational(cls, value, conductor: int = 1) -> "Cyclotomic":
        v = _as_fraction(value)
        d = euler_phi(conductor)
        coeffs = [Fraction(0)] * d
        coeffs[0] = v
        return cls(conductor, coeffs, _reduced=True)

    @classmethod
    def zero(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.rational(0, conductor)

    @classmethod
    def one(cls, conductor: int = 1) -> "Cyclotomic":
        return cls.rational(1, conductor)

    @classmethod
    def root_of_unity(cls, conductor: int, k: int) -> "Cyclotomic":
        """zeta_conductor ** k."""
        table = reduction_table(conductor)
        row = table[k % conductor]
        return cls(conductor, [Fraction(c) for c in row], _reduced=True)

    @classmethod
    def from_exponent_counts(cls, conductor: int, counts: dict) -> "Cyclotomic":
        """Sum of counts[k] * zeta^k over the given exponents."""
        table = reduction_table(conductor)
        d = len(table[0])
        acc = [0] * d
        for k, c in counts.items():
            row = table[k % conductor]
            for j in range(d):
                if row[j]:
                    acc[j] += c * row[j]
        return cls(conductor, [Fraction(a) for a in acc], _reduced=True)

    # -- conductor handling --------------------------------------------------

    def lift(self, conductor: int) -> "Cyclotomic":
        """Rewrite in Q(zeta_conductor); requires self.conductor | conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                f"cannot lift conductor {self.conductor} into {conductor}"
            )
        step = conductor // self.conductor
        # zeta_e = zeta_E^(E/e); expand through the unreduced power basis.
        table_small = None  # coefficients are already reduced w.r.t. small conductor
        big: dict[int, Fraction] = {}
        for k, c in enumerate(self.coeffs):
            if c:
                big[k * step] = big.get(k * step, Fraction(0)) + c
        out = Cyclotomic(conductor, [Fraction(0)])
        tab = reduction_table(conductor)
        d = len(tab[0])
        acc = [Fraction(0)] * d
        for k, c in big.items():
            row = tab[k % conductor]
            for j in range(d):
                if row[j]:
                    acc[j] += c * row[j]
        return Cyclotomic(conductor, acc, _reduced=True)

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other, self.conductor)
        if not isinstance(other, Cyclotomic):
            raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")
        if other.conductor == self.conductor:
            return self, other
        if self.conductor % other.conductor == 0:
            return self, other.lift(self.conductor)
        if other.conductor % self.conductor == 0:
            return self.lift(other.conductor), other
        raise ValueError(
            f"incompatible conductors {self.conductor} and {other.conductor}"
        )

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(
            a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-x for x in self.coeffs], _reduced=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(
            a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Cyclotomic(
                self.conductor, [x * c for x in self.coeffs], _reduced=True
            )
        a, b = self._coerce(other)
        e = a.conductor
        table = reduction_table(e)
        d = len(table[0])
        # convolution, exponents folded mod e on the fly
        conv: list[Fraction] = [Fraction(0)] * (2 * d)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    conv[i + j] += x * y
        acc = [Fraction(0)] * d
        for k, c in enumerate(conv):
            if c:
                row = table[k % e]
                for j in range(d):
                    if row[j]:
                        acc[j] += c * row[j]
        return Cyclotomic(e, acc, _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(
                self.conductor, [x / c for x in self.coeffs], _reduced=True
            )
        raise TypeError("division only by rational scalars")

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation: zeta^k -> zeta^(-k)."""
        e = self.conductor
        table = reduction_table(e)
        d = len(table[0])
        acc = [Fraction(0)] * d
        for k, c in enumerate(self.coeffs):
            if c:
                row = table[(e - k) % e]
                for j in range(d):
                    if row[j]:
                        acc[j] += c * row[j]
        return Cyclotomic(e, acc, _reduced=True)

    # -- predicates / conversions ---------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def as_integer(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not a rational integer")
        return f.numerator

    def sort_key(self) -> tuple:
        return self.coeffs

    # -- dunder plumbing -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        try:
            a, b = self._coerce(other)
        except ValueError:
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return self.render()

    def render(self, symbol: str | None = None) -> str:
        """Polynomial text in a named root of unity, e.g. ``2*z6 - 1``."""
        if symbol is None:
            symbol = f"z{self.conductor}"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = symbol
            else:
                mono = f"{symbol}^{k}"
            if mono:
                if c == 1:
                    body = mono
                elif c == -1:
                    body = f"-{mono}"
                else:
                    body = f"{c}*{mono}"
            else:
                body = str(c)
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out
