"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q(z)/(Phi_N), with rational coefficients.  Mixed-modulus arithmetic lifts
both operands into Q(zeta_L), L = lcm of the two moduli.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # integer long division by a monic polynomial; coefficients low -> high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(coeffs: Sequence, n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = Fraction(0)
            shift = i - deg
            for j in range(deg):
                if phi[j]:
                    work[shift + j] -= c * phi[j]
    work = work[:deg] + [Fraction(0)] * (deg - len(work))
    return tuple(work)


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical power-basis form.

    >>> z = root_of_unity(5, 1) + root_of_unity(5, 4)
    >>> round(z.to_complex().real, 10)
    0.6180339887
    """

    __slots__ = ("_n", "_coeffs")

    def __init__(self, n: int, coeffs: Iterable = ()):
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        self._n = n
        self._coeffs = _reduce(list(coeffs) or [0], n)

    # construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, value, n: int = 1) -> CyclotomicNumber:
        return cls(n, [Fraction(value)])

    @classmethod
    def from_exponent_counts(cls, n: int, counts: Sequence) -> CyclotomicNumber:
        """Return sum_k counts[k] * zeta_n^k for a length-n count vector."""
        if len(counts) != n:
            raise ValueError("need exactly one count per residue mod n")
        return cls(n, counts)

    # accessors ----------------------------------------------------------

    @property
    def modulus(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def lift(self, n: int) -> CyclotomicNumber:
        """Embed into Q(zeta_n); ``n`` must be a multiple of the modulus."""
        if n % self._n:
            raise ValueError(f"cannot embed Q(zeta_{self._n}) into Q(zeta_{n})")
        if n == self._n:
            return self
        step = n // self._n
        poly = [Fraction(0)] * (step * len(self._coeffs))
        for i, c in enumerate(self._coeffs):
            poly[i * step] = c
        return CyclotomicNumber(n, poly)

    def _common(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.from_rational(other)
        n = math.lcm(self._n, other._n)
        return self.lift(n), other.lift(n)

    # ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber(a._n, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self._n, [-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        prod = [Fraction(0)] * (2 * len(a._coeffs) - 1)
        for i, x in enumerate(a._coeffs):
            if x:
                for j, y in enumerate(b._coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(a._n, prod)

    __rmul__ = __mul__

    def scale(self, q) -> CyclotomicNumber:
        q = Fraction(q)
        return CyclotomicNumber(self._n, [q * c for c in self._coeffs])

    def __pow__(self, k: int) -> CyclotomicNumber:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicNumber.from_rational(1, self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CyclotomicNumber:
        # zeta^i -> zeta^(N - i)
        poly = [Fraction(0)] * self._n
        for i, c in enumerate(self._coeffs):
            poly[(-i) % self._n] += c
        return CyclotomicNumber(self._n, poly)

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return a._coeffs == b._coeffs

    __hash__ = None  # equality crosses moduli; no cheap canonical hash

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._coeffs[0]

    # floating point and display -----------------------------------------

    def to_complex(self) -> complex:
        total = 0j
        for i, c in enumerate(self._coeffs):
            if c:
                total += float(c) * cmath.exp(2j * math.pi * i / self._n)
        return total

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self._n}, [{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self._coeffs[0])
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else (f"z{self._n}" if i == 1 else f"z{self._n}^{i}")
            if i and c == 1:
                terms.append(mono)
            elif i and c == -1:
                terms.append(f"-{mono}")
            elif i:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")

    def approx(self, digits: int = 10) -> str:
        """Float rendering ``a+bi`` with ``digits`` significant digits."""
        z = self.to_complex()
        re, im = z.real, z.imag
        if abs(re) < 1e-12:
            re = 0.0
        if abs(im) < 1e-12:
            im = 0.0
        return f"{re:.{digits}g}{im:+.{digits}g}i"

    def to_dict(self) -> dict:
        return {
            "N": self._n,
            "coeffs": [[c.numerator, c.denominator] for c in self._coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> CyclotomicNumber:
        return cls(int(data["N"]), [Fraction(int(a), int(b)) for a, b in data["coeffs"]])


def root_of_unity(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n^k as an exact element."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    poly = [0] * n
    poly[k % n] = 1
    return CyclotomicNumber(n, poly)
