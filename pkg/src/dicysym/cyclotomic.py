"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) after
reduction modulo the N-th cyclotomic polynomial, with arbitrary-precision
rational coefficients.  Equality and zero-tests are decided exactly by
canonical form, never by floating magnitude; ring operations auto-lift to
the lcm of the two orders.  Division by anything other than an exact
rational scalar is deliberately unsupported.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .exactlinalg import solve_columns

__all__ = [
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "cyclo",
    "ZERO",
    "ONE",
]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs a positive integer")
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


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_divmod_exact(num, den):
    """Quotient of num/den for integer polynomials where den is monic and
    divides num exactly; remainder is asserted zero."""
    num = list(num)
    dden = len(den) - 1
    quot = [0] * (len(num) - dden)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dden] = c
        for j, dj in enumerate(den):
            num[i - dden + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact cyclotomic division"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int):
    """Coefficients (low to high) of Phi_n, computed by the recursive exact
    division Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs a positive order")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divmod_exact(num, den))


@lru_cache(maxsize=None)
def _power_table(n: int):
    """x^j mod Phi_n for 0 <= j < n, as integer coefficient tuples of
    length phi(n)."""
    phi = euler_phi(n)
    modulus = cyclotomic_polynomial(n)
    # x^phi = -(lower part of Phi_n)
    wrap = [-c for c in modulus[:phi]]
    table = []
    current = [0] * phi
    current[0] = 1
    for _ in range(n):
        table.append(tuple(current))
        lead = current[phi - 1]
        shifted = [0] + current[: phi - 1]
        if lead:
            for i in range(phi):
                shifted[i] += lead * wrap[i]
        current = shifted
    return tuple(table)


@lru_cache(maxsize=None)
def _divisors(n: int):
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def _complex_powers(n: int):
    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))


_FRAC_ZERO = Fraction(0)
_FRAC_ONE = Fraction(1)


class CyclotomicNumber:
    """An element of Q(zeta_N) in canonical power-basis form.

    Immutable; all arithmetic returns new values.  Two numbers compare equal
    iff their canonical forms agree after lifting to the lcm order, so
    equality (and hashing, via the minimal-order form) is exact.
    """

    __slots__ = ("order", "coeffs", "_reduced")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"expected {phi} coefficients at order {order}, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs
        self._reduced = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value, order: int = 1) -> "CyclotomicNumber":
        phi = euler_phi(order)
        coeffs = [Fraction(value)] + [_FRAC_ZERO] * (phi - 1)
        return CyclotomicNumber(order, coeffs)

    @staticmethod
    def zero(order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber.from_rational(0, order)

    @staticmethod
    def one(order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber.from_rational(1, order)

    # -- canonical form ----------------------------------------------------

    def lift(self, order: int) -> "CyclotomicNumber":
        """The same value expressed at a compatible (multiple) order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        ratio = order // self.order
        phi = euler_phi(order)
        table = _power_table(order)
        out = [_FRAC_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            row = table[(i * ratio) % order]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
        return CyclotomicNumber(order, out)

    def reduced(self) -> "CyclotomicNumber":
        """Canonical form at the smallest cyclotomic order containing the
        value; used for hashing and printing."""
        if self._reduced is not None:
            return self._reduced
        result = self
        n = self.order
        if n > 1:
            table = _power_table(n)
            for d in _divisors(n):
                if d == n:
                    break
                ratio = n // d
                basis = [table[(j * ratio) % n] for j in range(euler_phi(d))]
                sol = solve_columns(basis, self.coeffs)
                if sol is not None:
                    result = CyclotomicNumber(d, sol)
                    break
        self._reduced = result
        result._reduced = result
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:]) or self.reduced().order == 1

    def rational_value(self) -> Fraction:
        red = self.reduced()
        if red.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return red.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, 1)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return CyclotomicNumber(
                self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
            )
        order = math.lcm(self.order, other.order)
        a, b = self.lift(order), other.lift(order)
        return CyclotomicNumber(order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [c * f for c in self.coeffs])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        order = math.lcm(self.order, other.order)
        a, b = self.lift(order), other.lift(order)
        phi = euler_phi(order)
        table = _power_table(order)
        out = [_FRAC_ZERO] * phi
        bc = b.coeffs
        for i, ai in enumerate(a.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(bc):
                if bj == 0:
                    continue
                e = i + j
                if e < phi:
                    out[e] += ai * bj
                else:
                    row = table[e % order]
                    prod = ai * bj
                    for k in range(phi):
                        if row[k]:
                            out[k] += prod * row[k]
        return CyclotomicNumber(order, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # rational scaling only; field division is out of scope
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [c / f for c in self.coeffs])
        return NotImplemented

    def conjugate(self) -> "CyclotomicNumber":
        """Image under the automorphism zeta_N -> zeta_N^(-1)."""
        n = self.order
        if n <= 2:
            return self
        phi = euler_phi(n)
        table = _power_table(n)
        out = [_FRAC_ZERO] * phi
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            row = table[(n - i) % n]
            for k in range(phi):
                if row[k]:
                    out[k] += c * row[k]
        return CyclotomicNumber(n, out)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        order = math.lcm(self.order, other.order)
        return self.lift(order).coeffs == other.lift(order).coeffs

    def __hash__(self):
        red = self.reduced()
        return hash((red.order, red.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- output ------------------------------------------------------------

    def to_complex(self) -> complex:
        """Floating approximation at zeta_N = exp(2*pi*i/N); diagnostics only,
        never consulted for equality."""
        powers = _complex_powers(self.order)
        return sum((float(c) * powers[i] for i, c in enumerate(self.coeffs) if c), 0j)

    def __repr__(self):
        red = self.reduced()
        if red.order == 1:
            return str(red.coeffs[0])
        terms = []
        for i, c in enumerate(red.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{red.order}" + (f"^{i}" if i > 1 else "")
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def root_of_unity(order: int, k: int) -> CyclotomicNumber:
    """zeta_order^k in canonical form; k is reduced mod order."""
    if order < 1:
        raise ValueError("order must be positive")
    return CyclotomicNumber(order, _power_table(order)[k % order])


def cyclo(value) -> CyclotomicNumber:
    """Coerce an int or Fraction into a CyclotomicNumber."""
    if isinstance(value, CyclotomicNumber):
        return value
    return CyclotomicNumber.from_rational(value, 1)


ZERO = CyclotomicNumber.zero()
ONE = CyclotomicNumber.one()
