"""Exact scalar arithmetic: rationals, real quadratic fields, cyclotomic fields.

Rationals are ``fractions.Fraction`` (aliased ``Rational``): arbitrary
precision, always in lowest terms, positive denominator.  ``QuadScalar``
represents a + b*sqrt(d) for d in {2, 5}.  ``CycloScalar`` represents an
element of Q(zeta_m) as a dense polynomial residue modulo the m-th
cyclotomic polynomial, with coefficients on the power basis
1, zeta, ..., zeta^(phi(m)-1).

Every value is immutable and hashable.  The memoized per-conductor tables
(cyclotomic polynomials, monomial reduction rows) are written once under
``functools.lru_cache`` and only read afterwards, so concurrent readers are
safe; there is no other shared state in this module.

There are no floating-point code paths here: every operation is exact, and
anything that cannot be represented exactly raises instead of approximating.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FieldMismatch, ZeroInversion

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse the wire form "p/q" or "p" (sign on the numerator only)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Render lowest-terms "p/q", or "p" when the denominator is 1."""
    return str(value)


# ----------------------------------------------------------------------
# small number-theoretic helpers


@functools.lru_cache(maxsize=None)
def divisors(m: int) -> tuple[int, ...]:
    """Positive divisors of m, ascending."""
    if m < 1:
        raise ValueError("m must be positive")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i != m // i:
                large.append(m // i)
        i += 1
    return tuple(small + large[::-1])


@functools.lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@functools.lru_cache(maxsize=None)
def moebius(m: int) -> int:
    if m < 1:
        raise ValueError("m must be positive")
    result = 1
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


# ----------------------------------------------------------------------
# integer polynomials (dense, index = degree), used for cyclotomic tables


def _int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _int_poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide num by a monic den, requiring zero remainder."""
    r = list(num)
    db = len(den) - 1
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * den[j]
    if any(r[:db]):
        raise ArithmeticError("division was not exact")
    return q


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m (constant term first, monic, degree phi(m)).

    Computed by exact division of x^m - 1 by Phi_d over the proper
    divisors d of m; no floating point, no factoring of coefficients.
    """
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _int_poly_exact_div(poly, cyclotomic_polynomial(d))
    assert len(poly) - 1 == euler_phi(m)
    return tuple(poly)


@functools.lru_cache(maxsize=None)
def _monomial_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row e = coefficients of x^e reduced modulo Phi_m, for e in 0..m-1."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    for e in range(min(deg, m)):
        rows.append(tuple(1 if i == e else 0 for i in range(deg)))
    cur = list(rows[-1])
    for _ in range(deg, m):
        spill = cur[deg - 1]
        nxt = [0] + cur[: deg - 1]
        if spill:
            for i in range(deg):
                if phi[i]:
                    nxt[i] -= spill * phi[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


# ----------------------------------------------------------------------
# polynomials over Q (dense Fraction lists), only what inversion needs


def _trim(poly: list[Fraction]) -> None:
    while poly and not poly[-1]:
        poly.pop()


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for i, bi in enumerate(b):
        if bi:
            out[i] -= bi
    _trim(out)
    return out


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    _trim(out)
    return out


def _divmod_by_monic(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of a by a monic b with deg b >= 1."""
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    r = list(a)
    q = [_ZERO] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            q[i - db] = c
            for j in range(db):
                if b[j]:
                    r[i - db + j] -= c * b[j]
            r[i] = _ZERO
    rem = r[:db]
    _trim(rem)
    return q, rem


def _invert_mod(z: list[Fraction], phi: tuple[int, ...]) -> list[Fraction]:
    """u with u*z = 1 modulo phi (phi monic irreducible), deg z < deg phi.

    Half-extended Euclid.  Each remainder is rescaled to be monic, which
    keeps the division loop free of coefficient inversions and bounds the
    intermediate growth.
    """
    r1 = list(z)
    _trim(r1)
    if not r1:
        raise ZeroInversion("cannot invert zero")
    if len(r1) == 1:
        return [_ONE / r1[0]]
    inv = _ONE / r1[-1]
    r0 = [Fraction(c) for c in phi]
    r1 = [c * inv for c in r1]
    s0: list[Fraction] = []
    s1: list[Fraction] = [inv]
    while True:
        q, r = _divmod_by_monic(r0, r1)
        s = _poly_sub(s0, _poly_mul(q, s1))
        if not r:
            raise ZeroInversion("element shares a factor with the modulus")
        if len(r) == 1:
            c = r[0]
            return [x / c for x in s]
        inv = _ONE / r[-1]
        r = [c * inv for c in r]
        s = [c * inv for c in s]
        r0, r1, s0, s1 = r1, r, s1, s


# ----------------------------------------------------------------------
# real quadratic scalars a + b*sqrt(d), d in {2, 5}


_QUAD_RADICANDS = (2, 5)


@dataclass(frozen=True)
class QuadScalar:
    """Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    base: Fraction
    coeff: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand not in _QUAD_RADICANDS:
            raise ValueError(f"unsupported radicand {self.radicand}")
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    @classmethod
    def from_rational(cls, value: Fraction | int, radicand: int) -> "QuadScalar":
        return cls(Fraction(value), _ZERO, radicand)

    @classmethod
    def sqrt_of(cls, radicand: int) -> "QuadScalar":
        return cls(_ZERO, _ONE, radicand)

    def _coerce(self, other: object) -> "QuadScalar":
        if isinstance(other, QuadScalar):
            if other.radicand != self.radicand:
                raise FieldMismatch(
                    f"sqrt{self.radicand} and sqrt{other.radicand} do not mix"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar.from_rational(other, self.radicand)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self.base + other.base, self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "QuadScalar":
        return QuadScalar(-self.base, -self.coeff, self.radicand)

    def __sub__(self, other: object) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(self.base - other.base, self.coeff - other.coeff, self.radicand)

    def __rsub__(self, other: object) -> "QuadScalar":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "QuadScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadScalar(
            self.base * other.base + self.radicand * self.coeff * other.coeff,
            self.base * other.coeff + self.coeff * other.base,
            self.radicand,
        )

    __rmul__ = __mul__

    def invert(self) -> "QuadScalar":
        norm = self.base * self.base - self.radicand * self.coeff * self.coeff
        if not norm:
            if not self.base and not self.coeff:
                raise ZeroInversion("cannot invert zero")
            raise ArithmeticError("norm vanished for a nonzero element")
        return QuadScalar(self.base / norm, -self.coeff / norm, self.radicand)

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.base, -self.coeff, self.radicand)

    def is_rational(self) -> bool:
        return not self.coeff

    def to_rational(self) -> Fraction | None:
        return self.base if not self.coeff else None

    def is_zero(self) -> bool:
        return not self.base and not self.coeff

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadScalar):
            if other.radicand != self.radicand:
                return self.is_rational() and other.is_rational() and self.base == other.base
            return self.base == other.base and self.coeff == other.coeff
        if isinstance(other, (int, Fraction)):
            return not self.coeff and self.base == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.coeff:
            return hash(self.base)
        return hash((self.radicand, self.base, self.coeff))

    def __str__(self) -> str:
        root = f"sqrt{self.radicand}"
        if not self.coeff:
            return str(self.base)
        if self.coeff == 1:
            head = root
        elif self.coeff == -1:
            head = f"-{root}"
        else:
            head = f"{self.coeff}*{root}"
        if not self.base:
            return head
        sign = "-" if self.coeff < 0 else "+"
        mag = -self.coeff if self.coeff < 0 else self.coeff
        tail = root if mag == 1 else f"{mag}*{root}"
        return f"{self.base} {sign} {tail}"

    def __repr__(self) -> str:
        return f"QuadScalar({self.base!r}, {self.coeff!r}, {self.radicand})"


def quad_invert(value: QuadScalar) -> QuadScalar:
    return value.invert()


# ----------------------------------------------------------------------
# cyclotomic scalars


class CycloScalar:
    """Element of Q(zeta_m), zeta_m = exp(2*pi*i/m), as a residue mod Phi_m.

    ``coeffs`` has length phi(m) on the power basis.  Arithmetic between two
    CycloScalars requires equal conductors (FieldMismatch otherwise);
    rational constants coerce.  Change of field is explicit via ``embed``.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        deg = len(cyclotomic_polynomial(conductor)) - 1
        if len(coeffs) != deg:
            raise ValueError(
                f"conductor {conductor} needs {deg} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycloScalar is immutable")

    @classmethod
    def _make(cls, conductor: int, coeffs: list[Fraction]) -> "CycloScalar":
        self = object.__new__(cls)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        return self

    @classmethod
    def from_rational(cls, value: Fraction | int, conductor: int) -> "CycloScalar":
        deg = len(cyclotomic_polynomial(conductor)) - 1
        return cls._make(conductor, [Fraction(value)] + [_ZERO] * (deg - 1))

    @classmethod
    def zero(cls, conductor: int) -> "CycloScalar":
        return cls.from_rational(0, conductor)

    @classmethod
    def one(cls, conductor: int) -> "CycloScalar":
        return cls.from_rational(1, conductor)

    @classmethod
    def zeta_pow(cls, conductor: int, exponent: int = 1) -> "CycloScalar":
        """zeta_m raised to any integer exponent (reduced mod m, then mod Phi_m)."""
        row = _monomial_table(conductor)[exponent % conductor]
        return cls._make(conductor, [Fraction(c) for c in row])

    def _coerce(self, other: object) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.conductor != self.conductor:
                raise FieldMismatch(
                    f"conductors {self.conductor} and {other.conductor} do not mix"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(other, self.conductor)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "CycloScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar._make(
            self.conductor, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self) -> "CycloScalar":
        return CycloScalar._make(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other: object) -> "CycloScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycloScalar._make(
            self.conductor, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __rsub__(self, other: object) -> "CycloScalar":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "CycloScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        deg = len(a)
        m = self.conductor
        conv = [_ZERO] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        res = list(conv[:deg])
        if deg > 1:
            rows = _monomial_table(m)
            for e in range(deg, 2 * deg - 1):
                c = conv[e]
                if c:
                    row = rows[e % m]
                    for i, ri in enumerate(row):
                        if ri:
                            res[i] += c * ri
        return CycloScalar._make(m, res)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CycloScalar":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = CycloScalar.one(self.conductor)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "CycloScalar":
        phi = cyclotomic_polynomial(self.conductor)
        inv = _invert_mod(list(self.coeffs), phi)
        inv += [_ZERO] * (len(self.coeffs) - len(inv))
        return CycloScalar._make(self.conductor, inv)

    def galois(self, j: int) -> "CycloScalar":
        """Image under the automorphism zeta -> zeta^j, gcd(j, m) = 1."""
        m = self.conductor
        j %= m
        if gcd(j, m) != 1:
            raise ValueError(f"{j} is not invertible modulo {m}")
        rows = _monomial_table(m)
        deg = len(self.coeffs)
        res = [_ZERO] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * j) % m]
                for k, rk in enumerate(row):
                    if rk:
                        res[k] += c * rk
        return CycloScalar._make(m, res)

    def embed(self, conductor: int) -> "CycloScalar":
        """Image in Q(zeta_M) for a multiple M of the conductor (zeta_m = zeta_M^(M/m))."""
        m = self.conductor
        if conductor % m != 0:
            raise FieldMismatch(f"{m} does not divide {conductor}")
        if conductor == m:
            return self
        step = conductor // m
        rows = _monomial_table(conductor)
        deg = len(cyclotomic_polynomial(conductor)) - 1
        res = [_ZERO] * deg
        for i, c in enumerate(self.coeffs):
            if c:
                row = rows[(i * step) % conductor]
                for k, rk in enumerate(row):
                    if rk:
                        res[k] += c * rk
        return CycloScalar._make(conductor, res)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction | None:
        return self.coeffs[0] if self.is_rational() else None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloScalar):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            a, b = self.to_rational(), other.to_rational()
            return a is not None and a == b
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, QuadScalar):
            a, b = self.to_rational(), other.to_rational()
            return a is not None and a == b
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __str__(self) -> str:
        m = self.conductor
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            sym = f"z{m}" if i == 1 else f"z{m}^{i}"
            if c == 1:
                term = sym
            elif c == -1:
                term = f"-{sym}"
            else:
                term = f"{c}*{sym}"
            if parts and not term.startswith("-"):
                parts.append(f"+ {term}")
            elif parts:
                parts.append(f"- {term[1:]}")
            else:
                parts.append(term)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycloScalar({self.conductor}, {self.coeffs!r})"


def cyclo_invert(value: CycloScalar) -> CycloScalar:
    return value.invert()


def cyclo_to_rational(value: CycloScalar) -> Fraction | None:
    return value.to_rational()


def cyclo_trace(value: CycloScalar) -> Fraction:
    """Trace down to Q: sum of all Galois images, computed coefficientwise.

    Uses Tr(zeta_m^i) = mu(e) * phi(m)/phi(e) with e = m/gcd(i, m), so no
    automorphism images are materialized.
    """
    m = value.conductor
    deg = len(value.coeffs)
    total = _ZERO
    for i, c in enumerate(value.coeffs):
        if c:
            e = m // gcd(i, m)
            phi_e = euler_phi(e)
            assert deg % phi_e == 0
            total += c * moebius(e) * (deg // phi_e)
    return total


# ----------------------------------------------------------------------
# helpers shared by the group/contribution layers

Scalar = "Fraction | QuadScalar | CycloScalar"


def canonical_scalar(value):
    """Collapse a scalar to the smallest field that contains it.

    Rational-valued QuadScalar/CycloScalar become plain Fractions; anything
    already rational or genuinely irrational is returned unchanged.
    """
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (QuadScalar, CycloScalar)):
        q = value.to_rational()
        return q if q is not None else value
    return value


def scalar_key(value) -> tuple:
    """Deterministic, totally ordered sort key across all scalar kinds."""
    value = canonical_scalar(value)
    if isinstance(value, Fraction):
        return (0, value.numerator, value.denominator)
    if isinstance(value, QuadScalar):
        return (
            1,
            value.radicand,
            value.base.numerator,
            value.base.denominator,
            value.coeff.numerator,
            value.coeff.denominator,
        )
    if isinstance(value, CycloScalar):
        return (2, value.conductor) + tuple(
            part for c in value.coeffs for part in (c.numerator, c.denominator)
        )
    raise TypeError(f"not a scalar: {value!r}")


def scalar_str(value) -> str:
    return str(canonical_scalar(value))
