"""Finite subgroups of SU(2): unit quaternions and presented words.

Two exact element representations coexist:

``Quaternion``
    x + y*i + z*j + w*k with components all Fraction or all QuadScalar.
    A unit quaternion embeds in SU(2) as [[x+y*i, z+w*i], [-z+w*i, x-y*i]],
    so its matrix trace is 2x and its determinant is the quaternion norm.
    Used for the three exceptional groups (binary tetrahedral, binary
    octahedral, binary icosahedral).

``Word``
    Normal form a^e or x*a^e in the cyclic group <a | a^n> or the binary
    dihedral (dicyclic) group <a, x | a^(2n) = 1, x^2 = a^n,
    x^-1 a x = a^-1>, with a acting as the rotation diag(zeta_2n,
    zeta_2n^-1) and x as [[0, 1], [-1, 0]].  Traces land in Q(zeta_2n).

Everything is immutable; groups are finite sets of hashable elements.
Conjugacy classes are computed by a plain orbit partition under
conjugation by the generators, and centralizer orders come from the
orbit-stabilizer relation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .ade import AdeLabel, resolution_data
from .errors import BoundExceeded, TraceTwoNonIdentity
from .scalars import CycloScalar, QuadScalar, canonical_scalar, scalar_key

_F0 = Fraction(0)
_F1 = Fraction(1)
_F2 = Fraction(2)


def _zero_like(sample):
    if isinstance(sample, QuadScalar):
        return QuadScalar.from_rational(0, sample.radicand)
    return _F0


def _one_like(sample):
    if isinstance(sample, QuadScalar):
        return QuadScalar.from_rational(1, sample.radicand)
    return _F1


@dataclass(frozen=True)
class Quaternion:
    """Exact quaternion x + y*i + z*j + w*k over Q or Q(sqrt(d))."""

    x: object
    y: object
    z: object
    w: object

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a, b, c, d = self.x, self.y, self.z, self.w
        p, q, r, s = other.x, other.y, other.z, other.w
        return Quaternion(
            a * p - b * q - c * r - d * s,
            a * q + b * p + c * s - d * r,
            a * r - b * s + c * p + d * q,
            a * s + b * r - c * q + d * p,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x, -self.y, -self.z, -self.w)

    def norm(self):
        return self.x * self.x + self.y * self.y + self.z * self.z + self.w * self.w

    def inverse(self) -> "Quaternion":
        norm = self.norm()
        if norm == 1:
            return self.conjugate()
        if isinstance(norm, QuadScalar):
            scale = norm.invert()
            return Quaternion(
                self.x * scale, -(self.y * scale), -(self.z * scale), -(self.w * scale)
            )
        return Quaternion(self.x / norm, -self.y / norm, -self.z / norm, -self.w / norm)

    def trace(self):
        return canonical_scalar(self.x + self.x)

    def is_identity(self) -> bool:
        return self.x == 1 and self.y == 0 and self.z == 0 and self.w == 0

    def identity(self) -> "Quaternion":
        one, zero = _one_like(self.x), _zero_like(self.x)
        return Quaternion(one, zero, zero, zero)

    def __str__(self) -> str:
        return f"({self.x}) + ({self.y})i + ({self.z})j + ({self.w})k"


@dataclass(frozen=True)
class Word:
    """Normal form a^exp (flip False) or x*a^exp (flip True)."""

    family: str
    n: int
    flip: bool
    exp: int

    def __post_init__(self) -> None:
        if self.family not in ("cyclic", "dicyclic"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family == "cyclic" and self.flip:
            raise ValueError("cyclic words have no x letter")
        object.__setattr__(self, "exp", self.exp % self._period())

    def _period(self) -> int:
        return self.n if self.family == "cyclic" else 2 * self.n

    def _check(self, other: "Word") -> None:
        if self.family != other.family or self.n != other.n:
            raise ValueError("words from different presentations do not multiply")

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        n = self.n
        if not self.flip and not other.flip:
            return Word(self.family, n, False, self.exp + other.exp)
        if not self.flip and other.flip:
            # a^i * (x a^j) = x a^(j-i)
            return Word(self.family, n, True, other.exp - self.exp)
        if self.flip and not other.flip:
            # (x a^i) * a^j = x a^(i+j)
            return Word(self.family, n, True, self.exp + other.exp)
        # (x a^i)(x a^j) = x^2 a^(j-i) = a^(n+j-i)
        return Word(self.family, n, False, self.n + other.exp - self.exp)

    def inverse(self) -> "Word":
        if not self.flip:
            return Word(self.family, self.n, False, -self.exp)
        # (x a^i)^-1 = a^-i x a^-n ... = x a^(i+n)
        return Word(self.family, self.n, True, self.exp + self.n)

    def trace(self):
        if self.flip:
            return _F0
        conductor = self._period()
        z = CycloScalar.zeta_pow(conductor, self.exp)
        return canonical_scalar(z + CycloScalar.zeta_pow(conductor, -self.exp))

    def is_identity(self) -> bool:
        return not self.flip and self.exp == 0

    def identity(self) -> "Word":
        return Word(self.family, self.n, False, 0)

    def __str__(self) -> str:
        if self.is_identity():
            return "1"
        power = "" if self.exp == 1 else f"^{self.exp}"
        body = f"a{power}" if self.exp else ""
        if self.flip:
            return f"x{'*' + body if body else ''}"
        return body


GroupElement = Union[Quaternion, Word]


def trace(element: GroupElement):
    """Exact SU(2) matrix trace, collapsed to the smallest containing field."""
    return element.trace()


def element_key(element: GroupElement) -> tuple:
    """Deterministic sort key usable across one group's elements."""
    if isinstance(element, Word):
        return (0, element.family, element.n, element.flip, element.exp)
    return (1,) + tuple(
        part for c in (element.x, element.y, element.z, element.w) for part in scalar_key(c)
    )


def generate_group(
    generators: Iterable[GroupElement], bound: int = 10000
) -> frozenset:
    """Multiplicative closure of the generators (breadth-first).

    Finite subgroups are closed under products alone, so no inverses are
    taken.  Raises BoundExceeded as soon as the closure grows past
    ``bound`` elements.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    identity = gens[0].identity()
    elements = {identity}
    frontier = [identity]
    while frontier:
        new: list[GroupElement] = []
        for g in frontier:
            for h in gens:
                product = g * h
                if product not in elements:
                    elements.add(product)
                    new.append(product)
                    if len(elements) > bound:
                        raise BoundExceeded(
                            f"closure exceeded {bound} elements"
                        )
        frontier = new
    return frozenset(elements)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: GroupElement
    size: int
    centralizer_order: int
    trace: object


@dataclass(frozen=True)
class FiniteSubgroup:
    label: AdeLabel | None
    order: int
    elements: tuple
    classes: tuple
    generators: tuple


def conjugacy_classes(
    elements, generators: Iterable[GroupElement] = ()
) -> tuple:
    """Orbit partition of a group's elements under conjugation by generators.

    Accepts a FiniteSubgroup (using its own generators) or any iterable of
    elements plus generators that generate the group.  Classes come back
    sorted by (size, trace, representative) and each class's centralizer
    order is derived from orbit-stabilizer; both the class equation and
    trace constancy along each orbit are verified.
    """
    if isinstance(elements, FiniteSubgroup):
        generators = elements.generators
        elements = elements.elements
    members = sorted(elements, key=element_key)
    order = len(members)
    gens = list(generators)
    gen_pairs = [(g, g.inverse()) for g in gens]
    seen: set = set()
    classes = []
    for start in members:
        if start in seen:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            e = queue.pop()
            for g, g_inv in gen_pairs:
                conj = g * e * g_inv
                if conj not in orbit:
                    orbit.add(conj)
                    queue.append(conj)
        seen |= orbit
        size = len(orbit)
        if order % size != 0:
            raise ArithmeticError("orbit size does not divide the group order")
        rep = min(orbit, key=element_key)
        rep_trace = rep.trace()
        for e in orbit:
            if e is not rep and e.trace() != rep_trace:
                raise ArithmeticError("trace is not constant on a conjugacy class")
        classes.append(
            ConjugacyClass(rep, size, order // size, rep_trace)
        )
    total = sum(c.size for c in classes)
    if total != order:
        raise ArithmeticError("class sizes do not sum to the group order")
    classes.sort(key=lambda c: (c.size, scalar_key(c.trace), element_key(c.representative)))
    return tuple(classes)


def _finite_subgroup(
    elements: Iterable[GroupElement],
    generators: Iterable[GroupElement],
    label: AdeLabel | None = None,
) -> FiniteSubgroup:
    members = tuple(sorted(elements, key=element_key))
    gens = tuple(generators)
    classes = conjugacy_classes(members, gens)
    identity_count = 0
    for g in members:
        if g.trace() == 2:
            if not g.is_identity():
                raise TraceTwoNonIdentity(f"non-identity element {g} has trace 2")
            identity_count += 1
    if identity_count != 1:
        raise ArithmeticError("group does not contain exactly one identity")
    return FiniteSubgroup(label, len(members), members, classes, gens)


def _binary_tetrahedral_generators() -> tuple:
    half = Fraction(1, 2)
    i = Quaternion(_F0, _F1, _F0, _F0)
    omega = Quaternion(half, half, half, half)
    return (i, omega)


def _binary_octahedral_generators() -> tuple:
    def lift(value: Fraction) -> QuadScalar:
        return QuadScalar.from_rational(value, 2)

    i = Quaternion(lift(_F0), lift(_F1), lift(_F0), lift(_F0))
    omega = Quaternion(*(lift(Fraction(1, 2)) for _ in range(4)))
    # (1 + i) / sqrt(2) = sqrt(2)/2 * (1 + i)
    s = QuadScalar(_F0, Fraction(1, 2), 2)
    extra = Quaternion(s, s, lift(_F0), lift(_F0))
    return (i, omega, extra)


def _binary_icosahedral_generators() -> tuple:
    def lift(value: Fraction) -> QuadScalar:
        return QuadScalar.from_rational(value, 5)

    omega = Quaternion(*(lift(Fraction(1, 2)) for _ in range(4)))
    # (1/phi + i + phi*j) / 2 with phi the golden ratio
    psi = Quaternion(
        QuadScalar(Fraction(-1, 4), Fraction(1, 4), 5),
        lift(Fraction(1, 2)),
        QuadScalar(Fraction(1, 4), Fraction(1, 4), 5),
        lift(_F0),
    )
    return (omega, psi)


@functools.lru_cache(maxsize=None)
def build_ade_group(label: AdeLabel) -> FiniteSubgroup:
    """Construct the finite subgroup of SU(2) named by an ADE label.

    Type A and D groups are enumerated directly from their normal forms
    (the closure of the same generators agrees; tests verify).  The E
    groups are closed from explicit quaternion generators, and the
    resulting order is checked against the catalog.
    """
    n = label.parameter
    if label.kind == "A":
        elements = [Word("cyclic", n, False, k) for k in range(n)]
        gens = (Word("cyclic", n, False, 1 if n > 1 else 0),)
        group = _finite_subgroup(elements, gens, label)
    elif label.kind == "D":
        elements = [Word("dicyclic", n, flip, k) for flip in (False, True) for k in range(2 * n)]
        gens = (Word("dicyclic", n, False, 1), Word("dicyclic", n, True, 0))
        group = _finite_subgroup(elements, gens, label)
    else:
        gens = {
            6: _binary_tetrahedral_generators,
            7: _binary_octahedral_generators,
            8: _binary_icosahedral_generators,
        }[n]()
        group = _finite_subgroup(generate_group(gens), gens, label)
    expected = resolution_data(label).group_order
    if group.order != expected:
        raise ArithmeticError(
            f"{label} built with order {group.order}, catalog says {expected}"
        )
    return group
