"""Orbifold Chern numbers c1^2 and c2, and the 3c2 >= c1^2 verdict.

Two kinds of surface description are supported, mirroring the two ways an
orbifold surface is usually presented:

* an SNC pair: a smooth coarse surface with a simple-normal-crossing
  fractional boundary sum of (1 - 1/r_i) D_i, described purely by
  intersection numbers;
* a surface with isolated ADE quotient points, described by chi(O_X),
  c1^2 of the pulled-back canonical class, and the list of point labels.

c2 always means the orbifold Euler characteristic (Gauss-Bonnet); for the
isolated-point case it is computed from the Riemann-Roch identity
c2 = 12 chi(O) - c1^2 - sum over points of (chi(E_i) - 1/|G_i|), whose
per-point terms are twelve times the Todd contributions of the
``contributions`` module (tested to agree exactly).

Whether the inequality applies at all depends on the canonical class
being nef, which no formula here can see; it is a user-asserted flag and
verdicts report NotApplicable when it is absent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .ade import AdeLabel, resolution_data
from .errors import DescriptionError

_F0 = Fraction(0)


class Verdict(str, enum.Enum):
    HOLDS = "Holds"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    FAILS = "Fails"
    NOT_APPLICABLE = "NotApplicable"

    def __str__(self) -> str:  # render the bare value, not Verdict.X
        return self.value


@dataclass(frozen=True)
class DivisorEntry:
    """One boundary curve: ramification r >= 2 and its intersection data."""

    ramification: int
    chi_divisor: int
    k_dot: Fraction
    self_int: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.ramification, int) or self.ramification < 2:
            raise DescriptionError("ramification must be >= 2")
        object.__setattr__(self, "k_dot", Fraction(self.k_dot))
        object.__setattr__(self, "self_int", Fraction(self.self_int))

    @property
    def weight(self) -> Fraction:
        return 1 - Fraction(1, self.ramification)


@dataclass(frozen=True)
class Crossing:
    """count transverse intersection points of divisors i and j (i < j)."""

    i: int
    j: int
    count: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0 or self.i >= self.j:
            raise DescriptionError("crossing indices must satisfy 0 <= i < j")
        if self.count < 0:
            raise DescriptionError("crossing count must be >= 0")


@dataclass(frozen=True)
class SncPairDescription:
    chi_coarse: int
    k_squared: Fraction
    divisors: tuple
    crossings: tuple
    canonical_nef_asserted: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "k_squared", Fraction(self.k_squared))
        object.__setattr__(self, "divisors", tuple(self.divisors))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        for crossing in self.crossings:
            if crossing.j >= len(self.divisors):
                raise DescriptionError(
                    f"crossing ({crossing.i}, {crossing.j}) names a missing divisor"
                )


@dataclass(frozen=True)
class IsolatedPointsDescription:
    chi_structure_sheaf: int
    c1_squared: Fraction
    points: tuple
    canonical_nef_asserted: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1_squared", Fraction(self.c1_squared))
        object.__setattr__(self, "points", tuple(self.points))


@dataclass(frozen=True)
class InvariantReport:
    c1_squared: Fraction
    c2: Fraction
    margin: Fraction
    verdict: Verdict
    per_point: tuple
    notes: str


def pair_c1_squared(desc: SncPairDescription) -> Fraction:
    """(K + sum a_i D_i)^2 with a_i = 1 - 1/r_i, from intersection numbers."""
    total = desc.k_squared
    for entry in desc.divisors:
        a = entry.weight
        total += 2 * a * entry.k_dot + a * a * entry.self_int
    for crossing in desc.crossings:
        a_i = desc.divisors[crossing.i].weight
        a_j = desc.divisors[crossing.j].weight
        total += 2 * a_i * a_j * crossing.count
    return total


def pair_orbifold_euler(desc: SncPairDescription) -> Fraction:
    """Orbifold Euler characteristic of the pair.

    Each open boundary curve D_i minus its crossing points loses weight
    1 - 1/r_i, and each transverse crossing counts 1/(r_i r_j) instead
    of 1.  chi(D_i deprived of crossings) may well be <= 0; that is not
    an error.
    """
    total = Fraction(desc.chi_coarse)
    crossings_on: dict[int, int] = {}
    for crossing in desc.crossings:
        crossings_on[crossing.i] = crossings_on.get(crossing.i, 0) + crossing.count
        crossings_on[crossing.j] = crossings_on.get(crossing.j, 0) + crossing.count
    for index, entry in enumerate(desc.divisors):
        chi_open = entry.chi_divisor - crossings_on.get(index, 0)
        total -= entry.weight * chi_open
    for crossing in desc.crossings:
        r_i = desc.divisors[crossing.i].ramification
        r_j = desc.divisors[crossing.j].ramification
        total += crossing.count * (Fraction(1, r_i * r_j) - 1)
    return total


def point_term(label: AdeLabel) -> Fraction:
    """chi(E) - 1/|G| for one ADE point (twelve times its Todd contribution)."""
    data = resolution_data(label)
    return data.chi_exceptional - Fraction(1, data.group_order)


def codim2_c2(desc: IsolatedPointsDescription) -> Fraction:
    """c2 = 12 chi(O) - c1^2 - sum of per-point terms."""
    total = 12 * Fraction(desc.chi_structure_sheaf) - desc.c1_squared
    for label in desc.points:
        total -= point_term(label)
    return total


def bmy_verdict(
    c1_squared: Fraction, c2: Fraction, nef_asserted: bool
) -> InvariantReport:
    """Margin 3c2 - c1^2 and its verdict (NotApplicable unless nef is asserted)."""
    margin = 3 * c2 - c1_squared
    if not nef_asserted:
        verdict = Verdict.NOT_APPLICABLE
    elif margin > 0:
        verdict = Verdict.HOLDS
    elif margin == 0:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.FAILS
    return InvariantReport(c1_squared, c2, margin, verdict, (), "")


def snc_report(desc: SncPairDescription) -> InvariantReport:
    report = bmy_verdict(
        pair_c1_squared(desc), pair_orbifold_euler(desc), desc.canonical_nef_asserted
    )
    return replace(
        report,
        notes="c2 is the orbifold Euler characteristic (Gauss-Bonnet identification)",
    )


def isolated_points_report(desc: IsolatedPointsDescription) -> InvariantReport:
    report = bmy_verdict(
        desc.c1_squared, codim2_c2(desc), desc.canonical_nef_asserted
    )
    per_point = tuple((label, point_term(label)) for label in desc.points)
    return replace(
        report,
        per_point=per_point,
        notes="c2 from 12*chi(O) - c1^2 - sum of point terms",
    )


def codim2_equivalence_check(desc: IsolatedPointsDescription) -> bool:
    """Compare 3c2 >= c1^2 with its chi(O) restatement; they must agree.

    Route one computes c2 and tests 3c2 - c1^2 >= 0.  Route two tests
    12 chi(O) >= (4/3) c1^2 + sum of point terms directly.  Returns True
    iff both give the same truth value (algebraically they always do;
    this is the property fuzz tests pin down).
    """
    route_one = 3 * codim2_c2(desc) - desc.c1_squared >= 0
    rhs = Fraction(4, 3) * desc.c1_squared + sum(
        (point_term(label) for label in desc.points), _F0
    )
    route_two = 12 * Fraction(desc.chi_structure_sheaf) >= rhs
    return route_one == route_two


def gerbe_scale(report: InvariantReport, gerbe_order: int) -> InvariantReport:
    """Scale every integral by 1/gerbe_order (a trivially-stabilized cover).

    Positive scaling preserves the margin's sign, so the verdict is
    copied unchanged.
    """
    if not isinstance(gerbe_order, int) or gerbe_order < 1:
        raise ValueError("gerbe order must be a positive integer")
    if gerbe_order == 1:
        return report
    scale = Fraction(1, gerbe_order)
    return replace(
        report,
        c1_squared=report.c1_squared * scale,
        c2=report.c2 * scale,
        margin=report.margin * scale,
        per_point=tuple((label, term * scale) for label, term in report.per_point),
    )
