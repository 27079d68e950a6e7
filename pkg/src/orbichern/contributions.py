"""Exact twisted-sector contribution of an ADE singularity.

For a finite subgroup G of SU(2) acting on C^2, each nontrivial conjugacy
class [g] contributes 1/(|C(g)| * (2 - tr g)) and the total equals
(chi(E) - 1/|G|)/12 where chi(E) is the Euler number of the exceptional
fiber of the minimal resolution.  Three routes to the same number live
here and are kept separate on purpose:

* ``class_sum_contribution``: brute force over conjugacy classes, weights
  from centralizer orders.
* ``element_sum_contribution``: brute force over raw elements with
  multiplicity, weight 1/|G| (validates the conjugacy bookkeeping).
* ``closed_form_contribution``: the catalog formula (chi - 1/|G|)/12.

Class terms with irrational traces are summed over Galois orbits, where
they collapse to rationals: conjugate pairs for quadratic traces, and for
rotation words the sum over primitive residues j mod d of
1/(2 - zeta_d^j - zeta_d^-j), written S(d) below.  S(d) is evaluated as
the field trace of a single cached inverse, so one exact inversion per
conductor serves every group and every identity check.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ade import AdeLabel, resolution_data
from .errors import IdentityFailure, NonRationalTotal, TraceTwoNonIdentity
from .groups import FiniteSubgroup, Word, build_ade_group, element_key
from .scalars import (
    CycloScalar,
    QuadScalar,
    cyclo_trace,
    divisors,
    euler_phi,
    scalar_key,
    scalar_str,
)

_F0 = Fraction(0)
_F1 = Fraction(1)


@functools.lru_cache(maxsize=None)
def conjugate_pair_inverse(d: int) -> CycloScalar:
    """1/(2 - zeta_d - zeta_d^(-1)) as an element of Q(zeta_d), d >= 2."""
    if d < 2:
        raise ValueError("need d >= 2 so that the denominator is nonzero")
    z = 2 - CycloScalar.zeta_pow(d, 1) - CycloScalar.zeta_pow(d, -1)
    return z.invert()


@functools.lru_cache(maxsize=None)
def primitive_orbit_sum(d: int) -> Fraction:
    """S(d) = sum over 1 <= j < d, gcd(j, d) = 1, of 1/(2 - zeta_d^j - zeta_d^-j).

    Equal to the field trace of ``conjugate_pair_inverse(d)`` because the
    Galois group permutes the summands simply transitively.
    """
    return cyclo_trace(conjugate_pair_inverse(d))


def closed_form_contribution(label: AdeLabel) -> Fraction:
    """(chi(E) - 1/|G|)/12 from the resolution catalog."""
    data = resolution_data(label)
    return (data.chi_exceptional - Fraction(1, data.group_order)) / 12


# ----------------------------------------------------------------------
# brute force over conjugacy classes


def _primitive_residues(d: int) -> list[int]:
    return [j for j in range(1, d) if gcd(j, d) == 1]


def _rotation_conductor_and_residue(word: Word) -> tuple[int, int]:
    """Order d of the rotation and its primitive residue j (trace is
    zeta_d^j + zeta_d^-j)."""
    m = word.n if word.family == "cyclic" else 2 * word.n
    k = word.exp % m
    d = m // gcd(k, m)
    return d, (k // (m // d)) % d


def _literal_orbit_part(d: int, weighted_residues: list[tuple[int, Fraction]]) -> Fraction:
    """Sum weights * 1/(2 - zeta_d^j - zeta_d^-j) literally, in Q(zeta_d)."""
    base = conjugate_pair_inverse(d)
    total = CycloScalar.zero(d)
    for j, weight in weighted_residues:
        total = total + weight * base.galois(j)
    value = total.to_rational()
    if value is None:
        raise NonRationalTotal(
            f"residue multiset mod {d} did not collapse to a rational"
        )
    return value


def _class_rows(group: FiniteSubgroup) -> list[tuple[tuple, str, Fraction]]:
    """One rational row per Galois orbit of nontrivial classes.

    Returns (sort key, description, value) triples; the sort key is the
    class-table position of the orbit's first class.
    """
    rows: list[tuple[tuple, str, Fraction]] = []
    quad_groups: dict[tuple, list] = {}
    cyclo_buckets: dict[tuple, list] = {}

    def class_pos(c) -> tuple:
        return (c.size, scalar_key(c.trace), element_key(c.representative))

    for c in group.classes:
        if c.representative.is_identity():
            continue
        t = c.trace
        if t == 2:
            raise TraceTwoNonIdentity(
                f"nontrivial class of {c.representative} has trace 2"
            )
        weight = Fraction(1, c.centralizer_order)
        if isinstance(t, Fraction):
            desc = (
                f"class of {c.representative} "
                f"(size {c.size}, centralizer {c.centralizer_order}, trace {t})"
            )
            rows.append((class_pos(c), desc, weight / (2 - t)))
        elif isinstance(t, QuadScalar):
            key = (
                t.radicand,
                t.base,
                abs(t.coeff),
                c.centralizer_order,
            )
            quad_groups.setdefault(key, []).append(c)
        else:
            d, j = _rotation_conductor_and_residue(c.representative)
            cyclo_buckets.setdefault((d, c.centralizer_order), []).append((c, j))

    for key in sorted(quad_groups, key=lambda k: scalar_key(QuadScalar(k[1], k[2], k[0])) + (k[3],)):
        members = quad_groups[key]
        if len(members) != 2 or members[0].trace == members[1].trace:
            raise NonRationalTotal(
                "quadratic traces did not pair into Galois-conjugate classes"
            )
        a, b = sorted(members, key=class_pos)
        weight = Fraction(1, key[3])
        total = (2 - a.trace).invert() + (2 - b.trace).invert()
        value = total.to_rational()
        if value is None:
            raise NonRationalTotal("conjugate pair of class terms was not rational")
        desc = (
            f"classes of {a.representative} and {b.representative} "
            f"(sizes {a.size}+{b.size}, traces {scalar_str(a.trace)}, {scalar_str(b.trace)})"
        )
        rows.append((class_pos(a), desc, weight * value))

    for d, centralizer in sorted(cyclo_buckets):
        members = cyclo_buckets[(d, centralizer)]
        weight = Fraction(1, centralizer)
        residues = sorted(j for _, j in members)
        primitive = _primitive_residues(d)
        mirrored = sorted(set(residues) | {(d - j) % d for j in residues})
        if residues == primitive:
            part = primitive_orbit_sum(d)
        elif (
            len(residues) == len(set(residues)) == len(primitive) // 2
            and mirrored == primitive
        ):
            part = primitive_orbit_sum(d) / 2
        else:
            part = _literal_orbit_part(d, [(j, _F1) for j in residues])
        sizes = {c.size for c, _ in members}
        size_note = f"size {sizes.pop()}" if len(sizes) == 1 else "mixed sizes"
        desc = (
            f"{len(members)} classes of order-{d} rotations "
            f"({size_note}, centralizer {centralizer})"
        )
        first = min(class_pos(c) for c, _ in members)
        rows.append((first, desc, weight * part))

    rows.sort(key=lambda row: row[0])
    return rows


def class_sum_contribution(group: FiniteSubgroup) -> Fraction:
    """Sum of 1/(|C(g)| (2 - tr g)) over nontrivial conjugacy classes."""
    return sum((value for _, _, value in _class_rows(group)), _F0)


def element_sum_contribution(group: FiniteSubgroup) -> Fraction:
    """(1/|G|) sum of 1/(2 - tr g) over nontrivial elements.

    Never consults class sizes or centralizers; agreement with
    ``class_sum_contribution`` validates the conjugacy bookkeeping.
    """
    total = _F0
    quad_total: QuadScalar | None = None
    rotation_counts: dict[int, dict[int, int]] = {}
    for g in group.elements:
        if g.is_identity():
            continue
        t = g.trace()
        if t == 2:
            raise TraceTwoNonIdentity(f"non-identity element {g} has trace 2")
        if isinstance(t, Fraction):
            total += _F1 / (2 - t)
        elif isinstance(t, QuadScalar):
            term = (2 - t).invert()
            quad_total = term if quad_total is None else quad_total + term
        else:
            d, j = _rotation_conductor_and_residue(g)
            bucket = rotation_counts.setdefault(d, {})
            bucket[j] = bucket.get(j, 0) + 1
    for d in sorted(rotation_counts):
        bucket = rotation_counts[d]
        primitive = _primitive_residues(d)
        counts = set(bucket.values())
        if sorted(bucket) == primitive and len(counts) == 1:
            total += counts.pop() * primitive_orbit_sum(d)
        else:
            total += _literal_orbit_part(
                d, [(j, Fraction(count)) for j, count in sorted(bucket.items())]
            )
    if quad_total is not None:
        value = quad_total.to_rational()
        if value is None:
            raise NonRationalTotal("element terms with quadratic traces did not collapse")
        total += value
    return total / group.order


# ----------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ContributionReport:
    label: AdeLabel
    group_order: int
    class_sum: Fraction
    closed_form: Fraction
    per_class_terms: tuple


def build_contribution_report(group: FiniteSubgroup) -> ContributionReport:
    """Brute-force value, catalog value, and the per-orbit term table.

    The two values must agree exactly; a mismatch raises IdentityFailure
    rather than producing a report.
    """
    if group.label is None:
        raise ValueError("report needs a labeled group")
    rows = _class_rows(group)
    class_sum = sum((value for _, _, value in rows), _F0)
    closed = closed_form_contribution(group.label)
    if class_sum != closed:
        raise IdentityFailure(
            f"{group.label}: class sum {class_sum} != closed form {closed}"
        )
    return ContributionReport(
        group.label,
        group.order,
        class_sum,
        closed,
        tuple((desc, value) for _, desc, value in rows),
    )


def contribution_for_label(label: AdeLabel) -> Fraction:
    """Verified contribution for a label (brute force checked against catalog)."""
    return build_contribution_report(build_ade_group(label)).class_sum


# ----------------------------------------------------------------------
# identity checks (exact, raising on any mismatch)


def verify_type_a_identity(n: int) -> Fraction:
    """Check sum_{k=1}^{n-1} (1/n) / (2 - zeta_n^k - zeta_n^-k) = (n^2-1)/(12n).

    The left side regroups over divisors d | n, d > 1 as (1/n) sum S(d).
    Returns the common value; raises IdentityFailure if the two sides
    differ.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    lhs = sum((primitive_orbit_sum(d) for d in divisors(n)[1:]), _F0) / n
    rhs = Fraction(n * n - 1, 12 * n)
    if lhs != rhs:
        raise IdentityFailure(f"rotation sum for n={n}: {lhs} != {rhs}")
    return lhs


def verify_type_d_half_angle_identity(n: int) -> Fraction:
    """Check sum_{k=1}^{n-1} 1/(2 - zeta_2n^k - zeta_2n^-k) = (n^2-1)/6.

    The summands for k and 2n-k coincide, so the left side is half the
    full sum over k = 1..2n-1 minus the k = n point, i.e.
    (1/2) sum of S(d) over divisors d of 2n with d >= 3.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    lhs = sum((primitive_orbit_sum(d) for d in divisors(2 * n) if d >= 3), _F0) / 2
    rhs = Fraction(n * n - 1, 6)
    if lhs != rhs:
        raise IdentityFailure(f"half-angle sum for n={n}: {lhs} != {rhs}")
    return lhs


def assemble_type_d_contribution(n: int) -> Fraction:
    """Assemble the binary dihedral contribution from its class structure.

    The -1 class gives 1/(16n), the two size-n reflection-like classes
    give 1/4 together, and the rotation pairs give the verified
    half-angle sum weighted by 1/(2n).  The assembled value must equal
    the catalog closed form for D_{n+2}.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    value = verify_type_d_half_angle_identity(n) / (2 * n) + Fraction(1, 16 * n) + Fraction(1, 4)
    expected = closed_form_contribution(AdeLabel("D", n))
    if value != expected:
        raise IdentityFailure(f"assembled D value for n={n}: {value} != {expected}")
    return value
