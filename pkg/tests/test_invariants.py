"""Chern number and BMY verdict tests."""

import random
from fractions import Fraction

import pytest

from orbichern.ade import AdeLabel
from orbichern.contributions import class_sum_contribution
from orbichern.errors import DescriptionError
from orbichern.groups import build_ade_group
from orbichern.invariants import (
    Crossing,
    DivisorEntry,
    IsolatedPointsDescription,
    SncPairDescription,
    Verdict,
    bmy_verdict,
    codim2_c2,
    codim2_equivalence_check,
    gerbe_scale,
    isolated_points_report,
    pair_c1_squared,
    pair_orbifold_euler,
    point_term,
    snc_report,
)

F = Fraction


def triangle_pair(nef=False) -> SncPairDescription:
    """Del-Pezzo-like plane with a triangle of three lines, all r = 2."""
    line = DivisorEntry(ramification=2, chi_divisor=2, k_dot=F(-3), self_int=F(1))
    return SncPairDescription(
        chi_coarse=3,
        k_squared=F(9),
        divisors=(line, line, line),
        crossings=(Crossing(0, 1, 1), Crossing(0, 2, 1), Crossing(1, 2, 1)),
        canonical_nef_asserted=nef,
    )


def kummer_points(nef=True) -> IsolatedPointsDescription:
    return IsolatedPointsDescription(
        chi_structure_sheaf=2,
        c1_squared=F(0),
        points=tuple(AdeLabel.from_string("A1") for _ in range(16)),
        canonical_nef_asserted=nef,
    )


# ----------------------------------------------------------------------
# c1^2 for simple-normal-crossing pairs


def test_c1_squared_with_no_divisors_is_k_squared():
    desc = SncPairDescription(2, F(5), (), (), True)
    assert pair_c1_squared(desc) == 5
    assert pair_orbifold_euler(desc) == 2


def test_c1_squared_single_divisor_example():
    entry = DivisorEntry(ramification=3, chi_divisor=2, k_dot=F(2), self_int=F(4))
    desc = SncPairDescription(4, F(8), (entry,), (), True)
    assert pair_c1_squared(desc) == F(112, 9)


def test_triangle_pair_values():
    desc = triangle_pair()
    assert pair_c1_squared(desc) == F(9, 4)
    assert pair_orbifold_euler(desc) == F(3, 4)


def test_orbifold_euler_single_smooth_divisor():
    for r in (2, 3, 7):
        entry = DivisorEntry(ramification=r, chi_divisor=2, k_dot=F(0), self_int=F(-2))
        desc = SncPairDescription(4, F(0), (entry,), (), True)
        assert pair_orbifold_euler(desc) == 4 - (1 - F(1, r)) * 2


def test_crossings_deplete_open_curves():
    # two rational curves meeting twice: each open curve has chi 0
    a = DivisorEntry(ramification=2, chi_divisor=2, k_dot=F(0), self_int=F(0))
    b = DivisorEntry(ramification=4, chi_divisor=2, k_dot=F(0), self_int=F(0))
    desc = SncPairDescription(4, F(0), (a, b), (Crossing(0, 1, 2),), False)
    expected = 4 - F(1, 2) * 0 - F(3, 4) * 0 + 2 * (F(1, 8) - 1)
    assert pair_orbifold_euler(desc) == expected


def test_divisor_reordering_does_not_change_invariants():
    base = triangle_pair()
    entries = list(base.divisors)
    entries[0] = DivisorEntry(5, 2, F(-3), F(1))  # make them distinguishable
    desc = SncPairDescription(3, F(9), tuple(entries), base.crossings, False)
    # move divisor 0 to the end; crossings relabel through the permutation
    perm = (2, 0, 1)  # old index -> new index
    reordered_divisors = tuple(entries[old] for old in (1, 2, 0))
    relabeled = tuple(
        Crossing(min(perm[c.i], perm[c.j]), max(perm[c.i], perm[c.j]), c.count)
        for c in base.crossings
    )
    shuffled = SncPairDescription(3, F(9), reordered_divisors, relabeled, False)
    assert pair_c1_squared(shuffled) == pair_c1_squared(desc)
    assert pair_orbifold_euler(shuffled) == pair_orbifold_euler(desc)


def test_description_validation():
    with pytest.raises(DescriptionError):
        DivisorEntry(ramification=1, chi_divisor=2, k_dot=F(0), self_int=F(0))
    with pytest.raises(DescriptionError):
        Crossing(1, 1, 1)
    with pytest.raises(DescriptionError):
        Crossing(2, 1, 1)
    with pytest.raises(DescriptionError):
        Crossing(0, 1, -1)
    entry = DivisorEntry(2, 2, F(0), F(0))
    with pytest.raises(DescriptionError):
        SncPairDescription(4, F(0), (entry,), (Crossing(0, 1, 1),), True)


# ----------------------------------------------------------------------
# c2 from isolated points


def test_c2_with_no_points_is_noether():
    desc = IsolatedPointsDescription(2, F(0), (), True)
    assert codim2_c2(desc) == 24  # K3 shape


def test_kummer_c2_vanishes():
    assert codim2_c2(kummer_points()) == 0


def test_c2_with_one_exceptional_point():
    desc = IsolatedPointsDescription(
        1, F(1), (AdeLabel("E", 6),), True
    )
    assert codim2_c2(desc) == F(97, 24)


def test_point_term_values():
    assert point_term(AdeLabel("A", 1)) == 0  # trivial group: no defect
    assert point_term(AdeLabel.from_string("A1")) == F(3, 2)
    assert point_term(AdeLabel("E", 6)) == F(167, 24)
    assert point_term(AdeLabel.from_string("D4")) == 5 - F(1, 8)


def test_point_term_is_twelve_times_brute_force():
    for label in (AdeLabel("A", 4), AdeLabel("A", 9), AdeLabel("D", 3),
                  AdeLabel("E", 7), AdeLabel("E", 8)):
        group = build_ade_group(label)
        assert point_term(label) == 12 * class_sum_contribution(group)


# ----------------------------------------------------------------------
# verdicts


def test_verdict_examples():
    equality = bmy_verdict(F(0), F(0), True)
    assert equality.verdict is Verdict.HOLDS_WITH_EQUALITY
    assert equality.margin == 0

    silent = bmy_verdict(F(9, 4), F(3, 4), False)
    assert silent.verdict is Verdict.NOT_APPLICABLE
    assert silent.margin == 0

    holds = bmy_verdict(F(2), F(1), True)
    assert holds.verdict is Verdict.HOLDS
    assert holds.margin == 1

    fails = bmy_verdict(F(9), F(0), True)
    assert fails.verdict is Verdict.FAILS
    assert fails.margin == -9


def test_verdict_string_values():
    assert str(Verdict.HOLDS) == "Holds"
    assert str(Verdict.HOLDS_WITH_EQUALITY) == "HoldsWithEquality"
    assert str(Verdict.FAILS) == "Fails"
    assert str(Verdict.NOT_APPLICABLE) == "NotApplicable"


def test_snc_report_carries_orbifold_euler_as_c2():
    report = snc_report(triangle_pair())
    assert report.c1_squared == F(9, 4)
    assert report.c2 == F(3, 4)
    assert report.margin == 0
    assert report.verdict is Verdict.NOT_APPLICABLE
    nef = snc_report(triangle_pair(nef=True))
    assert nef.verdict is Verdict.HOLDS_WITH_EQUALITY


def test_isolated_points_report_lists_terms():
    report = isolated_points_report(kummer_points())
    assert report.c2 == 0
    assert report.margin == 0
    assert report.verdict is Verdict.HOLDS_WITH_EQUALITY
    assert len(report.per_point) == 16
    assert all(term == F(3, 2) for _, term in report.per_point)


# ----------------------------------------------------------------------
# the two routes to the inequality


def test_equivalence_on_examples():
    assert codim2_equivalence_check(kummer_points()) is True
    failing = IsolatedPointsDescription(1, F(9), (AdeLabel("A", 1),), True)
    assert codim2_equivalence_check(failing) is True  # routes agree even on Fails


def test_equivalence_fuzz():
    rng = random.Random(1729)
    for _ in range(200):
        chi = rng.randint(-4, 6)
        c1sq = F(rng.randint(-60, 60), rng.randint(1, 12))
        points = []
        for _ in range(rng.randint(0, 6)):
            kind = rng.choice(["A", "D", "E"])
            if kind == "A":
                points.append(AdeLabel("A", rng.randint(1, 40)))
            elif kind == "D":
                points.append(AdeLabel("D", rng.randint(2, 25)))
            else:
                points.append(AdeLabel("E", rng.choice([6, 7, 8])))
        desc = IsolatedPointsDescription(chi, c1sq, tuple(points), True)
        assert codim2_equivalence_check(desc) is True


# ----------------------------------------------------------------------
# gerbe scaling


def test_gerbe_order_one_is_identity():
    report = isolated_points_report(kummer_points())
    assert gerbe_scale(report, 1) is report


def test_gerbe_scaling_examples():
    holds = bmy_verdict(F(2), F(1), True)  # margin 1
    scaled = gerbe_scale(holds, 2)
    assert scaled.margin == F(1, 2)
    assert scaled.c1_squared == 1
    assert scaled.c2 == F(1, 2)
    assert scaled.verdict is Verdict.HOLDS

    equality = bmy_verdict(F(3), F(1), True)  # margin 0
    scaled = gerbe_scale(equality, 5)
    assert scaled.margin == 0
    assert scaled.verdict is Verdict.HOLDS_WITH_EQUALITY


def test_gerbe_scaling_rejects_bad_orders():
    report = bmy_verdict(F(0), F(0), True)
    for bad in (0, -1, 2.0, "2"):
        with pytest.raises(ValueError):
            gerbe_scale(report, bad)


def test_gerbe_scaling_preserves_verdict_fuzz():
    rng = random.Random(424242)
    for _ in range(60):
        c1sq = F(rng.randint(-40, 40), rng.randint(1, 8))
        c2 = F(rng.randint(-40, 40), rng.randint(1, 8))
        report = bmy_verdict(c1sq, c2, rng.choice([True, False]))
        for order in range(1, 8):
            scaled = gerbe_scale(report, order)
            assert scaled.verdict is report.verdict
            assert scaled.margin * order == report.margin
            assert scaled.c1_squared * order == report.c1_squared
            assert scaled.c2 * order == report.c2
            assert 3 * scaled.c2 - scaled.c1_squared == scaled.margin
