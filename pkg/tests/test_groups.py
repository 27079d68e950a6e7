"""Finite SU(2) subgroup tests.

A tiny complex-matrix oracle (floats, tests only) independently realizes
both element representations: words map to diag/off-diag 2x2 matrices,
quaternions map through the standard embedding.  Every exact group-law
computation is cross-checked against numpy-free float arithmetic.
"""

import cmath
import math
import random
from fractions import Fraction

import pytest

from orbichern.ade import AdeLabel
from orbichern.errors import BoundExceeded, InvalidLabel, TraceTwoNonIdentity
from orbichern.groups import (
    ConjugacyClass,
    FiniteSubgroup,
    Quaternion,
    Word,
    _binary_icosahedral_generators,
    _binary_octahedral_generators,
    _binary_tetrahedral_generators,
    build_ade_group,
    conjugacy_classes,
    element_key,
    generate_group,
    trace,
)
from orbichern.scalars import CycloScalar, QuadScalar

F = Fraction


# ----------------------------------------------------------------------
# float oracle helpers


def scalar_float(value) -> float:
    if isinstance(value, QuadScalar):
        return float(value.base) + float(value.coeff) * math.sqrt(value.radicand)
    return float(value)


def cyclo_float(value) -> complex:
    if isinstance(value, CycloScalar):
        m = value.conductor
        return sum(
            float(c) * cmath.exp(2j * cmath.pi * k / m)
            for k, c in enumerate(value.coeffs)
        )
    return complex(scalar_float(value))


def matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat_close(a, b, tol=1e-9):
    return all(abs(a[r][c] - b[r][c]) < tol for r in range(2) for c in range(2))


def word_matrix(w: Word):
    period = 2 * w.n if w.family == "dicyclic" else w.n
    lam = cmath.exp(2j * cmath.pi * w.exp / period)
    rot = ((lam, 0), (0, lam.conjugate()))
    if not w.flip:
        return rot
    return matmul(((0, 1), (-1, 0)), rot)


def quaternion_matrix(q: Quaternion):
    x, y, z, w = (scalar_float(v) for v in (q.x, q.y, q.z, q.w))
    return ((complex(x, y), complex(z, w)), (complex(-z, w), complex(x, -y)))


def as_matrix(g):
    return word_matrix(g) if isinstance(g, Word) else quaternion_matrix(g)


def det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


# ----------------------------------------------------------------------
# closure


def test_closure_of_minus_one():
    minus_one = Quaternion(F(-1), F(0), F(0), F(0))
    group = generate_group([minus_one])
    assert len(group) == 2
    assert any(g.is_identity() for g in group)


def test_closure_of_quaternion_units():
    i = Quaternion(F(0), F(1), F(0), F(0))
    j = Quaternion(F(0), F(0), F(1), F(0))
    assert len(generate_group([i, j])) == 8


def test_closure_sizes_of_exceptional_groups():
    assert len(generate_group(_binary_tetrahedral_generators())) == 24
    assert len(generate_group(_binary_octahedral_generators())) == 48
    assert len(generate_group(_binary_icosahedral_generators())) == 120


def test_closure_respects_bound():
    with pytest.raises(BoundExceeded):
        generate_group(_binary_tetrahedral_generators(), bound=10)
    with pytest.raises(ValueError):
        generate_group([])


def test_closure_is_idempotent():
    group = build_ade_group(AdeLabel("D", 3))
    again = generate_group(group.elements)
    assert set(again) == set(group.elements)


def test_word_enumeration_matches_closure_for_dicyclic():
    for n in range(2, 8):
        group = build_ade_group(AdeLabel("D", n))
        closed = generate_group(group.generators)
        assert set(closed) == set(group.elements)
        assert len(closed) == 4 * n


# ----------------------------------------------------------------------
# group law vs float matrices


def test_word_group_law_matches_matrices():
    for n in range(2, 7):
        elements = build_ade_group(AdeLabel("D", n)).elements
        for g in elements:
            assert mat_close(
                matmul(as_matrix(g), as_matrix(g.inverse())), ((1, 0), (0, 1))
            )
            assert abs(det(as_matrix(g)) - 1) < 1e-9
            for h in elements:
                assert mat_close(
                    as_matrix(g * h), matmul(as_matrix(g), as_matrix(h))
                )


def test_cyclic_word_group_law_matches_matrices():
    for n in (1, 2, 5, 8):
        elements = build_ade_group(AdeLabel("A", n)).elements
        for g in elements:
            for h in elements:
                assert mat_close(
                    as_matrix(g * h), matmul(as_matrix(g), as_matrix(h))
                )


def test_quaternion_embedding_is_a_homomorphism():
    rng = random.Random(611)
    for builder in (
        _binary_tetrahedral_generators,
        _binary_octahedral_generators,
        _binary_icosahedral_generators,
    ):
        elements = sorted(generate_group(builder()), key=element_key)
        for _ in range(150):
            g, h = rng.choice(elements), rng.choice(elements)
            assert mat_close(as_matrix(g * h), matmul(as_matrix(g), as_matrix(h)))
            assert abs(det(as_matrix(g)) - 1) < 1e-9
            assert abs(complex(cyclo_float(trace(g))) -
                       (as_matrix(g)[0][0] + as_matrix(g)[1][1])) < 1e-9


def test_word_traces_match_matrix_traces():
    for n in range(2, 9):
        for g in build_ade_group(AdeLabel("D", n)).elements:
            m = as_matrix(g)
            assert abs(cyclo_float(trace(g)) - (m[0][0] + m[1][1])) < 1e-9


# ----------------------------------------------------------------------
# element basics


def test_trace_values():
    i = Quaternion(F(0), F(1), F(0), F(0))
    omega = Quaternion(F(1, 2), F(1, 2), F(1, 2), F(1, 2))
    assert trace(i.identity()) == 2
    assert trace(i) == 0
    assert trace(omega) == 1
    flip = Word("dicyclic", 5, True, 3)
    assert trace(flip) == 0
    minus_one = Word("dicyclic", 5, False, 5)  # a^n = -1
    assert trace(minus_one) == -2


def test_word_normalization_and_inverses():
    a = Word("dicyclic", 4, False, 1)
    assert Word("dicyclic", 4, False, 9) == a  # exponent mod 2n
    assert Word("dicyclic", 4, False, -1) == Word("dicyclic", 4, False, 7)
    power = a
    for _ in range(7):
        power = power * a
    assert power.is_identity()  # a has order 2n
    x = Word("dicyclic", 4, True, 0)
    assert (x * x) == Word("dicyclic", 4, False, 4)  # x^2 = a^n = -1
    for g in build_ade_group(AdeLabel("D", 4)).elements:
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()


def test_quaternion_inverse_in_irrational_groups():
    for builder in (_binary_octahedral_generators, _binary_icosahedral_generators):
        for g in builder():
            assert (g * g.inverse()).is_identity()
            assert g.norm() == 1


def test_mixed_family_words_do_not_combine():
    a = Word("dicyclic", 4, False, 1)
    b = Word("cyclic", 4, False, 1)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        Word("dihedral", 4, False, 1)


def test_element_keys_are_distinct_within_a_group():
    for label in (AdeLabel("A", 7), AdeLabel("D", 5), AdeLabel("E", 6)):
        group = build_ade_group(label)
        keys = [element_key(g) for g in group.elements]
        assert len(set(keys)) == group.order


# ----------------------------------------------------------------------
# conjugacy classes


def class_profile(group):
    return sorted((c.size, c.centralizer_order) for c in group.classes)


def test_smallest_binary_dihedral_profile():
    group = build_ade_group(AdeLabel("D", 2))  # quaternion group of order 8
    assert sorted(c.size for c in group.classes) == [1, 1, 2, 2, 2]
    assert sorted(c.centralizer_order for c in group.classes) == [4, 4, 4, 8, 8]


def test_binary_dihedral_class_structure():
    for n in range(2, 21):
        group = build_ade_group(AdeLabel("D", n))
        assert len(group.classes) == n + 3
        expected = sorted([4 * n, 4 * n] + [2 * n] * (n - 1) + [4, 4])
        assert sorted(c.centralizer_order for c in group.classes) == expected
        # the two reflection-type classes each have n elements
        flip_sizes = [c.size for c in group.classes if getattr(c.representative, "flip", False)]
        assert flip_sizes == [n, n]


def test_exceptional_class_sizes():
    e6 = build_ade_group(AdeLabel("E", 6))
    assert sorted(c.size for c in e6.classes) == [1, 1, 4, 4, 4, 4, 6]
    e7 = build_ade_group(AdeLabel("E", 7))
    assert sorted(c.size for c in e7.classes) == [1, 1, 6, 6, 6, 8, 8, 12]
    e8 = build_ade_group(AdeLabel("E", 8))
    assert sorted(c.size for c in e8.classes) == [1, 1, 12, 12, 12, 12, 20, 20, 30]


def test_cyclic_groups_are_abelian():
    for n in (1, 2, 3, 7, 12):
        group = build_ade_group(AdeLabel("A", n))
        assert len(group.classes) == n
        assert all(c.size == 1 and c.centralizer_order == n for c in group.classes)


def test_class_equation_and_orbit_stabilizer():
    labels = [AdeLabel("A", 6), AdeLabel("D", 5), AdeLabel("D", 8),
              AdeLabel("E", 6), AdeLabel("E", 7), AdeLabel("E", 8)]
    for label in labels:
        group = build_ade_group(label)
        assert sum(c.size for c in group.classes) == group.order
        for c in group.classes:
            assert c.size * c.centralizer_order == group.order


def test_identity_class_is_unique_and_rigid():
    for label in (AdeLabel("A", 9), AdeLabel("D", 6), AdeLabel("E", 7)):
        group = build_ade_group(label)
        identity_classes = [c for c in group.classes if c.trace == 2]
        assert len(identity_classes) == 1
        assert identity_classes[0].size == 1
        assert identity_classes[0].representative.is_identity()
        for g in group.elements:
            if trace(g) == 2:
                assert g.is_identity()


def test_conjugacy_classes_accepts_subgroup_or_raw_elements():
    group = build_ade_group(AdeLabel("D", 4))
    direct = conjugacy_classes(group)
    assert direct == group.classes
    rebuilt = conjugacy_classes(group.elements, group.generators)
    assert rebuilt == group.classes


def test_trace_two_imposter_is_rejected():
    # a dishonest "class" whose representative has trace 2 but is not 1
    fake = Word("dicyclic", 3, False, 1)
    bogus = FiniteSubgroup(
        label=None,
        order=2,
        elements=(fake.identity(), fake),
        classes=(
            ConjugacyClass(fake.identity(), 1, 2, F(2)),
            ConjugacyClass(fake, 1, 2, F(2)),
        ),
        generators=(fake,),
    )
    from orbichern.contributions import class_sum_contribution

    with pytest.raises(TraceTwoNonIdentity):
        class_sum_contribution(bogus)


def test_classes_are_sorted_deterministically():
    group = build_ade_group(AdeLabel("E", 8))
    sizes = [c.size for c in group.classes]
    assert sizes == sorted(sizes) or sizes == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    # rebuilding from shuffled elements gives the identical tuple
    rng = random.Random(99)
    shuffled = list(group.elements)
    rng.shuffle(shuffled)
    assert conjugacy_classes(shuffled, group.generators) == group.classes


def test_build_rejects_bad_labels():
    with pytest.raises(InvalidLabel):
        build_ade_group(AdeLabel("E", 9))
