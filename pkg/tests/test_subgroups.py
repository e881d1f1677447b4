import numpy as np
import pytest

from almonomial.families import builtin
from almonomial.groups import group_from_generators
from almonomial.perm import Permutation
from almonomial.subgroups import (
    Subgroup,
    linear_characters,
    normal_subgroups,
    sign_character,
    subgroup_classes,
    trivial_character,
    young_subgroup,
)

from helpers import conjugacy_classes_of_subgroups, naive_subgroups


def test_class_counts_match_naive_oracle():
    # frozen from the DFS-extension oracle; recomputed live as a cross-check
    expected = {
        ("symmetric", 3): 4,
        ("symmetric", 4): 11,
        ("alternating", 4): 5,
        ("dihedral", 4): 8,
        ("quaternion", None): 6,
        ("cyclic", 12): 6,
        ("klein", None): 5,
    }
    for (fam, param), count in expected.items():
        g = builtin(fam, param) if param is not None else builtin(fam)
        classes = subgroup_classes(g)
        assert len(classes) == count
        subsets = naive_subgroups(g)
        assert sum(c.class_length for c in classes) == len(subsets)
        assert len(conjugacy_classes_of_subgroups(g, subsets)) == count


def test_cyclic_prime_has_two_classes():
    for p in (2, 3, 5, 7):
        assert len(subgroup_classes(builtin("cyclic", p))) == 2


def test_subgroup_total_counts_up_to_100():
    # sum of class lengths equals the exhaustive subgroup count
    for fam, param in [("symmetric", 4), ("dihedral", 6), ("alternating", 5), ("cyclic", 24)]:
        g = builtin(fam, param)
        assert g.order <= 100
        classes = subgroup_classes(g)
        assert sum(c.class_length for c in classes) == len(naive_subgroups(g))


def test_representatives_closed_and_sized():
    for fam, param in [("symmetric", 4), ("SL2", 3), ("dihedral", 5)]:
        g = builtin(fam, param)
        cay = g.cayley
        for c in subgroup_classes(g):
            members = c.representative.members
            assert len(members) == c.order
            assert cay.subgroup_order_check(members)
            assert g.order % c.order == 0


def test_no_two_representatives_conjugate():
    g = builtin("symmetric", 4)
    cay = g.cayley
    classes = subgroup_classes(g)
    sets = [frozenset(int(x) for x in c.representative.members) for c in classes]
    for i, c in enumerate(classes):
        for gidx in range(cay.n):
            conj = frozenset(
                int(x) for x in cay.conjugate_set(c.representative.members, gidx)
            )
            for j, other in enumerate(sets):
                if j != i:
                    assert conj != other


def test_trivial_and_whole_group_present():
    for fam, param in [("symmetric", 3), ("cyclic", 1), ("quaternion", None)]:
        g = builtin(fam, param) if param is not None else builtin(fam)
        classes = subgroup_classes(g)
        assert classes[0].order == 1
        assert classes[-1].order == g.order


def test_normal_subgroups():
    s4 = builtin("symmetric", 4)
    assert [c.order for c in normal_subgroups(s4)] == [1, 4, 12, 24]
    a5 = builtin("alternating", 5)
    assert [c.order for c in normal_subgroups(a5)] == [1, 60]
    c12 = builtin("cyclic", 12)
    assert len(normal_subgroups(c12)) == len(subgroup_classes(c12))


def test_class_lengths_are_index_of_normalizer():
    g = builtin("symmetric", 4)
    cay = g.cayley
    for c in subgroup_classes(g):
        members = c.representative.members
        member_set = frozenset(int(x) for x in members)
        normalizer = sum(
            1
            for gidx in range(cay.n)
            if frozenset(int(x) for x in cay.conjugate_set(members, gidx)) == member_set
        )
        assert c.class_length == g.order // normalizer


def test_abelianization_and_linear_character_counts():
    s3 = builtin("symmetric", 3)
    classes = subgroup_classes(s3)
    whole = classes[-1]
    assert whole.abelianization == (2,)
    assert len(linear_characters(whole)) == 2
    v4 = builtin("klein")
    v4_whole = subgroup_classes(v4)[-1]
    assert v4_whole.abelianization == (2, 2)
    assert len(linear_characters(v4_whole)) == 4
    a5 = builtin("alternating", 5)
    assert subgroup_classes(a5)[-1].abelianization == ()
    assert len(linear_characters(subgroup_classes(a5)[-1])) == 1
    q8 = builtin("quaternion")
    assert subgroup_classes(q8)[-1].abelianization == (2, 2)
    c12 = builtin("cyclic", 12)
    assert subgroup_classes(c12)[-1].abelianization == (12,)


def test_linear_character_count_equals_index_of_derived():
    for fam, param in [("symmetric", 4), ("SL2", 3), ("dihedral", 6)]:
        g = builtin(fam, param)
        for c in subgroup_classes(g):
            lams = linear_characters(c)
            expected = 1
            for f in c.abelianization:
                expected *= f
            assert len(lams) == expected == c.order // c.representative.derived_order


def test_linear_characters_multiplicative_and_conjugation_closed():
    g = builtin("symmetric", 4)
    e = g.exponent
    cay = g.cayley
    for c in subgroup_classes(g):
        lams = linear_characters(c)
        sub = c.representative
        exps = {tuple(int(x) for x in lam.exponents) for lam in lams}
        assert len(exps) == len(lams)  # pairwise distinct
        assert tuple([0] * sub.order) in exps  # trivial present
        for lam in lams:
            # conjugate character is in the set
            conj = tuple((-int(x)) % e for x in lam.exponents)
            assert conj in exps
            # multiplicativity on a few products
            for a in sub.members[: min(6, sub.order)]:
                for b in sub.members[: min(6, sub.order)]:
                    ab = int(cay.mul[int(a), int(b)])
                    assert (
                        lam.exponent_at(ab)
                        == (lam.exponent_at(int(a)) + lam.exponent_at(int(b))) % e
                    )
            # values are roots of unity of the element order
            for a in sub.members:
                t = lam.exponent_at(int(a))
                ord_a = int(cay.order_of[int(a)])
                assert (t * ord_a) % e == 0


def test_young_subgroup_structure():
    s4 = builtin("symmetric", 4)
    y = young_subgroup(s4, (2, 2))
    assert y.order == 4
    y31 = young_subgroup(s4, (3, 1))
    assert y31.order == 6
    triv = young_subgroup(s4, (1, 1, 1, 1))
    assert triv.order == 1
    with pytest.raises(ValueError):
        young_subgroup(s4, (3, 2))


def test_sign_and_trivial_characters():
    s4 = builtin("symmetric", 4)
    y = young_subgroup(s4, (2, 2))
    triv = trivial_character(y)
    assert triv.is_trivial()
    sgn = sign_character(y)
    e = s4.exponent
    elems = s4.elements
    for m in y.members:
        expected = 0 if elems[int(m)].sign() == 1 else e // 2
        assert sgn.exponent_at(int(m)) == expected


def test_shuffled_generators_give_same_census():
    base = builtin("symmetric", 4)
    census = [
        (c.order, c.class_length, c.abelianization) for c in subgroup_classes(base)
    ]
    gens = list(base.generators)
    shuffled = group_from_generators([gens[1], gens[0].inverse(), gens[0]], degree=4)
    assert [
        (c.order, c.class_length, c.abelianization)
        for c in subgroup_classes(shuffled)
    ] == census
