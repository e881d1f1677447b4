import random

import pytest

from almonomial.families import builtin
from almonomial.groups import (
    CapExceededError,
    PermGroup,
    coset_action_quotient,
    direct_product,
    group_from_generators,
)
from almonomial.perm import Permutation


def P(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def test_group_from_generators_examples():
    g = group_from_generators([P(4, (0, 1)), P(4, (0, 1, 2, 3))])
    assert g.order == 24
    assert group_from_generators([], degree=3).order == 1
    assert group_from_generators([P(5, (0, 1, 2, 3, 4))]).order == 5


def test_membership_matches_enumeration_small():
    rng = random.Random(3)
    for g in [builtin("symmetric", 4), builtin("dihedral", 6), builtin("SL2", 3)]:
        assert g.order <= 200
        members = set(g.elements)
        assert all(x in g for x in members)
        for _ in range(200):
            images = list(range(g.degree))
            rng.shuffle(images)
            x = Permutation(images)
            assert (x in g) == (x in members)


def test_conjugacy_class_examples():
    s3 = builtin("symmetric", 3)
    assert sorted(c.size for c in s3.conjugacy_classes()) == [1, 2, 3]
    c4 = builtin("cyclic", 4)
    assert [c.size for c in c4.conjugacy_classes()] == [1, 1, 1, 1]
    q8 = builtin("quaternion")
    assert len(q8.conjugacy_classes()) == 5
    # class sizes sum to the order and divide it, on a spread of groups
    for g in [s3, c4, q8, builtin("symmetric", 5), builtin("GL2", 3)]:
        classes = g.conjugacy_classes()
        assert sum(c.size for c in classes) == g.order
        assert all(g.order % c.size == 0 for c in classes)
        assert classes[0].representative.is_identity()


def test_builtin_orders():
    assert builtin("symmetric", 4).order == 24
    assert builtin("symmetric", 1).order == 1
    assert builtin("alternating", 2).order == 1
    assert builtin("alternating", 6).order == 360
    assert builtin("cyclic", 12).order == 12
    assert builtin("dihedral", 4).order == 8
    assert builtin("dihedral", 2).order == 4
    assert builtin("klein").order == 4
    assert builtin("quaternion").order == 8
    for q in (2, 3, 4, 5):
        assert builtin("SL2", q).order == q * (q * q - 1)
        assert builtin("GL2", q).order == (q - 1) * q * (q * q - 1)


def test_builtin_errors():
    with pytest.raises(ValueError):
        builtin("SL2", 6)  # not a prime power
    with pytest.raises(ValueError):
        builtin("frieze", 3)
    with pytest.raises(CapExceededError):
        builtin("symmetric", 9)


def test_exponent_values():
    assert builtin("symmetric", 4).exponent == 12
    assert builtin("cyclic", 12).exponent == 12
    assert builtin("quaternion").exponent == 4
    assert builtin("symmetric", 7).cap >= 5040


def test_direct_product():
    s3 = builtin("symmetric", 3)
    c2 = builtin("cyclic", 2)
    p = direct_product(s3, c2)
    assert p.order == 12
    assert p.degree == 5
    assert len(p.conjugacy_classes()) == 6
    triv = builtin("trivial")
    q = direct_product(triv, s3)
    assert q.order == 6
    assert len(q.conjugacy_classes()) == 3
    v4 = direct_product(c2, c2)
    assert v4.order == 4
    assert len(v4.conjugacy_classes()) == 4


def test_quotients():
    s4 = builtin("symmetric", 4)
    v4 = group_from_generators(
        [P(4, (0, 1), (2, 3)), P(4, (0, 2), (1, 3))], name="V4"
    )
    q = coset_action_quotient(s4, v4)
    assert q.order == 6
    assert not q.is_abelian
    assert len(q.conjugacy_classes()) == 3
    assert coset_action_quotient(s4, s4).order == 1
    triv = PermGroup(4, [], name="1")
    q2 = coset_action_quotient(s4, triv)
    assert q2.order == 24
    assert len(q2.conjugacy_classes()) == len(s4.conjugacy_classes())


def test_quotient_rejects_non_normal_and_non_subgroup():
    s4 = builtin("symmetric", 4)
    c2 = group_from_generators([P(4, (0, 1))])
    with pytest.raises(ValueError):
        coset_action_quotient(s4, c2)  # not normal
    s5piece = group_from_generators([P(4, (0, 1, 2, 3))], name="C4")
    with pytest.raises(ValueError):
        coset_action_quotient(builtin("alternating", 4), s5piece)  # not a subgroup


def test_quotient_order_multiplies():
    a4 = builtin("alternating", 4)
    v4 = group_from_generators([P(4, (0, 1), (2, 3)), P(4, (0, 2), (1, 3))])
    q = coset_action_quotient(a4, v4)
    assert q.order * v4.order == a4.order


def test_class_data_independent_of_generator_order():
    rng = random.Random(11)
    base = builtin("symmetric", 4)
    signature = [
        (c.element_order, c.size, c.representative.images)
        for c in base.conjugacy_classes()
    ]
    gens = list(base.generators) + [g.inverse() for g in base.generators]
    for _ in range(5):
        rng.shuffle(gens)
        shuffled = PermGroup(base.degree, gens)
        assert [
            (c.element_order, c.size, c.representative.images)
            for c in shuffled.conjugacy_classes()
        ] == signature


def test_cap_exceeded_on_enumeration():
    g = PermGroup(9, [P(9, (0, 1)), P(9, tuple(range(9)))], cap=1000)
    assert g.order == 362880  # the chain itself is fine
    with pytest.raises(CapExceededError):
        g.elements
