import pytest
from hypothesis import given, strategies as st

from almonomial.perm import Permutation, StabilizerChain, compose

from helpers import perm_closure


def P(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def test_identity_compose():
    p = P(4, (0, 1, 2))
    assert compose(Permutation.identity(4), p) == p
    assert compose(p, Permutation.identity(4)) == p


def test_involution_squares_to_identity():
    t = P(3, (0, 1))
    assert compose(t, t).is_identity()


def test_compose_applies_right_then_left():
    # (p o q)(x) = p(q(x)): q = (0 1) first, then p = (0 1 2)
    p = P(3, (0, 1, 2))
    q = P(3, (0, 1))
    r = compose(p, q)
    assert r(0) == p(q(0)) == 2
    assert r.images == (2, 1, 0)


def test_bad_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([1, 2, 3])


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        compose(P(3, (0, 1)), P(4, (0, 1)))


def test_order_parity_cycles():
    c = P(5, (0, 1, 2), (3, 4))
    assert c.order() == 6
    assert c.parity() == 1
    assert c.sign() == -1
    assert P(5, (0, 1, 2)).sign() == 1
    assert sorted(c.cycles()) == [(0, 1, 2), (3, 4)]


def test_cycle_string_round_trip():
    c = P(4, (0, 2), (1, 3))
    assert c.cycle_string() == "(0 2)(1 3)"
    assert c.cycle_string(one_based=True) == "(1 3)(2 4)"


perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.permutations(range(n)).map(Permutation)
)


@given(perms)
def test_inverse_cancels(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.tuples(*[st.permutations(range(n)).map(Permutation)] * 3)
))
def test_associativity_and_sign_homomorphism(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert (p * q).sign() == p.sign() * q.sign()


@given(perms)
def test_order_annihilates(p):
    acc = Permutation.identity(p.degree)
    for _ in range(p.order()):
        acc = acc * p
    assert acc.is_identity()


def test_chain_order_matches_enumeration():
    cases = [
        (4, [P(4, (0, 1)), P(4, (0, 1, 2, 3))], 24),
        (5, [P(5, (0, 1, 2, 3, 4))], 5),
        (5, [P(5, (0, 1, 2)), P(5, (0, 1, 2, 3, 4))], 60),
        (3, [], 1),
    ]
    for degree, gens, order in cases:
        chain = StabilizerChain(degree, gens)
        assert chain.order == order
        assert len(perm_closure(degree, gens)) == order


def test_chain_membership_agrees_with_enumeration():
    gens = [P(4, (0, 1)), P(4, (0, 1, 2, 3))]
    chain = StabilizerChain(4, gens)
    assert all(chain.contains(p) for p in perm_closure(4, gens))
    # odd-degree check on a proper subgroup
    a4 = [P(4, (0, 1, 2)), P(4, (1, 2, 3))]
    chain = StabilizerChain(4, a4)
    members = {p.images for p in perm_closure(4, a4)}
    assert chain.order == 12
    for q in perm_closure(4, gens):
        assert chain.contains(q) == (q.images in members)
