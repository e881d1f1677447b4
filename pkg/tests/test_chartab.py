from fractions import Fraction

import pytest

from almonomial.chartab import character_table, inner_product, regular_character
from almonomial.cyclo import Cyclotomic
from almonomial.families import builtin
from almonomial.groups import PermGroup

from helpers import numeric_degree_multiset

SMALL_SPECS = [
    ("symmetric", 3),
    ("symmetric", 4),
    ("alternating", 4),
    ("cyclic", 6),
    ("cyclic", 8),
    ("dihedral", 4),
    ("dihedral", 5),
    ("quaternion", None),
    ("klein", None),
    ("SL2", 3),
]


def _table(fam, param):
    g = builtin(fam, param) if param is not None else builtin(fam)
    return g, character_table(g)


def test_cyclic_tables_are_root_of_unity_powers():
    for n in (1, 2, 3, 5, 6, 12):
        g = builtin("cyclic", n)
        t = character_table(g)
        assert t.degrees == (1,) * n
        logs = []
        for c in g.conjugacy_classes():
            k = 0
            x = g.identity()
            while x != c.representative:
                x = x * g.generators[0]
                k += 1
            logs.append(k)
        rows = {tuple(v.sort_key() for v in chi.values) for chi in t.irreducibles}
        expected = {
            tuple(Cyclotomic.root_of_unity(n, j * k).sort_key() for k in logs)
            for j in range(n)
        }
        assert rows == expected


def test_known_degree_multisets():
    expected = {
        ("symmetric", 3): [1, 1, 2],
        ("symmetric", 4): [1, 1, 2, 3, 3],
        ("alternating", 4): [1, 1, 1, 3],
        ("dihedral", 4): [1, 1, 1, 1, 2],
        ("quaternion", None): [1, 1, 1, 1, 2],
        ("SL2", 3): [1, 1, 1, 2, 2, 2, 3],
    }
    for (fam, param), degs in expected.items():
        _, t = _table(fam, param)
        assert sorted(t.degrees) == degs


def test_degrees_match_numeric_oracle():
    # float diagonalization of a generic central element of the regular
    # representation gives the same degree multiset
    for fam, param in [("symmetric", 3), ("cyclic", 6), ("dihedral", 4), ("quaternion", None), ("SL2", 3)]:
        g, t = _table(fam, param)
        assert numeric_degree_multiset(g) == sorted(t.degrees)


def test_table_invariants_small():
    for fam, param in SMALL_SPECS:
        g, t = _table(fam, param)
        assert sum(d * d for d in t.degrees) == g.order
        assert t.size == len(g.conjugacy_classes())
        assert t.degrees[0] == 1
        assert all(v == 1 for v in t.irreducibles[0].values)  # trivial first
        for chi in t.irreducibles:
            assert chi.values[0].as_integer() >= 1
            assert all(v.conductor == g.exponent for v in chi.values)
        # exact orthonormality through the generic inner product
        for i, a in enumerate(t.irreducibles):
            for j, b in enumerate(t.irreducibles):
                got = inner_product(a, b)
                assert got == (1 if i == j else 0)


def test_regular_character_decomposition():
    g, t = _table("symmetric", 4)
    reg = regular_character(g)
    for chi, d in zip(t.irreducibles, t.degrees):
        assert inner_product(reg, chi).as_fraction() == Fraction(d)


def test_inner_product_group_mismatch():
    _, t1 = _table("symmetric", 3)
    _, t2 = _table("cyclic", 6)
    with pytest.raises(ValueError):
        inner_product(t1.irreducibles[0], t2.irreducibles[0])


def test_table_deterministic_under_generator_shuffle():
    base = builtin("symmetric", 4)
    t = character_table(base)
    baseline = [[v.render() for v in chi.values] for chi in t.irreducibles]
    gens = list(base.generators)
    shuffled = PermGroup(base.degree, [gens[1], gens[0], gens[1].inverse()])
    t2 = character_table(shuffled)
    assert [[v.render() for v in chi.values] for chi in t2.irreducibles] == baseline
    assert t2.prime == t.prime
    assert t2.conductor == t.conductor


def test_table_cached_per_group():
    g = builtin("symmetric", 3)
    assert character_table(g) is character_table(g)
