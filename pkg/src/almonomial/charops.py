"""Induction and restriction of characters, and constituent extraction.

Induced values are computed with the centralizer-counting form of the
induction formula,

    Ind(c) = [G:H] / |C_c| * sum over h in H intersect C_c of lambda(h),

which agrees term-for-term with summing lambda(x g x^-1) over x in G (each
h in the intersection is hit |G|/|C_c| times).  Everything stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chartab import CharacterTable, ClassFunction, character_table, inner_product
from .cyclo import Cyclotomic
from .groups import PermGroup
from .subgroups import LinearCharacter, Subgroup, subgroup_classes, linear_characters

__all__ = [
    "InducedCharacter",
    "NotACharacterError",
    "induce",
    "restrict",
    "constituents",
    "MultiplicityScan",
    "multiplicity_scan",
]


class NotACharacterError(ValueError):
    """An inner product came out non-integral or negative: upstream bug."""


@dataclass(frozen=True)
class InducedCharacter:
    values: ClassFunction
    subgroup_class_index: int | None = None
    character_index: int | None = None

    @property
    def group(self) -> PermGroup:
        return self.values.group


def induce(lam: LinearCharacter, group: PermGroup | None = None) -> InducedCharacter:
    """Induce a linear character of a subgroup up to the parent group."""
    sub = lam.subgroup
    parent = sub.parent
    if group is not None and group is not parent:
        raise ValueError("linear character does not live under the given group")
    cay = parent.cayley
    classes = parent.conjugacy_classes()
    e = parent.exponent
    counts: list[dict[int, int]] = [dict() for _ in classes]
    member_classes = cay.class_of[sub.members]
    for pos, c in enumerate(member_classes):
        t = int(lam.exponents[pos]) % e
        bucket = counts[int(c)]
        bucket[t] = bucket.get(t, 0) + 1
    index = Fraction(parent.order, sub.order)
    values = []
    for c, cls in enumerate(classes):
        total = Cyclotomic.from_exponent_counts(e, counts[c])
        values.append(total * (index / cls.size))
    fn = ClassFunction(parent, tuple(values))
    if fn.values[0] != Fraction(parent.order, sub.order):
        raise RuntimeError("induced degree is not the subgroup index")
    return InducedCharacter(fn)


def restrict(chi: ClassFunction, sub: Subgroup) -> ClassFunction:
    """Restriction to a subgroup, as a class function on that subgroup."""
    parent = chi.group
    if sub.parent is not parent:
        raise ValueError("subgroup does not live in the character's group")
    h_group = sub.as_perm_group()
    cay = parent.cayley
    values = []
    for cls in h_group.conjugacy_classes():
        gidx = parent.element_index(cls.representative)
        values.append(chi.values[int(cay.class_of[gidx])])
    return ClassFunction(h_group, tuple(values))


def constituents(f: ClassFunction, table: CharacterTable) -> tuple[int, ...]:
    """Multiplicities of the irreducibles in a character, verified integral."""
    if table.group is not f.group:
        raise ValueError("table and class function belong to different groups")
    mults = []
    for i, chi in enumerate(table.irreducibles):
        val = inner_product(f, chi)
        if not val.is_rational():
            raise NotACharacterError(f"<f, chi_{i}> is irrational: {val!r}")
        frac = val.as_fraction()
        if frac.denominator != 1 or frac < 0:
            raise NotACharacterError(f"<f, chi_{i}> = {frac} is not in Z>=0")
        mults.append(int(frac))
    return tuple(mults)


class MultiplicityScan:
    """Exact constituent vectors for every (subgroup class, linear character).

    Works in the reduced integer cyclotomic basis: for a subgroup H and
    linear character lambda, the vector of inner products <Ind lambda, chi_i>
    equals (1/|H|) sum over classes of conj(chi_i) times the class-bucketed
    root-of-unity sums of lambda, evaluated as one integer matrix product.
    Divisibility and vanishing of the non-rational coordinates are checked,
    so a defect anywhere upstream raises instead of corrupting a verdict.
    """

    def __init__(self, group: PermGroup):
        self.group = group
        self.table = character_table(group)
        self.classes = subgroup_classes(group)
        self.ints = self.table.ints()
        self._vectors: dict[int, np.ndarray] = {}

    def character_count(self, class_index: int) -> int:
        sub = self.classes[class_index].representative
        count = 1
        for f in sub.abelianization:
            count *= f
        return count

    def vectors(self, class_index: int) -> np.ndarray:
        """(r, K) nonnegative integer matrix, one column per linear character."""
        cached = self._vectors.get(class_index)
        if cached is not None:
            return cached
        ints = self.ints
        e, phi, rc, r = ints.e, ints.phi, ints.rc, ints.r
        sub = self.classes[class_index].representative
        lams = linear_characters(sub)
        cay = self.group.cayley
        member_classes = cay.class_of[sub.members]
        K = len(lams)
        S = np.zeros((K, rc, e), dtype=np.int64)
        for k, lam in enumerate(lams):
            np.add.at(S[k], (member_classes, lam.exponents % e), 1)
        S_red = np.einsum("kce,ef->kcf", S, ints.R)
        flat = S_red.reshape(K, rc * phi).T  # (rc*phi, K)
        U = ints.product_matvec(flat)  # (r*phi, K)
        U = U.reshape(r, phi, K)
        if (U[:, 1:, :] != 0).any():
            raise NotACharacterError("induced inner products are irrational")
        tops = U[:, 0, :]
        h = sub.order
        if (tops % h != 0).any() or (tops < 0).any():
            raise NotACharacterError("induced inner products are not in Z>=0")
        vec = (tops // h).astype(np.int64)
        self._vectors[class_index] = vec
        return vec

    def degree_vector(self) -> np.ndarray:
        return np.array(self.table.degrees, dtype=np.int64)


def multiplicity_scan(group: PermGroup) -> MultiplicityScan:
    cached = getattr(group, "_multiplicity_scan", None)
    if cached is None:
        cached = MultiplicityScan(group)
        group._multiplicity_scan = cached
    return cached
