"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the production code paths: subgroups are
enumerated by naive DFS extension over Permutation objects, induction is the
literal sum over the whole group, and degree multisets come from numerically
diagonalizing a random central element of the regular representation.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from almonomial.chartab import ClassFunction
from almonomial.cyclo import Cyclotomic
from almonomial.perm import Permutation


def perm_closure(degree, gens):
    """Subgroup closure at the Permutation level (no tables)."""
    identity = Permutation.identity(degree)
    seen = {identity.images: identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y.images not in seen:
                    seen[y.images] = y
                    new.append(y)
        frontier = new
    return sorted(seen.values())


def naive_subgroups(group):
    """Every subgroup of the group, as frozensets of image tuples.

    DFS extension: repeatedly adjoin one element to each known subgroup and
    close.  Exhaustive (every subgroup arises by adjoining its elements one
    at a time), independent of the production join-closure enumeration.
    """
    elems = list(group.elements)
    trivial = frozenset({group.identity().images})
    found = {trivial}
    queue = [trivial]
    while queue:
        current = queue.pop()
        gens = [Permutation(im) for im in current]
        for x in elems:
            if x.images in current:
                continue
            closed = frozenset(
                p.images for p in perm_closure(group.degree, gens + [x])
            )
            if closed not in found:
                found.add(closed)
                queue.append(closed)
    return found


def conjugacy_classes_of_subgroups(group, subgroup_sets):
    """Partition a set of subgroups (frozensets of images) into conjugacy classes."""
    elems = list(group.elements)
    remaining = set(subgroup_sets)
    classes = []
    while remaining:
        h = remaining.pop()
        orbit = {h}
        for x in elems:
            xi = x.inverse()
            conj = frozenset((x * Permutation(im) * xi).images for im in h)
            orbit.add(conj)
        remaining -= orbit
        classes.append(orbit)
    return classes


def induce_reference(lam, group):
    """The literal induction formula: sum lambda(x g x^-1) over all x in G."""
    sub = lam.subgroup
    e = group.exponent
    elems = group.elements
    member_images = {elems[int(m)].images: int(m) for m in sub.members}
    values = []
    for cls in group.conjugacy_classes():
        rep = cls.representative
        total = Cyclotomic.zero(e)
        for x in elems:
            y = x * rep * x.inverse()
            m = member_images.get(y.images)
            if m is not None:
                total = total + lam.value_at(m)
        values.append(total / sub.order)
    return ClassFunction(group, tuple(values))


def restriction_pairing(lam, chi):
    """<lambda, Res chi>_H computed directly over the subgroup elements."""
    sub = lam.subgroup
    group = sub.parent
    cay = group.cayley
    total = Cyclotomic.zero(group.exponent)
    for pos, m in enumerate(sub.members):
        c = int(cay.class_of[int(m)])
        total = total + lam.value_at(int(m)) * chi.values[c].conjugate()
    return total / sub.order


def numeric_degree_multiset(group, seed=7):
    """Degrees of the irreducibles, from float linear algebra.

    A generic element of the center of the group algebra acts on the regular
    representation with one eigenvalue per irreducible, of multiplicity
    degree squared.
    """
    elems = list(group.elements)
    n = len(elems)
    index = {p.images: i for i, p in enumerate(elems)}
    rng = np.random.default_rng(seed)
    coeffs = rng.normal(size=len(group.conjugacy_classes()))
    Z = np.zeros((n, n))
    class_members = group.class_members
    for c, members in enumerate(class_members):
        for m in members:
            g = elems[m]
            for i, x in enumerate(elems):
                Z[index[(g * x).images], i] += coeffs[c]
    eigs = np.linalg.eigvals(Z)
    counts: dict[tuple[float, float], int] = {}
    for ev in eigs:
        key = (round(float(ev.real), 6), round(float(ev.imag), 6))
        counts[key] = counts.get(key, 0) + 1
    degrees = []
    for count in counts.values():
        d = round(float(np.sqrt(count)))
        assert d * d == count, f"eigenvalue multiplicity {count} is not a square"
        degrees.append(d)
    return sorted(degrees)


def as_class_function(values, group):
    return ClassFunction(group, tuple(values))


def rational(x):
    return Cyclotomic.rational(Fraction(x))
