"""Finite permutation groups: construction, conjugacy classes, products, quotients.

Groups are immutable after construction.  Expensive derived data (element
list, class partition, multiplication tables) is computed lazily and cached
on the instance; all of it is canonical, i.e. independent of the order in
which generators were supplied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .perm import Permutation, StabilizerChain

__all__ = [
    "DEFAULT_CAP",
    "CapExceededError",
    "PermGroup",
    "ConjugacyClass",
    "group_from_generators",
    "direct_product",
    "coset_action_quotient",
]

DEFAULT_CAP = 10_000


class CapExceededError(RuntimeError):
    """Raised when an operation would enumerate a group above the order cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds the enumeration cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int


class PermGroup:
    """A finite permutation group given by generators on {0, .., degree-1}."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        *,
        name: str | None = None,
        cap: int = DEFAULT_CAP,
    ):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Permutation):
                raise TypeError("generators must be Permutation instances")
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
        self.degree = degree
        self.generators = gens
        self.name = name
        self.cap = cap

    # -- basic structure ------------------------------------------------------

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.degree, self.generators)

    @property
    def order(self) -> int:
        return self.chain.order

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g: Permutation) -> bool:
        return isinstance(g, Permutation) and self.chain.contains(g)

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"{label}(degree={self.degree}, order={self.order})"

    def _check_cap(self):
        if self.order > self.cap:
            raise CapExceededError(self.order, self.cap)

    # -- element-level data (cap-guarded) ----------------------------------------

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted by image array; requires order <= cap."""
        self._check_cap()
        seen = {self.identity().images}
        frontier = [self.identity()]
        while frontier:
            new = []
            for x in frontier:
                for g in self.generators:
                    y = g * x
                    if y.images not in seen:
                        seen.add(y.images)
                        new.append(y)
            frontier = new
        elems = tuple(Permutation(im) for im in sorted(seen))
        if len(elems) != self.order:
            raise RuntimeError("element enumeration disagrees with chain order")
        return elems

    @cached_property
    def _element_index(self) -> dict[tuple[int, ...], int]:
        return {p.images: i for i, p in enumerate(self.elements)}

    def element_index(self, g: Permutation) -> int:
        try:
            return self._element_index[g.images]
        except KeyError:
            raise ValueError(f"{g!r} is not an element of {self!r}") from None

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(p.order() for p in self.elements))

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    # -- conjugacy classes ---------------------------------------------------------

    @cached_property
    def _class_data(self):
        """Canonical class partition.

        Returns (classes, class_of, members) where classes is the tuple of
        ConjugacyClass in canonical order (element order, size, least
        representative), class_of maps element index -> class index, and
        members[c] is the sorted tuple of element indices in class c.
        """
        elems = self.elements
        index = self._element_index
        n = len(elems)
        gen_pairs = [(g, g.inverse()) for g in self.generators]
        class_of_raw = [-1] * n
        raw: list[list[int]] = []
        for start in range(n):
            if class_of_raw[start] != -1:
                continue
            cid = len(raw)
            orbit = [start]
            class_of_raw[start] = cid
            queue = [start]
            while queue:
                a = queue.pop()
                pa = elems[a]
                for g, gi in gen_pairs:
                    b = index[(g * pa * gi).images]
                    if class_of_raw[b] == -1:
                        class_of_raw[b] = cid
                        orbit.append(b)
                        queue.append(b)
            raw.append(sorted(orbit))
        order_key = [
            (elems[members[0]].order(), len(members), elems[members[0]].images)
            for members in raw
        ]
        perm = sorted(range(len(raw)), key=lambda i: order_key[i])
        members = tuple(tuple(raw[i]) for i in perm)
        classes = tuple(
            ConjugacyClass(
                representative=elems[m[0]],
                size=len(m),
                element_order=elems[m[0]].order(),
            )
            for m in members
        )
        remap = {old: new for new, old in enumerate(perm)}
        class_of = tuple(remap[c] for c in class_of_raw)
        return classes, class_of, members

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        return self._class_data[0]

    @property
    def class_of(self) -> tuple[int, ...]:
        """Element index -> canonical class index."""
        return self._class_data[1]

    @property
    def class_members(self) -> tuple[tuple[int, ...], ...]:
        return self._class_data[2]

    @cached_property
    def cayley(self):
        """Dense index-level multiplication table (see cayley module)."""
        from .cayley import Cayley

        return Cayley(self)


def group_from_generators(
    generators: Iterable[Permutation],
    degree: int | None = None,
    *,
    name: str | None = None,
    cap: int = DEFAULT_CAP,
) -> PermGroup:
    """Group generated by `generators`; empty list gives the trivial group."""
    gens = tuple(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    return PermGroup(degree, gens, name=name, cap=cap)


def direct_product(g1: PermGroup, g2: PermGroup, *, name: str | None = None) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    cap = max(g1.cap, g2.cap)
    total = g1.order * g2.order
    if total > cap:
        raise CapExceededError(total, cap)
    d1, d2 = g1.degree, g2.degree
    gens = [
        Permutation(tuple(g.images) + tuple(range(d1, d1 + d2)))
        for g in g1.generators
    ]
    gens += [
        Permutation(tuple(range(d1)) + tuple(x + d1 for x in g.images))
        for g in g2.generators
    ]
    if name is None and g1.name and g2.name:
        name = f"{g1.name}x{g2.name}"
    prod = PermGroup(d1 + d2, gens, name=name, cap=cap)
    if prod.order != total:
        raise RuntimeError("direct product order check failed")
    return prod


def coset_action_quotient(g: PermGroup, n: PermGroup) -> PermGroup:
    """The quotient G/N as a permutation group on the cosets of N.

    N must be a normal subgroup of G (both are checked).  The coset action is
    faithful for G/N, so the result has order |G| / |N|.
    """
    if n.degree != g.degree:
        raise ValueError("subgroup degree does not match group degree")
    for x in n.generators:
        if x not in g:
            raise ValueError("N is not a subgroup of G: generator outside G")
    if g.order % n.order:
        raise ValueError("N is not a subgroup of G: order does not divide")
    for gg in g.generators:
        gi = gg.inverse()
        for x in n.generators:
            if (gg * x * gi) not in n:
                raise ValueError("N is not normal in G")
    n_elems = n.elements

    def coset_key(p: Permutation) -> tuple[int, ...]:
        return min((p * x).images for x in n_elems)

    identity_key = coset_key(g.identity())
    keys = {identity_key: 0}
    reps = [g.identity()]
    queue = [g.identity()]
    while queue:
        rep = queue.pop(0)
        for gg in g.generators:
            q = gg * rep
            key = coset_key(q)
            if key not in keys:
                keys[key] = len(reps)
                reps.append(q)
                queue.append(q)
    count = len(reps)
    if count * n.order != g.order:
        raise RuntimeError("coset enumeration miscounted")
    gens_q = []
    for gg in g.generators:
        images = [0] * count
        for i, rep in enumerate(reps):
            images[i] = keys[coset_key(gg * rep)]
        gens_q.append(Permutation(images))
    name = None
    if g.name and n.name:
        name = f"{g.name}/{n.name}"
    quot = PermGroup(max(count, 1), gens_q, name=name, cap=g.cap)
    if quot.order * n.order != g.order:
        raise RuntimeError("quotient order check failed")
    return quot
