"""Permutations on 0-based points, plus a deterministic stabilizer chain.

Composition convention, fixed once for the whole package:
``compose(p, q)`` (and ``p * q``) applies ``q`` first, then ``p``, i.e. it is
ordinary function composition ``(p o q)(x) = p(q(x))``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

__all__ = ["Permutation", "compose", "StabilizerChain"]


class Permutation:
    """A bijection of {0, .., degree-1} stored as its image array."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        seen = [False] * n
        for x in imgs:
            if x < 0 or x >= n or seen[x]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {imgs}")
            seen[x] = True
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 0-based points."""
        images = list(range(degree))
        for cyc in cycles:
            cyc = list(cyc)
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        o = other.images
        s = self.images
        return Permutation(s[o[i]] for i in range(len(s)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    __invert__ = inverse

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def parity(self) -> int:
        """0 for even, 1 for odd."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def sign(self) -> int:
        return -1 if self.parity() else 1

    def cycle_string(self, one_based: bool = False) -> str:
        off = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join(
            "(" + " ".join(str(p + off) for p in c) + ")" for c in cycs
        )

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.cycle_string()}" if not self.is_identity() else "Permutation(id)"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply q first, then p."""
    return p * q


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, gens: list[Permutation]):
        self.point = point
        self.gens = gens
        self.transversal: dict[int, Permutation] = {}


class StabilizerChain:
    """Deterministic stabilizer chain for membership tests and group order.

    Built by the plain Schreier-lemma recursion: at each level the base point
    is the smallest moved point, the orbit is explored breadth-first, and the
    point stabilizer is generated by the (deduplicated) Schreier generators.
    No sifting shortcuts, so correctness is immediate; the value-level
    deduplication keeps generator counts bounded by the stabilizer order,
    which is plenty fast below the enumeration cap.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation]):
        self.degree = degree
        self.levels: list[_Level] = []
        self._identity = Permutation.identity(degree)
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if not g.is_identity():
                gens.append(g)
        if gens:
            self._build(gens)

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self.levels)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        for lvl in self.levels:
            rep = lvl.transversal.get(g(lvl.point))
            if rep is None:
                return False
            g = rep.inverse() * g
        return g.is_identity()

    # -- construction -------------------------------------------------------

    def _build(self, gens: list[Permutation]) -> None:
        point = min(
            p for p in range(self.degree) if any(g(p) != p for g in gens)
        )
        lvl = _Level(point, gens)
        self.levels.append(lvl)
        lvl.transversal = {point: self._identity}
        queue = [point]
        while queue:
            a = queue.pop(0)
            ua = lvl.transversal[a]
            for g in gens:
                b = g(a)
                if b not in lvl.transversal:
                    lvl.transversal[b] = g * ua
                    queue.append(b)
        stab: list[Permutation] = []
        seen: set[tuple[int, ...]] = set()
        for a in sorted(lvl.transversal):
            ua = lvl.transversal[a]
            for g in gens:
                ub = lvl.transversal[g(a)]
                s = ub.inverse() * (g * ua)
                if not s.is_identity() and s.images not in seen:
                    seen.add(s.images)
                    stab.append(s)
        if stab:
            self._build(stab)
