"""Subgroups of G up to conjugacy, and the linear characters of each one.

Enumeration is by join closure: every subgroup is generated by the cyclic
subgroups of its elements' prime-power parts, so repeatedly joining known
class representatives with all prime-power cyclic subgroups (and closing
under conjugation for deduplication) reaches every conjugacy class.  Linear
characters are the dual group of H/[H,H], built by cyclic extension steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .cyclo import Cyclotomic
from .groups import PermGroup
from .perm import Permutation

__all__ = [
    "Subgroup",
    "SubgroupClass",
    "LinearCharacter",
    "subgroup_classes",
    "normal_subgroups",
    "linear_characters",
    "trivial_character",
    "sign_character",
    "young_subgroup",
]


class Subgroup:
    """A subgroup of a materialized parent group, stored as element indices."""

    def __init__(self, parent: PermGroup, members, generator_indices=()):
        self.parent = parent
        self.members = np.asarray(sorted(int(m) for m in members), dtype=np.int64)
        self.generator_indices = tuple(int(g) for g in generator_indices)

    @classmethod
    def from_generators(cls, parent: PermGroup, gens: Iterable[Permutation]) -> "Subgroup":
        idx = [parent.element_index(g) for g in gens]
        members = parent.cayley.closure(idx, early_full=False)
        return cls(parent, members, idx)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_positions(self) -> dict[int, int]:
        return {int(m): i for i, m in enumerate(self.members)}

    def __contains__(self, element_index: int) -> bool:
        return int(element_index) in self.member_positions

    @cached_property
    def generator_permutations(self) -> tuple[Permutation, ...]:
        elems = self.parent.elements
        return tuple(elems[g] for g in self.generator_indices)

    def as_perm_group(self, name: str | None = None) -> PermGroup:
        return PermGroup(
            self.parent.degree,
            self.generator_permutations,
            name=name,
            cap=self.parent.cap,
        )

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent!r})"

    # -- abelianization ------------------------------------------------------

    @cached_property
    def _abelian_quotient(self):
        """The quotient H/[H,H] with a small multiplication table.

        Returns (coset_of, reps, qmul) where coset_of maps member positions to
        quotient indices, reps are the minimal coset representatives, and qmul
        is the |Q| x |Q| multiplication table.
        """
        cay = self.parent.cayley
        derived = cay.commutator_subgroup(self.generator_indices)
        # canonical coset key: minimal element of h . D
        prods = cay.mul[np.ix_(self.members, derived)].astype(np.int64)
        keys = prods.min(axis=1)
        reps = np.unique(keys)
        rep_pos = {int(v): i for i, v in enumerate(reps)}
        coset_of = np.array([rep_pos[int(k)] for k in keys], dtype=np.int64)
        key_of_member = {int(m): int(k) for m, k in zip(self.members, keys)}
        q = len(reps)
        qmul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            row = cay.mul[int(reps[a])][reps].astype(np.int64)
            qmul[a] = [rep_pos[key_of_member[int(x)]] for x in row]
        return coset_of, reps, qmul

    @cached_property
    def abelianization(self) -> tuple[int, ...]:
        """Invariant factors of H/[H,H], largest first."""
        _, reps, qmul = self._abelian_quotient
        return _invariant_factors(qmul)

    @cached_property
    def derived_order(self) -> int:
        return self.order // len(self._abelian_quotient[1])


def _q_orders(qmul: np.ndarray) -> list[int]:
    # the identity coset always sits at index 0
    q = len(qmul)
    orders = []
    for a in range(q):
        x = a
        n = 1
        while x != 0:
            x = int(qmul[x][a])
            n += 1
        orders.append(n)
    return orders


def _invariant_factors(qmul: np.ndarray) -> tuple[int, ...]:
    """Invariant factors of an abelian group from its order statistics."""
    q = len(qmul)
    if q == 1:
        return ()
    orders = _q_orders(qmul)
    primes = set()
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.add(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        primes.add(m)
    per_prime: dict[int, list[int]] = {}
    for p in sorted(primes):
        # N_j = #{x : x^(p^j) = 1} = p^(sum_i min(lambda_i, j)) determines the
        # partition lambda of the p-primary component.
        counts = []
        j = 0
        while True:
            j += 1
            nj = sum(1 for o in orders if (p**j) % o == 0)
            cj = 0
            while p**cj < nj:
                cj += 1
            if p**cj != nj:
                raise RuntimeError("abelian p-group count is not a prime power")
            counts.append(cj)
            if len(counts) > 1 and counts[-1] == counts[-2]:
                counts.pop()
                break
        diffs = [counts[0]] + [
            counts[i] - counts[i - 1] for i in range(1, len(counts))
        ]
        # diffs[j-1] = #{i : lambda_i >= j}; conjugate back to lambda itself
        parts = []
        for i in range(diffs[0]):
            parts.append(sum(1 for d in diffs if d > i))
        per_prime[p] = sorted(parts, reverse=True)
    width = max(len(parts) for parts in per_prime.values())
    factors = []
    for k in range(width):
        f = 1
        for p, parts in per_prime.items():
            if k < len(parts):
                f *= p ** parts[k]
        factors.append(f)
    return tuple(factors)


class LinearCharacter:
    """A degree-1 character of a subgroup, as a root-of-unity exponent map.

    Values are zeta_conductor ** exponent; the conductor is the exponent of
    the parent group, which every subgroup element order divides.
    """

    def __init__(self, subgroup: Subgroup, exponents: np.ndarray, conductor: int, index: int):
        self.subgroup = subgroup
        self.exponents = exponents  # aligned with subgroup.members
        self.conductor = conductor
        self.index = index

    def exponent_at(self, element_index: int) -> int:
        pos = self.subgroup.member_positions[int(element_index)]
        return int(self.exponents[pos])

    def value_at(self, element_index: int) -> Cyclotomic:
        return Cyclotomic.root_of_unity(self.conductor, self.exponent_at(element_index))

    def is_trivial(self) -> bool:
        return not self.exponents.any()

    def __repr__(self):
        return (
            f"LinearCharacter(#{self.index} of subgroup order {self.subgroup.order})"
        )


def _dual_group(qmul: np.ndarray, conductor: int) -> list[np.ndarray]:
    """All homomorphisms Q -> <zeta_conductor>, as exponent arrays over Q.

    Built by extending along a chain of cyclic steps; each step with relative
    order m extends every character in exactly m ways.
    """
    q = len(qmul)
    e = conductor

    def q_pow(a: int, k: int) -> int:
        x = 0
        for _ in range(k):
            x = int(qmul[x][a])
        return x

    in_sub = np.zeros(q, dtype=bool)
    in_sub[0] = True
    chars = [{0: 0}]
    for g in range(1, q):
        if in_sub[g]:
            continue
        m = 1
        x = g
        while not in_sub[x]:
            x = int(qmul[x][g])
            m += 1
        gm = x  # g^m, already in the current subgroup
        if e % m:
            raise RuntimeError("cyclic step order does not divide the conductor")
        new_chars = []
        for ch in chars:
            s = ch[gm]
            if s % m:
                raise RuntimeError("character extension is not solvable")
            base = (s // m) % e
            for i in range(m):
                t = (base + i * (e // m)) % e
                ext = dict(ch)
                gj = 0
                for j in range(1, m):
                    gj = int(qmul[gj][g])
                    for x, tx in ch.items():
                        ext[int(qmul[gj][x])] = (j * t + tx) % e
                new_chars.append(ext)
        chars = new_chars
        gj = 0
        for j in range(1, m):
            gj = int(qmul[gj][g])
            for x in list(np.flatnonzero(in_sub)):
                in_sub[int(qmul[gj][int(x)])] = True
        in_sub[g] = True
    arrays = []
    for ch in chars:
        arr = np.zeros(q, dtype=np.int64)
        for x, t in ch.items():
            arr[x] = t
        arrays.append(arr)
    arrays.sort(key=lambda a: tuple(a.tolist()))
    return arrays


def linear_characters(subgroup) -> tuple[LinearCharacter, ...]:
    """All linear characters of a subgroup, trivial first, canonical order."""
    if isinstance(subgroup, SubgroupClass):
        subgroup = subgroup.representative
    cached = getattr(subgroup, "_linear_characters", None)
    if cached is not None:
        return cached
    coset_of, reps, qmul = subgroup._abelian_quotient
    e = subgroup.parent.exponent
    duals = _dual_group(qmul, e)
    out = []
    for i, arr in enumerate(duals):
        exps = arr[coset_of]
        out.append(LinearCharacter(subgroup, exps, e, i))
    result = tuple(out)
    expected = 1
    for f in subgroup.abelianization:
        expected *= f
    if len(result) != expected:
        raise RuntimeError("linear character count mismatch")
    subgroup._linear_characters = result
    return result


def trivial_character(subgroup: Subgroup) -> LinearCharacter:
    e = subgroup.parent.exponent
    return LinearCharacter(
        subgroup, np.zeros(subgroup.order, dtype=np.int64), e, 0
    )


def sign_character(subgroup: Subgroup) -> LinearCharacter:
    """Restriction of the permutation sign to the subgroup."""
    e = subgroup.parent.exponent
    if e % 2:
        raise ValueError("sign character needs an even-exponent parent")
    elems = subgroup.parent.elements
    exps = np.array(
        [(e // 2) * elems[m].parity() for m in subgroup.members], dtype=np.int64
    )
    return LinearCharacter(subgroup, exps, e, -1)


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups, with a canonical representative."""

    representative: Subgroup
    order: int
    class_length: int
    abelianization: tuple[int, ...]
    index: int

    def as_perm_group(self, name=None) -> PermGroup:
        return self.representative.as_perm_group(name)

    def __repr__(self):
        return (
            f"SubgroupClass(#{self.index}, order={self.order}, "
            f"length={self.class_length}, ab={self.abelianization})"
        )


def _prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def _small_generating_set(cay, members: np.ndarray) -> tuple[int, ...]:
    member_list = [int(m) for m in members]
    chosen: list[int] = []
    have = {cay.identity_index}
    for m in member_list:
        if m in have:
            continue
        chosen.append(m)
        have = set(int(x) for x in cay.closure(chosen, early_full=False))
        if len(have) == len(member_list):
            break
    return tuple(chosen)


def subgroup_classes(group: PermGroup) -> tuple[SubgroupClass, ...]:
    """Conjugacy classes of subgroups, sorted by order then representative."""
    cached = getattr(group, "_subgroup_classes", None)
    if cached is not None:
        return cached
    cay = group.cayley
    n = cay.n
    gen_idx = list(cay.generator_indices)

    # all cyclic subgroups, as frozensets of element indices
    cyclic: dict[frozenset, int] = {}
    for a in range(n):
        powers = [cay.identity_index]
        x = a
        while x != cay.identity_index:
            powers.append(x)
            x = int(cay.mul[x, a])
        fs = frozenset(powers)
        if fs not in cyclic:
            cyclic[fs] = a
    cyclic_sorted = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    partners = [
        (gen, np.array(sorted(fs), dtype=np.int64))
        for fs, gen in cyclic_sorted
        if _prime_power(len(fs))
    ]

    known: dict[frozenset, int] = {}
    reps: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []  # members, gens, orbit
    full_fs = frozenset(range(n))

    def register(members: np.ndarray, gens: Sequence[int]) -> None:
        fs = frozenset(int(x) for x in members)
        if fs in known:
            return
        cid = len(reps)
        orbit = {fs}
        canonical = tuple(sorted(fs))
        queue = [members]
        while queue:
            cur = queue.pop()
            for g in gen_idx:
                conj = cay.conjugate_set(cur, g)
                cfs = frozenset(int(x) for x in conj)
                if cfs not in orbit:
                    orbit.add(cfs)
                    tup = tuple(int(x) for x in conj)
                    if tup < canonical:
                        canonical = tup
                    queue.append(conj)
        for ofs in orbit:
            known[ofs] = cid
        reps.append((canonical, tuple(int(g) for g in gens), len(orbit)))

    for fs, gen in cyclic_sorted:
        members = np.array(sorted(fs), dtype=np.int64)
        gens = () if len(fs) == 1 else (gen,)
        register(members, gens)

    i = 0
    while i < len(reps):
        members_t, gens, _ = reps[i]
        i += 1
        if len(members_t) == n:
            continue
        member_set = set(members_t)
        for gen, _partner_members in partners:
            if gen in member_set:
                continue
            joined = cay.closure(gens + (gen,))
            if len(joined) == n:
                if full_fs not in known:
                    register(joined, gens + (gen,))
                continue
            register(joined, gens + (gen,))

    order_index = sorted(range(len(reps)), key=lambda k: (len(reps[k][0]), reps[k][0]))
    out = []
    for new_index, old in enumerate(order_index):
        members_t, _gens, orbit_len = reps[old]
        members = np.array(members_t, dtype=np.int64)
        gens = _small_generating_set(cay, members)
        sub = Subgroup(group, members, gens)
        if len(members) < n and not cay.subgroup_order_check(members):
            raise RuntimeError("enumerated subgroup is not closed")
        out.append(
            SubgroupClass(
                representative=sub,
                order=len(members_t),
                class_length=orbit_len,
                abelianization=sub.abelianization,
                index=new_index,
            )
        )
    result = tuple(out)
    group._subgroup_classes = result
    return result


def normal_subgroups(group: PermGroup) -> tuple[SubgroupClass, ...]:
    return tuple(c for c in subgroup_classes(group) if c.class_length == 1)


def young_subgroup(group: PermGroup, composition: Sequence[int]) -> Subgroup:
    """Direct product of symmetric blocks on consecutive points of S_n."""
    if sum(composition) != group.degree:
        raise ValueError("composition must sum to the degree")
    gens = []
    start = 0
    for part in composition:
        for i in range(start, start + part - 1):
            gens.append(Permutation.from_cycles(group.degree, [(i, i + 1)]))
        start += part
    return Subgroup.from_generators(group, gens)
