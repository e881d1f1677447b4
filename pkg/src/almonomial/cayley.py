"""Dense index-level multiplication tables for materialized groups.

Elements are identified with their position in the group's sorted element
list, so every set-level computation (subgroup closures, conjugation,
commutators) becomes integer array work.  The table for a group of order n
costs n^2 entries, which is the price of desk-scale simplicity.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Cayley"]


class Cayley:
    def __init__(self, group):
        self.group = group
        elems = group.elements
        n = len(elems)
        self.n = n
        degree = group.degree
        # big-endian rows compare like image tuples, so searchsorted works
        E = np.array([p.images for p in elems], dtype=">i4")
        self._row_bytes = np.ascontiguousarray(E).view(
            np.dtype((np.void, E.shape[1] * 4))
        ).ravel()
        dtype = np.int16 if n < 2**15 else np.int32
        self.dtype = dtype

        def lookup(rows: np.ndarray) -> np.ndarray:
            enc = np.ascontiguousarray(rows.astype(">i4")).view(
                np.dtype((np.void, degree * 4))
            ).ravel()
            idx = np.searchsorted(self._row_bytes, enc)
            if not np.array_equal(self._row_bytes[idx], enc):
                raise RuntimeError("product left the element set")
            return idx

        E_plain = np.array([p.images for p in elems], dtype=np.int32)
        # left-multiplication index maps for the generators
        gen_idx = []
        left = []
        for g in group.generators:
            gimg = np.array(g.images, dtype=np.int32)
            rows = gimg[E_plain]  # images of g o x for every x
            left.append(lookup(rows).astype(dtype))
            gen_idx.append(int(lookup(np.array(g.images, dtype=np.int32)[None, :])[0]))
        self.generator_indices = tuple(gen_idx)
        self.identity_index = int(
            lookup(np.arange(degree, dtype=np.int32)[None, :])[0]
        )

        # mul[a, b] = index of elems[a] o elems[b]; filled by BFS along
        # left multiplication: row(g o a) = left_g[row(a)].
        mul = np.full((n, n), -1, dtype=dtype)
        mul[self.identity_index] = np.arange(n, dtype=dtype)
        done = np.zeros(n, dtype=bool)
        done[self.identity_index] = True
        frontier = [self.identity_index]
        while frontier:
            new = []
            for a in frontier:
                row = mul[a]
                for lg in left:
                    b = int(lg[a])
                    if not done[b]:
                        mul[b] = lg[row]
                        done[b] = True
                        new.append(b)
            frontier = new
        if not done.all():
            raise RuntimeError("multiplication table BFS did not cover the group")
        self.mul = mul

        inv_rows = np.empty_like(E_plain)
        ar = np.arange(degree, dtype=np.int32)
        for i in range(n):
            inv_rows[i, E_plain[i]] = ar
        self.inv = lookup(inv_rows).astype(dtype)

        self.order_of = np.array([p.order() for p in elems], dtype=np.int64)
        classes, class_of, members = group._class_data
        self.class_of = np.array(class_of, dtype=np.int64)
        self.class_members = tuple(np.array(m, dtype=np.int64) for m in members)
        self.class_sizes = np.array([c.size for c in classes], dtype=np.int64)

    # -- subgroup-level helpers ------------------------------------------------

    def closure(self, gens, *, early_full: bool = True) -> np.ndarray:
        """Sorted element indices of the subgroup generated by `gens`.

        With early_full, a closure that grows past half the group is the whole
        group by Lagrange and is returned immediately.
        """
        n = self.n
        mask = np.zeros(n, dtype=bool)
        mask[self.identity_index] = True
        gens = np.asarray(sorted(set(int(g) for g in gens)), dtype=np.int64)
        if gens.size == 0:
            return np.array([self.identity_index], dtype=np.int64)
        frontier = gens[~mask[gens]]
        mask[frontier] = True
        count = 1 + frontier.size
        while frontier.size:
            prods = self.mul[np.ix_(frontier, gens)].ravel().astype(np.int64)
            new = np.unique(prods[~mask[prods]])
            mask[new] = True
            count += new.size
            frontier = new
            if early_full and count > n // 2:
                return np.arange(n, dtype=np.int64)
        return np.flatnonzero(mask).astype(np.int64)

    def conjugate_set(self, members: np.ndarray, g: int) -> np.ndarray:
        """Sorted indices of g . members . g^-1."""
        t = self.mul[g][members]
        out = self.mul[t, int(self.inv[g])]
        return np.sort(out.astype(np.int64))

    def conjugate_element(self, x: int, g: int) -> int:
        return int(self.mul[int(self.mul[g, x]), int(self.inv[g])])

    def commutator(self, x: int, y: int) -> int:
        # x^-1 y^-1 x y
        ix, iy = int(self.inv[x]), int(self.inv[y])
        return int(self.mul[int(self.mul[ix, iy]), int(self.mul[x, y])])

    def normal_closure(self, seed, conjugators) -> np.ndarray:
        """Smallest subgroup containing `seed` and closed under conjugation
        by the given conjugator elements (typically subgroup generators)."""
        gens = sorted(set(int(s) for s in seed))
        if not gens:
            return np.array([self.identity_index], dtype=np.int64)
        while True:
            sub = self.closure(gens, early_full=False)
            member = np.zeros(self.n, dtype=bool)
            member[sub] = True
            added = False
            for g in conjugators:
                conj = self.conjugate_set(np.array(gens, dtype=np.int64), int(g))
                for c in conj.tolist():
                    if not member[c]:
                        gens.append(c)
                        added = True
            if not added:
                return sub

    def commutator_subgroup(self, gens) -> np.ndarray:
        """Derived subgroup of the subgroup generated by `gens`."""
        gens = [int(g) for g in gens]
        seed = set()
        for x in gens:
            for y in gens:
                c = self.commutator(x, y)
                if c != self.identity_index:
                    seed.add(c)
        return self.normal_closure(sorted(seed), gens)

    def power(self, a: int, k: int) -> int:
        result = self.identity_index
        x = int(a)
        while k:
            if k & 1:
                result = int(self.mul[result, x])
            x = int(self.mul[x, x])
            k >>= 1
        return result

    def subgroup_order_check(self, members: np.ndarray) -> bool:
        """Closure sanity: the set is closed under the table product."""
        prods = self.mul[np.ix_(members, members)].ravel()
        return bool(np.isin(prods, members).all())
