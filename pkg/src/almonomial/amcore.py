"""Deciding almost monomiality (and monomiality) of a finite group.

For every pair of a subgroup class H and a linear character lambda of H we
take the constituent support of Ind lambda; for j in the support and k
outside it, the ordered pair (j, k) is covered.  The group is almost
monomial when every off-diagonal pair is covered.  Monomiality asks instead
that each irreducible equals some induced linear character exactly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .chartab import CharacterTable, character_table
from .charops import MultiplicityScan, constituents, induce, multiplicity_scan
from .groups import PermGroup
from .subgroups import SubgroupClass, linear_characters, subgroup_classes

__all__ = [
    "CoverageMatrix",
    "AmVerdict",
    "coverage_matrix",
    "is_almost_monomial",
    "is_monomial",
    "verify_witnesses",
]


@dataclass(frozen=True)
class CoverageMatrix:
    """Boolean pair-coverage matrix with one witness per covered pair.

    matrix[j][k] is True when some induced-from-linear character contains
    chi_j and misses chi_k; the diagonal is True by convention.  witnesses
    maps each covered off-diagonal (j, k) to the (subgroup class index,
    linear character index) pair that first covered it in scan order.
    """

    size: int
    matrix: tuple[tuple[bool, ...], ...]
    witnesses: dict

    @property
    def all_covered(self) -> bool:
        return all(all(row) for row in self.matrix)

    def failing_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (j, k)
            for j in range(self.size)
            for k in range(self.size)
            if not self.matrix[j][k]
        )


@dataclass(frozen=True)
class AmVerdict:
    group: PermGroup
    almost_monomial: bool
    monomial: bool
    matrix: CoverageMatrix
    failing_pairs: tuple[tuple[int, int], ...]
    monomial_witnesses: dict


def _scan_class(scan: MultiplicityScan, h_idx: int) -> np.ndarray:
    return scan.vectors(h_idx)


def coverage_matrix(
    group: PermGroup,
    table: CharacterTable | None = None,
    classes: tuple[SubgroupClass, ...] | None = None,
    *,
    fast: bool = False,
    threads: int = 1,
) -> CoverageMatrix:
    verdict = _analyze(group, fast=fast, threads=threads)
    return verdict.matrix


def is_almost_monomial(group: PermGroup, *, fast: bool = False, threads: int = 1) -> AmVerdict:
    return _analyze(group, fast=fast, threads=threads)


def is_monomial(group: PermGroup) -> bool:
    return _analyze(group).monomial


def _analyze(group: PermGroup, *, fast: bool = False, threads: int = 1) -> AmVerdict:
    cache_key = "_am_verdict"
    cached = getattr(group, cache_key, None)
    if cached is not None and not fast:
        return cached
    scan = multiplicity_scan(group)
    table = scan.table
    classes = scan.classes
    r = table.size
    degrees = scan.degree_vector()
    matrix = np.eye(r, dtype=bool)
    witnesses: dict = {}
    monomial_hits: dict = {}

    class_order = range(len(classes))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(scan.vectors, class_order))

    covered_all = False
    for h_idx in class_order:
        if fast and covered_all and len(monomial_hits) == r:
            break
        index = group.order // classes[h_idx].order
        if fast and covered_all and index not in set(degrees.tolist()):
            continue
        mat = scan.vectors(h_idx)
        for k in range(mat.shape[1]):
            vec = mat[:, k]
            support = np.flatnonzero(vec)
            if support.size == 0:
                raise RuntimeError("induced character with empty support")
            if (
                support.size == 1
                and vec[support[0]] == 1
                and degrees[support[0]] == index
                and int(support[0]) not in monomial_hits
            ):
                monomial_hits[int(support[0])] = (h_idx, k)
            out_mask = np.ones(r, dtype=bool)
            out_mask[support] = False
            for j in support:
                newly = out_mask & ~matrix[j]
                if newly.any():
                    for kk in np.flatnonzero(newly):
                        witnesses[(int(j), int(kk))] = (h_idx, k)
                    matrix[j] |= out_mask
        if fast and not covered_all and matrix.all():
            covered_all = True

    monomial = len(monomial_hits) == r
    if monomial:
        # re-verify by the direct definition: exact equality of class functions
        for i, (h_idx, k) in sorted(monomial_hits.items()):
            lam = linear_characters(classes[h_idx])[k]
            ind = induce(lam)
            if tuple(ind.values.values) != tuple(table.irreducibles[i].values):
                raise RuntimeError("monomial witness failed value-level equality")

    cov = CoverageMatrix(
        size=r,
        matrix=tuple(tuple(bool(x) for x in row) for row in matrix),
        witnesses=witnesses,
    )
    failing = cov.failing_pairs()
    verdict = AmVerdict(
        group=group,
        almost_monomial=not failing,
        monomial=monomial,
        matrix=cov,
        failing_pairs=failing,
        monomial_witnesses=monomial_hits,
    )
    if not fast:
        setattr(group, cache_key, verdict)
    return verdict


def verify_witnesses(group: PermGroup, cov: CoverageMatrix, sample: int | None = None, seed: int = 0) -> int:
    """Recompute each stored witness with the exact cyclotomic path.

    Returns the number of witnesses checked; raises on any mismatch.
    """
    table = character_table(group)
    classes = subgroup_classes(group)
    items = sorted(cov.witnesses.items())
    if sample is not None and sample < len(items):
        rng = np.random.default_rng(seed)
        chosen = rng.choice(len(items), size=sample, replace=False)
        items = [items[i] for i in sorted(chosen)]
    cache: dict = {}
    for (j, k), (h_idx, lam_idx) in items:
        key = (h_idx, lam_idx)
        if key not in cache:
            lam = linear_characters(classes[h_idx])[lam_idx]
            cache[key] = constituents(induce(lam).values, table)
        mults = cache[key]
        if not (mults[j] > 0 and mults[k] == 0):
            raise RuntimeError(
                f"witness for pair ({j}, {k}) fails re-verification: {mults}"
            )
    return len(items)
