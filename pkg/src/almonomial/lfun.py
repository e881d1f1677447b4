"""Order-of-vanishing constraints from induced-from-linear characters.

Attach to each irreducible an unknown integer order of vanishing at one
abstract point (negative entries are poles).  Every induced-from-linear
character is a product of irreducible factors known to be holomorphic
there, so its multiplicity vector d imposes sum(d * n) >= 0.  The search
asks whether some vector inside a box can carry a pole while at most one
coordinate is a zero and every constraint still holds; for an almost
monomial group this must be impossible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .charops import multiplicity_scan
from .groups import PermGroup

__all__ = [
    "DEFAULT_BOUND",
    "DEFAULT_BUDGET",
    "SearchBudgetExceeded",
    "ConstraintSystem",
    "build_constraints",
    "pattern_holomorphic",
    "find_pole_pattern",
    "poles_force_two_zeros",
    "enumerate_satisfying",
]

DEFAULT_BOUND = 3
DEFAULT_BUDGET = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstraintSystem:
    """Deduplicated constituent-multiplicity rows for one group.

    The degree row (from the trivial subgroup with its trivial character,
    i.e. the regular character) is always present and flagged; it encodes
    the holomorphic product with the irreducible degrees as exponents.
    """

    rows: tuple[tuple[int, ...], ...]
    degree_row_index: int
    irreducible_count: int
    group_name: str | None = None

    def __post_init__(self):
        degrees = self.rows[self.degree_row_index]
        for row in self.rows:
            if len(row) != self.irreducible_count:
                raise ValueError("constraint row has the wrong length")
            if any(x < 0 for x in row):
                raise ValueError("constraint rows must be nonnegative")
        if all(x == 0 for x in degrees):
            raise ValueError("degree row cannot be zero")


def build_constraints(group: PermGroup) -> ConstraintSystem:
    """One row per (subgroup class, linear character), deduplicated."""
    scan = multiplicity_scan(group)
    seen: dict[tuple[int, ...], int] = {}
    rows: list[tuple[int, ...]] = []
    for h_idx in range(len(scan.classes)):
        mat = scan.vectors(h_idx)
        for k in range(mat.shape[1]):
            row = tuple(int(x) for x in mat[:, k])
            if row not in seen:
                seen[row] = len(rows)
                rows.append(row)
    degrees = tuple(int(d) for d in scan.degree_vector())
    if degrees not in seen:
        raise RuntimeError("degree row missing: trivial subgroup was not scanned")
    return ConstraintSystem(
        rows=tuple(rows),
        degree_row_index=seen[degrees],
        irreducible_count=len(degrees),
        group_name=group.name,
    )


def pattern_holomorphic(orders: Sequence[int], system: ConstraintSystem) -> bool:
    """Every constrained product has nonnegative total vanishing order."""
    orders = tuple(int(x) for x in orders)
    if len(orders) != system.irreducible_count:
        raise ValueError("order vector has the wrong length")
    return all(
        sum(d * n for d, n in zip(row, orders)) >= 0 for row in system.rows
    )


def find_pole_pattern(
    system: ConstraintSystem,
    bound: int = DEFAULT_BOUND,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, ...] | None:
    """Search the box [-bound, bound]^r for a constraint-satisfying vector
    with at least one pole and at most one zero coordinate.

    The search is a complete depth-first scan in lexicographic order with a
    sound interval prune (a subtree is dropped only when no completion can
    repair an already-driven-negative row), so the first vector found is the
    lexicographic minimum and an empty result is exhaustive.  Visited nodes
    are counted against the budget.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    r = system.irreducible_count
    rows = np.array(system.rows, dtype=np.int64)
    m = len(rows)
    # max future coefficient per row over suffix positions
    maxtail = np.zeros((m, r + 1), dtype=np.int64)
    for i in range(r - 1, -1, -1):
        maxtail[:, i] = np.maximum(maxtail[:, i + 1], rows[:, i])

    nodes = 0
    assignment = [0] * r

    def dfs(i: int, sums: np.ndarray, pos_used: bool, neg_used: bool):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(
                f"search visited more than {budget} nodes"
            )
        if i == r:
            if neg_used and (sums >= 0).all():
                return tuple(assignment)
            return None
        for v in range(-bound, bound + 1):
            if v > 0 and pos_used:
                break
            new_sums = sums + v * rows[:, i]
            pos_after = pos_used or v > 0
            if pos_after:
                # remaining coordinates are nonpositive; sums cannot grow
                ub = new_sums
            else:
                ub = new_sums + bound * maxtail[:, i + 1]
            if (ub < 0).any():
                continue
            assignment[i] = v
            found = dfs(i + 1, new_sums, pos_after, neg_used or v < 0)
            if found is not None:
                return found
            assignment[i] = 0
        return None

    return dfs(0, np.zeros(m, dtype=np.int64), False, False)


def poles_force_two_zeros(
    system: ConstraintSystem,
    bound: int = DEFAULT_BOUND,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True when every in-box constraint-satisfying vector with a pole has at
    least two distinct zero coordinates (the search above finds nothing)."""
    return find_pole_pattern(system, bound, budget) is None


def enumerate_satisfying(
    system: ConstraintSystem,
    bound: int,
    *,
    require_pole: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """Plain box enumeration of constraint-satisfying vectors (small r only)."""
    r = system.irreducible_count
    count = 0
    for vec in itertools.product(range(-bound, bound + 1), repeat=r):
        count += 1
        if count > budget:
            raise SearchBudgetExceeded(f"enumeration exceeded {budget} vectors")
        if require_pole and not any(x < 0 for x in vec):
            continue
        if pattern_holomorphic(vec, system):
            yield vec
