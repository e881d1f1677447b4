"""Exact complex irreducible character tables of finite permutation groups.

The method: compute the table modulo a prime p = 1 (mod exponent) with
p > 2*sqrt(|G|) by splitting the class-algebra matrices into common
eigenvectors over F_p, recover degrees from the orthogonality relations,
then lift every value to the cyclotomic field Q(zeta_exponent) through the
eigenvalue-multiplicity discrete Fourier inversion.  The lifted table is
verified exactly (row and column orthogonality, degree sum) before being
returned, so a table object is always a certified table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclo import Cyclotomic, euler_phi, reduction_table
from .groups import PermGroup

__all__ = [
    "ClassFunction",
    "CharacterTable",
    "character_table",
    "inner_product",
    "regular_character",
]


# -- small modular linear algebra (deterministic) --------------------------------


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [[x % p for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace_mod(rows: list[list[int]], p: int, dim: int) -> list[list[int]]:
    red, pivots = _rref_mod(rows, p)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * dim
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-red[r][fc]) % p
        basis.append(vec)
    return basis


def _charpoly_mod(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial coefficients (low to high) over F_p."""
    k = len(A)
    H = [[x % p for x in row] for row in A]
    # reduce to upper Hessenberg form by similarity transforms
    for c in range(k - 2):
        pivot = next((r for r in range(c + 1, k) if H[r][c]), None)
        if pivot is None:
            continue
        if pivot != c + 1:
            H[c + 1], H[pivot] = H[pivot], H[c + 1]
            for row in H:
                row[c + 1], row[pivot] = row[pivot], row[c + 1]
        inv = pow(H[c + 1][c], -1, p)
        for r in range(c + 2, k):
            f = (H[r][c] * inv) % p
            if f:
                H[r] = [(x - f * y) % p for x, y in zip(H[r], H[c + 1])]
                for row in H:
                    row[c + 1] = (row[c + 1] + f * row[r]) % p
    # recurrence over leading principal minors of the Hessenberg matrix
    polys: list[list[int]] = [[1]]
    for m in range(1, k + 1):
        hmm = H[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [(-hmm * x) % p for x in prev] + [0]
        for i in range(len(prev)):
            cur[i + 1] = (cur[i + 1] + prev[i]) % p
        run = 1
        for i in range(1, m):
            run = (run * H[m - i][m - i - 1]) % p
            coeff = (H[m - 1 - i][m - 1] * run) % p
            if coeff:
                lower = polys[m - 1 - i]
                for j, x in enumerate(lower):
                    cur[j] = (cur[j] - coeff * x) % p
        polys.append(cur)
    return polys[k]


def _poly_roots_mod(coeffs: Sequence[int], p: int) -> list[int]:
    roots = []
    for a in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * a + c) % p
        if acc == 0:
            roots.append(a)
    return roots


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _dixon_prime(order: int, exponent: int) -> int:
    p = exponent + 1
    while True:
        if p * p > 4 * order and _is_prime(p):
            return p
        p += exponent


def _element_of_order_mod(p: int, e: int) -> int:
    factors = set()
    m = p - 1
    q = 2
    while q * q <= m:
        if m % q == 0:
            factors.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return pow(g, (p - 1) // e, p)
    raise RuntimeError("no primitive root found")


# -- class functions and tables -----------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    """Exact cyclotomic values, one per conjugacy class in canonical order."""

    group: PermGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes()):
            raise ValueError("value count does not match the class count")

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def degree_int(self) -> int:
        return self.values[0].as_integer()

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if other.group is not self.group:
            raise ValueError("group mismatch")
        return ClassFunction(
            self.group, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __repr__(self):
        vals = ", ".join(v.render() for v in self.values)
        return f"ClassFunction[{vals}]"


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyclotomic:
    """(1/|G|) * sum over classes of size * f * conj(g), exact."""
    if f.group is not g.group:
        raise ValueError("group mismatch in inner product")
    classes = f.group.conjugacy_classes()
    total = Cyclotomic.zero(1)
    for cls, a, b in zip(classes, f.values, g.values):
        total = total + (a * b.conjugate()) * cls.size
    return total / f.group.order


def regular_character(group: PermGroup) -> ClassFunction:
    e = group.exponent
    values = [Cyclotomic.zero(e) for _ in group.conjugacy_classes()]
    values[0] = Cyclotomic.rational(group.order, e)
    return ClassFunction(group, tuple(values))


class _TableInts:
    """Integer-vector view of a table in the reduced cyclotomic basis.

    Values are algebraic integers, so each is an integer vector of length
    phi(e); products reduce through precomputed integer matrices.  This is
    the exact fast path shared by table verification and the multiplicity
    scan.
    """

    def __init__(self, table: "CharacterTable"):
        self.e = table.conductor
        self.phi = euler_phi(self.e)
        self.R = np.array(reduction_table(self.e), dtype=np.int64)
        r = len(table.irreducibles)
        rc = len(table.group.conjugacy_classes())
        self.r, self.rc = r, rc
        V = np.zeros((r, rc, self.phi), dtype=np.int64)
        for i, chi in enumerate(table.irreducibles):
            for c, val in enumerate(chi.values):
                for j, coeff in enumerate(val.coeffs):
                    if coeff.denominator != 1:
                        raise RuntimeError("character value is not an algebraic integer")
                    V[i, c, j] = coeff.numerator
        self.V = V
        e, phi = self.e, self.phi
        idx = (np.arange(phi)[:, None] + np.arange(phi)[None, :]) % e
        self.T = self.R[idx]  # T[j, k] = reduction row of x^(j+k)
        conj_idx = (e - np.arange(phi)) % e
        self.conj_mat = self.R[conj_idx]  # row k -> reduction of x^(-k)
        Vc = np.einsum("icb,bk->ick", V, self.conj_mat)  # conjugated values
        # A[(i, :), (c, :)] = multiplication-by-conj(V[i, c]) matrix
        blocks = np.einsum("ick,jkl->iclj", Vc, self.T)
        self.A = blocks.transpose(0, 2, 1, 3).reshape(r * phi, rc * phi)
        self.max_abs_A = int(np.abs(self.A).max()) if self.A.size else 0

    def product_matvec(self, S: np.ndarray) -> np.ndarray:
        """A @ S with an overflow guard; S has shape (rc*phi, m)."""
        max_s = int(np.abs(S).max()) if S.size else 0
        bound = self.max_abs_A * max_s * S.shape[0]
        if bound < 2**62:
            return self.A @ S
        return (self.A.astype(object) @ S.astype(object)).astype(object)

    def verify(self, table: "CharacterTable") -> None:
        group = table.group
        sizes = np.array([c.size for c in group.conjugacy_classes()], dtype=np.int64)
        order = group.order
        r, rc, phi = self.r, self.rc, self.phi
        degrees = self.V[:, 0, 0]
        if (self.V[:, 0, 1:] != 0).any():
            raise RuntimeError("identity-column values are not rational integers")
        if int((degrees**2).sum()) != order:
            raise RuntimeError("degree squares do not sum to the group order")
        # row orthogonality: sum_c |C| chi_i(c) conj(chi_j(c)) = |G| delta_ij
        Aw = (
            self.A.reshape(r, phi, rc, phi) * sizes[None, None, :, None]
        ).reshape(r * phi, rc * phi)
        Y = Aw @ self.V.reshape(r, rc * phi).T  # (r*phi, r): column i = pairings with chi_i
        Y = Y.reshape(r, phi, r)
        for i in range(r):
            for j in range(r):
                want = order if i == j else 0
                if Y[j, 0, i] != want or (Y[j, 1:, i] != 0).any():
                    raise RuntimeError("row orthogonality failed")
        # column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |G|/|C_c|
        mm = self.A.reshape(r, phi, rc, phi).transpose(0, 2, 1, 3)  # (i, c', a, b)
        for cp in range(rc):
            x = np.einsum("iab,icb->ca", mm[:, cp], self.V)
            for c in range(rc):
                want = order // int(sizes[c]) if c == cp else 0
                if x[c, 0] != want or (x[c, 1:] != 0).any():
                    raise RuntimeError("column orthogonality failed")


@dataclass(frozen=True)
class CharacterTable:
    """Verified exact character table in canonical row/column order."""

    group: PermGroup
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    conductor: int
    prime: int
    _ints: "_TableInts | None" = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.irreducibles)

    def ints(self) -> "_TableInts":
        ints = object.__getattribute__(self, "_ints")
        if ints is None:
            ints = _TableInts(self)
            object.__setattr__(self, "_ints", ints)
        return ints


def character_table(group: PermGroup) -> CharacterTable:
    cached = getattr(group, "_character_table", None)
    if cached is not None:
        return cached
    table = _dixon_schneider(group)
    group._character_table = table
    return table


def _dixon_schneider(group: PermGroup) -> CharacterTable:
    elems = group.elements
    index = group._element_index
    classes = group.conjugacy_classes()
    members = group.class_members
    class_of = group.class_of
    r = len(classes)
    order = group.order
    e = group.exponent
    p = _dixon_prime(order, e)
    omega = _element_of_order_mod(p, e)

    reps = [c.representative for c in classes]
    inv_class = [class_of[index[rep.inverse().images]] for rep in reps]
    sizes = [c.size for c in classes]

    matrices: dict[int, np.ndarray] = {}

    def class_matrix(i: int) -> np.ndarray:
        """M with M[k][j] = #{x in C_i : x^(-1) z_k in C_j} acting on row vectors."""
        if i not in matrices:
            A = np.zeros((r, r), dtype=np.int64)
            invs = [elems[x].inverse() for x in members[i]]
            for k, zk in enumerate(reps):
                for xi in invs:
                    j = class_of[index[(xi * zk).images]]
                    A[j][k] += 1
            matrices[i] = A.T % p
        return matrices[i]

    # split the common eigenvectors of the class matrices over F_p
    spaces: list[list[list[int]]] = [
        [[1 if a == b else 0 for b in range(r)] for a in range(r)]
    ]
    for i in range(r):
        if all(len(b) == 1 for b in spaces):
            break
        M = class_matrix(i)
        new_spaces: list[list[list[int]]] = []
        for basis in spaces:
            k = len(basis)
            if k == 1:
                new_spaces.append(basis)
                continue
            B = np.array(basis, dtype=np.int64)
            BM = (B @ M) % p
            red, pivots = _rref_mod([row.tolist() for row in B], p)
            if red != [list(map(int, row)) for row in B]:
                raise RuntimeError("basis not in reduced form")
            A_res = [[int(BM[u][pc]) for pc in pivots] for u in range(k)]
            eigs = sorted(_poly_roots_mod(_charpoly_mod(A_res, p), p))
            if len(eigs) == 1:
                new_spaces.append(basis)
                continue
            covered = 0
            for a in eigs:
                # row vectors act on the right, so the eigen coordinates are the
                # kernel of the transposed restricted action
                shifted = [
                    [(A_res[v][u] - (a if u == v else 0)) % p for v in range(k)]
                    for u in range(k)
                ]
                kern = _nullspace_mod(shifted, p, k)
                if not kern:
                    continue
                lifted = [
                    [
                        sum(vec[u] * int(B[u][c]) for u in range(k)) % p
                        for c in range(r)
                    ]
                    for vec in kern
                ]
                red_rows, _ = _rref_mod(lifted, p)
                covered += len(red_rows)
                new_spaces.append(red_rows)
            if covered != k:
                raise RuntimeError("eigenspace split lost dimensions")
        spaces = new_spaces
    if not all(len(b) == 1 for b in spaces):
        raise RuntimeError("class matrices failed to split the group algebra")

    # central characters, normalized at the identity class
    centrals = []
    for basis in spaces:
        v = basis[0]
        if v[0] == 0:
            raise RuntimeError("central character vanishes at the identity class")
        inv0 = pow(v[0], -1, p)
        centrals.append([(x * inv0) % p for x in v])

    # degrees from sum_j w_j w_(j*) / |C_j| = |G| / d^2
    max_deg = math.isqrt(order)
    mod_rows = []
    degrees_mod = []
    for w in centrals:
        t = 0
        for j in range(r):
            t = (t + w[j] * w[inv_class[j]] * pow(sizes[j], -1, p)) % p
        if t == 0:
            raise RuntimeError("degenerate central character")
        dsq = (order * pow(t, -1, p)) % p
        d = next(
            (x for x in range(1, max_deg + 1) if (x * x) % p == dsq), None
        )
        if d is None:
            raise RuntimeError("no integer degree matches the orthogonality relation")
        degrees_mod.append(d)
        mod_rows.append(
            [(d * w[j] * pow(sizes[j], -1, p)) % p for j in range(r)]
        )

    # power maps: class of rep_j^s for s mod e
    power_map = []
    for rep in reps:
        row = []
        x = group.identity()
        for _ in range(e):
            row.append(class_of[index[x.images]])
            x = x * rep
        power_map.append(row)

    omega_pow = [1] * e
    for s in range(1, e):
        omega_pow[s] = (omega_pow[s - 1] * omega) % p
    inv_e = pow(e, -1, p)

    # c_t = (1/e) sum_s chi(rep^s) omega^(-st) mod p is the multiplicity of the
    # eigenvalue zeta^t, a nonnegative integer below p; batch the inverse DFT.
    X = np.array(mod_rows, dtype=np.int64)  # (r, r) mod-p values by class
    PM = np.array(power_map, dtype=np.int64)  # (r, e) class of rep_j^s
    F = X[:, PM]  # (i, j, s)
    op = np.array(omega_pow, dtype=np.int64)
    if e <= 2048:
        W = op[(-np.arange(e)[:, None] * np.arange(e)[None, :]) % e]  # W[t, s]
        C = np.einsum("ts,ijs->ijt", W % p, F % p) % p
    else:
        C = np.zeros((r, r, e), dtype=np.int64)
        for t in range(e):
            C[:, :, t] = (F * op[(-np.arange(e) * t) % e][None, None, :]).sum(axis=2) % p
    C = (C * inv_e) % p

    rows = []
    for i, d in enumerate(degrees_mod):
        values = []
        for j in range(r):
            counts: dict[int, int] = {}
            total = 0
            for t in np.flatnonzero(C[i, j]):
                c_t = int(C[i, j, t])
                if c_t > d:
                    raise RuntimeError("eigenvalue multiplicity exceeds the degree")
                counts[int(t)] = c_t
                total += c_t
            if total != d:
                raise RuntimeError("eigenvalue multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_exponent_counts(e, counts))
        rows.append((d, tuple(values)))

    one = Cyclotomic.one(e)
    trivial = [row for row in rows if all(v == one for v in row[1])]
    if len(trivial) != 1:
        raise RuntimeError("trivial character not found exactly once")
    rest = sorted(
        (row for row in rows if row is not trivial[0]),
        key=lambda row: (row[0], tuple(v.sort_key() for v in row[1])),
    )
    ordered = trivial + rest
    table = CharacterTable(
        group=group,
        irreducibles=tuple(ClassFunction(group, vals) for _, vals in ordered),
        degrees=tuple(d for d, _ in ordered),
        conductor=e,
        prime=p,
    )
    table.ints().verify(table)
    return table
