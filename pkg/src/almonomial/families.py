"""Builtin group families: symmetric, alternating, cyclic, dihedral,
SL2(q)/GL2(q) acting on the nonzero vectors of F_q^2, and a few presets.

All constructors return deterministic generator lists, so the resulting
groups (and everything derived from them) are reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from .groups import DEFAULT_CAP, CapExceededError, PermGroup, group_from_generators
from .perm import Permutation

__all__ = ["builtin", "FAMILIES"]


# -- small finite fields -------------------------------------------------------


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1  # prime
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def _poly_mod(num: tuple[int, ...], den: tuple[int, ...], p: int) -> tuple[int, ...]:
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = (num[i] * inv_lead) % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def _monic_polys(degree: int, p: int):
    def rec(coeffs):
        if len(coeffs) == degree:
            yield tuple(coeffs) + (1,)
            return
        for c in range(p):
            yield from rec(coeffs + [c])

    yield from rec([])


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _monic_polys(k, p):
        ok = True
        for d in range(1, k // 2 + 1):
            for div in _monic_polys(d, p):
                if _poly_mod(cand, div, p) == (0,):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p}")


class _GF:
    """GF(p^k) with elements encoded 0..q-1 as base-p digit vectors."""

    def __init__(self, q: int):
        p, k = _factor_prime_power(q)
        self.q, self.p, self.k = q, p, k
        self.modulus = _find_irreducible(p, k) if k > 1 else None

        def decode(a):
            digits = []
            for _ in range(k):
                digits.append(a % p)
                a //= p
            return digits

        def encode(digits):
            a = 0
            for d in reversed(digits):
                a = a * p + d
            return a

        self.add = [[0] * q for _ in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = decode(a)
            for b in range(q):
                db = decode(b)
                self.add[a][b] = encode([(x + y) % p for x, y in zip(da, db)])
                if k == 1:
                    self.mul[a][b] = (a * b) % p
                else:
                    conv = [0] * (2 * k - 1)
                    for i, x in enumerate(da):
                        if x:
                            for j, y in enumerate(db):
                                conv[i + j] = (conv[i + j] + x * y) % p
                    rem = _poly_mod(tuple(conv), self.modulus, p)
                    self.mul[a][b] = encode(list(rem) + [0] * (k - len(rem)))
        self.neg = [self.add[a].index(0) for a in range(q)]

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul[x][a]
            n += 1
        return n

    def primitive_element(self) -> int:
        for a in range(1, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise RuntimeError("no primitive element found")

    def basis(self) -> list[int]:
        """The power basis 1, x, .., x^(k-1) of GF(p^k) over F_p."""
        return [self.p**i if self.k > 1 else 1 for i in range(self.k)]


@lru_cache(maxsize=None)
def _gf(q: int) -> _GF:
    return _GF(q)


def _matrix_group(q: int, matrices, name: str, cap: int) -> PermGroup:
    """Permutation action of 2x2 matrices on the nonzero vectors of F_q^2."""
    gf = _gf(q)
    points = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(points)}
    gens = []
    for m00, m01, m10, m11 in matrices:
        images = []
        for a, b in points:
            x = gf.add[gf.mul[m00][a]][gf.mul[m01][b]]
            y = gf.add[gf.mul[m10][a]][gf.mul[m11][b]]
            images.append(index[(x, y)])
        gens.append(Permutation(images))
    return PermGroup(len(points), gens, name=name, cap=cap)


def _sl2_matrices(q: int) -> list[tuple[int, int, int, int]]:
    gf = _gf(q)
    mats = []
    for b in gf.basis():
        mats.append((1, b, 0, 1))  # upper transvection
        mats.append((1, 0, b, 1))  # lower transvection
    return mats


def _gl2_matrices(q: int) -> list[tuple[int, int, int, int]]:
    mats = _sl2_matrices(q)
    if q > 2:
        g = _gf(q).primitive_element()
        mats.append((g, 0, 0, 1))
    return mats


# -- standard families -----------------------------------------------------------


def _symmetric(n: int, cap: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group parameter must be >= 1")
    if n == 1:
        return PermGroup(1, (), name="S1", cap=cap)
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return PermGroup(n, gens, name=f"S{n}", cap=cap)


def _alternating(n: int, cap: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating group parameter must be >= 1")
    if n <= 2:
        return PermGroup(max(n, 1), (), name=f"A{n}", cap=cap)
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        if n % 2:
            gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
        else:
            gens.append(Permutation.from_cycles(n, [tuple(range(1, n))]))
    return PermGroup(n, gens, name=f"A{n}", cap=cap)


def _cyclic(n: int, cap: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group parameter must be >= 1")
    if n == 1:
        return PermGroup(1, (), name="C1", cap=cap)
    return PermGroup(
        n, [Permutation.from_cycles(n, [tuple(range(n))])], name=f"C{n}", cap=cap
    )


def _dihedral(n: int, cap: int) -> PermGroup:
    """Symmetries of the regular n-gon, order 2n (degenerate below n = 3)."""
    if n < 1:
        raise ValueError("dihedral group parameter must be >= 1")
    if n == 1:
        return PermGroup(2, [Permutation.from_cycles(2, [(0, 1)])], name="D1", cap=cap)
    if n == 2:
        return PermGroup(
            4,
            [
                Permutation.from_cycles(4, [(0, 1)]),
                Permutation.from_cycles(4, [(2, 3)]),
            ],
            name="D2",
            cap=cap,
        )
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    refl = Permutation([(n - i) % n for i in range(n)])
    return PermGroup(n, [rot, refl], name=f"D{n}", cap=cap)


def _klein(cap: int) -> PermGroup:
    return PermGroup(
        4,
        [
            Permutation.from_cycles(4, [(0, 1)]),
            Permutation.from_cycles(4, [(2, 3)]),
        ],
        name="V4",
        cap=cap,
    )


def _quaternion(cap: int) -> PermGroup:
    # Left multiplication on the unit quaternions 1,-1,i,-i,j,-j,k,-k.
    li = Permutation([2, 3, 1, 0, 6, 7, 5, 4])
    lj = Permutation([4, 5, 7, 6, 1, 0, 2, 3])
    return PermGroup(8, [li, lj], name="Q8", cap=cap)


def _sl2(q: int, cap: int) -> PermGroup:
    group = _matrix_group(q, _sl2_matrices(q), f"SL2({q})", cap)
    expected = q * (q * q - 1)
    if group.order != expected:
        raise RuntimeError(f"SL2({q}) order check failed: {group.order} != {expected}")
    return group


def _gl2(q: int, cap: int) -> PermGroup:
    group = _matrix_group(q, _gl2_matrices(q), f"GL2({q})", cap)
    expected = (q * q - 1) * (q * q - q)
    if group.order != expected:
        raise RuntimeError(f"GL2({q}) order check failed: {group.order} != {expected}")
    return group


FAMILIES = {
    "symmetric": _symmetric,
    "alternating": _alternating,
    "cyclic": _cyclic,
    "dihedral": _dihedral,
    "SL2": _sl2,
    "GL2": _gl2,
}

_PRESETS = {
    "trivial": lambda cap: PermGroup(1, (), name="C1", cap=cap),
    "klein": _klein,
    "quaternion": _quaternion,
}


def builtin(family: str, parameter: int | None = None, *, cap: int = DEFAULT_CAP) -> PermGroup:
    """Construct a builtin group; raises CapExceededError above the order cap."""
    if family in _PRESETS:
        if parameter is not None:
            raise ValueError(f"preset {family!r} takes no parameter")
        group = _PRESETS[family](cap)
    else:
        ctor = FAMILIES.get(family)
        if ctor is None:
            raise ValueError(
                f"unknown family {family!r}; expected one of "
                f"{sorted(FAMILIES) + sorted(_PRESETS)}"
            )
        if parameter is None:
            raise ValueError(f"family {family!r} requires a parameter")
        group = ctor(parameter, cap)
    if group.order > cap:
        raise CapExceededError(group.order, cap)
    return group
