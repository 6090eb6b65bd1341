"""Computations around automorphisms of order 58 in a [120,60,24] code.

Covers the enumeration of self-dual [8,4,4] codes, the explicit order-58
permutation, the dimension of g-fixed vectors in the pullback of each [8,4,4]
code, and a search for bordered double-circulant [60,30,12] codes.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from numba import njit

from . import _kernels
from .codes import (LinearCode, equivalent_small, is_doubly_even, is_self_dual, is_singly_even,
                    min_distance, permute, weight_enumerator)
from .constructions import bordered_double_circulant, circulant_shift, extended_hamming8
from .gf2 import BitMatrix, left_kernel, to_words
from .modrep import ModuleDecomposition, factor_x_p_minus_1, reciprocal_pairing, s_of_p
from .perms import Perm, aut_type, is_automorphism, orbit_lift, orbits, order, power


@dataclass
class SearchOutcome:
    examined: int = 0
    survivors: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    complete: bool = True
    elapsed: float = 0.0

    def add(self, code: LinearCode, cert) -> bool:
        """Add unless an equal code (same canonical form) is present."""
        if code in self._seen:
            return False
        self._seen.add(code)
        self.survivors.append(code)
        self.certificates.append(cert)
        return True

    def __post_init__(self):
        self._seen = set(self.survivors)


# -- self-dual [8,4,4] codes ----------------------------------------------------


def _systematic_selfdual_8() -> tuple[int, list[LinearCode]]:
    examined = 0
    out = []
    for bits in range(1 << 16):
        examined += 1
        a = [(bits >> (4 * i)) & 0xF for i in range(4)]
        if any((a[i] & a[j]).bit_count() % 2 != (i == j) for i in range(4) for j in range(i, 4)):
            continue
        out.append(LinearCode.from_rows(8, [(1 << i) | (a[i] << 4) for i in range(4)]))
    return examined, out


def _close_under(codes: list[LinearCode], gens: list[Perm]) -> list[LinearCode]:
    seen = set(codes)
    todo = list(codes)
    while todo:
        c = todo.pop()
        for g in gens:
            d = permute(c, g)
            if d not in seen:
                seen.add(d)
                todo.append(d)
    return sorted(seen, key=lambda c: c.rows)


def enumerate_selfdual_8_4_4() -> SearchOutcome:
    """All self-dual [8,4,4] codes, each with an equivalence to the extended Hamming code."""
    t0 = time.perf_counter()
    examined, systematic = _systematic_selfdual_8()
    s8 = [Perm.from_cycles(8, [(1, 2)]), Perm.from_cycles(8, [tuple(range(1, 9))])]
    closed = _close_under(systematic, s8)
    ham = extended_hamming8()
    out = SearchOutcome(examined=examined)
    for c in closed:
        if min_distance(c) != 4:
            continue
        out.add(c, {"equivalence_to_hamming": equivalent_small(ham, c)})
    out.elapsed = time.perf_counter() - t0
    return out


# -- the order-58 permutation -------------------------------------------------------


def build_g58(offset: int = 15) -> Perm:
    """Order-58 permutation of 120 points with g^2 = (1..29)(30..58)(59..87)(88..116).

    ``offset`` aligns the two 29-cycles of each pair: g sends point i of the
    first cycle to point i + offset of the second.  With offset 15 the 29th
    power is (1,30)(2,31)...(59,88)...(117,118)(119,120); offset 0 gives the
    plain interleaving (1,30,2,31,...).
    """
    img = list(range(120))
    for base in (0, 58):
        for i in range(29):
            img[base + i] = base + 29 + (i + offset) % 29
            img[base + 29 + i] = base + (i + 1 - offset) % 29
    img[116], img[117] = 117, 116
    img[118], img[119] = 119, 118
    return Perm(tuple(img))


def reference_g58_square() -> Perm:
    return Perm.from_cycles(120, [range(1, 30), range(30, 59), range(59, 88), range(88, 117)])


def fixed_dim_in(c: LinearCode, s: Perm) -> int:
    """dim of {v in c : v^s = v}; c need not be s-invariant."""
    diffs = BitMatrix(c.n, tuple(r ^ s.apply(r) for r in c.rows))
    return left_kernel(diffs).nrows


def pullback_fixed_dim(a: LinearCode, g: Perm) -> int:
    """dim of the g-fixed part of the lift of ``a`` through the g^2-orbit projection."""
    if a.n != 8:
        raise ValueError(f"expected a code of length 8, got {a.n}")
    if g.n != 120 or order(g) != 58:
        raise ValueError("g must be an order-58 permutation of 120 points")
    q = power(g, 2)
    if len(orbits(q)) != 8:
        raise ValueError("g^2 must have exactly 8 orbits")
    return fixed_dim_in(orbit_lift(a, q), g)


def admissible_for_extremal(a: LinearCode, d: int = 24) -> bool:
    """Whether the lift of ``a`` along the g^2-orbits has no nonzero word of weight < d.

    Only such codes can be the orbit projection of C(g^2) for a code C of
    minimum distance d.
    """
    return min_distance(orbit_lift(a, reference_g58_square())) >= d


def order58_structure_cases() -> list[dict]:
    """The two module structures left for C once dim C(g) = 2, and dim B for each.

    B is the orbit projection of C(g^29), a [60, dim B, >= 12] code.
    """
    p = 29
    s = s_of_p(p)
    factors = factor_x_p_minus_1(p)
    pairing = reciprocal_pairing(factors)
    cases = {"a": ([2, 0], [0, 2]), "b": ([2, 1], [0, 0])}
    out = []
    for name, (y, z) in cases.items():
        d = ModuleDecomposition(p=p, s=s, nu=(p - 1) // s, factors=factors, pairing=pairing,
                                y=y, z=z, x=2, w=2, dim=60, n=120)
        dim_b = d.fixed_dim()
        # a [60, dim_b] code has d <= 60 - dim_b + 1
        singleton = 60 - dim_b + 1
        out.append({
            "case": name,
            "y": y,
            "z": z,
            "constraints_hold": all(d.constraints().values()),
            "dim_C_g": d.y[0] + d.z[0],
            "dim_B": dim_b,
            "singleton_bound": singleton,
            "excluded": singleton < 12,
            "projective": all(zi == 0 for zi in z),
        })
    return out


# -- bordered double-circulant [60,30,12] codes --------------------------------------


@njit(cache=True)
def _popc(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _rot(r, t, ell, mask):
    return ((r << t) | (r >> (ell - t))) & mask


@njit(cache=True)
def _reverse(r, ell):
    out = 0
    for i in range(ell):
        if (r >> i) & 1:
            out |= 1 << (ell - 1 - i)
    return out


@njit(cache=True)
def _is_canonical(r, ell, mask):
    """r is the least of its rotations and the rotations of its reversal."""
    rv = _reverse(r, ell)
    if rv < r:
        return False
    for t in range(1, ell):
        if _rot(r, t, ell, mask) < r or _rot(rv, t, ell, mask) < r:
            return False
    return True


@njit(cache=True, nogil=True)
def _scan_first_rows(start, stop, ell, min_wt, out):
    """First rows r in [start, stop) giving a self-dual bordered double circulant.

    With the border fixed to (fill 1, left 1, corner 0) the conditions are:
    wt(r) even and every cyclic autocorrelation of r at a nonzero shift odd.
    Returns the number written into ``out``.
    """
    mask = (1 << ell) - 1
    cnt = 0
    for r in range(start, stop):
        w = _popc(r)
        if w & 1 or w < min_wt:
            continue
        ok = True
        for t in range(1, ell // 2 + 1):
            if (_popc(r & _rot(r, t, ell, mask)) & 1) == 0:
                ok = False
                break
        if not ok:
            continue
        if not _is_canonical(r, ell, mask):
            continue
        if cnt < out.shape[0]:
            out[cnt] = r
        cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def _low_weight_min(gens, t, floor):
    """Min weight over nonzero combinations of at most t rows of ``gens``."""
    k, nw = gens.shape
    best = 1 << 30
    idx = np.zeros(t + 1, dtype=np.int64)
    acc = np.zeros((t + 1, nw), dtype=np.uint64)
    depth = 0
    idx[0] = -1
    # depth-first over strictly increasing index tuples
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] >= k:
            depth -= 1
            continue
        j = idx[depth]
        wt = 0
        for w in range(nw):
            v = gens[j, w]
            if depth > 0:
                v ^= acc[depth - 1, w]
            acc[depth, w] = v
            wt += _kernels._popcount64(v)
        if wt < best:
            best = wt
            if best <= floor:
                return best
        if depth + 1 < t:
            depth += 1
            idx[depth] = j
    return best


@njit(cache=True, nogil=True)
def _words_of_weight(gens, t, target, out):
    """Write every combination of at most t rows with weight ``target`` into ``out``."""
    k, nw = gens.shape
    idx = np.zeros(t + 1, dtype=np.int64)
    acc = np.zeros((t + 1, nw), dtype=np.uint64)
    depth = 0
    idx[0] = -1
    cnt = 0
    while depth >= 0:
        idx[depth] += 1
        if idx[depth] >= k:
            depth -= 1
            continue
        j = idx[depth]
        wt = 0
        for w in range(nw):
            v = gens[j, w]
            if depth > 0:
                v ^= acc[depth - 1, w]
            acc[depth, w] = v
            wt += _kernels._popcount64(v)
        if wt == target:
            if cnt < out.shape[0]:
                out[cnt, :] = acc[depth, :]
            cnt += 1
        if depth + 1 < t:
            depth += 1
            idx[depth] = j
    return cnt


def min_distance_two_sided(c: LinearCode, right: list[int], t: int) -> tuple[int, bool]:
    """Distance bound from two disjoint information sets (left half, right half).

    ``right`` is a generator matrix of ``c`` systematic on the right half.
    Every codeword of weight <= 2t+1 has weight <= t on one half, so the
    minimum over combinations of <= t rows of either matrix is exact when it
    is at most 2t+1; otherwise d >= 2t+2.  Returns (value, exact).
    """
    best = min(
        _low_weight_min(to_words(c.rows, c.n), t, 0),
        _low_weight_min(to_words(right, c.n), t, 0),
    )
    if best <= 2 * t + 1:
        return int(best), True
    return 2 * t + 2, False


def _right_systematic(c: LinearCode, m: int) -> Optional[list[int]]:
    """Generator of ``c`` with identity on the right half (columns m..2m-1)."""
    perm_cols = list(range(m, 2 * m)) + list(range(m))
    swapped = c.gen.columns(perm_cols)
    from .gf2 import rref

    red, rk, piv = rref(swapped)
    if piv != list(range(m)):
        return None
    back = list(range(m, 2 * m)) + list(range(m))
    return list(BitMatrix(2 * m, red.rows).columns(back).rows)


def words_of_weight(c: LinearCode, right: list[int], w: int, cap: int = 1 << 18) -> list[int]:
    """All codewords of weight ``w`` for a code with two disjoint information sets.

    ``c.rows`` must be systematic on the left half and ``right`` on the right
    half.  A word of weight w has at most w // 2 ones on one of the halves, so
    combinations of at most w // 2 rows from both matrices reach all of them.
    """
    t = w // 2
    found: set[int] = set()
    for rows in (list(c.rows), right):
        gens = to_words(rows, c.n)
        out = np.zeros((cap, gens.shape[1]), dtype=np.uint64)
        cnt = _words_of_weight(gens, t, w, out)
        if cnt > cap:
            raise ValueError(f"more than {cap} words of weight {w}")
        for row in out[:cnt]:
            found.add(sum(int(x) << (64 * i) for i, x in enumerate(row)))
    return sorted(found)


def pair_count_invariant(n: int, words: list[int]) -> tuple[tuple[int, int], ...]:
    """Multiset of |{c in words : i, j in supp c}| over coordinate pairs i < j.

    Applied to the minimum-weight words this is invariant under coordinate
    permutations, so different values certify inequivalent codes.
    """
    if not words:
        return ()
    m = np.array([[(x >> i) & 1 for i in range(n)] for x in words], dtype=np.int64)
    pairs = (m.T @ m)[np.triu_indices(n, 1)]
    vals, counts = np.unique(pairs, return_counts=True)
    return tuple(zip(vals.tolist(), counts.tolist()))


def multiplier_orbits(first_rows: list[str]) -> list[list[str]]:
    """Group circulant first rows under r(x) -> r(x^u), u a unit mod l, up to rotation and reversal.

    Multipliers permute coordinates, so each orbit gives one code up to equivalence.
    """
    if not first_rows:
        return []
    ell = len(first_rows[0])
    mask = (1 << ell) - 1

    def canon(r: int) -> int:
        return min(int(_rot(x, t, ell, mask)) for x in (r, int(_reverse(r, ell))) for t in range(ell))

    def to_int(s: str) -> int:
        return sum(int(b) << i for i, b in enumerate(s))

    by_canon = {canon(to_int(s)): s for s in first_rows}
    units = [u for u in range(1, ell) if np.gcd(u, ell) == 1]
    left = set(by_canon)
    orbits_ = []
    for r in sorted(by_canon):
        if r not in left:
            continue
        orb = {canon(sum(((r >> i) & 1) << ((i * u) % ell) for i in range(ell))) for u in units}
        members = sorted(by_canon[x] for x in orb if x in left)
        left -= orb
        orbits_.append(members)
    return orbits_


def dc_first_rows(ell: int = 29, min_weight: int = 0, start: int = 0, stop: Optional[int] = None,
                  cap: int = 1 << 20) -> tuple[np.ndarray, int]:
    """Canonical first rows whose bordered double circulant is self-dual."""
    stop = (1 << ell) if stop is None else stop
    out = np.zeros(cap, dtype=np.int64)
    cnt = _scan_first_rows(start, stop, ell, min_weight, out)
    return out[: min(cnt, cap)], int(cnt)


def search_bordered_dc_60(d_target: int = 12, budget: Optional[int] = None, shard: int = 0,
                          num_shards: int = 1, threads: int = 1, ell: int = 29,
                          full_enumerators: bool = True, progress=None) -> SearchOutcome:
    """Self-dual bordered double-circulant [2l+2, l+1, d_target] codes, classified by weight enumerator.

    First rows are scanned up to rotation and reversal.  Only the border
    (fill 1, left 1, corner 0) can give d > 2: the other self-dual border
    puts a weight-2 word in the first row.  ``budget`` caps the number of
    first rows examined in this shard; hitting it marks the outcome incomplete.
    """
    t0 = time.perf_counter()
    total = 1 << ell
    lo = total * shard // num_shards
    hi = total * (shard + 1) // num_shards
    out = SearchOutcome()
    if budget is not None and hi - lo > budget:
        hi = lo + budget
        out.complete = False
    out.examined = hi - lo
    # each row of the circulant part has weight wt(r) + 2
    rows_, cnt = dc_first_rows(ell, max(0, d_target - 2), lo, hi)
    m = ell + 1
    t = (d_target - 1) // 2
    classes: dict = {}
    for r in rows_:
        r = int(r)
        code = bordered_double_circulant(_bits(r, ell), (1, 1, 0))
        if not is_self_dual(code):
            raise AssertionError("scan produced a non-self-dual code")
        right = _right_systematic(code, m)
        d_lb, exact = min_distance_two_sided(code, right, t)
        if exact and d_lb < d_target:
            continue
        if progress:
            progress(r)
        cert = {"first_row": _bits_str(r, ell), "border": (1, 1, 0)}
        if full_enumerators:
            we = weight_enumerator(code, threads=threads)
            if we.min_distance != d_target:
                continue
            cert["weight_enumerator"] = we.nonzero()
            key = we.counts
        else:
            key = None
        cert["pair_invariant"] = pair_count_invariant(code.n, words_of_weight(code, right, d_target))
        cert["singly_even"] = is_singly_even(code)
        cert["circulant_automorphism"] = str(aut_type(circulant_shift(ell), ell)) if is_automorphism(
            code, circulant_shift(ell)) else None
        cert["class"] = classes.setdefault(key, len(classes)) if key is not None else None
        out.add(code, cert)
    out.elapsed = time.perf_counter() - t0
    return out


def _bits(r: int, ell: int) -> list[int]:
    return [(r >> i) & 1 for i in range(ell)]


def _bits_str(r: int, ell: int) -> str:
    return "".join(str(b) for b in _bits(r, ell))


def invariant_classes(outcome: SearchOutcome) -> dict:
    """(weight enumerator, pair-count invariant) -> list of first rows.

    Distinct keys are certified inequivalent; rows sharing a key are not
    claimed equivalent by this function.
    """
    groups: dict = {}
    for cert in outcome.certificates:
        key = (tuple(sorted(cert.get("weight_enumerator", {}).items())), cert["pair_invariant"])
        groups.setdefault(key, []).append(cert["first_row"])
    return groups


def enumerator_classes(outcome: SearchOutcome) -> dict:
    """Weight-enumerator class -> list of first rows."""
    groups: dict = {}
    for cert in outcome.certificates:
        key = tuple(sorted(cert["weight_enumerator"].items()))
        groups.setdefault(key, []).append(cert["first_row"])
    return groups
