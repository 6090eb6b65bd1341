"""Codes with an automorphism g of order 2p whose p-th power is fixed-point-free."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import oracles
from selfdual.codes import LinearCode, is_self_dual
from selfdual.constructions import (bordered_double_circulant, circulant_shift, find_element_of_order,
                                    psl2_generators, xqr)
from selfdual.perms import Perm, fixed_subcode, is_automorphism, power

# One first row from each inequivalent bordered double-circulant [60,30,12] class.
DC60_ROWS = (
    "10010111101110010010000100000",
    "10111101100101001110110101000",
    "10110110111011111111110101000",
)


@dataclass(frozen=True)
class Fixture:
    name: str
    code: LinearCode
    g: Perm
    p: int


def shift(n: int, e: int = 1) -> Perm:
    return Perm(tuple((i + e) % n for i in range(n)))


def _factor_x_m_plus_1(m: int) -> list[int]:
    """Irreducible factors of x^m + 1 (m odd) by trial division."""
    f = (1 << m) | 1
    out = []
    for cand in range(2, 1 << (m + 1)):
        if f == 1:
            break
        if not oracles.is_irreducible(cand):
            continue
        while f != 1 and oracles.pmod(f, cand) == 0:
            out.append(cand)
            f = _pdiv(f, cand)
    return out


def _pdiv(a: int, b: int) -> int:
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q


def cyclic_code(n: int, gen: int) -> LinearCode:
    k = n - (gen.bit_length() - 1)
    return LinearCode.from_rows(n, [gen << i for i in range(k)])


@lru_cache(maxsize=None)
def self_dual_cyclic_codes(m: int) -> tuple[LinearCode, ...]:
    """All self-dual cyclic codes of length 2m, m odd."""
    factors = _factor_x_m_plus_1(m)
    rec = [factors.index(oracles.reciprocal(f)) for f in factors]
    choices = []
    for i, j in enumerate(rec):
        if j == i:
            choices.append((1,))
        elif i < j:
            choices.append((0, 1, 2))
        else:
            choices.append(None)
    out = []
    free = [i for i, c in enumerate(choices) if c is not None]
    for pick in itertools.product(*(choices[i] for i in free)):
        a = [0] * len(factors)
        for i, v in zip(free, pick):
            a[i] = v
            a[rec[i]] = 2 - v
        g = 1
        for f, e in zip(factors, a):
            for _ in range(e):
                g = oracles.pmul(g, f)
        out.append(cyclic_code(2 * m, g))
    return tuple(out)


@lru_cache(maxsize=None)
def invariant_self_dual_8() -> tuple[LinearCode, ...]:
    """Self-dual codes of length 8 invariant under (1..6)(7,8): one 6-cycle and one 2-cycle."""
    g = Perm.from_cycles(8, [range(1, 7), (7, 8)])
    out = []
    for rows in oracles.self_dual_codes(8):
        c = LinearCode.from_rows(8, rows)
        if is_automorphism(c, g):
            out.append(c)
    return tuple(out)


def g_type_6_2() -> Perm:
    return Perm.from_cycles(8, [range(1, 7), (7, 8)])


def two_six_cycles() -> Perm:
    return Perm.from_cycles(12, [range(1, 7), range(7, 13)])


def b_plus_b(first_row: str) -> tuple[LinearCode, Perm]:
    """B + B on 120 points with g: (a, b) -> (b^s, a^s), s the circulant shift of B.

    g has order 58, g^29 swaps the halves and g^2 = s + s has type 29-(4,4).
    """
    b = bordered_double_circulant([int(x) for x in first_row], (1, 1, 0))
    sh = circulant_shift(29)
    img = [60 + sh(i) for i in range(60)] + [sh(i) for i in range(60)]
    g = Perm(tuple(img))
    return b.direct_sum(b), g


@lru_cache(maxsize=None)
def decomposition_fixtures() -> tuple[Fixture, ...]:
    fx = []
    for q, p in ((23, 3), (47, 3), (79, 5), (103, 13), (151, 19), (167, 7)):
        g = find_element_of_order(psl2_generators(q), 2 * p, seed=1)
        fx.append(Fixture(f"xqr{q + 1}-order{2 * p}", xqr(q), g, p))
    for m, ps in ((3, (3,)), (5, (5,)), (7, (7,)), (15, (3, 5)), (21, (3, 7))):
        for i, c in enumerate(self_dual_cyclic_codes(m)):
            for p in ps:
                fx.append(Fixture(f"cyclic{2 * m}.{i}-order{2 * p}", c, shift(2 * m, m // p), p))
    for i, c in enumerate(invariant_self_dual_8()):
        fx.append(Fixture(f"len8.{i}-6cycle+2cycle", c, g_type_6_2(), 3))
    for row in DC60_ROWS[:1]:
        c, g = b_plus_b(row)
        fx.append(Fixture("dc60+dc60-order58", c, g, 29))
    return tuple(fx)


def ambient_fixtures() -> tuple[Fixture, Fixture]:
    """F2^12 and its h-fixed space under two disjoint 6-cycles."""
    g = two_six_cycles()
    full = LinearCode.full(12)
    return (Fixture("full12", full, g, 3),
            Fixture("h-fixed12", fixed_subcode(full, power(g, 3)), g, 3))
