"""Modules for the cyclic group of order 2p over GF(2).

The irreducible modules of a cyclic group of odd prime order p over GF(2)
correspond to the irreducible factors of x^p + 1.  A code with an
automorphism g of order 2p splits into isotypic pieces, the kernels of
f_i(g^2), and the action of h = g^p on each piece separates projective covers
(where h + 1 has full rank) from bare irreducibles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .codes import LinearCode
from .gf2 import BitMatrix, left_kernel, rank
from .perms import NotAutomorphismError, Perm, aut_type, is_automorphism, order, power


# -- polynomials over GF(2) ----------------------------------------------------


@dataclass(frozen=True)
class Poly2:
    """Polynomial over GF(2); bit i of ``bits`` is the coefficient of x^i."""

    bits: int

    @classmethod
    def from_coeffs(cls, coeffs) -> "Poly2":
        return cls(sum(1 << i for i, c in enumerate(coeffs) if c))

    @classmethod
    def x_power(cls, e: int) -> "Poly2":
        return cls(1 << e)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(max(1, self.bits.bit_length())))

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "Poly2") -> "Poly2":
        return Poly2(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "Poly2") -> "Poly2":
        return Poly2(_mul(self.bits, other.bits))

    def __divmod__(self, other: "Poly2"):
        q, r = _divmod(self.bits, other.bits)
        return Poly2(q), Poly2(r)

    def __mod__(self, other: "Poly2") -> "Poly2":
        return Poly2(_divmod(self.bits, other.bits)[1])

    def __floordiv__(self, other: "Poly2") -> "Poly2":
        return Poly2(_divmod(self.bits, other.bits)[0])

    def reciprocal(self) -> "Poly2":
        """x^deg f(1/x)."""
        d = self.degree
        return Poly2(sum(1 << (d - i) for i in range(d + 1) if (self.bits >> i) & 1))

    def __call__(self, x: int, modulus: int) -> int:
        """Evaluate at the residue class ``x`` modulo ``modulus`` (Horner)."""
        acc = 0
        for i in range(self.degree, -1, -1):
            acc = _divmod(_mul(acc, x), modulus)[1] ^ ((self.bits >> i) & 1)
        return acc

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        sh = a.bit_length() - db
        q |= 1 << sh
        a ^= b << sh
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    return _divmod(_mul(a, b), m)[1]


def poly_gcd(a: Poly2, b: Poly2) -> Poly2:
    return Poly2(_gcd(a.bits, b.bits))


# -- s(p) and the factorization of x^p + 1 -------------------------------------


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def s_of_p(p: int) -> int:
    """Multiplicative order of 2 modulo the odd prime p."""
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    s, v = 1, 2 % p
    while v != 1:
        v = (2 * v) % p
        s += 1
    return s


def _distinct_degree(f: int) -> list[tuple[int, int]]:
    """Split squarefree f into (product of degree-d factors, d) pairs."""
    out = []
    x = 0b10
    xp = x
    d = 0
    while f.bit_length() - 1 >= 2 * (d + 1):
        d += 1
        xp = _mulmod(xp, xp, f)
        g = _gcd(xp ^ x, f)
        if g != 1:
            out.append((g, d))
            f = _divmod(f, g)[0]
            xp = _divmod(xp, f)[1]
    if f != 1:
        out.append((f, f.bit_length() - 1))
    return out


def _equal_degree(f: int, d: int, rng: random.Random) -> list[int]:
    """Split f, a product of distinct irreducibles of degree d (Cantor-Zassenhaus, trace map)."""
    deg = f.bit_length() - 1
    if deg == d:
        return [f]
    while True:
        a = rng.getrandbits(deg) | 1
        t = a
        acc = a
        for _ in range(d - 1):
            t = _mulmod(t, t, f)
            acc ^= t
        g = _gcd(acc, f)
        if g != 1 and g != f:
            return _equal_degree(g, d, rng) + _equal_degree(_divmod(f, g)[0], d, rng)


def factor_x_p_minus_1(p: int, seed: int = 0) -> list[Poly2]:
    """Irreducible factors of x^p + 1 over GF(2), x + 1 first, others sorted by bits."""
    s = s_of_p(p)
    rng = random.Random(seed)
    f = (1 << p) | 1
    # x^p + 1 = (x + 1)(1 + x + ... + x^(p-1)) and p is odd, so it is squarefree
    rest = _divmod(f, 0b11)[0]
    factors = []
    for prod, d in _distinct_degree(rest):
        factors.extend(_equal_degree(prod, d, rng))
    if any(q.bit_length() - 1 != s for q in factors):
        raise AssertionError("factor degree differs from s(p)")
    return [Poly2(0b11)] + [Poly2(q) for q in sorted(factors)]


def self_dual_irreducibles(p: int) -> list[int]:
    """Indices of self-reciprocal factors of x^p + 1 (self-dual irreducible modules)."""
    fs = factor_x_p_minus_1(p)
    return [i for i, f in enumerate(fs) if f.reciprocal() == f]


def reciprocal_pairing(factors: list[Poly2]) -> list[int]:
    index = {f: i for i, f in enumerate(factors)}
    return [index[f.reciprocal()] for f in factors]


# -- decomposition of a code under <g> ----------------------------------------


@dataclass
class ModuleDecomposition:
    """Multiplicities of the module structure of a code under g of order 2p.

    ``y[i]`` counts projective covers W_i (uniserial V_i over V_i), ``z[i]``
    counts bare irreducibles V_i; ``x`` and ``w`` are the numbers of 2p-cycles
    and 2-cycles of g.
    """

    p: int
    s: int
    nu: int
    factors: list[Poly2]
    pairing: list[int]
    y: list[int]
    z: list[int]
    x: int
    w: int
    dim: int
    n: int
    piece_dims: list[int] = field(default_factory=list)

    @property
    def degrees(self) -> list[int]:
        return [f.degree for f in self.factors]

    def fixed_dim(self) -> int:
        """dim C(h): every W_i and every V_i contributes one copy of V_i."""
        return sum((yi + zi) * d for yi, zi, d in zip(self.y, self.z, self.degrees))

    def phi_dim(self) -> int:
        return sum(yi * d for yi, d in zip(self.y, self.degrees))

    def constraints(self) -> dict[str, bool]:
        """Structural identities of the multiplicities.

        ``dimension`` holds for every invariant code; the others assume the
        code is self-dual.
        """
        out = {
            "dimension": sum((2 * yi + zi) * d for yi, zi, d in zip(self.y, self.z, self.degrees)) == self.dim,
            "trivial": 2 * self.y[0] + self.z[0] == self.x + self.w,
        }
        if self.s % 2 == 0:
            out["nontrivial_even_s"] = all(2 * self.y[i] + self.z[i] == self.x for i in range(1, self.nu + 1))
        else:
            out["paired_z"] = all(self.z[i] == self.z[self.pairing[i]] for i in range(1, self.nu + 1))
            out["paired_y"] = all(
                self.y[i] + self.y[self.pairing[i]] + self.z[i] == self.x for i in range(1, self.nu + 1)
            )
        return out

    def parity_laws(self) -> dict[str, bool]:
        """Parity consequences valid for self-dual codes."""
        out = {}
        if self.n % 4 == 0:
            out["x_w_same_parity"] = (self.x - self.w) % 2 == 0
            out["quotient_even"] = quotient_dimension(self) % 2 == 0
        else:
            out["x_w_differ"] = (self.x - self.w) % 2 == 1
            out["quotient_odd"] = quotient_dimension(self) % 2 == 1
        if self.s % 2 == 0:
            out["z_parity"] = all((zi - self.x) % 2 == 0 for zi in self.z[1:])
        return out

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "s_p": self.s,
            "nu": self.nu,
            "factors": [str(f) for f in self.factors],
            "pairing": self.pairing,
            "x": self.x,
            "w": self.w,
            "y": self.y,
            "z": self.z,
            "quotient_dim": quotient_dimension(self),
        }


def _poly_action(rows, q: Perm, f: Poly2):
    """Rows mapped by f(q) = sum_j f_j q^j, acting on the right."""
    out = []
    for r in rows:
        acc = 0
        v = r
        for j in range(f.degree + 1):
            if (f.bits >> j) & 1:
                acc ^= v
            v = q.apply(v)
        out.append(acc)
    return out


def _check_setting(c: LinearCode, g: Perm, p: int) -> Perm:
    s_of_p(p)
    if g.n != c.n:
        raise ValueError(f"permutation degree {g.n} != code length {c.n}")
    o = order(g)
    if o != 2 * p:
        raise ValueError(f"g has order {o}, expected 2p = {2 * p}")
    h = power(g, p)
    if h.fixed_points():
        raise ValueError(f"h = g^{p} has {len(h.fixed_points())} fixed points; it must be fixed-point-free")
    if not is_automorphism(c, g):
        raise NotAutomorphismError(f"g is not an automorphism of the {c}")
    return h


def isotypic_piece(c: LinearCode, q: Perm, f: Poly2) -> LinearCode:
    """c intersected with the kernel of f(q)."""
    images = BitMatrix(c.n, tuple(_poly_action(c.rows, q, f)))
    lam = left_kernel(images)
    return LinearCode.from_rows(c.n, (c.gen.combine(x) for x in lam.rows))


def h_plus_one_rank(c: LinearCode, h: Perm) -> int:
    return rank(BitMatrix(c.n, tuple(r ^ h.apply(r) for r in c.rows)))


def decompose(c: LinearCode, g: Perm, p: int, seed: int = 0) -> ModuleDecomposition:
    h = _check_setting(c, g, p)
    q = power(g, 2)
    s = s_of_p(p)
    factors = factor_x_p_minus_1(p, seed=seed)
    pairing = reciprocal_pairing(factors)
    y, z, dims = [], [], []
    for f in factors:
        piece = isotypic_piece(c, q, f)
        d = f.degree
        r = h_plus_one_rank(piece, h)
        if piece.k % d or r % d:
            raise AssertionError("isotypic piece dimension is not a multiple of the factor degree")
        y.append(r // d)
        z.append(piece.k // d - 2 * (r // d))
        dims.append(piece.k)
    t = aut_type(g, p)
    return ModuleDecomposition(
        p=p, s=s, nu=(p - 1) // s, factors=factors, pairing=pairing,
        y=y, z=z, x=t.gamma, w=t.alpha, dim=c.k, n=c.n, piece_dims=dims,
    )


def is_projective(c: LinearCode, g: Perm, p: int) -> bool:
    """True when h + 1 has rank dim(c)/2 on c, i.e. c is free over <h>."""
    if c.k % 2:
        raise ValueError(f"odd dimension {c.k}: a projective module has even dimension")
    h = _check_setting(c, g, p)
    return 2 * h_plus_one_rank(c, h) == c.k


def quotient_dimension(d: ModuleDecomposition) -> int:
    """dim of phi(C)^perp / phi(C): z_0 + s(p) * (z_1 + ... + z_nu)."""
    return d.z[0] + d.s * sum(d.z[1:])
