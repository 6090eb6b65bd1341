"""Named codes and automorphism sources.

Coordinates of an extended QR code of length q+1 are points of the projective
line: value v in 0..q-1 sits at coordinate v (0-based), infinity at q.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .codes import LinearCode
from .gf2 import BitVector
from .modrep import Poly2, _divmod, _mul, factor_x_p_minus_1
from .perms import Perm, compose, order, power

INF = None


@dataclass(frozen=True)
class ProjLinePoint:
    """A point of the projective line over GF(q); ``value is None`` is infinity."""

    q: int
    value: Optional[int]

    @property
    def index(self) -> int:
        """1-based coordinate label: q+1 for infinity, value+1 otherwise."""
        return self.q + 1 if self.value is None else self.value + 1


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % f for f in range(2, int(q**0.5) + 1))


def quadratic_residues(q: int) -> set[int]:
    return {(x * x) % q for x in range(1, q)}


def qr_generator_polynomial(q: int) -> Poly2:
    """prod (x - a^r) over nonzero squares r, for a fixed primitive q-th root a.

    ``a`` is taken to be the class of x modulo the first nontrivial factor of
    x^q + 1, so the result is deterministic.
    """
    factors = factor_x_p_minus_1(q)
    base = factors[1].bits
    residues = quadratic_residues(q)
    g = 1
    for f in factors[1:]:
        # f vanishes at a^r for all r in one cyclotomic coset; test a representative
        for r in range(1, q):
            ar = _pow_mod(0b10, r, base)
            if f(ar, base) == 0:
                break
        else:
            raise AssertionError("factor has no root among powers of a")
        if r in residues:
            g = _mul(g, f.bits)
    return Poly2(g)


def _pow_mod(a: int, e: int, m: int) -> int:
    out = 1
    while e:
        if e & 1:
            out = _divmod(_mul(out, a), m)[1]
        a = _divmod(_mul(a, a), m)[1]
        e >>= 1
    return out


def xqr(q: int) -> LinearCode:
    """Extended binary quadratic residue code of length q + 1.

    Needs q prime with q = +-1 mod 8 so that 2 is a square mod q.  The
    cyclic code on coordinates 0..q-1 is generated by the residue polynomial;
    the overall parity bit goes in the last (infinity) coordinate.
    """
    if not _is_prime(q) or q % 8 not in (1, 7):
        raise ValueError(f"q = {q} must be a prime congruent to +-1 mod 8")
    g = qr_generator_polynomial(q).bits
    k = q - (g.bit_length() - 1)
    rows = []
    for i in range(k):
        r = g << i
        if r.bit_count() & 1:
            r |= 1 << q
        rows.append(r)
    return LinearCode.from_rows(q + 1, rows)


def golay24() -> LinearCode:
    return xqr(23)


def extended_hamming8() -> LinearCode:
    """[8,4,4] code: the Hamming [7,4] code plus an overall parity bit."""
    h7 = [0b1101000, 0b0110100, 0b0011010, 0b0001101]
    rows = [r | ((r.bit_count() & 1) << 7) for r in h7]
    return LinearCode.from_rows(8, rows)


def bordered_double_circulant(first_row: BitVector | Sequence[int], border: Sequence[int]) -> LinearCode:
    """Code generated by (I | M) with M the bordered circulant

        M = [ corner  fill ... fill ]
            [ left                  ]
            [  ...      circ(r)     ]
            [ left                  ]

    ``border`` is (top-right fill, left column fill, corner).  Length 2l+2,
    dimension l+1.
    """
    r = first_row if isinstance(first_row, BitVector) else BitVector.from_bits(first_row)
    ell = r.length
    if ell < 1:
        raise ValueError("first row must be nonempty")
    fill, left, corner = (int(b) & 1 for b in border)
    m = ell + 1
    mask = (1 << ell) - 1
    rows = []
    top = corner | ((mask << 1) if fill else 0)
    rows.append(1 | (top << m))
    for i in range(ell):
        shifted = ((r.bits << i) | (r.bits >> (ell - i))) & mask
        right = left | (shifted << 1)
        rows.append((1 << (i + 1)) | (right << m))
    return LinearCode.from_rows(2 * m, rows)


def double_circulant(first_row: BitVector | Sequence[int]) -> LinearCode:
    """Pure double-circulant code (I | R) of length 2l."""
    r = first_row if isinstance(first_row, BitVector) else BitVector.from_bits(first_row)
    ell = r.length
    mask = (1 << ell) - 1
    rows = []
    for i in range(ell):
        shifted = ((r.bits << i) | (r.bits >> (ell - i))) & mask
        rows.append((1 << i) | (shifted << ell))
    return LinearCode.from_rows(2 * ell, rows)


def circulant_shift(ell: int) -> Perm:
    """The order-ell automorphism of a bordered double-circulant code of length 2l+2."""
    m = ell + 1
    img = list(range(2 * m))
    for block in (0, m):
        for i in range(ell):
            img[block + 1 + i] = block + 1 + (i + 1) % ell
    return Perm(tuple(img))


def moebius_perm(a: int, b: int, c: int, d: int, q: int) -> Perm:
    """z -> (az + b)/(cz + d) on the projective line, as a coordinate permutation."""
    a, b, c, d = a % q, b % q, c % q, d % q
    det = (a * d - b * c) % q
    if det == 0 or det not in quadratic_residues(q):
        raise ValueError(f"determinant {det} is not a nonzero square mod {q}")
    img = [0] * (q + 1)
    for z in range(q):
        num = (a * z + b) % q
        den = (c * z + d) % q
        img[z] = q if den == 0 else (num * pow(den, -1, q)) % q
    # infinity goes to a/c
    img[q] = q if c == 0 else (a * pow(c, -1, q)) % q
    return Perm(tuple(img))


def psl2_generators(q: int) -> list[Perm]:
    """z -> z + 1 and z -> -1/z."""
    return [moebius_perm(1, 1, 0, 1, q), moebius_perm(0, -1, 1, 0, q)]


def random_psl2_element(q: int, rng: random.Random) -> Perm:
    squares = sorted(quadratic_residues(q))
    while True:
        a, b, c = (rng.randrange(q) for _ in range(3))
        if a == 0:
            continue
        # choose d so that ad - bc is a random nonzero square
        det = rng.choice(squares)
        d = ((det + b * c) * pow(a, -1, q)) % q
        return moebius_perm(a, b, c, d, q)


def find_element_of_order(gens: Sequence[Perm], target: int, seed: int = 0, max_tries: int = 2000,
                          max_word: int = 30) -> Optional[Perm]:
    """Search random words in ``gens`` for an element of order ``target``.

    A word whose order is a multiple of ``target`` is reduced by powering.
    None after ``max_tries`` words is not a proof that no such element exists.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators have different degrees")
    if target == 1:
        return Perm.identity(n)
    rng = random.Random(seed)
    pool = list(gens) + [g.inverse() for g in gens]
    for _ in range(max_tries):
        w = Perm.identity(n)
        for _ in range(rng.randint(1, max_word)):
            w = compose(w, rng.choice(pool))
        o = order(w)
        if o % target == 0:
            return power(w, o // target)
    return None
