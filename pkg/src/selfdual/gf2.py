"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets: coordinate ``j`` (0-based) is bit
``j``. The 1-based coordinate convention only appears in parsers and printers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


def weight(x: int) -> int:
    return x.bit_count()


def dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """A vector in F2^length, packed into an int."""

    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits set beyond length {self.length}")

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for j, b in enumerate(seq):
            if b not in (0, 1, "0", "1"):
                raise ValueError(f"not a bit: {b!r}")
            if int(b):
                bits |= 1 << j
            n = j + 1
        return cls(n, bits)

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        return cls.from_bits(s.strip())

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        """Build from 0-based positions of the ones."""
        bits = 0
        for j in support:
            bits |= 1 << j
        return cls(length, bits)

    @property
    def words(self) -> tuple[int, ...]:
        nw = max(1, -(-self.length // WORD_BITS))
        return tuple((self.bits >> (WORD_BITS * i)) & _WORD_MASK for i in range(nw))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def dot(self, other: "BitVector") -> int:
        if other.length != self.length:
            raise ValueError("length mismatch")
        return dot(self.bits, other.bits)

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    """A GF(2) matrix held as a tuple of int rows of width ``ncols``."""

    ncols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row has bits beyond column {self.ncols}")

    @classmethod
    def from_vectors(cls, ncols: int, vecs: Iterable[BitVector]) -> "BitMatrix":
        rows = []
        for v in vecs:
            if v.length != ncols:
                raise ValueError("length mismatch")
            rows.append(v.bits)
        return cls(ncols, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BitMatrix":
        vecs = [BitVector.from_str(s) for s in lines]
        if not vecs:
            raise ValueError("no rows; use BitMatrix(ncols) for an empty matrix")
        return cls.from_vectors(vecs[0].length, vecs)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(ncols, (0,) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(self.ncols, r) for r in self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.nrows, tuple(cols))

    def columns(self, cols: Sequence[int]) -> "BitMatrix":
        """Submatrix on the given columns, in the given order."""
        out = []
        for r in self.rows:
            v = 0
            for t, c in enumerate(cols):
                if (r >> c) & 1:
                    v |= 1 << t
            out.append(v)
        return BitMatrix(len(cols), tuple(out))

    def mul_vec(self, x: int) -> int:
        """Return M·x as an int over row indices."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def combine(self, coeffs: int) -> int:
        """Return the sum of the rows selected by ``coeffs``."""
        out = 0
        i = 0
        while coeffs:
            if coeffs & 1:
                out ^= self.rows[i]
            coeffs >>= 1
            i += 1
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return BitMatrix(other.ncols, tuple(other.combine(r) for r in self.rows))

    def __str__(self) -> str:
        return "\n".join(str(v) for v in self)


def rref(m: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row-echelon form; zero rows are dropped from the result.

    Pivots are taken at the leftmost available column (lowest bit).
    """
    work = [r for r in m.rows if r]
    pivots: list[int] = []
    rank = 0
    for col in range(m.ncols):
        bit = 1 << col
        piv = None
        for i in range(rank, len(work)):
            if work[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= prow
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return BitMatrix(m.ncols, tuple(work[:rank])), rank, pivots


def rank(m: BitMatrix | Sequence[int], ncols: Optional[int] = None) -> int:
    if not isinstance(m, BitMatrix):
        m = BitMatrix(ncols if ncols is not None else max((r.bit_length() for r in m), default=0), tuple(m))
    return rref(m)[1]


def kernel(m: BitMatrix) -> BitMatrix:
    """Basis of {x : m·x^T = 0}, one basis vector per free column."""
    red, r, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = 1 << f
        for row, pc in zip(red.rows, pivots):
            if (row >> f) & 1:
                v |= 1 << pc
        basis.append(v)
    return BitMatrix(m.ncols, tuple(basis))


def left_kernel(m: BitMatrix) -> BitMatrix:
    """Basis of coefficient vectors lam with sum_i lam_i * row_i = 0."""
    return kernel(m.transpose())


def solve_membership(basis: BitMatrix, v: BitVector) -> Optional[BitVector]:
    """Coefficients expressing ``v`` in the span of independent ``basis`` rows.

    Returns None when ``v`` is not in the row space.
    """
    if v.length != basis.ncols:
        raise ValueError(f"length mismatch: vector {v.length}, basis {basis.ncols}")
    k = basis.nrows
    # augment each row with its own index tag above the data columns
    n = basis.ncols
    work = [r | (1 << (n + i)) for i, r in enumerate(basis.rows)]
    target = v.bits
    low = (1 << n) - 1
    coeff_acc = 0
    used = [False] * k
    for col in range(n):
        bit = 1 << col
        piv = None
        for i in range(k):
            if not used[i] and work[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        used[piv] = True
        prow = work[piv]
        for i in range(k):
            if i != piv and work[i] & bit:
                work[i] ^= prow
        if target & bit:
            target ^= prow & low
            coeff_acc ^= prow >> n
    if target:
        return None
    if sum(used) != k:
        raise ValueError("basis rows are not independent")
    return BitVector(k, coeff_acc)


def span_contains(rows: Sequence[int], ncols: int, v: int) -> bool:
    red, _, pivots = rref(BitMatrix(ncols, tuple(rows)))
    for row, pc in zip(red.rows, pivots):
        if (v >> pc) & 1:
            v ^= row
    return v == 0


def to_words(rows: Sequence[int], ncols: int):
    """Pack int rows into a (len(rows), nwords) uint64 array."""
    import numpy as np

    nw = max(1, -(-ncols // WORD_BITS))
    out = np.zeros((len(rows), nw), dtype=np.uint64)
    for i, r in enumerate(rows):
        for w in range(nw):
            out[i, w] = (r >> (WORD_BITS * w)) & _WORD_MASK
    return out
