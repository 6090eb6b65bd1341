"""Binary linear codes: duals, weights, enumerators and small-n equivalence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence

from . import _kernels
from .gf2 import BitMatrix, BitVector, kernel, rref, span_contains, to_words

if TYPE_CHECKING:
    from .perms import Perm

MIN_DISTANCE_MAX_K = 36
ENUMERATOR_MAX_K = 32
SMALL_EQUIV_MAX_N = 12


class BudgetExceededError(ValueError):
    """Raised when an exhaustive computation would exceed its fixed budget."""


class CodeFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """A subspace of F2^n, stored as its generator matrix in reduced row-echelon form."""

    n: int
    gen: BitMatrix

    def __post_init__(self):
        if self.gen.ncols != self.n:
            raise ValueError(f"generator width {self.gen.ncols} != n = {self.n}")

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "LinearCode":
        red, _, _ = rref(BitMatrix(n, tuple(rows)))
        return cls(n, red)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "LinearCode":
        m = BitMatrix.from_strings(lines)
        return cls.from_rows(m.ncols, m.rows)

    @classmethod
    def zero(cls, n: int) -> "LinearCode":
        return cls(n, BitMatrix(n))

    @classmethod
    def full(cls, n: int) -> "LinearCode":
        return cls(n, BitMatrix.identity(n))

    @property
    def k(self) -> int:
        return self.gen.nrows

    @property
    def rows(self) -> tuple[int, ...]:
        return self.gen.rows

    def __contains__(self, v) -> bool:
        bits = v.bits if isinstance(v, BitVector) else v
        return span_contains(self.gen.rows, self.n, bits)

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords as ints, in Gray-code order starting at zero."""
        cw = 0
        yield cw
        rows = self.gen.rows
        for i in range(1, 1 << self.k):
            cw ^= rows[(i & -i).bit_length() - 1]
            yield cw

    def is_subcode_of(self, other: "LinearCode") -> bool:
        return self.n == other.n and all(r in other for r in self.rows)

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return LinearCode.from_rows(self.n + other.n, rows)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code"


@dataclass(frozen=True)
class WeightEnumerator:
    counts: tuple[int, ...]

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w < len(self.counts) else 0

    @property
    def min_distance(self) -> Optional[int]:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        return None

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.counts) if a}


def dual(c: LinearCode) -> LinearCode:
    return LinearCode.from_rows(c.n, kernel(c.gen).rows)


def is_self_orthogonal(c: LinearCode) -> bool:
    rows = c.rows
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if (a & b).bit_count() & 1:
                return False
    return True


def is_self_dual(c: LinearCode) -> bool:
    return 2 * c.k == c.n and is_self_orthogonal(c)


def is_doubly_even(c: LinearCode) -> bool:
    return is_self_orthogonal(c) and all(r.bit_count() % 4 == 0 for r in c.rows)


def is_singly_even(c: LinearCode) -> bool:
    """Every weight even, and some weight congruent to 2 mod 4."""
    return all(r.bit_count() % 2 == 0 for r in c.rows) and not is_doubly_even(c)


def _check_budget(k: int, limit: int, what: str) -> None:
    if k > limit:
        raise BudgetExceededError(f"{what} enumerates 2^k codewords; k = {k} exceeds the budget k <= {limit}")


def min_distance(c: LinearCode, threads: int = 1) -> int:
    """Minimum nonzero weight by exhaustive Gray-code enumeration."""
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    _check_budget(c.k, MIN_DISTANCE_MAX_K, "min_distance")
    gens = to_words(c.rows, c.n)
    return int(_kernels.gray_min_weight(gens, c.k, floor=0, threads=threads))


def weight_enumerator(c: LinearCode, threads: int = 1) -> WeightEnumerator:
    _check_budget(c.k, ENUMERATOR_MAX_K, "weight_enumerator")
    if c.k == 0:
        return WeightEnumerator((1,) + (0,) * c.n)
    gens = to_words(c.rows, c.n)
    counts = _kernels.gray_weight_counts(gens, c.k, c.n, threads=threads)
    return WeightEnumerator(tuple(int(a) for a in counts))


def permute(c: LinearCode, s: "Perm") -> LinearCode:
    """Image of ``c`` under the coordinate permutation ``s``."""
    if s.n != c.n:
        raise ValueError(f"permutation degree {s.n} != code length {c.n}")
    return LinearCode.from_rows(c.n, (s.apply(r) for r in c.rows))


# -- small-n equivalence by backtracking ------------------------------------


class _IsoData:
    def __init__(self, c: LinearCode):
        self.code = c
        words = list(c.codewords())
        n = c.n
        inv = []
        for j in range(n):
            hist = [0] * (n + 1)
            bit = 1 << j
            for w in words:
                if w & bit:
                    hist[w.bit_count()] += 1
            inv.append(tuple(hist))
        # coordinates with identical generator columns are interchangeable
        cols = c.gen.transpose().rows
        classes: dict[int, list[int]] = {}
        for j in range(n):
            classes.setdefault(cols[j], []).append(j)
        self.classes = list(classes.values())
        self.reps = [cl[0] for cl in self.classes]
        self.key = {cl[0]: (len(cl), inv[cl[0]]) for cl in self.classes}

    def punctured(self, coords: Sequence[int]) -> tuple[int, ...]:
        return rref(self.code.gen.columns(coords))[0].rows


def _iso_backtrack(a: LinearCode, b: LinearCode, first_only: bool):
    if a.n != b.n:
        raise ValueError("length mismatch")
    if a.n > SMALL_EQUIV_MAX_N:
        raise BudgetExceededError(f"small equivalence search needs n <= {SMALL_EQUIV_MAX_N}, got n = {a.n}")
    if a.k != b.k:
        return 0, None
    A, B = _IsoData(a), _IsoData(b)
    if sorted(A.key.values()) != sorted(B.key.values()):
        return 0, None
    # most constrained coordinates first
    freq: dict = {}
    for key in A.key.values():
        freq[key] = freq.get(key, 0) + 1
    order = sorted(A.reps, key=lambda r: (freq[A.key[r]], r))
    m = len(order)
    images: list[int] = []
    used: set[int] = set()
    count = 0
    found = None

    def rec(t: int):
        nonlocal count, found
        if t == m:
            count += 1
            if found is None:
                found = list(images)
            return first_only
        want = A.key[order[t]]
        a_proj = A.punctured(order[: t + 1])
        for cand in B.reps:
            if cand in used or B.key[cand] != want:
                continue
            images.append(cand)
            if a_proj == B.punctured(images):
                used.add(cand)
                stop = rec(t + 1)
                used.discard(cand)
                if stop:
                    images.pop()
                    return True
            images.pop()
        return False

    rec(0)
    mult = 1
    for cl in A.classes:
        mult *= math.factorial(len(cl))
    perm = None
    if found is not None:
        from .perms import Perm

        img = [0] * a.n
        a_class = {cl[0]: cl for cl in A.classes}
        b_class = {cl[0]: cl for cl in B.classes}
        for src, dst in zip(order, found):
            for x, y in zip(a_class[src], b_class[dst]):
                img[x] = y
        perm = Perm(tuple(img))
    return count * mult, perm


def equivalent_small(a: LinearCode, b: LinearCode) -> Optional["Perm"]:
    """A permutation s with permute(a, s) == b, or None if none exists (n <= 12)."""
    _, perm = _iso_backtrack(a, b, first_only=True)
    return perm


def aut_order_small(c: LinearCode) -> int:
    """Order of the permutation automorphism group of ``c`` (n <= 12)."""
    count, _ = _iso_backtrack(c, c, first_only=False)
    return count


# -- text format ------------------------------------------------------------


def parse_code(text: str, source: str = "<string>") -> LinearCode:
    """Parse ``n k`` followed by k rows of n bits; ``#`` lines are comments."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CodeFormatError(f"{source}: empty code file (expected header 'n k')")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise CodeFormatError(f"{source}:{lineno}: expected header 'n k', got {header!r}")
    n, k = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != k:
        raise CodeFormatError(f"{source}:{lineno}: header declares k = {k} rows, found {len(body)}")
    rows = []
    for lineno, ln in body:
        ln = ln.replace(" ", "")
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise CodeFormatError(f"{source}:{lineno}: expected {n} characters from {{0,1}}, got {ln!r}")
        rows.append(BitVector.from_str(ln).bits)
    code = LinearCode.from_rows(n, rows)
    if code.k != k:
        raise CodeFormatError(f"{source}: the {k} generator rows have rank {code.k}")
    return code


def format_code(c: LinearCode, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{c.n} {c.k}")
    out.extend(str(v) for v in c.gen)
    return "\n".join(out) + "\n"


def read_code(path: str | Path) -> LinearCode:
    p = Path(path)
    return parse_code(p.read_text(), source=str(p))


def write_code(path: str | Path, c: LinearCode, comment: Optional[str] = None) -> None:
    Path(path).write_text(format_code(c, comment))
