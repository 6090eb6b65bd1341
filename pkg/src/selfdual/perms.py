"""Permutations, cycle types, fixed subcodes and the orbit maps pi and phi.

Permutations act on the right: ``i^(st) = (i^s)^t``.  A vector ``v`` is sent
to ``v^s`` with ``(v^s)[i^s] = v[i]``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .codes import LinearCode, permute
from .gf2 import BitMatrix, left_kernel


class NotAutomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class Perm:
    """Permutation of {0..n-1}; ``image[i]`` is the image of i (0-based)."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a bijection")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], one_based: bool = True) -> "Perm":
        img = list(range(n))
        seen = set()
        off = 1 if one_based else 0
        for cyc in cycles:
            pts = [c - off for c in cyc]
            for a in pts:
                if not 0 <= a < n:
                    raise ValueError(f"point {a + off} outside 1..{n}" if one_based else f"point {a} outside 0..{n - 1}")
                if a in seen:
                    raise ValueError(f"point {a + off} appears twice")
                seen.add(a)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def apply(self, bits: int) -> int:
        """Move bit i of ``bits`` to position image[i]."""
        out = 0
        img = self.image
        while bits:
            low = bits & -bits
            out |= 1 << img[low.bit_length() - 1]
            bits ^= low
        return out

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Perm(tuple(inv))

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, e: int) -> "Perm":
        return power(self, e)

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        """Cycles as 0-based tuples, each starting at its smallest point."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.image[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_lengths(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for c in self.cycles():
            census[len(c)] = census.get(len(c), 0) + 1
        return census

    def fixed_points(self) -> list[int]:
        return [i for i, j in enumerate(self.image) if i == j]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def __str__(self) -> str:
        cyc = self.cycles(include_fixed=False)
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cyc)


def compose(s: Perm, t: Perm) -> Perm:
    """Apply s first, then t."""
    if s.n != t.n:
        raise ValueError(f"degree mismatch: {s.n} vs {t.n}")
    ti = t.image
    return Perm(tuple(ti[j] for j in s.image))


def order(s: Perm) -> int:
    return math.lcm(*(len(c) for c in s.cycles())) if s.n else 1


def power(s: Perm, e: int) -> Perm:
    img = list(range(s.n))
    for cyc in s.cycles():
        L = len(cyc)
        sh = e % L
        for idx, a in enumerate(cyc):
            img[a] = cyc[(idx + sh) % L]
    return Perm(tuple(img))


@dataclass(frozen=True)
class AutType:
    """Cycle census of an automorphism of order p or 2p.

    ``form == "p"``: alpha p-cycles and beta fixed points.
    ``form == "2p"``: alpha 2-cycles, beta p-cycles, gamma 2p-cycles, delta fixed points.
    Involutions use the ``p`` form with p = 2.
    """

    p: int
    alpha: int
    beta: int
    gamma: int = 0
    delta: int = 0
    form: str = "p"

    @property
    def degree(self) -> int:
        if self.form == "p":
            return self.p * self.alpha + self.beta
        return 2 * self.alpha + self.p * self.beta + 2 * self.p * self.gamma + self.delta

    @property
    def two_cycles(self) -> int:
        """w: number of 2-cycles of an order-2p element."""
        return self.alpha

    @property
    def long_cycles(self) -> int:
        """x: number of 2p-cycles of an order-2p element."""
        return self.gamma

    def square_type(self) -> "AutType":
        if self.form != "2p":
            raise ValueError("square_type needs a 2p form")
        return AutType(self.p, self.beta + 2 * self.gamma, 2 * self.alpha + self.delta)

    def pth_power_type(self) -> "AutType":
        if self.form != "2p":
            raise ValueError("pth_power_type needs a 2p form")
        return AutType(2, self.alpha + self.p * self.gamma, self.p * self.beta + self.delta)

    def __str__(self) -> str:
        if self.form == "p":
            return f"{self.p}-({self.alpha},{self.beta})"
        return f"2*{self.p}-({self.alpha},{self.beta},{self.gamma};{self.delta})"


def type_p(p: int, alpha: int, beta: int) -> AutType:
    return AutType(p, alpha, beta, form="p")


def type_2p(p: int, alpha: int, beta: int, gamma: int, delta: int) -> AutType:
    return AutType(p, alpha, beta, gamma, delta, form="2p")


def aut_type(s: Perm, p: int) -> AutType:
    """Cycle census of ``s`` in p-(a,b) or 2p-(a,b,c;d) notation.

    An element of order p gives the p form, order 2p the 2p form; an
    involution is reported as the degenerate 2p form with beta = gamma = 0.
    """
    o = order(s)
    census = s.cycle_lengths()
    if o == p:
        return type_p(p, census.get(p, 0), census.get(1, 0))
    if o == 2 * p or o == 2:
        return type_2p(p, census.get(2, 0), census.get(p, 0), census.get(2 * p, 0), census.get(1, 0))
    raise ValueError(f"element of order {o} is neither 2, {p} nor {2 * p}")


def involution_type(s: Perm) -> AutType:
    """Type 2-(alpha, beta) of an involution."""
    if order(s) != 2:
        raise ValueError(f"not an involution (order {order(s)})")
    census = s.cycle_lengths()
    return type_p(2, census.get(2, 0), census.get(1, 0))


# -- action on codes ---------------------------------------------------------


def is_automorphism(c: LinearCode, s: Perm) -> bool:
    if s.n != c.n:
        raise ValueError(f"permutation degree {s.n} != code length {c.n}")
    return permute(c, s) == c


def _require_aut(c: LinearCode, s: Perm) -> None:
    if not is_automorphism(c, s):
        raise NotAutomorphismError(f"{s} is not an automorphism of the {c}")


def fixed_subcode(c: LinearCode, s: Perm) -> LinearCode:
    """C(s): codewords of ``c`` fixed by ``s``."""
    _require_aut(c, s)
    diffs = BitMatrix(c.n, tuple(r ^ s.apply(r) for r in c.rows))
    lam = left_kernel(diffs)
    return LinearCode.from_rows(c.n, (c.gen.combine(x) for x in lam.rows))


def orbits(s: Perm) -> list[tuple[int, ...]]:
    """Orbits of <s>, each sorted, ordered by smallest element."""
    return sorted(tuple(sorted(c)) for c in s.cycles())


def orbit_projection(cfix: LinearCode, s: Perm) -> LinearCode:
    """Read one coordinate per s-orbit from orbit-constant codewords."""
    if s.n != cfix.n:
        raise ValueError(f"permutation degree {s.n} != code length {cfix.n}")
    orbs = orbits(s)
    rows = []
    for r in cfix.rows:
        v = 0
        for j, orb in enumerate(orbs):
            bit = (r >> orb[0]) & 1
            for a in orb[1:]:
                if (r >> a) & 1 != bit:
                    pts = ",".join(str(x + 1) for x in orb)
                    raise ValueError(f"generator is not constant on orbit {{{pts}}}")
            if bit:
                v |= 1 << j
        rows.append(v)
    return LinearCode.from_rows(len(orbs), rows)


def orbit_lift(a: LinearCode, s: Perm) -> LinearCode:
    """Inverse of orbit_projection: spread each coordinate over its orbit."""
    orbs = orbits(s)
    if a.n != len(orbs):
        raise ValueError(f"code length {a.n} != number of orbits {len(orbs)}")
    masks = [sum(1 << x for x in orb) for orb in orbs]
    rows = []
    for r in a.rows:
        v = 0
        for j, m in enumerate(masks):
            if (r >> j) & 1:
                v |= m
        rows.append(v)
    return LinearCode.from_rows(s.n, rows)


def _require_fpf_involution(h: Perm) -> list[tuple[int, ...]]:
    if order(h) != 2:
        raise ValueError(f"phi needs an involution, got order {order(h)}")
    if h.fixed_points():
        raise ValueError(f"phi needs a fixed-point-free involution; {len(h.fixed_points())} fixed points")
    return orbits(h)


def phi_map(c: LinearCode, h: Perm) -> LinearCode:
    """Sum across each 2-cycle of the fixed-point-free involution ``h``."""
    orbs = _require_fpf_involution(h)
    _require_aut(c, h)
    rows = []
    for r in c.rows:
        v = 0
        for j, (a, b) in enumerate(orbs):
            if ((r >> a) ^ (r >> b)) & 1:
                v |= 1 << j
        rows.append(v)
    return LinearCode.from_rows(len(orbs), rows)


# -- text format ---------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: Optional[int] = None) -> Perm:
    """Parse cycle notation ``(1,2)(3,4)`` or one-line images ``2 1 4 3`` (1-based).

    A leading ``deg=N`` fixes the degree; otherwise ``degree`` or the largest
    point mentioned is used for cycle notation.
    """
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    body = " ".join(ln.strip() for ln in lines).strip()
    m = re.match(r"deg\s*=\s*(\d+)\s*", body)
    if m:
        d = int(m.group(1))
        if degree is not None and degree != d:
            raise ValueError(f"deg={d} conflicts with expected degree {degree}")
        degree = d
        body = body[m.end():]
    if not body:
        if degree is None:
            raise ValueError("empty permutation without a degree")
        return Perm.identity(degree)
    if body.startswith("("):
        rest = _CYCLE_RE.sub("", body).strip()
        if rest:
            raise ValueError(f"unparsed text in cycle notation: {rest!r}")
        cycles = []
        for grp in _CYCLE_RE.findall(body):
            pts = [t for t in re.split(r"[,\s]+", grp.strip()) if t]
            if pts:
                cycles.append([int(t) for t in pts])
        top = max((max(c) for c in cycles), default=0)
        n = degree if degree is not None else top
        if top > n:
            raise ValueError(f"point {top} exceeds degree {n}")
        return Perm.from_cycles(n, cycles)
    imgs = [int(t) for t in re.split(r"[,\s]+", body) if t]
    if degree is not None and len(imgs) != degree:
        raise ValueError(f"one-line image has {len(imgs)} entries, expected {degree}")
    if sorted(imgs) != list(range(1, len(imgs) + 1)):
        raise ValueError("one-line image is not a permutation of 1..n")
    return Perm(tuple(i - 1 for i in imgs))


def format_perm(s: Perm, with_degree: bool = True) -> str:
    return (f"deg={s.n} " if with_degree else "") + str(s)
