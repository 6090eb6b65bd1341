"""Bounds and exclusion arguments for automorphisms of order 2p."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .modrep import _is_odd_prime, s_of_p
from .perms import AutType, type_2p, type_p

# Allowed prime-order and involution types in an extremal [120,60,24] code.
# Taken as cited premises, not derived here.
LENGTH120_PRIME_TYPES = (
    type_p(29, 4, 4),
    type_p(23, 5, 5),
    type_p(19, 6, 6),
    type_p(7, 17, 1),
    type_p(5, 24, 0),
    type_p(3, 40, 0),
)
LENGTH120_INVOLUTION_TYPES = (type_p(2, 48, 24), type_p(2, 60, 0))

PREMISE_CITED = "cited"
PREMISE_TABLE = "external table"
PREMISE_COMPUTED = "computed"


# -- best-known distance table ---------------------------------------------------


@dataclass(frozen=True)
class BestKnownTable:
    """Upper bounds on the minimum distance of [n, >=k] codes. Trusted data."""

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for (n, k), d in self.entries.items():
            nxt = self.entries.get((n, k + 1))
            if nxt is not None and nxt > d:
                raise ValueError(f"table not monotone: d({n},{k}) = {d} < d({n},{k + 1}) = {nxt}")

    def bound(self, n: int, k: int) -> Optional[int]:
        return self.entries.get((n, k))

    @classmethod
    def parse(cls, text: str, source: str = "<table>") -> "BestKnownTable":
        reader = csv.reader(io.StringIO(text))
        rows = [r for r in reader if r and not r[0].strip().startswith("#")]
        if not rows or [c.strip() for c in rows[0]] != ["n", "k", "d_upper"]:
            raise ValueError(f"{source}: expected header 'n,k,d_upper'")
        entries = {}
        for lineno, r in enumerate(rows[1:], start=2):
            try:
                n, k, d = (int(c) for c in r)
            except ValueError:
                raise ValueError(f"{source}:{lineno}: expected three integers, got {r!r}") from None
            entries[(n, k)] = d
        return cls(entries)

    @classmethod
    def load(cls, path: str | Path) -> "BestKnownTable":
        p = Path(path)
        return cls.parse(p.read_text(), source=str(p))

    @classmethod
    def shipped(cls) -> "BestKnownTable":
        text = resources.files("selfdual").joinpath("data/best_known.csv").read_text()
        return cls.parse(text, source="best_known.csv")


# -- reports ------------------------------------------------------------------

_RELATIONS = {
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


@dataclass(frozen=True)
class TrailStep:
    label: str
    lhs: int
    relation: str
    rhs: int

    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{self.label}: {self.lhs} {self.relation} {self.rhs}"


def _compare(label: str, lhs: int, rhs: int) -> TrailStep:
    """A true step recording how lhs compares with rhs."""
    rel = "<" if lhs < rhs else "==" if lhs == rhs else ">"
    return TrailStep(label, lhs, rel, rhs)


@dataclass
class ExclusionReport:
    claim: str
    premises: list = field(default_factory=list)
    trail: list = field(default_factory=list)
    verdict: str = "inconclusive"
    note: str = ""

    def replay(self) -> bool:
        return all(step.holds() for step in self.trail)

    @property
    def definitive(self) -> bool:
        return self.verdict != "inconclusive"

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "premises": [{"fact": f, "source": s} for f, s in self.premises],
            "trail": [
                {"step": t.label, "lhs": t.lhs, "relation": t.relation, "rhs": t.rhs, "holds": t.holds()}
                for t in self.trail
            ],
            "note": self.note,
        }


# -- bounds -------------------------------------------------------------------


def griesmer_min_length(k: int, d: int) -> int:
    """sum_{i<k} ceil(d / 2^i), the least length of a binary [n,k,d] code allowed by Griesmer."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return sum(-(-d // (1 << i)) for i in range(k))


def coro2_bound(n: int, p: int) -> int:
    """Lower bound n/4 + (p-1)/2 on dim C(h) when g has an odd number of 2-cycles."""
    if n % 4:
        raise ValueError(f"n = {n} is not divisible by 4")
    s = s_of_p(p)
    if s % 2:
        raise ValueError(f"s({p}) = {s} is odd")
    return n // 4 + (p - 1) // 2


def feasible_2p_types(n: int, p: int, allowed_p_types: Iterable[AutType],
                      allowed_inv_types: Iterable[AutType]) -> list[AutType]:
    """All 2p-(a,b,c;d) of degree n whose square and p-th power have allowed types."""
    ptypes = {(t.alpha, t.beta) for t in allowed_p_types if t.p == p}
    itypes = {(t.alpha, t.beta) for t in allowed_inv_types if t.p == 2}
    out = []
    for gamma in range(n // (2 * p) + 1):
        for beta in range((n - 2 * p * gamma) // p + 1):
            for alpha in range((n - 2 * p * gamma - p * beta) // 2 + 1):
                delta = n - 2 * alpha - p * beta - 2 * p * gamma
                # order exactly 2p
                if gamma == 0 and (alpha == 0 or beta == 0):
                    continue
                t = type_2p(p, alpha, beta, gamma, delta)
                sq, pw = t.square_type(), t.pth_power_type()
                if (sq.alpha, sq.beta) in ptypes and (pw.alpha, pw.beta) in itypes:
                    out.append(t)
    return out


def exclude_order_2p_at_boundary(p: int, d_min: int) -> ExclusionReport:
    """Self-dual code of length 2p+2, d > 4, fixed-point-free involutions: no element of order 2p."""
    n = 2 * p + 2
    rep = ExclusionReport(claim=f"no automorphism of order {2 * p} in a self-dual [{n},{p + 1},{d_min}] code")
    s = s_of_p(p)
    rep.premises.append(("involutions of Aut(C) are fixed-point-free", "hypothesis"))
    rep.premises.append((f"s({p}) = {s}", PREMISE_COMPUTED))
    if s % 2:
        rep.note = f"s({p}) = {s} is odd; the bound on dim C(h) does not apply"
        return rep
    if d_min <= 4:
        rep.note = f"minimum distance {d_min} is not greater than 4"
        return rep
    # g of order 2p on 2p+2 points with fpf g^p: one 2p-cycle and one 2-cycle
    w = 1
    dim_fix = coro2_bound(n, p)
    proj_d = -(-d_min // 2)
    singleton = n // 2 - dim_fix + 1
    rep.trail = [
        TrailStep("g has one 2p-cycle and w 2-cycles; w", w, "==", 1),
        TrailStep("n mod 4", n % 4, "==", 0),
        TrailStep(f"s({p}) mod 2", s % 2, "==", 0),
        TrailStep("dim pi(C(h)) >= n/4 + (p-1)/2", dim_fix, "==", p),
        TrailStep("Singleton bound on d of a [p+1, >=p] code", singleton, "<=", 2),
        TrailStep("d of pi(C(h)) >= ceil(d(C)/2)", proj_d, ">", 2),
        TrailStep("contradiction: Singleton bound < required distance", singleton, "<", proj_d),
    ]
    rep.verdict = "excluded"
    return rep


def corollary_prime_bound(m: int, mode: str = "crude") -> int:
    """Largest p admissible for an element of type 2p-(w,0,x;0), w odd, in an extremal [24m,12m,4m+4] code.

    ``crude`` keeps only the first two Griesmer terms; ``refined`` evaluates
    the full sum.
    """
    if m < 1:
        raise ValueError("m >= 1")
    if mode == "crude":
        return 6 * m - 1
    if mode != "refined":
        raise ValueError(f"unknown mode {mode!r}")
    best = None
    for p in range(3, 24 * m):
        if not _is_odd_prime(p):
            continue
        if griesmer_min_length(6 * m + (p - 1) // 2, 2 * m + 2) <= 12 * m:
            best = p
    return best


def exclude_order_2p_with_table(n: int, p: int, d: int, table: BestKnownTable,
                                prime_types: Sequence[AutType], inv_types: Sequence[AutType]) -> ExclusionReport:
    """Exclude order 2p in a self-dual [n, n/2, d] code via the bound on dim C(h) and a distance table."""
    rep = ExclusionReport(claim=f"no automorphism of order {2 * p} in a self-dual [{n},{n // 2},{d}] code")
    rep.premises.append(("allowed prime-order and involution types", PREMISE_CITED))
    types = feasible_2p_types(n, p, prime_types, inv_types)
    rep.premises.append((f"feasible types: {', '.join(map(str, types)) or 'none'}", PREMISE_COMPUTED))
    if not types:
        rep.trail.append(TrailStep("number of feasible cycle types", 0, "==", 0))
        rep.verdict = "excluded"
        return rep
    s = s_of_p(p)
    rep.premises.append((f"s({p}) = {s}", PREMISE_COMPUTED))
    if s % 2 or n % 4:
        rep.note = "the dimension bound needs s(p) even and 4 | n"
        return rep
    half = n // 2
    proj_d = -(-d // 2)
    dim_fix = coro2_bound(n, p)
    bound = table.bound(half, dim_fix)
    for t in types:
        if t.beta or t.delta:
            rep.note = f"type {t} has an involution with fixed points"
            return rep
        if t.alpha % 2 == 0:
            rep.note = f"type {t} has an even number of 2-cycles"
            return rep
        rep.trail.append(TrailStep(f"{t}: w mod 2", t.alpha % 2, "==", 1))
    rep.trail += [
        TrailStep("n mod 4", n % 4, "==", 0),
        TrailStep(f"s({p}) mod 2", s % 2, "==", 0),
        TrailStep(f"dim pi(C(h)) >= n/4 + (p-1)/2", dim_fix, "==", n // 4 + (p - 1) // 2),
        TrailStep("d of pi(C(h)) >= ceil(d(C)/2)", proj_d, "==", proj_d),
    ]
    if bound is None:
        rep.premises.append((f"best-known bound for [{half}, >={dim_fix}] codes", "missing"))
        rep.note = f"table has no entry ({half},{dim_fix})"
        return rep
    rep.premises.append((f"a [{half}, >={dim_fix}] code has d <= {bound}", PREMISE_TABLE))
    step = _compare(f"table bound on d of a [{half}, >={dim_fix}] code vs required", bound, proj_d)
    rep.trail.append(step)
    rep.verdict = "excluded" if step.relation == "<" else "not-excluded"
    if rep.verdict == "not-excluded":
        rep.note = "the table bound does not contradict the required distance"
    return rep


def exclude_order_38(table: BestKnownTable) -> ExclusionReport:
    """No element of order 38 in an extremal [120,60,24] code."""
    return exclude_order_2p_with_table(120, 19, 24, table, LENGTH120_PRIME_TYPES, LENGTH120_INVOLUTION_TYPES)
