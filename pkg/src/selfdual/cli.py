"""Command-line front end.

Exit status: 0 for a definitive result, 1 for an inconclusive one, 2 when the
command is refused (bad input, failed precondition, missing opt-in).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import analysis, codes, constructions, modrep, perms, search
from .codes import LinearCode

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_REFUSED = 0, 1, 2
DEFAULT_SEED = 0


class Refusal(Exception):
    pass


@dataclass
class Report:
    command: list
    inputs_digest: str
    results: dict = field(default_factory=dict)
    timing: float = 0.0
    definitive: bool = True

    def results_digest(self) -> str:
        blob = json.dumps(self.results, sort_keys=True, default=str).encode()
        return hashlib.sha256(blob).hexdigest()

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "results": self.results,
            "results_digest": self.results_digest(),
            "timing_s": round(self.timing, 3),
        }

    def render_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}", f"inputs: {self.inputs_digest[:16]}"]
        _render(self.results, lines, 0)
        lines.append(f"time: {self.timing:.2f}s")
        return "\n".join(lines)


def _render(obj, lines: list, depth: int) -> None:
    pad = "  " * depth
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            _render(val, lines, depth + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(f"{pad}  -")
                _render(item, lines, depth + 2)
        else:
            lines.append(f"{pad}{key}: {val}")


def _digest(args: argparse.Namespace, files: list) -> str:
    h = hashlib.sha256()
    for k in sorted(vars(args)):
        if k in ("func", "json", "threads"):
            continue
        h.update(f"{k}={getattr(args, k)!r};".encode())
    for f in files:
        if f is not None:
            h.update(Path(f).read_bytes())
    return h.hexdigest()


def _load_code(path: str) -> LinearCode:
    try:
        return codes.read_code(path)
    except FileNotFoundError:
        raise Refusal(f"no such code file: {path}") from None
    except codes.CodeFormatError as e:
        raise Refusal(str(e)) from None


def _load_perm(path: str, degree: int) -> perms.Perm:
    try:
        return perms.parse_perm(Path(path).read_text(), degree=degree)
    except FileNotFoundError:
        raise Refusal(f"no such permutation file: {path}") from None
    except ValueError as e:
        raise Refusal(f"{path}: {e}") from None


# -- commands -------------------------------------------------------------------


def cmd_info(args) -> dict:
    c = _load_code(args.code)
    if c.k == 0:
        raise Refusal(f"{args.code}: the code is empty (k = 0)")
    res = {
        "n": c.n,
        "k": c.k,
        "self_orthogonal": codes.is_self_orthogonal(c),
        "self_dual": codes.is_self_dual(c),
        "doubly_even": codes.is_doubly_even(c),
    }
    if c.k <= args.max_k:
        res["d"] = codes.min_distance(c, threads=args.threads)
        res["parameters"] = f"[{c.n},{c.k},{res['d']}]"
    else:
        res["d"] = None
        res["parameters"] = f"[{c.n},{c.k}]"
        res["note"] = f"minimum distance skipped: k = {c.k} > --max-k {args.max_k}"
    return res


def cmd_decompose(args) -> dict:
    c = _load_code(args.code)
    g = _load_perm(args.perm, c.n)
    p = args.p
    try:
        d = modrep.decompose(c, g, p, seed=args.seed)
        proj = modrep.is_projective(c, g, p) if c.k % 2 == 0 else False
    except ValueError as e:
        raise Refusal(str(e)) from None
    h = perms.power(g, p)
    cfix = perms.fixed_subcode(c, h)
    pi = perms.orbit_projection(cfix, h)
    phi = perms.phi_map(c, h)
    res = d.as_dict()
    res.update({
        "type": str(perms.aut_type(g, p)),
        "dim_C_h": cfix.k,
        "dim_phi_C": phi.k,
        "projective": proj,
        "theorem1_check": {
            "pi_C_h_self_dual": codes.is_self_dual(pi),
            "agrees": proj == codes.is_self_dual(pi),
        },
        "constraints": d.constraints(),
    })
    if codes.is_self_dual(c):
        res["parity_laws"] = d.parity_laws()
        res["phi_contained_in_pi"] = phi.is_subcode_of(pi)
        res["pi_is_dual_of_phi"] = pi == codes.dual(phi)
    return res


def cmd_exclude(args) -> tuple[dict, bool]:
    target = args.target
    if target == "38":
        if args.no_table:
            table = analysis.BestKnownTable({})
        else:
            try:
                table = analysis.BestKnownTable.load(args.table) if args.table else analysis.BestKnownTable.shipped()
            except FileNotFoundError:
                raise Refusal(f"no such table file: {args.table}") from None
            except ValueError as e:
                raise Refusal(str(e)) from None
        rep = analysis.exclude_order_38(table)
        return rep.as_dict(), rep.definitive
    if target.startswith("2p2:"):
        p = _int_arg(target[4:], "p")
        try:
            rep = analysis.exclude_order_2p_at_boundary(p, args.d_min)
        except ValueError as e:
            raise Refusal(str(e)) from None
        return rep.as_dict(), rep.definitive
    if target.startswith("prime-bound:"):
        m = _int_arg(target[len("prime-bound:"):], "m")
        if m < 1:
            raise Refusal("m must be >= 1")
        return {
            "m": m,
            "n": 24 * m,
            "crude": analysis.corollary_prime_bound(m, "crude"),
            "refined": analysis.corollary_prime_bound(m, "refined"),
        }, True
    raise Refusal(f"unknown target {target!r}; expected 38, 2p2:<p> or prime-bound:<m>")


def _int_arg(s: str, name: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise Refusal(f"{name} must be an integer, got {s!r}") from None


def cmd_order58(args) -> dict:
    if args.check == "enumerate":
        out = search.enumerate_selfdual_8_4_4()
        return {
            "examined": out.examined,
            "codes": len(out.survivors),
            "all_equivalent_to_hamming": all(c["equivalence_to_hamming"] is not None for c in out.certificates),
            "all_doubly_even": all(codes.is_doubly_even(c) for c in out.survivors),
            "aut_order_hamming": codes.aut_order_small(constructions.extended_hamming8()),
        }
    if args.check == "pullback":
        g = search.build_g58(args.offset)
        out = search.enumerate_selfdual_8_4_4()
        dims = [search.pullback_fixed_dim(a, g) for a in out.survivors]
        adm = [d for a, d in zip(out.survivors, dims) if search.admissible_for_extremal(a)]
        return {
            "g": perms.format_perm(g),
            "type": str(perms.aut_type(g, 29)),
            "codes": len(dims),
            "dims": {str(k): dims.count(k) for k in sorted(set(dims))},
            "max_dim": max(dims),
            "admissible_codes": len(adm),
            "max_dim_admissible": max(adm),
            "structure_cases": search.order58_structure_cases(),
        }
    if args.check == "dc-search":
        if not args.heavy:
            raise Refusal("dc-search is a long-running search; pass --heavy to run it")
        out = search.search_bordered_dc_60(args.d, budget=args.budget, shard=args.shard,
                                           num_shards=args.num_shards, threads=args.threads)
        classes = search.enumerator_classes(out)
        inv = search.invariant_classes(out)
        rows = [c["first_row"] for c in out.certificates]
        return {
            "shard": f"{args.shard}/{args.num_shards}",
            "complete": out.complete,
            "examined": out.examined,
            "survivors": len(out.survivors),
            "enumerator_classes": len(classes),
            "classes": [
                {"weight_enumerator": dict(k), "first_rows": v} for k, v in sorted(classes.items())
            ],
            "inequivalent_classes": len(inv),
            "multiplier_orbits": [len(o) for o in search.multiplier_orbits(rows)],
            "all_singly_even": all(c["singly_even"] for c in out.certificates),
            "circulant_types": sorted({str(c["circulant_automorphism"]) for c in out.certificates}),
        }
    raise Refusal(f"unknown check {args.check!r}")


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="selfdual", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = sub.add_parser("info", help="parameters of a code")
    sp.add_argument("code")
    sp.add_argument("--max-k", type=int, default=30, help="skip the distance above this dimension")
    common(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("decompose", help="module structure under an automorphism of order 2p")
    sp.add_argument("code")
    sp.add_argument("perm")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("exclude", help="exclusion arguments")
    sp.add_argument("target", help="38 | 2p2:<p> | prime-bound:<m>")
    sp.add_argument("--table", help="best-known distance CSV (n,k,d_upper); default: shipped table")
    sp.add_argument("--no-table", action="store_true", help="run without any distance table")
    sp.add_argument("--d-min", type=int, default=6, help="minimum distance for 2p2 targets")
    common(sp)
    sp.set_defaults(func=cmd_exclude)

    sp = sub.add_parser("order58", help="order-58 computations for length 120")
    sp.add_argument("check", choices=["enumerate", "pullback", "dc-search"])
    sp.add_argument("--offset", type=int, default=15, help="alignment of the 29-cycle pairs in g")
    sp.add_argument("--heavy", action="store_true", help="opt in to the long double-circulant search")
    sp.add_argument("--d", type=int, default=12)
    sp.add_argument("--budget", type=int, default=None, help="max first rows examined in this shard")
    sp.add_argument("--shard", type=int, default=0)
    sp.add_argument("--num-shards", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_order58)
    return ap


def run(argv: Optional[list] = None) -> tuple[int, Optional[Report], str]:
    """Run a command; returns (exit code, report or None, rendered output)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    files = [getattr(args, "code", None), getattr(args, "perm", None), getattr(args, "table", None)]
    t0 = time.perf_counter()
    try:
        digest = _digest(args, [f for f in files if f and Path(f).is_file()])
        out = args.func(args)
    except Refusal as e:
        msg = f"error: {e}"
        if args.json:
            msg = json.dumps({"command": argv, "error": str(e)})
        return EXIT_REFUSED, None, msg
    results, definitive = out if isinstance(out, tuple) else (out, True)
    rep = Report(command=argv, inputs_digest=digest, results=results,
                 timing=time.perf_counter() - t0, definitive=definitive)
    text = json.dumps(rep.as_dict(), indent=2, default=str) if args.json else rep.render_text()
    return (EXIT_OK if definitive else EXIT_INCONCLUSIVE), rep, text


def main(argv: Optional[list] = None) -> int:
    code, _, text = run(argv)
    print(text, file=sys.stderr if code == EXIT_REFUSED else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
