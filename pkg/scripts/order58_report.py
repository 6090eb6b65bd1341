"""Order-58 computations at length 120: the [8,4,4] codes and the pullback dimensions."""
import argparse
import json
from collections import Counter

from selfdual.codes import aut_order_small
from selfdual.constructions import extended_hamming8
from selfdual.perms import aut_type, power
from selfdual.search import (admissible_for_extremal, build_g58, enumerate_selfdual_8_4_4,
                             order58_structure_cases, pullback_fixed_dim)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--offset", type=int, default=15)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    g = build_g58(args.offset)
    out = enumerate_selfdual_8_4_4()
    rows = []
    for a in out.survivors:
        rows.append({"code": [format(r, "08b")[::-1] for r in a.rows],
                     "pullback_dim": pullback_fixed_dim(a, g),
                     "admissible": admissible_for_extremal(a),
                     "contains_fixed_point_word": 0b11110000 in a})
    summary = {
        "g_type": str(aut_type(g, 29)),
        "g2_type": str(aut_type(power(g, 2), 29)),
        "codes": len(rows),
        "aut_order_hamming": aut_order_small(extended_hamming8()),
        "pullback_histogram": dict(sorted(Counter(r["pullback_dim"] for r in rows).items())),
        "max_admissible": max(r["pullback_dim"] for r in rows if r["admissible"]),
        "structure_cases": order58_structure_cases(),
    }
    if args.json:
        print(json.dumps({"summary": summary, "codes": rows}, indent=2, default=str))
        return
    for k, v in summary.items():
        print(f"{k}: {v}")


if __name__ == "__main__":
    main()
