"""Shardable search for bordered double-circulant self-dual [60,30,12] codes.

Run shards independently (e.g. --shard 0..15 --num-shards 16), each writing a
JSON file, then merge with --merge.
"""
import argparse
import json
import sys
from pathlib import Path

from selfdual.search import SearchOutcome, multiplier_orbits, search_bordered_dc_60


def _classes(certs: list[dict]) -> dict:
    we = {json.dumps(sorted(c["weight_enumerator"].items())) for c in certs if "weight_enumerator" in c}
    inv = {json.dumps([sorted(c.get("weight_enumerator", {}).items()), c["pair_invariant"]]) for c in certs}
    orbits = multiplier_orbits([c["first_row"] for c in certs])
    return {"rows": len(certs), "enumerator_classes": len(we), "invariant_classes": len(inv),
            "multiplier_orbits": [len(o) for o in orbits],
            "all_singly_even": all(c["singly_even"] for c in certs),
            "circulant_types": sorted({str(c["circulant_automorphism"]) for c in certs})}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--shard", type=int, default=0)
    ap.add_argument("--num-shards", type=int, default=1)
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--fast", action="store_true", help="skip full weight enumerators")
    ap.add_argument("--out", type=Path, default=None)
    ap.add_argument("--merge", nargs="+", type=Path, help="merge shard JSON files instead of searching")
    args = ap.parse_args()

    if args.merge:
        certs, complete = [], True
        for f in args.merge:
            blob = json.loads(f.read_text())
            certs += blob["certificates"]
            complete &= blob["complete"]
        print(json.dumps({"complete": complete, **_classes(certs)}, indent=2))
        return

    out: SearchOutcome = search_bordered_dc_60(12, budget=args.budget, shard=args.shard,
                                               num_shards=args.num_shards, threads=args.threads,
                                               full_enumerators=not args.fast,
                                               progress=lambda r: print(f"candidate {r:#x}", file=sys.stderr))
    blob = {"shard": args.shard, "num_shards": args.num_shards, "complete": out.complete,
            "examined": out.examined, "elapsed_s": round(out.elapsed, 1), "certificates": out.certificates}
    text = json.dumps(blob, indent=2, default=list)
    if args.out:
        args.out.write_text(text)
    else:
        print(text)
    print(json.dumps(_classes(out.certificates), indent=2), file=sys.stderr)


if __name__ == "__main__":
    main()
