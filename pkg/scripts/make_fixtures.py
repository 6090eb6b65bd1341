"""Write the Golay and XQR48 code files plus order-6 automorphisms in CLI format."""
import argparse
from pathlib import Path

from selfdual.codes import write_code
from selfdual.constructions import find_element_of_order, psl2_generators, xqr
from selfdual.perms import format_perm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("fixtures"))
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for q, name in ((23, "golay"), (47, "xqr48")):
        c = xqr(q)
        write_code(args.out / f"{name}.txt", c, comment=f"extended QR code, q = {q}")
        g = find_element_of_order(psl2_generators(q), 6, seed=args.seed)
        (args.out / f"{name}_g6.txt").write_text(format_perm(g) + "\n")
        print(f"wrote {name}: [{c.n},{c.k}] and an order-6 automorphism")


if __name__ == "__main__":
    main()
