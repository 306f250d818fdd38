"""Write SVG shadow diagrams for a few permutations into an output folder."""

import argparse
from pathlib import Path

from patiencesort.geometry import ne_iterates, render_svg, sw_iterates
from patiencesort.perm_core import parse_permutation

DEFAULT = ["64518723", "312", "231", "4231", "45312", "5764132"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("perms", nargs="*", default=DEFAULT)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for text in args.perms:
        p = parse_permutation(text)
        for kind, its in (("ne", ne_iterates(p)), ("sw", sw_iterates(p))):
            for d in its:
                path = out / f"{text}_{kind}{d.iterate}.svg"
                path.write_text(render_svg([d], d.salient_points()))
            path = out / f"{text}_{kind}_all.svg"
            path.write_text(render_svg(its))
            print(f"{text} {kind}: {len(its)} iterates")
    print(f"wrote to {out}/")


if __name__ == "__main__":
    main()
