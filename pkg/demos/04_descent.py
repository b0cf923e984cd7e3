"""Descent vs effective descent, in Top and in the lax comma category.

Run:  python demos/04_descent.py
"""

from laxtop import spaces
from laxtop.descent import (
    laxcomma_effective_descent,
    top_descent_check,
    top_effective_descent_check,
)
from laxtop.famx import fam_descent_check, fam_morphism, fam_object
from laxtop.finspace import build_space, cmap
from laxtop.laxcomma import lax_morphism, lax_object


def main():
    c3 = spaces.chain(3)

    # three 2-chains cover every comparable pair of the 3-chain, so the map
    # is a descent morphism; no 2-chain lifts, so it is not effective
    src = build_space(
        ["a0", "a1", "b1", "b2", "c0", "c2"],
        order=[("a0", "a1"), ("b1", "b2"), ("c0", "c2")],
    )
    f = cmap(
        src, c3,
        {"a0": "0", "a1": "1", "b1": "1", "b2": "2", "c0": "0", "c2": "2"},
    )
    print("three 2-chains onto the 3-chain:")
    print("  descent:", top_descent_check(f).is_descent)
    eff = top_effective_descent_check(f)
    print("  effective:", eff.is_effective, " witness:", eff.witnesses)

    # lax comma over a frame: effective = 2-chain lifting + join recovery
    pt = spaces.point()
    tgt = lax_object(pt, c3, {"*": "2"})
    for value in ("2", "1"):
        m = lax_morphism(
            cmap(pt, pt, {"*": "*"}), lax_object(pt, c3, {"*": value}), tgt
        )
        rep = laxcomma_effective_descent(m)
        print(f"\n(1, {value}) -> (1, 2) over the 3-chain:")
        print("  effective:", rep.is_effective,
              " preconditions:", rep.preconditions_checked)
        if rep.witnesses:
            print("  witnesses:", rep.witnesses)

    # the family shadow refutes quickly over Sierpinski
    s = spaces.sierpinski()
    low = fam_morphism(
        {"i": "j"}, fam_object(s, {"i": "0"}), fam_object(s, {"j": "1"})
    )
    verdict = fam_descent_check(low)
    print("\nfamily (0) over (1) in Fam(S): descent:", bool(verdict),
          " witness:", verdict.witness)


if __name__ == "__main__":
    main()
