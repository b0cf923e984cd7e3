"""Products, coequalizers and initial lifts of lax objects over a base.

Run:  python demos/02_lax_constructions.py
"""

from laxtop import spaces
from laxtop.finspace import cmap
from laxtop.laxcomma import (
    initial_lift,
    lan_extension,
    lax_coequalizer,
    lax_morphism,
    lax_object,
    lax_product,
    verify_universal_property,
)


def main():
    base = spaces.chain(3)
    pt = spaces.point()

    a = lax_object(pt, base, {"*": "1"})
    b = lax_object(pt, base, {"*": "2"})
    prod = lax_product([a, b])
    print("product of (1, 1) and (1, 2) over the 3-chain:")
    print("  structure value:", dict(prod.obj.alpha.table), "(the pointwise meet)")
    oracle = verify_universal_property(
        "product", {"objects": [a, b], "product": prod}
    )
    print("  universal-property oracle:", oracle.ok, f"({oracle.checked} cones)")

    # coequalizer: collapse a discrete pair; the structure is the least
    # continuous extension, i.e. the join over the collapsed fibre
    disc = spaces.antichain(2)
    d = lax_object(disc, base, {"0": "1", "1": "2"})
    bot = lax_object(pt, base, {"*": "0"})
    e1 = lax_morphism(cmap(pt, disc, {"*": "0"}), bot, d)
    e2 = lax_morphism(cmap(pt, disc, {"*": "1"}), bot, d)
    coeq = lax_coequalizer(e1, e2)
    print("\ncoequalizer collapsing values {1, 2} to a point:")
    print("  structure value:", dict(coeq.obj.alpha.table), "(the join)")
    oracle = verify_universal_property(
        "coequalizer", {"f": e1, "g": e2, "coequalizer": coeq}
    )
    print("  universal-property oracle:", oracle.ok)

    # the least extension directly
    beta = cmap(disc, base, {"0": "1", "1": "2"})
    q = cmap(disc, pt, {"0": "*", "1": "*"})
    print("  lan_extension at the point:", lan_extension(beta, q)("*"))

    # initial lift of a two-leg cone: pointwise meet of the composites
    cone = [(p.underlying, o) for p, o in zip(prod.projections, [a, b])]
    lift = initial_lift(prod.obj.space, cone)
    print("\ninitial lift of the projection cone equals the product:",
          lift == prod.obj)


if __name__ == "__main__":
    main()
