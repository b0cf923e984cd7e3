"""Exponentials and the exponentiability criterion over lattice bases.

Run:  python demos/03_exponentials.py
"""

from laxtop import spaces
from laxtop.laxcomma import (
    exponentiability_report,
    exponential_object,
    lax_object,
    verify_universal_property,
)
from laxtop.order import heyting_report


def main():
    base = spaces.chain(3)
    pt = spaces.point()

    # (X, 1_X) ^ (1, x) carries the Heyting implication x => -
    identity_obj = lax_object(base, base, {p: p for p in base.points})
    one_x = lax_object(pt, base, {"*": "1"})
    expo = exponential_object(one_x, identity_obj)
    hey = dict(heyting_report(base).implication_table)
    print("exponential (X,1)^(1,1) over the 3-chain:")
    for label, h in expo.functions:
        print(f"  {label}: structure {expo.obj.value(label)}"
              f"  (implication 1 => {h('*')} is {hey[('1', h('*'))]})")
    oracle = verify_universal_property(
        "exponential", {"a": one_x, "b": identity_obj, "exponential": expo}
    )
    print("  mate-bijection oracle:", oracle.ok)

    # over a frame every object with exponentiable carrier is exponentiable
    div = spaces.div12()
    rep = exponentiability_report(lax_object(pt, div, {"*": "4"}))
    print("\n(1, 4) over the divisor lattice:",
          rep.exponentiable, f"({rep.mode})")

    # over M3, meets do not preserve binary joins: (1, a) is refuted
    m3 = spaces.m3()
    rep = exponentiability_report(lax_object(pt, m3, {"*": "a"}))
    print("(1, a) over M3:", rep.exponentiable, f"({rep.mode})")
    print("  witness: at point", rep.witness[0],
          "the meet with a fails to preserve the join of", rep.witness[1])


if __name__ == "__main__":
    main()
