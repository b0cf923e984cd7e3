"""Finite spaces are preorders: the topology/order dictionary in action.

Run:  python demos/01_spaces_and_orders.py
"""

from laxtop import spaces
from laxtop.finspace import build_space, natural_order, sober_report, t0_report
from laxtop.order import distributivity_report, heyting_report, lattice_ops


def main():
    s = spaces.sierpinski()
    print("Sierpinski space:", s.points)
    print("  open sets:", sorted(sorted(o) for o in s.open_sets()))
    print("  natural order pairs:", sorted(p for p in natural_order(s)))
    print("  every finite poset is sober:", sober_report(s).is_sober)

    # a non-T0 preorder and its reflection
    pre = build_space(["a", "b", "c"], order=[("a", "b"), ("b", "a"), ("a", "c")])
    rep = t0_report(pre)
    print("\npreorder with a ~ b identified by the T0 reflection:")
    print("  reflection points:", rep.reflection.points)

    # lattice arithmetic on the divisor lattice
    div = spaces.div12()
    ops = lattice_ops(div)
    print("\ndivisors of 12 under reverse divisibility:")
    print("  top =", ops.top, " bottom =", ops.bottom)
    print("  meet(4, 6) =", ops.meet("4", "6"), "(the lcm)")
    print("  join(4, 6) =", ops.join("4", "6"), "(the gcd)")
    print("  Heyting:", heyting_report(div).is_heyting)
    print(
        "  completely distributive:",
        distributivity_report(div).is_completely_distributive,
    )

    m3 = spaces.m3()
    hey = heyting_report(m3)
    print("\nM3 (three incomparable atoms) is a complete lattice but not a frame:")
    print("  first missing implication:", hey.failure_witness)


if __name__ == "__main__":
    main()
