"""The lower Vietoris monad and its algebras (= finite complete lattices).

Run:  python demos/05_vietoris.py
"""

from laxtop import spaces
from laxtop.errors import MeetsMissing
from laxtop.vietoris import vietoris_algebra_check, vietoris_monad, vietoris_space


def main():
    s = spaces.sierpinski()
    v = vietoris_space(s)
    print("V(Sierpinski): closed subsets under reverse containment")
    for label, members in v.members:
        print(f"  {label}  (closed set {sorted(members) or '{}'})")
    print("  order is a 3-chain:",
          v.space.leq("{0,1}", "{1}") and v.space.leq("{1}", "{}"))

    monad = vietoris_monad(s)
    print("\nmonad laws: unit = point closure, mult = union")
    print("  unit(0) =", monad.unit("0"), " unit(1) =", monad.unit("1"))
    print("  associativity checked:", monad.associativity_checked)

    print("\nalgebras are the complete lattices (structure = take meets):")
    for space in (spaces.chain(3), spaces.diamond(), spaces.m3()):
        check = vietoris_algebra_check(space)
        print(f"  {space.name}: algebra laws pass = {check.ok}")
    try:
        vietoris_algebra_check(spaces.antichain(2))
    except MeetsMissing as exc:
        print("  2-antichain: no algebra --", exc)


if __name__ == "__main__":
    main()
