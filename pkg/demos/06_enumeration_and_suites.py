"""Poset enumeration and the exhaustive verification suites.

Run:  python demos/06_enumeration_and_suites.py
"""

from laxtop.enumeration import (
    dedup_by_isomorphism,
    enumerate_labeled_posets,
    enumerate_posets,
)
from laxtop.harness import HarnessConfig, paper_check


def main():
    print("poset counts, canonical enumeration vs brute-force dedup:")
    for n in range(1, 5):
        fast = len(enumerate_posets(n))
        slow = len(dedup_by_isomorphism(enumerate_labeled_posets(n)))
        labeled = len(enumerate_labeled_posets(n))
        print(f"  n={n}: unlabeled {fast} (oracle {slow}), labeled {labeled}")

    print("\nrunning three verification suites at max_points=3:")
    config = HarnessConfig(
        max_points=3,
        suites=(
            "finite-sober",
            "vietoris-algebra-equivalence",
            "lan-order-formula",
        ),
    )
    report = paper_check(config)
    for suite in report.suites:
        print(f"  {suite.name}: {suite.passed} passed, {suite.failed} failed")
    print("all green:", report.ok)


if __name__ == "__main__":
    main()
