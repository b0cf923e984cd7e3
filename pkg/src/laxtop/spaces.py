"""Standard example spaces used by demos, the harness and the test-suite."""

from __future__ import annotations

from .finspace import FiniteSpace, build_space


def point() -> FiniteSpace:
    return build_space(["*"], order=[], name="1")


def sierpinski() -> FiniteSpace:
    """Two points 0 < 1; {1} closed, {0} open."""
    return build_space(["0", "1"], order=[("0", "1")], name="S")


def chain(n: int) -> FiniteSpace:
    pts = [str(i) for i in range(n)]
    return build_space(
        pts, order=[(str(i), str(i + 1)) for i in range(n - 1)], name=f"C{n}"
    )


def antichain(n: int) -> FiniteSpace:
    return build_space([str(i) for i in range(n)], order=[], name=f"D{n}")


def diamond() -> FiniteSpace:
    """The four-element Boolean lattice."""
    return build_space(
        ["bot", "a", "b", "top"],
        order=[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        name="2x2",
    )


def m3() -> FiniteSpace:
    """Three incomparable atoms between bottom and top; not distributive."""
    return build_space(
        ["bot", "a", "b", "c", "top"],
        order=[
            ("bot", "a"),
            ("bot", "b"),
            ("bot", "c"),
            ("a", "top"),
            ("b", "top"),
            ("c", "top"),
        ],
        name="M3",
    )


def div12() -> FiniteSpace:
    """Divisors of 12 under reverse divisibility: 1 on top, 12 at the bottom.

    Meets are least common multiples and joins are greatest common divisors,
    e.g. meet(4, 6) = 12 and join(4, 6) = 2.
    """
    divisors = [1, 2, 3, 4, 6, 12]
    # x <= y iff y divides x
    order = [
        (str(x), str(y)) for x in divisors for y in divisors if x != y and x % y == 0
    ]
    return build_space([str(d) for d in divisors], order=order, name="Div12")
