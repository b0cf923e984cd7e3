import pytest

from laxtop import spaces
from laxtop.errors import MeetsMissing, NotT0
from laxtop.finspace import build_space, cmap
from laxtop.vietoris import (
    set_label,
    vietoris_algebra_check,
    vietoris_functor_map,
    vietoris_monad,
    vietoris_space,
)


def test_set_label_follows_point_order():
    s = spaces.chain(3)
    assert set_label({"2", "0"}, s.points) == "{0,2}"
    assert set_label(set(), s.points) == "{}"


def test_vietoris_of_sierpinski_is_three_chain():
    v = vietoris_space(spaces.sierpinski())
    assert set(v.space.points) == {"{}", "{1}", "{0,1}"}
    # reverse containment: larger closed sets are lower
    assert v.space.leq("{0,1}", "{1}")
    assert v.space.leq("{1}", "{}")
    assert not v.space.leq("{}", "{1}")


def test_vietoris_counts():
    # closed sets are up-closed sets of the natural order
    assert len(vietoris_space(spaces.chain(3)).space.points) == 4
    assert len(vietoris_space(spaces.antichain(3)).space.points) == 8
    assert len(vietoris_space(spaces.diamond()).space.points) == 6


def test_functor_map_takes_closure_of_image():
    f = cmap(spaces.chain(2), spaces.chain(3), {"0": "0", "1": "1"})
    vf = vietoris_functor_map(f)
    assert vf("{0,1}") == "{0,1,2}"  # closure of {0, 1} in the 3-chain
    assert vf("{}") == "{}"


def test_monad_unit_is_point_closure():
    monad = vietoris_monad(spaces.sierpinski())
    assert monad.unit("1") == "{1}"
    assert monad.unit("0") == "{0,1}"
    assert monad.associativity_checked


def test_monad_mult_is_union():
    monad = vietoris_monad(spaces.sierpinski())
    v, vv = monad.v, monad.vv
    family = vv.label_of(v.space.up_closure(["{1}"]))
    assert monad.mult(family) == "{1}"


def test_algebra_on_complete_lattices():
    from laxtop.order import lattice_ops

    for s in (spaces.chain(3), spaces.diamond(), spaces.div12(), spaces.m3()):
        check = vietoris_algebra_check(s)
        assert check.ok
        # the empty closed set goes to the empty meet, i.e. the top
        assert check.structure("{}") == lattice_ops(s).top
    check = vietoris_algebra_check(spaces.diamond())
    assert check.structure("{}") == "top"
    assert check.structure("{a,b,top}") == "bot"


def test_algebra_fails_without_meets():
    with pytest.raises(MeetsMissing):
        vietoris_algebra_check(spaces.antichain(2))


def test_algebra_needs_t0():
    s = build_space(["a", "b"], order=[("a", "b"), ("b", "a")])
    with pytest.raises(NotT0):
        vietoris_algebra_check(s)


def test_free_algebra_is_an_algebra():
    # V(X) itself always satisfies the algebra laws
    for s in (spaces.sierpinski(), spaces.antichain(3)):
        v = vietoris_space(s, check_topology=False)
        assert vietoris_algebra_check(v.space).ok
