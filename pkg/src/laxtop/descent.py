"""Descent and effective-descent checkers on finite spaces.

On a finite space every ultrafilter is principal, so ultrafilter convergence
collapses to the natural order: convergence statements become order-pair
conditions, descent in Top becomes pair lifting, and effective descent in
Top becomes 2-chain lifting.  Over a lattice base the lax-comma conditions
reduce to join identities over lifted pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InternalInconsistency,
    NotALattice,
    NotCompletelyDistributive,
    NotT0,
)
from .finspace import CMap, FiniteSpace, cmap, product_space
from .famx import fam_descent_check, fam_effective_descent_check, to_fam
from .laxcomma import LaxMorphism
from .order import distributivity_report, heyting_report, lattice_ops, lattice_report


def _tri(v):
    return {True: "true", False: "false", None: "unknown"}[v]


@dataclass(frozen=True)
class DescentReport:
    category: str  # "top" | "fam" | "laxcomma"
    is_descent: object  # True / False / None (unknown)
    is_effective: object
    witnesses: tuple = ()
    preconditions_checked: tuple = ()
    notes: tuple = ()

    def to_json_dict(self):
        return {
            "category": self.category,
            "is_descent": _tri(self.is_descent),
            "is_effective": _tri(self.is_effective),
            "witnesses": [list(w) for w in self.witnesses],
            "preconditions_checked": list(self.preconditions_checked),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class SigmaReport:
    table: tuple  # (principal ultrafilter of a point, smallest convergence point)
    adjunction_ok: bool


def sigma(space: FiniteSpace) -> SigmaReport:
    """Smallest convergence points of principal ultrafilters, with adjunction.

    A principal ultrafilter at x converges to exactly the points above x, so
    its smallest convergence point is x itself; the adjunction says that
    converging to z is the same as the smallest convergence point lying
    below z, which is checked pointwise.
    """
    if not space.is_t0():
        raise NotT0("smallest convergence points need a T0 space")
    table = tuple((x, x) for x in space.points)
    ok = all(
        space.leq(x, z) == space.leq(dict(table)[x], z)
        for x in space.points
        for z in space.points
    )
    return SigmaReport(table, ok)


def scp_meet_compat_check(base: FiniteSpace) -> bool:
    """Binary meets commute with taking smallest convergence points.

    Both routes around the square are evaluated on every principal
    ultrafilter of the product: meet first then take the smallest
    convergence point, or project to the two smallest convergence points
    and meet those.
    """
    report = lattice_report(base)
    if not (report.is_meet_semilattice and report.is_complete_lattice):
        raise NotALattice("meet-compatibility needs a complete lattice base")
    ops = lattice_ops(base)
    prod = product_space([base, base])
    meet_map = cmap(
        prod.space,
        base,
        {
            f"({x},{y})": ops.meet(x, y)
            for x in base.points
            for y in base.points
        },
    )
    pi1, pi2 = prod.maps
    for p in prod.space.points:
        via_meet = meet_map(p)  # sigma of the pushed-forward ultrafilter
        via_projections = ops.meet(pi1(p), pi2(p))
        if via_meet != via_projections:
            return False
    return True


def _pair_lifts(f: CMap):
    """For each pair b' <= b, the lifted pairs a' <= a over it."""
    out = {}
    src, tgt = f.source, f.target
    pairs = [(a1, a) for a1 in src.points for a in src.points if src.leq(a1, a)]
    for b1 in tgt.points:
        for b in tgt.points:
            if tgt.leq(b1, b):
                out[(b1, b)] = [
                    (a1, a) for (a1, a) in pairs if f(a1) == b1 and f(a) == b
                ]
    return out


def top_descent_check(f: CMap) -> DescentReport:
    """Descent in Top: every comparable pair downstairs lifts upstairs."""
    lifts = _pair_lifts(f)
    for (b1, b), pairs in lifts.items():
        if not pairs:
            return DescentReport(
                "top", False, None, witnesses=(("pair", (b1, b)),)
            )
    return DescentReport("top", True, None)


def top_effective_descent_check(f: CMap) -> DescentReport:
    """Effective descent in Top: every 2-chain downstairs lifts upstairs."""
    descent = top_descent_check(f)
    src, tgt = f.source, f.target
    chains = [
        (a0, a1, a2)
        for a0 in src.points
        for a1 in src.points
        if src.leq(a0, a1)
        for a2 in src.points
        if src.leq(a1, a2)
    ]
    for b0 in tgt.points:
        for b1 in tgt.points:
            if not tgt.leq(b0, b1):
                continue
            for b2 in tgt.points:
                if not tgt.leq(b1, b2):
                    continue
                if not any(
                    f(a0) == b0 and f(a1) == b1 and f(a2) == b2
                    for (a0, a1, a2) in chains
                ):
                    return DescentReport(
                        "top",
                        descent.is_descent,
                        False,
                        witnesses=descent.witnesses + (("chain", (b0, b1, b2)),),
                    )
    return DescentReport("top", descent.is_descent, True, witnesses=descent.witnesses)


@dataclass(frozen=True)
class ConditionVerdict:
    ok: bool
    witness: object

    def __bool__(self):
        return self.ok


def _lift_value_sets(f: LaxMorphism):
    """Map each pair b' <= b to the sorted set of source values over it."""
    lifts = _pair_lifts(f.underlying)
    src = f.source
    return {
        key: frozenset(src.value(a1) for (a1, _) in pairs)
        for key, pairs in lifts.items()
    }


@lru_cache(maxsize=None)
def _all_w_ok(base: FiniteSpace, bound, values: frozenset) -> bool:
    """Is every w <= bound recovered as the join of its meets with values?"""
    ops = lattice_ops(base)
    for w in base.points:
        if not base.leq(w, bound):
            continue
        if ops.join_of(ops.meet(w, v) for v in values) != w:
            return False
    return True


def convergence_descent_check(f: LaxMorphism) -> ConditionVerdict:
    """The all-w lifting condition over every comparable pair downstairs.

    For b' <= b and every w below the value at b', w must be the join of
    its meets with the source values sitting over the pair.
    """
    base = f.source.base
    report = lattice_report(base)
    if not (report.is_meet_semilattice and report.is_join_semilattice and report.is_complete_lattice):
        raise NotALattice("the all-w condition needs a complete lattice base")
    ops = lattice_ops(base)
    tgt = f.target
    value_sets = _lift_value_sets(f)
    for b1 in tgt.space.points:
        for b in tgt.space.points:
            if not tgt.space.leq(b1, b):
                continue
            values = value_sets[(b1, b)]
            bound = tgt.value(b1)
            if _all_w_ok(base, bound, values):
                continue
            for w in base.points:  # recover the smallest witness
                if base.leq(w, bound) and ops.join_of(
                    ops.meet(w, v) for v in values
                ) != w:
                    return ConditionVerdict(False, (b1, b, w))
    return ConditionVerdict(True, None)


@lru_cache(maxsize=None)
def _join_cached(base: FiniteSpace, values: frozenset):
    return lattice_ops(base).join_of(values)


def _join_condition(f: LaxMorphism) -> ConditionVerdict:
    """For each pair b' <= b, the value at b' is the join of lifted values."""
    base = f.source.base
    tgt = f.target
    value_sets = _lift_value_sets(f)
    for b1 in tgt.space.points:
        for b in tgt.space.points:
            if not tgt.space.leq(b1, b):
                continue
            if _join_cached(base, value_sets[(b1, b)]) != tgt.value(b1):
                return ConditionVerdict(False, (b1, b))
    return ConditionVerdict(True, None)


def frame_effective_descent_check(f: LaxMorphism) -> DescentReport:
    """Effective descent over a frame base: 2-chain lifting plus the join law.

    On a non-frame base no characterization is available; the verdict
    degrades to unknown, carrying the partial all-w evidence.
    """
    base = f.source.base
    report = lattice_report(base)
    if not (report.is_meet_semilattice and report.is_join_semilattice and report.is_complete_lattice):
        raise NotALattice("effective-descent analysis needs a complete lattice base")
    pre = ["complete-lattice"]
    if scp_meet_compat_check(base):
        pre.append("meet-compatibility")
    top_eff = top_effective_descent_check(f.underlying)
    if not heyting_report(base).is_heyting:
        allw = convergence_descent_check(f)
        return DescentReport(
            "laxcomma",
            None,
            None,
            witnesses=() if allw.ok else (("all-w", allw.witness),),
            preconditions_checked=tuple(pre),
            notes=("base is not a frame; verdict unknown",
                   f"all-w condition: {allw.ok}"),
        )
    pre.append("frame")
    joins = _join_condition(f)
    effective = bool(top_eff.is_effective) and joins.ok
    witnesses = ()
    if not top_eff.is_effective:
        witnesses += tuple(w for w in top_eff.witnesses if w[0] == "chain")
    if not joins.ok:
        witnesses += (("join", joins.witness),)
    return DescentReport(
        "laxcomma",
        True if effective else None,
        effective,
        witnesses=witnesses,
        preconditions_checked=tuple(pre),
    )


def laxcomma_effective_descent(f: LaxMorphism) -> DescentReport:
    """Best available verdict for effective descent over a lattice base.

    Frame bases get the definitive check.  Otherwise: failing 2-chain
    lifting or family descent refutes; passing the family effectiveness
    criterion makes the all-w condition decisive; anything else is unknown.
    """
    base = f.source.base
    if heyting_report(base).is_heyting:
        return frame_effective_descent_check(f)
    report = lattice_report(base)
    if not (report.is_meet_semilattice and report.is_join_semilattice and report.is_complete_lattice):
        raise NotALattice("effective-descent analysis needs a complete lattice base")
    pre = ["complete-lattice"]
    if scp_meet_compat_check(base):
        pre.append("meet-compatibility")
    top_eff = top_effective_descent_check(f.underlying)
    if top_eff.is_effective is False:
        return DescentReport(
            "laxcomma", None, False,
            witnesses=top_eff.witnesses,
            preconditions_checked=tuple(pre),
            notes=("underlying map fails 2-chain lifting",),
        )
    fam = to_fam(f)
    fam_desc = fam_descent_check(fam)
    if not fam_desc:
        return DescentReport(
            "laxcomma", None, False,
            witnesses=(("fam-descent", fam_desc.witness),),
            preconditions_checked=tuple(pre),
            notes=("family image fails descent",),
        )
    fam_eff = fam_effective_descent_check(fam)
    allw = convergence_descent_check(f)
    if fam_eff:
        verdict = bool(allw)
        return DescentReport(
            "laxcomma",
            True if verdict else None,
            verdict,
            witnesses=() if allw.ok else (("all-w", allw.witness),),
            preconditions_checked=tuple(pre) + ("fam-effective",),
        )
    return DescentReport(
        "laxcomma", True, None,
        witnesses=() if allw.ok else (("all-w", allw.witness),),
        preconditions_checked=tuple(pre),
        notes=("family image not known effective; no characterization applies",
               f"all-w condition: {allw.ok}"),
    )


def cd_filtration_descent_check(f: LaxMorphism) -> DescentReport:
    """Effective descent via level filtrations over a completely
    distributive base: 2-chain lifting plus lifting of every pair within a
    beta-level into the alpha-level of each totally-below element.
    Cross-checked against the frame characterization.
    """
    base = f.source.base
    dist = distributivity_report(base)
    if not dist.is_completely_distributive:
        raise NotCompletelyDistributive("filtration criterion needs complete distributivity")
    totally_below = dist.totally_below_table
    src, tgt = f.source, f.target
    top_eff = top_effective_descent_check(f.underlying)
    witness = None
    if top_eff.is_effective:
        lifts = _pair_lifts(f.underlying)
        for u in base.points:
            below = [v for (v, uu) in totally_below if uu == u]
            b_level = [b for b in tgt.space.points if base.leq(u, tgt.value(b))]
            for b1 in b_level:
                for b in b_level:
                    if not tgt.space.leq(b1, b):
                        continue
                    for v in below:
                        if not any(
                            base.leq(v, src.value(a1)) and base.leq(v, src.value(a))
                            for (a1, a) in lifts[(b1, b)]
                        ):
                            witness = (u, v, b1, b)
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness:
                break
        effective = witness is None
    else:
        effective = False
        witness = next(w[1] for w in top_eff.witnesses if w[0] == "chain")
    report = DescentReport(
        "laxcomma",
        True if effective else None,
        effective,
        witnesses=() if witness is None else (("filtration", witness),),
        preconditions_checked=("completely-distributive",),
    )
    frame = frame_effective_descent_check(f)
    if frame.is_effective is not None and frame.is_effective != effective:
        raise InternalInconsistency(
            "filtration criterion disagrees with the frame characterization"
        )
    return report


@dataclass(frozen=True)
class ForgetfulReport:
    ok: bool
    details: tuple = ()


def forgetful_preservation_check(f: LaxMorphism) -> ForgetfulReport:
    """Effective descent downstairs must survive both forgetful functors.

    A definitive positive lax-comma verdict forces 2-chain lifting in Top
    and descent of the family image; for a surjection onto a point, the
    regular-epi structure value must be the join of the source values.
    """
    verdict = laxcomma_effective_descent(f)
    details = []
    ok = True
    if verdict.is_effective is True:
        top_eff = top_effective_descent_check(f.underlying)
        fam_desc = fam_descent_check(to_fam(f))
        if top_eff.is_effective is not True:
            ok = False
            details.append(("top-effective", False))
        if not fam_desc:
            ok = False
            details.append(("fam-descent", fam_desc.witness))
    tgt = f.target
    if len(tgt.space.points) == 1 and f.underlying.is_surjective():
        point = tgt.space.points[0]
        expected = _join_cached(
            f.source.base,
            frozenset(f.source.value(a) for a in f.source.space.points),
        )
        is_regular_epi = tgt.value(point) == expected
        details.append(("regular-epi-to-point", is_regular_epi))
    return ForgetfulReport(ok, tuple(details))
