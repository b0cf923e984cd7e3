"""The lax comma category of spaces over a fixed finite base.

Objects are pairs (A, alpha: A -> X); morphisms are continuous maps f with
alpha <= beta . f pointwise in the base's natural order.  Constructions
follow the order-theoretic recipes valid over (semi)lattice bases: products
via pointwise meets, coequalizers via least continuous extensions,
exponentials via pointwise implications.  Each construction has a brute-force
universal-property oracle used to certify it on small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BaseMismatch,
    CapExceeded,
    InternalInconsistency,
    MeetsMissing,
    NotAChain,
    NotClosedLevel,
    NotHeyting,
    NotALattice,
    NotParallel,
)
from .finspace import (
    CMap,
    FiniteSpace,
    build_space,
    cmap,
    enumerate_cmaps,
    identity_map,
    induced_space,
    product_space,
    sum_space,
)
from .order import (
    heyting_report,
    lattice_ops,
    lattice_report,
    require_meets,
)


@dataclass(frozen=True)
class LaxObject:
    space: FiniteSpace
    alpha: CMap

    def __post_init__(self):
        if self.alpha.source != self.space:
            raise BaseMismatch("structure map source differs from the carrier space")

    @property
    def base(self) -> FiniteSpace:
        return self.alpha.target

    def value(self, point):
        return self.alpha(point)


def lax_object(space: FiniteSpace, base: FiniteSpace, alpha_table) -> LaxObject:
    return LaxObject(space, cmap(space, base, alpha_table))


@dataclass(frozen=True)
class LaxMorphism:
    underlying: CMap
    source: LaxObject
    target: LaxObject


def is_lax_morphism(f: CMap, src: LaxObject, tgt: LaxObject):
    """Check the lax triangle alpha <= beta . f; returns (ok, witness point)."""
    if src.base != tgt.base:
        raise BaseMismatch("objects live over different bases")
    base = src.base
    for a in src.space.points:
        if not base.leq(src.value(a), tgt.value(f(a))):
            return False, a
    return True, None


def lax_morphism(f: CMap, src: LaxObject, tgt: LaxObject) -> LaxMorphism:
    ok, witness = is_lax_morphism(f, src, tgt)
    if not ok:
        raise BaseMismatch(f"lax triangle fails at point {witness!r}")
    return LaxMorphism(f, src, tgt)


def lax_identity(obj: LaxObject) -> LaxMorphism:
    return LaxMorphism(identity_map(obj.space), obj, obj)


def lax_hom(src: LaxObject, tgt: LaxObject):
    """All lax morphisms src -> tgt, in the deterministic map order."""
    out = []
    for f in enumerate_cmaps(src.space, tgt.space):
        ok, _ = is_lax_morphism(f, src, tgt)
        if ok:
            out.append(LaxMorphism(f, src, tgt))
    return out


def _common_base(objects):
    bases = {o.base for o in objects}
    if len(bases) > 1:
        raise BaseMismatch("objects live over different bases")
    return next(iter(bases)) if bases else None


@dataclass(frozen=True)
class LaxSum:
    obj: LaxObject
    injections: tuple


def lax_sum(objects, base=None) -> LaxSum:
    """Sum: the topological sum with the copairing structure map."""
    objects = list(objects)
    common = _common_base(objects) or base
    if common is None:
        raise BaseMismatch("empty sum needs an explicit base")
    total = sum_space([o.space for o in objects])
    alpha = {}
    for i, o in enumerate(objects):
        for p in o.space.points:
            alpha[f"in{i}:{p}"] = o.value(p)
    obj = lax_object(total.space, common, alpha)
    injections = tuple(
        LaxMorphism(inj, o, obj) for inj, o in zip(total.maps, objects)
    )
    return LaxSum(obj, injections)


@dataclass(frozen=True)
class LaxEqualizer:
    obj: LaxObject
    embedding: LaxMorphism


def lax_equalizer(f: LaxMorphism, g: LaxMorphism) -> LaxEqualizer:
    """Equalizer: the pointwise-equality subspace with restricted structure."""
    if f.source != g.source or f.target != g.target:
        raise NotParallel("equalizer needs a parallel pair")
    src = f.source
    agree = [a for a in src.space.points if f.underlying(a) == g.underlying(a)]
    sub = induced_space("subspace", src.space, agree)
    obj = lax_object(sub.space, src.base, {a: src.value(a) for a in agree})
    return LaxEqualizer(obj, LaxMorphism(sub.canonical, obj, src))


@dataclass(frozen=True)
class LaxProduct:
    obj: LaxObject
    projections: tuple


def lax_product(objects, base=None) -> LaxProduct:
    """Product: the topological product with the pointwise-meet structure."""
    objects = list(objects)
    common = _common_base(objects) or base
    if common is None:
        raise BaseMismatch("empty product needs an explicit base")
    prod = product_space([o.space for o in objects])
    alpha = {}
    for combo, label in zip(
        itertools.product(*(o.space.points for o in objects)),
        prod.space.points,
    ):
        family = [o.value(p) for o, p in zip(objects, combo)]
        alpha[label] = require_meets(common, family)
    obj = lax_object(prod.space, common, alpha)
    projections = tuple(
        LaxMorphism(proj, obj, o) for proj, o in zip(prod.maps, objects)
    )
    return LaxProduct(obj, projections)


_MINIMALITY_CAP = 4096


def lan_extension(beta: CMap, q: CMap, verify: bool = True) -> CMap:
    """Least continuous extension of beta along q into a complete-lattice base.

    Computed pointwise as the meet over open neighbourhoods of the join of
    beta over the fibre of each neighbourhood; the empty join at an isolated
    point resolves to the bottom element.
    """
    if beta.source != q.source:
        raise NotParallel("beta and q must share their source")
    base = beta.target
    ops = lattice_ops(base)  # raises NotACompleteLattice
    target = q.target
    table = {}
    for c in target.points:
        opens_at_c = [v for v in target.open_sets() if c in v]
        meets = [
            ops.join_of(beta(b) for b in beta.source.points if q(b) in v)
            for v in opens_at_c
        ]
        table[c] = ops.meet_of(meets)
    result = cmap(target, base, table)  # construction validates continuity
    if verify:
        for b in beta.source.points:
            if not base.leq(beta(b), result(q(b))):
                raise InternalInconsistency("extension does not lie above the input")
        candidates = enumerate_cmaps(target, base)
        if len(candidates) <= _MINIMALITY_CAP:
            for delta in candidates:
                if all(base.leq(beta(b), delta(q(b))) for b in beta.source.points):
                    if not all(base.leq(result(c), delta(c)) for c in target.points):
                        raise InternalInconsistency("extension is not minimal")
    return result


@dataclass(frozen=True)
class LaxCoequalizer:
    obj: LaxObject
    quotient: LaxMorphism


def lax_coequalizer(f: LaxMorphism, g: LaxMorphism) -> LaxCoequalizer:
    """Coequalizer: the topological quotient with least-extension structure."""
    if f.source != g.source or f.target != g.target:
        raise NotParallel("coequalizer needs a parallel pair")
    tgt = f.target
    # partition the target points by the equivalence generated by f(a) ~ g(a)
    parent = {p: p for p in tgt.space.points}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    def union(p, q):
        rp, rq = find(p), find(q)
        if rp != rq:
            lo, hi = min(rp, rq), max(rp, rq)
            parent[hi] = lo

    for a in f.source.space.points:
        union(f.underlying(a), g.underlying(a))
    table = {p: find(p) for p in tgt.space.points}
    quot = induced_space("quotient", tgt.space, table)
    gamma = lan_extension(tgt.alpha, quot.canonical)
    obj = LaxObject(quot.space, gamma)
    return LaxCoequalizer(obj, lax_morphism(quot.canonical, tgt, obj))


def lax_compose(outer: LaxMorphism, inner: LaxMorphism) -> LaxMorphism:
    if inner.target != outer.source:
        raise BaseMismatch("composition mismatch")
    return LaxMorphism(
        outer.underlying.compose(inner.underlying), inner.source, outer.target
    )


@dataclass(frozen=True)
class LaxPullback:
    obj: LaxObject
    left: LaxMorphism
    right: LaxMorphism


def lax_pullback(f: LaxMorphism, g: LaxMorphism) -> LaxPullback:
    """Pullback: the agreement subspace of the product, meet structure."""
    if f.target != g.target:
        raise NotParallel("pullback needs a common target")
    prod = lax_product([f.source, g.source])
    pi1, pi2 = prod.projections
    eq = lax_equalizer(lax_compose(f, pi1), lax_compose(g, pi2))
    return LaxPullback(
        eq.obj,
        lax_compose(pi1, eq.embedding),
        lax_compose(pi2, eq.embedding),
    )


def initial_lift(space: FiniteSpace, cone) -> LaxObject:
    """Initial lift of a cone of maps into lax objects: pointwise meet."""
    cone = list(cone)
    bases = {o.base for (_, o) in cone}
    if len(bases) > 1:
        raise BaseMismatch("cone targets live over different bases")
    if not bases:
        raise BaseMismatch("empty cone needs an explicit base; use initial_lift_over")
    return initial_lift_over(space, cone, next(iter(bases)))


def initial_lift_over(space: FiniteSpace, cone, base: FiniteSpace) -> LaxObject:
    ops = lattice_ops(base)  # raises NotACompleteLattice
    table = {
        x: ops.meet_of(o.value(m(x)) for (m, o) in cone) for x in space.points
    }
    return lax_object(space, base, table)


# -- exponentials ----------------------------------------------------------


def function_label(f: CMap) -> str:
    return "{" + ";".join(f"{p}:{v}" for (p, v) in f.table) + "}"


@dataclass(frozen=True)
class Exponential:
    obj: LaxObject
    evaluation: LaxMorphism
    eval_source: LaxObject  # the product (A, alpha) x exponential
    functions: tuple  # (label, CMap) pairs


def exponential_object(a_obj: LaxObject, b_obj: LaxObject) -> Exponential:
    """Exponential: continuous maps with pointwise order, implication structure."""
    if a_obj.base != b_obj.base:
        raise BaseMismatch("objects live over different bases")
    base = a_obj.base
    hey = heyting_report(base)  # raises NoMeets when binary meets are absent
    imp = dict(hey.implication_table)
    maps = enumerate_cmaps(a_obj.space, b_obj.space)
    labels = tuple(function_label(h) for h in maps)
    by_label = dict(zip(labels, maps))
    le = frozenset(
        (la, lb)
        for la in labels
        for lb in labels
        if all(
            b_obj.space.leq(by_label[la](p), by_label[lb](p))
            for p in a_obj.space.points
        )
    )
    exp_space = FiniteSpace(labels, le, provenance="order")
    delta = {}
    for lab, h in zip(labels, maps):
        parts = []
        for a in a_obj.space.points:
            pair = (a_obj.value(a), b_obj.value(h(a)))
            if pair not in imp:
                raise NotHeyting(f"missing implication for {pair}", pair=pair)
            parts.append(imp[pair])
        delta[lab] = require_meets(base, parts)
    exp_obj = lax_object(exp_space, base, delta)

    product = lax_product([a_obj, exp_obj])
    ev_table = {}
    for a in a_obj.space.points:
        for lab in labels:
            ev_table[f"({a},{lab})"] = by_label[lab](a)
    evaluation = lax_morphism(
        cmap(product.obj.space, b_obj.space, ev_table), product.obj, b_obj
    )
    return Exponential(exp_obj, evaluation, product.obj, tuple(zip(labels, maps)))


def transpose_to_product(f: CMap, a_obj: LaxObject, expo: Exponential) -> dict:
    """The mate of f: C -> B^A as a point table on the product A x C."""
    funcs = dict(expo.functions)
    table = {}
    for a in a_obj.space.points:
        for c in f.source.points:
            table[f"({a},{c})"] = funcs[f(c)](a)
    return table


# -- exponentiability ------------------------------------------------------


@dataclass(frozen=True)
class ExponentiabilityReport:
    exponentiable: object  # True / False / None (None: sufficient check failed)
    mode: str  # "definitive" | "sufficient-only"
    witness: object  # (a, family) on a definitive failure
    quotients_checked: int

    def __bool__(self):
        return self.exponentiable is True


def _subsets_sorted(points):
    for r in range(len(points) + 1):
        for combo in itertools.combinations(points, r):
            yield combo


def _lan_commutation_holds(a_obj: LaxObject, gamma: CMap, q: CMap) -> bool:
    """Check both routes of the product/extension exchange law on one quotient."""
    base = a_obj.base
    ops = lattice_ops(base)
    a_space = a_obj.space
    left_factor = lan_extension(gamma, q, verify=False)
    prod_c = product_space([a_space, gamma.source])
    prod_q = product_space([a_space, q.target])
    meet_c = cmap(
        prod_c.space,
        base,
        {
            f"({a},{c})": ops.meet(a_obj.value(a), gamma(c))
            for a in a_space.points
            for c in gamma.source.points
        },
    )
    one_times_q = cmap(
        prod_c.space,
        prod_q.space,
        {
            f"({a},{c})": f"({a},{q(c)})"
            for a in a_space.points
            for c in gamma.source.points
        },
    )
    rhs = lan_extension(meet_c, one_times_q, verify=False)
    for a in a_space.points:
        for y in q.target.points:
            lhs_val = ops.meet(a_obj.value(a), left_factor(y))
            if lhs_val != rhs(f"({a},{y})"):
                return False
            # pointwise identity: meeting before or after the inner join agrees
            opens_at_y = [v for v in q.target.open_sets() if y in v]
            outer1 = ops.meet_of(
                ops.meet(
                    a_obj.value(a),
                    ops.join_of(gamma(c) for c in gamma.source.points if q(c) in v),
                )
                for v in opens_at_y
            )
            outer2 = ops.meet_of(
                ops.join_of(
                    ops.meet(a_obj.value(a), gamma(c))
                    for c in gamma.source.points
                    if q(c) in v
                )
                for v in opens_at_y
            )
            if (outer1 == outer2) != (lhs_val == rhs(f"({a},{y})")):
                raise InternalInconsistency(
                    "pointwise exchange identity disagrees with the extension route"
                )
    return True


def _discrete_space(n: int) -> FiniteSpace:
    pts = tuple(f"c{i}" for i in range(n))
    return FiniteSpace(pts, frozenset((p, p) for p in pts))


def exponentiability_report(obj: LaxObject, max_quotient_points: int = 3) -> ExponentiabilityReport:
    """Decide exponentiability by join preservation of meeting with each value.

    Over a (complete, since finite) lattice base the criterion is exact; the
    verdict is cross-validated against the extension exchange law on a family
    of collapse quotients, raising InternalInconsistency on disagreement.
    Over a meet-semilattice base only the sufficient criterion is available
    and the verdict is labeled "sufficient-only".
    """
    base = obj.base
    report = lattice_report(base)
    if not report.is_meet_semilattice:
        raise NotALattice("exponentiability analysis needs at least binary meets")
    if not (report.is_join_semilattice and report.is_complete_lattice):
        return _sufficient_only_report(obj, report)

    ops = lattice_ops(base)
    witness = None
    for a in obj.space.points:
        x = obj.value(a)
        for s in _subsets_sorted(base.points):
            joined = ops.join_of(s)
            distributed = ops.join_of(ops.meet(x, e) for e in s)
            if ops.meet(x, joined) != distributed:
                witness = (a, s)
                break
        if witness is not None:
            break
    verdict = witness is None

    checked = 0
    if witness is not None:
        # the targeted collapse quotient must reproduce the failure
        a, s = witness
        disc = _discrete_space(len(s))
        q = cmap(disc, _discrete_space(1), {p: "c0" for p in disc.points})
        gamma = cmap(disc, base, dict(zip(disc.points, s)))
        checked += 1
        if _lan_commutation_holds(obj, gamma, q):
            raise InternalInconsistency(
                "join-preservation failure not visible to the exchange law"
            )
    else:
        for n in range(0, max_quotient_points + 1):
            disc = _discrete_space(n)
            q = cmap(disc, _one_point_space(), _collapse_table(disc))
            for gamma_vals in itertools.combinations_with_replacement(base.points, n):
                gamma = cmap(disc, base, dict(zip(disc.points, gamma_vals)))
                checked += 1
                if not _lan_commutation_holds(obj, gamma, q):
                    raise InternalInconsistency(
                        "exchange law fails although all joins are preserved"
                    )
    return ExponentiabilityReport(verdict, "definitive", witness, checked)


def _one_point_space() -> FiniteSpace:
    return FiniteSpace(("c0",), frozenset({("c0", "c0")}))


def _collapse_table(space: FiniteSpace) -> dict:
    return {p: "c0" for p in space.points}


def _sufficient_only_report(obj: LaxObject, report) -> ExponentiabilityReport:
    base = obj.base
    meet = dict()
    for ((x, y), z) in report.meet_table:
        meet[(x, y)] = z
        meet[(y, x)] = z
    if not report.has_top:
        return ExponentiabilityReport(None, "sufficient-only", None, 0)
    for a in obj.space.points:
        x = obj.value(a)
        for y in base.points:
            candidates = [z for z in base.points if base.leq(meet[(x, z)], y)]
            if not any(all(base.leq(w, z) for w in candidates) for z in candidates):
                return ExponentiabilityReport(None, "sufficient-only", (a, y), 0)
    return ExponentiabilityReport(True, "sufficient-only", None, 0)


# -- universal-property oracles --------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    ok: bool
    counterexample: object
    checked: int

    def __bool__(self):
        return self.ok


_TEST_SPACES = (
    FiniteSpace(("t0",), frozenset({("t0", "t0")})),
    FiniteSpace(
        ("t0", "t1"),
        frozenset({("t0", "t0"), ("t1", "t1"), ("t0", "t1")}),
    ),
    FiniteSpace(("t0", "t1"), frozenset({("t0", "t0"), ("t1", "t1")})),
)


def default_test_objects(base: FiniteSpace):
    """Every lax object over the base carried by a space with <= 2 points."""
    out = []
    for space in _TEST_SPACES:
        for alpha in enumerate_cmaps(space, base):
            out.append(LaxObject(space, alpha))
    return out


class _Budget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.cap:
            raise CapExceeded(f"oracle candidate budget {self.cap} exceeded")


def verify_product(objects, product: LaxProduct, test_objects=None, cap=10**6) -> OracleResult:
    """Every lax cone factors through the product by exactly one lax morphism."""
    objects = list(objects)
    base = product.obj.base
    tests = default_test_objects(base) if test_objects is None else test_objects
    budget = _Budget(cap)
    checked = 0
    for cand in tests:
        legs = [lax_hom(cand, o) for o in objects]
        for cone in itertools.product(*legs):
            checked += 1
            mediators = []
            for m in enumerate_cmaps(cand.space, product.obj.space):
                budget.spend()
                if any(
                    proj.underlying.compose(m) != leg.underlying
                    for proj, leg in zip(product.projections, cone)
                ):
                    continue
                ok, _ = is_lax_morphism(m, cand, product.obj)
                if ok:
                    mediators.append(m)
            if len(mediators) != 1:
                return OracleResult(False, (cand, cone, len(mediators)), checked)
    return OracleResult(True, None, checked)


def verify_coequalizer(f: LaxMorphism, g: LaxMorphism, coeq: LaxCoequalizer,
                       test_objects=None, cap=10**6) -> OracleResult:
    """Every coequalizing lax cocone factors uniquely through the quotient."""
    base = coeq.obj.base
    tests = default_test_objects(base) if test_objects is None else test_objects
    budget = _Budget(cap)
    checked = 0
    q = coeq.quotient.underlying
    for cand in tests:
        for h in lax_hom(f.target, cand):
            hu = h.underlying
            if any(
                hu(f.underlying(a)) != hu(g.underlying(a))
                for a in f.source.space.points
            ):
                continue
            checked += 1
            factorizations = []
            for u in enumerate_cmaps(coeq.obj.space, cand.space):
                budget.spend()
                if u.compose(q) != hu:
                    continue
                ok, _ = is_lax_morphism(u, coeq.obj, cand)
                if ok:
                    factorizations.append(u)
            if len(factorizations) != 1:
                return OracleResult(False, (cand, hu, len(factorizations)), checked)
    return OracleResult(True, None, checked)


def verify_exponential(a_obj: LaxObject, b_obj: LaxObject, expo: Exponential,
                       test_objects=None, cap=10**6) -> OracleResult:
    """The mate correspondence is a bijection of hom-sets, both directions."""
    base = a_obj.base
    tests = default_test_objects(base) if test_objects is None else test_objects
    budget = _Budget(cap)
    checked = 0
    for cand in tests:
        prod = lax_product([a_obj, cand])
        direct = {m.underlying.table for m in lax_hom(prod.obj, b_obj)}
        budget.spend(len(direct))
        mates = set()
        for m in lax_hom(cand, expo.obj):
            budget.spend()
            table = transpose_to_product(m.underlying, a_obj, expo)
            mates.add(tuple((p, table[p]) for p in prod.obj.space.points))
        checked += 1
        if mates != direct:
            return OracleResult(
                False, (cand, sorted(mates ^ direct)), checked
            )
    return OracleResult(True, None, checked)


def verify_initial_lift(space: FiniteSpace, cone, lift: LaxObject,
                        test_objects=None, cap=10**6) -> OracleResult:
    """h into the lift is lax exactly when all its cone composites are lax."""
    base = lift.base
    tests = default_test_objects(base) if test_objects is None else test_objects
    budget = _Budget(cap)
    checked = 0
    for cand in tests:
        for h in enumerate_cmaps(cand.space, space):
            budget.spend()
            checked += 1
            into_lift, _ = is_lax_morphism(h, cand, lift)
            through_cone = all(
                is_lax_morphism(m.compose(h), cand, o)[0] for (m, o) in cone
            )
            if into_lift != through_cone:
                return OracleResult(False, (cand, h), checked)
    return OracleResult(True, None, checked)


def verify_universal_property(kind: str, instance: dict, test_objects=None, cap=10**6) -> OracleResult:
    """Dispatch to the brute-force oracle for one construction kind."""
    if kind == "product":
        return verify_product(
            instance["objects"], instance["product"], test_objects, cap
        )
    if kind == "coequalizer":
        return verify_coequalizer(
            instance["f"], instance["g"], instance["coequalizer"], test_objects, cap
        )
    if kind == "exponential":
        return verify_exponential(
            instance["a"], instance["b"], instance["exponential"], test_objects, cap
        )
    if kind == "initial_lift":
        return verify_initial_lift(
            instance["space"], instance["cone"], instance["lift"], test_objects, cap
        )
    raise ValueError(f"unknown universal property kind {kind!r}")


# -- chain filtrations ------------------------------------------------------


@dataclass(frozen=True)
class Filtration:
    base: FiniteSpace
    space: FiniteSpace
    levels: tuple  # (base point, frozenset of space points), in base point order


def is_chain(space: FiniteSpace) -> bool:
    return space.is_t0() and all(
        space.leq(x, y) or space.leq(y, x)
        for x in space.points
        for y in space.points
    )


def chain_filtration(direction: str, data):
    """Convert between a lax object over a chain and its level filtration."""
    if direction == "to":
        obj = data
        base = obj.base
        if not is_chain(base):
            raise NotAChain("filtrations require a chain base")
        levels = tuple(
            (
                u,
                frozenset(
                    a for a in obj.space.points if base.leq(u, obj.value(a))
                ),
            )
            for u in base.points
        )
        return Filtration(base, obj.space, levels)
    if direction == "from":
        filt = data
        base = filt.base
        if not is_chain(base):
            raise NotAChain("filtrations require a chain base")
        levels = dict(filt.levels)
        if set(levels) != set(base.points):
            raise NotClosedLevel("filtration must assign a level to every base point")
        bottom = next(u for u in base.points if all(base.leq(u, v) for v in base.points))
        if levels[bottom] != frozenset(filt.space.points):
            raise NotClosedLevel("bottom level must be the whole space")
        for u, s in levels.items():
            if not filt.space.is_up_closed(s):
                raise NotClosedLevel(f"level at {u!r} is not closed")
        for u in base.points:
            for v in base.points:
                if base.leq(u, v) and not levels[v] <= levels[u]:
                    raise NotClosedLevel("levels must decrease along the chain")
        table = {}
        for a in filt.space.points:
            hits = [u for u in base.points if a in levels[u]]
            table[a] = max(hits, key=lambda u: sum(1 for v in base.points if base.leq(v, u)))
        return lax_object(filt.space, base, table)
    raise ValueError(f"unknown direction {direction!r}")
