"""Transport machinery: graded module homomorphisms (image, preimage, kernel),
localization at homogeneous multiplicative sets, and product modules."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import FiniteModule, FiniteRing, make_module, make_ring
from .errors import HomInvalid, InvalidDenominators, PreconditionViolation
from .grading import GradedModule, GradedRing, Grading, attach_grading, product_assignment
from .subobjects import SUBMODULE, SubobjectHandle, subobject, zero_subobject


# ---------------------------------------------------------------------------
# graded homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedHom:
    """A validated graded R-homomorphism between graded modules, as a table."""

    source: GradedModule
    target: GradedModule
    mapping: tuple  # mapping[m] -> target element index


def make_hom(source: GradedModule, target: GradedModule, mapping) -> GradedHom:
    """Validate additivity, linearity, and degree preservation exhaustively."""
    if source.gring is not target.gring:
        raise PreconditionViolation("hom endpoints must share the same graded ring")
    mapping = tuple(mapping)
    if len(mapping) != source.module.size:
        raise HomInvalid("map-not-total", (len(mapping), source.module.size))
    for v in mapping:
        if not (0 <= v < target.module.size):
            raise HomInvalid("map-out-of-range", (v,))
    sm, tm = source.module, target.module
    for a in range(sm.size):
        for b in range(sm.size):
            if mapping[sm.add[a][b]] != tm.add[mapping[a]][mapping[b]]:
                raise HomInvalid("not-additive", (a, b))
    for r in range(sm.ring.size):
        for m in range(sm.size):
            if mapping[sm.action[r][m]] != tm.action[r][mapping[m]]:
                raise HomInvalid("not-linear", (r, m))
    tcomps = target.grading.components
    for g, comp in enumerate(source.grading.components):
        for m in comp:
            if mapping[m] not in tcomps[g]:
                raise HomInvalid("not-degree-preserving", (g, m))
    return GradedHom(source, target, mapping)


def identity_hom(gm: GradedModule) -> GradedHom:
    return GradedHom(gm, gm, tuple(range(gm.module.size)))


def multiplication_hom(gm: GradedModule, r: int) -> GradedHom:
    """m -> r*m; a graded endomorphism whenever r has identity degree."""
    e = gm.group.identity
    if r not in gm.gring.grading.components[e]:
        raise PreconditionViolation("multiplication homs need a degree-e scalar")
    return GradedHom(gm, gm, tuple(gm.module.action[r]))


def hom_image(f: GradedHom, l: SubobjectHandle) -> SubobjectHandle:
    """f(L) as a graded submodule of the target."""
    if l.kind != SUBMODULE or l.ctx is not f.source:
        raise PreconditionViolation("hom_image takes a submodule of the source")
    return subobject(SUBMODULE, f.target, {f.mapping[m] for m in l.members})


def hom_preimage(f: GradedHom, k: SubobjectHandle) -> SubobjectHandle:
    """f^{-1}(K) as a graded submodule of the source."""
    if k.kind != SUBMODULE or k.ctx is not f.target:
        raise PreconditionViolation("hom_preimage takes a submodule of the target")
    km = k.members
    return subobject(
        SUBMODULE, f.source, {m for m in range(f.source.module.size) if f.mapping[m] in km}
    )


def hom_kernel(f: GradedHom) -> SubobjectHandle:
    return hom_preimage(f, zero_subobject(SUBMODULE, f.target))


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------

def _check_denominators(gring: GradedRing, s) -> tuple:
    s = tuple(sorted(set(s)))
    ring = gring.ring
    if ring.one not in s:
        raise InvalidDenominators("localization set must contain 1")
    for x in s:
        if x not in gring.hom_set:
            raise InvalidDenominators(f"denominator {ring.labels[x]!r} is not homogeneous")
    for a in s:
        for b in s:
            if ring.mul[a][b] not in s:
                raise InvalidDenominators(
                    f"not closed under multiplication: {ring.labels[a]!r} * {ring.labels[b]!r}"
                )
    return s


def _fraction_classes(pairs, equivalent):
    """Greedy partition of ``pairs`` (in canonical order) under ``equivalent``.

    Returns (reps, class_of) where reps[i] is the smallest member of class i.
    """
    reps = []
    class_of = {}
    for p in pairs:
        for i, r in enumerate(reps):
            if equivalent(p, r):
                class_of[p] = i
                break
        else:
            class_of[p] = len(reps)
            reps.append(p)
    return reps, class_of


@dataclass(frozen=True, eq=False)
class LocalizedRing:
    """S^{-1}R for a finite graded ring R and homogeneous multiplicative S."""

    base: GradedRing
    denominators: tuple
    gring: GradedRing
    reps: tuple  # reps[i] = (numerator index, denominator index) in the base
    class_of: dict  # (a, s) -> localized element index


@dataclass(frozen=True, eq=False)
class LocalizedModule:
    """S^{-1}M over S^{-1}R, with the induced grading."""

    base: GradedModule
    ring_loc: LocalizedRing
    gmodule: GradedModule
    reps: tuple
    class_of: dict


def localize_ring(gring: GradedRing, s) -> LocalizedRing:
    s = _check_denominators(gring, s)
    ring = gring.ring
    mul, add, neg = ring.mul, ring.add, ring.neg

    def equivalent(p, q):
        a, sden = p
        b, tden = q
        diff = add[mul[tden][a]][neg[mul[sden][b]]]
        return any(mul[u][diff] == ring.zero for u in s)

    pairs = [(a, d) for a in range(ring.size) for d in s]
    reps, class_of = _fraction_classes(pairs, equivalent)
    k = len(reps)
    labels = tuple(f"{ring.labels[a]}/{ring.labels[d]}" for a, d in reps)
    ladd = tuple(
        tuple(class_of[(add[mul[t][a]][mul[sden][b]], mul[sden][t])] for (b, t) in reps)
        for (a, sden) in reps
    )
    lmul = tuple(
        tuple(class_of[(mul[a][b], mul[sden][t])] for (b, t) in reps)
        for (a, sden) in reps
    )
    zero = class_of[(ring.zero, ring.one)]
    one = class_of[(ring.one, ring.one)]
    lring = FiniteRing(labels, ladd, lmul, zero, one)

    group = gring.group
    assignment = {g: set() for g in range(group.size)}
    rcomps = gring.grading.components
    for g in range(group.size):
        for h in range(group.size):
            d = group.op[h][group.inverse[g]]
            for sden in s:
                if sden not in rcomps[d]:
                    continue
                for a in rcomps[h]:
                    assignment[g].add(class_of[(a, sden)])
    grading = attach_grading(lring, group, assignment)
    return LocalizedRing(gring, s, GradedRing(lring, grading), tuple(reps), class_of)


def localize_module(gm: GradedModule, s, ring_loc: LocalizedRing | None = None) -> LocalizedModule:
    if ring_loc is None:
        ring_loc = localize_ring(gm.gring, s)
    s = ring_loc.denominators
    module = gm.module
    ring = gm.gring.ring
    act, madd, mneg = module.action, module.add, module.neg

    def equivalent(p, q):
        m, sden = p
        m2, tden = q
        diff = madd[act[tden][m]][mneg[act[sden][m2]]]
        return any(act[u][diff] == module.zero for u in s)

    pairs = [(m, d) for m in range(module.size) for d in s]
    reps, class_of = _fraction_classes(pairs, equivalent)
    labels = tuple(f"{module.labels[m]}/{ring.labels[d]}" for m, d in reps)
    ladd = tuple(
        tuple(class_of[(madd[act[t][m]][act[sden][m2]], ring.mul[sden][t])] for (m2, t) in reps)
        for (m, sden) in reps
    )
    laction = tuple(
        tuple(class_of[(act[a][m], ring.mul[sden][t])] for (m, t) in reps)
        for (a, sden) in ring_loc.reps
    )
    zero = class_of[(module.zero, ring.one)]
    lmodule = FiniteModule(ring_loc.gring.ring, labels, ladd, zero, laction)

    group = gm.group
    assignment = {g: set() for g in range(group.size)}
    mcomps = gm.grading.components
    rcomps = gm.gring.grading.components
    for g in range(group.size):
        for h in range(group.size):
            d = group.op[h][group.inverse[g]]
            for sden in s:
                if sden not in rcomps[d]:
                    continue
                for m in mcomps[h]:
                    assignment[g].add(class_of[(m, sden)])
    grading = attach_grading(
        lmodule, group, assignment, ring_grading=ring_loc.gring.grading
    )
    gmodule = GradedModule(lmodule, ring_loc.gring, grading)
    return LocalizedModule(gm, ring_loc, gmodule, tuple(reps), class_of)


def localize(base, s):
    """Localize a graded ring or module at a homogeneous multiplicative set."""
    if isinstance(base, GradedRing):
        return localize_ring(base, s)
    if isinstance(base, GradedModule):
        return localize_module(base, s)
    raise PreconditionViolation("localize takes a GradedRing or GradedModule")


def localize_subobject(loc, n: SubobjectHandle) -> SubobjectHandle:
    """S^{-1}N: the classes of N's elements over all denominators."""
    if isinstance(loc, LocalizedModule):
        if n.kind != SUBMODULE or n.ctx is not loc.base:
            raise PreconditionViolation("subobject must live on the localized base module")
        members = {loc.class_of[(x, d)] for x in n.members for d in loc.ring_loc.denominators}
        return subobject(SUBMODULE, loc.gmodule, members)
    if isinstance(loc, LocalizedRing):
        if n.kind != "ideal" or n.ctx is not loc.base:
            raise PreconditionViolation("subobject must live on the localized base ring")
        members = {loc.class_of[(x, d)] for x in n.members for d in loc.denominators}
        return subobject("ideal", loc.gring, members)
    raise PreconditionViolation("localize_subobject takes a localized structure")


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def product_graded_ring(gr1: GradedRing, gr2: GradedRing) -> GradedRing:
    """R1 x R2 graded by (R_g = (R1)_g x (R2)_g); factors must share G."""
    if gr1.group is not gr2.group:
        raise PreconditionViolation("product factors must be graded by the same group object")
    ring = make_ring(("product", gr1.ring, gr2.ring))
    assignment = product_assignment(gr1.grading, gr2.grading, gr2.ring.size)
    grading = attach_grading(ring, gr1.group, assignment)
    return GradedRing(ring, grading)


def product_graded_module(gm1: GradedModule, gm2: GradedModule, gring: GradedRing) -> GradedModule:
    """M1 x M2 over R1 x R2 with M_g = (M1)_g x (M2)_g."""
    if gm1.group is not gm2.group:
        raise PreconditionViolation("product factors must be graded by the same group object")
    module = make_module(("product", gm1.module, gm2.module), gring.ring)
    assignment = product_assignment(gm1.grading, gm2.grading, gm2.module.size)
    grading = attach_grading(module, gm1.group, assignment, ring_grading=gring.grading)
    return GradedModule(module, gring, grading)


def product_submodule(n1: SubobjectHandle, n2: SubobjectHandle, gm: GradedModule) -> SubobjectHandle:
    """N1 x N2 inside an already-built product module."""
    if n1.kind != SUBMODULE or n2.kind != SUBMODULE:
        raise PreconditionViolation("product_submodule takes two submodules")
    size2 = n2.ctx.module.size
    members = {i1 * size2 + i2 for i1 in n1.members for i2 in n2.members}
    return subobject(SUBMODULE, gm, members)
