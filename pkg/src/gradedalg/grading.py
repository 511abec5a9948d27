"""Gradings on rings and modules: component maps, direct-sum certificates,
homogeneous decomposition, and the graded-carrier wrapper objects used by the
rest of the package.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import FiniteModule, FiniteRing, GradingGroup
from .errors import GradingInvalid


@dataclass(frozen=True, eq=False)
class Grading:
    """A validated decomposition of a ring or module into components.

    ``components[g]`` is the element set of the degree-g component;
    ``decomposition[x][g]`` is the unique degree-g part of element x.
    """

    group: GradingGroup
    carrier: object  # FiniteRing | FiniteModule
    components: tuple  # tuple[frozenset[int], ...], indexed by group element
    decomposition: tuple  # decomposition[x] = tuple of component parts per g

    @cached_property
    def homogeneous(self) -> tuple:
        """Sorted union of all components (the set h(R) or h(M))."""
        out = set()
        for comp in self.components:
            out |= comp
        return tuple(sorted(out))

    @cached_property
    def homogeneous_set(self) -> frozenset:
        return frozenset(self.homogeneous)

    def degree_of(self, x: int):
        """Degree of a homogeneous element (identity for 0), else None."""
        if x == _carrier_zero(self.carrier):
            return self.group.identity
        for g, comp in enumerate(self.components):
            if x in comp:
                return g
        return None


def _carrier_zero(carrier) -> int:
    return carrier.zero


def _carrier_add(carrier):
    return carrier.add


def attach_grading(carrier, group: GradingGroup, assignment, ring_grading: Grading | None = None) -> Grading:
    """Validate a component assignment and return a :class:`Grading`.

    ``assignment`` maps each group element index to an iterable of carrier
    element indices.  For a module grading, ``ring_grading`` must be the
    already-validated grading of the scalar ring over the same group.

    Raises :class:`GradingInvalid` naming the violated axiom and a witness.
    """
    is_ring = isinstance(carrier, FiniteRing)
    if not is_ring and not isinstance(carrier, FiniteModule):
        raise TypeError(f"cannot grade {type(carrier).__name__}")
    if not is_ring and ring_grading is None:
        raise GradingInvalid("module-grading-requires-ring-grading")
    if not is_ring and ring_grading is not None and ring_grading.group is not group:
        raise GradingInvalid("grading-group-mismatch")

    add = _carrier_add(carrier)
    zero = _carrier_zero(carrier)
    n = carrier.size

    components = []
    for g in range(group.size):
        comp = frozenset(assignment.get(g, ()) if hasattr(assignment, "get") else assignment[g])
        for x in comp:
            if not (0 <= x < n):
                raise GradingInvalid("component-element-out-of-range", (g, x))
        components.append(comp)

    # each component is an additive subgroup
    for g, comp in enumerate(components):
        if zero not in comp:
            raise GradingInvalid("component-missing-zero", (g,))
        for a in comp:
            for b in comp:
                if add[a][b] not in comp:
                    raise GradingInvalid("component-not-closed-under-add", (g, a, b))

    # direct sum: summation from the product of components is a bijection
    total = 1
    for comp in components:
        total *= len(comp)
    if total != n:
        raise GradingInvalid("direct-sum-cardinality", (total, n))
    decomposition = [None] * n
    for parts in itertools.product(*(sorted(c) for c in components)):
        s = zero
        for p in parts:
            s = add[s][p]
        if decomposition[s] is not None:
            raise GradingInvalid("direct-sum-collision", (s, decomposition[s], parts))
        decomposition[s] = parts
    # total == n and no collision => surjective, but keep the explicit check
    for x in range(n):
        if decomposition[x] is None:
            raise GradingInvalid("direct-sum-not-surjective", (x,))

    if is_ring:
        mul = carrier.mul
        if carrier.one not in components[group.identity]:
            raise GradingInvalid("one-not-in-identity-component", (carrier.one,))
        for g in range(group.size):
            for h in range(group.size):
                gh = group.op[g][h]
                for a in components[g]:
                    for b in components[h]:
                        if mul[a][b] not in components[gh]:
                            raise GradingInvalid("component-product-escapes", (g, h, a, b))
    else:
        action = carrier.action
        rcomps = ring_grading.components
        for g in range(group.size):
            for h in range(group.size):
                gh = group.op[g][h]
                for r in rcomps[g]:
                    for m in components[h]:
                        if action[r][m] not in components[gh]:
                            raise GradingInvalid("action-escapes-component", (g, h, r, m))

    return Grading(group, carrier, tuple(components), tuple(decomposition))


def decompose(x: int, grading: Grading) -> dict:
    """The unique homogeneous decomposition of x: map group element -> part."""
    return {g: p for g, p in enumerate(grading.decomposition[x])}


def homogeneous_elements(grading: Grading) -> frozenset:
    """The union of all components: h(R) or h(M)."""
    return grading.homogeneous_set


def is_homogeneous(x: int, grading: Grading):
    """(True, degree) if x lies in some component, else (False, None).

    Zero is reported with degree e by convention.
    """
    g = grading.degree_of(x)
    return (g is not None, g)


# ---------------------------------------------------------------------------
# graded carriers
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GradedRing:
    """A finite commutative ring together with a validated grading."""

    ring: FiniteRing
    grading: Grading

    @property
    def group(self) -> GradingGroup:
        return self.grading.group

    @cached_property
    def hom(self) -> tuple:
        return self.grading.homogeneous

    @cached_property
    def hom_set(self) -> frozenset:
        return self.grading.homogeneous_set

    @cached_property
    def _caches(self) -> dict:
        # scratch space for memoized classification results
        return {}


@dataclass(frozen=True, eq=False)
class GradedModule:
    """A finite module with a validated grading over a :class:`GradedRing`."""

    module: FiniteModule
    gring: GradedRing
    grading: Grading

    @property
    def group(self) -> GradingGroup:
        return self.grading.group

    @cached_property
    def hom(self) -> tuple:
        return self.grading.homogeneous

    @cached_property
    def hom_set(self) -> frozenset:
        return self.grading.homogeneous_set

    @cached_property
    def _caches(self) -> dict:
        return {}


def trivial_assignment(carrier, group: GradingGroup) -> dict:
    """Everything in the identity component, {0} elsewhere."""
    assignment = {g: {carrier.zero} for g in range(group.size)}
    assignment[group.identity] = set(range(carrier.size))
    return assignment


def ring_trivial(ring: FiniteRing, group: GradingGroup | None = None) -> GradedRing:
    from .core import make_group

    group = group if group is not None else make_group("trivial")
    grading = attach_grading(ring, group, trivial_assignment(ring, group))
    return GradedRing(ring, grading)


def module_trivial(module: FiniteModule, gring: GradedRing) -> GradedModule:
    grading = attach_grading(
        module, gring.group, trivial_assignment(module, gring.group), ring_grading=gring.grading
    )
    return GradedModule(module, gring, grading)


def groupring_natural(ring: FiniteRing, group: GradingGroup) -> GradedRing:
    """Natural grading of a group ring: component g = the coefficient line of g."""
    k = group.size
    assignment = {}
    for g in range(k):
        comp = set()
        for i, lab in enumerate(ring.labels):
            if all(c == 0 for t, c in enumerate(lab) if t != g):
                comp.add(i)
        assignment[g] = comp
    grading = attach_grading(ring, group, assignment)
    return GradedRing(ring, grading)


def module_same_as_ring(module: FiniteModule, gring: GradedRing) -> GradedModule:
    """Grade a ring-as-module by copying the ring's component sets."""
    assignment = {g: set(comp) for g, comp in enumerate(gring.grading.components)}
    grading = attach_grading(module, gring.group, assignment, ring_grading=gring.grading)
    return GradedModule(module, gring, grading)


def product_assignment(c1: Grading, c2: Grading, size2: int) -> dict:
    """Componentwise product grading: component(g) = c1(g) x c2(g) under the
    product index convention i1*size2 + i2."""
    out = {}
    for g in range(c1.group.size):
        out[g] = {i1 * size2 + i2 for i1 in c1.components[g] for i2 in c2.components[g]}
    return out
