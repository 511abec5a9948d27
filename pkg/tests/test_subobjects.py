import pytest
from hypothesis import given, settings, strategies as st

from gradedalg import (
    IDEAL,
    SUBMODULE,
    PreconditionViolation,
    TooLarge,
    annihilator,
    colon,
    colon_by_element,
    combine,
    enumerate_all_subobjects,
    enumerate_graded_subobjects,
    graded_radical,
    ideal_component,
    is_graded,
    make_group,
    make_module,
    make_ring,
    span,
    subobject,
    whole_subobject,
    zero_subobject,
)
from gradedalg.grading import groupring_natural, module_same_as_ring, module_trivial, ring_trivial


def _z12():
    return ring_trivial(make_ring(("zmod", 12)))


def _gr2():
    c2 = make_group(("cyclic", 2))
    ring = make_ring(("groupring", 2, c2))
    return groupring_natural(ring, c2)


def test_span_principal_ideal():
    gr = _z12()
    h = span({2}, IDEAL, gr)
    assert h.members == frozenset({0, 2, 4, 6, 8, 10})
    assert h.graded


def test_span_empty_is_zero():
    gr = _z12()
    h = span(set(), IDEAL, gr)
    assert h.members == frozenset({0})
    assert h.graded


def test_span_nongraded_ideal_in_group_ring():
    gr = _gr2()
    ring = gr.ring
    h = span({ring.index[(1, 1)]}, IDEAL, gr)  # generated by 1 + g
    assert h.members == frozenset({ring.zero, ring.index[(1, 1)]})
    assert not h.graded
    assert not is_graded(h)


def test_sum_and_intersection():
    gr = _z12()
    a = span({4}, IDEAL, gr)
    b = span({6}, IDEAL, gr)
    assert combine(a, b, "sum").members == frozenset({0, 2, 4, 6, 8, 10})
    assert combine(a, b, "intersect").members == frozenset({0})


def test_colon_and_annihilator():
    ring = make_ring(("zmod", 180))
    gr = ring_trivial(ring)
    gm = module_trivial(make_module(("directsum", 4, 9, 5), ring), gr)
    n = span({gm.module.index[(1, 0, 0)], gm.module.index[(0, 1, 0)]}, SUBMODULE, gm)
    ann = annihilator(n)
    assert ann.members == frozenset({0, 36, 72, 108, 144})
    # 5*(a,b,c) = (5a, 5b, 0) with 5 a unit mod 4 and mod 9, so 5M = N and
    # (N : M) is exactly the multiples of 5
    whole = whole_subobject(SUBMODULE, gm)
    assert colon(n, whole).members == frozenset(range(0, 180, 5))


def test_colon_by_element():
    gr = _z12()
    gm = module_same_as_ring(make_module(("self",), gr.ring), gr)
    k = span({6}, SUBMODULE, gm)
    h = colon_by_element(k, 2)
    assert h.members == frozenset({0, 3, 6, 9})


def test_graded_radical_oracle():
    gr = _z12()
    p = span({4}, IDEAL, gr)
    assert graded_radical(p).members == frozenset({0, 2, 4, 6, 8, 10})


def test_graded_radical_whole_ring_convention():
    gr = _z12()
    assert graded_radical(whole_subobject(IDEAL, gr)).is_whole


def test_graded_radical_rejects_nongraded():
    gr = _gr2()
    h = span({gr.ring.index[(1, 1)]}, IDEAL, gr)
    with pytest.raises(PreconditionViolation):
        graded_radical(h)


def test_graded_radical_in_group_ring():
    # (0) in F2[C2]: g - 1 squares to zero, so Grad((0)) = {0, 1+g}
    gr = _gr2()
    ring = gr.ring
    z = zero_subobject(IDEAL, gr)
    # 1+g is not homogeneous, so it enters Grad only if both its components
    # have a power in (0); component 1 does not, so Grad((0)) = {0}
    assert graded_radical(z).members == frozenset({ring.zero})


def test_ideal_component():
    gr = _gr2()
    h = whole_subobject(IDEAL, gr)
    comp = ideal_component(h, 1)
    assert comp == gr.grading.components[1]


def test_enumeration_zmod12_ideals():
    gr = _z12()
    ideals = enumerate_graded_subobjects(gr, IDEAL)
    sizes = sorted(len(h.members) for h in ideals)
    assert sizes == [1, 2, 3, 4, 6, 12]  # one ideal per divisor of 12


def test_enumeration_canonical_order():
    gr = _z12()
    ideals = enumerate_graded_subobjects(gr, IDEAL)
    keys = [(len(h.members), h.sorted_members) for h in ideals]
    assert keys == sorted(keys)


def test_enumeration_respects_cap():
    ring = make_ring(("zmod", 180))
    gr = ring_trivial(ring)
    with pytest.raises(TooLarge):
        enumerate_graded_subobjects(gr, IDEAL, max_elements=64)


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12])
def test_enumeration_matches_exhaustive_oracle(n):
    gr = ring_trivial(make_ring(("zmod", n)))
    gm = module_same_as_ring(make_module(("self",), gr.ring), gr)
    fast = {h.members for h in enumerate_graded_subobjects(gm, SUBMODULE)}
    slow = {
        h.members
        for h in enumerate_all_subobjects(gm, SUBMODULE)
        if is_graded(h)
    }
    assert fast == slow


def test_enumeration_oracle_group_ring():
    gr = _gr2()
    fast = {h.members for h in enumerate_graded_subobjects(gr, IDEAL)}
    slow = {h.members for h in enumerate_all_subobjects(gr, IDEAL) if is_graded(h)}
    assert fast == slow
    # the non-graded ideal (1+g) exists but must not be in the graded list
    all_ideals = {h.members for h in enumerate_all_subobjects(gr, IDEAL)}
    assert len(all_ideals) > len(fast)


def test_scalar_product_requires_homogeneous():
    gr = _gr2()
    gm = module_same_as_ring(make_module(("self",), gr.ring), gr)
    n = whole_subobject(SUBMODULE, gm)
    with pytest.raises(PreconditionViolation):
        combine(gr.ring.index[(1, 1)], n, "scalar_product")


@given(st.integers(min_value=0, max_value=11), st.integers(min_value=0, max_value=11))
@settings(max_examples=30, deadline=None)
def test_span_is_idempotent_and_monotone(a, b):
    gr = _z12()
    h = span({a, b}, IDEAL, gr)
    assert span(h.members, IDEAL, gr).members == h.members
    assert span({a}, IDEAL, gr).members <= h.members
