import pytest

from gradedalg import GradingInvalid, make_group, make_module, make_ring
from gradedalg.grading import (
    attach_grading,
    decompose,
    groupring_natural,
    is_homogeneous,
    module_same_as_ring,
    module_trivial,
    ring_trivial,
    trivial_assignment,
)


def test_trivial_grading_on_zmod12():
    gr = ring_trivial(make_ring(("zmod", 12)))
    assert gr.grading.components[0] == frozenset(range(12))
    assert gr.hom == tuple(range(12))


def test_groupring_natural_components():
    c2 = make_group(("cyclic", 2))
    ring = make_ring(("groupring", 2, c2))
    gr = groupring_natural(ring, c2)
    comp_e = {ring.labels[i] for i in gr.grading.components[0]}
    comp_g = {ring.labels[i] for i in gr.grading.components[1]}
    assert comp_e == {(0, 0), (1, 0)}
    assert comp_g == {(0, 0), (0, 1)}


def test_decomposition_is_unique_sum():
    c2 = make_group(("cyclic", 2))
    ring = make_ring(("groupring", 3, c2))
    gr = groupring_natural(ring, c2)
    x = ring.index[(2, 1)]  # 2 + g
    parts = decompose(x, gr.grading)
    assert ring.labels[parts[0]] == (2, 0)
    assert ring.labels[parts[1]] == (0, 1)


def test_homogeneity_flags():
    c2 = make_group(("cyclic", 2))
    ring = make_ring(("groupring", 2, c2))
    gr = groupring_natural(ring, c2)
    ok, deg = is_homogeneous(ring.index[(0, 1)], gr.grading)
    assert ok and deg == 1
    ok, deg = is_homogeneous(ring.index[(1, 1)], gr.grading)  # 1 + g is mixed
    assert not ok and deg is None
    ok, deg = is_homogeneous(ring.zero, gr.grading)
    assert ok and deg == 0


def test_component_not_subgroup_rejected():
    ring = make_ring(("zmod", 4))
    group = make_group(("cyclic", 2))
    with pytest.raises(GradingInvalid):
        attach_grading(ring, group, {0: {0, 1, 2, 3}, 1: {0, 1}})


def test_direct_sum_cardinality_rejected():
    ring = make_ring(("zmod", 4))
    group = make_group(("cyclic", 2))
    # components {0,2} and {0,2} are subgroups but 2*2 != 4 as a direct sum
    with pytest.raises(GradingInvalid) as exc:
        attach_grading(ring, group, {0: {0, 2}, 1: {0, 2}})
    assert "direct-sum" in exc.value.axiom


def test_component_product_escape_rejected():
    # put all of Z4 in the non-identity component: 1*1 = 1 must land in
    # component e = {0}, which fails
    ring = make_ring(("zmod", 4))
    group = make_group(("cyclic", 2))
    with pytest.raises(GradingInvalid):
        attach_grading(ring, group, {0: {0}, 1: {0, 1, 2, 3}})


def test_module_grading_needs_ring_grading():
    ring = make_ring(("zmod", 4))
    module = make_module(("self",), ring)
    group = make_group("trivial")
    with pytest.raises(GradingInvalid):
        attach_grading(module, group, trivial_assignment(module, group))


def test_module_same_as_ring_grading():
    c2 = make_group(("cyclic", 2))
    ring = make_ring(("groupring", 2, c2))
    gr = groupring_natural(ring, c2)
    gm = module_same_as_ring(make_module(("self",), ring), gr)
    assert gm.grading.components == gr.grading.components
    assert gm.group is c2


def test_trivial_module_grading():
    ring = make_ring(("zmod", 180))
    gr = ring_trivial(ring)
    module = make_module(("directsum", 4, 9, 5), ring)
    gm = module_trivial(module, gr)
    assert len(gm.hom) == 180
