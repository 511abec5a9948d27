import pytest

from gradedalg import (
    IDEAL,
    SUBMODULE,
    HomInvalid,
    InvalidDenominators,
    PreconditionViolation,
    annihilator,
    hom_image,
    hom_kernel,
    hom_preimage,
    identity_hom,
    localize,
    localize_module,
    localize_ring,
    localize_subobject,
    make_hom,
    make_module,
    make_ring,
    multiplication_hom,
    product_graded_module,
    product_graded_ring,
    product_submodule,
    span,
    subobject,
    whole_subobject,
)
from gradedalg.core import make_group
from gradedalg.grading import module_same_as_ring, module_trivial, ring_trivial


def _z12_module():
    gr = ring_trivial(make_ring(("zmod", 12)))
    return gr, module_same_as_ring(make_module(("self",), gr.ring), gr)


# ---------------------------------------------------------------------------
# homs
# ---------------------------------------------------------------------------

def test_reduction_hom_z4_to_z2z2_plane_component():
    # reduction Z4 -> Z2 embedded as the first axis of Z2 x Z2 (as modules
    # over Z4 via the trivial grading)
    ring = make_ring(("zmod", 4))
    gr = ring_trivial(ring)
    src = module_same_as_ring(make_module(("self",), ring), gr)
    tgt = module_trivial(make_module(("directsum", 2, 2), ring), gr)
    mapping = [tgt.module.index[(x % 2, 0)] for x in range(4)]
    f = make_hom(src, tgt, mapping)
    img = hom_image(f, whole_subobject(SUBMODULE, src))
    assert {tgt.module.labels[i] for i in img.members} == {(0, 0), (1, 0)}
    ker = hom_kernel(f)
    assert ker.members == frozenset({0, 2})


def test_make_hom_rejects_non_linear_map():
    gr, gm = _z12_module()
    mapping = list(range(12))
    mapping[5] = 7
    with pytest.raises(HomInvalid):
        make_hom(gm, gm, mapping)


def test_multiplication_hom_and_preimage():
    gr, gm = _z12_module()
    f = multiplication_hom(gm, 2)
    k = span({4}, SUBMODULE, gm)
    pre = hom_preimage(f, k)
    assert pre.members == frozenset({0, 2, 4, 6, 8, 10})
    assert hom_image(f, pre).members <= k.members


def test_identity_hom_roundtrip():
    gr, gm = _z12_module()
    f = identity_hom(gm)
    n = span({3}, SUBMODULE, gm)
    assert hom_image(f, n).members == n.members
    assert hom_preimage(f, n).members == n.members


# ---------------------------------------------------------------------------
# localization
# ---------------------------------------------------------------------------

def test_localize_z12_at_powers_of_3():
    gr, gm = _z12_module()
    loc = localize_ring(gr, (1, 3, 9))
    assert len(loc.reps) == 4
    # 3 becomes a unit: 3/1 * 3/9 = 9/9 = 1/1
    mloc = localize_module(gm, (1, 3, 9), ring_loc=loc)
    n = subobject(SUBMODULE, gm, {0, 4, 8})
    assert localize_subobject(mloc, n).is_zero
    # a submodule not killed by S survives
    m = span({2}, SUBMODULE, gm)
    assert not localize_subobject(mloc, m).is_zero


def test_localize_dispatch():
    gr, gm = _z12_module()
    assert localize(gr, (1, 3, 9)).gring.ring.size == 4
    assert localize(gm, (1, 3, 9)).gmodule.module.size == 4


def test_localization_rejects_bad_sets():
    gr, _ = _z12_module()
    with pytest.raises(InvalidDenominators):
        localize_ring(gr, (3, 9))  # missing 1
    with pytest.raises(InvalidDenominators):
        localize_ring(gr, (1, 2))  # 2*2 = 4 not in the set


def test_localized_structures_pass_validation():
    from gradedalg import validate_axioms

    gr, gm = _z12_module()
    loc = localize_module(gm, (1, 3, 9))
    assert validate_axioms(loc.ring_loc.gring.ring).ok
    assert validate_axioms(loc.gmodule.module).ok


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

def _product_setup():
    group = make_group("trivial")
    r1 = make_ring(("zmod", 4))
    r2 = make_ring(("zmod", 9))
    gr1 = ring_trivial(r1, group)
    gr2 = ring_trivial(r2, group)
    gring = product_graded_ring(gr1, gr2)
    gm1 = module_same_as_ring(make_module(("self",), r1), gr1)
    gm2 = module_same_as_ring(make_module(("self",), r2), gr2)
    gm = product_graded_module(gm1, gm2, gring)
    return gm1, gm2, gring, gm


def test_product_submodule_annihilator_splits():
    gm1, gm2, gring, gm = _product_setup()
    n1 = span({2}, SUBMODULE, gm1)
    n2 = span({3}, SUBMODULE, gm2)
    n = product_submodule(n1, n2, gm)
    a1 = annihilator(n1).members
    a2 = annihilator(n2).members
    expected = {i1 * 9 + i2 for i1 in a1 for i2 in a2}
    assert annihilator(n).members == frozenset(expected)


def test_product_requires_shared_group_object():
    r1 = make_ring(("zmod", 4))
    r2 = make_ring(("zmod", 9))
    gr1 = ring_trivial(r1)  # two distinct trivial group objects
    gr2 = ring_trivial(r2)
    with pytest.raises(PreconditionViolation):
        product_graded_ring(gr1, gr2)


def test_product_grading_components():
    gm1, gm2, gring, gm = _product_setup()
    assert gring.grading.components[0] == frozenset(range(36))
    assert gm.grading.components[0] == frozenset(range(36))
