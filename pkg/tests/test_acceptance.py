"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Criteria are asserted exactly as stated, at the stated tolerances.  Two are
known to fail on the mathematics itself (the coprimary half of criterion 1 and
the preimage-transport proposition inside criterion 5); the failures are
genuine counterexamples that re-check against the definitional predicates, and
the tests report them honestly rather than weakening the assertion.
"""
import io
import time

from gradedalg import (
    IDEAL,
    PROPOSITION_IDS,
    SUBMODULE,
    annihilator,
    build_standard_corpus,
    classify_ideal,
    classify_submodule,
    coprimary_via_characterization,
    enumerate_graded_subobjects,
    graded_radical,
    localize_module,
    localize_ring,
    localize_subobject,
    make_module,
    make_ring,
    parse_structure_text,
    recheck_coprimary_violation,
    run_cli,
    search_counterexample,
    span,
    subobject,
    verify_proposition,
    whole_subobject,
)
from gradedalg.grading import module_same_as_ring, ring_trivial

CORPUS = build_standard_corpus()

EXAMPLE_TEXT = """\
group trivial
ring zmod 180
grading trivial
module directsum 4 9 5
submodule N gens (1,0,0) (0,1,0)
"""


def _report(k: int, ok: bool, detail: str = "") -> bool:
    print(f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'}{' -- ' + detail if detail else ''}")
    return ok


def _z12_module():
    gr = ring_trivial(make_ring(("zmod", 12)))
    return gr, module_same_as_ring(make_module(("self",), gr.ring), gr)


def test_criterion_1_example_reproduction():
    t0 = time.perf_counter()
    entry = parse_structure_text(EXAMPLE_TEXT)
    n = entry.named["N"]
    cop = classify_submodule(n, "2a-coprimary-def").value
    strong = classify_submodule(n, "strong-2a-second").value
    elapsed = time.perf_counter() - t0
    ok = cop is True and strong is False and elapsed < 30.0
    assert _report(
        1, ok, f"coprimary={cop} (expected True) strong={strong} (expected False) wall={elapsed:.1f}s"
    ), (
        "the coprimary classification of this submodule is False: witness "
        f"{classify_submodule(n, '2a-coprimary-def').witness} re-checks against the definition"
    )


def test_criterion_2_lattice_count():
    entry = next(e for e in CORPUS if e.name == "torsion180")
    subs = enumerate_graded_subobjects(entry.gmodule, SUBMODULE)
    ok = len(subs) == 18
    assert _report(2, ok, f"count={len(subs)}")


def test_criterion_3_characterization_equivalence():
    mismatches = 0
    for entry in CORPUS:
        for n in entry.graded_submodules():
            if n.is_zero:
                continue
            if (
                classify_submodule(n, "2a-coprimary-def").value
                != coprimary_via_characterization(n).value
            ):
                mismatches += 1
    assert _report(3, mismatches == 0, f"mismatches={mismatches}")


def test_criterion_4_implication_chain():
    violations = 0
    for entry in CORPUS:
        for n in entry.graded_submodules():
            if n.is_zero:
                continue
            second = classify_submodule(n, "second").value
            strong = classify_submodule(n, "strong-2a-second").value
            cop = coprimary_via_characterization(n).value
            if (second and not strong) or (strong and not cop):
                violations += 1
    strict = search_counterexample("2a-coprimary and not strong-2a-second", CORPUS)
    none_expected = search_counterexample("second and not 2a-coprimary", CORPUS)
    ok = violations == 0 and strict is not None and none_expected is None
    assert _report(4, ok, f"violations={violations} strictness_witness={strict and strict['entry']}")


def test_criterion_5_proposition_suite():
    t0 = time.perf_counter()
    reports = [verify_proposition(pid, CORPUS) for pid in PROPOSITION_IDS]
    elapsed = time.perf_counter() - t0
    bad = {r.prop_id: len(r.violations) for r in reports if r.violations}
    vacuous = [r.prop_id for r in reports if r.instances < 1]
    ok = not bad and not vacuous and elapsed < 300.0
    assert _report(5, ok, f"violations={bad or 0} vacuous={vacuous or 0} wall={elapsed:.1f}s"), (
        "propositions with corpus counterexamples (each violation re-checks "
        f"against the definitional predicates): {bad}"
    )


def test_criterion_6_radical_oracle():
    gr, _ = _z12_module()
    got = graded_radical(span({4}, IDEAL, gr)).members
    ok = got == frozenset({0, 2, 4, 6, 8, 10})
    assert _report(6, ok, f"Grad((4))={sorted(got)}")


def test_criterion_7_annihilator_oracle():
    entry = next(e for e in CORPUS if e.name == "torsion180")
    ann = annihilator(entry.named["N"])
    verdict = classify_ideal(ann, "2-absorbing-primary").value
    ok = ann.members == frozenset({0, 36, 72, 108, 144}) and verdict is True
    assert _report(7, ok, f"Ann(N)={sorted(ann.members)} 2AP={verdict}")


def test_criterion_8_localization_sanity():
    gr, gm = _z12_module()
    loc_ring = localize_ring(gr, (1, 3, 9))
    loc_mod = localize_module(gm, (1, 3, 9), ring_loc=loc_ring)
    sn = localize_subobject(loc_mod, subobject(SUBMODULE, gm, {0, 4, 8}))
    ok = len(loc_ring.reps) == 4 and sn.is_zero
    assert _report(8, ok, f"classes={len(loc_ring.reps)} localized_zero={sn.is_zero}")


def test_criterion_9_negative_instance_witness():
    gr, gm = _z12_module()
    whole = whole_subobject(SUBMODULE, gm)
    v = classify_submodule(whole, "2a-coprimary-def")
    ok = (
        v.value is False
        and v.witness is not None
        and recheck_coprimary_violation(whole, v.witness["x"], v.witness["y"], v.witness["K"])
    )
    assert _report(9, ok, f"witness={v.witness}")


def test_criterion_10_determinism():
    argv = ["--threads", "4", "--report", "machine", "verify", "--suite", "all"]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        run_cli(argv, out=buf)
        outs.append(buf.getvalue().encode())
    ok = outs[0] == outs[1] and len(outs[0]) > 0
    assert _report(10, ok, f"bytes={len(outs[0])}")
