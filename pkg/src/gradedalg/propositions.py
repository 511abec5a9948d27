"""Instance verification of every stated result over a corpus, plus the
counterexample-search expression language.

A "pass" means no corpus counterexample was found: propositions are checked on
exhaustively enumerated hypothesis instances, never assumed.  Vacuous
candidates are tallied under ``skipped`` with a reason, never as passes.
"""
from __future__ import annotations

import re
import time
from collections import Counter
from dataclasses import dataclass, field

from .classifiers import (
    _grad_colon_members,
    _module_data,
    classify_ideal,
    classify_submodule,
    coprimary_via_characterization,
    is_graded_comultiplication_module,
)
from .constructions import (
    hom_image,
    hom_kernel,
    hom_preimage,
    identity_hom,
    localize_module,
    localize_subobject,
    multiplication_hom,
    product_submodule,
)
from .corpus import Corpus, CorpusEntry
from .errors import StructureParseError, UnknownProposition
from .subobjects import (
    IDEAL,
    SUBMODULE,
    annihilator,
    colon,
    colon_by_element,
    combine,
    enumerate_graded_subobjects,
    graded_radical,
    ideal_component,
    span,
    subobject,
    whole_subobject,
)

PROPOSITION_IDS = (
    "closure-lemma",
    "colon-2AP",
    "ann-2AP",
    "grad-ann-2A",
    "scalar-multiple",
    "hom-image",
    "hom-preimage",
    "characterization-equiv",
    "localization",
    "ideal-lemma",
    "two-ideal-theorem",
    "comultiplication",
    "product-part-1",
    "product-part-2",
    "product-part-3",
    "product-part-4",
)


@dataclass
class VerificationReport:
    prop_id: str
    instances: int = 0
    violations: list = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)
    wall_time: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"

    def to_machine(self) -> str:
        # wall time deliberately excluded: machine reports must be byte-stable
        reasons = ";".join(f"{k}:{v}" for k, v in sorted(self.skipped.items())) or "-"
        return (
            f"prop={self.prop_id} status={self.status} instances={self.instances} "
            f"violations={len(self.violations)} skipped={sum(self.skipped.values())} "
            f"reasons={reasons}"
        )

    def to_plain(self) -> str:
        lines = [f"[{self.prop_id}] {self.status.upper()}"]
        lines.append(f"  instances: {self.instances}")
        reasons = ", ".join(f"{k}: {v}" for k, v in sorted(self.skipped.items()))
        lines.append(f"  skipped:   {sum(self.skipped.values())}" + (f" ({reasons})" if reasons else ""))
        for v in self.violations[:10]:
            lines.append(f"  violation: {v}")
        if len(self.violations) > 10:
            lines.append(f"  ... {len(self.violations) - 10} more violations")
        lines.append(f"  wall:      {self.wall_time:.2f}s")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _members_label(handle) -> str:
    labels = handle.carrier.labels
    return "{" + ",".join(str(labels[i]) for i in handle.sorted_members) + "}"


def _nonzero_subs(entry: CorpusEntry):
    return [h for h in entry.graded_submodules() if not h.is_zero]


def _is_coprimary(n) -> bool:
    return coprimary_via_characterization(n).value


def _hom_family(entry: CorpusEntry):
    """Canonical finite hom family: identity plus every multiplication by a
    degree-e homogeneous scalar (deduplicated by mapping table)."""
    gm = entry.gmodule
    fams = [identity_hom(gm)]
    seen = {fams[0].mapping}
    for r in sorted(gm.gring.grading.components[gm.group.identity]):
        h = multiplication_hom(gm, r)
        if h.mapping not in seen:
            seen.add(h.mapping)
            fams.append(h)
    return fams


def _entry_cache(entry: CorpusEntry, key: str, builder):
    cache = getattr(entry, "_scratch", None)
    if cache is None:
        cache = {}
        entry._scratch = cache
    if key not in cache:
        cache[key] = builder()
    return cache[key]


# ---------------------------------------------------------------------------
# proposition checkers: each yields (instances, violations, skipped) per entry
# ---------------------------------------------------------------------------

def _check_closure_lemma(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    ideals = entry.graded_ideals()
    subs = entry.graded_submodules()
    gm = entry.gmodule

    def expect_graded(handle, what, detail):
        nonlocal inst
        inst += 1
        if not handle.graded:
            bad.append({"entry": entry.name, "op": what, "detail": detail})

    for i in ideals:
        for j in ideals:
            expect_graded(combine(i, j, "sum"), "ideal-sum", (_members_label(i), _members_label(j)))
            expect_graded(combine(i, j, "intersect"), "ideal-intersect", (_members_label(i), _members_label(j)))
    for n in subs:
        for k in subs:
            expect_graded(combine(n, k, "sum"), "submodule-sum", (_members_label(n), _members_label(k)))
            expect_graded(combine(n, k, "intersect"), "submodule-intersect", (_members_label(n), _members_label(k)))
    for x in gm.hom:
        expect_graded(span({x}, SUBMODULE, gm), "cyclic-span", x)
    for i in ideals:
        for n in subs:
            expect_graded(combine(i, n, "ideal_product"), "ideal-product", (_members_label(i), _members_label(n)))
    for r in gm.gring.hom:
        for n in subs:
            expect_graded(combine(r, n, "scalar_product"), "scalar-multiple", r)
    whole = whole_subobject(SUBMODULE, gm)
    for n in subs:
        expect_graded(colon(n, whole), "colon-into-module", _members_label(n))
        expect_graded(annihilator(n), "annihilator", _members_label(n))
    for x in gm.gring.hom:
        for n in subs:
            expect_graded(colon_by_element(n, x), "colon-by-element", x)
    return inst, bad, skip


def _check_colon_2ap(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    subs = entry.graded_submodules()
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += len(subs)
            continue
        for k in subs:
            if n.members <= k.members:
                skip["N-contained-in-K"] += 1
                continue
            p = colon(k, n)  # proper: 1*N = N is not inside K
            inst += 1
            v = classify_ideal(p, "2-absorbing-primary")
            if not v.value:
                bad.append({"entry": entry.name, "N": _members_label(n), "K": _members_label(k), "witness": v.witness})
    return inst, bad, skip


def _check_ann_2ap(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += 1
            continue
        inst += 1
        v = classify_ideal(annihilator(n), "2-absorbing-primary")
        if not v.value:
            bad.append({"entry": entry.name, "N": _members_label(n), "witness": v.witness})
    return inst, bad, skip


def _check_grad_ann_2a(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += 1
            continue
        inst += 1
        v = classify_ideal(graded_radical(annihilator(n)), "2-absorbing")
        if not v.value:
            bad.append({"entry": entry.name, "N": _members_label(n), "witness": v.witness})
    return inst, bad, skip


def _check_scalar_multiple(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += 1
            continue
        ann = annihilator(n).members
        for a in entry.gmodule.gring.hom:
            if a in ann:
                skip["scalar-annihilates-N"] += 1
                continue
            an = combine(a, n, "scalar_product")
            inst += 1
            if not _is_coprimary(an):
                bad.append({"entry": entry.name, "N": _members_label(n), "a": a})
    return inst, bad, skip


def _check_hom_image(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    homs = _entry_cache(entry, "hom_family", lambda: _hom_family(entry))
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += 1
            continue
        for f in homs:
            ker = _entry_cache(entry, ("kernel", f.mapping), lambda: hom_kernel(f))
            if n.members <= ker.members:
                skip["N-inside-kernel"] += 1
                continue
            inst += 1
            if not _is_coprimary(hom_image(f, n)):
                bad.append({"entry": entry.name, "N": _members_label(n), "hom": f.mapping[:8]})
    return inst, bad, skip


def _check_hom_preimage(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    homs = _entry_cache(entry, "hom_family", lambda: _hom_family(entry))
    whole = whole_subobject(SUBMODULE, entry.gmodule)
    for f in homs:
        fm = hom_image(f, whole)
        for k in _nonzero_subs(entry):
            if not _is_coprimary(k):
                skip["K-not-coprimary"] += 1
                continue
            if not (k.members <= fm.members):
                skip["K-not-inside-image"] += 1
                continue
            inst += 1
            if not _is_coprimary(hom_preimage(f, k)):
                bad.append({"entry": entry.name, "K": _members_label(k), "hom": f.mapping[:8]})
    return inst, bad, skip


def _check_characterization_equiv(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    for n in entry.graded_submodules():
        if n.is_zero:
            skip["zero-submodule"] += 1
            continue
        inst += 1
        d = classify_submodule(n, "2a-coprimary-def")
        c = coprimary_via_characterization(n)
        if d.value != c.value:
            bad.append({"entry": entry.name, "N": _members_label(n), "def": d.value, "char": c.value})
    return inst, bad, skip


def _check_localization(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    for sname, s in sorted(entry.mulsets.items()):
        loc = _entry_cache(entry, ("loc", sname), lambda: localize_module(entry.gmodule, s))
        for n in _nonzero_subs(entry):
            if not _is_coprimary(n):
                skip["N-not-coprimary"] += 1
                continue
            sn = localize_subobject(loc, n)
            if sn.is_zero:
                skip["localizes-to-zero"] += 1
                continue
            inst += 1
            if not _is_coprimary(sn):
                bad.append({"entry": entry.name, "S": sname, "N": _members_label(n)})
    return inst, bad, skip


def _ixn_mask(entry, i, x, n, in_handle):
    cache = _entry_cache(entry, "ixn", dict)
    key = (i.members, x, n.members)
    if key not in cache:
        act = entry.gmodule.module.action
        m = 0
        for v in in_handle.members:
            m |= 1 << act[x][v]
        cache[key] = m
    return cache[key]


def _check_ideal_lemma(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    gm = entry.gmodule
    ideals = entry.graded_ideals()
    subs = entry.graded_submodules()
    zero_mask = 1 << gm.module.zero
    for g in range(gm.group.size):
        comp = tuple(sorted(gm.gring.grading.components[g]))
        for n in _nonzero_subs(entry):
            if not classify_submodule(n, "g-2a-coprimary", g=g).value:
                skip["N-not-g-coprimary"] += 1
                continue
            zmask, _ = _module_data(n)
            ann = annihilator(n).members
            for i in ideals:
                in_handle = _entry_cache(
                    entry, ("IN", i.members, n.members), lambda: combine(i, n, "ideal_product")
                )
                ig = ideal_component(i, g)
                for x in comp:
                    w = _ixn_mask(entry, i, x, n, in_handle)
                    for k in subs:
                        if w & k.mask != w:
                            skip["hypothesis-IxN-not-in-K"] += 1
                            continue
                        inst += 1
                        grad = _grad_colon_members(n, k, zmask, zero_mask)
                        if x in grad or ig <= grad:
                            continue
                        mul = gm.gring.ring.mul
                        if all(mul[y][x] in ann for y in ig):
                            continue
                        bad.append({
                            "entry": entry.name, "g": g, "N": _members_label(n),
                            "I": _members_label(i), "x": x, "K": _members_label(k),
                        })
    return inst, bad, skip


def _check_two_ideal_theorem(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    gm = entry.gmodule
    ideals = entry.graded_ideals()
    subs = entry.graded_submodules()
    zero_mask = 1 << gm.module.zero
    mul = gm.gring.ring.mul
    for g in range(gm.group.size):
        for n in _nonzero_subs(entry):
            if not classify_submodule(n, "g-2a-coprimary", g=g).value:
                skip["N-not-g-coprimary"] += 1
                continue
            zmask, _ = _module_data(n)
            ann = annihilator(n).members
            for i in ideals:
                in_handle = _entry_cache(
                    entry, ("IN", i.members, n.members), lambda: combine(i, n, "ideal_product")
                )
                ig = ideal_component(i, g)
                for j in ideals:
                    ijn = _entry_cache(
                        entry,
                        ("IJN", i.members, j.members, n.members),
                        lambda: combine(j, in_handle, "ideal_product"),
                    )
                    jg = ideal_component(j, g)
                    w = ijn.mask
                    for k in subs:
                        if w & k.mask != w:
                            skip["hypothesis-IJN-not-in-K"] += 1
                            continue
                        inst += 1
                        grad = _grad_colon_members(n, k, zmask, zero_mask)
                        if ig <= grad or jg <= grad:
                            continue
                        if all(mul[a][b] in ann for a in ig for b in jg):
                            continue
                        bad.append({
                            "entry": entry.name, "g": g, "N": _members_label(n),
                            "I": _members_label(i), "J": _members_label(j), "K": _members_label(k),
                        })
    return inst, bad, skip


def _check_comultiplication(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    if not is_graded_comultiplication_module(entry.gmodule).value:
        skip["module-not-comultiplication"] += len(_nonzero_subs(entry))
        return inst, bad, skip
    for n in _nonzero_subs(entry):
        if not _is_coprimary(n):
            skip["N-not-coprimary"] += 1
            continue
        ann = annihilator(n)
        if graded_radical(ann).members != ann.members:
            skip["radical-annihilator-differs"] += 1
            continue
        inst += 1
        if not classify_submodule(n, "strong-2a-second").value:
            bad.append({"entry": entry.name, "N": _members_label(n)})
    return inst, bad, skip


def _product_candidates(entry: CorpusEntry):
    gm1, gm2 = entry.factors
    subs1 = enumerate_graded_subobjects(gm1, SUBMODULE, entry.max_elements)
    subs2 = enumerate_graded_subobjects(gm2, SUBMODULE, entry.max_elements)
    return gm1, gm2, subs1, subs2


def _check_product_part1(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    if entry.factors is None:
        return inst, bad, skip
    gm1, gm2, subs1, subs2 = _product_candidates(entry)
    for n1 in subs1:
        for n2 in subs2:
            if n1.is_zero or n2.is_zero:
                # a zero factor makes the factor annihilator improper; the
                # product statement presumes both factors non-zero
                skip["zero-factor"] += 1
                continue
            n = product_submodule(n1, n2, entry.gmodule)
            if not _is_coprimary(n):
                skip["N-not-coprimary"] += 1
                continue
            inst += 1
            ok1 = classify_ideal(annihilator(n1), "primary").value
            ok2 = classify_ideal(annihilator(n2), "primary").value
            if not (ok1 and ok2):
                bad.append({"entry": entry.name, "N1": _members_label(n1), "N2": _members_label(n2)})
    return inst, bad, skip


def _check_product_part2(entry: CorpusEntry):
    inst, skip, bad = 0, Counter(), []
    if entry.factors is None:
        return inst, bad, skip
    gm1, gm2, subs1, subs2 = _product_candidates(entry)
    for n1 in subs1:
        for n2 in subs2:
            if n1.is_zero or n2.is_zero:
                skip["zero-factor"] += 1
                continue
            if not classify_ideal(annihilator(n1), "primary").value:
                skip["Ann-N1-not-primary"] += 1
                continue
            if not classify_ideal(annihilator(n2), "primary").value:
                skip["Ann-N2-not-primary"] += 1
                continue
            n = product_submodule(n1, n2, entry.gmodule)
            inst += 1
            if not classify_ideal(annihilator(n), "2-absorbing-primary").value:
                bad.append({"entry": entry.name, "N1": _members_label(n1), "N2": _members_label(n2)})
    return inst, bad, skip


def _check_product_part3(entry: CorpusEntry, side: int = 0):
    inst, skip, bad = 0, Counter(), []
    if entry.factors is None:
        return inst, bad, skip
    gm1, gm2, subs1, subs2 = _product_candidates(entry)
    subs = subs1 if side == 0 else subs2
    other_zero = (
        subobject(SUBMODULE, gm2, {gm2.module.zero})
        if side == 0
        else subobject(SUBMODULE, gm1, {gm1.module.zero})
    )
    for ni in subs:
        if ni.is_zero:
            skip["zero-factor"] += 1
            continue
        if not _is_coprimary(ni):
            skip["factor-not-coprimary"] += 1
            continue
        if side == 0:
            n = product_submodule(ni, other_zero, entry.gmodule)
        else:
            n = product_submodule(other_zero, ni, entry.gmodule)
        inst += 1
        if not classify_ideal(annihilator(n), "2-absorbing-primary").value:
            bad.append({"entry": entry.name, "factor": _members_label(ni), "side": side})
    return inst, bad, skip


_CHECKERS = {
    "closure-lemma": _check_closure_lemma,
    "colon-2AP": _check_colon_2ap,
    "ann-2AP": _check_ann_2ap,
    "grad-ann-2A": _check_grad_ann_2a,
    "scalar-multiple": _check_scalar_multiple,
    "hom-image": _check_hom_image,
    "hom-preimage": _check_hom_preimage,
    "characterization-equiv": _check_characterization_equiv,
    "localization": _check_localization,
    "ideal-lemma": _check_ideal_lemma,
    "two-ideal-theorem": _check_two_ideal_theorem,
    "comultiplication": _check_comultiplication,
    "product-part-1": _check_product_part1,
    "product-part-2": _check_product_part2,
    "product-part-3": lambda e: _check_product_part3(e, side=0),
    "product-part-4": lambda e: _check_product_part3(e, side=1),
}


def verify_proposition(prop_id: str, corpus: Corpus) -> VerificationReport:
    """Check one proposition on every hypothesis instance over the corpus."""
    if prop_id not in _CHECKERS:
        raise UnknownProposition(prop_id)
    t0 = time.perf_counter()
    report = VerificationReport(prop_id)
    checker = _CHECKERS[prop_id]
    for entry in corpus:
        inst, bad, skip = checker(entry)
        report.instances += inst
        report.violations.extend(bad)
        report.skipped.update(skip)
    report.wall_time = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# counterexample search
# ---------------------------------------------------------------------------

_SEARCH_PREDICATES = ("second", "strong-2a-second", "2a-coprimary", "comultiplication")


def _parse_expr(text: str):
    tokens = re.findall(r"\(|\)|[^\s()]+", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_or():
        node = parse_and()
        while peek() == "or":
            take()
            node = ("or", node, parse_and())
        return node

    def parse_and():
        node = parse_not()
        while peek() == "and":
            take()
            node = ("and", node, parse_not())
        return node

    def parse_not():
        if peek() == "not":
            take()
            return ("not", parse_not())
        return parse_atom()

    def parse_atom():
        tok = take()
        if tok is None:
            raise StructureParseError("unexpected end of expression")
        if tok == "(":
            node = parse_or()
            if take() != ")":
                raise StructureParseError("missing closing parenthesis")
            return node
        if tok in (")", "and", "or", "not"):
            raise StructureParseError(f"unexpected token {tok!r}")
        if tok in _SEARCH_PREDICATES or tok.startswith("g-2a-coprimary:"):
            return ("pred", tok)
        raise StructureParseError(f"unknown predicate {tok!r}")

    node = parse_or()
    if pos != len(tokens):
        raise StructureParseError(f"trailing tokens in expression: {tokens[pos:]}")
    return node


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        return self.used <= self.limit


def _eval_pred(name: str, n, entry: CorpusEntry, budget: _Budget) -> bool:
    if not budget.spend():
        raise _BudgetExhausted
    if name == "second":
        return classify_submodule(n, "second").value
    if name == "strong-2a-second":
        return classify_submodule(n, "strong-2a-second").value
    if name == "2a-coprimary":
        return coprimary_via_characterization(n).value
    if name == "comultiplication":
        return is_graded_comultiplication_module(entry.gmodule).value
    if name.startswith("g-2a-coprimary:"):
        label = name.split(":", 1)[1]
        group = entry.gmodule.group
        for g, lab in enumerate(group.labels):
            if str(lab) == label:
                return classify_submodule(n, "g-2a-coprimary", g=g).value
        return False  # entry's grading group has no such element
    raise StructureParseError(f"unknown predicate {name!r}")


class _BudgetExhausted(Exception):
    pass


def _eval_expr(node, n, entry, budget) -> bool:
    op = node[0]
    if op == "pred":
        return _eval_pred(node[1], n, entry, budget)
    if op == "not":
        return not _eval_expr(node[1], n, entry, budget)
    if op == "and":
        return _eval_expr(node[1], n, entry, budget) and _eval_expr(node[2], n, entry, budget)
    if op == "or":
        return _eval_expr(node[1], n, entry, budget) or _eval_expr(node[2], n, entry, budget)
    raise AssertionError(op)


def search_counterexample(expr: str, corpus: Corpus, budget: int = 10**6):
    """First corpus submodule (canonical order) satisfying the expression,
    or None if none exists / the evaluation budget runs out.

    Returns a dict with the entry name, the member list, and the handle.
    """
    node = _parse_expr(expr)
    b = _Budget(budget)
    try:
        for entry in corpus:
            for n in _nonzero_subs(entry):
                if _eval_expr(node, n, entry, b):
                    return {
                        "entry": entry.name,
                        "members": [str(n.carrier.labels[i]) for i in n.sorted_members],
                        "handle": n,
                    }
    except _BudgetExhausted:
        return None
    return None
