import io

import pytest

from gradedalg import StructureParseError, parse_structure_text, run_cli

EXAMPLE = """\
# finite model over integers mod 180
group trivial
ring zmod 180
grading trivial
module directsum 4 9 5
submodule N gens (1,0,0) (0,1,0)
"""

GROUPRING = """\
group cyclic 2
ring groupring 2
grading natural
module self
"""


def _write(tmp_path, text, name="s.gstruct"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def test_parse_example_structure():
    entry = parse_structure_text(EXAMPLE)
    assert entry.gring.ring.size == 180
    assert entry.gmodule.module.size == 180
    n = entry.named["N"]
    assert len(n.members) == 36 and n.graded


def test_parse_groupring_structure():
    entry = parse_structure_text(GROUPRING)
    assert entry.gring.ring.size == 4
    assert len(entry.gring.grading.components[1]) == 2


def test_parse_mulset_and_ideal():
    entry = parse_structure_text(
        "ring zmod 12\nmodule self\nideal I gens 4\nmulset S 1 3 9\n"
    )
    assert entry.named["I"].members == frozenset({0, 4, 8})
    assert entry.mulsets["S"] == (1, 3, 9)


def test_unknown_element_is_line_numbered():
    with pytest.raises(StructureParseError) as exc:
        parse_structure_text("ring zmod 12\nmodule self\nsubmodule N gens 99\n")
    assert exc.value.line == 3
    assert "99" in str(exc.value)


def test_non_multiplicative_mulset_rejected():
    with pytest.raises(StructureParseError) as exc:
        parse_structure_text("ring zmod 12\nmodule self\nmulset S 1 2\n")
    assert "mulset" in str(exc.value)


def test_missing_ring_rejected():
    with pytest.raises(StructureParseError):
        parse_structure_text("module self\n")


def test_unknown_directive_rejected():
    with pytest.raises(StructureParseError) as exc:
        parse_structure_text("ring zmod 12\nmodule self\nfrobnicate 3\n")
    assert exc.value.line == 3


def test_comments_and_blank_lines_ignored():
    entry = parse_structure_text("\n# hi\nring zmod 4  # inline\n\nmodule self\n")
    assert entry.gring.ring.size == 4


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def _run(argv):
    buf = io.StringIO()
    code = run_cli(argv, out=buf)
    return code, buf.getvalue()


def test_cli_validate(tmp_path):
    path = _write(tmp_path, EXAMPLE)
    code, out = _run(["validate", path])
    assert code == 0 and "ok" in out


def test_cli_classify_strong_false(tmp_path):
    path = _write(tmp_path, EXAMPLE)
    code, out = _run(
        ["classify", "--file", path, "--target", "N", "--predicate", "strong-2a-second"]
    )
    assert code == 0
    assert out.startswith("false")
    assert "witness" in out


def test_cli_classify_machine_report(tmp_path):
    path = _write(tmp_path, EXAMPLE)
    code, out = _run(
        ["--report", "machine", "classify", "--file", path, "--target", "N", "--predicate", "second"]
    )
    assert code == 0
    assert out == "target=N predicate=second value=false\n"


def test_cli_classify_ideal_predicate(tmp_path):
    path = _write(tmp_path, "ring zmod 12\nmodule self\nideal I gens 4\n")
    code, out = _run(["classify", "--file", path, "--target", "I", "--predicate", "primary"])
    assert code == 0 and out.startswith("true")


def test_cli_verify_single_prop():
    code, out = _run(["--report", "machine", "verify", "--prop", "ann-2AP"])
    assert code == 0
    assert out.startswith("prop=ann-2AP status=pass ")


def test_cli_verify_unknown_prop_exits_2():
    code, _ = _run(["verify", "--prop", "unknown-name"])
    assert code == 2


def test_cli_usage_error_exits_2():
    code, _ = _run(["classify", "--file"])
    assert code == 2


def test_cli_search():
    code, out = _run(["search", "--expr", "2a-coprimary and not strong-2a-second"])
    assert code == 1 and "zmod8" in out
    code, out = _run(["search", "--expr", "second and not 2a-coprimary"])
    assert code == 0 and out.strip() == "none"


def test_cli_custom_corpus_dir(tmp_path):
    _write(tmp_path, "ring zmod 4\nmodule self\n", "a.gstruct")
    _write(tmp_path, "ring zmod 9\nmodule self\n", "b.gstruct")
    code, out = _run(
        ["--report", "machine", "verify", "--prop", "characterization-equiv", "--corpus", str(tmp_path)]
    )
    assert code == 0
    assert "status=pass" in out
