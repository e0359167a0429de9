import pytest
from click.testing import CliRunner

from skewring.classify import named_group
from skewring.cli import cli, main, resolve_group
from skewring.groupcore import to_cayley_text


def run(args):
    """Run through main() so exit-code remapping is exercised."""
    return main(args)


def test_check_commutative(capsys):
    assert run(["check", "--group", "Q8", "--kernel", "a", "--ring", "z/4"]) == 0
    assert "commutative" in capsys.readouterr().out


def test_check_negative_with_witness(capsys):
    assert run(["check", "-g", "G[16,4]", "-k", "a^2,b"]) == 3
    out = capsys.readouterr().out
    assert "witness: [b - b^-1, a + a^-1]" in out


def test_check_presentation(capsys):
    code = run(["check", "-g", "<a,b | a^8=1, b^2=a^4, ab=ba^3>", "-k", "a^2, ab"])
    assert code == 0


def test_cayley_file_with_indices(tmp_path, capsys):
    path = tmp_path / "q8.txt"
    path.write_text(to_cayley_text(named_group("Q8")))
    assert run(["kernels", "-g", str(path)]) == 0
    assert "3 kernels" in capsys.readouterr().out
    assert run(["check", "-g", str(path), "-k", "1"]) == 0
    assert run(["check", "-g", str(path), "-k", "a"]) == 2


def test_classify_cmd(capsys):
    assert run(["classify", "-g", "Q8xC2", "-k", "a,b", "--ringclass", "char4"]) == 0
    assert capsys.readouterr().out.strip() == "C4ii"
    assert run(["classify", "-g", "G[16,13]", "-k", "a,bc", "--ringclass", "r2zero"]) == 0
    assert "no case (predict: not commutative)" in capsys.readouterr().out
    assert run(["classify", "-g", "G[16,4]xC2", "-k", "a,b^2,e", "-c", "other"]) == 0
    assert capsys.readouterr().out.startswith("C5")


def test_audit_cmd(capsys):
    assert run(["audit", "-g", "G[16,8]", "-k", "a^2,ab"]) == 0
    assert "two-group-exponent-8" in capsys.readouterr().out
    assert run(["audit", "-g", "G[16,8]", "-k", "a"]) == 2


@pytest.mark.parametrize("args, code", [
    (["check", "--bogus"], 1),
    (["check", "-g", "Q8"], 1),
    (["check", "-g", "Q8", "-k", "a", "-r", "z/2"], 1),
    (["classify", "-g", "Q8", "-k", "a", "-c", "char2"], 1),
    (["nosuch"], 1),
    (["check", "-g", "<a | a^0>", "-k", "a"], 2),
    (["check", "-g", "Q8", "-k", "q"], 2),
    (["check", "-g", "Q8", "-k", "a^2"], 2),
    (["check", "-g", "no-such-file.txt", "-k", "a"], 2),
    (["check", "-g", "<a,b | a^2, b^2>", "-k", "a"], 2),
])
def test_exit_codes(args, code, capsys):
    assert run(args) == code


def test_help_exit_zero(capsys):
    assert run(["--help"]) == 0
    assert "verify-paper" in capsys.readouterr().out


def test_verify_paper_cmd(tmp_path, capsys):
    assert run(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert "[FAIL]" not in out and out.count("[PASS]") >= 20
    dest = tmp_path / "tables.tsv"
    assert run(["verify-paper", "--format", "tsv", "--out", str(dest)]) == 0
    assert dest.read_text().startswith("group\tkernel\tring")


def test_census_cmd(tmp_path, capsys):
    dest = tmp_path / "c.tsv"
    assert run(["census", "--max-rank", "0", "--rings", "z,z/4", "--format", "tsv", "--out", str(dest)]) == 0
    lines = dest.read_text().splitlines()
    assert lines[0].split("\t")[-1] == "millis"
    assert run(["census", "--max-rank", "0", "--rings", "z/9"]) == 0
    assert run(["census", "--rings", "z/2"]) == 1


def test_click_runner_standalone():
    result = CliRunner().invoke(cli, ["kernels", "-g", "D4"])
    assert result.exit_code == 0
    assert "<r>" in result.output


def test_resolve_group_forms():
    assert resolve_group("G[32,31]xC2^2").order == 128
    assert resolve_group("Q8xC2").order == 16
    assert resolve_group("<a | a^5>").order == 5


def test_census_mismatch_exit(monkeypatch, capsys):
    from skewring import harness

    row = harness.CensusRow("G", "<a>", "Z", True, False, "-", "", 0.5)
    monkeypatch.setattr(harness, "census", lambda *a, **k: harness.CensusReport("fake", rows=[row]))
    assert run(["census"]) == 3
    assert "MISMATCH" in capsys.readouterr().out
