import io
import subprocess
import sys

import pytest

from coronake.cli import main
from coronake.graph import path
from coronake.graph6 import write_graph6


@pytest.fixture
def spec_file(tmp_path):
    def write(text, name="spec.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze(capsys, spec_file):
    code, out, _ = run(capsys, "analyze", spec_file("Bw\n"))
    assert code == 0
    assert out.splitlines() == ["n=3", "m=3", "alpha=1", "mu=1", "kappa=1", "class=1KE"]


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("K0\n"))
    code, out, _ = run(capsys, "analyze", "-")
    assert code == 0 and "class=KE" in out


@pytest.mark.parametrize("text", ["A`\n", "~?@\n", "\n# nothing\n"])
def test_analyze_parse_errors_exit_2(capsys, spec_file, text):
    code, _, err = run(capsys, "analyze", spec_file(text))
    assert code == 2 and err.startswith("error:")


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "absent"))
    assert code == 2 and "cannot read" in err


def test_corona_emit_and_analyze(capsys, spec_file):
    spec = spec_file("@\nA_\n")
    code, out, _ = run(capsys, "corona", spec)
    assert (code, out) == (0, "Bw\n")
    code, out, _ = run(capsys, "corona", spec, "--emit", "dot", "--analyze")
    assert code == 0
    assert out.startswith("graph corona {")
    assert "fast_kappa=1" in out and "agree=yes" in out


def test_corona_analyze_skips_direct_above_bound(capsys, spec_file):
    # P_20 o K2 has 60 vertices: still writable as graph6, past the direct bound
    text = write_graph6(path(20)) + "\n" + "A_\n" * 20
    code, out, _ = run(capsys, "corona", spec_file(text), "--analyze")
    assert code == 0
    assert "fast_kappa=10" in out and "direct=skipped" in out


def test_corona_too_large_for_graph6_exits_1(capsys, spec_file):
    text = write_graph6(path(30)) + "\n" + "A_\n" * 30
    code, _, err = run(capsys, "corona", spec_file(text))
    assert code == 1 and err.startswith("error:")


def test_corona_bad_family_length(capsys, spec_file):
    code, _, err = run(capsys, "corona", spec_file("Bw\nA_\n"))
    assert code == 2 and "family" in err


def test_classify_methods(capsys, spec_file):
    spec = spec_file("Bg\nBw\n@\n@\n")  # P3 o (K3, K1, K1)
    code, out, _ = run(capsys, "classify", spec)
    assert code == 0 and "ke_class=1KE" in out
    code, out, _ = run(capsys, "classify", spec, "--method", "direct")
    assert code == 0 and "method=direct" in out
    code, out, _ = run(capsys, "classify", spec, "--method", "both")
    assert code == 0 and out.rstrip().endswith("agree=yes")


def test_verify(capsys, spec_file):
    catalog = spec_file("@\nA_\nBw\n", "catalog.txt")
    code, out, _ = run(capsys, "verify", "--max-h", "2", "--catalog", catalog)
    assert code == 0
    assert "counterexamples: 0" in out and "lemma3: 53/53 passed" in out
    code, out, _ = run(capsys, "verify", "--max-h", "3", "--sample", "20", "--seed", "1")
    assert code == 0 and "seed 1" in out


def test_verify_seed_needs_sample(capsys):
    code, _, err = run(capsys, "verify", "--max-h", "2", "--seed", "4")
    assert code == 2 and "--sample" in err


def test_verify_size_guard_exits_1(capsys):
    code, _, err = run(capsys, "verify", "--max-h", "6")
    assert code == 1 and "sampling" in err


def test_search(capsys, spec_file):
    catalog = spec_file("C~\n", "catalog.txt")
    code, out, _ = run(capsys, "search", "--kappa", "2", "--max-h", "1", "--catalog", catalog)
    assert (code, out) == (0, "D~{ 2 @ C~\n")
    code, out, _ = run(capsys, "search", "--kappa", "1", "--max-h", "3", "--limit", "3")
    assert code == 0 and len(out.splitlines()) == 3


def test_oracle(capsys, spec_file):
    code, out, _ = run(capsys, "oracle", spec_file("Bw\n"))
    assert code == 0 and out.splitlines()[-1] == "kappa=1"


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "2,3,50")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[-1].split()[:3] == ["50", "150", "25"] and "skipped" in lines[-1]
    code, _, err = run(capsys, "bench", "--sizes", "2,x")
    assert code == 2


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "coronake", "analyze", "-"], input="A_\n", capture_output=True, text=True
    )
    assert result.returncode == 0 and "class=KE" in result.stdout
