"""
Tests for the islab command line.
"""

from __future__ import annotations

from pathlib import Path

import pytest
from typer.testing import CliRunner

from .main import app

runner = CliRunner()

COPY = "+i.get; #3; o.set:0; !; o.set:1; !"
FLIPPED = "-i.get; #3; o.set:0; !; o.set:1; !"


@pytest.fixture
def files(tmp_path: Path) -> dict[str, Path]:
    contents = {
        "copy.isq": COPY + "\n",
        "flipped.isq": FLIPPED + "\n",
        "zero.isq": "o.set:0; !\n",
        "unreachable.isq": "!; r.set:1\n",
        "escape.isq": "#5; !\n",
        "broken.isq": "+i.got; !\n",
        "oi.spec": "domain i,o\nrule o=i\n",
        "one.suite": "case one: in i=1,o=0 ; expect o=1 ; k 4\ncase zero: in i=0,o=0 ; expect o=0 ; k 4\n",
        "probes.txt": "#5; ! |\n\\#5; ! |\n",
        "history.ledger": "ConfirmationTest abc terminated 4 len=6 cov=1,2,5,6 oracle=constrained\n",
        "bad.ledger": "ConfirmationTest abc terminated 3 len=2 cov=1,2,3,4,5\n",
        "open.suite": "case free: in i=1 ; expect o=1\n",
    }
    paths = {}
    for name, text in contents.items():
        path = tmp_path / name
        path.write_text(text)
        paths[name] = path
    return paths


def _invoke(*args: str | Path) -> tuple[int, str]:
    result = runner.invoke(app, [str(a) for a in args])
    return result.exit_code, result.stdout


# --- run ---


def test_run_copy_program(files: dict[str, Path]) -> None:
    """Test run prints the outcome of the copy program."""
    code, out = _invoke(
        "run", "--prog", files["copy.isq"], "--in", "i=1,o=0",
        "--variant", "low=deadlock,high=deadlock", "--budget", "100",
    )
    assert code == 0
    assert "Terminated {i=1,o=1} steps=4" in out


def test_run_trace(files: dict[str, Path]) -> None:
    """Test run --trace prints one line per step."""
    code, out = _invoke("run", "--prog", files["copy.isq"], "--in", "i=1", "--trace")
    assert code == 0
    assert len([line for line in out.splitlines() if line.strip()]) == 5


def test_run_deadlock_exits_one(files: dict[str, Path]) -> None:
    """Test a deadlock exits 1."""
    code, out = _invoke("run", "--prog", files["escape.isq"])
    assert code == 1
    assert "Deadlock" in out


def test_run_static_rejection_exits_three(files: dict[str, Path]) -> None:
    """Test a static rejection exits 3."""
    code, out = _invoke("run", "--prog", files["escape.isq"], "--variant", "high=reject")
    assert code == 3
    assert "StaticallyRejected" in out


def test_run_appends_to_ledger(files: dict[str, Path], tmp_path: Path) -> None:
    """Test run appends records with the given purpose."""
    ledger = tmp_path / "runs.ledger"
    _invoke("run", "--prog", files["copy.isq"], "--in", "i=1", "--ledger", ledger)
    _invoke(
        "run", "--prog", files["copy.isq"], "--in", "i=0",
        "--purpose", "ConfirmationTest", "--ledger", ledger,
    )
    lines = ledger.read_text().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("PracticalUse ")
    assert lines[0].endswith("terminated 4 len=6 cov=1,2,5,6")
    assert lines[1].startswith("ConfirmationTest ")


def test_syntax_error_exits_two(files: dict[str, Path]) -> None:
    """Test a syntax error exits 2."""
    code, _ = _invoke("run", "--prog", files["broken.isq"])
    assert code == 2


def test_bad_variant_exits_two(files: dict[str, Path]) -> None:
    """Test an invalid variant exits 2."""
    code, _ = _invoke("run", "--prog", files["copy.isq"], "--variant", "high=explode")
    assert code == 2


def test_missing_file_exits_two(tmp_path: Path) -> None:
    """Test a missing program file exits 2."""
    code, _ = _invoke("run", "--prog", tmp_path / "nowhere.isq")
    assert code == 2


# --- test ---


def test_test_against_specification(files: dict[str, Path]) -> None:
    """Test test runs the whole domain of a specification."""
    code, out = _invoke("test", "--prog", files["copy.isq"], "--spec", files["oi.spec"])
    assert code == 0
    assert "passed 4/4" in out


def test_test_failures_exit_one(files: dict[str, Path]) -> None:
    """Test failing cases exit 1."""
    code, out = _invoke("test", "--prog", files["flipped.isq"], "--suite", files["one.suite"])
    assert code == 1
    assert "passed 0/2" in out


def test_test_needs_exactly_one_oracle(files: dict[str, Path]) -> None:
    """Test test needs exactly one of spec and suite."""
    code, _ = _invoke("test", "--prog", files["copy.isq"])
    assert code == 2
    code, _ = _invoke(
        "test", "--prog", files["copy.isq"], "--spec", files["oi.spec"], "--suite", files["one.suite"]
    )
    assert code == 2


def test_test_writes_ledger(files: dict[str, Path], tmp_path: Path) -> None:
    """Test test appends confirmation records."""
    ledger = tmp_path / "tests.ledger"
    _invoke("test", "--prog", files["copy.isq"], "--spec", files["oi.spec"], "--ledger", ledger)
    lines = ledger.read_text().splitlines()
    assert len(lines) == 4
    assert all(line.startswith("ConfirmationTest ") for line in lines)
    assert all(line.endswith("oracle=constrained") for line in lines)


def test_test_flags_defaulted_step_bound(files: dict[str, Path]) -> None:
    """Test a suite case without k is marked in the output."""
    code, out = _invoke("test", "--prog", files["copy.isq"], "--suite", files["open.suite"])
    assert code == 0
    assert "PASS free Terminated {i=1,o=1} steps=4 k=defaulted" in out


# --- views ---


def test_verify_reports_witnesses(files: dict[str, Path]) -> None:
    """Test verify lists failing states."""
    code, out = _invoke("verify", "--prog", files["flipped.isq"], "--spec", files["oi.spec"])
    assert code == 1
    assert "Incorrect: 4 of 4 states" in out


def test_verify_correct(files: dict[str, Path]) -> None:
    """Test verify reports a correct program."""
    code, out = _invoke("verify", "--prog", files["copy.isq"], "--spec", files["oi.spec"])
    assert code == 0
    assert "Correct (4 states)" in out


def test_lint_machine_format(files: dict[str, Path]) -> None:
    """Test lint machine-readable output."""
    code, out = _invoke("lint", "--prog", files["unreachable.isq"], "--format", "machine")
    assert code == 1
    assert out.strip() == "VIOLATION unreachable 2"


def test_lint_clean(files: dict[str, Path]) -> None:
    """Test lint on a clean program."""
    code, out = _invoke("lint", "--prog", files["copy.isq"])
    assert code == 0
    assert "no violations" in out


def test_lint_unknown_rule(files: dict[str, Path]) -> None:
    """Test lint with an unknown rule exits 2."""
    code, _ = _invoke("lint", "--prog", files["copy.isq"], "--rules", "unreachable,tabs")
    assert code == 2


def test_report(files: dict[str, Path], tmp_path: Path) -> None:
    """Test report over a confirmation-only ledger."""
    ledger = tmp_path / "process.ledger"
    _invoke(
        "run", "--prog", files["copy.isq"], "--in", "i=1",
        "--purpose", "ConfirmationTest", "--ledger", ledger,
    )
    code, out = _invoke("report", "--ledger", ledger)
    assert code == 0
    assert "testing share: 1.00" in out
    assert "flags: none" in out


def test_report_on_empty_ledger_flags_benchmark(tmp_path: Path) -> None:
    """Test report on an empty ledger flags the benchmark."""
    code, out = _invoke("report", "--ledger", tmp_path / "empty.ledger")
    assert code == 1
    assert "testing-share-below-benchmark" in out
    assert "not mechanically measurable" in out


def test_report_on_malformed_ledger_exits_two(files: dict[str, Path]) -> None:
    """Test coverage beyond the program length is a format error, not a crash."""
    result = runner.invoke(app, ["report", "--ledger", str(files["bad.ledger"])])
    assert result.exit_code == 2
    assert result.exception is None or isinstance(result.exception, SystemExit)


# --- faults ---


def test_fault_certify(files: dict[str, Path]) -> None:
    """Test fault-certify accepts the restored test."""
    code, out = _invoke(
        "fault-certify", "--prog", files["flipped.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--repl", "+i.get", "--profile", "s4",
    )
    assert code == 0
    assert out.startswith("CERTIFIED 1 -> +i.get")


def test_fault_certify_rejection(files: dict[str, Path]) -> None:
    """Test fault-certify rejects a failing repair."""
    code, out = _invoke(
        "fault-certify", "--prog", files["flipped.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--repl", "i.get", "--profile", "s4",
    )
    assert code == 1
    assert out.startswith("REJECTED 1 -> i.get")


def test_fault_certify_named_case(files: dict[str, Path]) -> None:
    """Test fault-certify with a named trigger case."""
    code, out = _invoke(
        "fault-certify", "--prog", files["flipped.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--repl", "+i.get", "--case", "in_i1_o1",
    )
    assert code == 0
    assert "trigger=in_i1_o1" in out


def test_fault_certify_without_failures(files: dict[str, Path]) -> None:
    """Test fault-certify on a passing program exits 2."""
    code, _ = _invoke(
        "fault-certify", "--prog", files["copy.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--repl", "-i.get",
    )
    assert code == 2


def test_fault_certify_unknown_case(files: dict[str, Path]) -> None:
    """Test fault-certify with an unknown case exits 2."""
    code, _ = _invoke(
        "fault-certify", "--prog", files["flipped.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--repl", "+i.get", "--case", "nope",
    )
    assert code == 2


def test_fault_search(files: dict[str, Path]) -> None:
    """Test fault-search lists certified repairs and a summary."""
    code, out = _invoke(
        "fault-search", "--prog", files["flipped.isq"], "--spec", files["oi.spec"],
        "--frag", "1", "--profile", "s4",
    )
    assert code == 0
    assert "CERTIFIED 1 -> +i.get" in out
    assert out.splitlines()[-1].startswith("certified ")


def test_adequacy(files: dict[str, Path]) -> None:
    """Test adequacy reports the chain and final program."""
    code, out = _invoke(
        "adequacy", "--prog", files["flipped.isq"], "--spec", files["oi.spec"], "--profile", "s4"
    )
    assert code == 0
    assert out.startswith("Adequate chain=1 fraction=1/6")
    assert f"final: {COPY}" in out


def test_inadequacy(files: dict[str, Path]) -> None:
    """Test inadequacy exits 1."""
    code, out = _invoke(
        "adequacy", "--prog", files["zero.isq"], "--spec", files["oi.spec"], "--profile", "s1"
    )
    assert code == 1
    assert "NotAdequate reason=search-exhausted" in out


def test_unknown_profile(files: dict[str, Path]) -> None:
    """Test an unknown profile exits 2."""
    code, _ = _invoke(
        "adequacy", "--prog", files["flipped.isq"], "--spec", files["oi.spec"], "--profile", "s9"
    )
    assert code == 2


# --- variants ---


def test_variants_enum() -> None:
    """Test variants-enum prints every variant once."""
    code, out = _invoke("variants-enum")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 36
    assert lines[0] == "low=deadlock,high=deadlock"
    assert len(set(lines)) == 36


def test_variants_discriminate(files: dict[str, Path]) -> None:
    """Test variants-discriminate narrows to the oracle."""
    code, out = _invoke(
        "variants-discriminate", "--oracle", "low=deadlock,high=terminate",
        "--probes", files["probes.txt"],
    )
    assert code == 0
    assert out.splitlines() == ["low=deadlock,high=terminate", "matching 1/36"]


def test_verbose_flag() -> None:
    """Test the verbose flag is accepted."""
    code, _ = _invoke("--verbose", "variants-enum")
    assert code == 0


# --- Determinism ---


@pytest.mark.parametrize(
    "args",
    [
        ("test", "--prog", "flipped.isq", "--spec", "oi.spec"),
        ("verify", "--prog", "flipped.isq", "--spec", "oi.spec"),
        ("lint", "--prog", "unreachable.isq"),
        ("fault-search", "--prog", "flipped.isq", "--spec", "oi.spec", "--frag", "3"),
        ("adequacy", "--prog", "flipped.isq", "--spec", "oi.spec", "--profile", "s4"),
        ("run", "--prog", "copy.isq", "--in", "i=1", "--trace"),
        (
            "fault-certify", "--prog", "flipped.isq", "--spec", "oi.spec",
            "--frag", "1", "--repl", "+i.get", "--profile", "s4",
        ),
        ("report", "--ledger", "history.ledger"),
        ("variants-enum",),
        ("variants-discriminate", "--oracle", "low=deadlock,high=terminate", "--probes", "probes.txt"),
    ],
)
def test_output_is_deterministic(files: dict[str, Path], args: tuple[str, ...]) -> None:
    """Test every subcommand prints the same output twice."""
    resolved = [files.get(a, a) for a in args]
    first = _invoke(*resolved)
    second = _invoke(*resolved)
    assert first == second
