"""
CLI Main - Typer-based command-line interface.

Usage:
    islab run --prog copy.isq --in i=1,o=0
    islab test --prog copy.isq --spec oi.spec
    islab fault-certify --prog flipped.isq --spec oi.spec --frag 1 --repl "+i.get" --profile s4
    islab adequacy --prog flipped.isq --spec oi.spec --profile s4

Exit codes:
    0  success, pass, correct or adequate
    1  failures, violations, incorrectness or inadequacy found
    2  usage or format error
    3  program statically rejected by the semantics variant
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from islab.config import ErrorCode, FaultError, IslabError, get_settings
from islab.domains.faults import (
    RepairSearchConfig,
    certify_fault,
    check_adequacy,
    collect_failures,
    get_profile,
    search_repairs,
)
from islab.domains.isa import (
    InstructionSequence,
    parse_fragment,
    parse_replacement,
    parse_sequence,
)
from islab.domains.semantics import (
    ExcessPolicy,
    Machine,
    OutcomeKind,
    SemanticsVariant,
    discriminate_variant,
    enumerate_variants,
    parse_variant,
    static_check,
)
from islab.domains.testing import (
    ConfirmationHarness,
    EffectuationLedger,
    EffectuationRecord,
    Purpose,
    Specification,
    TestCase,
    exhaustive_suite,
    parse_probes,
    parse_specification,
    parse_state,
    parse_suite,
)
from islab.domains.views import (
    ProcessThresholds,
    lint,
    process_report,
    render_violations,
    verify_exhaustive,
)

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2
EXIT_REJECTED = 3

app = typer.Typer(
    name="islab",
    help="islab - Instruction-sequence fault laboratory",
    add_completion=False,
)
console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False)

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

ProgOption = typer.Option(..., "--prog", exists=True, dir_okay=False, help="Program file (.isq)")
SpecOption = typer.Option(None, "--spec", exists=True, dir_okay=False, help="Specification file")
SuiteOption = typer.Option(None, "--suite", exists=True, dir_okay=False, help="Suite file")
VariantOption = typer.Option(None, "--variant", help="Semantics, e.g. low=deadlock,high=skip")
BudgetOption = typer.Option(None, "--budget", min=1, help="Step budget per effectuation")
ProfileOption = typer.Option(None, "--profile", help="Fault budget profile (s1 or s4)")
LedgerOption = typer.Option(None, "--ledger", dir_okay=False, help="Append effectuation records")


def _emit(text: str) -> None:
    console.print(text, markup=False)


def _reporting(func: F) -> F:
    """Map laboratory errors to exit code 2 with a message on stderr."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except IslabError as e:
            logger.debug("Command failed: %s", e.to_dict())
            err_console.print("[red]Error:[/red] " + escape(f"[{e.code.value}] {e.message}"))
            raise typer.Exit(EXIT_USAGE) from e

    return wrapper  # type: ignore[return-value]


# --- Loading ---


def _program(path: Path) -> InstructionSequence:
    return parse_sequence(path.read_text())


def _variant(text: str | None) -> SemanticsVariant:
    return parse_variant(text or get_settings().default_variant)


def _budget(budget: int | None) -> int:
    return budget or get_settings().default_budget


def _specification(path: Path) -> Specification:
    return parse_specification(path.read_text())


def _oracle(spec: Path | None, suite: Path | None) -> Specification | list[TestCase]:
    if (spec is None) == (suite is None):
        raise typer.BadParameter("give exactly one of --spec or --suite")
    if spec is not None:
        return _specification(spec)
    assert suite is not None
    return parse_suite(suite.read_text(), get_settings().default_step_bound)


def _cases(oracle: Specification | list[TestCase]) -> list[TestCase]:
    if isinstance(oracle, Specification):
        return exhaustive_suite(oracle, get_settings().domain_cap)
    return oracle


def _search(oracle: Specification | list[TestCase], limit: int | None = None) -> RepairSearchConfig:
    settings = get_settings()
    return RepairSearchConfig(
        max_part_length=settings.max_part_length,
        max_fragment_parts=settings.max_fragment_parts,
        registers=oracle.registers if isinstance(oracle, Specification) else (),
        max_candidates=limit,
    )


def _statically_rejected(x: InstructionSequence, v: SemanticsVariant) -> bool:
    check = static_check(x)
    return (v.low == ExcessPolicy.REJECT and bool(check.low_violations)) or (
        v.high == ExcessPolicy.REJECT and bool(check.high_violations)
    )


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().log_level.upper()
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback()
def _main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
) -> None:
    """Run, test, certify faults in and assess instruction sequences."""
    _configure_logging(verbose)


# --- Effectuation ---


@app.command()
@_reporting
def run(
    prog: Path = ProgOption,
    state: str = typer.Option("", "--in", help="Input state, e.g. i=1,o=0"),
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
    trace: bool = typer.Option(False, "--trace", help="Print every step"),
    purpose: Purpose = typer.Option(Purpose.PRACTICAL_USE, "--purpose", help="Effectuation purpose"),
    ledger: Path | None = LedgerOption,
) -> None:
    """Effectuate a program once."""
    x = _program(prog)
    d = parse_state(state)
    outcome, effect_trace = Machine(_variant(variant)).effectuate(x, d, _budget(budget))

    if trace:
        for step in effect_trace.steps:
            _emit(step.render())
    _emit(outcome.render())

    if ledger is not None:
        records = EffectuationLedger()
        records.append(
            EffectuationRecord(
                purpose=purpose,
                program_id=x.program_id,
                input=d,
                outcome=outcome.kind,
                steps=outcome.steps,
                program_length=len(x),
                positions=tuple(sorted(effect_trace.positions)),
            )
        )
        records.append_to(ledger)

    if outcome.kind == OutcomeKind.STATICALLY_REJECTED:
        raise typer.Exit(EXIT_REJECTED)
    if not outcome.terminated:
        raise typer.Exit(EXIT_FOUND)


@app.command()
@_reporting
def test(
    prog: Path = ProgOption,
    spec: Path | None = SpecOption,
    suite: Path | None = SuiteOption,
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
    ledger: Path | None = LedgerOption,
) -> None:
    """Run confirmation tests from a suite or a specification's whole domain."""
    x = _program(prog)
    v = _variant(variant)
    records = EffectuationLedger() if ledger is not None else None
    harness = ConfirmationHarness(v, _budget(budget), ledger=records)

    result = harness.run_suite(x, _cases(_oracle(spec, suite)))
    for case in result.results:
        _emit(case.render())
    _emit(result.summary())

    if records is not None and ledger is not None:
        records.append_to(ledger)
    if _statically_rejected(x, v):
        raise typer.Exit(EXIT_REJECTED)
    if not result.all_passed:
        raise typer.Exit(EXIT_FOUND)


# --- Views ---


@app.command()
@_reporting
def verify(
    prog: Path = ProgOption,
    spec: Path = typer.Option(..., "--spec", exists=True, dir_okay=False, help="Specification file"),
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
) -> None:
    """Exhaustively verify a program; report witnesses, never locations."""
    x = _program(prog)
    v = _variant(variant)
    report = verify_exhaustive(x, _specification(spec), v, _budget(budget), get_settings().domain_cap)
    _emit(report.render())
    if _statically_rejected(x, v):
        raise typer.Exit(EXIT_REJECTED)
    if not report.correct:
        raise typer.Exit(EXIT_FOUND)


@app.command(name="lint")
@_reporting
def lint_command(
    prog: Path = ProgOption,
    rules: str | None = typer.Option(None, "--rules", help="Comma-separated rule ids"),
    fmt: str = typer.Option("text", "--format", help="text or machine"),
) -> None:
    """Check coding rules."""
    selected = [r.strip() for r in rules.split(",") if r.strip()] if rules else None
    violations = lint(_program(prog), selected)
    output = render_violations(violations, fmt)
    if output:
        _emit(output)
    if violations:
        raise typer.Exit(EXIT_FOUND)


@app.command()
@_reporting
def report(
    ledger: Path = typer.Option(..., "--ledger", dir_okay=False, help="Ledger file"),
) -> None:
    """Process report over an effectuation ledger."""
    settings = get_settings()
    thresholds = ProcessThresholds(
        testing_share_benchmark=settings.testing_share_benchmark,
        wildcard_oracle_max=settings.wildcard_oracle_max,
        coverage_only_threshold=settings.coverage_only_threshold,
    )
    result = process_report(EffectuationLedger.load(ledger), thresholds)
    _emit(result.render())
    if result.flags:
        raise typer.Exit(EXIT_FOUND)


# --- Faults ---


@app.command(name="fault-certify")
@_reporting
def fault_certify(
    prog: Path = ProgOption,
    spec: Path | None = SpecOption,
    suite: Path | None = SuiteOption,
    frag: str = typer.Option(..., "--frag", help="Fragment, e.g. 1 or 1-2,5"),
    repl: str = typer.Option(..., "--repl", help="Replacement, parts separated by |"),
    profile: str | None = ProfileOption,
    case: str | None = typer.Option(None, "--case", help="Failing case (default: first)"),
    minimality: bool = typer.Option(False, "--minimality", help="Require a minimal fault"),
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
) -> None:
    """Certify one fragment and repair as a mechanical fault."""
    settings = get_settings()
    x = _program(prog)
    v = _variant(variant)
    steps = _budget(budget)
    oracle = _oracle(spec, suite)
    cfg = get_profile(profile or settings.default_profile)
    if minimality:
        cfg = cfg.model_copy(update={"enforce_minimality": True})

    failures = collect_failures(x, oracle, v, steps, settings.domain_cap)
    if case is None:
        if not failures:
            raise FaultError(
                "every test passes; nothing to certify",
                {"program_id": x.program_id},
                code=ErrorCode.FAULT_NO_FAILURE,
            )
        failing = failures[0]
    else:
        matching = [f for f in failures if f.test_case.name == case]
        if not matching:
            if case not in {tc.name for tc in _cases(oracle)}:
                raise typer.BadParameter(f"no test case named {case!r}", param_hint="--case")
            raise FaultError(f"case {case} passes on the program", {"case": case})
        failing = matching[0]

    result = certify_fault(
        x,
        oracle,
        failing,
        parse_fragment(frag),
        parse_replacement(repl),
        cfg,
        v,
        steps,
        _search(oracle),
        settings.domain_cap,
    )
    _emit(result.render())
    if not result.certified:
        raise typer.Exit(EXIT_FOUND)


@app.command(name="fault-search")
@_reporting
def fault_search(
    prog: Path = ProgOption,
    spec: Path | None = SpecOption,
    suite: Path | None = SuiteOption,
    frag: str = typer.Option(..., "--frag", help="Fragment under repair"),
    profile: str | None = ProfileOption,
    limit: int | None = typer.Option(None, "--limit", min=1, help="Stop after N candidates"),
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
) -> None:
    """Try every candidate repair for a fragment."""
    settings = get_settings()
    x = _program(prog)
    v = _variant(variant)
    steps = _budget(budget)
    oracle = _oracle(spec, suite)
    cfg = get_profile(profile or settings.default_profile)

    failures = collect_failures(x, oracle, v, steps, settings.domain_cap)
    results = search_repairs(
        x,
        oracle,
        failures,
        parse_fragment(frag),
        cfg,
        _search(oracle, limit),
        v,
        steps,
        settings.domain_cap,
    )
    for _, result in results:
        _emit(result.render())
    certified = sum(1 for _, result in results if result.certified)
    _emit(f"certified {certified}/{len(results)}")
    if not certified:
        raise typer.Exit(EXIT_FOUND)


@app.command()
@_reporting
def adequacy(
    prog: Path = ProgOption,
    spec: Path = typer.Option(..., "--spec", exists=True, dir_okay=False, help="Specification file"),
    profile: str | None = ProfileOption,
    variant: str | None = VariantOption,
    budget: int | None = BudgetOption,
) -> None:
    """Decide adequacy modulo a limited volume of faults."""
    settings = get_settings()
    x = _program(prog)
    oracle = _specification(spec)
    cfg = get_profile(profile or settings.default_profile)

    result = check_adequacy(
        x, oracle, cfg, _search(oracle), _variant(variant), _budget(budget), settings.domain_cap
    )
    _emit(result.render())
    for fault in result.chain:
        _emit("  " + fault.render())
    if result.final is not None and result.chain:
        _emit(f"final: {result.final.render()}")
    if not result.adequate:
        raise typer.Exit(EXIT_FOUND)


# --- Variants ---


@app.command(name="variants-enum")
@_reporting
def variants_enum() -> None:
    """List all 36 semantics variants."""
    for v in enumerate_variants():
        _emit(v.render())


@app.command(name="variants-discriminate")
@_reporting
def variants_discriminate(
    oracle: str = typer.Option(..., "--oracle", help="Variant of the simulated platform"),
    probes: Path = typer.Option(..., "--probes", exists=True, dir_okay=False, help="Probe file"),
    budget: int = typer.Option(100, "--budget", min=1, help="Step budget per probe"),
) -> None:
    """Find the variants consistent with a black-box platform."""
    platform = Machine(parse_variant(oracle))
    matching = discriminate_variant(platform, parse_probes(probes.read_text()), budget)
    for v in matching:
        _emit(v.render())
    _emit(f"matching {len(matching)}/{len(enumerate_variants())}")
    if not matching:
        raise typer.Exit(EXIT_FOUND)


def main() -> None:
    """CLI entry point."""
    app()


if __name__ == "__main__":
    main()
