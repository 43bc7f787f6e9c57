"""Command-line front door: matrix pipeline, solvers, simulator, service.

Every command is a thin adapter over the library modules; rendering is the
only logic that lives here.  Exit codes: 0 success, 2 usage or validation
problems, 1 internal errors.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

import click

from .matrix import (
    MixedMonte,
    ReductionTrace,
    build_payoff_matrix,
    conie_index,
    eliminate_dominated,
    expected_payoff,
    format_rational,
    parse_rational,
)
from .simulate import BehavioralConie, behavioral_to_mixed_conie, behavioral_to_mixed_monte, simulate
from .solvers import (
    BehavioralHost,
    HostPayoffMatrix,
    bayes_best_response,
    enumerate_nash_supports,
    fully_supported_equilibria,
    host_to_mixed,
    mixed_to_host,
    solve_zero_sum,
)

SEED_ENV_VAR = "MONTYHALL_SEED"


def _default_seed() -> int:
    return int(os.environ.get(SEED_ENV_VAR, "0"))


def fmt(value: Fraction) -> str:
    """Human rendering: exact fraction with a decimal hint."""
    return f"{format_rational(value)} (≈ {float(value):.4f})"


def _parse_rational_list(text: str, count: int, what: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise click.UsageError(f"{what} needs {count} comma-separated values, got {len(parts)}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise click.UsageError(f"bad {what}: {exc}") from exc


def parse_host_spec(spec: str) -> BehavioralHost:
    """Host specs: a pure code like ``12`` or ``[behavioral:]pi;lambda``."""
    body = spec.removeprefix("behavioral:")
    if ";" in body:
        pi_text, lam_text = body.split(";", 1)
        pi = _parse_rational_list(pi_text, 3, "host priors")
        lam = _parse_rational_list(lam_text, 3, "host biases")
        try:
            return BehavioralHost(pi, lam)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    try:
        return mixed_to_host(MixedMonte.point_mass(body.strip()))
    except ValueError as exc:
        raise click.UsageError(f"bad host spec {spec!r}: {exc}") from exc


def parse_conie_spec(spec: str) -> BehavioralConie:
    """Contestant specs: a pure code like ``1ss`` or ``behavioral:picks;switches``."""
    body = spec.removeprefix("behavioral:")
    if ";" in body:
        pick_text, switch_text = body.split(";", 1)
        pick = _parse_rational_list(pick_text, 3, "pick distribution")
        switch = _parse_rational_list(switch_text, 6, "switch probabilities")
        try:
            return BehavioralConie(pick, switch)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    try:
        return BehavioralConie.from_pure(body.strip())
    except ValueError as exc:
        raise click.UsageError(f"bad contestant spec {spec!r}: {exc}") from exc


def _render_trace(trace: ReductionTrace) -> str:
    lines = ["initial matrix:", trace.initial.to_table(), ""]
    for idx, step in enumerate(trace.steps, start=1):
        if step.kind == "dominated-row":
            lines.append(
                f"step {idx}: drop row {step.removed} (weakly dominated by {step.justified_by})"
            )
        else:
            lines.append(
                f"step {idx}: drop column {step.removed} (duplicate of {step.justified_by})"
            )
    lines += ["", "reduced matrix:", trace.terminal.to_table()]
    return "\n".join(lines)


@click.group()
@click.version_option(package_name="montyhall")
def main() -> None:
    """Exact workbench for the three-door hide / offer / switch game."""


@main.command("matrix")
@click.option("--reduce", "do_reduce", is_flag=True, help="Run dominance elimination.")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
def cmd_matrix(do_reduce: bool, fmt_name: str) -> None:
    """Print the 12x6 payoff matrix, optionally reduced to the 3x3 core."""
    if do_reduce:
        trace = eliminate_dominated()
        if fmt_name == "structured":
            click.echo(json.dumps(trace.to_dict(), indent=2))
        else:
            click.echo(_render_trace(trace))
        return
    matrix = build_payoff_matrix()
    if fmt_name == "structured":
        click.echo(json.dumps(matrix.to_dict(), indent=2))
    else:
        click.echo(matrix.to_table())


@main.command("dominance")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
@click.pass_context
def cmd_dominance(ctx: click.Context, fmt_name: str) -> None:
    """Alias for ``matrix --reduce``."""
    ctx.invoke(cmd_matrix, do_reduce=True, fmt_name=fmt_name)


@main.group("solve")
def cmd_solve() -> None:
    """Exact solvers: zero-sum minimax, Bayesian response, Nash equilibria."""


@cmd_solve.command("zerosum")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
def cmd_zerosum(fmt_name: str) -> None:
    """Value and minimax strategies of the antagonistic game."""
    result = solve_zero_sum()
    if fmt_name == "structured":
        click.echo(json.dumps(result.to_dict(), indent=2))
        return
    matrix = build_payoff_matrix()
    lines = [f"value = {fmt(result.value)}"]
    lines.append("contestant minimax (pick uniformly at random, always switch):")
    for label, weight in zip(matrix.row_labels, result.conie_minimax.weights):
        if weight:
            lines.append(f"  {label.code} = {format_rational(weight)}")
    lines.append("host minimax (hide uniformly at random):")
    for label, weight in zip(matrix.col_labels, result.monte_minimax.weights):
        if weight:
            lines.append(f"  {label.code} = {format_rational(weight)}")
    certificate = " ".join(
        f"{label.code}={format_rational(v)}"
        for label, v in zip(matrix.col_labels, result.conie_certificate)
    )
    lines.append(f"equalizing certificate vs host pures: {certificate}")
    click.echo("\n".join(lines))


@cmd_solve.command("bayes")
@click.option("--pi", "pi_text", required=True, help="Prize priors, e.g. 1/3,1/3,1/3")
@click.option("--lambda", "lam_text", required=True, help="Match biases, e.g. 1,1,1")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
def cmd_bayes(pi_text: str, lam_text: str, fmt_name: str) -> None:
    """Best responses against a known behavioral host."""
    pi = _parse_rational_list(pi_text, 3, "priors")
    lam = _parse_rational_list(lam_text, 3, "biases")
    try:
        host = BehavioralHost(pi, lam)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    q = host_to_mixed(host)
    result = bayes_best_response(q)
    best = sorted(result.pure_best_responses, key=conie_index)
    least = min(pi)
    picks = [str(door) for door in (1, 2, 3) if pi[door - 1] == least]
    if fmt_name == "structured":
        click.echo(
            json.dumps(
                {
                    "host": host.to_dict(),
                    "value": format_rational(result.value),
                    "valueDecimal": float(result.value),
                    "pureBestResponses": [s.code for s in best],
                    "bestPicks": [int(p) for p in picks],
                },
                indent=2,
            )
        )
        return
    lines = [
        f"priors pi = {', '.join(format_rational(x) for x in pi)}",
        f"biases lambda = {', '.join(format_rational(x) for x in lam)}",
        f"bayes value = {fmt(result.value)}",
        f"pure best responses: {' '.join(s.code for s in best)}",
        f"least likely doors (optimal picks): {' '.join(picks)}",
    ]
    click.echo("\n".join(lines))


def _load_host_matrix(path: Path) -> HostPayoffMatrix:
    try:
        text = path.read_text()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return HostPayoffMatrix.from_json_text(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(
            f"parse error in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    except ValueError as exc:
        raise click.UsageError(f"invalid host matrix in {path}: {exc}") from exc


def _render_profile(profile) -> str:
    matrix = build_payoff_matrix()
    p_part = " ".join(
        f"{label.code}={format_rational(w)}"
        for label, w in zip(matrix.row_labels, profile.p.weights)
        if w
    )
    q_part = " ".join(
        f"{label.code}={format_rational(w)}"
        for label, w in zip(matrix.col_labels, profile.q.weights)
        if w
    )
    return (
        f"p: {p_part} | q: {q_part} | contestant {format_rational(profile.conie_payoff)},"
        f" host {format_rational(profile.monte_payoff)}"
    )


@cmd_solve.command("nash")
@click.option(
    "--h-file",
    "h_file",
    required=True,
    type=click.Path(path_type=Path),
    help="JSON file with 12x6 rational host payoffs in canonical order.",
)
@click.option("--fully-supported-only", is_flag=True, help="Only report fully supported families.")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
def cmd_nash(h_file: Path, fully_supported_only: bool, fmt_name: str) -> None:
    """Nash equilibria for an arbitrary host payoff matrix."""
    h = _load_host_matrix(h_file)
    families = fully_supported_equilibria(h)
    profiles = None if fully_supported_only else enumerate_nash_supports(h)
    if fmt_name == "structured":
        doc = {"fullySupportedFamilies": [f.to_dict() for f in families]}
        if profiles is not None:
            doc["profiles"] = [p.to_dict() for p in profiles]
        click.echo(json.dumps(doc, indent=2))
        return
    lines = [f"fully supported families: {len(families)}"]
    for family in families:
        doors = ",".join(str(d) for d in family.least_likely)
        vertices = "; ".join(
            "(" + ", ".join(format_rational(w) for w in vertex) + ")"
            for vertex in family.weight_vertices
        )
        lines.append(f"  case {family.case}: least likely doors {{{doors}}}; weight vertices {vertices}")
        lines.append(f"    representative {_render_profile(family.representative)}")
    if profiles is not None:
        lines.append(f"support enumeration: {len(profiles)} equilibria")
        for profile in profiles:
            lines.append(f"  {_render_profile(profile)}")
    click.echo("\n".join(lines))


@main.command("simulate")
@click.option("--host", "host_spec", required=True, help="Host spec: pi;lambda or a pure code like 12.")
@click.option("--conie", "conie_spec", required=True, help="Contestant spec: picks;switches or a code like 1ss.")
@click.option("--rounds", type=int, required=True)
@click.option("--seed", type=int, default=None, help=f"Defaults to ${SEED_ENV_VAR} or 0.")
@click.option(
    "--format",
    "fmt_name",
    type=click.Choice(["table", "structured"]),
    default="table",
    show_default=True,
)
def cmd_simulate(host_spec: str, conie_spec: str, rounds: int, seed: int | None, fmt_name: str) -> None:
    """Seeded Monte-Carlo rounds with the exact payoff alongside."""
    if rounds < 1:
        raise click.UsageError("--rounds must be at least 1")
    host = parse_host_spec(host_spec)
    conie = parse_conie_spec(conie_spec)
    if seed is None:
        seed = _default_seed()
    stats = simulate(host, conie, rounds, seed)
    exact = expected_payoff(behavioral_to_mixed_conie(conie), behavioral_to_mixed_monte(host))
    if fmt_name == "structured":
        doc = stats.to_dict()
        doc["exactPayoff"] = format_rational(exact)
        click.echo(json.dumps(doc, indent=2))
        return
    lines = [
        f"host: pi = {', '.join(format_rational(x) for x in host.pi)};"
        f" lambda = {', '.join(format_rational(x) for x in host.lam)}",
        f"contestant: pick = {', '.join(format_rational(x) for x in conie.pick_dist)};"
        f" switch = {', '.join(format_rational(x) for x in conie.switch_prob)}",
        f"rounds = {stats.rounds}, seed = {stats.seed}",
        f"wins = {stats.wins}",
        f"empirical win rate = {stats.win_rate:.5f}",
        f"exact expected payoff = {fmt(exact)}",
        "per info set:",
    ]
    for info, tally in stats.per_info_set:
        lines.append(
            f"  {info.label} visits={tally.visits}"
            f" switch-wins={tally.switch_wins} hold-wins={tally.hold_wins}"
        )
    click.echo("\n".join(lines))


@main.command("report")
@click.option(
    "--out-dir",
    type=click.Path(path_type=Path),
    default=Path("reports"),
    show_default=True,
)
@click.option("--host", "host_spec", default="1/3,1/3,1/3;1/2,1/2,1/2", show_default=True)
@click.option("--conie", "conie_spec", default="behavioral:1/3,1/3,1/3;1,1,1,1,1,1", show_default=True)
@click.option("--rounds", type=int, default=20_000, show_default=True)
@click.option("--seed", type=int, default=None, help=f"Defaults to ${SEED_ENV_VAR} or 0.")
def cmd_report(out_dir: Path, host_spec: str, conie_spec: str, rounds: int, seed: int | None) -> None:
    """Render figures (PNG) and delimited data (CSV) into a directory."""
    from .report import generate_reports

    if rounds < 1:
        raise click.UsageError("--rounds must be at least 1")
    host = parse_host_spec(host_spec)
    conie = parse_conie_spec(conie_spec)
    if seed is None:
        seed = _default_seed()
    paths = generate_reports(out_dir, host, conie, rounds, seed)
    for path in paths:
        click.echo(str(path))


@main.command("serve")
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", "bind_host", default="127.0.0.1", show_default=True)
@click.option(
    "--static-dir",
    type=click.Path(path_type=Path),
    default=None,
    help="Directory with the web playground build to serve at /.",
)
@click.option("--seed", type=int, default=None, help="Default seed for new sessions.")
def cmd_serve(port: int, bind_host: str, static_dir: Path | None, seed: int | None) -> None:
    """Run the live-play HTTP service."""
    import uvicorn

    from .service import create_app

    if port < 1 or port > 65535:
        raise click.UsageError(f"--port must be in 1..65535, got {port}")
    if static_dir is not None and not static_dir.is_dir():
        raise click.UsageError(f"--static-dir {static_dir} is not a directory")
    app = create_app(static_dir=static_dir, default_seed=seed)
    uvicorn.run(app, host=bind_host, port=port, log_level="info")


if __name__ == "__main__":
    main()
