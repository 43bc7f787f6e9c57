"""Report rendering: delimited data files plus matplotlib figures.

Each ``write_*`` helper emits one CSV and, where it makes sense, one PNG
next to it.  :func:`generate_reports` runs the full set into a directory.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .matrix import build_payoff_matrix, eliminate_dominated, expected_payoff, format_rational
from .simulate import (
    BehavioralConie,
    _RoundSampler,
    behavioral_to_mixed_conie,
    behavioral_to_mixed_monte,
    spawn_stream,
)
from .simulate import CHUNK_ROUNDS
from .solvers import BehavioralHost, bayes_value_formula, posterior_switch_win, solve_zero_sum


def write_matrix_report(out_dir: Path) -> list[Path]:
    matrix = build_payoff_matrix()
    csv_path = out_dir / "payoff_matrix.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + [c.code for c in matrix.col_labels])
        for label, row in zip(matrix.row_labels, matrix.entries):
            writer.writerow([label.code] + list(row))

    fig, ax = plt.subplots(figsize=(5, 7))
    ax.imshow(matrix.entries, cmap="Greens", vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(6), [c.code for c in matrix.col_labels])
    ax.set_yticks(range(12), [r.code for r in matrix.row_labels])
    for i, row in enumerate(matrix.entries):
        for j, value in enumerate(row):
            ax.text(j, i, str(value), ha="center", va="center", fontsize=9)
    ax.set_xlabel("host strategy (prize door, matched offer)")
    ax.set_ylabel("contestant strategy")
    ax.set_title("Contestant payoff matrix")
    fig.tight_layout()
    png_path = out_dir / "payoff_matrix.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def write_reduction_report(out_dir: Path) -> list[Path]:
    trace = eliminate_dominated()
    csv_path = out_dir / "reduction_trace.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["step", "kind", "removed", "justified_by"])
        for idx, step in enumerate(trace.steps, start=1):
            writer.writerow([idx, step.kind, step.removed, step.justified_by])
    reduced_path = out_dir / "reduced_matrix.csv"
    with reduced_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + [c.code for c in trace.terminal.col_labels])
        for label, row in zip(trace.terminal.row_labels, trace.terminal.entries):
            writer.writerow([label.code] + list(row))
    return [csv_path, reduced_path]


def write_zero_sum_report(out_dir: Path) -> list[Path]:
    result = solve_zero_sum()
    csv_path = out_dir / "zero_sum_solution.csv"
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["quantity", "strategy", "value"])
        writer.writerow(["value", "", format_rational(result.value)])
        for label, weight in zip(
            [s.code for s in build_payoff_matrix().row_labels], result.conie_minimax.weights
        ):
            if weight:
                writer.writerow(["conie_weight", label, format_rational(weight)])
        for label, weight in zip(
            [s.code for s in build_payoff_matrix().col_labels], result.monte_minimax.weights
        ):
            if weight:
                writer.writerow(["monte_weight", label, format_rational(weight)])
    return [csv_path]


def _running_win_rates(
    host: BehavioralHost, conie: BehavioralConie, rounds: int, seed: int
) -> list[tuple[int, int]]:
    """(round, cumulative wins) pairs using the simulate() stream layout."""
    sampler = _RoundSampler(host, conie)
    points = []
    wins = 0
    played = 0
    n_chunks = (rounds + CHUNK_ROUNDS - 1) // CHUNK_ROUNDS
    for chunk in range(n_chunks):
        rng = spawn_stream(seed, chunk)
        chunk_rounds = min(CHUNK_ROUNDS, rounds - chunk * CHUNK_ROUNDS)
        for _ in range(chunk_rounds):
            record = sampler.draw(rng)
            wins += record.win
            played += 1
            points.append((played, wins))
    return points


def write_convergence_report(
    out_dir: Path,
    host: BehavioralHost,
    conie: BehavioralConie,
    rounds: int,
    seed: int,
) -> list[Path]:
    exact = expected_payoff(
        behavioral_to_mixed_conie(conie), behavioral_to_mixed_monte(host)
    )
    points = _running_win_rates(host, conie, rounds, seed)
    csv_path = out_dir / "win_rate_trace.csv"
    step = max(1, rounds // 1000)
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["round", "wins", "win_rate", "exact"])
        for played, wins in points[:: step]:
            writer.writerow([played, wins, wins / played, float(exact)])

    fig, ax = plt.subplots(figsize=(7, 4))
    xs = [played for played, _ in points[::step]]
    ys = [wins / played for played, wins in points[::step]]
    ax.plot(xs, ys, lw=1.2, label="empirical win rate")
    ax.axhline(float(exact), color="crimson", ls="--", lw=1,
               label=f"exact payoff {format_rational(exact)}")
    safety = Fraction(2, 3)
    if exact != safety:
        ax.axhline(float(safety), color="gray", ls=":", lw=1, label="safety level 2/3")
    ax.set_xlabel("rounds")
    ax.set_ylabel("win rate")
    ax.set_title(f"Win-rate convergence (seed {seed})")
    ax.legend()
    fig.tight_layout()
    png_path = out_dir / "win_rate_trace.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def write_posterior_report(out_dir: Path, host: BehavioralHost) -> list[Path]:
    csv_path = out_dir / "switch_posteriors.csv"
    labels = []
    values = []
    with csv_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["info_set", "posterior_switch_win", "decimal"])
        for pick in (1, 2, 3):
            for offer in (1, 2, 3):
                if pick == offer:
                    continue
                try:
                    value = posterior_switch_win(host, pick, offer)
                except ValueError:
                    continue
                label = f"*{pick}{offer}"
                labels.append(label)
                values.append(float(value))
                writer.writerow([label, format_rational(value), float(value)])

    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(labels, values, color="steelblue")
    ax.axhline(0.5, color="gray", ls=":", lw=1)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("P(switch wins)")
    ax.set_title(
        "Switch posteriors per information set "
        f"(Bayes value {format_rational(bayes_value_formula(host.pi))})"
    )
    fig.tight_layout()
    png_path = out_dir / "switch_posteriors.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def generate_reports(
    out_dir: Path,
    host: BehavioralHost | None = None,
    conie: BehavioralConie | None = None,
    rounds: int = 20_000,
    seed: int = 0,
) -> list[Path]:
    """Write the full report set and return the created paths."""
    host = host or BehavioralHost.uniform()
    conie = conie or BehavioralConie.always_switch()
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    paths += write_matrix_report(out_dir)
    paths += write_reduction_report(out_dir)
    paths += write_zero_sum_report(out_dir)
    paths += write_convergence_report(out_dir, host, conie, rounds, seed)
    paths += write_posterior_report(out_dir, host)
    return paths
