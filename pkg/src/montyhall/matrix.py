"""Normal-form payoff matrix: derivation, mixed strategies, weak dominance,
unlucky doors, and iterated elimination down to the 3x3 mismatch game.

All probabilities and values are exact ``fractions.Fraction``; floats only
ever appear in rendering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .game import ConiePureStrategy, Door, MontePureStrategy, payoff

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or a terminating decimal into an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    return str(value)


def _check_distribution(weights: Sequence[Fraction], size: int, what: str) -> tuple[Fraction, ...]:
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != size:
        raise ValueError(f"{what} needs {size} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError(f"{what} weights must be nonnegative")
    if sum(weights) != 1:
        raise ValueError(f"{what} weights must sum to 1, got {sum(weights)}")
    return weights


@dataclass(frozen=True)
class MixedConie:
    """Distribution over the 12 contestant strategies, canonical row order."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", _check_distribution(self.weights, 12, "contestant mix"))

    @classmethod
    def point_mass(cls, strategy: ConiePureStrategy | str) -> "MixedConie":
        if isinstance(strategy, str):
            strategy = ConiePureStrategy.from_code(strategy)
        index = conie_index(strategy)
        return cls(tuple(Fraction(int(i == index)) for i in range(12)))

    @classmethod
    def uniform(cls) -> "MixedConie":
        return cls((Fraction(1, 12),) * 12)

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "MixedConie":
        return cls(tuple(parse_rational(t) for t in texts))

    def to_strings(self) -> list[str]:
        return [format_rational(w) for w in self.weights]

    def support(self) -> list[ConiePureStrategy]:
        return [s for s, w in zip(CONIE_ORDER, self.weights) if w > 0]

    def weight_of(self, strategy: ConiePureStrategy) -> Fraction:
        return self.weights[conie_index(strategy)]


@dataclass(frozen=True)
class MixedMonte:
    """Distribution over the 6 host strategies, canonical column order."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", _check_distribution(self.weights, 6, "host mix"))

    @classmethod
    def point_mass(cls, strategy: MontePureStrategy | str) -> "MixedMonte":
        if isinstance(strategy, str):
            strategy = MontePureStrategy.from_code(strategy)
        index = monte_index(strategy)
        return cls(tuple(Fraction(int(i == index)) for i in range(6)))

    @classmethod
    def uniform(cls) -> "MixedMonte":
        return cls((Fraction(1, 6),) * 6)

    @classmethod
    def from_strings(cls, texts: Iterable[str]) -> "MixedMonte":
        return cls(tuple(parse_rational(t) for t in texts))

    def to_strings(self) -> list[str]:
        return [format_rational(w) for w in self.weights]

    def support(self) -> list[MontePureStrategy]:
        return [s for s, w in zip(MONTE_ORDER, self.weights) if w > 0]

    def theta_marginal(self) -> tuple[Fraction, Fraction, Fraction]:
        """Probability that each door hides the prize."""
        w = self.weights
        return (w[0] + w[1], w[2] + w[3], w[4] + w[5])

    def weight_of(self, strategy: MontePureStrategy) -> Fraction:
        return self.weights[monte_index(strategy)]


@dataclass(frozen=True)
class PayoffMatrix:
    """Labeled zero/one payoff table, contestant rows x host columns."""

    row_labels: tuple[ConiePureStrategy, ...]
    col_labels: tuple[MontePureStrategy, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.row_labels):
            raise ValueError("entry rows must match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise ValueError("entry columns must match column labels")

    def row(self, label: ConiePureStrategy | str) -> tuple[int, ...]:
        if isinstance(label, str):
            label = ConiePureStrategy.from_code(label)
        return self.entries[self.row_labels.index(label)]

    def column(self, label: MontePureStrategy | str) -> tuple[int, ...]:
        if isinstance(label, str):
            label = MontePureStrategy.from_code(label)
        j = self.col_labels.index(label)
        return tuple(row[j] for row in self.entries)

    def entry(self, conie: ConiePureStrategy | str, monte: MontePureStrategy | str) -> int:
        if isinstance(monte, str):
            monte = MontePureStrategy.from_code(monte)
        return self.row(conie)[self.col_labels.index(monte)]

    def to_dict(self) -> dict:
        return {
            "rows": [s.code for s in self.row_labels],
            "cols": [s.code for s in self.col_labels],
            "entries": [list(row) for row in self.entries],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PayoffMatrix":
        return cls(
            row_labels=tuple(ConiePureStrategy.from_code(c) for c in doc["rows"]),
            col_labels=tuple(MontePureStrategy.from_code(c) for c in doc["cols"]),
            entries=tuple(tuple(int(v) for v in row) for row in doc["entries"]),
        )

    def to_table(self) -> str:
        """Fixed-width text table; parse back with :meth:`from_table`."""
        label_width = max(len(s.code) for s in self.row_labels)
        header = " " * label_width + "".join(f"  {c.code:>2}" for c in self.col_labels)
        lines = [header]
        for label, row in zip(self.row_labels, self.entries):
            lines.append(f"{label.code:<{label_width}}" + "".join(f"  {v:>2}" for v in row))
        return "\n".join(lines)

    @classmethod
    def from_table(cls, text: str) -> "PayoffMatrix":
        lines = [line for line in text.splitlines() if line.strip()]
        cols = tuple(MontePureStrategy.from_code(tok) for tok in lines[0].split())
        rows = []
        entries = []
        for line in lines[1:]:
            tokens = line.split()
            rows.append(ConiePureStrategy.from_code(tokens[0]))
            entries.append(tuple(int(tok) for tok in tokens[1:]))
        return cls(row_labels=tuple(rows), col_labels=cols, entries=tuple(entries))


MONTE_ORDER: tuple[MontePureStrategy, ...] = tuple(
    MontePureStrategy.from_code(c) for c in ("12", "13", "21", "23", "31", "32")
)
CONIE_ORDER: tuple[ConiePureStrategy, ...] = tuple(
    ConiePureStrategy.from_code(f"{pick}{pair}")
    for pick in (1, 2, 3)
    for pair in ("ss", "ms", "sm", "mm")
)

_MONTE_INDEX = {s: i for i, s in enumerate(MONTE_ORDER)}
_CONIE_INDEX = {s: i for i, s in enumerate(CONIE_ORDER)}


def monte_index(strategy: MontePureStrategy) -> int:
    return _MONTE_INDEX[strategy]


def conie_index(strategy: ConiePureStrategy) -> int:
    return _CONIE_INDEX[strategy]


def build_payoff_matrix() -> PayoffMatrix:
    """Derive the 12x6 matrix from pure-profile play."""
    entries = tuple(
        tuple(payoff(m, c) for m in MONTE_ORDER) for c in CONIE_ORDER
    )
    return PayoffMatrix(row_labels=CONIE_ORDER, col_labels=MONTE_ORDER, entries=entries)


@lru_cache(maxsize=1)
def canonical_matrix() -> PayoffMatrix:
    """Cached canonical payoff matrix for internal hot paths."""
    return build_payoff_matrix()


def expected_payoff(p: MixedConie, q: MixedMonte, matrix: PayoffMatrix | None = None) -> Fraction:
    """Exact contestant win probability P . C . Q^T under independent mixing."""
    m = matrix or canonical_matrix()
    total = Fraction(0)
    for wp, row in zip(p.weights, m.entries):
        if wp == 0:
            continue
        total += wp * sum(wq * v for wq, v in zip(q.weights, row))
    return total


def weakly_dominates(
    b: ConiePureStrategy | str,
    a: ConiePureStrategy | str,
    matrix: PayoffMatrix | None = None,
) -> bool:
    """True when row ``b`` is everywhere >= row ``a`` and differs somewhere."""
    m = matrix or canonical_matrix()
    row_b, row_a = m.row(b), m.row(a)
    return row_b != row_a and all(x >= y for x, y in zip(row_b, row_a))


def unlucky_doors(a: ConiePureStrategy | str, matrix: PayoffMatrix | None = None) -> set[Door]:
    """Doors that never end up as the final choice of ``a`` when they hide the
    prize: both columns hiding behind the door carry 0 in the row."""
    m = matrix or canonical_matrix()
    row = m.row(a)
    doors: set[Door] = set()
    for door in (1, 2, 3):
        hits = [row[j] for j, col in enumerate(m.col_labels) if col.theta == door]
        if hits and all(v == 0 for v in hits):
            doors.add(door)
    return doors


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "dominated-row" | "duplicate-column"
    removed: str
    justified_by: str


@dataclass(frozen=True)
class ReductionTrace:
    initial: PayoffMatrix
    steps: tuple[ReductionStep, ...]
    terminal: PayoffMatrix

    def to_dict(self) -> dict:
        return {
            "steps": [
                {"kind": s.kind, "removed": s.removed, "justifiedBy": s.justified_by}
                for s in self.steps
            ],
            "terminal": self.terminal.to_dict(),
        }


def _submatrix(
    matrix: PayoffMatrix,
    rows: Sequence[ConiePureStrategy],
    cols: Sequence[MontePureStrategy],
) -> PayoffMatrix:
    return PayoffMatrix(
        row_labels=tuple(rows),
        col_labels=tuple(cols),
        entries=tuple(
            tuple(matrix.entry(r, c) for c in cols) for r in rows
        ),
    )


def _column_keep_key(label: MontePureStrategy) -> tuple[bool, str]:
    # Survivor preference among duplicate columns, pinned so the reduced
    # game prints with the conventional header 12, 21, 32.
    return (label.offer_on_match != 2, label.code)


def eliminate_dominated(matrix: PayoffMatrix | None = None) -> ReductionTrace:
    """Iterated elimination: weakly dominated rows first (always-switching
    justifiers preferred), then duplicate columns.  Deterministic: rows are
    scanned in canonical order and the first dominated one is removed."""
    m = matrix or canonical_matrix()
    rows = list(m.row_labels)
    cols = list(m.col_labels)
    steps: list[ReductionStep] = []

    def row_values(label: ConiePureStrategy) -> tuple[int, ...]:
        return tuple(m.entry(label, c) for c in cols)

    while True:
        removed = False
        for candidate in rows:
            dominators = [
                other
                for other in rows
                if other != candidate
                and (lambda rb, ra: rb != ra and all(x >= y for x, y in zip(rb, ra)))(
                    row_values(other), row_values(candidate)
                )
            ]
            if dominators:
                dominators.sort(key=lambda s: (not s.always_switching, conie_index(s)))
                justifier = dominators[0]
                rows.remove(candidate)
                steps.append(ReductionStep("dominated-row", candidate.code, justifier.code))
                removed = True
                break
        if not removed:
            break

    # Duplicate columns: group by identical restricted entries, keep one
    # survivor per group.
    def col_values(label: MontePureStrategy) -> tuple[int, ...]:
        return tuple(m.entry(r, label) for r in rows)

    groups: dict[tuple[int, ...], list[MontePureStrategy]] = {}
    for col in cols:
        groups.setdefault(col_values(col), []).append(col)
    surviving_cols = []
    for col in cols:
        group = groups[col_values(col)]
        keeper = min(group, key=_column_keep_key)
        if col is keeper:
            surviving_cols.append(col)
        else:
            steps.append(ReductionStep("duplicate-column", col.code, keeper.code))
    terminal = _submatrix(m, rows, surviving_cols)
    return ReductionTrace(initial=m, steps=tuple(steps), terminal=terminal)


Entries = Sequence[Sequence[int | Fraction]]


def subtract_constant(entries: Entries, k: int | Fraction) -> tuple[tuple[Fraction, ...], ...]:
    """Entrywise ``entries - k``; shifting a game matrix by a constant leaves
    optimal strategies unchanged."""
    k = Fraction(k)
    return tuple(tuple(Fraction(v) - k for v in row) for row in entries)
