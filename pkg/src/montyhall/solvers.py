"""Exact decision analysis: Bayesian best responses, zero-sum minimax, and
general-sum Nash equilibria.

Everything runs in exact rational arithmetic.  The zero-sum solver follows
the classic route for this game: eliminate dominated rows and duplicate
columns, equalize on the reduced 3x3 mismatch game, and lift back.  Nash
equilibria for an arbitrary host payoff matrix come from exhaustive support
enumeration, which is cheap at 12x6.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .game import Action, ConiePureStrategy, Door, MontePureStrategy, other_doors
from .matrix import (
    MONTE_ORDER,
    MixedConie,
    MixedMonte,
    PayoffMatrix,
    canonical_matrix,
    conie_index,
    eliminate_dominated,
    expected_payoff,
    format_rational,
    monte_index,
    parse_rational,
)

GAME_VALUE = Fraction(2, 3)


class UnreachableInfoSet(ValueError):
    """Raised when a conditional probability is requested at an information
    set the host model never reaches."""


# ---------------------------------------------------------------------------
# Behavioral host model


@dataclass(frozen=True)
class BehavioralHost:
    """Host described by priors over the prize door and per-door biases.

    ``pi[t-1]`` is the probability the prize sits behind door ``t``;
    ``lam[t-1]`` is the conditional probability of offering the
    smaller-numbered door when the contestant's pick matches door ``t``.
    """

    pi: tuple[Fraction, Fraction, Fraction]
    lam: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        pi = tuple(Fraction(x) for x in self.pi)
        lam = tuple(Fraction(x) for x in self.lam)
        if len(pi) != 3 or len(lam) != 3:
            raise ValueError("host model needs 3 priors and 3 biases")
        if any(x < 0 for x in pi) or sum(pi) != 1:
            raise ValueError(f"priors must be a distribution, got {pi}")
        if any(not 0 <= x <= 1 for x in lam):
            raise ValueError(f"biases must lie in [0, 1], got {lam}")
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "lam", lam)

    @classmethod
    def uniform(cls, lam: Fraction | tuple = Fraction(1, 2)) -> "BehavioralHost":
        if not isinstance(lam, tuple):
            lam = (Fraction(lam),) * 3
        return cls((Fraction(1, 3),) * 3, lam)

    @classmethod
    def crawl(cls) -> "BehavioralHost":
        """Uniform hiding; on a match always reveal the higher-numbered door,
        i.e. always offer the smaller one."""
        return cls.uniform(Fraction(1))

    def to_dict(self) -> dict:
        return {
            "pi": [format_rational(x) for x in self.pi],
            "lambda": [format_rational(x) for x in self.lam],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BehavioralHost":
        return cls(
            tuple(parse_rational(str(x)) for x in doc["pi"]),
            tuple(parse_rational(str(x)) for x in doc["lambda"]),
        )


def host_to_mixed(h: BehavioralHost) -> MixedMonte:
    """Expand (pi, lam) to the full 6-strategy mix: on each door the smaller
    offer carries pi*lam, the larger pi*(1-lam)."""
    weights = []
    for theta in (1, 2, 3):
        p, l = h.pi[theta - 1], h.lam[theta - 1]
        weights.extend((p * l, p * (1 - l)))
    return MixedMonte(tuple(weights))


def mixed_to_host(q: MixedMonte) -> BehavioralHost:
    """Recover (pi, lam) from a host mix; biases at unhidden doors default
    to 1/2 since no play ever depends on them."""
    pi = q.theta_marginal()
    lam = []
    for theta in (1, 2, 3):
        total = pi[theta - 1]
        smaller_weight = q.weights[2 * (theta - 1)]
        lam.append(smaller_weight / total if total > 0 else Fraction(1, 2))
    return BehavioralHost(pi, tuple(lam))


# ---------------------------------------------------------------------------
# Bayesian analysis


@dataclass(frozen=True)
class BayesResult:
    """Best attainable win probability against a known host mix, with the
    full set of pure strategies attaining it."""

    value: Fraction
    pure_best_responses: frozenset[ConiePureStrategy]


def bayes_best_response(q: MixedMonte, matrix: PayoffMatrix | None = None) -> BayesResult:
    """Maximize the win probability over all 12 pure rows (mixtures cannot
    beat the best pure row by linearity)."""
    m = matrix or canonical_matrix()
    scores = {
        row: sum(w * v for w, v in zip(q.weights, m.row(row)))
        for row in m.row_labels
    }
    value = max(scores.values())
    best = frozenset(row for row, s in scores.items() if s == value)
    return BayesResult(value=value, pure_best_responses=best)


def bayes_value_formula(pi: tuple[Fraction, Fraction, Fraction]) -> Fraction:
    """Closed form for the Bayesian value: point at the least likely door and
    always switch, winning the complementary probability."""
    pi = tuple(Fraction(x) for x in pi)
    if len(pi) != 3 or any(x < 0 for x in pi) or sum(pi) != 1:
        raise ValueError(f"priors must be a distribution, got {pi}")
    return 1 - min(pi)


def exclusion_rules(q: MixedMonte) -> frozenset[ConiePureStrategy]:
    """Context-dependent strategies that cannot be best responses to ``q``.

    If the host sometimes offers the smaller door on a match at ``t``, the
    plan ``t`` + switch-on-smaller/hold-on-larger is strictly beaten; the
    mirrored rule applies to the larger offer.
    """
    excluded = set()
    for strategy, weight in zip(MONTE_ORDER, q.weights):
        if weight <= 0:
            continue
        smaller, _ = other_doors(strategy.theta)
        if strategy.offer_on_match == smaller:
            excluded.add(ConiePureStrategy(strategy.theta, Action.SWITCH, Action.HOLD))
        else:
            excluded.add(ConiePureStrategy(strategy.theta, Action.HOLD, Action.SWITCH))
    return frozenset(excluded)


def posterior_switch_win(h: BehavioralHost, x: Door, y: Door) -> Fraction:
    """Conditional probability that switching wins at information set (x, y).

    The offer lands on ``y`` either because the prize is there (mismatch,
    forced) or because the pick matched and the host chose ``y``.
    """
    if x == y:
        raise ValueError("offer always differs from the pick")
    smaller, _ = other_doors(x)
    beta = h.lam[x - 1] if y == smaller else 1 - h.lam[x - 1]
    reach = h.pi[y - 1] + h.pi[x - 1] * beta
    if reach == 0:
        raise UnreachableInfoSet(
            f"information set (pick={x}, offer={y}) is never reached by this host"
        )
    return h.pi[y - 1] / reach


# ---------------------------------------------------------------------------
# Exact linear algebra helpers


def solve_unique(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Solve A x = b exactly; return None unless exactly one solution exists
    (inconsistent or underdetermined systems both yield None)."""
    n_unknowns = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n_unknowns):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        scale = aug[r][col]
        aug[r] = [v / scale for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None  # inconsistent
    if len(pivot_cols) < n_unknowns:
        return None  # underdetermined
    solution = [Fraction(0)] * n_unknowns
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = aug[row_idx][-1]
    return solution


def solve_affine(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Full solution set of A x = b: a particular solution plus a nullspace
    basis, or None when inconsistent."""
    n_unknowns = len(rows[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n_unknowns):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        scale = aug[r][col]
        aug[r] = [v / scale for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None
    particular = [Fraction(0)] * n_unknowns
    for row_idx, col in enumerate(pivot_cols):
        particular[col] = aug[row_idx][-1]
    free_cols = [c for c in range(n_unknowns) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * n_unknowns
        vec[free] = Fraction(1)
        for row_idx, col in enumerate(pivot_cols):
            vec[col] = -aug[row_idx][free]
        basis.append(vec)
    return particular, basis


# ---------------------------------------------------------------------------
# Zero-sum solution


@dataclass(frozen=True)
class SolveResult:
    """Value and minimax strategies with equalizing evidence.

    ``conie_certificate`` lists the guaranteed payoff of the contestant mix
    against each host pure strategy (all equal to the value);
    ``monte_certificate`` lists what each contestant pure strategy extracts
    against the host mix (all at most the value).
    """

    value: Fraction
    conie_minimax: MixedConie
    monte_minimax: MixedMonte
    conie_certificate: tuple[Fraction, ...]
    monte_certificate: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "value": format_rational(self.value),
            "valueDecimal": float(self.value),
            "conieMinimax": self.conie_minimax.to_strings(),
            "monteMinimax": self.monte_minimax.to_strings(),
            "conieCertificate": [format_rational(v) for v in self.conie_certificate],
            "monteCertificate": [format_rational(v) for v in self.monte_certificate],
        }


def _lift_conie(weights_by_label: dict[ConiePureStrategy, Fraction]) -> MixedConie:
    full = [Fraction(0)] * 12
    for label, w in weights_by_label.items():
        full[conie_index(label)] = w
    return MixedConie(tuple(full))


def _lift_monte(weights_by_label: dict[MontePureStrategy, Fraction]) -> MixedMonte:
    full = [Fraction(0)] * 6
    for label, w in weights_by_label.items():
        full[monte_index(label)] = w
    return MixedMonte(tuple(full))


def solve_zero_sum(matrix: PayoffMatrix | None = None) -> SolveResult:
    """Solve the zero-sum game by elimination plus equalization.

    Dominance elimination reduces the game to a square matrix on which an
    equalizing mix exists for both sides; the equalizers are lifted back to
    the full strategy spaces and certified against every pure opponent.
    """
    m = matrix or canonical_matrix()
    trace = eliminate_dominated(m)
    reduced = trace.terminal
    n_rows = len(reduced.row_labels)
    n_cols = len(reduced.col_labels)

    # Contestant equalizer: p . col_j identical for all j, sum(p) = 1.
    rows = []
    rhs = []
    first_col = [Fraction(reduced.entries[i][0]) for i in range(n_rows)]
    for j in range(1, n_cols):
        col = [Fraction(reduced.entries[i][j]) for i in range(n_rows)]
        rows.append([col[i] - first_col[i] for i in range(n_rows)])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * n_rows)
    rhs.append(Fraction(1))
    p_reduced = solve_unique(rows, rhs)
    if p_reduced is None or any(w < 0 for w in p_reduced):
        raise ValueError("reduced game admits no contestant equalizer")

    # Host equalizer: row_i . q identical for all i, sum(q) = 1.
    rows = []
    rhs = []
    first_row = [Fraction(v) for v in reduced.entries[0]]
    for i in range(1, n_rows):
        row = [Fraction(v) for v in reduced.entries[i]]
        rows.append([row[j] - first_row[j] for j in range(n_cols)])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * n_cols)
    rhs.append(Fraction(1))
    q_reduced = solve_unique(rows, rhs)
    if q_reduced is None or any(w < 0 for w in q_reduced):
        raise ValueError("reduced game admits no host equalizer")

    conie = _lift_conie(dict(zip(reduced.row_labels, p_reduced)))
    monte = _lift_monte(dict(zip(reduced.col_labels, q_reduced)))
    value = expected_payoff(conie, monte, m)

    conie_certificate = tuple(
        expected_payoff(conie, MixedMonte.point_mass(col), m) for col in m.col_labels
    )
    monte_certificate = tuple(
        expected_payoff(MixedConie.point_mass(row), monte, m) for row in m.row_labels
    )
    if any(v != value for v in conie_certificate):
        raise ValueError("lifted contestant mix failed to equalize the full game")
    if any(v > value for v in monte_certificate):
        raise ValueError("lifted host mix concedes more than the value")
    return SolveResult(
        value=value,
        conie_minimax=conie,
        monte_minimax=monte,
        conie_certificate=conie_certificate,
        monte_certificate=monte_certificate,
    )


def uniform_always_switch() -> MixedConie:
    """Pick uniformly at random, then always switch: the contestant's unique
    minimax strategy."""
    return _lift_conie(
        {ConiePureStrategy.from_code(code): Fraction(1, 3) for code in ("1ss", "2ss", "3ss")}
    )


def is_minimax_monte(q: MixedMonte) -> bool:
    """A host mix is minimax exactly when it hides the prize uniformly."""
    third = Fraction(1, 3)
    return q.theta_marginal() == (third, third, third)


def is_minimax_conie(p: MixedConie, matrix: PayoffMatrix | None = None) -> bool:
    """A contestant mix is minimax when it guarantees the value against every
    host pure strategy."""
    m = matrix or canonical_matrix()
    guaranteed = min(
        expected_payoff(p, MixedMonte.point_mass(col), m) for col in m.col_labels
    )
    return guaranteed == GAME_VALUE


# ---------------------------------------------------------------------------
# General-sum analysis


@dataclass(frozen=True)
class HostPayoffMatrix:
    """12x6 rational host payoffs aligned to the canonical strategy orders."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(entries) != 12 or any(len(row) != 6 for row in entries):
            raise ValueError("host payoff matrix must be 12x6")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def antagonistic(cls) -> "HostPayoffMatrix":
        """The zero-sum host: loses exactly what the contestant wins."""
        c = canonical_matrix()
        return cls(tuple(tuple(-Fraction(v) for v in row) for row in c.entries))

    @classmethod
    def sympathetic(cls) -> "HostPayoffMatrix":
        """A host who wins together with the contestant."""
        c = canonical_matrix()
        return cls(tuple(tuple(Fraction(v) for v in row) for row in c.entries))

    @classmethod
    def indifferent(cls) -> "HostPayoffMatrix":
        return cls(((Fraction(0),) * 6,) * 12)

    def to_dict(self) -> dict:
        return {"entries": [[format_rational(v) for v in row] for row in self.entries]}

    @classmethod
    def from_dict(cls, doc: dict) -> "HostPayoffMatrix":
        entries = doc["entries"]
        parsed = []
        for i, row in enumerate(entries):
            parsed_row = []
            for j, cell in enumerate(row):
                try:
                    parsed_row.append(parse_rational(str(cell)))
                except ValueError as exc:
                    raise ValueError(f"bad rational at row {i + 1}, column {j + 1}: {cell!r}") from exc
            parsed.append(tuple(parsed_row))
        return cls(tuple(parsed))

    @classmethod
    def from_json_text(cls, text: str) -> "HostPayoffMatrix":
        doc = json.loads(text)  # json.JSONDecodeError carries line/column
        return cls.from_dict(doc)

    def row_of(self, conie: ConiePureStrategy) -> tuple[Fraction, ...]:
        return self.entries[conie_index(conie)]


def best_response_monte(
    p: MixedConie, h: HostPayoffMatrix
) -> tuple[Fraction, frozenset[MontePureStrategy]]:
    """Host pure strategies maximizing p . H restricted to their column."""
    col_payoffs = [
        sum(w * h.entries[i][j] for i, w in enumerate(p.weights))
        for j in range(6)
    ]
    value = max(col_payoffs)
    best = frozenset(
        MONTE_ORDER[j] for j, v in enumerate(col_payoffs) if v == value
    )
    return value, best


def is_nash(
    p: MixedConie,
    q: MixedMonte,
    h: HostPayoffMatrix,
    matrix: PayoffMatrix | None = None,
) -> bool:
    """Mutual best responses: p maximizes P.C.q and q maximizes p.H.Q."""
    m = matrix or canonical_matrix()
    conie_payoff = expected_payoff(p, q, m)
    best_conie = bayes_best_response(q, m).value
    if conie_payoff != best_conie:
        return False
    monte_payoff = sum(
        wp * sum(wq * h.entries[i][j] for j, wq in enumerate(q.weights))
        for i, wp in enumerate(p.weights)
    )
    best_monte, _ = best_response_monte(p, h)
    return monte_payoff == best_monte


@dataclass(frozen=True)
class NashCertificate:
    """Best-response evidence: payoff of every pure deviation on both sides."""

    conie_row_payoffs: tuple[Fraction, ...]
    monte_col_payoffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class NashProfile:
    p: MixedConie
    q: MixedMonte
    conie_payoff: Fraction
    monte_payoff: Fraction
    certification: NashCertificate

    def to_dict(self) -> dict:
        return {
            "p": self.p.to_strings(),
            "q": self.q.to_strings(),
            "coniePayoff": format_rational(self.conie_payoff),
            "coniePayoffDecimal": float(self.conie_payoff),
            "montePayoff": format_rational(self.monte_payoff),
            "montePayoffDecimal": float(self.monte_payoff),
            "conieRowPayoffs": [format_rational(v) for v in self.certification.conie_row_payoffs],
            "monteColPayoffs": [format_rational(v) for v in self.certification.monte_col_payoffs],
        }


def _make_profile(
    p: MixedConie, q: MixedMonte, h: HostPayoffMatrix, m: PayoffMatrix
) -> NashProfile:
    row_payoffs = tuple(
        sum(wq * v for wq, v in zip(q.weights, m.row(row))) for row in m.row_labels
    )
    col_payoffs = tuple(
        sum(wp * h.entries[i][j] for i, wp in enumerate(p.weights)) for j in range(6)
    )
    conie_payoff = sum(wp * rp for wp, rp in zip(p.weights, row_payoffs))
    monte_payoff = sum(wq * cp for wq, cp in zip(q.weights, col_payoffs))
    return NashProfile(
        p=p,
        q=q,
        conie_payoff=conie_payoff,
        monte_payoff=monte_payoff,
        certification=NashCertificate(row_payoffs, col_payoffs),
    )


def enumerate_nash_supports(
    h: HostPayoffMatrix, matrix: PayoffMatrix | None = None
) -> list[NashProfile]:
    """Exhaustive support enumeration over all nonempty row and column
    subsets.

    For each support pair the two indifference systems are solved exactly;
    a pair with differing support sizes leaves one side underdetermined and
    can never pin a unique profile, so it is skipped after being considered.
    Solutions with nonnegative weights that survive the exact mutual
    best-response check are kept, deduplicated.
    """
    m = matrix or canonical_matrix()
    c_entries = [[Fraction(v) for v in row] for row in m.entries]
    row_supports = [
        combo for k in range(1, 13) for combo in combinations(range(12), k)
    ]
    col_supports = [
        combo for k in range(1, 7) for combo in combinations(range(6), k)
    ]
    seen: set[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]] = set()
    profiles: list[NashProfile] = []
    for rows_support in row_supports:
        for cols_support in col_supports:
            if len(rows_support) != len(cols_support):
                continue
            k = len(rows_support)
            # Host weights: contestant indifferent across her support rows.
            system = [
                [c_entries[i][j] for j in cols_support] + [Fraction(-1)]
                for i in rows_support
            ]
            system.append([Fraction(1)] * k + [Fraction(0)])
            rhs = [Fraction(0)] * k + [Fraction(1)]
            q_sol = solve_unique(system, rhs)
            if q_sol is None or any(w < 0 for w in q_sol[:-1]):
                continue
            # Contestant weights: host indifferent across his support columns.
            system = [
                [h.entries[i][j] for i in rows_support] + [Fraction(-1)]
                for j in cols_support
            ]
            system.append([Fraction(1)] * k + [Fraction(0)])
            p_sol = solve_unique(system, rhs)
            if p_sol is None or any(w < 0 for w in p_sol[:-1]):
                continue
            p_full = [Fraction(0)] * 12
            for idx, i in enumerate(rows_support):
                p_full[i] = p_sol[idx]
            q_full = [Fraction(0)] * 6
            for idx, j in enumerate(cols_support):
                q_full[j] = q_sol[idx]
            p = MixedConie(tuple(p_full))
            q = MixedMonte(tuple(q_full))
            if not is_nash(p, q, h, m):
                continue
            key = (p.weights, q.weights)
            if key in seen:
                continue
            seen.add(key)
            profiles.append(_make_profile(p, q, h, m))
    profiles.sort(key=lambda prof: (prof.p.weights, prof.q.weights))
    return profiles


# ---------------------------------------------------------------------------
# Fully supported equilibria (continuous families)

_SS_CODES = ("1ss", "2ss", "3ss")


@dataclass(frozen=True)
class FullySupportedFamily:
    """One family of equilibria whose host side is fully supported.

    ``least_likely`` lists the doors tied at the prior minimum (1, 2 or 3
    doors, fixing the case); ``weight_vertices`` are the extreme points of
    the feasible always-switching weight vectors; ``representative`` is one
    exactly verified member of the family.
    """

    case: int
    least_likely: tuple[Door, ...]
    weight_vertices: tuple[tuple[Fraction, Fraction, Fraction], ...]
    representative: NashProfile

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "leastLikelyDoors": list(self.least_likely),
            "weightVertices": [
                [format_rational(w) for w in vertex] for vertex in self.weight_vertices
            ],
            "representative": self.representative.to_dict(),
        }


def _ss_rows(h: HostPayoffMatrix) -> list[tuple[Fraction, ...]]:
    return [h.row_of(ConiePureStrategy.from_code(code)) for code in _SS_CODES]


def _constant_mixture_constraints(
    rows: list[tuple[Fraction, ...]]
) -> tuple[list[list[Fraction]], list[Fraction]]:
    # Unknowns (p1, p2, p3): mixture entry j equals entry 0 for all j, plus
    # the simplex sum condition.
    system = []
    rhs = []
    for j in range(1, 6):
        system.append([rows[u][j] - rows[u][0] for u in range(3)])
        rhs.append(Fraction(0))
    system.append([Fraction(1)] * 3)
    rhs.append(Fraction(1))
    return system, rhs


def _simplex_solution_vertices(
    particular: list[Fraction], basis: list[list[Fraction]]
) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Vertices of {solutions} intersected with the probability simplex."""
    if not basis:
        point = tuple(particular)
        return [point] if all(w >= 0 for w in point) else []
    if len(basis) == 1:
        direction = basis[0]
        lo, hi = None, None
        for p0, d in zip(particular, direction):
            if d == 0:
                if p0 < 0:
                    return []
                continue
            bound = -p0 / d
            if d > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        # Weights sum to 1 along the whole line, so the segment is bounded.
        if lo is None or hi is None or lo > hi:
            return []
        points = []
        for t in (lo, hi):
            points.append(tuple(p0 + t * d for p0, d in zip(particular, direction)))
        return points[:1] if points[0] == points[1] else points
    # Two degrees of freedom inside the sum-1 plane: the constraints were
    # vacuous, every simplex point qualifies.
    one = Fraction(1)
    zero = Fraction(0)
    return [(one, zero, zero), (zero, one, zero), (zero, zero, one)]


def _centroid(
    vertices: list[tuple[Fraction, Fraction, Fraction]]
) -> tuple[Fraction, Fraction, Fraction]:
    n = len(vertices)
    return tuple(sum(v[i] for v in vertices) / n for i in range(3))


def _family_representative(
    weights: tuple[Fraction, Fraction, Fraction],
    least_likely: tuple[Door, ...],
    h: HostPayoffMatrix,
    m: PayoffMatrix,
) -> NashProfile:
    half = Fraction(1, 2)
    if len(least_likely) == 3:
        pi = (Fraction(1, 3),) * 3
    elif len(least_likely) == 2:
        pi = tuple(
            Fraction(1, 4) if d in least_likely else Fraction(1, 2) for d in (1, 2, 3)
        )
    else:
        pi = tuple(
            Fraction(1, 5) if d in least_likely else Fraction(2, 5) for d in (1, 2, 3)
        )
    host = BehavioralHost(pi, (half, half, half))
    q = host_to_mixed(host)
    p = _lift_conie(
        {
            ConiePureStrategy.from_code(code): w
            for code, w in zip(_SS_CODES, weights)
        }
    )
    return _make_profile(p, q, h, m)


def fully_supported_equilibria(
    h: HostPayoffMatrix, matrix: PayoffMatrix | None = None
) -> list[FullySupportedFamily]:
    """All equilibrium families whose host strategy is fully supported.

    Against a fully supported host the contestant's best responses are
    always-switching strategies pointed at the least likely doors, so an
    equilibrium needs (a) contestant weights on those rows making the host
    indifferent across all six columns, and (b) priors whose minimum is
    attained exactly at the supported rows' doors.  There is one family per
    feasible tie pattern: a unique least likely door (case 1), two tied
    (case 2), or uniform priors (case 3).
    """
    m = matrix or canonical_matrix()
    rows = _ss_rows(h)
    families: list[FullySupportedFamily] = []

    # Case 1: point mass on one door's always-switching row; the host is
    # indifferent only if that row is constant.
    for u in (1, 2, 3):
        row = rows[u - 1]
        if all(v == row[0] for v in row):
            weights = tuple(Fraction(int(d == u)) for d in (1, 2, 3))
            rep = _family_representative(weights, (u,), h, m)
            families.append(
                FullySupportedFamily(
                    case=1,
                    least_likely=(u,),
                    weight_vertices=(weights,),
                    representative=rep,
                )
            )

    # Case 2: weights on the two tied-minimum doors' rows.
    for u, v in combinations((1, 2, 3), 2):
        ru, rv = rows[u - 1], rows[v - 1]
        # p = t on u plus (1-t) on v; each column-difference is linear in t.
        lo, hi = Fraction(0), Fraction(1)
        feasible = True
        for j in range(1, 6):
            a = (ru[j] - ru[0]) - (rv[j] - rv[0])
            c = rv[j] - rv[0]
            if a == 0:
                if c != 0:
                    feasible = False
                    break
                continue
            t = -c / a
            if t < lo or t > hi:
                feasible = False
                break
            lo = hi = t
        if not feasible:
            continue
        def edge_point(t: Fraction) -> tuple[Fraction, Fraction, Fraction]:
            return tuple(
                t if d == u else (1 - t if d == v else Fraction(0)) for d in (1, 2, 3)
            )
        vertices = (edge_point(lo),) if lo == hi else (edge_point(lo), edge_point(hi))
        rep = _family_representative(_centroid(list(vertices)), (u, v), h, m)
        families.append(
            FullySupportedFamily(
                case=2,
                least_likely=(u, v),
                weight_vertices=vertices,
                representative=rep,
            )
        )

    # Case 3: uniform priors; any constant mixture of the three rows works.
    system, rhs = _constant_mixture_constraints(rows)
    solution = solve_affine(system, rhs)
    if solution is not None:
        vertices = _simplex_solution_vertices(*solution)
        if vertices:
            rep = _family_representative(_centroid(vertices), (1, 2, 3), h, m)
            families.append(
                FullySupportedFamily(
                    case=3,
                    least_likely=(1, 2, 3),
                    weight_vertices=tuple(vertices),
                    representative=rep,
                )
            )
    return families
