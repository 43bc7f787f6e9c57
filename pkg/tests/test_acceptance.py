"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one ``ACCEPTANCE <name>: PASS|FAIL`` line (visible with
``pytest -s`` or in captured output on failure).  All equality checks are
exact rational arithmetic unless a tolerance is named.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from montyhall.game import ConiePureStrategy, MontePureStrategy, other_doors, play
from montyhall.matrix import (
    CONIE_ORDER,
    MONTE_ORDER,
    MixedConie,
    MixedMonte,
    build_payoff_matrix,
    eliminate_dominated,
    expected_payoff,
    unlucky_doors,
)
from montyhall.simulate import (
    BehavioralConie,
    behavioral_to_mixed_conie,
    behavioral_to_mixed_monte,
    simulate,
)
from montyhall.solvers import (
    BehavioralHost,
    HostPayoffMatrix,
    bayes_best_response,
    bayes_value_formula,
    enumerate_nash_supports,
    host_to_mixed,
    is_minimax_monte,
    posterior_switch_win,
    solve_zero_sum,
    uniform_always_switch,
)

F = Fraction

FIG2 = {
    "1ss": (0, 0, 1, 1, 1, 1),
    "1ms": (1, 0, 0, 0, 1, 1),
    "1sm": (0, 1, 1, 1, 0, 0),
    "1mm": (1, 1, 0, 0, 0, 0),
    "2ss": (1, 1, 0, 0, 1, 1),
    "2ms": (0, 0, 1, 0, 1, 1),
    "2sm": (1, 1, 0, 1, 0, 0),
    "2mm": (0, 0, 1, 1, 0, 0),
    "3ss": (1, 1, 1, 1, 0, 0),
    "3ms": (0, 0, 1, 1, 1, 0),
    "3sm": (1, 1, 0, 0, 0, 1),
    "3mm": (0, 0, 0, 0, 1, 1),
}


@contextmanager
def criterion(name: str, budget_seconds: float | None = None):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {name}: FAIL ({time.monotonic() - start:.2f}s)")
        raise
    elapsed = time.monotonic() - start
    if budget_seconds is not None:
        assert elapsed < budget_seconds, f"{name} took {elapsed:.2f}s, budget {budget_seconds}s"
    print(f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s)")


def positive_priors(total):
    for a in range(1, total - 1):
        for b in range(1, total - a):
            yield (F(a, total), F(b, total), F(total - a - b, total))


def test_matrix_fidelity():
    with criterion("matrix-fidelity", budget_seconds=1.0):
        matrix = build_payoff_matrix()
        assert [c.code for c in matrix.col_labels] == ["12", "13", "21", "23", "31", "32"]
        checked = 0
        for row_code, expected in FIG2.items():
            actual = matrix.row(row_code)
            for j in range(6):
                assert actual[j] == expected[j]
                checked += 1
        assert checked == 72


def test_value_of_the_game():
    with criterion("value-of-the-game", budget_seconds=1.0):
        result = solve_zero_sum()
        assert result.value == F(2, 3)
        assert result.conie_minimax == uniform_always_switch()

        # Independent oracle: brute-force max-min over rational mixtures on
        # the reduced game, exact at denominators divisible by 3.
        reduced = eliminate_dominated().terminal
        best = F(-1)
        denominator = 6
        for a in range(denominator + 1):
            for b in range(denominator + 1 - a):
                p = (F(a, denominator), F(b, denominator), F(denominator - a - b, denominator))
                worst = min(
                    sum(p[i] * reduced.entries[i][j] for i in range(3)) for j in range(3)
                )
                best = max(best, worst)
        assert best == result.value


def test_equalizing_certificate():
    with criterion("equalizing-certificate"):
        p_star = uniform_always_switch()
        for col in MONTE_ORDER:
            assert expected_payoff(p_star, MixedMonte.point_mass(col)) == F(2, 3)


def test_dominance_pipeline():
    with criterion("dominance-pipeline"):
        trace = eliminate_dominated()
        assert trace.terminal.entries == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
        pairs = {(s.removed, s.justified_by) for s in trace.steps if s.kind == "dominated-row"}
        assert ("2ms", "1ss") in pairs
        assert ("2mm", "1ss") in pairs
        assert ("2sm", "3ss") in pairs


def test_unlucky_door_theorem():
    with criterion("unlucky-door-theorem"):
        for c in CONIE_ORDER:
            assert unlucky_doors(c), f"{c.code} has no unlucky door"
        assert unlucky_doors("1ms") == {2}
        assert unlucky_doors("1mm") == {2, 3}


def test_bayesian_suite():
    with criterion("bayesian-suite", budget_seconds=10.0):
        hosts = 0
        lam_grid = [
            (F(1, 4), F(1, 4), F(1, 4)),
            (F(1, 2), F(1, 2), F(1, 2)),
            (F(3, 4), F(3, 4), F(3, 4)),
            (F(1, 4), F(1, 2), F(3, 4)),
            (F(3, 4), F(1, 4), F(1, 2)),
        ]
        for pi in positive_priors(8):  # 21 interior priors
            for lam in lam_grid:
                q = host_to_mixed(BehavioralHost(pi, lam))
                result = bayes_best_response(q)
                least = min(pi)
                assert result.value == 1 - least == bayes_value_formula(pi)
                expected_set = {f"{d}ss" for d in (1, 2, 3) if pi[d - 1] == least}
                assert {s.code for s in result.pure_best_responses} == expected_set
                hosts += 1
        assert hosts >= 100

        crawl = bayes_best_response(host_to_mixed(BehavioralHost.crawl()))
        assert {s.code for s in crawl.pure_best_responses} == {
            "1ss", "2ss", "3ss", "1ms", "2ms", "3ms",
        }
        assert crawl.value == F(2, 3)


def test_monte_minimax_characterization():
    with criterion("monte-minimax-characterization"):
        lam_values = (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))
        members = 0
        for lam in itertools.product(lam_values, repeat=3):
            q = host_to_mixed(BehavioralHost.uniform(lam))
            assert is_minimax_monte(q)
            members += 1
        assert members >= 50

        outsiders = 0
        for pi in positive_priors(12):
            if pi == (F(1, 3), F(1, 3), F(1, 3)):
                continue
            q = host_to_mixed(BehavioralHost(pi, (F(1, 2),) * 3))
            assert not is_minimax_monte(q)
            outsiders += 1
        assert outsiders >= 50


def test_nash_suite():
    with criterion("nash-suite", budget_seconds=60.0):
        antagonistic = enumerate_nash_supports(HostPayoffMatrix.antagonistic())
        p_star = uniform_always_switch()
        crawl = host_to_mixed(BehavioralHost.crawl())
        assert any(prof.p == p_star and prof.q == crawl for prof in antagonistic)
        for prof in antagonistic:
            assert prof.conie_payoff >= F(2, 3)

        sympathetic = enumerate_nash_supports(HostPayoffMatrix.sympathetic())
        matrix = build_payoff_matrix()
        for i, row in enumerate(matrix.row_labels):
            for j, col in enumerate(matrix.col_labels):
                if matrix.entries[i][j] == 1:
                    p = MixedConie.point_mass(row)
                    q = MixedMonte.point_mass(col)
                    assert any(prof.p == p and prof.q == q for prof in sympathetic)
        for prof in sympathetic:
            assert prof.conie_payoff >= F(2, 3)


def test_kuhn_conversion():
    from montyhall.game import InfoSet

    with criterion("kuhn-conversion"):
        rng = random.Random(2026)
        profiles = 0
        for _ in range(110):
            parts = [rng.randint(1, 9) for _ in range(3)]
            pick = tuple(F(p, sum(parts)) for p in parts)
            switch = tuple(F(rng.randint(0, 8), 8) for _ in range(6))
            b = BehavioralConie(pick, switch)
            mixed = behavioral_to_mixed_conie(b)
            for m in MONTE_ORDER:
                # Oracle from the tree, independent of the matrix path: on a
                # mismatch switching wins, on a match holding wins.
                expected = F(0)
                for door in (1, 2, 3):
                    w = b.pick_dist[door - 1]
                    if door != m.theta:
                        expected += w * b.switch_prob_at(InfoSet(door, m.theta))
                    else:
                        expected += w * (1 - b.switch_prob_at(InfoSet(door, m.offer_on_match)))
                assert expected_payoff(mixed, MixedMonte.point_mass(m)) == expected
            profiles += 1
        assert profiles >= 100


def test_simulation_convergence():
    with criterion("simulation-convergence", budget_seconds=10.0):
        fixtures = [
            # (host, contestant, exact payoff, seed)
            (BehavioralHost.crawl(), BehavioralConie.always_switch((F(1), F(0), F(0))), F(2, 3), 1),
            (
                BehavioralHost((F(1, 2), F(3, 10), F(1, 5)), (F(1, 2),) * 3),
                BehavioralConie.from_pure("3ss"),
                F(4, 5),
                2,
            ),
            (
                BehavioralHost.uniform(),
                BehavioralConie((F(1, 3),) * 3, (F(1, 2),) * 6),
                F(1, 2),
                3,
            ),
        ]
        rounds = 100_000
        for host, conie, exact, seed in fixtures:
            assert expected_payoff(
                behavioral_to_mixed_conie(conie), behavioral_to_mixed_monte(host)
            ) == exact
            stats = simulate(host, conie, rounds, seed)
            replay = simulate(host, conie, rounds, seed)
            assert stats == replay
            p = float(exact)
            assert abs(stats.win_rate - p) < 4 * math.sqrt(p * (1 - p) / rounds)


def test_conditional_bound():
    with criterion("conditional-bound"):
        rng = random.Random(4096)
        hosts = 0
        for _ in range(110):
            parts = [rng.randint(1, 9) for _ in range(3)]
            pi = tuple(F(p, sum(parts)) for p in parts)
            lam = tuple(F(rng.randint(1, 7), 8) for _ in range(3))  # interior: fully supported
            host = BehavioralHost(pi, lam)
            least = min(pi)
            for pick in (1, 2, 3):
                if pi[pick - 1] != least:
                    continue
                for offer in other_doors(pick):
                    assert posterior_switch_win(host, pick, offer) >= F(1, 2)
            hosts += 1
        assert hosts >= 100
