"""Payoff matrix derivation, dominance, unlucky doors, elimination."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from montyhall.game import ConiePureStrategy
from montyhall.matrix import (
    CONIE_ORDER,
    MONTE_ORDER,
    MixedConie,
    MixedMonte,
    PayoffMatrix,
    build_payoff_matrix,
    eliminate_dominated,
    expected_payoff,
    subtract_constant,
    unlucky_doors,
    weakly_dominates,
)

# The canonical 12x6 table, columns 12 13 21 23 31 32.  Transcribed by hand
# and kept independent of build_payoff_matrix as the ground-truth fixture.
FIXTURE_ROWS = {
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

REDUCED = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def rational_simplex(size, max_part=6):
    """Hypothesis strategy for exact rational distributions."""
    return st.lists(
        st.integers(min_value=0, max_value=max_part), min_size=size, max_size=size
    ).filter(lambda parts: sum(parts) > 0).map(
        lambda parts: tuple(Fraction(p, sum(parts)) for p in parts)
    )


class TestBuild:
    def test_matches_fixture_entry_for_entry(self):
        m = build_payoff_matrix()
        assert [s.code for s in m.col_labels] == ["12", "13", "21", "23", "31", "32"]
        for row_label, expected in FIXTURE_ROWS.items():
            for j, value in enumerate(expected):
                assert m.row(row_label)[j] == value, (row_label, m.col_labels[j].code)

    def test_row_one_counts(self):
        m = build_payoff_matrix()
        assert {sum(row) for row in m.entries} == {2, 3, 4}

    def test_all_rows_distinct(self):
        m = build_payoff_matrix()
        assert len(set(m.entries)) == 12


class TestExpectedPayoff:
    def test_pure_profile_reads_entry(self):
        p = MixedConie.point_mass("1ss")
        q = MixedMonte.point_mass("21")
        assert expected_payoff(p, q) == 1

    def test_uniform_switch_is_equalizing(self):
        third = Fraction(1, 3)
        weights = [Fraction(0)] * 12
        for code in ("1ss", "2ss", "3ss"):
            weights[[s.code for s in CONIE_ORDER].index(code)] = third
        p = MixedConie(tuple(weights))
        for col in MONTE_ORDER:
            assert expected_payoff(p, MixedMonte.point_mass(col)) == Fraction(2, 3)

    def test_uniform_vs_uniform(self):
        # 36 winning entries out of 72 profiles.
        assert expected_payoff(MixedConie.uniform(), MixedMonte.uniform()) == Fraction(1, 2)

    @given(
        p1=rational_simplex(12),
        p2=rational_simplex(12),
        q=rational_simplex(6),
        alpha=st.fractions(min_value=0, max_value=1, max_denominator=8),
    )
    @settings(max_examples=40, deadline=None)
    def test_bilinearity(self, p1, p2, q, alpha):
        qm = MixedMonte(q)
        blended = MixedConie(
            tuple(alpha * a + (1 - alpha) * b for a, b in zip(p1, p2))
        )
        assert expected_payoff(blended, qm) == alpha * expected_payoff(
            MixedConie(p1), qm
        ) + (1 - alpha) * expected_payoff(MixedConie(p2), qm)

    @given(
        p=rational_simplex(12),
        lam=st.tuples(*[st.fractions(min_value=0, max_value=1, max_denominator=6)] * 3),
    )
    @settings(max_examples=60, deadline=None)
    def test_uniform_hiding_caps_win_probability(self, p, lam):
        # Uniform theta-marginal holds the contestant to at most 2/3.
        third = Fraction(1, 3)
        weights = []
        for l in lam:
            weights.extend((third * l, third * (1 - l)))
        q = MixedMonte(tuple(weights))
        assert expected_payoff(MixedConie(p), q) <= Fraction(2, 3)


class TestDominance:
    def test_paper_examples(self):
        assert weakly_dominates("2ss", "1ms")
        assert weakly_dominates("2ss", "1mm")
        assert weakly_dominates("3ss", "1mm")
        assert not weakly_dominates("1ss", "2ss")

    def test_every_hold_strategy_dominated_by_unlucky_switcher(self):
        for c in CONIE_ORDER:
            if c.always_switching:
                continue
            doors = unlucky_doors(c)
            assert doors
            for u in doors:
                assert weakly_dominates(f"{u}ss", c)

    def test_unlucky_door_fixtures(self):
        assert unlucky_doors("1ms") == {2}
        assert unlucky_doors("1mm") == {2, 3}
        assert unlucky_doors("1ss") == {1}

    def test_unlucky_door_theorem_all_rows(self):
        for c in CONIE_ORDER:
            assert unlucky_doors(c)


class TestElimination:
    def test_terminal_matrix(self):
        trace = eliminate_dominated()
        assert trace.terminal.entries == REDUCED
        assert [s.code for s in trace.terminal.row_labels] == ["1ss", "2ss", "3ss"]
        assert [s.code for s in trace.terminal.col_labels] == ["12", "21", "32"]

    def test_named_dominations_present(self):
        steps = {(s.removed, s.justified_by) for s in eliminate_dominated().steps}
        assert ("2ms", "1ss") in steps
        assert ("2mm", "1ss") in steps
        assert ("2sm", "3ss") in steps

    def test_steps_sound_at_time_of_removal(self):
        trace = eliminate_dominated()
        m = trace.initial
        rows = list(m.row_labels)
        cols = list(m.col_labels)
        for step in trace.steps:
            if step.kind == "dominated-row":
                removed = ConiePureStrategy.from_code(step.removed)
                justifier = ConiePureStrategy.from_code(step.justified_by)
                assert justifier in rows
                removed_row = [m.entry(removed, c) for c in cols]
                justifier_row = [m.entry(justifier, c) for c in cols]
                assert removed_row != justifier_row
                assert all(x >= y for x, y in zip(justifier_row, removed_row))
                rows.remove(removed)
            else:
                keep = next(c for c in cols if c.code == step.justified_by)
                drop = next(c for c in cols if c.code == step.removed)
                assert [m.entry(r, keep) for r in rows] == [m.entry(r, drop) for r in rows]
                cols.remove(drop)

    def test_something_like_dupe_removal_keeps_three_columns(self):
        trace = eliminate_dominated()
        kinds = [s.kind for s in trace.steps]
        assert kinds.count("dominated-row") == 9
        assert kinds.count("duplicate-column") == 3


class TestSubtractConstant:
    def test_shift_to_diagonal(self):
        shifted = subtract_constant(REDUCED, 1)
        assert shifted == (
            (Fraction(-1), Fraction(0), Fraction(0)),
            (Fraction(0), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(-1)),
        )

    def test_zero_shift_is_identity(self):
        assert subtract_constant(REDUCED, 0) == tuple(
            tuple(Fraction(v) for v in row) for row in REDUCED
        )

    def test_shift_inverts(self):
        diagonal = subtract_constant(REDUCED, 1)
        assert subtract_constant(diagonal, -1) == tuple(
            tuple(Fraction(v) for v in row) for row in REDUCED
        )


class TestSerialization:
    def test_dict_round_trip(self):
        m = build_payoff_matrix()
        assert PayoffMatrix.from_dict(m.to_dict()) == m

    def test_table_round_trip(self):
        m = build_payoff_matrix()
        assert PayoffMatrix.from_table(m.to_table()) == m
        reduced = eliminate_dominated().terminal
        assert PayoffMatrix.from_table(reduced.to_table()) == reduced

    def test_mixed_strategy_strings_round_trip(self):
        p = MixedConie.uniform()
        assert MixedConie.from_strings(p.to_strings()) == p
        q = MixedMonte((Fraction(1, 2), Fraction(1, 2), *([Fraction(0)] * 4)))
        assert MixedMonte.from_strings(q.to_strings()) == q

    def test_invalid_distributions_rejected(self):
        with pytest.raises(ValueError):
            MixedMonte((Fraction(1, 2),) * 6)
        with pytest.raises(ValueError):
            MixedConie((Fraction(-1), Fraction(2), *([Fraction(0)] * 10)))
