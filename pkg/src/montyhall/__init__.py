"""Exact game-theory workbench for the three-door hide / offer / switch game."""

from .game import (
    Action,
    ConiePureStrategy,
    GameTree,
    InfoSet,
    MontePureStrategy,
    PlayRecord,
    build_game_tree,
    enumerate_conie,
    enumerate_info_sets,
    enumerate_monte,
    payoff,
    play,
)
from .matrix import (
    CONIE_ORDER,
    MONTE_ORDER,
    MixedConie,
    MixedMonte,
    PayoffMatrix,
    ReductionStep,
    ReductionTrace,
    build_payoff_matrix,
    eliminate_dominated,
    expected_payoff,
    subtract_constant,
    unlucky_doors,
    weakly_dominates,
)
from .simulate import (
    BehavioralConie,
    SimulationStats,
    behavioral_to_mixed_conie,
    behavioral_to_mixed_monte,
    sample_play,
    simulate,
)
from .solvers import (
    BayesResult,
    BehavioralHost,
    FullySupportedFamily,
    GAME_VALUE,
    HostPayoffMatrix,
    NashProfile,
    SolveResult,
    UnreachableInfoSet,
    bayes_best_response,
    bayes_value_formula,
    best_response_monte,
    enumerate_nash_supports,
    exclusion_rules,
    fully_supported_equilibria,
    host_to_mixed,
    is_minimax_conie,
    is_minimax_monte,
    is_nash,
    mixed_to_host,
    posterior_switch_win,
    solve_zero_sum,
    uniform_always_switch,
)

__version__ = "0.1.0"
