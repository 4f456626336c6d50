"""Games with relationship-weighted payoffs: analysis and simulation.

The model attaches to every ordered player pair a rational relationship
value (how much one cares for the other's payoff) and, per player, a
belief tensor over everyone's relationships.  Each player evaluates the
game through their own belief-weighted "supposed" payoffs; dominance,
equilibrium, repeated-play, and bargaining analysis all run on those.
"""

from .dynamics import (
    FixedPolicy,
    RationalizingIntervalPolicy,
    RepeatedGameConfig,
    SimulationError,
    SimulationTrace,
    TitForTatMirrorPolicy,
    apply_update,
    play_round,
    rationalizing_interval,
    simulate,
)
from .equilibrium import (
    AssembledProfile,
    DominanceResult,
    EquilibriumSelectionError,
    GameTooLargeError,
    ThresholdRegionReport,
    assemble_profile,
    dominant_strategies,
    enumerate_mixed_nash_2p,
    enumerate_pure_nash,
    is_pure_nash,
    objective_check,
    subjective_check,
    threshold_regions,
)
from .documents import DocumentError, document_dict, dumps_document, load_game, loads_document, parse_document
from .model import (
    Attitude,
    BeliefShapeError,
    BeliefState,
    BeliefViolation,
    Game,
    InvalidBeliefsError,
    SupposedGame,
    attitude_matrix,
    build_supposed_game,
    classify_attitude,
    require_valid_beliefs,
    supposed_payoff,
    supposed_payoff_vector,
    two_player_beliefs,
    validate_beliefs,
)
from .rational import Interval, RationalFormatError, format_rational, parse_rational
from .ultimatum import (
    AgreementRange,
    BargainingOutcome,
    Bound,
    UltimatumConfig,
    UltimatumDomainError,
    acceptance_threshold,
    agreement_range,
    bargain,
    cent_grid,
    column_accepts,
    offer_cap,
    optimal_relationship_claim,
    row_willing,
    validate_offer,
)

__version__ = "0.1.0"
