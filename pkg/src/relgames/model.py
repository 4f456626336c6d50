"""Material games, relationship beliefs, and supposed payoffs.

A relationship value R[i][j] weighs how much player i cares for player
j's material payoff: 0 is selfish, 1 fully cooperative, values in
between sub-cooperative, negative hostile, above 1 dedicated.  The
belief tensor entry supposed[k][i][j] is player k's estimate of R[i][j];
every player knows their own row exactly, so supposed[i][i][j] must
mirror R[i][j].

The supposed payoff of target j seen from perspective k at a pure
profile is the belief-weighted sum of all material payoffs, and a
perspective's "supposed game" replaces every payoff vector with that
perspective's supposed payoffs.  All analysis downstream (dominance,
equilibria, simulation) runs on supposed games.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .rational import format_rational, parse_rational


class Attitude(enum.Enum):
    NON_COOPERATIVE = "non-cooperative"
    COOPERATIVE = "cooperative"
    SUB_COOPERATIVE = "sub-cooperative"
    HOSTILE = "hostile"
    DEDICATED = "dedicated"


def classify_attitude(r: Fraction) -> Attitude:
    """Classify a relationship value; total on all rationals."""
    if r == 0:
        return Attitude.NON_COOPERATIVE
    if r == 1:
        return Attitude.COOPERATIVE
    if r < 0:
        return Attitude.HOSTILE
    if r > 1:
        return Attitude.DEDICATED
    return Attitude.SUB_COOPERATIVE


@dataclass(frozen=True)
class Game:
    """A finite normal-form game with exact rational payoffs.

    ``payoffs`` is profile-major in mixed-radix order: strategy indices
    in player order with the last player varying fastest.  Each entry
    holds one payoff per player.  The fixed order makes downstream
    tie-breaking deterministic.
    """

    players: tuple[str, ...]
    strategies: tuple[tuple[str, ...], ...]
    payoffs: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        players = tuple(str(p) for p in self.players)
        strategies = tuple(tuple(str(s) for s in strats) for strats in self.strategies)
        if len(players) < 2:
            raise ValueError("a game needs at least two players")
        if len(set(players)) != len(players):
            raise ValueError("player names must be unique")
        if len(strategies) != len(players):
            raise ValueError("one strategy list per player is required")
        if any(not strats for strats in strategies):
            raise ValueError("every player needs at least one strategy")
        expected = math.prod(len(strats) for strats in strategies)
        payoffs = tuple(tuple(parse_rational(v) for v in vec) for vec in self.payoffs)
        if len(payoffs) != expected:
            raise ValueError(f"expected {expected} payoff vectors, got {len(payoffs)}")
        if any(len(vec) != len(players) for vec in payoffs):
            raise ValueError("each payoff vector needs one entry per player")
        object.__setattr__(self, "players", players)
        object.__setattr__(self, "strategies", strategies)
        object.__setattr__(self, "payoffs", payoffs)

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(strats) for strats in self.strategies)

    def profiles(self):
        """All pure profiles, ascending by profile index."""
        return itertools.product(*(range(k) for k in self.shape))

    def profile_index(self, profile) -> int:
        index = 0
        for choice, size in zip(profile, self.shape):
            if not 0 <= choice < size:
                raise IndexError(f"strategy index {choice} out of range for size {size}")
            index = index * size + choice
        return index

    def payoff(self, profile) -> tuple[Fraction, ...]:
        return self.payoffs[self.profile_index(profile)]

    def payoff_to(self, profile, player: int) -> Fraction:
        return self.payoff(profile)[player]

    def player_index(self, name: str) -> int:
        try:
            return self.players.index(name)
        except ValueError:
            raise KeyError(f"unknown player {name!r}; players are {', '.join(self.players)}") from None

    def labels(self, profile) -> tuple[str, ...]:
        return tuple(self.strategies[i][s] for i, s in enumerate(profile))

    def replace_payoffs(self, payoffs) -> "Game":
        return Game(self.players, self.strategies, tuple(payoffs))


@dataclass(frozen=True)
class BeliefState:
    """True relationship matrix plus each player's belief tensor.

    ``relationships[i][j]`` is R[i][j]; ``supposed[k][i][j]`` is what
    player k thinks R[i][j] is.  Both are kept explicitly (rather than
    deriving R from the own-slice of the tensor) so a relationship stays
    distinguishable from another player's belief about it; the validator
    enforces their consistency.
    """

    relationships: tuple[tuple[Fraction, ...], ...]
    supposed: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        rel = tuple(tuple(parse_rational(v) for v in row) for row in self.relationships)
        sup = tuple(
            tuple(tuple(parse_rational(v) for v in row) for row in slice_)
            for slice_ in self.supposed
        )
        object.__setattr__(self, "relationships", rel)
        object.__setattr__(self, "supposed", sup)

    @classmethod
    def complete_information(cls, relationships) -> "BeliefState":
        """Every player's belief tensor slice equals the true matrix."""
        rel = tuple(tuple(parse_rational(v) for v in row) for row in relationships)
        return cls(rel, tuple(rel for _ in rel))

    def with_entries(self, relationship_updates=(), supposed_updates=()) -> "BeliefState":
        """New state with the given (i, j, value) / (k, i, j, value) entries replaced."""
        rel = [list(row) for row in self.relationships]
        for i, j, value in relationship_updates:
            rel[i][j] = parse_rational(value)
        sup = [[list(row) for row in slice_] for slice_ in self.supposed]
        for k, i, j, value in supposed_updates:
            sup[k][i][j] = parse_rational(value)
        return BeliefState(
            tuple(tuple(row) for row in rel),
            tuple(tuple(tuple(row) for row in slice_) for slice_ in sup),
        )


def two_player_beliefs(r_xy, r_yx, x_belief_yx=None, y_belief_xy=None) -> BeliefState:
    """Beliefs for a two-player game from the four scalar values.

    ``x_belief_yx`` is the first player's estimate of the second's
    relationship toward them, and symmetrically for ``y_belief_xy``.
    Omitted estimates default to the true values (complete information).
    """
    one = Fraction(1)
    r_xy = parse_rational(r_xy)
    r_yx = parse_rational(r_yx)
    b_x = r_yx if x_belief_yx is None else parse_rational(x_belief_yx)
    b_y = r_xy if y_belief_xy is None else parse_rational(y_belief_xy)
    relationships = ((one, r_xy), (r_yx, one))
    supposed = (
        ((one, r_xy), (b_x, one)),
        ((one, b_y), (r_yx, one)),
    )
    return BeliefState(relationships, supposed)


@dataclass(frozen=True)
class BeliefViolation:
    code: str
    message: str

    def __str__(self) -> str:
        return self.message


class BeliefShapeError(ValueError):
    """Belief dimensions do not match the player count (structural, not an invariant)."""


class InvalidBeliefsError(ValueError):
    """A BeliefState violates the relationship invariants."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def validate_beliefs(beliefs: BeliefState, n: int) -> list[BeliefViolation]:
    """Check the relationship invariants; empty list means valid.

    Raises BeliefShapeError when the matrix/tensor dimensions do not
    match ``n`` at all (that is a structural problem, not a violated
    invariant).
    """
    rel = beliefs.relationships
    sup = beliefs.supposed
    if len(rel) != n or any(len(row) != n for row in rel):
        raise BeliefShapeError(f"relationship matrix must be {n}x{n}")
    if (
        len(sup) != n
        or any(len(slice_) != n for slice_ in sup)
        or any(len(row) != n for slice_ in sup for row in slice_)
    ):
        raise BeliefShapeError(f"supposed-relationship tensor must be {n}x{n}x{n}")

    violations = []
    for i in range(n):
        if rel[i][i] != 1:
            violations.append(
                BeliefViolation(
                    "diagonal",
                    f"R_ii must equal 1: R[{i}][{i}] = {format_rational(rel[i][i])}",
                )
            )
    for k in range(n):
        for i in range(n):
            if sup[k][i][i] != 1:
                violations.append(
                    BeliefViolation(
                        "supposed-diagonal",
                        "supposed R_ii must equal 1: "
                        f"supposed[{k}][{i}][{i}] = {format_rational(sup[k][i][i])}",
                    )
                )
    for i in range(n):
        for j in range(n):
            if i != j and sup[i][i][j] != rel[i][j]:
                violations.append(
                    BeliefViolation(
                        "own-slice",
                        "own relationships must be known exactly: "
                        f"supposed[{i}][{i}][{j}] = {format_rational(sup[i][i][j])} "
                        f"but R[{i}][{j}] = {format_rational(rel[i][j])}",
                    )
                )
    return violations


def require_valid_beliefs(beliefs: BeliefState, n: int) -> None:
    violations = validate_beliefs(beliefs, n)
    if violations:
        raise InvalidBeliefsError(violations)


def supposed_payoff(game: Game, beliefs: BeliefState, perspective: int, target: int, profile) -> Fraction:
    """Perspective's belief-weighted payoff for ``target`` at a pure profile.

    For a valid BeliefState the own-target case (target == perspective)
    needs no special branch: the tensor's own slice mirrors the true
    relationship row, so one weighted sum covers both cases.
    """
    weights = beliefs.supposed[perspective][target]
    material = game.payoff(profile)
    return sum((w * u for w, u in zip(weights, material)), Fraction(0))


def supposed_payoff_vector(game: Game, beliefs: BeliefState, perspective: int, profile) -> tuple[Fraction, ...]:
    """All players' supposed payoffs at a profile, seen from one perspective."""
    material = game.payoff(profile)
    return tuple(
        sum((w * u for w, u in zip(beliefs.supposed[perspective][target], material)), Fraction(0))
        for target in range(game.n_players)
    )


@dataclass(frozen=True)
class SupposedGame:
    """One perspective's view of the game: same players and strategies,
    payoffs replaced by that perspective's supposed payoffs."""

    perspective: int
    game: Game


def build_supposed_game(game: Game, beliefs: BeliefState, perspective: int) -> SupposedGame:
    """Transform a game into one perspective's supposed game.

    Deterministic: the payoff order follows the source game's profile
    order.  Requires a valid BeliefState.
    """
    require_valid_beliefs(beliefs, game.n_players)
    if not 0 <= perspective < game.n_players:
        raise IndexError(f"perspective {perspective} out of range")
    payoffs = tuple(
        supposed_payoff_vector(game, beliefs, perspective, profile)
        for profile in game.profiles()
    )
    return SupposedGame(perspective, game.replace_payoffs(payoffs))


def attitude_matrix(beliefs: BeliefState) -> tuple[tuple[Attitude, ...], ...]:
    """Classify every true relationship value."""
    return tuple(tuple(classify_attitude(v) for v in row) for row in beliefs.relationships)
