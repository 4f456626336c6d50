"""Dominance and equilibrium analysis on exact-rational games.

Everything here operates on ordinary `Game` objects and is typically
applied to supposed games.  Enumeration orders are fixed (profiles
ascending by index, supports ascending by size then index) so repeated
runs and downstream selections are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    BeliefState,
    Game,
    build_supposed_game,
    supposed_payoff,
)
from .rational import (
    Interval,
    complement,
    format_rational,
    intersect_all,
    linear_solution_set,
    sort_intervals,
)

MixedProfile = tuple  # one probability vector per player

MIXED_STRATEGY_BUDGET = 8


class GameTooLargeError(ValueError):
    """Support enumeration is limited to small two-player games."""


class EquilibriumSelectionError(RuntimeError):
    """No equilibrium could be selected for some perspective."""


# ---------------------------------------------------------------------------
# dominance


@dataclass(frozen=True)
class DominanceComparison:
    """One cell of a dominance certificate: the candidate's payoff against
    a rival strategy under one opponent profile."""

    strategy: int
    rival: int
    opponents: tuple
    payoff: Fraction
    rival_payoff: Fraction


@dataclass(frozen=True)
class DominanceResult:
    player: int
    kind: str  # "strict" | "weak" | "none"
    strategy: int | None
    comparisons: tuple[DominanceComparison, ...]


def _opponent_profiles(game: Game, player: int):
    ranges = [range(k) for i, k in enumerate(game.shape) if i != player]
    return itertools.product(*ranges)


def _full_profile(player: int, own: int, opponents) -> tuple:
    profile = list(opponents)
    profile.insert(player, own)
    return tuple(profile)


def dominant_strategies(game: Game, player: int) -> DominanceResult:
    """Find the player's dominant strategy, if any, with certificates.

    Strict: beats every rival strategy against every opponent profile.
    Weak: never worse than any rival, and better somewhere against each.
    Boundary cases (ties in some cell) are therefore weak but not strict.
    """
    own = range(game.shape[player])
    best_kind, best_strategy, best_cmp = "none", None, ()
    for s in own:
        strict = True
        weak = True
        comparisons = []
        for t in own:
            if t == s:
                continue
            somewhere_better = False
            for opponents in _opponent_profiles(game, player):
                u_s = game.payoff_to(_full_profile(player, s, opponents), player)
                u_t = game.payoff_to(_full_profile(player, t, opponents), player)
                comparisons.append(DominanceComparison(s, t, tuple(opponents), u_s, u_t))
                if u_s < u_t:
                    weak = False
                    strict = False
                if u_s <= u_t:
                    strict = False
                if u_s > u_t:
                    somewhere_better = True
            if not somewhere_better:
                weak = False
            if not weak:
                break
        if strict:
            return DominanceResult(player, "strict", s, tuple(comparisons))
        if weak and best_kind == "none":
            best_kind, best_strategy, best_cmp = "weak", s, tuple(comparisons)
    return DominanceResult(player, best_kind, best_strategy, best_cmp)


# ---------------------------------------------------------------------------
# pure equilibria


def is_pure_nash(game: Game, profile) -> bool:
    """No player has a strictly improving unilateral deviation."""
    for player in range(game.n_players):
        current = game.payoff_to(profile, player)
        for alternative in range(game.shape[player]):
            if alternative == profile[player]:
                continue
            deviated = list(profile)
            deviated[player] = alternative
            if game.payoff_to(tuple(deviated), player) > current:
                return False
    return True


def enumerate_pure_nash(game: Game) -> list[tuple]:
    """All pure equilibria, ascending by profile index."""
    return [tuple(profile) for profile in game.profiles() if is_pure_nash(game, profile)]


# ---------------------------------------------------------------------------
# mixed equilibria (two players, support enumeration, exact solves)


def _solve_exact(rows, rhs, n_unknowns, fill: Fraction):
    """Solve a small rational linear system by Gaussian elimination.

    Returns one solution with free variables set to ``fill`` (a
    deterministic representative for underdetermined systems), or None
    when inconsistent.
    """
    matrix = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_cols = []
    pivot_row = 0
    for col in range(n_unknowns):
        pivot = None
        for r in range(pivot_row, len(matrix)):
            if matrix[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        scale = matrix[pivot_row][col]
        matrix[pivot_row] = [v / scale for v in matrix[pivot_row]]
        for r in range(len(matrix)):
            if r != pivot_row and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == len(matrix):
            break
    for r in range(pivot_row, len(matrix)):
        if matrix[r][n_unknowns] != 0:
            return None
    solution = [fill] * n_unknowns
    for r, col in enumerate(pivot_cols):
        value = matrix[r][n_unknowns]
        for other in range(col + 1, n_unknowns):
            if other not in pivot_cols:
                value -= matrix[r][other] * fill
        solution[col] = value
    return solution


def _indifference_solution(payoff_rows, own_support, opp_support):
    """Opponent mixture making every own-support row equally good.

    ``payoff_rows[i][j]`` is the payoff of own strategy i against
    opponent strategy j.  Returns probabilities over ``opp_support`` or
    None.
    """
    k = len(opp_support)
    rows = []
    rhs = []
    anchor = own_support[0]
    for i in own_support[1:]:
        rows.append([payoff_rows[anchor][j] - payoff_rows[i][j] for j in opp_support])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * k)
    rhs.append(Fraction(1))
    return _solve_exact(rows, rhs, k, fill=Fraction(1, k))


def _expand(probs, support, size):
    full = [Fraction(0)] * size
    for value, index in zip(probs, support):
        full[index] = value
    return tuple(full)


def _mixed_value(payoff_rows, strategy, mixture):
    return sum(payoff_rows[strategy][j] * q for j, q in enumerate(mixture))


def _supports(size):
    for k in range(1, size + 1):
        yield from itertools.combinations(range(size), k)


def enumerate_mixed_nash_2p(game: Game) -> list[MixedProfile]:
    """All equilibria found by support enumeration with exact solves.

    For every pair of supports, solve the indifference equations for
    each side, then keep the candidate only if it is a verified
    equilibrium with exactly that support (pure equilibria appear as
    degenerate mixtures).  Underdetermined (degenerate) systems yield
    one deterministic representative per support.  Supports are scanned
    ascending by size then index, which fixes the output order.
    """
    if game.n_players != 2:
        raise ValueError("mixed enumeration supports two-player games only")
    m, n = game.shape
    if m > MIXED_STRATEGY_BUDGET or n > MIXED_STRATEGY_BUDGET:
        raise GameTooLargeError(
            f"game too large: support enumeration is limited to "
            f"{MIXED_STRATEGY_BUDGET} strategies per player (got {m}x{n})"
        )
    row_payoffs = [[game.payoff_to((i, j), 0) for j in range(n)] for i in range(m)]
    col_payoffs = [[game.payoff_to((i, j), 1) for i in range(m)] for j in range(n)]

    results = []
    for s1 in _supports(m):
        for s2 in _supports(n):
            q_probs = _indifference_solution(row_payoffs, s1, s2)
            if q_probs is None:
                continue
            p_probs = _indifference_solution(col_payoffs, s2, s1)
            if p_probs is None:
                continue
            p = _expand(p_probs, s1, m)
            q = _expand(q_probs, s2, n)
            if any(v <= 0 for v in p_probs) or any(v <= 0 for v in q_probs):
                continue
            row_values = [_mixed_value(row_payoffs, i, q) for i in range(m)]
            col_values = [_mixed_value(col_payoffs, j, p) for j in range(n)]
            row_best = max(row_values)
            col_best = max(col_values)
            if any(row_values[i] != row_best for i in s1):
                continue
            if any(col_values[j] != col_best for j in s2):
                continue
            results.append((p, q))
    return results


# ---------------------------------------------------------------------------
# per-player equilibrium assembly


@dataclass(frozen=True)
class ComponentChoice:
    """Where one player's assembled action came from: the first
    equilibrium (pure before mixed) of their own supposed game."""

    perspective: int
    kind: str  # "pure" | "mixed"
    pure: tuple | None
    mixed: MixedProfile | None
    order_index: int


@dataclass(frozen=True)
class AssembledProfile:
    """Each player's own-component of their own supposed game's first
    equilibrium, assembled into one profile.

    Components are strategy indices when the selected equilibrium is
    pure, probability vectors otherwise; ``profile`` is set only when
    every component is pure.
    """

    components: tuple
    provenance: tuple[ComponentChoice, ...]

    @property
    def profile(self) -> tuple | None:
        if all(isinstance(c, int) for c in self.components):
            return tuple(self.components)
        return None


def assemble_profile(game: Game, beliefs: BeliefState) -> AssembledProfile:
    """Solve every player's supposed game and combine their own parts.

    Selection is deterministic: pure equilibria ascending by profile
    index first, then mixed equilibria in support order (two-player
    games only).  Under complete information all supposed games agree,
    so every player selects the same equilibrium and the assembled
    profile is an equilibrium of the shared game.
    """
    components = []
    provenance = []
    for player in range(game.n_players):
        supposed = build_supposed_game(game, beliefs, player)
        pures = enumerate_pure_nash(supposed.game)
        if pures:
            chosen = pures[0]
            components.append(chosen[player])
            provenance.append(ComponentChoice(player, "pure", chosen, None, 0))
            continue
        if game.n_players != 2:
            raise EquilibriumSelectionError(
                f"no pure equilibrium in the supposed game of player "
                f"{game.players[player]!r}; mixed fallback needs a two-player game"
            )
        mixed = enumerate_mixed_nash_2p(supposed.game)
        if not mixed:
            raise EquilibriumSelectionError(
                f"no equilibrium found in the supposed game of player {game.players[player]!r}"
            )
        chosen = mixed[0]
        components.append(chosen[player])
        provenance.append(ComponentChoice(player, "mixed", None, chosen, 0))
    return AssembledProfile(tuple(components), tuple(provenance))


# ---------------------------------------------------------------------------
# per-player checks


@dataclass(frozen=True)
class SubjectiveCheck:
    """Whether the player's action is their component of some equilibrium
    of their own supposed game."""

    player: int
    passed: bool
    witness: tuple | None  # pure profile or mixed profile of the supposed game


def subjective_check(game: Game, beliefs: BeliefState, profile) -> tuple[SubjectiveCheck, ...]:
    results = []
    for player in range(game.n_players):
        supposed = build_supposed_game(game, beliefs, player)
        witness = None
        for equilibrium in enumerate_pure_nash(supposed.game):
            if equilibrium[player] == profile[player]:
                witness = equilibrium
                break
        if witness is None and game.n_players == 2:
            try:
                for equilibrium in enumerate_mixed_nash_2p(supposed.game):
                    if equilibrium[player][profile[player]] == 1:
                        witness = equilibrium
                        break
            except GameTooLargeError:
                pass
        results.append(SubjectiveCheck(player, witness is not None, witness))
    return tuple(results)


@dataclass(frozen=True)
class ObjectiveCheck:
    """Whether the player's action maximizes their own supposed payoff
    against the actions actually played."""

    player: int
    passed: bool
    played: int
    played_payoff: Fraction
    best: int
    best_payoff: Fraction
    opponents: tuple

    def describe(self, game: Game) -> str:
        opp_labels = ",".join(
            game.strategies[i][s]
            for i, s in zip(
                (i for i in range(game.n_players) if i != self.player), self.opponents
            )
        )
        played_label = game.strategies[self.player][self.played]
        if self.passed:
            return f"{played_label} is a best response against {opp_labels}"
        best_label = game.strategies[self.player][self.best]
        return (
            f"{best_label} yields {format_rational(self.best_payoff)} > "
            f"{format_rational(self.played_payoff)} against {opp_labels}"
        )


def objective_check(game: Game, beliefs: BeliefState, profile) -> tuple[ObjectiveCheck, ...]:
    results = []
    for player in range(game.n_players):
        played = profile[player]
        played_payoff = supposed_payoff(game, beliefs, player, player, profile)
        best, best_payoff = played, played_payoff
        for alternative in range(game.shape[player]):
            deviated = list(profile)
            deviated[player] = alternative
            value = supposed_payoff(game, beliefs, player, player, tuple(deviated))
            if value > best_payoff:
                best, best_payoff = alternative, value
        opponents = tuple(s for i, s in enumerate(profile) if i != player)
        results.append(
            ObjectiveCheck(
                player,
                best_payoff <= played_payoff,
                played,
                played_payoff,
                best,
                best_payoff,
                opponents,
            )
        )
    return tuple(results)


# ---------------------------------------------------------------------------
# 2x2 threshold regions


@dataclass(frozen=True)
class BeliefRule:
    """In the belief-dependent region: when the row player's belief about
    the column player's relationship lies in ``belief_region``, the
    column strategy ``predicted`` is dominant in the row player's view
    and ``response`` is the row player's best reply to it."""

    belief_region: Interval
    predicted: int
    response: int


@dataclass(frozen=True)
class ThresholdRegionReport:
    """Relationship-value regions over which each row strategy dominates.

    ``weak_regions[s]`` solves the per-cell >= inequalities for strategy
    s against the other strategy; ``strict_regions`` uses > instead, so
    boundary values satisfy weak but not strict.  ``middle_regions`` are
    the relationship values where neither strategy dominates and play
    depends on beliefs, governed by ``belief_rules``.
    """

    weak_regions: tuple[Interval, Interval]
    strict_regions: tuple[Interval, Interval]
    middle_regions: tuple[Interval, ...]
    belief_rules: tuple[BeliefRule, ...]


def _row_dominance_region(game: Game, s: int, t: int, strict: bool) -> Interval:
    # row's own supposed payoff is u_row + r * u_col: affine in r cell by cell
    parts = []
    for col in (0, 1):
        u_s = game.payoff((s, col))
        u_t = game.payoff((t, col))
        parts.append(linear_solution_set(u_s[0] - u_t[0], u_s[1] - u_t[1], strict))
    return intersect_all(parts)


def _column_dominance_region(game: Game, s: int, t: int) -> Interval:
    # column's payoff in the row player's view is u_col + belief * u_row
    parts = []
    for row in (0, 1):
        u_s = game.payoff((row, s))
        u_t = game.payoff((row, t))
        parts.append(linear_solution_set(u_s[1] - u_t[1], u_s[0] - u_t[0], strict=False))
    return intersect_all(parts)


def _response_region(game: Game, own: int, other: int, column: int) -> Interval:
    u_own = game.payoff((own, column))
    u_other = game.payoff((other, column))
    return linear_solution_set(u_own[0] - u_other[0], u_own[1] - u_other[1], strict=True)


def _covers(region: Interval, pieces) -> bool:
    for piece in pieces:
        probe = piece.intersect(region)
        if probe != piece:
            return False
    return True


def threshold_regions(game: Game) -> ThresholdRegionReport:
    """Symbolic dominance thresholds for the row player of a 2x2 game.

    Solves, in the row player's relationship value r, the two per-cell
    dominance inequalities of each row strategy; reports the leftover
    belief-dependent region together with the rules mapping the row
    player's belief about the column player to a predicted column action
    and the row player's reply.
    """
    if game.n_players != 2 or game.shape != (2, 2):
        raise ValueError("threshold regions require a 2x2 two-player game")
    weak = (
        _row_dominance_region(game, 0, 1, strict=False),
        _row_dominance_region(game, 1, 0, strict=False),
    )
    strict = (
        _row_dominance_region(game, 0, 1, strict=True),
        _row_dominance_region(game, 1, 0, strict=True),
    )
    middle = sort_intervals(
        a.intersect(b) for a in complement(weak[0]) for b in complement(weak[1])
    )
    rules = []
    if middle:
        for predicted in (0, 1):
            belief_region = _column_dominance_region(game, predicted, 1 - predicted)
            if belief_region.is_empty:
                continue
            response = None
            for candidate in (0, 1):
                if _covers(_response_region(game, candidate, 1 - candidate, predicted), middle):
                    response = candidate
                    break
            if response is not None:
                rules.append(BeliefRule(belief_region, predicted, response))
    return ThresholdRegionReport(weak, strict, middle, tuple(rules))
