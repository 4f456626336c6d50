"""Independent brute-force oracles used to cross-check the package.

Everything here recomputes results from first principles (dict-based
payoff tables, direct maximization) without reusing the package's
enumeration code paths, so agreement between the two is meaningful.
"""

from fractions import Fraction
from itertools import product

from relgames import Game


def payoff_table(game: Game) -> dict:
    """Profile -> payoff vector, built independently of profile indexing."""
    table = {}
    ranges = [range(k) for k in game.shape]
    for profile in product(*ranges):
        table[profile] = game.payoff(profile)
    return table


def brute_force_pure_nash(game: Game) -> list:
    """Pure equilibria via direct best-response maximization."""
    table = payoff_table(game)
    equilibria = []
    for profile, payoffs in sorted(table.items()):
        stable = True
        for player in range(game.n_players):
            best = max(
                table[profile[:player] + (alt,) + profile[player + 1 :]][player]
                for alt in range(game.shape[player])
            )
            if payoffs[player] < best:
                stable = False
                break
        if stable:
            equilibria.append(profile)
    return equilibria


def oracle_supposed_payoffs(game: Game, beliefs, perspective: int) -> dict:
    """Profile -> supposed payoff vector, computed directly from weights."""
    table = {}
    for profile, material in payoff_table(game).items():
        table[profile] = tuple(
            sum(
                beliefs.supposed[perspective][target][m] * material[m]
                for m in range(game.n_players)
            )
            for target in range(game.n_players)
        )
    return table


def supposed_game_from_oracle(game: Game, beliefs, perspective: int) -> Game:
    payoffs = [None] * len(game.payoffs)
    for profile, vector in oracle_supposed_payoffs(game, beliefs, perspective).items():
        payoffs[game.profile_index(profile)] = vector
    return Game(game.players, game.strategies, tuple(payoffs))


def oracle_assembled_actions(game: Game, beliefs) -> tuple:
    """Each player's component of the first pure equilibrium (ascending
    profile order) of their own supposed game; None when some player's
    supposed game has no pure equilibrium."""
    actions = []
    for player in range(game.n_players):
        supposed = supposed_game_from_oracle(game, beliefs, player)
        equilibria = brute_force_pure_nash(supposed)
        if not equilibria:
            return None
        actions.append(equilibria[0][player])
    return tuple(actions)


def expected_payoff(game: Game, mixed, player: int) -> Fraction:
    """Expected payoff under a mixed profile by direct summation."""
    total = Fraction(0)
    for profile, payoffs in payoff_table(game).items():
        weight = Fraction(1)
        for i, s in enumerate(profile):
            weight *= mixed[i][s]
        total += weight * payoffs[player]
    return total


def is_mixed_equilibrium(game: Game, mixed) -> bool:
    """No player gains from any pure deviation; supports are best responses."""
    for player in range(game.n_players):
        probs = mixed[player]
        if sum(probs) != 1 or any(p < 0 for p in probs):
            return False
        value = expected_payoff(game, mixed, player)
        for alt in range(game.shape[player]):
            pure = tuple(Fraction(1) if s == alt else Fraction(0) for s in range(game.shape[player]))
            deviated = mixed[:player] + (pure,) + mixed[player + 1 :]
            alt_value = expected_payoff(game, deviated, player)
            if alt_value > value:
                return False
            if probs[alt] > 0 and alt_value != value:
                return False
    return True


def random_rational(rng, lo=-3, hi=6, max_denominator=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_denominator))


def random_game(rng, max_players=3, max_strategies=3) -> Game:
    n = rng.randint(2, max_players)
    names = tuple(f"p{i}" for i in range(n))
    strategies = tuple(
        tuple(f"s{j}" for j in range(rng.randint(2, max_strategies))) for _ in range(n)
    )
    count = 1
    for s in strategies:
        count *= len(s)
    payoffs = tuple(tuple(random_rational(rng) for _ in range(n)) for _ in range(count))
    return Game(names, strategies, payoffs)


def random_beliefs(rng, n, complete_information=False):
    """A random valid BeliefState: unit diagonals, own slices mirrored."""
    from relgames import BeliefState

    one = Fraction(1)
    rel = [
        [one if i == j else random_rational(rng, lo=-2, hi=4, max_denominator=4) for j in range(n)]
        for i in range(n)
    ]
    if complete_information:
        return BeliefState.complete_information(tuple(map(tuple, rel)))
    sup = []
    for k in range(n):
        slice_ = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(one)
                elif i == k:
                    row.append(rel[i][j])
                else:
                    row.append(random_rational(rng, lo=-2, hi=4, max_denominator=4))
            slice_.append(row)
        sup.append(tuple(map(tuple, slice_)))
    return BeliefState(tuple(map(tuple, rel)), tuple(sup))
