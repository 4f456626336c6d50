"""Repeated play with relationship-belief updating.

Each round every player solves their own supposed game, plays their
component of its first equilibrium, observes the realized actions, and
then (depending on policy) narrows an interval estimate of the
opponent's relationship toward them.  Updates for all players apply
from the same pre-round beliefs; observers only ever touch their own
belief slice (and, for the mirroring policy, their own relationship
row), so the order of application cannot matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .equilibrium import (
    AssembledProfile,
    EquilibriumSelectionError,
    assemble_profile,
)
from .model import (
    BeliefState,
    Game,
    require_valid_beliefs,
    supposed_payoff_vector,
)
from .rational import Interval, hull, linear_solution_set, intersect_all, parse_rational


class SimulationError(RuntimeError):
    """A round failed; the message carries the round index."""


ESTIMATE_RULES = ("midpoint", "lower", "upper")


@dataclass(frozen=True)
class FixedPolicy:
    """Never changes any belief."""


@dataclass(frozen=True)
class RationalizingIntervalPolicy:
    """Track each opponent's relationship in an interval.

    After every round the stored interval is intersected with the set of
    values under which the observed action could have been a best
    response; the point estimate is recomputed from the interval by
    ``estimate_rule``.  An empty intersection resets the interval to the
    fresh observation's interval.
    """

    lower: Fraction = Fraction(0)
    upper: Fraction = Fraction(1)
    estimate_rule: str = "midpoint"

    def __post_init__(self):
        object.__setattr__(self, "lower", parse_rational(self.lower))
        object.__setattr__(self, "upper", parse_rational(self.upper))
        if self.lower > self.upper:
            raise ValueError("interval prior needs lower <= upper")
        if self.estimate_rule not in ESTIMATE_RULES:
            raise ValueError(f"unknown estimate rule {self.estimate_rule!r}")


@dataclass(frozen=True)
class TitForTatMirrorPolicy(RationalizingIntervalPolicy):
    """Interval tracking plus mirroring: after updating the estimate of
    the opponent's relationship, set the own relationship to that same
    value (and the own belief slice with it, keeping beliefs valid)."""


UpdatePolicy = FixedPolicy | RationalizingIntervalPolicy | TitForTatMirrorPolicy


@dataclass(frozen=True)
class EntryChange:
    kind: str  # "relationship" | "supposed"
    indices: tuple
    value: Fraction


@dataclass(frozen=True)
class BeliefUpdate:
    """Annotation for one observer's update after one round."""

    observer: int
    opponent: int
    observed: int
    inferred: Interval  # what the observation alone allows, within the prior box
    interval: Interval  # stored interval after intersection / reset
    estimate: Fraction
    reset: bool
    changed: tuple[EntryChange, ...]


@dataclass(frozen=True)
class RoundRecord:
    round_index: int  # 1-based
    profile: tuple
    material: tuple[Fraction, ...]
    supposed: tuple[tuple[Fraction, ...], ...]  # per perspective, per target
    beliefs: BeliefState  # after updates; used in the next round
    updates: tuple[BeliefUpdate, ...]


@dataclass(frozen=True)
class SimulationTrace:
    rounds: tuple[RoundRecord, ...]
    stopped_early: bool


@dataclass(frozen=True)
class RepeatedGameConfig:
    game: Game
    beliefs: BeliefState
    rounds: int
    policies: tuple
    stop_when: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rounds < 1:
            raise ValueError("rounds must be at least 1")
        policies = tuple(self.policies)
        if len(policies) != self.game.n_players:
            raise ValueError("one update policy per player is required")
        if self.game.n_players != 2 and any(
            isinstance(p, RationalizingIntervalPolicy) for p in policies
        ):
            raise ValueError("interval-inference policies need a two-player stage game")
        require_valid_beliefs(self.beliefs, self.game.n_players)
        object.__setattr__(self, "policies", policies)


def parse_policy_spec(spec: str):
    """Parse a policy string: ``fixed``, ``titfortat[:lo,hi]`` or
    ``rationalize[:lo,hi]``; bounds are rationals, default [0, 1]."""
    name, _, params = spec.partition(":")
    if name == "fixed":
        if params:
            raise ValueError("policy 'fixed' takes no parameters")
        return FixedPolicy()
    if name in ("titfortat", "rationalize"):
        cls = TitForTatMirrorPolicy if name == "titfortat" else RationalizingIntervalPolicy
        if not params:
            return cls()
        parts = params.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected {name}:lo,hi, got {spec!r}")
        return cls(parse_rational(parts[0]), parse_rational(parts[1]))
    raise ValueError(
        f"unknown policy {name!r}; use fixed, titfortat[:lo,hi] or rationalize[:lo,hi]"
    )


def rationalizing_interval(
    game: Game,
    observer: int,
    actor: int,
    action: int,
    lower: Fraction = Fraction(0),
    upper: Fraction = Fraction(1),
) -> Interval:
    """Relationship values under which the observed action was rational.

    The set of r = R[actor][observer] such that ``action`` is a weak
    best response in the actor's supposed game under *some* predicted
    observer action (the observer cannot know the actor's second-order
    beliefs, so the quantifier is existential).  The result is clamped
    to the prior box [lower, upper]; a disconnected union is replaced by
    its hull, which can only widen the inference, never lose the true
    value.
    """
    if game.n_players != 2:
        raise ValueError("rationalizing intervals need a two-player stage game")
    box = Interval.closed(parse_rational(lower), parse_rational(upper))
    per_prediction = []
    for predicted in range(game.shape[observer]):
        constraints = []
        for alternative in range(game.shape[actor]):
            if alternative == action:
                continue
            chosen = [0, 0]
            other = [0, 0]
            chosen[actor], chosen[observer] = action, predicted
            other[actor], other[observer] = alternative, predicted
            u_chosen = game.payoff(tuple(chosen))
            u_other = game.payoff(tuple(other))
            constraints.append(
                linear_solution_set(
                    u_chosen[actor] - u_other[actor],
                    u_chosen[observer] - u_other[observer],
                )
            )
        per_prediction.append(intersect_all(constraints))
    return hull(per_prediction).intersect(box)


def play_round(game: Game, beliefs: BeliefState) -> tuple[tuple, AssembledProfile]:
    """One round of play: every player acts on their own supposed game.

    The actions are the components of the assembled per-player profile;
    repeated play needs pure actions, so a player whose selected
    equilibrium is mixed is an error naming that player.
    """
    assembled = assemble_profile(game, beliefs)
    profile = assembled.profile
    if profile is None:
        for player, component in enumerate(assembled.components):
            if not isinstance(component, int):
                raise EquilibriumSelectionError(
                    f"player {game.players[player]!r} selected a mixed equilibrium; "
                    "repeated play requires a pure action"
                )
    return profile, assembled


def apply_update(
    policy,
    game: Game,
    beliefs: BeliefState,
    observer: int,
    profile,
    intervals=None,
):
    """Apply one observer's policy to one completed round.

    ``intervals`` maps each opponent to the currently stored interval
    (missing entries start at the policy's prior box).  Returns the new
    beliefs, the new interval map, and an annotation (None for the fixed
    policy).
    """
    if isinstance(policy, FixedPolicy):
        return beliefs, dict(intervals or {}), None
    if not isinstance(policy, RationalizingIntervalPolicy):
        raise TypeError(f"unknown update policy {policy!r}")

    opponent = 1 - observer
    box = Interval.closed(policy.lower, policy.upper)
    stored = dict(intervals or {})
    current = stored.get(opponent, box)
    fresh = rationalizing_interval(
        game, observer, opponent, profile[opponent], policy.lower, policy.upper
    )
    if fresh.is_empty:
        # observation not rationalizable anywhere in the prior box: nothing
        # to learn under this model, keep the current interval
        estimate = beliefs.supposed[observer][opponent][observer]
        return (
            beliefs,
            stored,
            BeliefUpdate(observer, opponent, profile[opponent], fresh, current, estimate, False, ()),
        )
    narrowed = current.intersect(fresh)
    reset = narrowed.is_empty
    if reset:
        narrowed = fresh
    if policy.estimate_rule == "midpoint":
        estimate = narrowed.midpoint()
    elif policy.estimate_rule == "lower":
        estimate = narrowed.lo
    else:
        estimate = narrowed.hi
    stored[opponent] = narrowed

    changed = [EntryChange("supposed", (observer, opponent, observer), estimate)]
    supposed_updates = [(observer, opponent, observer, estimate)]
    relationship_updates = []
    if isinstance(policy, TitForTatMirrorPolicy):
        relationship_updates.append((observer, opponent, estimate))
        supposed_updates.append((observer, observer, opponent, estimate))
        changed.append(EntryChange("relationship", (observer, opponent), estimate))
        changed.append(EntryChange("supposed", (observer, observer, opponent), estimate))
    updated = beliefs.with_entries(relationship_updates, supposed_updates)
    annotation = BeliefUpdate(
        observer, opponent, profile[opponent], fresh, narrowed, estimate, reset, tuple(changed)
    )
    return updated, stored, annotation


def simulate(config: RepeatedGameConfig) -> SimulationTrace:
    """Run the repeated game and record everything.

    Per round: play, record material and per-perspective supposed
    payoffs, then apply every player's policy from the same pre-round
    beliefs.  The beliefs stored in record t are the ones used in round
    t + 1.  Deterministic: equal configs produce identical traces.
    """
    game = config.game
    beliefs = config.beliefs
    states = [dict() for _ in range(game.n_players)]
    records = []
    stopped = False
    for round_index in range(1, config.rounds + 1):
        try:
            profile, _ = play_round(game, beliefs)
        except EquilibriumSelectionError as exc:
            raise SimulationError(f"round {round_index}: {exc}") from exc
        material = game.payoff(profile)
        supposed = tuple(
            supposed_payoff_vector(game, beliefs, perspective, profile)
            for perspective in range(game.n_players)
        )
        updates = []
        next_beliefs = beliefs
        for observer, policy in enumerate(config.policies):
            next_beliefs, states[observer], annotation = apply_update(
                policy, game, next_beliefs, observer, profile, states[observer]
            )
            if annotation is not None:
                updates.append(annotation)
        beliefs = next_beliefs
        record = RoundRecord(round_index, profile, material, supposed, beliefs, tuple(updates))
        records.append(record)
        if config.stop_when is not None and config.stop_when(record):
            stopped = True
            break
    return SimulationTrace(tuple(records), stopped)
