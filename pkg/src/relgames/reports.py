"""JSON-ready report structures shared by the CLI and the HTTP service.

Every number is rendered as an exact-rational string ("p/q" or an
integer); builders emit plain dicts/lists so both the line-oriented CLI
records and the service response models can use them unchanged.
"""

from __future__ import annotations

from .dynamics import SimulationTrace
from .equilibrium import (
    GameTooLargeError,
    assemble_profile,
    dominant_strategies,
    enumerate_mixed_nash_2p,
    enumerate_pure_nash,
    objective_check,
    subjective_check,
)
from .model import BeliefState, Game, attitude_matrix, build_supposed_game
from .rational import Interval, format_rational
from .ultimatum import BargainingOutcome, UltimatumConfig, agreement_range


def interval_record(interval: Interval) -> dict:
    return {
        "lo": None if interval.lo is None else format_rational(interval.lo),
        "hi": None if interval.hi is None else format_rational(interval.hi),
        "lo_open": interval.lo_open,
        "hi_open": interval.hi_open,
        "empty": interval.is_empty,
    }


def _fmt_vector(values) -> list:
    return [format_rational(v) for v in values]


def _fmt_matrix(rows) -> list:
    return [_fmt_vector(row) for row in rows]


def _fmt_mixed_profile(game: Game, mixed) -> list:
    return [_fmt_vector(strategy) for strategy in mixed]


def _perspective_report(game: Game, beliefs: BeliefState, perspective: int) -> dict:
    supposed = build_supposed_game(game, beliefs, perspective).game
    dominance = []
    for player in range(game.n_players):
        result = dominant_strategies(supposed, player)
        dominance.append(
            {
                "player": game.players[player],
                "kind": result.kind,
                "strategy": None
                if result.strategy is None
                else game.strategies[player][result.strategy],
            }
        )
    pures = [list(supposed.labels(p)) for p in enumerate_pure_nash(supposed)]
    mixed = None
    note = None
    if game.n_players == 2:
        try:
            mixed = [
                _fmt_mixed_profile(game, profile) for profile in enumerate_mixed_nash_2p(supposed)
            ]
        except GameTooLargeError as exc:
            note = str(exc)
    else:
        note = "mixed enumeration is two-player only"
    return {
        "player": game.players[perspective],
        "payoffs": _fmt_matrix(supposed.payoffs),
        "dominance": dominance,
        "pure_equilibria": pures,
        "mixed_equilibria": mixed,
        "note": note,
    }


def analysis_report(game: Game, beliefs: BeliefState, perspective: int | None = None) -> dict:
    """The full analysis: attitudes, per-perspective supposed games,
    dominance, equilibria, the assembled profile with provenance, and
    both per-player checks of that profile."""
    wanted = range(game.n_players) if perspective is None else (perspective,)
    assembled = assemble_profile(game, beliefs)
    report = {
        "players": list(game.players),
        "strategies": [list(s) for s in game.strategies],
        "material": _fmt_matrix(game.payoffs),
        "relationships": _fmt_matrix(beliefs.relationships),
        "attitudes": [[a.value for a in row] for row in attitude_matrix(beliefs)],
        "perspectives": [_perspective_report(game, beliefs, k) for k in wanted],
    }
    provenance = []
    components = []
    for choice, component in zip(assembled.provenance, assembled.components):
        if choice.kind == "pure":
            equilibrium = list(game.labels(choice.pure))
            components.append(game.strategies[choice.perspective][component])
        else:
            equilibrium = _fmt_mixed_profile(game, choice.mixed)
            components.append(_fmt_vector(component))
        provenance.append(
            {
                "player": game.players[choice.perspective],
                "kind": choice.kind,
                "equilibrium": equilibrium,
                "order_index": choice.order_index,
            }
        )
    profile = assembled.profile
    report["assembled_profile"] = {
        "profile": None if profile is None else list(game.labels(profile)),
        "components": components,
        "provenance": provenance,
    }
    if profile is not None:
        report["subjective_check"] = [
            {
                "player": game.players[check.player],
                "passed": check.passed,
                "witness": None
                if check.witness is None
                else (
                    list(game.labels(check.witness))
                    if all(isinstance(v, int) for v in check.witness)
                    else _fmt_mixed_profile(game, check.witness)
                ),
            }
            for check in subjective_check(game, beliefs, profile)
        ]
        report["objective_check"] = [
            {
                "player": game.players[check.player],
                "passed": check.passed,
                "played": game.strategies[check.player][check.played],
                "played_payoff": format_rational(check.played_payoff),
                "best": game.strategies[check.player][check.best],
                "best_payoff": format_rational(check.best_payoff),
                "detail": check.describe(game),
            }
            for check in objective_check(game, beliefs, profile)
        ]
    else:
        report["subjective_check"] = None
        report["objective_check"] = None
    return report


def _belief_record(beliefs: BeliefState) -> dict:
    return {
        "relationships": _fmt_matrix(beliefs.relationships),
        "supposed_relationships": [_fmt_matrix(slice_) for slice_ in beliefs.supposed],
    }


def simulation_records(game: Game, trace: SimulationTrace) -> list[dict]:
    """One self-contained record per simulated round."""
    records = []
    for record in trace.rounds:
        updates = []
        for update in record.updates:
            updates.append(
                {
                    "player": game.players[update.observer],
                    "opponent": game.players[update.opponent],
                    "observed": game.strategies[update.opponent][update.observed],
                    "inferred": interval_record(update.inferred),
                    "interval": interval_record(update.interval),
                    "estimate": format_rational(update.estimate),
                    "reset": update.reset,
                    "changed": [
                        {
                            "kind": change.kind,
                            "indices": list(change.indices),
                            "value": format_rational(change.value),
                        }
                        for change in update.changed
                    ],
                }
            )
        entry = {
            "type": "round",
            "round": record.round_index,
            "actions": list(game.labels(record.profile)),
            "material": _fmt_vector(record.material),
            "supposed": _fmt_matrix(record.supposed),
            "updates": updates,
        }
        entry.update(_belief_record(record.beliefs))
        records.append(entry)
    return records


def bargain_round_records(config: UltimatumConfig, outcome: BargainingOutcome) -> list[dict]:
    return [
        {
            "type": "bargain-round",
            "round": r.round_index,
            "offer": format_rational(r.offer),
            "accepted": r.accepted,
            "row_threshold_bound": format_rational(r.row_threshold_bound),
            "column_cap_bound": format_rational(r.column_cap_bound),
        }
        for r in outcome.rounds
    ]


def bargain_outcome_record(config: UltimatumConfig, outcome: BargainingOutcome) -> dict:
    range_ = agreement_range(config.r_rc, config.r_cr)
    return {
        "type": "outcome",
        "result": "agreement" if outcome.agreement else "no-agreement",
        "offer": None if outcome.offer is None else format_rational(outcome.offer),
        "round": outcome.round_index,
        "reason": outcome.reason,
        "range": interval_record(range_.interval),
        "range_offers": _fmt_vector(range_.offers),
        "rounds_played": len(outcome.rounds),
    }
