"""Game document loading and serialization.

A game document is JSON: player names, per-player strategy labels, a
dense payoff array in profile order (last player fastest), the
relationship matrix, and optionally the full belief tensor.  All
numbers are exact rationals written as "p/q" or integer strings; float
literals are rejected.  A document without the belief tensor means
complete information: every player's slice equals the relationship
matrix.
"""

from __future__ import annotations

import json

from .model import (
    BeliefShapeError,
    BeliefState,
    Game,
    validate_beliefs,
)
from .rational import RationalFormatError, format_rational

REQUIRED_KEYS = ("players", "strategies", "payoffs", "relationships")


class DocumentError(ValueError):
    """A document failed to parse or violates a model invariant."""


def _reject_float(literal: str):
    raise DocumentError(
        f'float literal {literal} is not allowed; write rationals as "p/q" or integer strings'
    )


def loads_document(text: str):
    """Parse a JSON document string into a validated Game and BeliefState."""
    try:
        data = json.loads(text, parse_float=_reject_float)
    except DocumentError:
        raise
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return parse_document(data)


def load_game(path):
    """Load a game document from a file path."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return loads_document(text)


def parse_document(data):
    """Validate an already-parsed document object."""
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise DocumentError(f"missing document keys: {', '.join(missing)}")

    try:
        game = Game(tuple(data["players"]), tuple(map(tuple, data["strategies"])), tuple(map(tuple, data["payoffs"])))
    except RationalFormatError as exc:
        raise DocumentError(f"payoffs: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad game structure: {exc}") from None

    try:
        relationships = tuple(map(tuple, data["relationships"]))
        supposed = data.get("supposed")
        if supposed is None:
            beliefs = BeliefState.complete_information(relationships)
        else:
            beliefs = BeliefState(
                relationships,
                tuple(tuple(map(tuple, slice_)) for slice_ in supposed),
            )
    except RationalFormatError as exc:
        raise DocumentError(f"relationships: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad belief structure: {exc}") from None

    try:
        violations = validate_beliefs(beliefs, game.n_players)
    except BeliefShapeError as exc:
        raise DocumentError(str(exc)) from None
    if violations:
        raise DocumentError("; ".join(str(v) for v in violations))
    return game, beliefs


def document_dict(game: Game, beliefs: BeliefState) -> dict:
    """Serialize to the document structure, rationals in lowest terms."""
    return {
        "players": list(game.players),
        "strategies": [list(s) for s in game.strategies],
        "payoffs": [[format_rational(v) for v in vec] for vec in game.payoffs],
        "relationships": [[format_rational(v) for v in row] for row in beliefs.relationships],
        "supposed": [
            [[format_rational(v) for v in row] for row in slice_] for slice_ in beliefs.supposed
        ],
    }


def dumps_document(game: Game, beliefs: BeliefState) -> str:
    return json.dumps(document_dict(game, beliefs), indent=2, sort_keys=True)
