"""FastAPI service wrapping the core analysis package.

Run with ``uvicorn relgames.service:app``.  Domain validation failures
map to 400, analysis failures (no selectable equilibrium, game too
large) to 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import builtin
from ..documents import DocumentError, parse_document
from ..dynamics import FixedPolicy, RepeatedGameConfig, SimulationError, parse_policy_spec, simulate
from ..equilibrium import EquilibriumSelectionError, GameTooLargeError
from ..rational import RationalFormatError
from ..reports import (
    analysis_report,
    bargain_outcome_record,
    bargain_round_records,
    simulation_records,
)
from ..ultimatum import UltimatumConfig, bargain
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    ExampleResponse,
    SimulateRequest,
    SimulateResponse,
    UltimatumRequest,
    UltimatumResponse,
)

app = FastAPI(
    title="relgames",
    description="Analysis of games with relationship-weighted payoffs",
    version="0.1.0",
)


def _load(document):
    try:
        return parse_document(document.model_dump(exclude_none=True))
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def _parse_policies(game, mapping):
    policies = [FixedPolicy() for _ in game.players]
    for name, spec in mapping.items():
        policies[game.player_index(name)] = parse_policy_spec(spec)
    return tuple(policies)


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/examples")
def examples():
    return {"names": list(builtin.example_names())}


@app.get("/examples/{name}", response_model=ExampleResponse, response_model_exclude_none=True)
def example(name: str):
    if name in builtin.GAME_EXAMPLES:
        return {"name": name, "kind": "game", "document": builtin.game_document(name)}
    if name in builtin.ULTIMATUM_EXAMPLES:
        return {"name": name, "kind": "ultimatum", "settings": builtin.ultimatum_settings(name)}
    raise HTTPException(status_code=404, detail=f"unknown example {name!r}")


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(request: AnalyzeRequest):
    game, beliefs = _load(request.game)
    perspective = None
    if request.perspective is not None:
        try:
            perspective = game.player_index(request.perspective)
        except KeyError as exc:
            raise HTTPException(status_code=400, detail=str(exc.args[0])) from None
    try:
        return analysis_report(game, beliefs, perspective)
    except (EquilibriumSelectionError, GameTooLargeError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None


@app.post("/simulate", response_model=SimulateResponse)
def run_simulation(request: SimulateRequest):
    game, beliefs = _load(request.game)
    try:
        policies = _parse_policies(game, request.policies)
        config = RepeatedGameConfig(game, beliefs, request.rounds, policies)
    except KeyError as exc:
        raise HTTPException(status_code=400, detail=str(exc.args[0])) from None
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    try:
        trace = simulate(config)
    except SimulationError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return {
        "rounds": simulation_records(game, trace),
        "stopped_early": trace.stopped_early,
    }


@app.post("/ultimatum", response_model=UltimatumResponse)
def run_ultimatum(request: UltimatumRequest):
    try:
        config = UltimatumConfig(
            r_rc=request.r_rc,
            r_cr=request.r_cr,
            row_belief_cr=request.belief_cr,
            col_belief_rc=request.belief_rc,
            offers=None if request.offers is None else tuple(request.offers),
            max_rounds=request.max_rounds,
        )
    except (RationalFormatError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    outcome = bargain(config)
    return {
        "rounds": bargain_round_records(config, outcome),
        "outcome": bargain_outcome_record(config, outcome),
    }
