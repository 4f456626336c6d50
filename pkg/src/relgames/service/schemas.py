"""Pydantic request and response models for the HTTP service.

Numeric fields are exact-rational strings (or plain ints on input);
floats are rejected at validation time to keep the exactness contract.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr

Rational = StrictInt | StrictStr


class GameDocumentModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    players: list[str]
    strategies: list[list[str]]
    payoffs: list[list[Rational]]
    relationships: list[list[Rational]]
    supposed: list[list[list[Rational]]] | None = None


class AnalyzeRequest(BaseModel):
    game: GameDocumentModel
    perspective: str | None = None


class SimulateRequest(BaseModel):
    game: GameDocumentModel
    rounds: int = Field(ge=1)
    policies: dict[str, str] = Field(default_factory=dict)


class UltimatumRequest(BaseModel):
    r_rc: Rational = "0"
    r_cr: Rational = "0"
    belief_cr: Rational | None = None
    belief_rc: Rational | None = None
    offers: list[Rational] | None = None
    max_rounds: int = Field(default=100, ge=1)


class DominanceEntry(BaseModel):
    player: str
    kind: str
    strategy: str | None


class PerspectiveReport(BaseModel):
    player: str
    payoffs: list[list[str]]
    dominance: list[DominanceEntry]
    pure_equilibria: list[list[str]]
    mixed_equilibria: list[list[list[str]]] | None
    note: str | None


class ProvenanceEntry(BaseModel):
    player: str
    kind: str
    equilibrium: list[str] | list[list[str]]
    order_index: int


class AssembledProfileReport(BaseModel):
    profile: list[str] | None
    components: list[str | list[str]]
    provenance: list[ProvenanceEntry]


class SubjectiveEntry(BaseModel):
    player: str
    passed: bool
    witness: list[str] | list[list[str]] | None


class ObjectiveEntry(BaseModel):
    player: str
    passed: bool
    played: str
    played_payoff: str
    best: str
    best_payoff: str
    detail: str


class AnalyzeResponse(BaseModel):
    players: list[str]
    strategies: list[list[str]]
    material: list[list[str]]
    relationships: list[list[str]]
    attitudes: list[list[str]]
    perspectives: list[PerspectiveReport]
    assembled_profile: AssembledProfileReport
    subjective_check: list[SubjectiveEntry] | None
    objective_check: list[ObjectiveEntry] | None


class IntervalReport(BaseModel):
    lo: str | None
    hi: str | None
    lo_open: bool
    hi_open: bool
    empty: bool


class EntryChangeReport(BaseModel):
    kind: str
    indices: list[int]
    value: str


class BeliefUpdateReport(BaseModel):
    player: str
    opponent: str
    observed: str
    inferred: IntervalReport
    interval: IntervalReport
    estimate: str
    reset: bool
    changed: list[EntryChangeReport]


class RoundReport(BaseModel):
    type: str
    round: int
    actions: list[str]
    material: list[str]
    supposed: list[list[str]]
    relationships: list[list[str]]
    supposed_relationships: list[list[list[str]]]
    updates: list[BeliefUpdateReport]


class SimulateResponse(BaseModel):
    rounds: list[RoundReport]
    stopped_early: bool


class BargainRoundReport(BaseModel):
    type: str
    round: int
    offer: str
    accepted: bool
    row_threshold_bound: str
    column_cap_bound: str


class BargainOutcomeReport(BaseModel):
    type: str
    result: str
    offer: str | None
    round: int | None
    reason: str | None
    range: IntervalReport
    range_offers: list[str]
    rounds_played: int


class UltimatumResponse(BaseModel):
    rounds: list[BargainRoundReport]
    outcome: BargainOutcomeReport


class ExampleResponse(BaseModel):
    name: str
    kind: str
    document: GameDocumentModel | None = None
    settings: dict | None = None
