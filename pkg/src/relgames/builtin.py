"""Built-in named examples, so analyses are reproducible without fixture files.

``pd-fig1`` is the two-player cooperate/defect dilemma with mildly
sub-cooperative relationships (1/3 each way) and mutual underestimates
(1/5) of the other side's relationship.  ``ultimatum-s3`` is the
bargaining scenario where both sides hold relationship -1/2 and know
it, giving the agreement range (1/3, 2/3).
"""

from __future__ import annotations

PD_FIG1 = "pd-fig1"
ULTIMATUM_S3 = "ultimatum-s3"

GAME_EXAMPLES = (PD_FIG1,)
ULTIMATUM_EXAMPLES = (ULTIMATUM_S3,)


def example_names() -> tuple[str, ...]:
    return GAME_EXAMPLES + ULTIMATUM_EXAMPLES


def game_document(name: str) -> dict:
    """The document for a built-in game example."""
    if name == PD_FIG1:
        return {
            "players": ["x", "y"],
            "strategies": [["C", "D"], ["C", "D"]],
            "payoffs": [["3", "3"], ["0", "5"], ["5", "0"], ["1", "1"]],
            "relationships": [["1", "1/3"], ["1/3", "1"]],
            "supposed": [
                [["1", "1/3"], ["1/5", "1"]],
                [["1", "1/5"], ["1/3", "1"]],
            ],
        }
    raise KeyError(f"unknown game example {name!r}; available: {', '.join(GAME_EXAMPLES)}")


def ultimatum_settings(name: str) -> dict:
    """Flag presets for a built-in bargaining example."""
    if name == ULTIMATUM_S3:
        return {
            "r_rc": "-1/2",
            "r_cr": "-1/2",
            "row_belief_cr": "-1/2",
            "col_belief_rc": "-1/2",
            "max_rounds": 100,
        }
    raise KeyError(
        f"unknown ultimatum example {name!r}; available: {', '.join(ULTIMATUM_EXAMPLES)}"
    )
