"""Structured (machine-readable) observations for non-vision agents and tests.

Solver views never contain solution-only information; schema hygiene is
enforced by tests against the forbidden-key list below.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..clock import format_clock
from ..puzzles import PuzzleState, get_puzzle

VIEW_SCHEMA_VERSION = 1

# Keys that must never appear in a serialized solver view.
SOLUTION_ONLY_KEYS = {
    "correct_index",
    "secret_word",
    "secret",
    "target_label",
    "referenced_label",
    "solution_order",
    "manual_columns",
    "accepting_cell",
    "accepting_color",
    "release_digit",
    "target_cells",
    "target_digit",
    "n_dogs",
    "target_position",
    "correct_buttons",
}


@dataclass
class StructuredObservation:
    puzzle_id: str
    clock_display: str
    visible_elements: list[dict]
    available_actions: list[str]
    schema_version: int = VIEW_SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "puzzle_id": self.puzzle_id,
            "clock_display": self.clock_display,
            "visible_elements": self.visible_elements,
            "available_actions": self.available_actions,
        }


def solver_view(puzzle_id: str, state: PuzzleState, clock_seconds: int) -> StructuredObservation:
    puzzle = get_puzzle(puzzle_id)
    return StructuredObservation(
        puzzle_id=puzzle_id,
        clock_display=format_clock(clock_seconds),
        visible_elements=puzzle.solver_elements(state),
        available_actions=puzzle.available_actions(state),
    )


def manual_text(puzzle_id: str, state: PuzzleState) -> str:
    """The instruction manual for the instance, with instance-specific parts
    (keypad columns) substituted in."""
    return get_puzzle(puzzle_id).manual(state)
