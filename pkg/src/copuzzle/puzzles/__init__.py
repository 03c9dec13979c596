"""Registry of the ten puzzle rule engines."""

from __future__ import annotations

from dataclasses import dataclass

from .base import Puzzle, PuzzleState, GENERATION_RETRIES
from .button import ButtonPuzzle, ButtonState, button_release_digit
from .color import (
    ColorPuzzle,
    ColorState,
    color_fewest_group,
    color_next_group,
    color_row_col_group,
)
from .dog import DogPuzzle, DogState, dog_target_digit
from .keypad import KeypadPuzzle, KeypadState, keypad_solution
from .led import LedPuzzle, LedState, led_correct_buttons, opposite_position
from .maze import MazePuzzle, MazeState, maze_accepting_color
from .memory import MemoryPuzzle, MemoryState, memory_target
from .password import PasswordPuzzle, PasswordState, password_matches
from .who import WhoPuzzle, WhoState, who_step1, who_step2
from .wire import WirePuzzle, WireState, wire_to_cut

PUZZLES: dict[str, Puzzle] = {
    p.puzzle_id: p
    for p in (
        ButtonPuzzle(),
        DogPuzzle(),
        WirePuzzle(),
        WhoPuzzle(),
        LedPuzzle(),
        MemoryPuzzle(),
        KeypadPuzzle(),
        PasswordPuzzle(),
        ColorPuzzle(),
        MazePuzzle(),
    )
}

PUZZLE_IDS = list(PUZZLES)


@dataclass(frozen=True)
class PuzzleMeta:
    puzzle_id: str
    capability_tags: frozenset
    realtime: bool
    multi_step: bool


def get_puzzle(puzzle_id: str) -> Puzzle:
    try:
        return PUZZLES[puzzle_id]
    except KeyError:
        raise KeyError(f"unknown puzzle id {puzzle_id!r}; known: {PUZZLE_IDS}") from None


def meta(puzzle_id: str) -> PuzzleMeta:
    p = get_puzzle(puzzle_id)
    return PuzzleMeta(p.puzzle_id, p.capability_tags, p.realtime, p.multi_step)


def generate(puzzle_id: str, seed: int) -> PuzzleState:
    return get_puzzle(puzzle_id).generate(seed)


def progress(puzzle_id: str, state: PuzzleState) -> int:
    return get_puzzle(puzzle_id).progress(state)


__all__ = [
    "GENERATION_RETRIES",
    "PUZZLES",
    "PUZZLE_IDS",
    "Puzzle",
    "PuzzleMeta",
    "PuzzleState",
    "ButtonState",
    "ColorState",
    "DogState",
    "KeypadState",
    "LedState",
    "MazeState",
    "MemoryState",
    "PasswordState",
    "WhoState",
    "WireState",
    "button_release_digit",
    "color_fewest_group",
    "color_next_group",
    "color_row_col_group",
    "dog_target_digit",
    "generate",
    "get_puzzle",
    "keypad_solution",
    "led_correct_buttons",
    "maze_accepting_color",
    "memory_target",
    "meta",
    "opposite_position",
    "password_matches",
    "progress",
    "who_step1",
    "who_step2",
    "wire_to_cut",
]
