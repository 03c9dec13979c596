"""Keypad puzzle: press the four grid symbols in qualifying-column order.

The manual shows six columns of seven symbols each.  Exactly one column
contains all four symbols on the 2x2 keypad; the buttons must be pressed in
that column's top-to-bottom order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import ActionOutcome, CORRECT, MISTAKE, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import KEYPAD_MANUAL_TEMPLATE

# Stable 27-name glyph alphabet; action tokens reference names.
GLYPHS = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "lambda", "mu", "xi", "pi", "rho", "sigma", "tau", "phi", "chi", "psi",
    "omega", "star", "moon", "sun", "anchor", "spiral", "cross", "ring",
    "bolt",
]

N_COLUMNS = 6
COLUMN_LENGTH = 7


def keypad_solution(grid: list[str], manual_columns: list[list[str]]) -> list[str]:
    """The grid's four symbols in the qualifying column's top-to-bottom order."""
    qualifying = [c for c in manual_columns if set(grid) <= set(c)]
    if len(qualifying) != 1:
        raise ValueError(f"expected exactly one qualifying column, found {len(qualifying)}")
    column = qualifying[0]
    return sorted(grid, key=column.index)


@dataclass(kw_only=True)
class KeypadState(PuzzleState):
    grid: list[str]  # 4 symbols, row-major 2x2
    manual_columns: list[list[str]]
    solution_order: list[str]
    lit: list[str] = field(default_factory=list)  # correct presses so far


class KeypadPuzzle(Puzzle):
    puzzle_id = "keypad"
    capability_tags = frozenset({"MG", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> KeypadState:
        qualifying_index = rng.randrange(N_COLUMNS)
        columns: list[list[str]] = []
        qualifying_column = rng.sample(GLYPHS, COLUMN_LENGTH)
        grid = rng.sample(qualifying_column, 4)
        for i in range(N_COLUMNS):
            if i == qualifying_index:
                columns.append(qualifying_column)
                continue
            column = rng.sample(GLYPHS, COLUMN_LENGTH)
            while set(grid) <= set(column):
                column = rng.sample(GLYPHS, COLUMN_LENGTH)
            columns.append(column)
        return KeypadState(
            seed=seed,
            grid=grid,
            manual_columns=columns,
            solution_order=keypad_solution(grid, columns),
        )

    def _valid(self, state: KeypadState) -> bool:
        qualifying = [c for c in state.manual_columns if set(state.grid) <= set(c)]
        return (
            len(qualifying) == 1
            and len(set(state.grid)) == 4
            and all(len(set(c)) == COLUMN_LENGTH for c in state.manual_columns)
        )

    def available_actions(self, state: KeypadState) -> list[str]:
        return [f"press_symbol_{s}" for s in state.grid if s not in state.lit]

    def apply(self, state: KeypadState, token: str, clock_seconds: int) -> ActionOutcome:
        symbol = token.removeprefix("press_symbol_")
        expected = state.solution_order[len(state.lit)]
        if symbol == expected:
            state.lit.append(symbol)
            if len(state.lit) == 4:
                state.solved = True
                return ActionOutcome(SOLVED, detail=f"{symbol} completed the sequence")
            return ActionOutcome(CORRECT, detail=f"{symbol} lit")
        state.strikes += 1
        return ActionOutcome(MISTAKE, detail=f"{symbol} is out of order")

    def progress(self, state: KeypadState) -> int:
        return 25 * len(state.lit)

    def oracle_actions(self, state: KeypadState, clock_seconds: int, clock_decrement: int) -> list[str]:
        remaining = state.solution_order[len(state.lit):]
        return [f"press_symbol_{s}" for s in remaining]

    def solver_elements(self, state: KeypadState) -> list[dict]:
        return [
            {
                "kind": "keypad",
                "rows": [state.grid[:2], state.grid[2:]],
                "lit": list(state.lit),
            }
        ]

    def manual(self, state: KeypadState) -> str:
        numbered = []
        for i, column in enumerate(state.manual_columns, start=1):
            numbered.append(f"Column {i}: " + ", ".join(column))
        return KEYPAD_MANUAL_TEMPLATE.format(columns="\n".join(numbered))
