"""Color puzzle: whiten the 4x4 grid group by group.

The opening group is the least common color (ties broken by the fixed color
order).  After each completed group the manual table maps (current white
count, previous group key) to the next group key; color-key groups are all
cells of that color after a seeded recoloring of the non-white cells, while
Row/Column groups are the non-white cells of the topmost/leftmost line that
still has any.  A wrong press is a strike that restores the initial board.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from ..actions import ActionOutcome, CORRECT, RESET, SOLVED
from ..rng import rng_from
from .base import Puzzle, PuzzleState
from .manuals import COLOR_MANUAL

CELL_COLORS = ["red", "blue", "green", "yellow", "magenta"]
SIZE = 4
CELLS = SIZE * SIZE

# Group keys in manual order; rows are indexed by current white count (1-15).
GROUP_KEYS = ["red", "blue", "green", "yellow", "magenta", "row", "column"]

NEXT_GROUP_TABLE = {
    1: ["blue", "column", "red", "yellow", "row", "green", "magenta"],
    2: ["row", "green", "blue", "magenta", "red", "column", "yellow"],
    3: ["yellow", "magenta", "green", "row", "blue", "red", "column"],
    4: ["blue", "green", "yellow", "column", "red", "row", "magenta"],
    5: ["yellow", "row", "blue", "magenta", "column", "red", "green"],
    6: ["magenta", "red", "yellow", "green", "column", "blue", "row"],
    7: ["green", "row", "column", "blue", "magenta", "yellow", "red"],
    8: ["magenta", "red", "green", "blue", "yellow", "column", "row"],
    9: ["column", "yellow", "red", "green", "row", "magenta", "blue"],
    10: ["green", "column", "row", "red", "magenta", "blue", "yellow"],
    11: ["red", "yellow", "row", "column", "green", "magenta", "blue"],
    12: ["column", "row", "column", "row", "row", "column", "row"],
    13: ["row", "column", "row", "column", "row", "column", "column"],
    14: ["column", "column", "row", "row", "column", "row", "column"],
    15: ["row", "row", "column", "row", "column", "column", "row"],
}

RECOLOR_REROLLS = 100


def color_fewest_group(grid: list[str]) -> str:
    """Least common non-white color; ties go to the earliest listed color."""
    counts = {c: grid.count(c) for c in CELL_COLORS if c in grid}
    if not counts:
        raise ValueError("all-white grid has no color groups")
    return min(counts, key=lambda c: (counts[c], CELL_COLORS.index(c)))


def color_next_group(white_count: int, prev_key: str) -> str:
    """Manual-table lookup of the next group key."""
    if white_count not in NEXT_GROUP_TABLE:
        raise ValueError(f"no table row for white count {white_count}")
    return NEXT_GROUP_TABLE[white_count][GROUP_KEYS.index(prev_key)]


def color_row_col_group(grid: list[str], which: str) -> list[int]:
    """Non-white cells of the topmost qualifying row or leftmost column."""
    if which == "row":
        lines = [[y * SIZE + x for x in range(SIZE)] for y in range(SIZE)]
    else:
        lines = [[y * SIZE + x for y in range(SIZE)] for x in range(SIZE)]
    for line in lines:
        cells = [i for i in line if grid[i] != "white"]
        if cells:
            return cells
    raise ValueError("all-white grid has no row/column groups")


@dataclass(kw_only=True)
class ColorState(PuzzleState):
    initial_grid: list[str]
    grid: list[str]
    target_cells: list[int]  # remaining cells of the current group
    prev_key: str
    stream_pos: int = 0  # recolor draws consumed since the last reset
    max_white_seen: int = 0

    def _digest_excluded(self):
        return ("max_white_seen",)

    def white_count(self) -> int:
        return self.grid.count("white")


class ColorPuzzle(Puzzle):
    puzzle_id = "color"
    capability_tags = frozenset({"MR", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> ColorState:
        grid = [rng.choice(CELL_COLORS) for _ in range(CELLS)]
        fewest = color_fewest_group(grid)
        return ColorState(
            seed=seed,
            initial_grid=list(grid),
            grid=list(grid),
            target_cells=[i for i, c in enumerate(grid) if c == fewest],
            prev_key=fewest,
        )

    def available_actions(self, state: ColorState) -> list[str]:
        return [f"press_cell_{i // SIZE}_{i % SIZE}" for i in range(CELLS)]

    def apply(self, state: ColorState, token: str, clock_seconds: int) -> ActionOutcome:
        _, r, c = token.rsplit("_", 2)
        index = int(r) * SIZE + int(c)
        if index not in state.target_cells:
            state.strikes += 1
            self._reset(state)
            return ActionOutcome(RESET, detail="wrong square; module reset")
        state.grid[index] = "white"
        state.target_cells.remove(index)
        state.max_white_seen = max(state.max_white_seen, state.white_count())
        if state.target_cells:
            return ActionOutcome(CORRECT, detail="square lit white")
        if state.white_count() == CELLS:
            state.solved = True
            return ActionOutcome(SOLVED, detail="all squares white")
        self._advance_stage(state)
        return ActionOutcome(CORRECT, detail="group complete; next group designated")

    def _reset(self, state: ColorState) -> None:
        state.grid = list(state.initial_grid)
        fewest = color_fewest_group(state.grid)
        state.target_cells = [i for i, c in enumerate(state.grid) if c == fewest]
        state.prev_key = fewest
        state.stream_pos = 0

    def _advance_stage(self, state: ColorState) -> None:
        key = color_next_group(state.white_count(), state.prev_key)
        if key in ("row", "column"):
            self._recolor(state)
            cells = color_row_col_group(state.grid, key)
        else:
            # Reroll the recoloring until the designated color exists.
            for _ in range(RECOLOR_REROLLS):
                self._recolor(state)
                cells = [i for i, c in enumerate(state.grid) if c == key]
                if cells:
                    break
            else:
                raise AssertionError(f"recolor never produced a {key} cell")
        state.prev_key = key
        state.target_cells = cells

    def _recolor(self, state: ColorState) -> None:
        rng = rng_from(state.seed, "recolor", state.stream_pos)
        state.stream_pos += 1
        for i, color in enumerate(state.grid):
            if color != "white":
                state.grid[i] = rng.choice(CELL_COLORS)

    def progress(self, state: ColorState) -> int:
        if state.solved:
            return 100
        return round(100 * state.max_white_seen / CELLS)

    def oracle_actions(self, state: ColorState, clock_seconds: int, clock_decrement: int) -> list[str]:
        # Replay the remaining stages on a copy; recoloring is a pure
        # function of (seed, stream position), so the simulation is exact.
        sim = copy.deepcopy(state)
        tokens = []
        while not sim.solved:
            index = sim.target_cells[0]
            token = f"press_cell_{index // SIZE}_{index % SIZE}"
            tokens.append(token)
            self.apply(sim, token, clock_seconds)
        return tokens

    def solver_elements(self, state: ColorState) -> list[dict]:
        rows = [state.grid[y * SIZE:(y + 1) * SIZE] for y in range(SIZE)]
        return [{"kind": "grid", "rows": rows}]

    def manual(self, state: ColorState) -> str:
        return COLOR_MANUAL
