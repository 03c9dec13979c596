"""Maze puzzle: steer the mouse to the accepting sphere, then press the
labyrinth button.

The accepting sphere's color is a fixed function of the torus color.  Moves
into walls are silent no-ops; pressing the button anywhere but the accepting
cell is a strike.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..actions import ActionOutcome, CORRECT, MISTAKE, NOOP, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import MAZE_MANUAL

GRID = 6
MIN_START_DISTANCE = 4  # keeps blind wandering from scoring too well

# Torus color -> accepting sphere color (positional table in the manual).
ACCEPTING = {"green": "blue", "blue": "red", "red": "green", "yellow": "yellow"}

SPHERE_COLORS = ["blue", "red", "green", "yellow"]

HEADINGS = ["N", "E", "S", "W"]
DELTAS = {"N": (0, -1), "E": (1, 0), "S": (0, 1), "W": (-1, 0)}


def maze_accepting_color(torus_color: str) -> str:
    return ACCEPTING[torus_color]


def bfs_distances(walls: list[list[bool]], start: tuple[int, int]) -> dict[tuple[int, int], int]:
    """Shortest 4-neighbor path lengths from `start` over non-wall cells."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        for dx, dy in DELTAS.values():
            nx, ny = x + dx, y + dy
            if 0 <= nx < GRID and 0 <= ny < GRID and not walls[ny][nx]:
                if (nx, ny) not in dist:
                    dist[(nx, ny)] = dist[(x, y)] + 1
                    queue.append((nx, ny))
    return dist


@dataclass(kw_only=True)
class MazeState(PuzzleState):
    walls: list[list[bool]]  # walls[y][x]
    mouse: tuple[int, int]
    heading: str
    torus_color: str
    torus_cell: tuple[int, int]
    spheres: dict[str, tuple[int, int]]  # color -> cell
    start_distance: int
    best_distance: int

    def _digest_excluded(self):
        return ("best_distance",)

    @property
    def accepting_cell(self) -> tuple[int, int]:
        return self.spheres[maze_accepting_color(self.torus_color)]


class MazePuzzle(Puzzle):
    puzzle_id = "maze"
    capability_tags = frozenset({"MG", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> MazeState:
        walls = [[rng.random() < 0.25 for _ in range(GRID)] for _ in range(GRID)]
        cells = [(x, y) for y in range(GRID) for x in range(GRID)]
        special = rng.sample(cells, 6)  # mouse, torus, 4 spheres
        for x, y in special:
            walls[y][x] = False
        mouse, torus_cell = special[0], special[1]
        spheres = {color: cell for color, cell in zip(SPHERE_COLORS, special[2:])}
        torus_color = rng.choice(sorted(ACCEPTING))
        accepting = spheres[maze_accepting_color(torus_color)]
        distance = bfs_distances(walls, mouse).get(accepting, -1)
        return MazeState(
            seed=seed,
            walls=walls,
            mouse=mouse,
            heading=rng.choice(HEADINGS),
            torus_color=torus_color,
            torus_cell=torus_cell,
            spheres=spheres,
            start_distance=distance,
            best_distance=distance,
        )

    def _valid(self, state: MazeState) -> bool:
        return state.start_distance >= MIN_START_DISTANCE

    def available_actions(self, state: MazeState) -> list[str]:
        return ["move_forward", "move_backward", "turn_left", "turn_right", "press_button"]

    def apply(self, state: MazeState, token: str, clock_seconds: int) -> ActionOutcome:
        if token == "press_button":
            if state.mouse == state.accepting_cell:
                state.solved = True
                return ActionOutcome(SOLVED, detail="pressed at the accepting position")
            state.strikes += 1
            return ActionOutcome(MISTAKE, detail="pressed away from the accepting position")
        if token == "turn_left":
            state.heading = HEADINGS[(HEADINGS.index(state.heading) - 1) % 4]
            return ActionOutcome(CORRECT, detail=f"facing {state.heading}")
        if token == "turn_right":
            state.heading = HEADINGS[(HEADINGS.index(state.heading) + 1) % 4]
            return ActionOutcome(CORRECT, detail=f"facing {state.heading}")
        # move_forward / move_backward
        dx, dy = DELTAS[state.heading]
        if token == "move_backward":
            dx, dy = -dx, -dy
        nx, ny = state.mouse[0] + dx, state.mouse[1] + dy
        if not (0 <= nx < GRID and 0 <= ny < GRID) or state.walls[ny][nx]:
            return ActionOutcome(NOOP, detail="blocked")
        state.mouse = (nx, ny)
        distance = bfs_distances(state.walls, state.mouse).get(state.accepting_cell)
        if distance is not None:
            state.best_distance = min(state.best_distance, distance)
        return ActionOutcome(CORRECT, detail=f"moved to {nx},{ny}")

    def progress(self, state: MazeState) -> int:
        if state.solved:
            return 100
        return round(100 * (1 - state.best_distance / state.start_distance))

    def oracle_actions(self, state: MazeState, clock_seconds: int, clock_decrement: int) -> list[str]:
        path = self._shortest_path(state)
        tokens = []
        heading = state.heading
        for step_from, step_to in zip(path, path[1:]):
            dx, dy = step_to[0] - step_from[0], step_to[1] - step_from[1]
            needed = next(h for h, d in DELTAS.items() if d == (dx, dy))
            turn = (HEADINGS.index(needed) - HEADINGS.index(heading)) % 4
            if turn == 2:
                tokens.append("move_backward")
                continue  # heading unchanged
            if turn == 1:
                tokens.append("turn_right")
            elif turn == 3:
                tokens.append("turn_left")
            heading = needed
            tokens.append("move_forward")
        tokens.append("press_button")
        return tokens

    def _shortest_path(self, state: MazeState) -> list[tuple[int, int]]:
        """Cell path from the mouse to the accepting cell (BFS parents)."""
        target = state.accepting_cell
        parents: dict[tuple[int, int], tuple[int, int]] = {state.mouse: state.mouse}
        queue = deque([state.mouse])
        while queue:
            cell = queue.popleft()
            if cell == target:
                break
            x, y = cell
            for dx, dy in DELTAS.values():
                nx, ny = x + dx, y + dy
                if 0 <= nx < GRID and 0 <= ny < GRID and not state.walls[ny][nx]:
                    if (nx, ny) not in parents:
                        parents[(nx, ny)] = cell
                        queue.append((nx, ny))
        path = [target]
        while path[-1] != state.mouse:
            path.append(parents[path[-1]])
        return path[::-1]

    def solver_elements(self, state: MazeState) -> list[dict]:
        return [
            {"kind": "walls", "rows": [[int(w) for w in row] for row in state.walls]},
            {"kind": "mouse", "cell": list(state.mouse), "heading": state.heading},
            {"kind": "torus", "color": state.torus_color, "cell": list(state.torus_cell)},
            {
                "kind": "spheres",
                "cells": {color: list(cell) for color, cell in sorted(state.spheres.items())},
            },
        ]

    def manual(self, state: MazeState) -> str:
        return MAZE_MANUAL
