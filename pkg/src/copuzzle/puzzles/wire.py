"""Wire puzzle: cut the one correct wire out of 3-6 colored wires.

The correct index follows a per-count decision list keyed on wire colors and
the parity of the serial number's last digit.  Wires are ordered top to
bottom, 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import ActionOutcome, MISTAKE, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import WIRE_MANUAL

WIRE_COLORS = ["red", "blue", "yellow", "white", "black"]


def wire_to_cut(colors: list[str], serial_last_digit: int) -> int:
    """1-based index of the wire to cut (first matching branch wins)."""
    n = len(colors)
    if not 3 <= n <= 6:
        raise ValueError(f"wire count must be 3-6, got {n}")
    odd = serial_last_digit % 2 == 1
    reds = colors.count("red")
    blues = colors.count("blue")
    yellows = colors.count("yellow")
    whites = colors.count("white")
    blacks = colors.count("black")

    if n == 3:
        if reds == 0:
            return 2
        if colors[-1] == "white":
            return 3
        if blues > 1:
            return _last_index(colors, "blue")
        return 3
    if n == 4:
        if reds > 1 and odd:
            return _last_index(colors, "red")
        if colors[-1] == "yellow" and reds == 0:
            return 1
        if blues == 1:
            return 1
        if yellows > 1:
            return 4
        return 2
    if n == 5:
        if colors[-1] == "black" and odd:
            return 4
        if reds == 1 and yellows > 1:
            return 1
        if blacks == 0:
            return 2
        return 1
    # n == 6
    if yellows == 0 and odd:
        return 3
    if yellows == 1 and whites > 1:
        return 4
    if reds == 0:
        return 6
    return 4


def _last_index(colors: list[str], color: str) -> int:
    return len(colors) - colors[::-1].index(color)


@dataclass(kw_only=True)
class WireState(PuzzleState):
    wires: list[str]
    serial_last_digit: int
    correct_index: int  # 1-based, fixed at generation
    cut: list[int] = field(default_factory=list)  # 1-based indices, cut order


class WirePuzzle(Puzzle):
    puzzle_id = "wire"
    capability_tags = frozenset({"MG"})

    def _generate_once(self, seed: int, rng) -> WireState:
        n = rng.randint(3, 6)
        wires = [rng.choice(WIRE_COLORS) for _ in range(n)]
        serial = rng.randint(0, 9)
        return WireState(
            seed=seed,
            wires=wires,
            serial_last_digit=serial,
            correct_index=wire_to_cut(wires, serial),
        )

    def _valid(self, state: WireState) -> bool:
        return 1 <= state.correct_index <= len(state.wires)

    def available_actions(self, state: WireState) -> list[str]:
        return [
            f"cut_wire_{i}"
            for i in range(1, len(state.wires) + 1)
            if i not in state.cut
        ]

    def apply(self, state: WireState, token: str, clock_seconds: int) -> ActionOutcome:
        index = int(token.rsplit("_", 1)[1])
        state.cut.append(index)
        if index == state.correct_index:
            state.solved = True
            return ActionOutcome(SOLVED, detail=f"wire {index} was correct")
        state.strikes += 1
        return ActionOutcome(MISTAKE, detail=f"wire {index} was wrong")

    def progress(self, state: WireState) -> int:
        return 100 if state.solved else 0

    def oracle_actions(self, state: WireState, clock_seconds: int, clock_decrement: int) -> list[str]:
        return [f"cut_wire_{state.correct_index}"]

    def solver_elements(self, state: WireState) -> list[dict]:
        return [
            {"kind": "wires", "colors": list(state.wires), "cut": list(state.cut)},
            {"kind": "serial_last_digit", "value": state.serial_last_digit},
        ]

    def manual(self, state: WireState) -> str:
        return WIRE_MANUAL
