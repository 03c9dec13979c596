"""LED puzzle: multi-stage letter arithmetic against each stage's LED multiplier.

A button at position p is correct when value(letter_p) * multiplier mod 26
equals value of the letter on the diagonally opposite button; the 2x2 pairs
are (0,3) and (1,2).  Letters are valued A=0..Z=25.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from ..actions import ActionOutcome, CORRECT, MISTAKE, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import LED_MANUAL

MULTIPLIERS = {
    "red": 2,
    "green": 3,
    "blue": 4,
    "yellow": 5,
    "purple": 6,
    "orange": 7,
}

LED_COLORS = list(MULTIPLIERS)


def letter_value(letter: str) -> int:
    return ord(letter.upper()) - ord("A")


def opposite_position(p: int) -> int:
    """Diagonal partner on the 2x2 button cluster: (0,3) and (1,2)."""
    return 3 - p


def led_correct_buttons(letters: list[str], multiplier: int) -> set[int]:
    """Positions whose letter satisfies the multiplier rule."""
    return {
        p
        for p in range(4)
        if (letter_value(letters[p]) * multiplier) % 26
        == letter_value(letters[opposite_position(p)])
    }


@dataclass(kw_only=True)
class LedState(PuzzleState):
    total_stages: int  # 2-5
    led_colors: list[str]  # one per stage
    stage_letters: list[list[str]]  # 4 letters per stage, fixed at generation
    current_stage: int = 1  # 1-based

    def letters(self) -> list[str]:
        return self.stage_letters[self.current_stage - 1]

    def multiplier(self) -> int:
        return MULTIPLIERS[self.led_colors[self.current_stage - 1]]

    def stages_done(self) -> int:
        return self.total_stages if self.solved else self.current_stage - 1


class LedPuzzle(Puzzle):
    puzzle_id = "led"
    capability_tags = frozenset({"MR", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> LedState:
        total = rng.randint(2, 5)
        colors = [rng.choice(LED_COLORS) for _ in range(total)]
        letters = []
        for stage in range(total):
            multiplier = MULTIPLIERS[colors[stage]]
            # Redraw the stage's letters until at least one button is correct.
            for _ in range(1000):
                draw = rng.sample(string.ascii_uppercase, 4)
                if led_correct_buttons(draw, multiplier):
                    letters.append(draw)
                    break
            else:
                letters.append(["A", "B", "C", "A"])  # unused; fails validation
        return LedState(
            seed=seed, total_stages=total, led_colors=colors, stage_letters=letters
        )

    def _valid(self, state: LedState) -> bool:
        return all(
            led_correct_buttons(letters, MULTIPLIERS[color])
            for letters, color in zip(state.stage_letters, state.led_colors)
        )

    def available_actions(self, state: LedState) -> list[str]:
        return [f"press_button_{k}" for k in range(1, 5)]

    def apply(self, state: LedState, token: str, clock_seconds: int) -> ActionOutcome:
        position = int(token.rsplit("_", 1)[1]) - 1
        letters = state.letters()
        if position in led_correct_buttons(letters, state.multiplier()):
            if state.current_stage == state.total_stages:
                state.solved = True
                return ActionOutcome(SOLVED, detail=f"{letters[position]} finished stage {state.current_stage}")
            state.current_stage += 1
            return ActionOutcome(CORRECT, detail=f"{letters[position]} advanced to stage {state.current_stage}")
        state.strikes += 1
        return ActionOutcome(MISTAKE, detail=f"{letters[position]} is not correct here")

    def progress(self, state: LedState) -> int:
        return round(100 * state.stages_done() / state.total_stages)

    def oracle_actions(self, state: LedState, clock_seconds: int, clock_decrement: int) -> list[str]:
        tokens = []
        for stage in range(state.current_stage, state.total_stages + 1):
            letters = state.stage_letters[stage - 1]
            multiplier = MULTIPLIERS[state.led_colors[stage - 1]]
            position = min(led_correct_buttons(letters, multiplier))
            tokens.append(f"press_button_{position + 1}")
        return tokens

    def solver_elements(self, state: LedState) -> list[dict]:
        return [
            {"kind": "stage_leds", "colors": list(state.led_colors)},
            {"kind": "stage_indicator", "current": state.current_stage, "total": state.total_stages},
            {"kind": "buttons", "letters": list(state.letters())},
        ]

    def manual(self, state: LedState) -> str:
        return LED_MANUAL
