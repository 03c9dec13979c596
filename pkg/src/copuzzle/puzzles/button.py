"""Button puzzle: hold the button, then release at the right countdown moment.

Holding reveals a colored strip; the strip color selects a digit that must be
showing somewhere on the countdown display at the moment of release.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..actions import ActionOutcome, CORRECT, MISTAKE, SOLVED, WAIT
from ..clock import format_clock, timer_has_digit
from .base import Puzzle, PuzzleState
from .manuals import BUTTON_MANUAL

STRIP_COLORS = ["blue", "white", "yellow", "red", "green"]

RELEASE_DIGITS = {"blue": 4, "white": 1, "yellow": 5}


def button_release_digit(strip_color: str) -> int:
    """Digit that must appear on the countdown when releasing (any position)."""
    return RELEASE_DIGITS.get(strip_color, 1)


@dataclass(kw_only=True)
class ButtonState(PuzzleState):
    button_color: str
    strip_color: str  # hidden until holding
    holding: bool = False


class ButtonPuzzle(Puzzle):
    puzzle_id = "button"
    capability_tags = frozenset({"RT"})
    realtime = True

    def _generate_once(self, seed: int, rng) -> ButtonState:
        # The manual only covers the yellow-button hold branch, so the
        # generator emits yellow buttons; the color is otherwise cosmetic.
        return ButtonState(
            seed=seed,
            button_color="yellow",
            strip_color=rng.choice(STRIP_COLORS),
        )

    def available_actions(self, state: ButtonState) -> list[str]:
        return self._with_wait(["release" if state.holding else "hold"])

    def apply(self, state: ButtonState, token: str, clock_seconds: int) -> ActionOutcome:
        if token == WAIT:
            return self._wait_outcome()
        if token == "hold":
            state.holding = True
            return ActionOutcome(CORRECT, detail=f"strip lit {state.strip_color}")
        # release
        digit = button_release_digit(state.strip_color)
        display = format_clock(clock_seconds)
        if timer_has_digit(display, digit):
            state.solved = True
            return ActionOutcome(SOLVED, detail=f"released at {display}")
        state.holding = False
        state.strikes += 1
        return ActionOutcome(
            MISTAKE, detail=f"released at {display}, which shows no {digit}"
        )

    def progress(self, state: ButtonState) -> int:
        return 100 if state.solved else 0

    def oracle_actions(self, state: ButtonState, clock_seconds: int, clock_decrement: int) -> list[str]:
        if not state.holding:
            return ["hold"]
        digit = button_release_digit(state.strip_color)
        if timer_has_digit(format_clock(clock_seconds), digit):
            return ["release"]
        return [WAIT]

    def solver_elements(self, state: ButtonState) -> list[dict]:
        elements = [
            {"kind": "button", "color": state.button_color, "holding": state.holding}
        ]
        if state.holding:
            elements.append({"kind": "strip", "color": state.strip_color})
        return elements

    def manual(self, state: ButtonState) -> str:
        return BUTTON_MANUAL
