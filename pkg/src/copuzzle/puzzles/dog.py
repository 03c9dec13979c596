"""Dog puzzle: count the dogs, then submit when the countdown's last digit matches."""

from __future__ import annotations

from dataclasses import dataclass

from ..actions import ActionOutcome, MISTAKE, SOLVED, WAIT
from ..clock import format_clock, timer_last_digit
from .base import Puzzle, PuzzleState
from .manuals import DOG_MANUAL

# Grid slots (column, row) on the photo area where dog sprites may sit.
SPRITE_SLOTS = [(c, r) for r in range(2) for c in range(4)]


def dog_target_digit(n_dogs: int) -> int:
    if not 0 <= n_dogs <= 4:
        raise ValueError(f"dog count must be 0-4, got {n_dogs}")
    return n_dogs


@dataclass(kw_only=True)
class DogState(PuzzleState):
    n_dogs: int
    sprite_slots: list[tuple[int, int]]


class DogPuzzle(Puzzle):
    puzzle_id = "dog"
    capability_tags = frozenset({"RT"})
    realtime = True

    def _generate_once(self, seed: int, rng) -> DogState:
        n = rng.randint(0, 4)
        slots = rng.sample(SPRITE_SLOTS, n)
        return DogState(seed=seed, n_dogs=n, sprite_slots=slots)

    def available_actions(self, state: DogState) -> list[str]:
        return self._with_wait(["submit"])

    def apply(self, state: DogState, token: str, clock_seconds: int) -> ActionOutcome:
        if token == WAIT:
            return self._wait_outcome()
        display = format_clock(clock_seconds)
        if timer_last_digit(clock_seconds) == dog_target_digit(state.n_dogs):
            state.solved = True
            return ActionOutcome(SOLVED, detail=f"submitted at {display}")
        state.strikes += 1
        return ActionOutcome(MISTAKE, detail=f"submitted at {display}")

    def progress(self, state: DogState) -> int:
        return 100 if state.solved else 0

    def oracle_actions(self, state: DogState, clock_seconds: int, clock_decrement: int) -> list[str]:
        if timer_last_digit(clock_seconds) == state.n_dogs:
            return ["submit"]
        return [WAIT]

    def solver_elements(self, state: DogState) -> list[dict]:
        # The count is deliberately absent: it is only visible in the
        # rendered photo, which is the point of the puzzle.
        return [{"kind": "photo", "content": "a photo with some dogs"}]

    def manual(self, state: DogState) -> str:
        return DOG_MANUAL
