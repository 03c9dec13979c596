"""Common scaffolding for the ten puzzle rule engines.

Each puzzle owns: seeded generation with a validity check (regenerated on a
derived seed stream until valid), a transition rule mapping action tokens to
outcomes, a 0-100 progress score, an oracle move planner with full state
knowledge, the solver-visible element list, and the instruction manual text
handed to the expert.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Sequence

from ..actions import WAIT, ActionOutcome, CORRECT
from ..errors import GenerationError
from ..rng import derive_seed, rng_from

GENERATION_RETRIES = 1000


@dataclass(kw_only=True)
class PuzzleState:
    """Envelope shared by every puzzle state."""

    seed: int
    solved: bool = False
    strikes: int = 0

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def digest_dict(self) -> dict:
        """Solver-relevant state used for the stable turn digest.

        Excludes bookkeeping that only feeds progress scoring (best-so-far
        trackers), so that an episode which loops back to an identical module
        situation produces an identical digest.
        """
        d = self.to_dict()
        for key in self._digest_excluded():
            d.pop(key, None)
        return d

    def _digest_excluded(self) -> Sequence[str]:
        return ()


class Puzzle:
    """Rule engine for one puzzle type.  Subclasses are stateless singletons."""

    puzzle_id: str = ""
    capability_tags: frozenset = frozenset()
    realtime: bool = False
    multi_step: bool = False

    # -- generation ---------------------------------------------------------

    def generate(self, seed: int) -> PuzzleState:
        """Generate a valid instance, retrying on a derived seed stream."""
        for attempt in range(GENERATION_RETRIES):
            rng = rng_from(seed, self.puzzle_id, attempt)
            state = self._generate_once(derive_seed(seed, self.puzzle_id, attempt), rng)
            if self._valid(state):
                state.seed = seed
                return state
        raise GenerationError(
            f"{self.puzzle_id}: no valid instance after {GENERATION_RETRIES} tries "
            f"(seed={seed}); validator or generator bug"
        )

    def _generate_once(self, seed: int, rng) -> PuzzleState:
        raise NotImplementedError

    def _valid(self, state: PuzzleState) -> bool:
        return True

    # -- play ---------------------------------------------------------------

    def available_actions(self, state: PuzzleState) -> list[str]:
        raise NotImplementedError

    def apply(self, state: PuzzleState, token: str, clock_seconds: int) -> ActionOutcome:
        """Apply one available token.  Mutates `state`; progress is filled by the caller."""
        raise NotImplementedError

    def progress(self, state: PuzzleState) -> int:
        raise NotImplementedError

    def oracle_actions(self, state: PuzzleState, clock_seconds: int, clock_decrement: int) -> list[str]:
        """Tokens that solve the puzzle from here, or a waiting move for
        real-time puzzles whose moment has not yet come."""
        raise NotImplementedError

    # -- views --------------------------------------------------------------

    def solver_elements(self, state: PuzzleState) -> list[dict]:
        """Visible module elements for the structured (non-image) solver view.

        Must never include solution-only information.
        """
        raise NotImplementedError

    def manual(self, state: PuzzleState) -> str:
        raise NotImplementedError

    # -- helpers ------------------------------------------------------------

    def _wait_outcome(self) -> ActionOutcome:
        return ActionOutcome(CORRECT, detail="waited")

    def _with_wait(self, tokens: list[str]) -> list[str]:
        if self.realtime:
            return tokens + [WAIT]
        return tokens
