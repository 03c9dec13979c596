"""Action tokens and outcomes shared by the puzzle engines and the session loop."""

from __future__ import annotations

from dataclasses import dataclass

# Outcome kinds for a single applied action.
CORRECT = "correct"
MISTAKE = "mistake"
SOLVED = "solved"
RESET = "reset"
NOOP = "noop"

OUTCOME_KINDS = (CORRECT, MISTAKE, SOLVED, RESET, NOOP)

# Kinds that count toward the episode's mistake tally.  A reset is a
# mistake that additionally rolls multi-stage progress back.
MISTAKE_KINDS = (MISTAKE, RESET)

# Synthetic pass action available in real-time puzzles.  It lets an agent
# leave the countdown running without touching the module and is never a
# mistake.
WAIT = "wait"


@dataclass
class ActionOutcome:
    """Result of applying one action token to a puzzle state."""

    kind: str
    progress_after: int = 0
    detail: str = ""

    def is_terminal(self) -> bool:
        return self.kind == SOLVED

    def is_mistake(self) -> bool:
        return self.kind in MISTAKE_KINDS

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "progress_after": self.progress_after,
            "detail": self.detail,
        }
