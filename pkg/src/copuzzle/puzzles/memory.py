"""Memory puzzle: five stages of display-driven button rules with history.

Each stage shows a display digit and four buttons labeled 1-4 in a permuted
order.  The stage rules reference positions and labels pressed in earlier
stages; a wrong press resets the module to stage 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import ActionOutcome, CORRECT, RESET, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import MEMORY_MANUAL

TOTAL_STAGES = 5


def memory_target(stage: int, display: int, history: list[dict]) -> dict:
    """Rule-table target for the stage: {"position": k} or {"label": k}.

    `history` holds one {"position": p, "label": l} entry per completed stage.
    """
    if len(history) < stage - 1:
        raise ValueError(f"stage {stage} needs {stage - 1} history entries")
    if stage == 1:
        return {"position": {1: 2, 2: 2, 3: 3, 4: 4}[display]}
    if stage == 2:
        return {
            1: {"label": 4},
            2: {"position": history[0]["position"]},
            3: {"position": 1},
            4: {"position": history[0]["position"]},
        }[display]
    if stage == 3:
        return {
            1: {"label": history[1]["label"]},
            2: {"label": history[0]["label"]},
            3: {"position": 3},
            4: {"label": 4},
        }[display]
    if stage == 4:
        return {
            1: {"position": history[0]["position"]},
            2: {"position": 1},
            3: {"position": history[1]["position"]},
            4: {"position": history[1]["position"]},
        }[display]
    if stage == 5:
        return {
            1: {"label": history[0]["label"]},
            2: {"label": history[1]["label"]},
            3: {"label": history[3]["label"]},
            4: {"label": history[2]["label"]},
        }[display]
    raise ValueError(f"stage must be 1-5, got {stage}")


@dataclass(kw_only=True)
class MemoryState(PuzzleState):
    displays: list[int]  # display digit per stage, fixed at generation
    layouts: list[list[int]]  # labels at positions 1-4, per stage
    stage: int = 1
    history: list[dict] = field(default_factory=list)
    best_stage_completed: int = 0

    def _digest_excluded(self):
        return ("best_stage_completed",)

    def target_position(self) -> int:
        """1-based position to press at the current stage."""
        target = memory_target(self.stage, self.displays[self.stage - 1], self.history)
        layout = self.layouts[self.stage - 1]
        if "position" in target:
            return target["position"]
        return layout.index(target["label"]) + 1


class MemoryPuzzle(Puzzle):
    puzzle_id = "memory"
    capability_tags = frozenset({"MR", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> MemoryState:
        displays = [rng.randint(1, 4) for _ in range(TOTAL_STAGES)]
        layouts = []
        for _ in range(TOTAL_STAGES):
            labels = [1, 2, 3, 4]
            rng.shuffle(labels)
            layouts.append(labels)
        return MemoryState(seed=seed, displays=displays, layouts=layouts)

    def available_actions(self, state: MemoryState) -> list[str]:
        return [f"press_button_{k}" for k in range(1, 5)]

    def apply(self, state: MemoryState, token: str, clock_seconds: int) -> ActionOutcome:
        position = int(token.rsplit("_", 1)[1])
        layout = state.layouts[state.stage - 1]
        label = layout[position - 1]
        if position == state.target_position():
            state.history.append({"position": position, "label": label})
            state.best_stage_completed = max(state.best_stage_completed, state.stage)
            if state.stage == TOTAL_STAGES:
                state.solved = True
                return ActionOutcome(SOLVED, detail=f"stage {TOTAL_STAGES} cleared")
            state.stage += 1
            return ActionOutcome(CORRECT, detail=f"advanced to stage {state.stage}")
        state.strikes += 1
        state.stage = 1
        state.history = []
        return ActionOutcome(RESET, detail="wrong button; back to stage 1")

    def progress(self, state: MemoryState) -> int:
        return 20 * state.best_stage_completed

    def oracle_actions(self, state: MemoryState, clock_seconds: int, clock_decrement: int) -> list[str]:
        # Simulate the remaining stages; displays and layouts are fixed.
        sim = MemoryState(
            seed=state.seed,
            displays=state.displays,
            layouts=state.layouts,
            stage=state.stage,
            history=[dict(h) for h in state.history],
        )
        tokens = []
        for stage in range(state.stage, TOTAL_STAGES + 1):
            position = sim.target_position()
            label = sim.layouts[stage - 1][position - 1]
            tokens.append(f"press_button_{position}")
            sim.history.append({"position": position, "label": label})
            sim.stage = min(stage + 1, TOTAL_STAGES)
        return tokens

    def solver_elements(self, state: MemoryState) -> list[dict]:
        return [
            {"kind": "stage_indicator", "current": state.stage, "total": TOTAL_STAGES},
            {"kind": "display", "value": state.displays[state.stage - 1]},
            {"kind": "buttons", "labels": list(state.layouts[state.stage - 1])},
        ]

    def manual(self, state: MemoryState) -> str:
        return MEMORY_MANUAL
