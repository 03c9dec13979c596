"""Who puzzle: the display word points (via step 1) at a button position whose
label selects (via step 2) the one button to press."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..actions import ActionOutcome, MISTAKE, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import WHO_MANUAL

POSITIONS = [
    "top_left",
    "top_right",
    "middle_left",
    "middle_right",
    "bottom_left",
    "bottom_right",
]

# Step 1: display word -> position whose label to read.
STEP1 = {
    "YES": "middle_left",
    "FIRST": "top_right",
    "DISPLAY": "bottom_right",
    "OKAY": "top_right",
    "SAYS": "bottom_right",
    "NOTHING": "middle_left",
    "(No Text)": "bottom_left",
    "BLANK": "middle_right",
    "NO": "bottom_right",
    "LED": "middle_left",
    "LEAD": "bottom_right",
    "READ": "middle_right",
    "RED": "middle_right",
    "REED": "bottom_left",
    "LEED": "bottom_left",
    "HOLD ON": "bottom_right",
    "YOU": "middle_right",
    "YOU ARE": "bottom_right",
    "YOUR": "middle_right",
    "YOU'RE": "middle_right",
    "UR": "top_left",
    "THERE": "bottom_right",
    "THEY'RE": "bottom_left",
    "THEIR": "middle_right",
    "THEY ARE": "middle_left",
    "SEE": "bottom_right",
    "C": "top_right",
    "CEE": "bottom_right",
}

# Step 2: referenced label -> priority list; press the first list entry
# present among the on-module labels.
STEP2 = {
    "READY": ["YES", "OKAY", "WHAT", "MIDDLE", "LEFT", "PRESS", "RIGHT", "BLANK", "READY", "NO", "FIRST", "UHHH", "NOTHING", "WAIT"],
    "FIRST": ["LEFT", "OKAY", "YES", "MIDDLE", "NO", "RIGHT", "NOTHING", "UHHH", "WAIT", "READY", "BLANK", "WHAT", "PRESS", "FIRST"],
    "NO": ["BLANK", "UHHH", "WAIT", "FIRST", "WHAT", "READY", "RIGHT", "YES", "NOTHING", "LEFT", "PRESS", "OKAY", "NO", "MIDDLE"],
    "BLANK": ["WAIT", "RIGHT", "OKAY", "MIDDLE", "BLANK", "PRESS", "READY", "NOTHING", "NO", "WHAT", "LEFT", "UHHH", "YES", "FIRST"],
    "NOTHING": ["UHHH", "RIGHT", "OKAY", "MIDDLE", "YES", "BLANK", "NO", "PRESS", "LEFT", "WHAT", "WAIT", "FIRST", "NOTHING", "READY"],
    "YES": ["OKAY", "RIGHT", "UHHH", "MIDDLE", "FIRST", "WHAT", "PRESS", "READY", "NOTHING", "YES", "LEFT", "BLANK", "NO", "WAIT"],
    "WHAT": ["UHHH", "WHAT", "LEFT", "NOTHING", "READY", "BLANK", "MIDDLE", "NO", "OKAY", "FIRST", "WAIT", "YES", "PRESS", "RIGHT"],
    "UHHH": ["READY", "NOTHING", "LEFT", "WHAT", "OKAY", "YES", "RIGHT", "NO", "PRESS", "BLANK", "UHHH", "MIDDLE", "WAIT", "FIRST"],
    "LEFT": ["RIGHT", "LEFT", "FIRST", "NO", "MIDDLE", "YES", "BLANK", "WHAT", "UHHH", "WAIT", "PRESS", "READY", "OKAY", "NOTHING"],
    "RIGHT": ["YES", "NOTHING", "READY", "PRESS", "NO", "WAIT", "WHAT", "RIGHT", "MIDDLE", "LEFT", "UHHH", "BLANK", "OKAY", "FIRST"],
    "MIDDLE": ["BLANK", "READY", "OKAY", "WHAT", "NOTHING", "PRESS", "NO", "WAIT", "LEFT", "MIDDLE", "RIGHT", "FIRST", "UHHH", "YES"],
    "OKAY": ["MIDDLE", "NO", "FIRST", "YES", "UHHH", "NOTHING", "WAIT", "OKAY", "LEFT", "READY", "BLANK", "PRESS", "WHAT", "RIGHT"],
    "WAIT": ["UHHH", "NO", "BLANK", "OKAY", "YES", "LEFT", "FIRST", "PRESS", "WHAT", "WAIT", "NOTHING", "READY", "RIGHT", "MIDDLE"],
    "PRESS": ["RIGHT", "MIDDLE", "YES", "READY", "PRESS", "OKAY", "NOTHING", "UHHH", "BLANK", "LEFT", "FIRST", "WHAT", "NO", "WAIT"],
    "YOU": ["SURE", "YOU ARE", "YOUR", "YOU'RE", "NEXT", "UH HUH", "UR", "HOLD", "WHAT?", "YOU", "UH UH", "LIKE", "DONE", "U"],
    "YOU ARE": ["YOUR", "NEXT", "LIKE", "UH HUH", "WHAT?", "DONE", "UH UH", "HOLD", "YOU", "U", "YOU'RE", "SURE", "UR", "YOU ARE"],
    "YOUR": ["UH UH", "YOU ARE", "UH HUH", "YOUR", "NEXT", "UR", "SURE", "U", "YOU'RE", "YOU", "WHAT?", "HOLD", "LIKE", "DONE"],
    "YOU'RE": ["YOU", "YOU'RE", "UR", "NEXT", "UH UH", "YOU ARE", "U", "YOUR", "WHAT?", "UH HUH", "SURE", "DONE", "LIKE", "HOLD"],
    "UR": ["DONE", "U", "UR", "UH HUH", "WHAT?", "SURE", "YOUR", "HOLD", "YOU'RE", "LIKE", "NEXT", "UH UH", "YOU ARE", "YOU"],
    "U": ["UH HUH", "SURE", "NEXT", "WHAT?", "YOU'RE", "UR", "UH UH", "DONE", "U", "YOU", "LIKE", "HOLD", "YOU ARE", "YOUR"],
    "UH HUH": ["UH HUH", "YOUR", "YOU ARE", "YOU", "DONE", "HOLD", "UH UH", "NEXT", "SURE", "LIKE", "YOU'RE", "UR", "U", "WHAT?"],
    "UH UH": ["UR", "U", "YOU ARE", "YOU'RE", "NEXT", "UH UH", "DONE", "YOU", "UH HUH", "LIKE", "YOUR", "SURE", "HOLD", "WHAT?"],
    "WHAT?": ["YOU", "HOLD", "YOU'RE", "YOUR", "U", "DONE", "UH UH", "LIKE", "YOU ARE", "UH HUH", "UR", "NEXT", "WHAT?", "SURE"],
    "DONE": ["SURE", "UH HUH", "NEXT", "WHAT?", "YOUR", "UR", "YOU'RE", "HOLD", "LIKE", "YOU", "U", "YOU ARE", "UH UH", "DONE"],
    "NEXT": ["WHAT?", "UH HUH", "UH UH", "YOUR", "HOLD", "SURE", "NEXT", "LIKE", "DONE", "YOU ARE", "UR", "YOU'RE", "U", "YOU"],
    "HOLD": ["YOU ARE", "U", "DONE", "UH UH", "YOU", "UR", "SURE", "WHAT?", "YOU'RE", "NEXT", "HOLD", "UH HUH", "YOUR", "LIKE"],
    "SURE": ["YOU ARE", "DONE", "LIKE", "YOU'RE", "YOU", "HOLD", "UH HUH", "UR", "SURE", "U", "WHAT?", "NEXT", "YOUR", "UH UH"],
    "LIKE": ["YOU'RE", "NEXT", "U", "UR", "HOLD", "DONE", "UH UH", "WHAT?", "UH HUH", "YOU", "LIKE", "SURE", "YOU ARE", "YOUR"],
}

LABEL_VOCABULARY = sorted(STEP2)


def who_step1(display_word: str) -> str:
    """Position whose label the display word points at."""
    return STEP1[display_word]


def who_step2(referenced_label: str, on_module_labels: list[str]) -> str:
    """First entry of the referenced label's list present on the module."""
    present = set(on_module_labels)
    for candidate in STEP2[referenced_label]:
        if candidate in present:
            return candidate
    raise ValueError(
        f"no entry of {referenced_label!r}'s list is on the module"
    )


@dataclass(kw_only=True)
class WhoState(PuzzleState):
    display_word: str
    labels: list[str]  # one per POSITIONS entry, all distinct
    pressed: list[str] = field(default_factory=list)  # positions already used

    @property
    def referenced_label(self) -> str:
        return self.labels[POSITIONS.index(who_step1(self.display_word))]

    @property
    def target_label(self) -> str:
        return who_step2(self.referenced_label, self.labels)


class WhoPuzzle(Puzzle):
    puzzle_id = "who"
    capability_tags = frozenset({"MG"})

    def _generate_once(self, seed: int, rng) -> WhoState:
        display = rng.choice(sorted(STEP1))
        labels = rng.sample(LABEL_VOCABULARY, len(POSITIONS))
        return WhoState(seed=seed, display_word=display, labels=labels)

    def _valid(self, state: WhoState) -> bool:
        if state.referenced_label not in STEP2:
            return False
        try:
            state.target_label
        except ValueError:
            return False
        return True

    def available_actions(self, state: WhoState) -> list[str]:
        return [f"press_{p}" for p in POSITIONS if p not in state.pressed]

    def apply(self, state: WhoState, token: str, clock_seconds: int) -> ActionOutcome:
        position = token.removeprefix("press_")
        label = state.labels[POSITIONS.index(position)]
        state.pressed.append(position)
        if label == state.target_label:
            state.solved = True
            return ActionOutcome(SOLVED, detail=f"pressed {label}")
        state.strikes += 1
        return ActionOutcome(MISTAKE, detail=f"pressed {label}")

    def progress(self, state: WhoState) -> int:
        return 100 if state.solved else 0

    def oracle_actions(self, state: WhoState, clock_seconds: int, clock_decrement: int) -> list[str]:
        position = POSITIONS[state.labels.index(state.target_label)]
        return [f"press_{position}"]

    def solver_elements(self, state: WhoState) -> list[dict]:
        return [
            {"kind": "display", "word": state.display_word},
            {
                "kind": "buttons",
                "labels": {p: l for p, l in zip(POSITIONS, state.labels)},
                "pressed": list(state.pressed),
            },
        ]

    def manual(self, state: WhoState) -> str:
        return WHO_MANUAL
