"""Password puzzle: cycle five letter windows until they spell the secret word.

Each window holds three alphabetically consecutive letters; exactly one
choice of one letter per window spells a word from the fixed list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..actions import ActionOutcome, CORRECT, MISTAKE, SOLVED
from .base import Puzzle, PuzzleState
from .manuals import PASSWORD_MANUAL

WORDS = [
    "about", "after", "again", "below", "could", "every", "first", "found",
    "great", "house", "large", "learn", "never", "other", "place", "plant",
    "point", "right", "small", "sound", "spell", "still", "study", "their",
    "there", "these", "thing", "think", "three", "water", "where", "which",
    "world", "would", "write",
]

WINDOW_SIZE = 3
WORD_LENGTH = 5


def password_matches(cycles: list[list[str]], wordlist: list[str] = WORDS) -> set[str]:
    """All listed words spellable by picking one letter per window."""
    window_sets = [set(w) for w in cycles]
    return {
        word
        for word in wordlist
        if all(ch in window_sets[i] for i, ch in enumerate(word))
    }


def enumerate_spellings(cycles: list[list[str]]) -> set[str]:
    """All 3^5 letter combinations the windows can display."""
    return {"".join(chars) for chars in product(*cycles)}


@dataclass(kw_only=True)
class PasswordState(PuzzleState):
    secret_word: str
    cycles: list[list[str]]  # 5 windows x 3 letters, alphabetical
    cursor: list[int]  # index into each window

    def spelled(self) -> str:
        return "".join(w[i] for w, i in zip(self.cycles, self.cursor))


class PasswordPuzzle(Puzzle):
    puzzle_id = "password"
    capability_tags = frozenset({"MG", "MSR"})
    multi_step = True

    def _generate_once(self, seed: int, rng) -> PasswordState:
        secret = rng.choice(WORDS)
        cycles = []
        for ch in secret:
            # Window of 3 consecutive letters containing ch, clipped at a/z.
            pos = ord(ch) - ord("a")
            starts = [s for s in (pos - 2, pos - 1, pos) if 0 <= s <= 26 - WINDOW_SIZE]
            start = rng.choice(starts)
            cycles.append([chr(ord("a") + start + k) for k in range(WINDOW_SIZE)])
        cursor = [rng.randrange(WINDOW_SIZE) for _ in range(WORD_LENGTH)]
        state = PasswordState(seed=seed, secret_word=secret, cycles=cycles, cursor=cursor)
        while state.spelled() == secret:
            state.cursor = [rng.randrange(WINDOW_SIZE) for _ in range(WORD_LENGTH)]
        return state

    def _valid(self, state: PasswordState) -> bool:
        matches = password_matches(state.cycles)
        return matches == {state.secret_word}

    def available_actions(self, state: PasswordState) -> list[str]:
        tokens = []
        for k in range(1, WORD_LENGTH + 1):
            tokens.append(f"up_{k}")
            tokens.append(f"down_{k}")
        tokens.append("submit")
        return tokens

    def apply(self, state: PasswordState, token: str, clock_seconds: int) -> ActionOutcome:
        if token == "submit":
            word = state.spelled()
            if word == state.secret_word:
                state.solved = True
                return ActionOutcome(SOLVED, detail=f"submitted {word}")
            state.strikes += 1
            return ActionOutcome(MISTAKE, detail=f"submitted {word}")
        direction, k = token.split("_")
        idx = int(k) - 1
        step = -1 if direction == "up" else 1
        state.cursor[idx] = (state.cursor[idx] + step) % WINDOW_SIZE
        return ActionOutcome(CORRECT, detail=f"window {k} shows {state.spelled()[idx]}")

    def progress(self, state: PasswordState) -> int:
        return 100 if state.solved else 0

    def oracle_actions(self, state: PasswordState, clock_seconds: int, clock_decrement: int) -> list[str]:
        moves = []
        for k, (window, at) in enumerate(zip(state.cycles, state.cursor), start=1):
            want = window.index(state.secret_word[k - 1])
            delta = (want - at) % WINDOW_SIZE
            if delta == 1:
                moves.append(f"down_{k}")
            elif delta == 2:
                moves.append(f"up_{k}")
        moves.append("submit")
        return moves

    def solver_elements(self, state: PasswordState) -> list[dict]:
        return [{"kind": "letters", "shown": list(state.spelled())}]

    def manual(self, state: PasswordState) -> str:
        return PASSWORD_MANUAL
