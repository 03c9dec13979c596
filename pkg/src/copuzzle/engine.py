"""Session lifecycle: the turn loop, virtual clock, action parsing, and
mistake accounting.

A session alternates messages between the solver (odd turns, 1-based) and the
expert.  Solver replies are parsed by exact line matching against the puzzle's
currently available action tokens; anything else is dialogue.  The countdown
clock is simulated: it ticks down by a fixed amount once per solver/expert
round, so both roles of a round see the same reading and real-time rules are
judged against exactly the value the solver was shown.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import puzzles
from .actions import ActionOutcome, NOOP
from .clock import format_clock
from .errors import ConfigError, TurnOrderError
from .puzzles import PuzzleState

SOLVER = "solver"
EXPERT = "expert"

IN_PROGRESS = "in_progress"
SOLVED_STATUS = "solved"
FAILED_TURN_LIMIT = "failed_turn_limit"
FAILED_CLOCK = "failed_clock"

TERMINAL_STATUSES = (SOLVED_STATUS, FAILED_TURN_LIMIT, FAILED_CLOCK)

MAX_SEED = 2**64 - 1


@dataclass
class SessionConfig:
    puzzle_id: str
    seed: int
    turn_limit: int = 20
    clock_start: int = 600
    clock_decrement_per_turn: int = 13
    solver: str = "random"
    expert: str = "oracle"

    def __post_init__(self):
        if self.puzzle_id not in puzzles.PUZZLES:
            raise ConfigError(f"unknown puzzle id {self.puzzle_id!r}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if self.turn_limit < 1:
            raise ConfigError("turn_limit must be >= 1")
        if self.clock_start < 1:
            raise ConfigError("clock_start must be >= 1")
        if self.clock_decrement_per_turn < 1:
            raise ConfigError("clock_decrement_per_turn must be >= 1")
        if self.clock_decrement_per_turn % 10 == 0:
            # A multiple of ten would freeze the display's last digit and
            # make the timing puzzles unsolvable.
            raise ConfigError("clock_decrement_per_turn must not be a multiple of 10")

    def to_dict(self) -> dict:
        return {
            "puzzle_id": self.puzzle_id,
            "seed": self.seed,
            "turn_limit": self.turn_limit,
            "clock_start": self.clock_start,
            "clock_decrement_per_turn": self.clock_decrement_per_turn,
            "solver": self.solver,
            "expert": self.expert,
        }


@dataclass
class TurnRecord:
    turn_index: int  # 1-based message number
    role: str
    message_text: str
    parsed_actions: list[str]
    outcomes: list[ActionOutcome]
    clock_at_turn: int
    state_digest: str

    def to_dict(self) -> dict:
        return {
            "turn_index": self.turn_index,
            "role": self.role,
            "message_text": self.message_text,
            "parsed_actions": list(self.parsed_actions),
            "outcomes": [o.to_dict() for o in self.outcomes],
            "clock_at_turn": self.clock_at_turn,
            "state_digest": self.state_digest,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TurnRecord":
        return cls(
            turn_index=d["turn_index"],
            role=d["role"],
            message_text=d["message_text"],
            parsed_actions=list(d["parsed_actions"]),
            outcomes=[ActionOutcome(**o) for o in d["outcomes"]],
            clock_at_turn=d["clock_at_turn"],
            state_digest=d["state_digest"],
        )


@dataclass
class Session:
    config: SessionConfig
    state: PuzzleState
    clock_remaining: int
    turn_index: int = 0
    transcript: list[TurnRecord] = field(default_factory=list)
    mistakes: int = 0
    status: str = IN_PROGRESS

    @property
    def puzzle(self) -> puzzles.Puzzle:
        return puzzles.get_puzzle(self.config.puzzle_id)

    def is_terminal(self) -> bool:
        return self.status != IN_PROGRESS

    def next_role(self) -> str:
        return SOLVER if self.turn_index % 2 == 0 else EXPERT

    def progress(self) -> int:
        return self.puzzle.progress(self.state)


@dataclass
class ParsedReply:
    actions: list[str]

    @property
    def is_chat(self) -> bool:
        return not self.actions


@dataclass
class Observation:
    """Role-scoped view of a session."""

    role: str
    status: str
    chat: list[dict]
    terminal: bool = False
    # Solver-only fields:
    clock_display: str | None = None
    available_actions: list[str] | None = None
    visible_elements: list[dict] | None = None
    has_image: bool = False
    # Expert-only field:
    manual: str | None = None
    # Terminal summary:
    progress: int | None = None
    mistakes: int | None = None

    def to_dict(self) -> dict:
        d = {"role": self.role, "status": self.status, "chat": self.chat, "terminal": self.terminal}
        if self.terminal:
            d["progress"] = self.progress
            d["mistakes"] = self.mistakes
            return d
        if self.role == SOLVER:
            d["clock_display"] = self.clock_display
            d["available_actions"] = self.available_actions
            d["visible_elements"] = self.visible_elements
            d["has_image"] = self.has_image
        else:
            d["manual"] = self.manual
        return d


def state_digest(state: PuzzleState) -> str:
    """Stable lowercase-hex digest of the solver-relevant puzzle state."""
    canonical = json.dumps(state.digest_dict(), sort_keys=True, default=_json_default)
    return hashlib.sha256(canonical.encode()).hexdigest()


def _json_default(value):
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"not digestable: {type(value)}")


def create_session(config: SessionConfig) -> Session:
    state = puzzles.generate(config.puzzle_id, config.seed)
    return Session(config=config, state=state, clock_remaining=config.clock_start)


def parse_solver_reply(text: str, available: list[str]) -> ParsedReply:
    """Exact-match parse of a solver reply against the available tokens.

    Each line that equals an available token (after trimming surrounding
    whitespace) becomes an action, in order.  If no line matches, the whole
    text is a chat message for the expert.
    """
    tokens = set(available)
    actions = [line.strip() for line in text.split("\n") if line.strip() in tokens]
    return ParsedReply(actions=actions)


def apply_action(session: Session, token: str) -> ActionOutcome:
    """Apply one token via the puzzle's transition rule.

    An unavailable token is a no-op, not a mistake; only rule violations
    detected by the puzzle itself count as mistakes.
    """
    if session.is_terminal():
        raise TurnOrderError("cannot act on a terminated session")
    puzzle = session.puzzle
    if token not in puzzle.available_actions(session.state):
        return ActionOutcome(
            NOOP, progress_after=puzzle.progress(session.state), detail=f"{token} unavailable"
        )
    outcome = puzzle.apply(session.state, token, session.clock_remaining)
    outcome.progress_after = puzzle.progress(session.state)
    if outcome.is_mistake():
        session.mistakes += 1
    return outcome


def advance_turn(session: Session, role: str, text: str) -> TurnRecord:
    """Take one conversation turn for `role` and update the session."""
    if session.is_terminal():
        raise TurnOrderError(f"session already {session.status}")
    if role != session.next_role():
        raise TurnOrderError(f"it is the {session.next_role()}'s turn, not the {role}'s")

    digest = state_digest(session.state)
    clock_at_turn = session.clock_remaining
    actions: list[str] = []
    outcomes: list[ActionOutcome] = []
    if role == SOLVER:
        parsed = parse_solver_reply(text, session.puzzle.available_actions(session.state))
        for token in parsed.actions:
            outcome = apply_action(session, token)
            actions.append(token)
            outcomes.append(outcome)
            if outcome.is_terminal():
                break

    record = TurnRecord(
        turn_index=session.turn_index + 1,
        role=role,
        message_text=text,
        parsed_actions=actions,
        outcomes=outcomes,
        clock_at_turn=clock_at_turn,
        state_digest=digest,
    )
    session.transcript.append(record)
    session.turn_index += 1

    if session.state.solved:
        session.status = SOLVED_STATUS
        return record
    if role == EXPERT:
        # End of a solver/expert round: the countdown ticks.
        session.clock_remaining = max(0, session.clock_remaining - session.config.clock_decrement_per_turn)
    if session.clock_remaining <= 0:
        session.status = FAILED_CLOCK
    elif session.turn_index >= session.config.turn_limit:
        session.status = FAILED_TURN_LIMIT
    return record


def observe(session: Session, role: str) -> Observation:
    """Role-scoped observation: image/actions/clock for the solver, manual
    for the expert, and a terminal summary once the session has ended."""
    if role not in (SOLVER, EXPERT):
        raise ValueError(f"unknown role {role!r}")
    chat = [
        {"turn_index": r.turn_index, "role": r.role, "text": r.message_text}
        for r in session.transcript
    ]
    if session.is_terminal():
        return Observation(
            role=role,
            status=session.status,
            chat=chat,
            terminal=True,
            progress=session.progress(),
            mistakes=session.mistakes,
        )
    if role == SOLVER:
        return Observation(
            role=role,
            status=session.status,
            chat=chat,
            clock_display=format_clock(session.clock_remaining),
            available_actions=session.puzzle.available_actions(session.state),
            visible_elements=session.puzzle.solver_elements(session.state),
            has_image=True,
        )
    return Observation(
        role=role,
        status=session.status,
        chat=chat,
        manual=session.puzzle.manual(session.state),
    )
