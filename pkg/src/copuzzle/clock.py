"""Virtual countdown display helpers.

The clock is simulated: it holds a number of remaining seconds and is
rendered as "m:ss" with zero-padded seconds (600 -> "10:00", 583 -> "9:43",
9 -> "0:09").  Real-time puzzle rules are judged against this display.
"""

from __future__ import annotations


def format_clock(seconds: int) -> str:
    seconds = max(0, int(seconds))
    return f"{seconds // 60}:{seconds % 60:02d}"


def timer_has_digit(display: str, digit: int) -> bool:
    """True iff `digit` appears anywhere among the displayed digits."""
    return str(digit) in display.replace(":", "")


def timer_last_digit(seconds: int) -> int:
    """Last digit of the displayed countdown (the ones digit of seconds)."""
    return max(0, int(seconds)) % 10
