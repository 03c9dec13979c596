"""Two-agent cooperative puzzle benchmark.

Ten seeded puzzle rule engines with instruction manuals, a solver/expert
dialogue loop under a virtual countdown clock, pluggable agents (random,
oracle, remote model, human), evaluation metrics, and a session service
with a browser client for human play.
"""

__version__ = "0.1.0"

PUZZLE_ORDER = [
    "button",
    "dog",
    "wire",
    "who",
    "led",
    "memory",
    "keypad",
    "password",
    "color",
    "maze",
]
