"""Deterministic raster rendering of puzzle modules.

Each puzzle face is composed with Pillow primitives and the bundled default
font, so identical (state, clock, theme) inputs produce byte-identical PNGs.
Sprites (dogs, torus, spheres, labyrinth button, glyph labels) are drawn in
code; no external assets.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from PIL import Image, ImageDraw, ImageFont

from ..clock import format_clock
from ..puzzles import (
    ButtonState,
    ColorState,
    DogState,
    KeypadState,
    LedState,
    MazeState,
    MemoryState,
    PasswordState,
    PuzzleState,
    WhoState,
    WireState,
)
from ..puzzles.maze import GRID as MAZE_GRID

SIZE = 512

PALETTE = {
    "red": (200, 55, 50),
    "blue": (55, 90, 200),
    "green": (60, 160, 80),
    "yellow": (230, 200, 60),
    "magenta": (190, 70, 170),
    "white": (240, 240, 240),
    "black": (25, 25, 25),
    "purple": (130, 70, 180),
    "orange": (230, 130, 50),
    "grey": (150, 150, 150),
}


@dataclass(frozen=True)
class Theme:
    name: str = "default"
    background: tuple = (40, 44, 52)
    panel: tuple = (72, 78, 90)
    text: tuple = (235, 235, 235)
    accent: tuple = (95, 105, 125)


DEFAULT_THEME = Theme()


@dataclass
class RenderedImage:
    width: int
    height: int
    encoding: str
    data: bytes


def render_image(puzzle_id: str, state: PuzzleState, clock_seconds: int,
                 theme: Theme = DEFAULT_THEME) -> RenderedImage:
    img = Image.new("RGB", (SIZE, SIZE), theme.background)
    draw = ImageDraw.Draw(img)
    draw.rounded_rectangle([16, 16, SIZE - 16, SIZE - 16], radius=18, fill=theme.panel)
    _draw_title(draw, puzzle_id, theme)
    renderer = _RENDERERS[puzzle_id]
    renderer(draw, state, clock_seconds, theme)
    buffer = io.BytesIO()
    img.save(buffer, format="PNG")
    return RenderedImage(width=SIZE, height=SIZE, encoding="png", data=buffer.getvalue())


def _font(size: int):
    return ImageFont.load_default(size)


def _draw_title(draw, puzzle_id: str, theme: Theme):
    draw.text((32, 26), puzzle_id.upper(), fill=theme.text, font=_font(22))


def _draw_clock(draw, clock_seconds: int, theme: Theme):
    display = format_clock(clock_seconds)
    draw.rectangle([352, 28, 484, 76], fill=(15, 15, 15))
    draw.text((366, 38), display, fill=(240, 60, 60), font=_font(28))


def _centered_text(draw, box, text, fill, size):
    x0, y0, x1, y1 = box
    font = _font(size)
    tw = draw.textlength(text, font=font)
    draw.text(((x0 + x1 - tw) / 2, (y0 + y1) / 2 - size * 0.55), text, fill=fill, font=font)


def _render_wire(draw, state: WireState, clock_seconds, theme):
    n = len(state.wires)
    top, bottom = 120, 440
    step = (bottom - top) / max(n - 1, 1)
    for i, color in enumerate(state.wires, start=1):
        y = top + (i - 1) * step
        if i in state.cut:
            draw.line([64, y, 220, y], fill=PALETTE[color], width=9)
            draw.line([292, y, 448, y], fill=PALETTE[color], width=9)
        else:
            draw.line([64, y, 448, y], fill=PALETTE[color], width=9)
        draw.text((30, y - 10), str(i), fill=theme.text, font=_font(18))
    draw.rectangle([352, 460, 484, 492], fill=(15, 15, 15))
    draw.text((362, 464), f"SER-{state.serial_last_digit}", fill=(240, 240, 120), font=_font(20))


def _render_button(draw, state: ButtonState, clock_seconds, theme):
    _draw_clock(draw, clock_seconds, theme)
    center, radius = (220, 300), 120
    rim = 14 if state.holding else 0
    draw.ellipse(
        [center[0] - radius, center[1] - radius + rim, center[0] + radius, center[1] + radius + rim],
        fill=PALETTE[state.button_color], outline=(20, 20, 20), width=6,
    )
    _centered_text(draw, [center[0] - radius, center[1] - 20 + rim, center[0] + radius, center[1] + 20 + rim],
                   "HELD" if state.holding else "HOLD", (30, 30, 30), 26)
    strip_color = PALETTE[state.strip_color] if state.holding else (30, 30, 30)
    draw.rectangle([400, 140, 460, 460], fill=strip_color, outline=(20, 20, 20), width=4)


def _render_dog(draw, state: DogState, clock_seconds, theme):
    _draw_clock(draw, clock_seconds, theme)
    for col, row in state.sprite_slots:
        _draw_dog_sprite(draw, 60 + col * 105, 140 + row * 120)
    draw.rounded_rectangle([160, 420, 352, 478], radius=12, fill=(120, 40, 40))
    _centered_text(draw, [160, 420, 352, 478], "SUBMIT", theme.text, 24)


def _draw_dog_sprite(draw, x, y):
    body = (170, 120, 70)
    draw.ellipse([x, y + 30, x + 80, y + 80], fill=body)  # body
    draw.ellipse([x + 55, y, x + 95, y + 40], fill=body)  # head
    draw.polygon([(x + 60, y + 5), (x + 66, y - 14), (x + 74, y + 4)], fill=body)  # ear
    draw.ellipse([x + 78, y + 14, x + 86, y + 22], fill=(25, 25, 25))  # eye
    for leg in range(3):
        lx = x + 10 + leg * 26
        draw.rectangle([lx, y + 72, lx + 9, y + 98], fill=body)
    draw.line([x + 2, y + 40, x - 16, y + 22], fill=body, width=7)  # tail


def _render_who(draw, state: WhoState, clock_seconds, theme):
    draw.rectangle([96, 76, 416, 136], fill=(15, 15, 15))
    _centered_text(draw, [96, 76, 416, 136], state.display_word, (120, 220, 250), 26)
    boxes = {}
    for i, position in enumerate(["top_left", "top_right", "middle_left", "middle_right", "bottom_left", "bottom_right"]):
        col, row = i % 2, i // 2
        x0, y0 = 80 + col * 190, 170 + row * 100
        boxes[position] = (x0, y0, x0 + 170, y0 + 76)
    for position, box in boxes.items():
        label = state.labels[["top_left", "top_right", "middle_left", "middle_right", "bottom_left", "bottom_right"].index(position)]
        pressed = position in state.pressed
        draw.rounded_rectangle(box, radius=10, fill=(50, 50, 58) if pressed else theme.accent)
        _centered_text(draw, box, label, theme.text, 20)


def _render_keypad(draw, state: KeypadState, clock_seconds, theme):
    for i, symbol in enumerate(state.grid):
        col, row = i % 2, i // 2
        x0, y0 = 110 + col * 160, 130 + row * 160
        box = (x0, y0, x0 + 140, y0 + 140)
        lit = symbol in state.lit
        draw.rounded_rectangle(box, radius=14, fill=(235, 235, 210) if lit else (210, 205, 185),
                               outline=(250, 250, 160) if lit else (30, 30, 30), width=6)
        _draw_glyph(draw, box, symbol)


def _draw_glyph(draw, box, symbol: str):
    x0, y0, x1, y1 = box
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    # A distinct two-part mark per glyph name: the name text plus a shape
    # whose geometry is derived from the name, so all 27 are visually unique.
    h = sum(symbol.encode())
    sides = 3 + h % 5
    radius = 34
    import math
    points = [
        (cx + radius * math.cos(2 * math.pi * k / sides + h),
         cy - 14 + radius * math.sin(2 * math.pi * k / sides + h))
        for k in range(sides)
    ]
    draw.polygon(points, outline=(40, 40, 40), width=4)
    _centered_text(draw, [x0, y1 - 46, x1, y1 - 10], symbol, (40, 40, 40), 16)


def _render_led(draw, state: LedState, clock_seconds, theme):
    for i, color in enumerate(state.led_colors):
        x = 96 + i * 72
        on = i + 1 == state.current_stage
        draw.ellipse([x, 80, x + 44, 124], fill=PALETTE[color],
                     outline=(250, 250, 250) if on else (25, 25, 25), width=5)
    draw.text((36, 84), f"S{state.current_stage}", fill=theme.text, font=_font(24))
    for i, letter in enumerate(state.letters()):
        col, row = i % 2, i // 2
        x0, y0 = 110 + col * 160, 170 + row * 150
        box = (x0, y0, x0 + 140, y0 + 130)
        draw.rounded_rectangle(box, radius=12, fill=theme.accent, outline=(25, 25, 25), width=4)
        _centered_text(draw, box, letter, theme.text, 48)


def _render_memory(draw, state: MemoryState, clock_seconds, theme):
    draw.rectangle([196, 76, 316, 166], fill=(15, 15, 15))
    _centered_text(draw, [196, 76, 316, 166], str(state.displays[state.stage - 1]), (120, 250, 140), 52)
    draw.text((36, 84), f"stage {state.stage}/5", fill=theme.text, font=_font(18))
    layout = state.layouts[state.stage - 1]
    for i, label in enumerate(layout):
        x0 = 56 + i * 106
        box = (x0, 260, x0 + 90, 380)
        draw.rounded_rectangle(box, radius=10, fill=theme.accent, outline=(25, 25, 25), width=4)
        _centered_text(draw, box, str(label), theme.text, 40)


def _render_password(draw, state: PasswordState, clock_seconds, theme):
    letters = state.spelled()
    for i, ch in enumerate(letters):
        x0 = 52 + i * 88
        draw.polygon([(x0 + 36, 130), (x0 + 16, 160), (x0 + 56, 160)], fill=theme.accent)  # up
        box = (x0, 180, x0 + 72, 280)
        draw.rectangle(box, fill=(15, 15, 15))
        _centered_text(draw, box, ch.upper(), (250, 220, 120), 44)
        draw.polygon([(x0 + 36, 330), (x0 + 16, 300), (x0 + 56, 300)], fill=theme.accent)  # down
    draw.rounded_rectangle([160, 400, 352, 458], radius=12, fill=(120, 40, 40))
    _centered_text(draw, [160, 400, 352, 458], "SUBMIT", theme.text, 24)


def _render_color(draw, state: ColorState, clock_seconds, theme):
    cell = 92
    for i, color in enumerate(state.grid):
        col, row = i % 4, i // 4
        x0, y0 = 72 + col * cell, 96 + row * cell
        draw.rectangle([x0, y0, x0 + cell - 8, y0 + cell - 8],
                       fill=PALETTE[color], outline=(25, 25, 25), width=3)


def _render_maze(draw, state: MazeState, clock_seconds, theme):
    cell = 64
    ox, oy = 64, 80
    for y in range(MAZE_GRID):
        for x in range(MAZE_GRID):
            fill = (28, 28, 32) if state.walls[y][x] else PALETTE["white"]
            draw.rectangle([ox + x * cell, oy + y * cell, ox + (x + 1) * cell - 2, oy + (y + 1) * cell - 2], fill=fill)
    tx, ty = state.torus_cell
    cx, cy = ox + tx * cell + cell // 2, oy + ty * cell + cell // 2
    draw.ellipse([cx - 22, cy - 22, cx + 22, cy + 22], fill=PALETTE[state.torus_color])
    draw.ellipse([cx - 9, cy - 9, cx + 9, cy + 9], fill=PALETTE["white"])
    for color, (sx, sy) in sorted(state.spheres.items()):
        px, py = ox + sx * cell + cell // 2, oy + sy * cell + cell // 2
        draw.ellipse([px - 16, py - 16, px + 16, py + 16], fill=PALETTE[color], outline=(25, 25, 25), width=2)
    mx, my = state.mouse
    px, py = ox + mx * cell + cell // 2, oy + my * cell + cell // 2
    draw.ellipse([px - 19, py - 19, px + 19, py + 19], fill=PALETTE["grey"], outline=(25, 25, 25), width=2)
    tip = {"N": (px, py - 26), "E": (px + 26, py), "S": (px, py + 26), "W": (px - 26, py)}[state.heading]
    draw.line([px, py, *tip], fill=(25, 25, 25), width=5)
    # labyrinth button, bottom right
    draw.ellipse([430, 440, 490, 500], fill=(200, 200, 210), outline=(25, 25, 25), width=3)
    for r in (6, 14, 22):
        draw.arc([460 - r, 470 - r, 460 + r, 470 + r], start=40 * r, end=40 * r + 300, fill=(25, 25, 25), width=3)


_RENDERERS = {
    "wire": _render_wire,
    "button": _render_button,
    "dog": _render_dog,
    "who": _render_who,
    "keypad": _render_keypad,
    "led": _render_led,
    "memory": _render_memory,
    "password": _render_password,
    "color": _render_color,
    "maze": _render_maze,
}
