"""Instruction manual text per puzzle, as handed to the expert.

The text is static except for instance-specific parts (the keypad's symbol
columns), which the puzzle modules substitute in.
"""

BUTTON_MANUAL = """\
Button Puzzle

If the button is yellow, hold the button and refer to the next set of
instructions of when to release it.

If you start holding the button down, a colored strip will light up on the
right side of the module. Based on its color, you must release the button at
a specific point in time:

- Blue strip: release when the countdown timer has a 4 in any position.
- White strip: release when the countdown timer has a 1 in any position.
- Yellow strip: release when the countdown timer has a 5 in any position.
- Any other color strip: release when the countdown timer has a 1 in any position.
"""

COLOR_MANUAL = """\
Color Puzzle

Press all squares in the correct group to progress the module.
Pressing a square will cause it to light up white.
Make all squares white to disarm the module.

To begin, press the color group containing the fewest squares.
If there is a tie, you should choose the first color that appears in the list:

- Red
- Blue
- Green
- Yellow
- Magenta

Then use the table to determine the next group to press in each stage.
"Group" refers to all squares of a particular color, or all non-white squares
in the topmost row or leftmost column containing non-white squares.
Pressing an incorrect square will result in a strike and reset the module.
White squares will remain white for the duration of the module, but non-white
squares may change color in each stage.

The table below helps to choose the next subgroup to press. The numbered keys
correspond to the number of currently white squares, and the "previously
pressed color" key gives you values that indicate what color to press next
based on the corresponding number of white squares.

Previously Pressed Color: {Red, Blue, Green, Yellow, Magenta, Row, Column}

1: {Blue, Column, Red, Yellow, Row, Green, Magenta}
2: {Row, Green, Blue, Magenta, Red, Column, Yellow}
3: {Yellow, Magenta, Green, Row, Blue, Red, Column}
4: {Blue, Green, Yellow, Column, Red, Row, Magenta}
5: {Yellow, Row, Blue, Magenta, Column, Red, Green}
6: {Magenta, Red, Yellow, Green, Column, Blue, Row}
7: {Green, Row, Column, Blue, Magenta, Yellow, Red}
8: {Magenta, Red, Green, Blue, Yellow, Column, Row}
9: {Column, Yellow, Red, Green, Row, Magenta, Blue}
10: {Green, Column, Row, Red, Magenta, Blue, Yellow}
11: {Red, Yellow, Row, Column, Green, Magenta, Blue}
12: {Column, Row, Column, Row, Row, Column, Row}
13: {Row, Column, Row, Column, Row, Column, Column}
14: {Column, Column, Row, Row, Column, Row, Column}
15: {Row, Row, Column, Row, Column, Column, Row}
"""

KEYPAD_MANUAL_TEMPLATE = """\
KeyPad Puzzle

Only one column has all four symbols from the keypad.
Press the four buttons in the order their symbols appear from top to bottom
within that column.

Columns:

{columns}
"""

LED_MANUAL = """\
LED Puzzle

Two to five LEDs are installed at the top of the module, representing stages.
To disarm the module, these stages must be solved in order.
Four buttons with four different letters are shown. The letters change at
each stage.
The current stage is indicated by a number in the top left of the module.
The current stage's multiplier is indicated by that stage's LED according to
the following mapping:

- Red: 2
- Green: 3
- Blue: 4
- Yellow: 5
- Purple: 6
- Orange: 7

Assign each letter of the alphabet to the numbers 0-25 (A = 0, B = 1, C = 2, etc.).
A button is correct if its letter value, multiplied by the current stage's
multiplier, modulo 26, is equal to the regular value of the letter on its
diagonally opposite button.
At each stage, press a correct button. There may be more than one possible answer.
"""

MAZE_MANUAL = """\
Maze Puzzle

The mouse is the grey sphere. It can only move into other white squares. Dark
squares are walls and it cannot move into those. The mouse can move forward
or backward or turn left or right.
To disarm the module, navigate the mouse to the accepting position and press
the circular button with the labyrinth.
Pressing the button at any other location causes a strike.
The accepting position is marked with one of four colored spheres. Which one
depends on the color of the torus in the middle of the maze, according to the
table below.

- Torus Colors: Green, Blue, Red, Yellow
- Sphere Colors: Blue, Red, Green, Yellow
"""

MEMORY_MANUAL = """\
Memory Puzzle

Press the correct button to progress the module to the next stage. Complete
all stages to disarm the module.
Pressing an incorrect button will reset the module back to stage 1.
Button positions are ordered from left to right.

Stage 1
- If the display is 1, press the button in the second position.
- If the display is 2, press the button in the second position.
- If the display is 3, press the button in the third position.
- If the display is 4, press the button in the fourth position.

Stage 2
- If the display is 1, press the button labeled "4".
- If the display is 2, press the button in the same position as you pressed in stage 1.
- If the display is 3, press the button in the first position.
- If the display is 4, press the button in the same position as you pressed in stage 1.

Stage 3
- If the display is 1, press the button with the same label you pressed in stage 2.
- If the display is 2, press the button with the same label you pressed in stage 1.
- If the display is 3, press the button in the third position.
- If the display is 4, press the button labeled "4".

Stage 4
- If the display is 1, press the button in the same position as you pressed in stage 1.
- If the display is 2, press the button in the first position.
- If the display is 3, press the button in the same position as you pressed in stage 2.
- If the display is 4, press the button in the same position as you pressed in stage 2.

Stage 5
- If the display is 1, press the button with the same label you pressed in stage 1.
- If the display is 2, press the button with the same label you pressed in stage 2.
- If the display is 3, press the button with the same label you pressed in stage 4.
- If the display is 4, press the button with the same label you pressed in stage 3.
"""

PASSWORD_MANUAL = """\
Password Puzzle

The buttons above and below each letter will cycle through the possibilities
for that position.
Each cycle will have 3 consecutive letters.
Only one combination of the available letters will match a password from the
list below.
Press the submit button once the correct word has been set.

List of Possible Words:
about, after, again, below, could, every, first, found, great, house, large,
learn, never, other, place, plant, point, right, small, sound, spell, still,
study, their, there, these, thing, think, three, water, where, which, world,
would, write.
"""

WHO_MANUAL = """\
Who Puzzle

1. Read the display and use step 1 to determine which button label to read.
2. Using this button label, use step 2 to determine which button to push.

Step 1:
Based on the display, ask the SOLVER to read the label of a particular button
and proceed to step 2:

- "YES": Middle Left
- "FIRST": Top Right
- "DISPLAY": Bottom Right
- "OKAY": Top Right
- "SAYS": Bottom Right
- "NOTHING": Middle Left
- "(No Text)": Bottom Left
- "BLANK": Middle Right
- "NO": Bottom Right
- "LED": Middle Left
- "LEAD": Bottom Right
- "READ": Middle Right
- "RED": Middle Right
- "REED": Bottom Left
- "LEED": Bottom Left
- "HOLD ON": Bottom Right
- "YOU": Middle Right
- "YOU ARE": Bottom Right
- "YOUR": Middle Right
- "YOU'RE": Middle Right
- "UR": Top Left
- "THERE": Bottom Right
- "THEY'RE": Bottom Left
- "THEIR": Middle Right
- "THEY ARE": Middle Left
- "SEE": Bottom Right
- "C": Top Right
- "CEE": Bottom Right

Step 2:
Using the label from step 1, push the first button that appears in its
corresponding list:

- "READY": YES, OKAY, WHAT, MIDDLE, LEFT, PRESS, RIGHT, BLANK, READY, NO, FIRST, UHHH, NOTHING, WAIT
- "FIRST": LEFT, OKAY, YES, MIDDLE, NO, RIGHT, NOTHING, UHHH, WAIT, READY, BLANK, WHAT, PRESS, FIRST
- "NO": BLANK, UHHH, WAIT, FIRST, WHAT, READY, RIGHT, YES, NOTHING, LEFT, PRESS, OKAY, NO, MIDDLE
- "BLANK": WAIT, RIGHT, OKAY, MIDDLE, BLANK, PRESS, READY, NOTHING, NO, WHAT, LEFT, UHHH, YES, FIRST
- "NOTHING": UHHH, RIGHT, OKAY, MIDDLE, YES, BLANK, NO, PRESS, LEFT, WHAT, WAIT, FIRST, NOTHING, READY
- "YES": OKAY, RIGHT, UHHH, MIDDLE, FIRST, WHAT, PRESS, READY, NOTHING, YES, LEFT, BLANK, NO, WAIT
- "WHAT": UHHH, WHAT, LEFT, NOTHING, READY, BLANK, MIDDLE, NO, OKAY, FIRST, WAIT, YES, PRESS, RIGHT
- "UHHH": READY, NOTHING, LEFT, WHAT, OKAY, YES, RIGHT, NO, PRESS, BLANK, UHHH, MIDDLE, WAIT, FIRST
- "LEFT": RIGHT, LEFT, FIRST, NO, MIDDLE, YES, BLANK, WHAT, UHHH, WAIT, PRESS, READY, OKAY, NOTHING
- "RIGHT": YES, NOTHING, READY, PRESS, NO, WAIT, WHAT, RIGHT, MIDDLE, LEFT, UHHH, BLANK, OKAY, FIRST
- "MIDDLE": BLANK, READY, OKAY, WHAT, NOTHING, PRESS, NO, WAIT, LEFT, MIDDLE, RIGHT, FIRST, UHHH, YES
- "OKAY": MIDDLE, NO, FIRST, YES, UHHH, NOTHING, WAIT, OKAY, LEFT, READY, BLANK, PRESS, WHAT, RIGHT
- "WAIT": UHHH, NO, BLANK, OKAY, YES, LEFT, FIRST, PRESS, WHAT, WAIT, NOTHING, READY, RIGHT, MIDDLE
- "PRESS": RIGHT, MIDDLE, YES, READY, PRESS, OKAY, NOTHING, UHHH, BLANK, LEFT, FIRST, WHAT, NO, WAIT
- "YOU": SURE, YOU ARE, YOUR, YOU'RE, NEXT, UH HUH, UR, HOLD, WHAT?, YOU, UH UH, LIKE, DONE, U
- "YOU ARE": YOUR, NEXT, LIKE, UH HUH, WHAT?, DONE, UH UH, HOLD, YOU, U, YOU'RE, SURE, UR, YOU ARE
- "YOUR": UH UH, YOU ARE, UH HUH, YOUR, NEXT, UR, SURE, U, YOU'RE, YOU, WHAT?, HOLD, LIKE, DONE
- "YOU'RE": YOU, YOU'RE, UR, NEXT, UH UH, YOU ARE, U, YOUR, WHAT?, UH HUH, SURE, DONE, LIKE, HOLD
- "UR": DONE, U, UR, UH HUH, WHAT?, SURE, YOUR, HOLD, YOU'RE, LIKE, NEXT, UH UH, YOU ARE, YOU
- "U": UH HUH, SURE, NEXT, WHAT?, YOU'RE, UR, UH UH, DONE, U, YOU, LIKE, HOLD, YOU ARE, YOUR
- "UH HUH": UH HUH, YOUR, YOU ARE, YOU, DONE, HOLD, UH UH, NEXT, SURE, LIKE, YOU'RE, UR, U, WHAT?
- "UH UH": UR, U, YOU ARE, YOU'RE, NEXT, UH UH, DONE, YOU, UH HUH, LIKE, YOUR, SURE, HOLD, WHAT?
- "WHAT?": YOU, HOLD, YOU'RE, YOUR, U, DONE, UH UH, LIKE, YOU ARE, UH HUH, UR, NEXT, WHAT?, SURE
- "DONE": SURE, UH HUH, NEXT, WHAT?, YOUR, UR, YOU'RE, HOLD, LIKE, YOU, U, YOU ARE, UH UH, DONE
- "NEXT": WHAT?, UH HUH, UH UH, YOUR, HOLD, SURE, NEXT, LIKE, DONE, YOU ARE, UR, YOU'RE, U, YOU
- "HOLD": YOU ARE, U, DONE, UH UH, YOU, UR, SURE, WHAT?, YOU'RE, NEXT, HOLD, UH HUH, YOUR, LIKE
- "SURE": YOU ARE, DONE, LIKE, YOU'RE, YOU, HOLD, UH HUH, UR, SURE, U, WHAT?, NEXT, YOUR, UH UH
- "LIKE": YOU'RE, NEXT, U, UR, HOLD, DONE, UH UH, WHAT?, UH HUH, YOU, LIKE, SURE, YOU ARE, YOUR
"""

WIRE_MANUAL = """\
Wire Puzzle

Here is the manual:
The WirePuzzle module can have 3-6 wires on it. Only the one correct wire
needs to be cut to disarm the module. Wire ordering begins with the first on
the top.
A serial number is displayed on the module face; only its last digit matters.

3 Wires:
- If there are no red wires, cut the second wire.
- Otherwise, if the last wire is white, cut the last wire.
- Otherwise, if there is more than one blue wire, cut the last blue wire.
- Otherwise, cut the last wire.

4 Wires:
- If there is more than one red wire and the last digit of the serial number is odd, cut the last red wire.
- Otherwise, if the last wire is yellow and there are no red wires, cut the first wire.
- Otherwise, if there is exactly one blue wire, cut the first wire.
- Otherwise, if there is more than one yellow wire, cut the last wire.
- Otherwise, cut the second wire.

5 Wires:
- If the last wire is black and the last digit of the serial number is odd, cut the fourth wire.
- Otherwise, if there is exactly one red wire and there is more than one yellow wire, cut the first wire.
- Otherwise, if there are no black wires, cut the second wire.
- Otherwise, cut the first wire.

6 Wires:
- If there are no yellow wires and the last digit of the serial number is odd, cut the third wire.
- Otherwise, if there is exactly one yellow wire and there is more than one white wire, cut the fourth wire.
- Otherwise, if there are no red wires, cut the last wire.
- Otherwise, cut the fourth wire.
"""

DOG_MANUAL = """\
Dog Puzzle

A picture containing some dogs will be shown on the display. Based on the
number of dogs in the image, press the submit button when the last digit of
the time left matches the number of dogs in the image.
"""
