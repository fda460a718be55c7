"""Shared concrete fixtures: the worked marking and move examples."""

from ggmark.overpartitions import Overpartition

# 18-part overpartition whose plain marking fills rows (7, 6, 5)
GORDON_TEXT = "1,2,2,~4,5,5,~6,6,7,~8,8,8,~10,11,12,12,13,16"
GORDON_MARKS = (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 1, 3, 2, 1)
GORDON_ROWS = (7, 6, 5)

# ordinary partition marking: equal or consecutive parts get distinct marks
ORDINARY_TEXT = "1,1,2,2,2,3,4,5,5,6,6,6"
ORDINARY_MARKS = (1, 2, 3, 4, 5, 1, 2, 1, 3, 2, 4, 5)

# 15-part overpartition whose even/odd marking fills rows (7, 5, 3)
GG_TEXT = "1,1,~2,2,~3,~4,6,7,8,8,~10,10,~11,~12,~13"
GG_MARKS = (1, 1, 1, 2, 3, 1, 2, 1, 2, 3, 1, 2, 3, 1, 2)
GG_ROWS = (7, 5, 3)

# first reduction at position 2: weight 135 -> 134
FIRST_BEFORE = "1,2,2,~4,5,5,~6,6,7,~8,8,8,~10,11,12,12,13,~15"
FIRST_AFTER = "1,2,2,~4,5,5,~6,6,7,~8,8,8,~10,11,~12,12,12,15"

# second dilation at position 5: weight 97 -> 99
SECOND_BEFORE = "1,1,~2,~3,~4,6,7,8,8,~10,10,~11,~12,14"
SECOND_AFTER = "1,1,~2,4,5,6,7,8,8,~10,10,~11,~12,14"
SECOND_AFTER_ROWS = (
    ("1", "1", "~2", "5", "7", "~10", "~12"),
    ("4", "6", "8", "10", "14"),
    ("8", "~11"),
)


def parse(text: str) -> Overpartition:
    return Overpartition.parse(text)
