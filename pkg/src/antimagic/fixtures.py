"""Concrete example labelings and verbatim matrix fixtures.

These are the small hand-built inputs the golden tests and the special-case
join construction rely on; they are stored literally so certificates are
byte-reproducible.
"""

from .graphs import Graph
from .labelings import EdgeLabeling
from .magic import MagicRectangle

# One-point union of two 4-cycles glued at vertex 6 (degree-4 cut vertex),
# with a local antimagic 3-coloring: induced sums 9,9,9,9,10,10,16.
TWO_C4_UNION_LABELS = {
    (0, 4): 8, (0, 6): 1,
    (1, 4): 2, (1, 6): 7,
    (2, 5): 6, (2, 6): 3,
    (3, 5): 4, (3, 6): 5,
}

# One-point union of two triangles glued at vertex 4,
# with a local antimagic 3-coloring: induced sums 7,7,9,9,10.
TWO_C3_UNION_LABELS = {
    (0, 2): 6, (0, 4): 1,
    (1, 3): 5, (1, 4): 2,
    (2, 4): 3, (3, 4): 4,
}


def two_c4_union_labeling():
    g = Graph(7, tuple(TWO_C4_UNION_LABELS))
    return EdgeLabeling(g, dict(TWO_C4_UNION_LABELS))


def two_c3_union_labeling():
    g = Graph(5, tuple(TWO_C3_UNION_LABELS))
    return EdgeLabeling(g, dict(TWO_C3_UNION_LABELS))


# An explicit 8x6 magic rectangle (row sum 147, column sum 196).
RECTANGLE_8X6 = (
    (1, 44, 9, 36, 29, 28),
    (2, 43, 10, 35, 30, 27),
    (3, 42, 11, 34, 31, 26),
    (4, 41, 12, 33, 32, 25),
    (45, 8, 37, 16, 17, 24),
    (46, 7, 38, 15, 18, 23),
    (47, 6, 39, 14, 19, 22),
    (48, 5, 40, 13, 20, 21),
)


def rectangle_8x6():
    return MagicRectangle.from_entries(RECTANGLE_8X6)


# Patched bipartite block for the C8 v O6 join: the 8x6 rectangle shifted by 8
# with a handful of within-column swaps, stored verbatim (the swap rule is
# given only by its result).  Rows follow the cycle-vertex list
# u1,u3,u5,u7,u2,u6,u8,u4 and the cycle edges carry labels 1,8,3,2,5,4,7,6.
JOIN_C8_O6_CYCLE_LABELS = (1, 8, 3, 2, 5, 4, 7, 6)
JOIN_C8_O6_ROW_VERTICES = (0, 2, 4, 6, 1, 5, 7, 3)  # 0-based u1,u3,u5,u7,u2,u6,u8,u4
JOIN_C8_O6_BLOCK = (
    (9, 52, 17, 44, 37, 36),
    (10, 51, 18, 43, 38, 31),
    (11, 50, 19, 42, 39, 34),
    (12, 49, 20, 41, 40, 29),
    (53, 16, 45, 24, 27, 32),
    (54, 15, 46, 23, 26, 33),
    (55, 14, 47, 22, 25, 30),
    (56, 13, 48, 21, 28, 35),
)
