"""Explicit m-B1F edge lists for Circ(2n, {1,3}), keyed by (m, order).

Factors are listed in the order R, B, G, Y.  ``BASE_TYPES`` holds the
expected pair types of each base.
"""

BASES = {
    (2, 10): [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 3), (1, 2), (4, 7), (5, 8), (6, 9)],
        [(0, 9), (1, 4), (2, 5), (3, 6), (7, 8)],
        [(0, 7), (1, 8), (2, 9), (3, 4), (5, 6)],
    ],
    (2, 12): [
        [(0, 1), (2, 5), (3, 4), (6, 9), (7, 10), (8, 11)],
        [(0, 3), (1, 4), (2, 11), (5, 6), (7, 8), (9, 10)],
        [(0, 11), (1, 10), (2, 3), (4, 5), (6, 7), (8, 9)],
        [(0, 9), (1, 2), (3, 6), (4, 7), (5, 8), (10, 11)],
    ],
    (2, 14): [
        [(0, 13), (1, 4), (2, 3), (5, 8), (6, 7), (9, 12), (10, 11)],
        [(0, 1), (2, 5), (3, 6), (4, 7), (8, 9), (10, 13), (11, 12)],
        [(0, 11), (1, 12), (2, 13), (3, 4), (5, 6), (7, 8), (9, 10)],
        [(0, 3), (1, 2), (4, 5), (6, 9), (7, 10), (8, 11), (12, 13)],
    ],
    (2, 16): [
        [(0, 15), (1, 4), (2, 3), (5, 8), (6, 9), (7, 10), (11, 14), (12, 13)],
        [(0, 13), (1, 14), (2, 5), (3, 4), (6, 7), (8, 9), (10, 11), (12, 15)],
        [(0, 1), (2, 15), (3, 6), (4, 5), (7, 8), (9, 10), (11, 12), (13, 14)],
        [(0, 3), (1, 2), (4, 7), (5, 6), (8, 11), (9, 12), (10, 13), (14, 15)],
    ],
    (3, 12): [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)],
        [(0, 3), (1, 2), (4, 7), (5, 6), (8, 11), (9, 10)],
        [(0, 11), (1, 10), (2, 5), (3, 4), (6, 9), (7, 8)],
        [(0, 9), (1, 4), (2, 11), (3, 6), (5, 8), (7, 10)],
    ],
    (3, 14): [
        [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 13), (11, 12)],
        [(0, 13), (1, 2), (3, 4), (5, 6), (7, 8), (9, 12), (10, 11)],
        [(0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11), (12, 13)],
        [(0, 11), (1, 12), (2, 13), (3, 6), (4, 7), (5, 8), (9, 10)],
    ],
    (3, 16): [
        [(0, 1), (2, 3), (4, 5), (6, 9), (7, 8), (10, 13), (11, 14), (12, 15)],
        [(0, 3), (1, 4), (2, 15), (5, 6), (7, 10), (8, 11), (9, 12), (13, 14)],
        [(0, 15), (1, 14), (2, 5), (3, 6), (4, 7), (8, 9), (10, 11), (12, 13)],
        [(0, 13), (1, 2), (3, 4), (5, 8), (6, 7), (9, 10), (11, 12), (14, 15)],
    ],
    # vertices 14..17 were labelled 16..19; shifted down by 2
    (3, 18): [
        [(0, 15), (1, 4), (2, 3), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (16, 17)],
        [(0, 17), (1, 16), (2, 5), (3, 4), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15)],
        [(0, 1), (2, 17), (3, 6), (4, 7), (5, 8), (9, 12), (10, 13), (11, 14), (15, 16)],
        [(0, 3), (1, 2), (4, 5), (6, 9), (7, 10), (8, 11), (12, 15), (13, 16), (14, 17)],
    ],
    (3, 20): [
        [(0, 19), (1, 4), (2, 3), (5, 8), (6, 9), (7, 10), (11, 14), (12, 13), (15, 16), (17, 18)],
        [(0, 17), (1, 18), (2, 5), (3, 4), (6, 7), (8, 11), (9, 12), (10, 13), (14, 15), (16, 19)],
        [(0, 1), (2, 19), (3, 6), (4, 5), (7, 8), (9, 10), (11, 12), (13, 16), (14, 17), (15, 18)],
        [(0, 3), (1, 2), (4, 7), (5, 6), (8, 9), (10, 11), (12, 15), (13, 14), (16, 17), (18, 19)],
    ],
    (6, 18): [
        [(0, 1), (2, 3), (4, 5), (6, 9), (7, 8), (10, 11), (12, 13), (14, 17), (15, 16)],
        [(0, 17), (1, 2), (3, 4), (5, 6), (7, 10), (8, 9), (11, 14), (12, 15), (13, 16)],
        [(0, 3), (1, 4), (2, 5), (6, 7), (8, 11), (9, 12), (10, 13), (14, 15), (16, 17)],
        [(0, 15), (1, 16), (2, 17), (3, 6), (4, 7), (5, 8), (9, 10), (11, 12), (13, 14)],
    ],
    (6, 20): [
        [(0, 19), (1, 4), (2, 3), (5, 8), (6, 7), (9, 10), (11, 12), (13, 16), (14, 17), (15, 18)],
        [(0, 1), (2, 5), (3, 6), (4, 7), (8, 9), (10, 13), (11, 14), (12, 15), (16, 19), (17, 18)],
        [(0, 17), (1, 18), (2, 19), (3, 4), (5, 6), (7, 10), (8, 11), (9, 12), (13, 14), (15, 16)],
        [(0, 3), (1, 2), (4, 5), (6, 9), (7, 8), (10, 11), (12, 13), (14, 15), (16, 17), (18, 19)],
    ],
    (6, 22): [
        [(0, 19), (1, 4), (2, 3), (5, 6), (7, 8), (9, 12), (10, 11), (13, 14), (15, 16), (17, 18), (20, 21)],
        [(0, 21), (1, 20), (2, 5), (3, 6), (4, 7), (8, 11), (9, 10), (12, 13), (14, 15), (16, 17), (18, 19)],
        [(0, 1), (2, 21), (3, 4), (5, 8), (6, 9), (7, 10), (11, 12), (13, 16), (14, 17), (15, 18), (19, 20)],
        [(0, 3), (1, 2), (4, 5), (6, 7), (8, 9), (10, 13), (11, 14), (12, 15), (16, 19), (17, 20), (18, 21)],
    ],
}

BASE_TYPES = {
    (2, 10): ["[10]", "[6,4]"],
    (2, 12): ["[12]", "[8,4]"],
    (2, 14): ["[14]", "[10,4]"],
    (2, 16): ["[16]", "[12,4]"],
    (3, 12): ["[12]", "[6^2]", "[4^3]"],
    (3, 14): ["[14]", "[10,4]", "[8,6]"],
    (3, 16): ["[12,4]", "[10,6]", "[8,8]"],
    (3, 18): ["[18]", "[14,4]", "[12,6]"],
    (3, 20): ["[16,4]", "[14,6]", "[12,8]"],
    (6, 18): ["[18]", "[14,4]", "[12,6]", "[10,8]", "[10,4,4]", "[8,6,4]"],
    (6, 20): ["[20]", "[16,4]", "[14,6]", "[12,8]", "[12,4,4]", "[10,6,4]"],
    # [8,8,6], not [8,8,4]: the lengths must sum to 22
    (6, 22): ["[22]", "[18,4]", "[16,6]", "[14,8]", "[14,4,4]", "[8,8,6]"],
}
