"""
Published listings as printed, kept as reference data for golden comparisons.

Annotations are copied verbatim, including the general-form entry "329 (=7·43)"
(329 = 7·47); comparisons check values and report annotation mismatches.
"""

# (a, b, x, y, z, r, n13, n15, n17)
TRIPLES = [
    (2, 1, 4, 3, 5, 1, 3, 5, 7),
    (3, 2, 12, 5, 13, 2, 9, 13, 17),
    (4, 1, 8, 15, 17, 3, 11, 17, 23),
    (4, 3, 24, 7, 25, 3, 19, 25, 31),
    (5, 2, 20, 21, 29, 6, 17, 29, 41),
    (5, 4, 40, 9, 41, 4, 33, 41, 49),
    (6, 1, 12, 35, 37, 5, 27, 37, 47),
    (6, 5, 60, 11, 61, 5, 51, 61, 71),
    (7, 2, 28, 45, 53, 10, 33, 53, 73),
    (7, 4, 56, 33, 65, 12, 41, 65, 89),
    (7, 6, 84, 13, 85, 6, 73, 85, 97),
]

TRIPLE_ANNOTATIONS = {
    9: "3·3",
    25: "5·5",
    33: "3·11",
    49: "7·7",
    27: "3·3·3",
    51: "3·17",
    65: "5·13",
    85: "5·17",
}

# prime -> [(kind, s, t)]
SEGREGATED = {
    3: [("f3", 1, 1)],
    11: [("f3", 3, 1)],
    19: [("f3", 1, 3)],
    43: [("f3", 5, 3)],
    59: [("f3", 3, 5)],
    67: [("f3", 7, 3)],
    83: [("f3", 9, 1)],
    5: [("f5", 1, 1)],
    13: [("f5", 3, 1)],
    29: [("f5", 5, 1)],
    37: [("f5", 1, 3)],
    53: [("f5", 7, 1)],
    61: [("f5", 5, 3)],
    7: [("f7", 1, 1)],
    23: [("f7", 3, 1)],
    31: [("f7", 1, 3)],
    47: [("f7", 5, 1)],
    71: [("f7", 1, 5)],
    79: [("f7", 7, 1)],
    17: [("f1a", 3, 1), ("f1b", 1, 1), ("f1c", 1, 1)],
    41: [("f1a", 3, 2), ("f1b", 5, 1), ("f1c", 3, 1)],
    73: [("f1a", 1, 3), ("f1b", 3, 2), ("f1c", 5, 1)],
    89: [("f1a", 9, 1), ("f1b", 5, 2), ("f1c", 3, 2)],
    97: [("f1a", 5, 3), ("f1b", 9, 1), ("f1c", 1, 3)],
}

# (a, b, r, p13, p15, p17)
TRIPLETS = [
    (2, 1, 1, 3, 5, 7),
    (4, 1, 3, 11, 17, 23),
    (5, 2, 6, 17, 29, 41),
    (10, 9, 9, 163, 181, 199),
    (8, 3, 15, 43, 73, 103),
    (10, 3, 21, 67, 109, 151),
    (10, 7, 21, 107, 149, 191),
    (25, 24, 24, 1153, 1201, 1249),
    (17, 2, 30, 233, 293, 353),
    (14, 11, 33, 251, 317, 383),
    (43, 42, 42, 3529, 3613, 3697),
    (23, 20, 60, 809, 929, 1049),
    (16, 9, 63, 211, 337, 463),
    (35, 2, 66, 1097, 1229, 1361),
    (28, 25, 75, 1259, 1409, 1559),
    (19, 10, 90, 281, 461, 641),
    (23, 18, 90, 673, 853, 1033),
    (26, 5, 105, 491, 701, 911),
    (22, 15, 105, 499, 709, 919),
    (26, 21, 105, 907, 1117, 1327),
]

ALL_ONE_TRIPLETS = [
    (25, 24, 24, 1153, 1201, 1249),
    (23, 20, 60, 809, 929, 1049),
    (31, 4, 108, 761, 977, 1193),
    (23, 12, 132, 409, 673, 937),
    (35, 8, 216, 857, 1289, 1721),
]

NONE_ONE_TRIPLETS = [
    (2, 1, 1, 3, 5, 7),
    (10, 9, 9, 163, 181, 199),
    (10, 3, 21, 67, 109, 151),
    (10, 7, 21, 107, 149, 191),
    (14, 11, 33, 251, 317, 383),
    (26, 5, 105, 491, 701, 911),
    (22, 15, 105, 499, 709, 919),
    (26, 21, 105, 907, 1117, 1327),
    (22, 13, 117, 419, 653, 887),
    (34, 21, 273, 1051, 1597, 2143),
]

# (a, b, (a+3b)²-8b², (a+5b)²-32b²)
GENERAL_VALUES = [
    (2, 1, 17, 17),
    (3, 2, 49, 41),
    (4, 1, 41, 49),
    (4, 3, 97, 73),
    (5, 2, 89, 97),
    (5, 4, 161, 113),
    (6, 1, 73, 89),
    (6, 5, 241, 161),
    (7, 2, 137, 161),
    (7, 4, 233, 217),
    (7, 6, 337, 217),
    (8, 1, 113, 137),
    (8, 3, 217, 241),
    (8, 5, 329, 289),
    (8, 7, 449, 281),
    (9, 2, 193, 233),
    (9, 4, 313, 329),
    (9, 8, 577, 353),
    (10, 1, 161, 193),
    (10, 3, 289, 337),
]

GENERAL_FORMS = ((8, 3), (32, 5))

GENERAL_ANNOTATIONS = {
    49: "7·7",
    161: "7·23",
    217: "7·31",
    289: "17·17",
    329: "7·43",
}
