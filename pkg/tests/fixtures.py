"""Frozen golden tables shared between the module tests and the acceptance
gate."""

# Complete ribbon -> X expansion table through degree 4 (keys: compositions,
# values: {forest code: coefficient}).
R_TO_X_TABLE = {
    (1, 1): {"00": 1},
    (2,): {"00": 1, "10": 1},
    (3,): {"000": 1, "100": 1, "010": 1, "200": 1, "110": 1},
    (2, 1): {"000": 2, "100": 1, "010": 1},
    (1, 2): {"000": 2, "100": 1, "010": 1, "200": 1},
    (1, 1, 1): {"000": 1},
    (4,): {"0000": 1, "0010": 1, "0100": 1, "1000": 1, "1010": 1,
           "0200": 1, "2000": 1, "1100": 1, "0110": 1, "1110": 1,
           "1200": 1, "2100": 1, "2010": 1, "3000": 1},
    (3, 1): {"1100": 1, "0110": 1, "1000": 2, "0100": 2, "0010": 2,
             "2000": 1, "0200": 1, "1010": 1, "0000": 3},
    (2, 2): {"1100": 1, "0110": 1, "1000": 3, "0100": 3, "0010": 3,
             "2000": 2, "0200": 2, "1010": 2, "3000": 2, "2100": 1,
             "2010": 1, "0000": 5},
    (1, 3): {"1100": 1, "0110": 1, "1000": 2, "0100": 2, "0010": 2,
             "2000": 2, "0200": 2, "1010": 1, "3000": 2, "2100": 1,
             "2010": 1, "1200": 1, "0000": 3},
    (2, 1, 1): {"1000": 1, "0100": 1, "0010": 1, "0000": 3},
    (1, 2, 1): {"1000": 2, "0100": 2, "0010": 2, "2000": 1, "0200": 1,
                "1010": 1, "0000": 5},
    (1, 1, 2): {"1000": 1, "0100": 1, "0010": 1, "2000": 1, "0200": 1,
                "3000": 1, "0000": 3},
    (1, 1, 1, 1): {"0000": 1},
}

# Eulerian idempotents e_4^(k): coefficients of X_F times 24.
E4_TABLES = {
    1: {"1110": 6, "1200": 4, "2010": 2, "2100": 2},
    2: {"2100": 9, "1010": 6, "3000": 6, "1200": 10, "2010": 9, "2000": 4,
        "0200": 4, "1100": 8, "1110": 11, "0110": 8},
    3: {"2010": 10, "0200": 12, "1110": 6, "0010": 12, "1200": 8,
        "0110": 12, "3000": 12, "1100": 12, "2000": 12, "1010": 12,
        "0100": 12, "2100": 10, "1000": 12},
    4: {"2100": 3, "0200": 8, "2000": 8, "1200": 2, "0110": 4, "1100": 4,
        "2010": 3, "1000": 12, "0100": 12, "1010": 6, "3000": 6,
        "0000": 24, "0010": 12, "1110": 1},
}

# n = 3 words with their ribbon classes.
N3_TABLE = {
    (0, 0, 0): (3,), (0, 0, 1): (3,), (0, 1, 0): (3,), (0, 0, 2): (3,),
    (0, 1, 1): (3,), (1, 0, 0): (1, 2), (1, 0, 1): (1, 2),
    (0, 2, 0): (2, 1), (2, 0, 0): (1, 1, 1), (1, 1, 0): (1, 1, 1),
}

# n = 4 block table: the words of W(I) for each composition of 4.
N4_TABLE = {
    (4,): "0000 0100 0010 0001 0110 0101 0020 0011 0002 0111 0102 0021 "
          "0012 0003",
    (3, 1): "0120 0030",
    (2, 2): "0200 0201",
    (1, 3): "1000 1010 1001 1011 1002",
    (2, 1, 1): "0300 0210",
    (1, 2, 1): "1020",
    (1, 1, 2): "2000 1100 2001 1101",
    (1, 1, 1, 1): "3000 2100 2010 1200 1110",
}

# The 25 words of W(4,1,1,1), by columns of constant first three values.
W4111_TABLE = """0006000 0015000 0105000 0024000 0114000
0005100 0014100 0104100 0023100 0113100
0005010 0014010 0104010 0023010 0113010
0004200 0013200 0103200 0022200 0112200
0004110 0013110 0103110 0022110 0112110"""

# Reverse Polish codes of the up-set of the tree with code 0021, as produced
# by the letter-append process.
UPSET_0021_CODES = ["0000", "0001", "0002", "0003", "0020",
                    "0021", "0100", "0101", "0102"]
