"""Worked examples: the known classes, transcribed by hand.

Tuples are most significant first, exactly as printed.  Each class maps an
arrangement to its carry tuple (c_k, ..., c_0).
"""

BASE6 = {
    "tuple": "(4,3,5,1,2)_6",
    "n": 2,
    "sigma": "rho",
    "carries": (0, 1, 1, 1, 0),
    "classes": {
        "(0,4)(1,3)": {
            (4, 3, 5, 1, 2): (0, 1, 1, 1, 0),
            (4, 3, 1, 5, 2): (0, 1, 1, 1, 0),
            (3, 5, 1, 2, 4): (1, 1, 1, 0, 0),
            (3, 1, 5, 2, 4): (1, 1, 1, 0, 0),
        },
        "(4,2,0,1,3)": {
            (2, 5, 1, 3, 4): (0, 1, 1, 1, 0),
            (2, 5, 3, 1, 4): (0, 1, 1, 1, 0),
            (5, 1, 3, 4, 2): (1, 1, 1, 0, 0),
            (5, 3, 1, 4, 2): (1, 1, 1, 0, 0),
        },
        "(4,2,0)(1,3)": {
            (5, 1, 2, 3, 4): (1, 1, 0, 1, 0),
            (3, 2, 5, 1, 4): (1, 0, 1, 1, 0),
            (3, 1, 2, 5, 4): (1, 1, 0, 1, 0),
            (5, 2, 3, 1, 4): (1, 0, 1, 1, 0),
            (3, 4, 5, 1, 2): (1, 0, 1, 1, 0),
            (5, 1, 4, 3, 2): (1, 1, 0, 1, 0),
            (5, 4, 3, 1, 2): (1, 0, 1, 1, 0),
            (3, 1, 4, 5, 2): (1, 1, 0, 1, 0),
        },
        "(4,0,1,3)": {},
    },
    # pi column of the first two tables, relative to the starting tuple
    "pis": {
        (4, 3, 5, 1, 2): "()",
        (4, 3, 1, 5, 2): "(1,2)",
        (3, 5, 1, 2, 4): "psi^4",
        (3, 1, 5, 2, 4): "(1,2)psi^4",
        (2, 5, 1, 3, 4): "(1,2)rho",
        (2, 5, 3, 1, 4): "(1,2)rho(1,2)",
        (5, 1, 3, 4, 2): "(1,2)rho psi^4",
        (5, 3, 1, 4, 2): "(1,2)rho(1,2)psi^4",
    },
}

BASE12 = {
    "tuple": "(5,1,8,6,10,3)_12",
    "n": 3,
    "sigma": "psi^5",
    "carries": (2, 1, 2, 0, 1, 0),
    "classes": {
        "psi^5": {
            (5, 1, 8, 6, 10, 3): (2, 1, 2, 0, 1, 0),
            (10, 3, 5, 1, 8, 6): (1, 0, 2, 1, 2, 0),
            (10, 8, 6, 5, 1, 3): (1, 2, 0, 2, 1, 0),
            (5, 1, 3, 10, 8, 6): (2, 1, 0, 1, 2, 0),
            (5, 6, 10, 8, 1, 3): (2, 0, 1, 2, 1, 0),
            (10, 8, 1, 3, 5, 6): (1, 2, 1, 0, 2, 0),
        },
        "(0,5,4,3,1)": {
            (5, 8, 1, 6, 10, 3): (2, 2, 1, 0, 1, 0),
            (10, 3, 5, 8, 1, 6): (1, 0, 2, 2, 1, 0),
            (10, 6, 5, 8, 1, 3): (1, 0, 2, 2, 1, 0),
            (5, 8, 1, 3, 10, 6): (2, 2, 1, 0, 1, 0),
        },
        "(0,4,3,2,1)": {
            (10, 5, 1, 8, 6, 3): (1, 2, 1, 2, 0, 0),
            (3, 10, 5, 1, 8, 6): (0, 1, 2, 1, 2, 0),
            (10, 8, 1, 5, 6, 3): (1, 2, 1, 2, 0, 0),
            (3, 10, 8, 1, 5, 6): (0, 1, 2, 1, 2, 0),
        },
        "(0,4,3,1)": {
            (10, 5, 8, 1, 6, 3): (1, 2, 2, 1, 0, 0),
            (3, 10, 5, 8, 1, 6): (0, 1, 2, 2, 1, 0),
        },
    },
    # first member found for each non-starting class
    "representatives": {
        "(0,5,4,3,1)": ((5, 8, 1, 6, 10, 3), (2, 2, 1, 0, 1, 0)),
        "(0,4,3,2,1)": ((10, 5, 1, 8, 6, 3), (1, 2, 1, 2, 0, 0)),
        "(0,4,3,1)": ((10, 5, 8, 1, 6, 3), (1, 2, 2, 1, 0, 0)),
    },
}

CYCLIC_714285 = {"tuple": "(7,1,4,2,8,5)_10", "n": 5, "sigma": "psi^5"}
