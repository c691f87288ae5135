"""Golden corpus of worked examples, shared by the test suite and the CLI.

Everything here is written in the interchange grammar of ``treebases`` so
tests and humans read one source of truth.  The corpus covers: the full
rooted-tree and normalized-term bases in arity 3, a worked grafting
product, the graft-embedding images and their factorization sizes, the
three arity-3 symmetrized root-graft expansions, the complete arity-4
red/black coloring table (64 trees), one worked decomposition, and the
dimension sequences of the two splitting conjectures.
"""

from __future__ import annotations

ROOTED_TREES_N3 = (
    "1(2,3)", "2(1,3)", "3(1,2)",
    "1(2(3))", "1(3(2))", "2(1(3))",
    "2(3(1))", "3(1(2))", "3(2(1))",
)

COMMAG_TERMS_N3 = ("((1*2)*3)", "(1*(2*3))", "(2*(1*3))")

# one grafting product, worked vertex by vertex
GRAFT_EXAMPLE = {
    "left": "3(1,4)",
    "right": "2",
    "result": ("3(1(2),4)", "3(1,2,4)", "3(1,4(2))"),
}

# graft-embedding images of the normalized terms
PSI_IMAGES = {
    "(1*2)": "1(2)",
    "((1*2)*3)": "1(2,3)",
    "(1*(2*3))": "1(2(3))",
    "(2*(1*3))": "2(1(3))",
}

# sizes of the second factor in the unique root-graft factorization
D_STATISTIC = {
    "1(2,3)": 1,
    "1(2(3))": 2,
    "2(1(3))": 2,
}

# the three arity-3 symmetrized root-graft expansions, term for term
PHI_TILDE_ARITY3 = {
    "(1*(2*3))": ("1(2(3))", "1(3(2))", "2(1,3)", "3(1,2)"),
    "((1*2)*3)": ("1(2,3)", "2(1,3)", "3(1(2))", "3(2(1))"),
    "(2*(1*3))": ("2(1(3))", "2(3(1))", "1(2,3)", "3(1,2)"),
}

# The complete red/black coloring of every tree on {1,2,3,4}: pairs of
# (tree, red edge list), red edges as (parent, child) label pairs sorted
# ascending.  Transcribed from the 64 printed figures.
COLORINGS_N4 = (
    ("1(2(3(4)))", ()),
    ("1(2(4(3)))", ((4, 3),)),
    ("1(3(2(4)))", ()),
    ("1(3(4(2)))", ((4, 2),)),
    ("1(4(2(3)))", ((4, 2),)),
    ("1(4(3(2)))", ((3, 2), (4, 3))),
    ("2(1(3(4)))", ()),
    ("2(1(4(3)))", ((4, 3),)),
    ("2(3(1(4)))", ()),
    ("2(3(4(1)))", ((4, 1),)),
    ("2(4(1(3)))", ((4, 1),)),
    ("2(4(3(1)))", ((3, 1), (4, 3))),
    ("3(1(2(4)))", ()),
    ("3(1(4(2)))", ((4, 2),)),
    ("3(2(1(4)))", ()),
    ("3(2(4(1)))", ((4, 1),)),
    ("3(4(1(2)))", ((4, 1),)),
    ("3(4(2(1)))", ((2, 1), (4, 2))),
    ("4(1(2(3)))", ((4, 1),)),
    ("4(1(3(2)))", ((3, 2), (4, 1))),
    ("4(2(1(3)))", ((4, 2),)),
    ("4(2(3(1)))", ((3, 1), (4, 2))),
    ("4(3(1(2)))", ((3, 1), (4, 3))),
    ("4(3(2(1)))", ((2, 1), (3, 2), (4, 3))),
    ("1(2(3,4))", ()),
    ("1(3(2,4))", ((3, 2), (3, 4))),
    ("1(4(2,3))", ((4, 2), (4, 3))),
    ("2(1(3,4))", ()),
    ("2(3(1,4))", ((3, 1), (3, 4))),
    ("2(4(1,3))", ((4, 1), (4, 3))),
    ("3(1(2,4))", ()),
    ("3(2(1,4))", ((2, 1), (2, 4), (3, 2))),
    ("3(4(1,2))", ((4, 1), (4, 2))),
    ("4(1(2,3))", ((4, 1),)),
    ("4(2(1,3))", ((2, 1), (2, 3), (4, 2))),
    ("4(3(1,2))", ((3, 1), (3, 2), (4, 3))),
    ("1(2,3(4))", ()),
    ("1(2,4(3))", ((4, 3),)),
    ("1(3,2(4))", ()),
    ("1(3,4(2))", ((4, 2),)),
    ("1(2(3),4)", ()),
    ("1(3(2),4)", ((1, 3), (1, 4), (3, 2))),
    ("2(1,3(4))", ((2, 1), (2, 3))),
    ("2(1,4(3))", ((2, 1), (2, 4), (4, 3))),
    ("2(3,1(4))", ()),
    ("2(3,4(1))", ((4, 1),)),
    ("2(1(3),4)", ()),
    ("2(3(1),4)", ((2, 3), (2, 4), (3, 1))),
    ("3(1,2(4))", ((3, 1), (3, 2))),
    ("3(1,4(2))", ((3, 1), (3, 4), (4, 2))),
    ("3(2,1(4))", ((3, 1), (3, 2))),
    ("3(2,4(1))", ((3, 2), (3, 4), (4, 1))),
    ("3(1(2),4)", ((3, 1), (3, 4))),
    ("3(2(1),4)", ((2, 1), (3, 2), (3, 4))),
    ("4(1,2(3))", ((4, 1), (4, 2))),
    ("4(1,3(2))", ((3, 2), (4, 1), (4, 3))),
    ("4(2,1(3))", ((4, 1), (4, 2))),
    ("4(2,3(1))", ((3, 1), (4, 2), (4, 3))),
    ("4(1(2),3)", ((4, 1), (4, 3))),
    ("4(2(1),3)", ((2, 1), (4, 2), (4, 3))),
    ("1(2,3,4)", ()),
    ("2(1,3,4)", ((2, 1), (2, 3), (2, 4))),
    ("3(1,2,4)", ((3, 1), (3, 2), (3, 4))),
    ("4(1,2,3)", ((4, 1), (4, 2), (4, 3))),
)

# one worked decomposition
DECOMPOSITION_EXAMPLE = {
    "tree": "4(1(2,3))",
    "blocks": ((1, 2, 3), (4,)),
    "components": ("1(2,3)", "4"),
    "skeleton": "4(3)",
}

# dimensions of the conjectural splitting factors
X_DIMS = (1, 1, 3, 16, 120, 1146, 13258)
Y_DIMS = (1, 3, 18, 168, 2130)


def fixtures_json_obj():
    return {
        "rooted_trees_n3": list(ROOTED_TREES_N3),
        "commag_terms_n3": list(COMMAG_TERMS_N3),
        "graft_example": {"left": GRAFT_EXAMPLE["left"],
                          "right": GRAFT_EXAMPLE["right"],
                          "result": list(GRAFT_EXAMPLE["result"])},
        "psi_images": dict(PSI_IMAGES),
        "d_statistic": dict(D_STATISTIC),
        "phi_tilde_arity3": {k: list(v) for k, v in PHI_TILDE_ARITY3.items()},
        "colorings_n4": [{"tree": t, "red": [list(e) for e in red]}
                         for t, red in COLORINGS_N4],
        "decomposition_example": {
            "tree": DECOMPOSITION_EXAMPLE["tree"],
            "blocks": [list(b) for b in DECOMPOSITION_EXAMPLE["blocks"]],
            "components": list(DECOMPOSITION_EXAMPLE["components"]),
            "skeleton": DECOMPOSITION_EXAMPLE["skeleton"],
        },
        "x_dims": list(X_DIMS),
        "y_dims": list(Y_DIMS),
    }
