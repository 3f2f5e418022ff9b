"""Frozen reference values for the running instance (lam*, R*) and its relatives."""
from genkostka.core import QPoly, rects
from genkostka.tableaux import Tableau

LAM = (5, 4, 3, 2, 2, 1)
R = rects((2, 3), (4, 2), (3, 1))
N_R = 9
K = QPoly({6: 1, 5: 2, 4: 1})
K_TILDE = QPoly({5: 1, 4: 2, 3: 1})

LAM_T = (6, 5, 3, 2, 1)
R_T = rects((3, 2), (2, 4), (1, 3))
R_T_DOMINANT = rects((2, 4), (1, 3), (3, 2))

R_PRIME = rects((1, 3), (1, 3), (4, 2), (3, 1))
K_PRIME = QPoly({7: 2, 6: 4, 5: 3, 4: 1})

R_MATRIX = [[3, 2, 1], [3, 2, 1], [2, 1, 0], [1, 1, 0]]


def tab(*rows):
    return Tableau.of(*rows)


# LRT(lam*;R*) in the displayed order
LRT = [
    tab((1, 1, 1, 3, 3), (2, 2, 2, 4), (4, 5, 7), (5, 6), (6, 8), (9,)),
    tab((1, 1, 1, 3, 3), (2, 2, 2, 7), (4, 4, 8), (5, 5), (6, 6), (9,)),
    tab((1, 1, 1, 3, 7), (2, 2, 2, 4), (3, 5, 8), (4, 6), (5, 9), (6,)),
    tab((1, 1, 1, 3, 7), (2, 2, 2, 8), (3, 4, 9), (4, 5), (5, 6), (6,)),
]

# orbit of the first LR tableau under the rectangle-switching action
ORBIT = {
    (): LRT[0],
    (1,): tab((1, 1, 5, 5, 5), (2, 2, 6, 6), (3, 3, 7), (4, 4), (6, 8), (9,)),
    (2,): tab((1, 1, 1, 3, 6), (2, 2, 2, 4), (5, 6, 7), (7, 8), (8, 9), (9,)),
    (2, 1): tab((1, 1, 5, 8, 8), (2, 2, 6, 9), (3, 3, 7), (4, 4), (8, 9), (9,)),
    (1, 2): tab((1, 4, 4, 4, 6), (2, 5, 5, 5), (3, 6, 7), (7, 8), (8, 9), (9,)),
    (1, 2, 1): tab((1, 4, 4, 8, 8), (2, 5, 5, 9), (3, 6, 6), (7, 7), (8, 9), (9,)),
}
D_TABLE = {(): (3, 1, 7), (1,): (3, 0, 6), (2,): (2, 1, 5), (2, 1): (3, 0, 6), (1, 2): (2, 1, 5), (1, 2, 1): (3, 1, 7)}

DUAL_OF_FIRST = tab(
    (1, 1, 3, 3, 3), (2, 2, 4, 4, 7), (4, 5, 5, 7, 8), (5, 6, 6, 9), (6, 7, 8), (7, 8, 9), (8, 9), (9,)
)
DUAL_LAM = (5, 5, 5, 4, 3, 3, 2, 1)

# images of LRT under the LR transpose, in the same order; the second one is
# displayed with last rows (5,5)/(6), whose content (2,2,2,3,5,3) is not gamma(R^t)
LRT_TRANSPOSE_AS_DISPLAYED_2 = tab((1, 1, 4, 4, 4, 6), (2, 2, 5, 5, 5), (3, 3, 6), (5, 5), (6,))
LRT_TRANSPOSE = [
    tab((1, 1, 4, 4, 4, 6), (2, 2, 5, 5, 6), (3, 3, 6), (4, 5), (5,)),
    tab((1, 1, 4, 4, 4, 6), (2, 2, 5, 5, 5), (3, 3, 6), (4, 6), (5,)),
    tab((1, 1, 4, 4, 4, 4), (2, 2, 5, 5, 6), (3, 3, 6), (5, 5), (6,)),
    tab((1, 1, 4, 4, 4, 4), (2, 2, 5, 5, 5), (3, 3, 6), (5, 6), (6,)),
]

CT = [
    tab((1, 1, 1, 5, 6), (2, 2, 2, 6), (3, 3, 7), (4, 4), (5, 8), (9,)),
    tab((1, 1, 1, 6, 6), (2, 2, 2, 7), (3, 3, 8), (4, 4), (5, 5), (9,)),
    tab((1, 1, 1, 5, 7), (2, 2, 2, 6), (3, 3, 8), (4, 4), (5, 9), (6,)),
    tab((1, 1, 1, 6, 7), (2, 2, 2, 8), (3, 3, 9), (4, 4), (5, 5), (6,)),
]
CAT_STAGES = [
    CT[0],
    tab((3, 3, 7), (4, 4, 8), (5, 5, 9), (6, 6)),
    tab((7,), (8,), (9,)),
    Tableau(()),
]
# the displayed Q_1 carries a stray fifth row; its transpose fixes the shape (3,3,3,2)
CAT_RECORDINGS = [
    tab((1, 2, 3), (4, 5, 10), (6, 7, 11), (8, 9)),
    tab((1,), (2,), (3,)),
    Tableau(()),
]
CT_TRANSPOSE_OF_FIRST = tab((1, 1, 4, 4, 5, 6), (2, 2, 5, 5, 6), (3, 3, 6), (4, 4), (5,))
CONJ_PERMUTATION = (5, 6, 1, 2, 3, 4, 7, 8, 9)
CONJ_REDUCED_WORD = (4, 3, 2, 1, 5, 4, 3, 2)
CONJ_OF_FIRST = tab((1, 1, 5, 5, 6), (2, 2, 6, 6), (3, 3, 7), (4, 4), (5, 8), (9,))

NU = ((1,), (2, 1), (2, 1), (2, 1), (1,))
VACANCY = [[0, 1, 1], [0, 0, 1], [1, 1, 1], [0, 0, 0], [0, 1, 1], [1, 1, 1], [0, 0, 0]]
L_MAX = ((0,), (0, 0), (1, 1), (0, 0), (0,))
RIGGINGS = [
    ((0,), (0, 0), (0, 0), (0, 0), (0,)),
    ((0,), (0, 0), (0, 1), (0, 0), (0,)),
    ((0,), (0, 0), (1, 0), (0, 0), (0,)),
    ((0,), (0, 0), (1, 1), (0, 0), (0,)),
]
NU_HAT = ((3,), (3, 1), (2, 1), (1,))
NU_HAT_VACANCY = [[1, 1, 1, 1], [0, 1, 1, 2], [0, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 1], [0, 0, 0, 0]]

# the charge_R decomposition example
LAM_O = (5, 4, 2, 1, 1)
R_O = rects((2, 2), (3, 2), (1, 2), (1, 1))
T_O = tab((1, 1, 3, 3, 6), (2, 2, 4, 6), (4, 5), (5,), (7,))
WORD_O = (7, 5, 4, 5, 2, 2, 4, 6, 1, 1, 3, 3, 6)
MIN_DECOMPOSITION = ("7542613", "524136")
LS_DECOMPOSITION = ("7524136", "542613")
