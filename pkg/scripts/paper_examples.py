"""Recompute the worked examples for the running instance and print them.

Usage: python scripts/paper_examples.py
"""
from genkostka.catabolism import block_permutation, catabolism_trace, conjugate, ct_transpose, enumerate_ct
from genkostka.core import format_rects, mirror, n_stat, rects, transpose, transpose_rects
from genkostka.kostka import k_poly_recurrence, k_poly_symmetrizer
from genkostka.lrtab import LRContext, act_word, charge_r_min, d_p, d_total, enumerate_lrt, lr_transpose
from genkostka.riggedconf import cocharge_config, enumerate_configurations, enumerate_riggings, rc_polynomial, vacancy_table
from genkostka.tableaux import dual_tableau, row_word

LAM = (5, 4, 3, 2, 2, 1)
R = rects((2, 3), (4, 2), (3, 1))


def show(title, obj):
    print(f"== {title}")
    print(obj)
    print()


def main():
    K = k_poly_recurrence(LAM, R)
    show(f"K[{LAM}; {format_rects(R)}]", f"symmetrizer: {k_poly_symmetrizer(LAM, R)}\nrecurrence:  {K}")
    N = n_stat(R)
    show("n(R) and mirrored polynomial", f"n(R) = {N}, q^n K(1/q) = {mirror(K, N)}")

    lrts = sorted(enumerate_lrt(LAM, R), key=row_word)
    ctx = LRContext(R)
    for T in lrts:
        show(f"LR tableau, charge_R = {charge_r_min(T, ctx)}", T)
    first = lrts[3]
    for w in [(), (1,), (2,), (2, 1), (1, 2), (1, 2, 1)]:
        U, c = act_word(w, first, ctx)
        show(f"orbit word {w}: d1={d_p(U, 1, c)} d2={d_p(U, 2, c)} d={d_total(U, c)}", U)
    show("dual tableau (k = 5)", dual_tableau(first, 5, 9))
    for T in lrts:
        show("LR transpose", lr_transpose(T, ctx))

    cts = sorted(enumerate_ct(LAM, R), key=row_word)
    tr = catabolism_trace(cts[3], R)
    for i, (S, Q) in enumerate(zip(tr.stages, list(tr.recordings) + [None])):
        show(f"catabolism stage {i}", f"{S}\nrecording:\n{Q}" if Q is not None else S)
    show("ct transpose", ct_transpose(cts[3], R))
    show("conjugation by (2,1,3)", conjugate(block_permutation(R, (2, 1, 3)), cts[3]))

    (nu,) = enumerate_configurations(LAM, R)
    table = "\n".join(" ".join(map(str, row)) for row in vacancy_table(nu, 7, 3))
    show(f"configuration {nu.nus}, cocharge {cocharge_config(nu)}", table)
    show("riggings", "\n".join(str(rc.labels) for rc in enumerate_riggings(nu)))
    show("RC polynomial (cocharge)", rc_polynomial(LAM, R))
    show("transposed type", f"{transpose(LAM)}; {format_rects(transpose_rects(R))}")

    show("negative coefficients", k_poly_symmetrizer((2, 2), rects((1, 1), (1, 3))))
    show("monotonicity", k_poly_recurrence(LAM, rects((1, 3), (1, 3), (4, 2), (3, 1))))


if __name__ == "__main__":
    main()
