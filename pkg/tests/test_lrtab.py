from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genkostka.core import QPoly, rects, transpose, transpose_rects
from genkostka.lrtab import (
    CapExceeded,
    LRContext,
    PreconditionError,
    act_permutation,
    act_word,
    all_reduced_words,
    charge_r_min,
    charge_r_orbit,
    d_p,
    d_total,
    decomposition_cocharge,
    embed_cover,
    enumerate_lrt,
    is_lr,
    lr_coeff,
    lr_product,
    lr_seq_coeff,
    lr_transpose,
    lrt_polynomial,
    ls_decomposition,
    orbit,
    proper_decompositions,
    reduced_word,
    switch_adjacent,
)
from genkostka.tableaux import Tableau, is_lattice, row_word

import reference_data as ref

CTX = LRContext(ref.R)


def _brute_lr(lam, alpha, beta):
    """Skew fillings of lam/alpha with content beta and lattice reading word."""
    inner = alpha + (0,) * (len(lam) - len(alpha))
    cells = [(i, j) for i in range(len(lam)) for j in range(inner[i], lam[i])]
    n = len(beta)
    count = 0
    for fill in product(range(1, n + 1), repeat=len(cells)):
        if tuple(fill.count(k) for k in range(1, n + 1)) != tuple(beta):
            continue
        rows = [[] for _ in lam]
        for (i, _), x in zip(cells, fill):
            rows[i].append(x)
        T = Tableau(tuple(map(tuple, rows)), inner)
        if T.is_column_strict() and is_lattice(row_word(T), 1, n):
            count += 1
    return count


@pytest.mark.parametrize(
    "lam,alpha,beta",
    [((3, 2, 1), (2, 1), (2, 1)), ((4, 2), (2,), (2, 2)), ((3, 3), (2, 1), (2, 1)), ((3, 2, 1, 1), (2, 1), (2, 1, 1))],
)
def test_lr_coeff_against_brute_force(lam, alpha, beta):
    assert lr_coeff(lam, alpha, beta) == _brute_lr(lam, alpha, beta)


def test_lr_product_known_expansion():
    # s_(1) * s_(1) = s_(2) + s_(1,1)
    assert lr_product((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_coeff((3, 2, 1), (2, 1), (2, 1)) == 2


def test_reference_lrt_set():
    got = enumerate_lrt(ref.LAM, ref.R)
    assert sorted(got, key=row_word) == sorted(ref.LRT, key=row_word)
    assert all(is_lr(T, ref.R) for T in got)
    assert lr_seq_coeff(ref.LAM, ref.R) == 4


def test_switch_reproduces_s2T():
    assert switch_adjacent(ref.LRT[0], 2, CTX) == ref.ORBIT[(2,)]


@pytest.mark.parametrize("word", list(ref.ORBIT))
def test_orbit_tableaux_and_d_table(word):
    U, c = act_word(word, ref.LRT[0], CTX)
    assert U == ref.ORBIT[word]
    assert (d_p(U, 1, c), d_p(U, 2, c), d_total(U, c)) == ref.D_TABLE[word]


def test_orbit_charge_of_first():
    assert charge_r_orbit(ref.LRT[0], CTX) == Fraction(6)
    assert sorted(d_total(U, c) for U, c in orbit(ref.LRT[0], CTX).values()) == [5, 5, 6, 6, 7, 7]


def test_lrt_polynomial_both_statistics():
    assert lrt_polynomial(ref.LAM, ref.R, "orbit") == ref.K
    assert lrt_polynomial(ref.LAM, ref.R, "min") == ref.K


def test_min_statistic_needs_dominance():
    with pytest.raises(PreconditionError):
        lrt_polynomial((2, 2), rects((1, 1), (1, 3)), "min")


def test_switch_involution_on_reference():
    for T in ref.LRT:
        for p in (1, 2):
            U = switch_adjacent(T, p, CTX)
            assert is_lr(U, CTX.swap(p).R)
            assert switch_adjacent(U, p, CTX.swap(p)) == T


def test_switch_rejects_non_lr():
    with pytest.raises(PreconditionError):
        switch_adjacent(Tableau.of((2, 1)), 1, LRContext(rects((1, 1), (1, 1))))


def test_reduced_words():
    assert reduced_word(ref.CONJ_PERMUTATION) == ref.CONJ_REDUCED_WORD
    assert reduced_word((1, 2, 3)) == ()
    words = all_reduced_words((3, 2, 1))
    assert sorted(words) == [(1, 2, 1), (2, 1, 2)]


@pytest.mark.parametrize("u", list(permutations((1, 2, 3))))
def test_act_permutation_independent_of_reduced_word(u):
    for T in ref.LRT:
        images = {act_word(w, T, CTX)[0] for w in all_reduced_words(u)}
        assert images == {act_permutation(u, T, CTX)}


def test_minimal_decomposition_example():
    ctx = LRContext(ref.R_O)
    T = ref.T_O
    assert is_lr(T, ref.R_O)
    v = row_word(T)
    assert v == ref.WORD_O
    assert charge_r_min(T, ctx) == 7
    scored = {}
    for d in proper_decompositions(v, ctx):
        key = tuple("".join(str(v[p]) for p in s) for s in d)
        scored[key] = decomposition_cocharge(v, d, ctx)
    best = min(scored.values())
    assert [k for k, s in scored.items() if s == best] == [ref.MIN_DECOMPOSITION]
    ls = ls_decomposition(v)
    assert tuple("".join(str(v[p]) for p in s) for s in ls) == ref.LS_DECOMPOSITION
    assert decomposition_cocharge(v, ls, ctx) == 8


def test_min_charge_cap():
    ctx = LRContext(ref.R_O)
    with pytest.raises(CapExceeded):
        charge_r_min(ref.T_O, ctx, cap=1)


def test_lr_transpose_reference_quadruple():
    images = [lr_transpose(T, CTX) for T in ref.LRT]
    assert images == ref.LRT_TRANSPOSE
    ctx_t = LRContext(transpose_rects(ref.R))
    assert sorted(images, key=row_word) == enumerate_lrt(ref.LAM_T, ctx_t.R)
    assert all(is_lr(U, ctx_t.R) for U in images)
    assert [lr_transpose(U, ctx_t) for U in images] == ref.LRT


def test_displayed_second_transpose_image_has_wrong_content():
    D = ref.LRT_TRANSPOSE_AS_DISPLAYED_2
    assert D.content(6) == (2, 2, 2, 3, 5, 3)
    assert not is_lr(D, transpose_rects(ref.R))
    # it differs from the computed image only in its last two rows
    assert D.rows[:3] == ref.LRT_TRANSPOSE[1].rows[:3]


def test_embed_cover_into_r_prime():
    imgs = [embed_cover(T, CTX, ref.R_PRIME) for T in ref.LRT]
    assert len(set(imgs)) == 4
    assert all(is_lr(U, ref.R_PRIME) for U in imgs)


small_instances = st.sampled_from(
    [
        ((3, 2, 1), rects((1, 2), (2, 1), (1, 1))),
        ((2, 2, 1), rects((2, 1), (1, 2), (1, 1))),
        ((3, 1, 1), rects((1, 2), (1, 2), (1, 1))),
        ((2, 2, 2), rects((2, 2), (1, 1), (1, 1))),
        ((4, 2), rects((1, 2), (1, 2), (1, 2))),
    ]
)


@settings(max_examples=20, deadline=None)
@given(small_instances)
def test_orbit_charge_is_integral_and_invariant(inst):
    lam, R = inst
    ctx = LRContext(R)
    for T in enumerate_lrt(lam, R):
        c = charge_r_orbit(T, ctx)
        assert c.denominator == 1
        for U, cu in orbit(T, ctx).values():
            assert charge_r_orbit(U, cu) == c


@settings(max_examples=20, deadline=None)
@given(small_instances)
def test_lrt_count_matches_transpose(inst):
    lam, R = inst
    assert len(enumerate_lrt(lam, R)) == len(enumerate_lrt(transpose(lam), transpose_rects(R)))


def test_lrt_polynomial_is_qpoly():
    assert isinstance(lrt_polynomial((1,), rects((1, 1))), QPoly)
