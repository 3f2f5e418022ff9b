import pytest

from genkostka.catabolism import (
    NotCatabolizable,
    block_permutation,
    catabolism_trace,
    column_catabolism,
    conjugate,
    ct_polynomial,
    ct_transpose,
    enumerate_cct,
    enumerate_ct,
    is_cct,
    is_ct,
    reverse_row_word,
    row_catabolism,
)
from genkostka.core import QPoly, partitions, rects, transpose, transpose_rects
from genkostka.kostka import k_poly_recurrence
from genkostka.lrtab import PreconditionError, lr_seq_coeff
from genkostka.tableaux import Tableau, charge, pq_symbol_row, row_word

import reference_data as ref


def test_reference_ct_set():
    got = enumerate_ct(ref.LAM, ref.R)
    assert sorted(got, key=row_word) == sorted(ref.CT, key=row_word)
    assert all(is_ct(S, ref.R) for S in ref.CT)


def test_catabolism_chain_of_first():
    tr = catabolism_trace(ref.CT[0], ref.R)
    assert list(tr.stages) == ref.CAT_STAGES
    assert list(tr.recordings) == ref.CAT_RECORDINGS
    assert row_catabolism(ref.CT[0], ref.R[0]) == ref.CAT_STAGES[1]


def test_ct_polynomial_and_charges():
    assert ct_polynomial(ref.LAM, ref.R) == ref.K
    assert sorted(charge(row_word(S)) for S in ref.CT) == [4, 5, 5, 6]


def test_ct_transpose_of_first():
    assert ct_transpose(ref.CT[0], ref.R) == ref.CT_TRANSPOSE_OF_FIRST


def test_ct_transpose_onto_cct():
    images = sorted((ct_transpose(S, ref.R) for S in ref.CT), key=row_word)
    assert images == enumerate_cct(ref.LAM_T, transpose_rects(ref.R))
    assert all(is_cct(U, transpose_rects(ref.R)) for U in images)


def test_conjugation_composite():
    u = block_permutation(ref.R, (2, 1, 3))
    assert u == ref.CONJ_PERMUTATION
    assert conjugate(u, ref.CT[0]) == ref.CONJ_OF_FIRST
    assert is_ct(ref.CONJ_OF_FIRST, rects((4, 2), (2, 3), (3, 1)))


def test_cct_empty_and_reordered_examples():
    assert enumerate_cct((2, 2), rects((3, 1), (1, 1))) == []
    assert enumerate_cct((2, 2), rects((1, 1), (3, 1))) == enumerate_cct((2, 2), rects((2, 1), (2, 1)))
    assert enumerate_cct((2, 2), rects((1, 1), (3, 1)))


def test_single_rectangle():
    K1 = Tableau.of((1, 1, 1), (2, 2, 2))
    assert enumerate_ct((3, 3), rects((2, 3))) == [K1]
    assert ct_transpose(K1, rects((2, 3))) == Tableau.of((1, 1), (2, 2), (3, 3))


def test_catabolism_requires_key():
    with pytest.raises(NotCatabolizable):
        row_catabolism(Tableau.of((2, 2)), rects((1, 1))[0])
    with pytest.raises(NotCatabolizable):
        column_catabolism(Tableau.of((1,), (2,)), rects((1, 2))[0])
    R = rects((2, 1), (2, 1))
    assert not is_ct(Tableau.of((1, 2), (3, 4)), R)
    assert is_ct(Tableau.of((1, 3), (2, 4)), R)


def test_dominance_preconditions():
    with pytest.raises(PreconditionError):
        ct_polynomial((2, 2), rects((1, 1), (1, 3)))
    with pytest.raises(PreconditionError):
        ct_transpose(Tableau.of((1, 2, 2, 2)), rects((1, 1), (1, 3)))


def test_block_permutation_validation():
    with pytest.raises(ValueError):
        block_permutation(ref.R, (1, 1, 2))


def test_reverse_row_word_inverts_insertion():
    w = (3, 1, 4, 1, 5, 2, 6)
    P, Q = pq_symbol_row(w)
    assert reverse_row_word(P, Q) == w


@pytest.mark.parametrize(
    "R",
    [rects((1, 2), (1, 1), (1, 1)), rects((2, 2), (1, 1)), rects((1, 3), (2, 1)), rects((2, 1), (2, 1), (1, 1))],
)
def test_ct_count_and_polynomial_match_other_routes(R):
    n = sum(r.size for r in R)
    for lam in partitions(n):
        cts = enumerate_ct(lam, R)
        assert len(cts) == lr_seq_coeff(lam, R)
        assert ct_polynomial(lam, R) == k_poly_recurrence(lam, R)


def test_transpose_polynomial_matches_on_reference():
    assert QPoly({5: 1, 4: 2, 3: 1}) == k_poly_recurrence(transpose(ref.LAM), ref.R_T_DOMINANT)
