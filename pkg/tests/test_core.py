from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genkostka.core import (
    QPoly,
    Rect,
    alphabets,
    columns_of,
    dominates,
    format_rects,
    gamma_weight,
    is_dominant,
    mirror,
    n_stat,
    pad,
    parse_rects,
    partition,
    partitions,
    q_binomial,
    r_matrix,
    rects,
    rects_from_shapes,
    rows_of,
    seq_dominates,
    tau_partition,
    transpose,
    transpose_rects,
)

import reference_data as ref

polys = st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=6).map(QPoly)
parts = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))
rect_seqs = st.lists(st.builds(Rect, st.integers(1, 4), st.integers(1, 4)), min_size=1, max_size=4).map(tuple)


def test_partition_drops_zeros_and_rejects_increase():
    assert partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(ValueError):
        partition((1, 2))
    assert pad((2, 1), 4) == (2, 1, 0, 0)


@given(parts)
def test_transpose_involution(p):
    assert transpose(transpose(p)) == p
    assert sum(transpose(p)) == sum(p)


def test_partitions_counts():
    # partition numbers p(0..8)
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions(4, max_len=2)) == [(4,), (3, 1), (2, 2)]


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 1, 1))


def test_rect_grammar_round_trip():
    R = parse_rects("2x3,4x2,3x1")
    assert R == ref.R
    assert format_rects(R) == "2x3,4x2,3x1"
    assert rects_from_shapes([(3, 3), (2, 2, 2, 2), (1, 1, 1)]) == R
    with pytest.raises(ValueError):
        parse_rects("2y3")
    with pytest.raises(ValueError):
        Rect(0, 2)


def test_running_instance_statistics():
    R = ref.R
    assert gamma_weight(R) == (3, 3, 2, 2, 2, 2, 1, 1, 1)
    assert is_dominant(R)
    assert r_matrix(R) == ref.R_MATRIX
    assert n_stat(R) == ref.N_R
    assert alphabets(R) == [(1, 2), (3, 6), (7, 9)]
    assert not is_dominant(rects((1, 1), (1, 3)))


def test_tau_and_sequence_dominance():
    assert tau_partition(ref.R, 3) == (2,)
    assert tau_partition(ref.R_PRIME, 3) == (1, 1)
    assert seq_dominates(ref.R, ref.R_PRIME)
    assert not seq_dominates(ref.R_PRIME, ref.R)


def test_rows_and_columns():
    R = rects((2, 3), (1, 2))
    assert rows_of(R) == rects((1, 3), (1, 3), (1, 2))
    assert columns_of(R) == transpose_rects(rows_of(R))


@given(rect_seqs)
def test_n_stat_invariances(R):
    assert n_stat(R) == n_stat(tuple(reversed(R)))
    assert n_stat(R) == n_stat(transpose_rects(R))


def test_qpoly_text_round_trip():
    p = QPoly({6: 1, 5: 2, 4: 1})
    assert str(p) == "q^6 + 2*q^5 + q^4"
    assert QPoly.parse(str(p)) == p
    assert str(QPoly({1: 1, 0: -1})) == "q - 1"
    assert str(QPoly()) == "0"
    assert QPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a) == QPoly()
    assert QPoly.parse(str(a)) == a


@given(polys)
def test_mirror_involution(p):
    N = max(p.degree, 0) + 2
    assert mirror(mirror(p, N), N) == p


def test_mirror_refuses_small_pivot():
    with pytest.raises(ValueError):
        mirror(QPoly({3: 1}), 2)


def _q_binomial_by_inversions(a, b):
    # sum of q^inv over 0/1 words with b ones
    out = {}
    for ones in combinations(range(a), b):
        s = set(ones)
        inv = sum(1 for i in range(a) for j in range(i + 1, a) if i in s and j not in s)
        out[inv] = out.get(inv, 0) + 1
    return QPoly(out)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(7) for b in range(a + 1)])
def test_q_binomial_against_inversions(a, b):
    qb = q_binomial(a, b)
    assert qb == _q_binomial_by_inversions(a, b)
    assert qb(1) == comb(a, b)


def test_q_binomial_out_of_range():
    assert q_binomial(2, 3) == QPoly()
    with pytest.raises(ValueError):
        q_binomial(-1, 0)
