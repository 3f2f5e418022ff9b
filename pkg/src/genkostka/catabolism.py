"""Row and column catabolism, catabolizable tableaux and the CT -> CCT transpose."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import QPoly, Rect, RectSeq, gamma_weight, is_dominant, partition, total_size, transpose
from .lrtab import PreconditionError, key_tableau, reduced_word
from .tableaux import (
    RealizationError,
    Tableau,
    charge,
    column_strict_tableaux,
    column_word,
    conj_automorphism,
    from_column_word,
    p_symbol_row,
    pq_symbol_column,
    restrict,
    row_word,
)


class NotCatabolizable(ValueError):
    pass


def _check_key(S: Tableau, R1: Rect, lo: int) -> None:
    if not S.is_straight:
        raise NotCatabolizable("catabolism needs a straight tableau")
    if any(x < lo for _, _, x in S.cells()):
        raise NotCatabolizable(f"letters below {lo}")
    if restrict(S, lo, lo + R1.rows - 1) != key_tableau(R1, lo):
        raise NotCatabolizable("restriction to the first alphabet is not the key tableau")


def _split_rows(S: Tableau, R1: Rect) -> tuple[Tableau, Tableau]:
    """S_+ (first eta_1 rows of S - K_1) and S_- (the remaining rows)."""
    rest = [r[R1.cols:] if i < R1.rows else r for i, r in enumerate(S.rows)]
    inner = (R1.cols,) * R1.rows
    plus = Tableau(tuple(rest[: R1.rows]), inner)
    minus = Tableau(tuple(rest[R1.rows:]))
    return plus, minus


def _col_words(S: Tableau, R1: Rect) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reading words of S_r (columns > mu_1) and S_l (columns <= mu_1, below K_1)."""
    right: list[int] = []
    left: list[int] = []
    for i in range(len(S.rows) - 1, -1, -1):
        r = S.rows[i]
        right.extend(r[R1.cols:])
        if i >= R1.rows:
            left.extend(r[: R1.cols])
    return tuple(right), tuple(left)


def catabolism_word(S: Tableau, R1: Rect, lo: int = 1) -> tuple[int, ...]:
    _check_key(S, R1, lo)
    plus, minus = _split_rows(S, R1)
    return row_word(plus) + row_word(minus)


def row_catabolism(S: Tableau, R1: Rect, lo: int = 1) -> Tableau:
    """Cat_{R1}(S) = P(word(S_+) word(S_-))."""
    return p_symbol_row(catabolism_word(S, R1, lo))


def column_catabolism_word(S: Tableau, R1: Rect, lo: int = 1) -> tuple[int, ...]:
    _check_key(S, R1, lo)
    right, left = _col_words(S, R1)
    return right + left


def column_catabolism(S: Tableau, R1: Rect, lo: int = 1) -> Tableau:
    """CCat_{R1}(S) = P(word(S_r) word(S_l))."""
    return p_symbol_row(column_catabolism_word(S, R1, lo))


def _is_cat(S: Tableau, R: RectSeq, lo: int, step) -> bool:
    for r in R:
        try:
            S = step(S, r, lo)
        except NotCatabolizable:
            return False
        lo += r.rows
    return len(S) == 0


def is_ct(S: Tableau, R: RectSeq) -> bool:
    return _is_cat(S, tuple(R), 1, row_catabolism)


def is_cct(S: Tableau, R: RectSeq) -> bool:
    return _is_cat(S, tuple(R), 1, column_catabolism)


def _candidates(lam: Sequence[int], R: RectSeq):
    """Column-strict tableaux of content gamma(R) with K_1 in the corner."""
    lam = partition(lam)
    R = tuple(R)
    if not R:
        if not lam:
            yield Tableau(())
        return
    if sum(lam) != total_size(R):
        return
    R1 = R[0]
    if len(lam) < R1.rows or any(lam[i] < R1.cols for i in range(R1.rows)):
        return
    gamma = gamma_weight(R)
    content = (0,) * R1.rows + gamma[R1.rows:]
    inner = (R1.cols,) * R1.rows
    key = key_tableau(R1, 1)
    for T in column_strict_tableaux(lam, content, inner):
        rows = [key.rows[i] + T.rows[i] if i < R1.rows else T.rows[i] for i in range(len(T.rows))]
        rows += [key.rows[i] for i in range(len(rows), R1.rows)]
        yield Tableau(tuple(rows))


def enumerate_ct(lam: Sequence[int], R: RectSeq) -> list[Tableau]:
    out = [S for S in _candidates(lam, R) if is_ct(S, R)]
    out.sort(key=row_word)
    return out


def enumerate_cct(lam: Sequence[int], R: RectSeq) -> list[Tableau]:
    out = [S for S in _candidates(lam, R) if is_cct(S, R)]
    out.sort(key=row_word)
    return out


def ct_polynomial(lam: Sequence[int], R: RectSeq) -> QPoly:
    """Sum of q^charge over CT(lam;R)."""
    if not is_dominant(tuple(R)):
        raise PreconditionError("ct_polynomial needs a dominant rectangle sequence")
    out: dict[int, int] = {}
    for S in enumerate_ct(lam, R):
        c = charge(row_word(S))
        out[c] = out.get(c, 0) + 1
    return QPoly(out)


# ------------------------------------------------------------- transpose


@dataclass(frozen=True)
class CatabolismTrace:
    """Stages S_0, S_1, ..., S_t = empty, with the column-insertion Q_i of each step."""

    stages: tuple[Tableau, ...]
    recordings: tuple[Tableau, ...]


def catabolism_trace(S: Tableau, R: RectSeq) -> CatabolismTrace:
    stages = [S]
    recs = []
    lo = 1
    for r in R:
        w = catabolism_word(stages[-1], r, lo)
        P, Q = pq_symbol_column(w)
        stages.append(P)
        recs.append(Q)
        lo += r.rows
    if len(stages[-1]):
        raise NotCatabolizable("catabolism chain does not end at the empty tableau")
    return CatabolismTrace(tuple(stages), tuple(recs))


def reverse_row_word(P: Tableau, Q: Tableau) -> tuple[int, ...]:
    """The word w with pq_symbol_row(w) == (P, Q)."""
    if P.outer != Q.outer:
        raise RealizationError("P and Q must have the same shape")
    rows = [list(r) for r in P.rows]
    where = {x: i for i, _, x in Q.cells()}
    out = []
    for k in range(len(Q), 0, -1):
        i = where[k]
        y = rows[i].pop()
        for r in range(i - 1, -1, -1):
            row = rows[r]
            m = max(j for j, z in enumerate(row) if z < y)
            row[m], y = y, row[m]
        out.append(y)
    out.reverse()
    return tuple(out)


def ct_transpose(S: Tableau, R: RectSeq) -> Tableau:
    """Map S in CT(lam;R) to U in CCT(lam^t;R^t) by reverse column catabolisms.

    Stage U_i is rebuilt from U_{i+1} and Q_i^t by reverse row insertion;
    the recovered word is the column reading word of U_r followed by that
    of U_l.  Raises RealizationError if a reconstructed stage is not column strict.
    """
    R = tuple(R)
    if not is_dominant(R):
        raise PreconditionError("ct_transpose needs a dominant rectangle sequence")
    trace = catabolism_trace(S, R)
    Rt = tuple(r.t() for r in R)
    starts = []
    a = 1
    for r in Rt:
        starts.append(a)
        a += r.rows
    U = Tableau(())
    for i in range(len(R) - 1, -1, -1):
        key = Rt[i]
        lo = starts[i]
        shape = transpose(trace.stages[i].outer)
        Qt = trace.recordings[i].transpose()
        U_next = U
        w = reverse_row_word(U, Qt)
        # U_r: all cells right of the key's columns; U_l: below the key
        right_outer = [L for L in shape]
        right_inner = [min(L, key.cols) for L in shape]
        left_outer = [min(L, key.cols) for L in shape[key.rows:]]
        n_right = sum(o - i_ for o, i_ in zip(right_outer, right_inner))
        Ur = from_column_word(right_outer, right_inner, w[:n_right])
        Ul = from_column_word(left_outer, (), w[n_right:])
        rows = []
        for r in range(len(shape)):
            if r < key.rows:
                left = (lo + r,) * key.cols
            else:
                left = Ul.rows[r - key.rows] if r - key.rows < len(Ul.rows) else ()
            right = Ur.rows[r] if r < len(Ur.rows) else ()
            rows.append(tuple(left) + tuple(right))
        U = Tableau(tuple(rows))
        if U.outer != partition(shape) or not U.is_column_strict():
            raise RealizationError(f"stage {i} of the reconstruction is not column strict")
        if column_word(Ur) + column_word(Ul) != w or column_catabolism(U, key, lo) != U_next:
            raise RealizationError(f"stage {i} does not catabolize back")
    return U


# ------------------------------------------------- conjugation automorphisms


def block_permutation(R: RectSeq, order: Sequence[int]) -> tuple[int, ...]:
    """Letter permutation moving the alphabet of R_i to that of R'_{order[i]}.

    R' is R rearranged so that R_i sits at position order[i] (1-based);
    letters keep their relative order inside each block.
    """
    R = tuple(R)
    t = len(R)
    if sorted(order) != list(range(1, t + 1)):
        raise ValueError(f"{tuple(order)} is not a permutation of 1..{t}")
    new = [None] * t
    for i, p in enumerate(order):
        new[p - 1] = R[i]
    start_new = {}
    a = 1
    for p, r in enumerate(new, 1):
        start_new[p] = a
        a += r.rows
    u = []
    for i, r in enumerate(R):
        u.extend(start_new[order[i]] + j for j in range(r.rows))
    return tuple(u)


def conjugate(u: Sequence[int], S: Tableau) -> Tableau:
    """Apply the automorphism of conjugation of the letter permutation u."""
    for a in reversed(reduced_word(u)):
        S = conj_automorphism(a, S)
    return S


__all__ = [
    "block_permutation",
    "conjugate",
    "CatabolismTrace",
    "NotCatabolizable",
    "catabolism_trace",
    "column_catabolism",
    "ct_polynomial",
    "ct_transpose",
    "enumerate_cct",
    "enumerate_ct",
    "is_cct",
    "is_ct",
    "reverse_row_word",
    "row_catabolism",
]
