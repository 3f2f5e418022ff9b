"""Generalized Kostka polynomials by the symmetrizer and by the recurrence.

K_{lam;R}(q) is the coefficient of s_lam in pi(x^gamma(R) B_eta(x;q)), where
B_eta is the product of 1/(1 - q x_i/x_j) over roots (i, j) joining an
earlier block of eta to a later one.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .core import (
    QPoly,
    Rect,
    RectSeq,
    gamma_weight,
    mirror,
    n_stat,
    num_letters,
    partition,
    total_size,
)
from .lrtab import lr_product_gl
from .lrtab import straighten as _straighten
from .tableaux import charge, column_strict_tableaux, row_word


class DegreeOverflow(ArithmeticError):
    """A polynomial has degree above the mirror pivot n(R)."""

    def __init__(self, msg: str, poly: QPoly, pivot: int):
        super().__init__(msg)
        self.poly = poly
        self.pivot = pivot


@dataclass(frozen=True)
class SignedSchur:
    """sign * s_index; sign 0 means the character vanishes."""

    sign: int
    index: tuple[int, ...] | None = None


def straighten(beta: Sequence[int]) -> SignedSchur:
    """pi(x^beta) = sign * s_index, where index is a dominant weight of the same length."""
    s, idx = _straighten(tuple(beta))
    return SignedSchur(s, idx if s else None)


def roots(eta: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs (i, j), 0-based, with i in an earlier block of eta than j."""
    block = [b for b, e in enumerate(eta) for _ in range(e)]
    n = len(block)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if block[i] < block[j]]


def b_eta_terms(eta: Sequence[int], n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-d monomials of B_eta, one per multiset of d roots."""
    if sum(eta) != n:
        raise ValueError(f"eta sums to {sum(eta)}, not {n}")
    out = []
    for pick in combinations_with_replacement(roots(eta), d):
        w = [0] * n
        for i, j in pick:
            w[i] += 1
            w[j] -= 1
        out.append(tuple(w))
    return out


def _padded(lam: Sequence[int], n: int) -> tuple[int, ...] | None:
    lam = tuple(lam)
    while len(lam) > n and lam[-1] == 0:
        lam = lam[:-1]
    if len(lam) > n:
        return None
    return lam + (0,) * (n - len(lam))


def default_max_deg(R: RectSeq) -> int:
    return n_stat(tuple(R)) + 2


def symmetrizer_degree_bound(lam: Sequence[int], R: RectSeq) -> int:
    """An upper bound on deg K_{lam;R}: sum over i of (n - i)(lam_i - gamma_i).

    A root (i, j) crosses j - i >= 1 of the cuts between consecutive
    positions, so a root multiset of weight beta has at most sum_k (beta_1 +
    ... + beta_k) elements, and that sum is largest for beta = lam - gamma.
    """
    R = tuple(R)
    n = num_letters(R)
    lp = _padded(lam, n)
    if lp is None:
        return 0
    g = gamma_weight(R)
    return max(0, sum((n - 1 - i) * (a - b) for i, (a, b) in enumerate(zip(lp, g))))


def schur_expansion(R: RectSeq, max_deg: int) -> dict[tuple[int, ...], QPoly]:
    """All K_{lam;R} up to degree max_deg by brute force over B_eta terms."""
    R = tuple(R)
    eta = [r.rows for r in R]
    n = num_letters(R)
    g = gamma_weight(R)
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for d in range(max_deg + 1):
        for w in b_eta_terms(eta, n, d):
            s = straighten(tuple(a + b for a, b in zip(g, w)))
            if s.sign:
                c = out.setdefault(s.index, {})
                c[d] = c.get(d, 0) + s.sign
    return {lam: QPoly(c) for lam, c in sorted(out.items(), reverse=True) if QPoly(c)}


def k_poly_symmetrizer_naive(lam: Sequence[int], R: RectSeq, max_deg: int | None = None) -> QPoly:
    """Literal evaluation: sum the signed straightenings of gamma + each B_eta term."""
    R = tuple(R)
    n = num_letters(R)
    lp = _padded(lam, n)
    if lp is None:
        return QPoly()
    max_deg = default_max_deg(R) if max_deg is None else max_deg
    eta = [r.rows for r in R]
    g = gamma_weight(R)
    out: dict[int, int] = {}
    for d in range(max_deg + 1):
        for w in b_eta_terms(eta, n, d):
            s = straighten(tuple(a + b for a, b in zip(g, w)))
            if s.sign and s.index == lp:
                out[d] = out.get(d, 0) + s.sign
    return QPoly(out)


@lru_cache(maxsize=None)
def _kostant(beta: tuple[int, ...], block: tuple[int, ...], max_deg: int) -> tuple[int, ...]:
    """Number of root multisets of weight beta, graded by size, up to max_deg."""
    n = len(beta)
    memo: dict[tuple[int, tuple[int, ...]], list[int]] = {}
    last = block[-1]

    def at(j: int, caps: tuple[int, ...]) -> list[int]:
        # caps[i] = unused outgoing roots of position i < j
        if j == n:
            return [1] + [0] * max_deg if not any(caps) else [0] * (max_deg + 1)
        key = (j, caps)
        if key in memo:
            return memo[key]
        res = [0] * (max_deg + 1)
        src = [i for i in range(j) if caps[i] and block[i] < block[j]]
        def choose(t: int, cur: list[int], taken: int):
            if t == len(src):
                out_j = beta[j] + taken
                if out_j < 0 or (block[j] == last and out_j):
                    return
                sub = at(j + 1, tuple(cur) + (out_j,))
                for d in range(max_deg + 1 - taken):
                    res[d + taken] += sub[d]
                return
            i = src[t]
            for c in range(min(caps[i], max_deg - taken) + 1):
                cur[i] -= c
                choose(t + 1, cur, taken + c)
                cur[i] += c

        choose(0, list(caps), 0)
        memo[key] = res
        return res

    return tuple(at(0, ()))


def k_poly_symmetrizer(lam: Sequence[int], R: RectSeq, max_deg: int | None = None) -> QPoly:
    """Sum over w in S_n of sgn(w) P_q(w(lam+rho) - rho - gamma), truncated at max_deg.

    P_q is the q-graded count of root multisets of a given weight.  This is
    the same sum as k_poly_symmetrizer_naive, grouped by the straightening
    permutation instead of by monomial.
    """
    R = tuple(R)
    n = num_letters(R)
    lp = _padded(lam, n)
    if lp is None or sum(lp) != total_size(R):
        return QPoly()
    max_deg = default_max_deg(R) if max_deg is None else max_deg
    g = gamma_weight(R)
    block = tuple(b for b, r in enumerate(R) for _ in range(r.rows))
    v = [x + n - 1 - i for i, x in enumerate(lp)]
    total = [0] * (max_deg + 1)
    used = [False] * n
    beta = [0] * n

    def rec(i: int, prefix: int, inv: int):
        if i == n:
            coeffs = _kostant(tuple(beta), block, max_deg)
            sgn = -1 if inv % 2 else 1
            for d, c in enumerate(coeffs):
                total[d] += sgn * c
            return
        smaller = 0
        for c in range(n):
            if used[c]:
                continue
            b = v[c] - (n - 1 - i) - g[i]
            s = prefix + b
            if 0 <= s <= max_deg and (i < n - 1 or s == 0):
                used[c] = True
                beta[i] = b
                rec(i + 1, s, inv + smaller)
                used[c] = False
            smaller += 1

    rec(0, 0, 0)
    return QPoly(dict(enumerate(total)))


# ---------------------------------------------------------------- recurrence


@lru_cache(maxsize=None)
def _rec(lam: tuple[int, ...], R: RectSeq) -> QPoly:
    R1 = R[0]
    if len(R) == 1:
        return QPoly({0: 1}) if lam == R1.shape else QPoly()
    n = len(lam)
    e = R1.rows
    m = n - e
    v = [x + n - 1 - i for i, x in enumerate(lam)]
    base = [R1.cols + n - 1 - i for i in range(e)] + [n - 1 - i for i in range(e, n)]
    out = QPoly()
    rest = R[1:]
    for S in combinations(range(n), e):
        alpha = [v[s] - base[k] for k, s in enumerate(S)]
        if any(a < 0 for a in alpha):
            continue
        Sset = set(S)
        comp = [c for c in range(n) if c not in Sset]
        beta = [v[c] - base[e + k] for k, c in enumerate(comp)]
        sign = -1 if sum(s - k for k, s in enumerate(S)) % 2 else 1
        inner = QPoly()
        for tau, c in lr_product_gl(alpha, beta, m).items():
            inner = inner + _rec(tau, rest) * c
        if inner:
            out = out + inner.shift(sum(alpha)) * sign
    return out


def k_poly_recurrence(lam: Sequence[int], R: RectSeq) -> QPoly:
    """K_{lam;R} from the recurrence on the first rectangle with LR coefficients."""
    R = tuple(R)
    if not R:
        return QPoly({0: 1}) if not partition(lam) else QPoly()
    lp = _padded(lam, num_letters(R))
    if lp is None or sum(lp) != total_size(R):
        return QPoly()
    return _rec(lp, R)


def k_tilde(lam: Sequence[int], R: RectSeq, route: str = "recurrence") -> QPoly:
    """q^{n(R)} K_{lam;R}(1/q)."""
    R = tuple(R)
    K = k_poly_recurrence(lam, R) if route == "recurrence" else k_poly_symmetrizer(lam, R)
    N = n_stat(R)
    if K.degree > N:
        raise DegreeOverflow(f"degree {K.degree} exceeds n(R) = {N}", K, N)
    return mirror(K, N)


def contragredient(lam: Sequence[int], R: RectSeq, k: int) -> tuple[tuple[int, ...], RectSeq]:
    """(tilde lam, rev(tilde R)) for the k x n box; needs k > every mu_i and k >= lam_1."""
    R = tuple(R)
    n = num_letters(R)
    lp = _padded(lam, n)
    if lp is None:
        raise ValueError("lam has more parts than letters")
    if any(r.cols >= k for r in R) or (lp and lp[0] > k):
        raise ValueError(f"k = {k} must exceed every column count and be >= lam_1")
    lt = tuple(k - x for x in reversed(lp))
    Rt = tuple(Rect(r.rows, k - r.cols) for r in reversed(R))
    return lt, Rt


# ------------------------------------------------------------ Kostka-Foulkes


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """Sum of q^charge over column-strict tableaux of shape lam and content mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return QPoly()
    out: dict[int, int] = {}
    for T in column_strict_tableaux(lam, mu):
        c = charge(row_word(T))
        out[c] = out.get(c, 0) + 1
    return QPoly(out)


def cocharge_kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    mu = partition(mu)
    n_mu = sum(i * x for i, x in enumerate(mu))
    return mirror(kostka_foulkes(lam, mu), n_mu)


__all__ = [
    "DegreeOverflow",
    "SignedSchur",
    "b_eta_terms",
    "cocharge_kostka_foulkes",
    "contragredient",
    "default_max_deg",
    "k_poly_recurrence",
    "k_poly_symmetrizer",
    "k_poly_symmetrizer_naive",
    "k_tilde",
    "kostka_foulkes",
    "roots",
    "schur_expansion",
    "straighten",
    "symmetrizer_degree_bound",
]
