"""Littlewood-Richardson tableaux for rectangle sequences.

An LR tableau of shape lam for R = (R_1, ..., R_t) is a column-strict
tableau of content gamma(R) whose restriction to each alphabet A_i is
lattice in A_i.  This module enumerates them, defines the two versions
of charge_R, the rectangle-switching action of the symmetric group, the
LR transpose map, the covering embeddings and LR coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .core import Partition, Rect, RectSeq, gamma_weight, is_dominant, partition, tau_partition, total_size
from .tableaux import (
    Tableau,
    cocharge,
    is_lattice,
    p_symbol_row,
    pq_symbol_column,
    restrict,
    reverse_column_realize,
    reverse_slide,
    row_word,
    _standard_subwords,
)


class PreconditionError(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


class NonIntegerCharge(ArithmeticError):
    """charge_r_orbit produced a non-integer average."""


@dataclass(frozen=True)
class LRContext:
    R: RectSeq

    @cached_property
    def n(self) -> int:
        return sum(r.rows for r in self.R)

    @cached_property
    def t(self) -> int:
        return len(self.R)

    @cached_property
    def alphabets(self) -> tuple[tuple[int, int], ...]:
        out = []
        a = 1
        for r in self.R:
            out.append((a, a + r.rows - 1))
            a += r.rows
        return tuple(out)

    @cached_property
    def keys(self) -> tuple[Tableau, ...]:
        return canonical_keys(self.R)

    def block_of(self, letter: int) -> int:
        for i, (lo, hi) in enumerate(self.alphabets):
            if lo <= letter <= hi:
                return i
        raise ValueError(f"letter {letter} outside [1,{self.n}]")

    def swap(self, p: int) -> "LRContext":
        R = list(self.R)
        R[p - 1], R[p] = R[p], R[p - 1]
        return LRContext(tuple(R))

    def permute(self, u: Sequence[int]) -> "LRContext":
        return LRContext(permute_seq(u, self.R))


def permute_seq(u: Sequence[int], R: Sequence) -> tuple:
    """Rearrangement uR, in which R_i moves to position u(i)."""
    out = [None] * len(R)
    for i, x in enumerate(R):
        out[u[i] - 1] = x
    return tuple(out)


def key_tableau(r: Rect, start: int) -> Tableau:
    """Rectangle r with row j filled by the letter start + j - 1."""
    return Tableau(tuple((start + j,) * r.cols for j in range(r.rows)))


def canonical_keys(R: RectSeq) -> tuple[Tableau, ...]:
    out = []
    a = 1
    for r in R:
        out.append(key_tableau(r, a))
        a += r.rows
    return tuple(out)


def is_lr(T: Tableau, R: RectSeq) -> bool:
    ctx = LRContext(tuple(R))
    if not T.is_straight or not T.is_column_strict():
        return False
    try:
        if T.content(ctx.n) != gamma_weight(ctx.R):
            return False
    except ValueError:
        return False
    return all(is_lattice(row_word(restrict(T, lo, hi)), lo, hi) for lo, hi in ctx.alphabets)


def _require_lr(T: Tableau, ctx: LRContext) -> None:
    if not is_lr(T, ctx.R):
        raise PreconditionError("tableau is not an LR tableau for this rectangle sequence")


# ------------------------------------------------------------ enumeration


def _lattice_ok(new_counts: Sequence[int], prev_counts: Sequence[int]) -> bool:
    """#(x in rows <= r) <= #(x-1 in rows < r) for every row r."""
    a = 0
    b = 0
    for r, c in enumerate(new_counts):
        a += c
        if a > b:
            return False
        b += prev_counts[r] if r < len(prev_counts) else 0
    return True


def _strips(shape: Partition, size: int, bound: Sequence[int] | None, max_len: int | None) -> Iterator[tuple[int, ...]]:
    """Per-row counts of horizontal strips of `size` cells added to `shape`."""
    L = len(shape) + 1
    if max_len is not None:
        L = min(L, max_len)
    sh = list(shape) + [0] * (L - len(shape))

    def rec(i, left):
        if i == L:
            if left == 0:
                yield ()
            return
        cap = sh[i - 1] - sh[i] if i > 0 else left
        if bound is not None:
            cap = min(cap, (bound[i] if i < len(bound) else 0) - sh[i])
        for c in range(min(cap, left), -1, -1):
            for rest in rec(i + 1, left - c):
                yield (c,) + rest

    yield from rec(0, size)


def _add(shape: Partition, counts: Sequence[int]) -> Partition:
    sh = list(shape) + [0] * (len(counts) - len(shape))
    return partition(a + c for a, c in zip(sh, counts))


def enumerate_lrt(lam: Sequence[int], R: RectSeq) -> list[Tableau]:
    """All LR tableaux of shape lam for R, sorted by row word."""
    lam = partition(lam)
    R = tuple(R)
    if sum(lam) != total_size(R):
        return []
    letters = []  # (size, first_of_block)
    for r in R:
        for j in range(r.rows):
            letters.append((r.cols, j == 0))
    out = []

    def rec(x, shape, prev, fill):
        if x == len(letters):
            if shape == lam:
                out.append(Tableau(tuple(tuple(r) for r in fill)))
            return
        size, first = letters[x]
        for counts in _strips(shape, size, lam, len(lam)):
            if not first and not _lattice_ok(counts, prev):
                continue
            new_fill = [list(r) for r in fill] + [[] for _ in range(len(counts) - len(fill))]
            for i, c in enumerate(counts):
                new_fill[i].extend([x + 1] * c)
            rec(x + 1, _add(shape, counts), counts, new_fill)

    rec(0, (), (), [])
    out.sort(key=row_word)
    return out


def two_rect_tableau(rho: Sequence[int], R1: Rect, R2: Rect, start: int = 1) -> Tableau:
    """The unique LR tableau of shape rho for (R1, R2), letters from `start`."""
    res = enumerate_lrt(rho, (R1, R2))
    if len(res) != 1:
        raise PreconditionError(f"LRT({tuple(rho)};({R1},{R2})) has {len(res)} elements")
    return res[0].map_letters(lambda x: x + start - 1)


# --------------------------------------------------------------- switching


def _switch_p_symbol(P: Tableau, Ra: Rect, Rb: Rect, lo: int) -> Tableau:
    """Replace P in LRT(rho;(Ra,Rb)) by the element of LRT(rho;(Rb,Ra)).

    The key of Ra in the new second alphabet is slid south-east into the
    cells of the Rb-part of P, taken in standardized order; the vacated
    cells then receive the key of Rb.
    """
    rho = P.outer
    mid = lo + Ra.rows
    grid: list[list[int | None]] = [[None] * L for L in rho]
    new2 = lo + Rb.rows
    for j in range(Ra.rows):
        for c in range(Ra.cols):
            grid[j][c] = new2 + j
    targets = sorted(((x, j, i) for i, j, x in P.cells() if x >= mid))
    vacated = []
    for _, j, i in targets:
        vacated.append(reverse_slide(grid, (i, j)))
    if sorted(vacated) != sorted((i, j) for i in range(Rb.rows) for j in range(Rb.cols)):
        raise PreconditionError("sliding did not vacate the expected rectangle")
    for i, j in vacated:
        grid[i][j] = lo + i
    return Tableau(tuple(tuple(r) for r in grid))


def switch_adjacent(T: Tableau, p: int, ctx: LRContext, check: bool = True) -> Tableau:
    """The bijection s_p : LRT(lam;R) -> LRT(lam;s_p R)."""
    if not 1 <= p < ctx.t:
        raise PreconditionError(f"p={p} out of range for t={ctx.t}")
    if check:
        _require_lr(T, ctx)
    lo = ctx.alphabets[p - 1][0]
    hi = ctx.alphabets[p][1]
    Ra, Rb = ctx.R[p - 1], ctx.R[p]
    TB = restrict(T, lo, hi)
    P, Q = pq_symbol_column(row_word(TB))
    Pn = _switch_p_symbol(P, Ra, Rb, lo)
    new_B = reverse_column_realize(Pn, Q, TB.outer, TB.inner)
    rows = [list(r) for r in T.rows]
    for i, j, x in new_B.cells():
        rows[i][j] = x
    return Tableau(tuple(tuple(r) for r in rows))


def reduced_word(u: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically first reduced word a_1...a_r with u = s_{a_1}...s_{a_r}."""
    u = list(u)
    word = []
    while True:
        pos = {v: k for k, v in enumerate(u)}
        for i in range(1, len(u)):
            if pos[i] > pos[i + 1]:
                break
        else:
            return tuple(word)
        word.append(i)
        u[pos[i]], u[pos[i + 1]] = i + 1, i


def act_word(word: Sequence[int], T: Tableau, ctx: LRContext) -> tuple[Tableau, LRContext]:
    """Apply s_{a_1} ... s_{a_r}, rightmost first."""
    for a in reversed(word):
        T = switch_adjacent(T, a, ctx)
        ctx = ctx.swap(a)
    return T, ctx


def act_permutation(u: Sequence[int], T: Tableau, ctx: LRContext) -> Tableau:
    return act_word(reduced_word(u), T, ctx)[0]


def _left_mult(a: int, u: Sequence[int]) -> tuple[int, ...]:
    """s_a u in one-line notation."""
    return tuple(a + 1 if v == a else a if v == a + 1 else v for v in u)


def orbit(T: Tableau, ctx: LRContext) -> dict[tuple[int, ...], tuple[Tableau, LRContext]]:
    """u -> (uT, uR) over all of the symmetric group, using canonical reduced words."""
    _require_lr(T, ctx)
    t = ctx.t
    ident = tuple(range(1, t + 1))
    memo: dict[tuple[int, ...], tuple[Tableau, LRContext]] = {ident: (T, ctx)}

    def get(u):
        if u in memo:
            return memo[u]
        a = reduced_word(u)[0]
        T0, c0 = get(_left_mult(a, u))
        res = (switch_adjacent(T0, a, c0, check=False), c0.swap(a))
        memo[u] = res
        return res

    for u in permutations(ident):
        get(u)
    return memo


def d_p(T: Tableau, p: int, ctx: LRContext) -> int:
    _require_lr(T, ctx)
    return _d_p(T, p, ctx)


def _d_p(T: Tableau, p: int, ctx: LRContext) -> int:
    lo = ctx.alphabets[p - 1][0]
    hi = ctx.alphabets[p][1]
    c = max(ctx.R[p - 1].cols, ctx.R[p].cols)
    P = p_symbol_row(row_word(restrict(T, lo, hi)))
    return sum(max(0, len(r) - c) for r in P.rows)


def d_total(T: Tableau, ctx: LRContext) -> int:
    """d_R(T) = sum_p (t - p) d_p(T)."""
    return sum((ctx.t - p) * _d_p(T, p, ctx) for p in range(1, ctx.t))


def charge_r_orbit(T: Tableau, ctx: LRContext) -> Fraction:
    """Average of d_{uR}(uT) over the symmetric group on t letters."""
    orb = orbit(T, ctx)
    total = sum(d_total(U, c) for U, c in orb.values())
    return Fraction(total, factorial(ctx.t))


def charge_r_orbit_int(T: Tableau, ctx: LRContext) -> int:
    v = charge_r_orbit(T, ctx)
    if v.denominator != 1:
        raise NonIntegerCharge(f"orbit charge {v} is not an integer")
    return v.numerator


# ----------------------------------------------------------- minimal charge


def decomposition_cocharge(v: Sequence[int], subwords: Sequence[Sequence[int]], ctx: LRContext) -> int:
    """Sum of cocharge(u^i), where u^i is the block-relabelled reverse of v^i.

    ``subwords`` lists each v^i by its positions in v.
    """
    total = 0
    for pos in subwords:
        u = tuple(ctx.block_of(v[p]) + 1 for p in sorted(pos, reverse=True))
        total += cocharge(u)
    return total


def ls_decomposition(v: Sequence[int]) -> list[list[int]]:
    """Cyclic standard subword extraction, as positions in position order."""
    return [sorted(s) for s in _standard_subwords(v)]


def proper_decompositions(v: Sequence[int], ctx: LRContext, cap: int = 200_000) -> Iterator[list[list[int]]]:
    """All proper standard decompositions of the R-LR word v (as positions).

    Subword i contains exactly the alphabets A_j with mu_j >= i, each as a
    decreasing word.  Per block, occurrences are matched to subword indices.
    """
    R = ctx.R
    if not is_dominant(R):
        raise PreconditionError("proper decompositions need a dominant rectangle sequence")
    m = R[0].cols if R else 0
    per_block = []
    count = 1
    for (lo, hi), r in zip(ctx.alphabets, R):
        occ = {x: [p for p, y in enumerate(v) if y == x] for x in range(lo, hi + 1)}
        if any(len(o) != r.cols for o in occ.values()):
            raise PreconditionError("word does not have content gamma(R)")
        options = []

        def rec(x, last, acc):
            # last[i] = position of letter x+1 in subword i
            if x < lo:
                options.append(list(acc))
                return
            for perm in permutations(occ[x]):
                if all(perm[i] > last[i] for i in range(r.cols)):
                    acc.append(perm)
                    rec(x - 1, perm, acc)
                    acc.pop()

        rec(hi, (-1,) * r.cols, [])
        per_block.append(options)
        count *= len(options)
        if count > cap:
            raise CapExceeded(f"more than {cap} proper decompositions")
    for choice in product(*per_block):
        subs: list[list[int]] = [[] for _ in range(m)]
        for chains in choice:
            for perm in chains:
                for i, p in enumerate(perm):
                    subs[i].append(p)
        yield [sorted(s) for s in subs]


def charge_r_min(T: Tableau, ctx: LRContext, cap: int = 200_000) -> int:
    """Minimum of decomposition_cocharge over proper standard decompositions."""
    if not is_dominant(ctx.R):
        raise PreconditionError("charge_r_min needs a dominant rectangle sequence")
    _require_lr(T, ctx)
    v = row_word(T)
    best = None
    for subs in proper_decompositions(v, ctx, cap):
        c = decomposition_cocharge(v, subs, ctx)
        if best is None or c < best:
            best = c
    return 0 if best is None else best


def lrt_polynomial(lam: Sequence[int], R: RectSeq, statistic: str = "orbit"):
    from .core import QPoly

    ctx = LRContext(tuple(R))
    if statistic == "min" and not is_dominant(ctx.R):
        raise PreconditionError("the min statistic needs a dominant rectangle sequence")
    out: dict[int, int] = {}
    for T in enumerate_lrt(lam, ctx.R):
        c = charge_r_orbit_int(T, ctx) if statistic == "orbit" else charge_r_min(T, ctx)
        out[c] = out.get(c, 0) + 1
    return QPoly(out)


# ------------------------------------------------------------ LR transpose


def lr_transpose(T: Tableau, ctx: LRContext) -> Tableau:
    """Relabel occurrences column by column, then transpose into LRT(lam^t;R^t)."""
    _require_lr(T, ctx)
    offsets = []
    m = 0
    for r in ctx.R:
        offsets.append(m)
        m += r.cols
    pos: dict[int, list[tuple[int, int]]] = {}
    for i, j, x in T.cells():
        pos.setdefault(x, []).append((j, i))
    new: dict[tuple[int, int], int] = {}
    for x, cells in pos.items():
        b = ctx.block_of(x)
        for k, (j, i) in enumerate(sorted(cells), 1):
            new[(j, i)] = offsets[b] + k
    lam_t = tuple(sum(1 for L in T.outer if L > j) for j in range(T.outer[0])) if T.outer else ()
    return Tableau(tuple(tuple(new[(j, i)] for i in range(L)) for j, L in enumerate(lam_t)))


# -------------------------------------------------------------- embeddings


def _cover_data(R: RectSeq, target: RectSeq) -> tuple[int, int, int]:
    """(k, a, b) with target obtained from R by (k^a),(k^b) -> (k^(a-1)),(k^(b+1))."""
    ks = {r.cols for r in R} | {r.cols for r in target}
    diff = [k for k in ks if tau_partition(R, k) != tau_partition(target, k)]
    if len(diff) != 1:
        raise PreconditionError("sequences differ in more than one column width")
    k = diff[0]
    src = list(tau_partition(R, k))
    dst = list(tau_partition(target, k))
    for a in set(src):
        for b in set(src) | {0}:
            if a < b + 2:
                continue
            s = list(src)
            s.remove(a)
            if b:
                if b not in s:
                    continue
                s.remove(b)
            new = sorted(s + [x for x in (a - 1, b + 1) if x], reverse=True)
            if new == dst:
                return k, a, b
    raise PreconditionError("target is not obtained by one box move in some tau^k")


def _arrangement(src: Sequence[Rect], dst: Sequence[Rect]) -> tuple[int, ...]:
    """A permutation u with u(src) == dst, matching equal rectangles stably."""
    used = [False] * len(dst)
    u = []
    for r in src:
        for k, s in enumerate(dst):
            if not used[k] and s == r:
                used[k] = True
                u.append(k + 1)
                break
        else:
            raise PreconditionError("sequences are not rearrangements of each other")
    return tuple(u)


def embed_cover(T: Tableau, ctx: LRContext, target: RectSeq) -> Tableau:
    """Injection LRT(lam;R) -> LRT(lam;target) for a one-box move in some tau^k."""
    _require_lr(T, ctx)
    target = tuple(target)
    k, a, b = _cover_data(ctx.R, target)
    R = list(ctx.R)
    ia = R.index(Rect(a, k))
    rest_idx = [i for i in range(len(R)) if i != ia]
    if b:
        ib = next(i for i in rest_idx if R[i] == Rect(b, k))
        rest_idx.remove(ib)
        order = [ia, ib] + rest_idx
    else:
        order = [ia] + rest_idx
    normal = tuple(R[i] for i in order)
    u = _arrangement(ctx.R, normal)
    T1 = act_permutation(u, T, ctx)
    first = [Rect(a - 1, k)] if a > 1 else []
    mid = Rect(b + 1, k)
    inter = tuple(first + [mid] + list(normal[2 if b else 1 :]))
    B = a + b
    TB = restrict(T1, 1, B)
    if a > 1:
        new_B = two_rect_tableau(TB.outer, Rect(a - 1, k), mid, 1)
    else:
        new_B = key_tableau(mid, 1)
    rows = [list(r) for r in T1.rows]
    for i, j, x in new_B.cells():
        rows[i][j] = x
    T2 = Tableau(tuple(tuple(r) for r in rows))
    v = _arrangement(inter, target)
    return act_permutation(v, T2, LRContext(inter))


# ---------------------------------------------------------- LR coefficients


def straighten(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """s_w = sign * s_{lam} for a GL weight w; sign 0 when s_w vanishes."""
    n = len(w)
    v = [x + n - 1 - i for i, x in enumerate(w)]
    if len(set(v)) < n:
        return 0, ()
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] < v[j]:
                sign = -sign
    v.sort(reverse=True)
    return sign, tuple(x - (n - 1 - i) for i, x in enumerate(v))


@lru_cache(maxsize=None)
def lr_product(alpha: Partition, beta: Partition, m: int | None = None) -> dict[Partition, int]:
    """s_alpha * s_beta expanded in Schur functions of length <= m."""
    alpha = partition(alpha)
    beta = partition(beta)
    if m is not None and (len(alpha) > m or len(beta) > m):
        return {}
    states: dict[tuple[Partition, tuple[int, ...]], int] = {(alpha, ()): 1}
    for x, size in enumerate(beta):
        nxt: dict[tuple[Partition, tuple[int, ...]], int] = {}
        for (shape, prev), mult in states.items():
            for counts in _strips(shape, size, None, m):
                if x > 0 and not _lattice_ok(counts, prev):
                    continue
                key = (_add(shape, counts), tuple(counts))
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    out: dict[Partition, int] = {}
    for (shape, _), mult in states.items():
        out[shape] = out.get(shape, 0) + mult
    return out


def lr_product_gl(alpha: Sequence[int], beta: Sequence[int], m: int) -> dict[tuple[int, ...], int]:
    """s_alpha s_beta for GL_m weights (negative entries allowed), as weights of length m."""
    if any(alpha[m:]) or any(beta[m:]):
        return {}
    alpha = tuple(alpha[:m]) + (0,) * (m - len(alpha))
    beta = tuple(beta[:m]) + (0,) * (m - len(beta))
    sa, a = straighten(alpha)
    sb, b = straighten(beta)
    if not sa or not sb:
        return {}
    ca = max(0, -min(a, default=0))
    cb = max(0, -min(b, default=0))
    pa = partition(x + ca for x in a)
    pb = partition(x + cb for x in b)
    out = {}
    for sigma, c in lr_product(pa, pb, m).items():
        tau = tuple(x - ca - cb for x in sigma + (0,) * (m - len(sigma)))
        out[tau] = sa * sb * c
    return out


def lr_coeff(tau: Sequence[int], alpha: Sequence[int], beta: Sequence[int], m: int | None = None) -> int:
    """Coefficient of s_tau in s_alpha s_beta (GL_m weights; m defaults to the longest input)."""
    if m is None:
        m = max(len(tau), len(alpha), len(beta))
    tau = tuple(tau) + (0,) * (m - len(tau))
    return lr_product_gl(alpha, beta, m).get(tau, 0)


def lr_seq_coeff(lam: Sequence[int], R: RectSeq) -> int:
    """LR^lam_R: multiplicity of s_lam in the product of s_{R_i}."""
    lam = partition(lam)
    cur: dict[Partition, int] = {(): 1}
    for r in R:
        nxt: dict[Partition, int] = {}
        for mu, c in cur.items():
            for nu, d in lr_product(mu, r.shape).items():
                if all(a <= b for a, b in zip(nu, lam + (0,) * len(nu))) and len(nu) <= len(lam):
                    nxt[nu] = nxt.get(nu, 0) + c * d
        cur = nxt
    return cur.get(lam, 0)


def all_reduced_words(u: Sequence[int]) -> list[tuple[int, ...]]:
    """Every reduced word a_1...a_r with u = s_{a_1}...s_{a_r}."""
    u = tuple(u)
    pos = {v: k for k, v in enumerate(u)}
    out = []
    for a in range(1, len(u)):
        if pos[a] > pos[a + 1]:
            out.extend((a,) + w for w in all_reduced_words(_left_mult(a, u)))
    return out or [()]
