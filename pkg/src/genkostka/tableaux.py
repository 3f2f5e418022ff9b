"""Words and column-strict (skew) tableaux.

Reading words go bottom row to top row, each row left to right.  Column
insertion inserts the letters of a word from right to left, so that its
insertion tableau agrees with the row-insertion tableau of the same word.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .core import Partition, partition

Word = tuple[int, ...]


class AlphabetError(ValueError):
    pass


class RealizationError(ValueError):
    """A (P, Q) pair cannot be realized on the requested skew shape."""


@dataclass(frozen=True)
class Tableau:
    """A filling of the skew shape ``outer / inner``.

    ``rows[i]`` lists the entries of row i to the right of ``inner[i]``.
    Trailing empty rows are dropped so equal cell sets compare equal.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()

    def __post_init__(self):
        rows = [tuple(r) for r in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        inner = tuple(self.inner[: len(rows)])
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "inner", inner)

    @classmethod
    def of(cls, *rows: Sequence[int], inner: Sequence[int] = ()) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows), tuple(inner))

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @cached_property
    def outer(self) -> Partition:
        return tuple(self.inner_at(i) + len(r) for i, r in enumerate(self.rows))

    @property
    def shape(self) -> Partition:
        """Outer shape (for straight tableaux, the shape)."""
        return self.outer

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __len__(self):
        return sum(len(r) for r in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, col, entry) triples, rows top to bottom."""
        for i, r in enumerate(self.rows):
            off = self.inner_at(i)
            for j, x in enumerate(r):
                yield i, off + j, x

    def entry(self, i: int, j: int) -> int | None:
        if i >= len(self.rows):
            return None
        k = j - self.inner_at(i)
        if 0 <= k < len(self.rows[i]):
            return self.rows[i][k]
        return None

    def columns(self) -> list[list[int]]:
        """Entries of each column, top to bottom (skew cells omitted)."""
        cols: list[list[int]] = [[] for _ in range(max(self.outer, default=0))]
        for _, j, x in self.cells():
            cols[j].append(x)
        return cols

    def content(self, n: int | None = None) -> tuple[int, ...]:
        m = max((x for _, _, x in self.cells()), default=0)
        n = m if n is None else n
        if m > n:
            raise AlphabetError(f"letter {m} exceeds alphabet [1,{n}]")
        c = [0] * n
        for _, _, x in self.cells():
            c[x - 1] += 1
        return tuple(c)

    def is_column_strict(self) -> bool:
        if not is_partition_pair(self.outer, self.inner):
            return False
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for i, j, x in self.cells():
            above = self.entry(i - 1, j) if i > 0 else None
            if above is not None and above >= x:
                return False
        return True

    def transpose(self) -> "Tableau":
        """Transposed filling (not column strict in general)."""
        cols = self.columns()
        inner_t = tuple(sum(1 for x in self.inner if x > j) for j in range(len(cols)))
        return Tableau(tuple(tuple(c) for c in cols), inner_t)

    def map_letters(self, f) -> "Tableau":
        return Tableau(tuple(tuple(f(x) for x in r) for r in self.rows), self.inner)

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(tuple(tuple(r) for r in data["rows"]), tuple(data.get("inner", ())))

    def __str__(self):
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for _, _, x in self.cells()) if len(self) else 1
        lines = []
        for i, r in enumerate(self.rows):
            cells = ["." * width] * self.inner_at(i) + [str(x).rjust(width) for x in r]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def is_partition_pair(outer: Sequence[int], inner: Sequence[int]) -> bool:
    ok = all(a >= b for a, b in zip(outer, outer[1:])) and all(a >= b for a, b in zip(inner, inner[1:]))
    return ok and len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def row_word(T: Tableau) -> Word:
    return tuple(x for r in reversed(T.rows) for x in r)


def skew_cells_reading_order(outer: Sequence[int], inner: Sequence[int]) -> list[tuple[int, int]]:
    cells = []
    for i in range(len(outer) - 1, -1, -1):
        lo = inner[i] if i < len(inner) else 0
        cells.extend((i, j) for j in range(lo, outer[i]))
    return cells


def from_word(outer: Sequence[int], inner: Sequence[int], w: Sequence[int]) -> Tableau:
    """Fill the skew shape in reading order with the letters of w."""
    cells = skew_cells_reading_order(outer, inner)
    if len(cells) != len(w):
        raise ValueError(f"shape has {len(cells)} cells but word has {len(w)} letters")
    rows: list[list[int]] = [[] for _ in outer]
    for (i, _), x in zip(cells, w):
        rows[i].append(x)
    return Tableau(tuple(tuple(r) for r in rows), tuple(inner))


def column_word(T: Tableau) -> Word:
    """Columns left to right, each read bottom to top."""
    return tuple(x for col in T.columns() for x in reversed(col))


def from_column_word(outer: Sequence[int], inner: Sequence[int], w: Sequence[int]) -> Tableau:
    """Fill the skew shape column by column, each column bottom to top."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = []
    for j in range(max(outer, default=0)):
        rows_in = [i for i in range(len(outer)) if inner[i] <= j < outer[i]]
        cells.extend((i, j) for i in reversed(rows_in))
    if len(cells) != len(w):
        raise ValueError(f"shape has {len(cells)} cells but word has {len(w)} letters")
    grid: dict[tuple[int, int], int] = dict(zip(cells, w))
    rows = [tuple(grid[(i, j)] for j in range(inner[i], outer[i])) for i in range(len(outer))]
    return Tableau(tuple(rows), inner)


# ------------------------------------------------------------------ insertion


def row_insert(P: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion in place; returns the new cell."""
    i = 0
    while True:
        if i == len(P):
            P.append([x])
            return i, 0
        row = P[i]
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return i, k
        row[k], x = x, row[k]
        i += 1


def p_symbol_row(w: Iterable[int]) -> Tableau:
    P: list[list[int]] = []
    for x in w:
        row_insert(P, x)
    return Tableau(tuple(tuple(r) for r in P))


def pq_symbol_row(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for k, x in enumerate(w, 1):
        i, _ = row_insert(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(k)
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q)))


def _column_insert(C: list[list[int]], x: int) -> tuple[int, int]:
    """Column insertion into the column list C in place; returns the new cell."""
    j = 0
    while True:
        if j == len(C):
            C.append([x])
            return 0, j
        col = C[j]
        k = bisect_left(col, x)
        if k == len(col):
            col.append(x)
            return k, j
        col[k], x = x, col[k]
        j += 1


def _cols_to_tableau(C: list[list[int]]) -> Tableau:
    h = len(C[0]) if C else 0
    return Tableau(tuple(tuple(c[i] for c in C if len(c) > i) for i in range(h)))


def pq_symbol_column(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Column insertion of w_n, w_{n-1}, ..., w_1; Q records the step number."""
    C: list[list[int]] = []
    QC: list[list[int]] = []
    for k, x in enumerate(reversed(w), 1):
        i, j = _column_insert(C, x)
        if j == len(QC):
            QC.append([])
        QC[j].append(k)
        assert len(QC[j]) == i + 1
    return _cols_to_tableau(C), _cols_to_tableau(QC)


def reverse_column_word(P: Tableau, Q: Tableau) -> Word:
    """The word w with pq_symbol_column(w) == (P, Q)."""
    if P.outer != Q.outer or not P.is_straight or not Q.is_straight:
        raise RealizationError("P and Q must be straight tableaux of the same shape")
    cols = P.columns()
    where = {x: (i, j) for i, j, x in Q.cells()}
    if sorted(where) != list(range(1, len(Q) + 1)):
        raise RealizationError("Q is not standard")
    out = []
    for k in range(len(Q), 0, -1):
        i, j = where[k]
        if i != len(cols[j]) - 1:
            raise RealizationError("Q is not a valid recording tableau")
        z = cols[j].pop()
        for c in range(j - 1, -1, -1):
            col = cols[c]
            m = bisect_right(col, z) - 1
            col[m], z = z, col[m]
        out.append(z)
    return tuple(out)


def reverse_column_realize(Pnew: Tableau, Q: Tableau, outer: Sequence[int], inner: Sequence[int] = ()) -> Tableau:
    """The skew tableau of shape outer/inner whose word column-inserts to (Pnew, Q)."""
    w = reverse_column_word(Pnew, Q)
    T = from_word(outer, inner, w)
    if not T.is_column_strict():
        raise RealizationError("the pair does not realize on this shape")
    return T


# ------------------------------------------------------------- jeu de taquin


def reverse_slide(rows: list[list[int | None]], hole: tuple[int, int]) -> tuple[int, int]:
    """Slide the hole north-west until it reaches an inner corner.

    ``rows`` is a rectangular-ish array with ``None`` for empty (inner)
    cells and the hole.  Returns the final position of the hole.
    """
    i, j = hole
    while True:
        up = rows[i - 1][j] if i > 0 and j < len(rows[i - 1]) else None
        left = rows[i][j - 1] if j > 0 else None
        if up is None and left is None:
            return i, j
        if left is None or (up is not None and up >= left):
            rows[i][j] = up
            rows[i - 1][j] = None
            i -= 1
        else:
            rows[i][j] = left
            rows[i][j - 1] = None
            j -= 1


# ----------------------------------------------------------------- evacuation


def evacuation(T: Tableau, n: int) -> Tableau:
    """Schützenberger involution with respect to the alphabet [n]."""
    if not T.is_straight:
        raise ValueError("evacuation needs a straight tableau")
    w = row_word(T)
    if any(x < 1 or x > n for x in w):
        raise AlphabetError(f"letters must lie in [1,{n}]")
    return p_symbol_row(n + 1 - x for x in reversed(w))


def restrict(T: Tableau, lo: int, hi: int) -> Tableau:
    """Skew subtableau of the cells with entries in [lo, hi]."""
    inner = []
    rows = []
    for i, r in enumerate(T.rows):
        below = sum(1 for x in r if x < lo)
        inner.append(T.inner_at(i) + below)
        rows.append(tuple(x for x in r if lo <= x <= hi))
    while rows and not rows[-1]:
        rows.pop()
    inner = inner[: len(rows)]
    return Tableau(tuple(rows), tuple(inner))


# ---------------------------------------------------------- lattice, charge


def is_lattice(w: Sequence[int], lo: int, hi: int) -> bool:
    """Every suffix of w has weakly decreasing content over lo..hi."""
    cnt = [0] * (hi - lo + 1)
    for x in reversed(w):
        if x < lo or x > hi:
            raise AlphabetError(f"letter {x} outside [{lo},{hi}]")
        k = x - lo
        cnt[k] += 1
        if k > 0 and cnt[k] > cnt[k - 1]:
            return False
    return True


def word_content(w: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    n = max(w, default=0) if n is None else n
    c = [0] * n
    for x in w:
        c[x - 1] += 1
    return tuple(c)


def reflect_word(i: int, w: Sequence[int]) -> Word:
    """Crystal reflection s_i on a word.

    Each i+1 is bracketed with the nearest later unbracketed i; the free
    letters form i^p (i+1)^q and are replaced by i^q (i+1)^p.
    """
    w = list(w)
    stack: list[int] = []
    free: list[int] = []
    for pos, x in enumerate(w):
        if x == i + 1:
            stack.append(pos)
        elif x == i:
            if stack:
                stack.pop()
            else:
                free.append(pos)
    q = len(stack)
    for k, pos in enumerate(sorted(free + stack)):
        w[pos] = i if k < q else i + 1
    return tuple(w)


def conj_automorphism(i: int, x):
    """Apply s_i to a word or a (skew) tableau."""
    if isinstance(x, Tableau):
        return from_word(x.outer, x.inner, reflect_word(i, row_word(x)))
    return reflect_word(i, x)


def sort_content(w: Sequence[int]) -> Word:
    """Bubble the content of w into partition order using reflections."""
    w = tuple(w)
    n = max(w, default=0)
    c = list(word_content(w, n))
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            if c[i - 1] < c[i]:
                w = reflect_word(i, w)
                c[i - 1], c[i] = c[i], c[i - 1]
                changed = True
    return w


def _standard_subwords(w: Sequence[int]) -> list[list[int]]:
    """Split a word of partition content into standard subwords (positions)."""
    remaining = list(range(len(w)))
    out = []
    while remaining:
        letters = {w[p] for p in remaining}
        m = 1
        while m + 1 in letters:
            m += 1
        picked = []
        idx = len(remaining)  # scan leftward from the right end
        for letter in range(1, m + 1):
            n_rem = len(remaining)
            for step in range(1, n_rem + 1):
                k = (idx - step) % n_rem
                p = remaining[k]
                if w[p] == letter:
                    picked.append(p)
                    idx = k
                    break
            else:
                raise ValueError("content is not a partition")
        out.append(picked)
        taken = set(picked)
        remaining = [p for p in remaining if p not in taken]
    return out


def _standard_charge(positions: Sequence[int]) -> int:
    """positions[r] is the position of letter r+1 in a standard subword."""
    idx = 0
    total = 0
    for a, b in zip(positions, positions[1:]):
        if b > a:
            idx += 1
        total += idx
    return total


def _partition_charge(w: Sequence[int]) -> int:
    return sum(_standard_charge(s) for s in _standard_subwords(w))


def n_of(mu: Sequence[int]) -> int:
    return sum(i * m for i, m in enumerate(mu))


def charge(w: Sequence[int]) -> int:
    """Lascoux-Schützenberger charge, after sorting the content."""
    v = sort_content(w)
    return _partition_charge(v)


def cocharge(w: Sequence[int]) -> int:
    v = sort_content(w)
    mu = sorted(word_content(v), reverse=True)
    return n_of(mu) - _partition_charge(v)


# ----------------------------------------------------------------- duality


def dual_tableau(T: Tableau, k: int, n: int) -> Tableau:
    """Column j of the result is [n] minus column k+1-j of T."""
    if not T.is_straight:
        raise ValueError("dual_tableau needs a straight tableau")
    if T.outer and T.outer[0] > k:
        raise ValueError(f"first row {T.outer[0]} exceeds k={k}")
    cols = T.columns()
    if any(x > n for c in cols for x in c):
        raise AlphabetError(f"letters must lie in [1,{n}]")
    cols += [[]] * (k - len(cols))
    new_cols = [[x for x in range(1, n + 1) if x not in set(cols[k - 1 - j])] for j in range(k)]
    new_cols = [c for c in new_cols if c]
    h = len(new_cols[0]) if new_cols else 0
    return Tableau(tuple(tuple(c[i] for c in new_cols if len(c) > i) for i in range(h)))


# --------------------------------------------------------------- enumeration


def horizontal_strips(inner: Sequence[int], size: int, bound: Sequence[int] | None = None):
    """Partitions nu ⊇ inner with nu/inner a horizontal strip of `size` cells.

    ``bound`` optionally caps nu cellwise (nu_i <= bound_i).
    """
    L = len(inner) + 1
    inner = list(inner) + [0]
    caps = []
    for i in range(L):
        c = inner[i - 1] if i > 0 else 10**9
        if bound is not None:
            c = min(c, bound[i] if i < len(bound) else 0)
        caps.append(c)

    def rec(i, left):
        if i == L:
            if left == 0:
                yield ()
            return
        hi = min(caps[i], inner[i] + left)
        for v in range(hi, inner[i] - 1, -1):
            for rest in rec(i + 1, left - (v - inner[i])):
                yield (v,) + rest

    for nu in rec(0, size):
        yield partition(nu)


def column_strict_tableaux(outer: Sequence[int], content: Sequence[int], inner: Sequence[int] = ()) -> Iterator[Tableau]:
    """All column-strict fillings of outer/inner with the given content."""
    outer = tuple(outer)
    inner = tuple(inner)
    n = len(content)

    def rec(x, shape, fill):
        if x == n:
            if shape == partition(outer):
                rows = [[] for _ in outer]
                for i, row in enumerate(fill):
                    rows[i] = row
                yield Tableau(tuple(tuple(r) for r in rows), inner)
            return
        for nu in horizontal_strips(shape, content[x], bound=outer):
            new_fill = [list(r) for r in fill] + [[] for _ in range(len(nu) - len(fill))]
            for i, v in enumerate(nu):
                cur = shape[i] if i < len(shape) else 0
                new_fill[i].extend([x + 1] * (v - cur))
            yield from rec(x + 1, nu, new_fill)

    if sum(content) + sum(inner) != sum(outer):
        return
    yield from rec(0, partition(inner), [[] for _ in inner])
