"""Partitions, weights, rectangle sequences and exact q-polynomials.

Partitions and weights are plain tuples of ints.  A partition never stores
trailing zeros; use :func:`pad` when a fixed length is needed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from math import comb
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Weight = tuple[int, ...]


class SizeMismatchError(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Normalize `parts` to a partition, dropping zeros. Raises on bad input."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {tuple(parts)}")
    return p


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def pad(p: Sequence[int], n: int) -> Weight:
    if len(p) > n:
        raise ValueError(f"{tuple(p)} has more than {n} parts")
    return tuple(p) + (0,) * (n - len(p))


def transpose(p: Sequence[int]) -> Partition:
    p = [x for x in p if x > 0]
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Dominance order on partitions of the same size."""
    if sum(alpha) != sum(beta):
        raise SizeMismatchError(f"|{tuple(alpha)}| != |{tuple(beta)}|")
    sa = accumulate(alpha)
    sb = accumulate(beta)
    return all(a >= b for a, b in zip_longest(sa, sb, fillvalue=sum(alpha)))


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def multiplicity(p: Sequence[int], size: int) -> int:
    return sum(1 for x in p if x == size)


# ---------------------------------------------------------------- rectangles


@dataclass(frozen=True, order=True)
class Rect:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"rectangle needs positive sides, got {self.rows}x{self.cols}")

    @property
    def shape(self) -> Partition:
        return (self.cols,) * self.rows

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def t(self) -> "Rect":
        return Rect(self.cols, self.rows)

    def __str__(self):
        return f"{self.rows}x{self.cols}"


RectSeq = tuple[Rect, ...]

_RECT_RE = re.compile(r"^\s*(\d+)\s*x\s*(\d+)\s*$")


def parse_rects(text: str) -> RectSeq:
    """Parse ``"2x3,4x2,3x1"`` (rows first) into a rectangle sequence."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for piece in text.split(","):
        m = _RECT_RE.match(piece)
        if not m:
            raise ValueError(f"bad rectangle {piece!r}; expected ROWSxCOLS")
        out.append(Rect(int(m.group(1)), int(m.group(2))))
    return tuple(out)


def rects(*pairs: tuple[int, int]) -> RectSeq:
    """Build a rectangle sequence from (rows, cols) pairs."""
    return tuple(Rect(r, c) for r, c in pairs)


def rects_from_shapes(shapes: Iterable[Sequence[int]]) -> RectSeq:
    """Build from rectangular partitions such as ``((3, 3), (2, 2, 2, 2))``."""
    out = []
    for s in shapes:
        s = partition(s)
        if not s or len(set(s)) != 1:
            raise ValueError(f"{s} is not a nonempty rectangle")
        out.append(Rect(len(s), s[0]))
    return tuple(out)


def format_rects(R: RectSeq) -> str:
    return ",".join(str(r) for r in R)


def num_letters(R: RectSeq) -> int:
    return sum(r.rows for r in R)


def total_size(R: RectSeq) -> int:
    return sum(r.size for r in R)


def gamma_weight(R: RectSeq) -> Weight:
    return tuple(r.cols for r in R for _ in range(r.rows))


def r_count(R: RectSeq, i: int, j: int) -> int:
    """Number of rectangles with at least i rows and at least j columns."""
    return sum(1 for r in R if r.rows >= i and r.cols >= j)


def r_matrix(R: RectSeq) -> list[list[int]]:
    if not R:
        return []
    h = max(r.rows for r in R)
    w = max(r.cols for r in R)
    return [[r_count(R, i, j) for j in range(1, w + 1)] for i in range(1, h + 1)]


def n_stat(R: RectSeq) -> int:
    return sum(comb(x, 2) for row in r_matrix(R) for x in row)


def tau_partition(R: RectSeq, k: int) -> Partition:
    return tuple(sorted((r.rows for r in R if r.cols == k), reverse=True))


def is_dominant(R: RectSeq) -> bool:
    g = gamma_weight(R)
    return all(a >= b for a, b in zip(g, g[1:]))


def seq_dominates(R: RectSeq, S: RectSeq) -> bool:
    ks = {r.cols for r in R} | {r.cols for r in S}
    for k in ks:
        a, b = tau_partition(R, k), tau_partition(S, k)
        if sum(a) != sum(b) or not dominates(a, b):
            return False
    return True


def transpose_rects(R: RectSeq) -> RectSeq:
    return tuple(r.t() for r in R)


def rows_of(R: RectSeq) -> RectSeq:
    return tuple(Rect(1, r.cols) for r in R for _ in range(r.rows))


def columns_of(R: RectSeq) -> RectSeq:
    """Transpose of rows(R): one single-column rectangle per row of each R_i."""
    return transpose_rects(rows_of(R))


def alphabets(R: RectSeq, start: int = 1) -> list[tuple[int, int]]:
    """Consecutive closed intervals of sizes rows(R_i), starting at `start`."""
    out = []
    a = start
    for r in R:
        out.append((a, a + r.rows - 1))
        a += r.rows
    return out


# -------------------------------------------------------------- polynomials


class QPoly:
    """Exact polynomial in q with integer coefficients (negative allowed)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative exponent")
            if v:
                c[int(e)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "QPoly":
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "QPoly":
        """Coefficients listed from the constant term up."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Inverse of ``str``: accepts e.g. ``"q^6 + 2*q^5 - q + 1"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out: dict[int, int] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?(q(?:\^(\d+))?)?", body)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise ValueError(f"cannot parse monomial {body!r}")
            c = int(m.group(1)) if m.group(1) else 1
            e = 0 if not m.group(2) else int(m.group(3) or 1)
            out[e] = out.get(e, 0) + (c if sign == "+" else -c)
        return cls(out)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self._c, default=-1)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return QPoly(c)

    __rmul__ = __mul__

    def __call__(self, q):
        return sum(v * q**e for e, v in self._c.items())

    def shift(self, k: int) -> "QPoly":
        return QPoly({e + k: v for e, v in self._c.items()})

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def dominates(self, other: "QPoly") -> bool:
        """Coefficientwise self >= other."""
        return all(v >= 0 for v in (self - other)._c.values())

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: dict[str, int]) -> "QPoly":
        return cls({int(e): v for e, v in data.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            a = abs(v)
            if e == 0:
                mono = str(a)
            else:
                q = "q" if e == 1 else f"q^{e}"
                mono = q if a == 1 else f"{a}*{q}"
            if not parts:
                parts.append(mono if v > 0 else "-" + mono)
            else:
                parts.append(("+ " if v > 0 else "- ") + mono)
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({str(self)!r})"


def mirror(p: QPoly, N: int) -> QPoly:
    """q^N p(1/q)."""
    if p.degree > N:
        raise ValueError(f"mirror needs N >= degree, got N={N} < {p.degree}")
    return QPoly({N - e: v for e, v in p.coeffs.items()})


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int) -> tuple[tuple[int, int], ...]:
    if b < 0 or b > a:
        return ()
    if b == 0 or b == a:
        return ((0, 1),)
    # [a,b] = [a-1,b-1] + q^b [a-1,b]
    p = QPoly(dict(_qbinom(a - 1, b - 1))) + QPoly(dict(_qbinom(a - 1, b))).shift(b)
    return tuple(sorted(p.coeffs.items()))


def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial coefficient [a choose b]_q."""
    if a < 0 or b < 0:
        raise ValueError("q_binomial needs nonnegative arguments")
    return QPoly(dict(_qbinom(a, b)))
