"""Configurations, vacancy numbers, riggings and the maps between them.

A configuration of type (lam;R) is a sequence of partitions nu^1, nu^2, ...
with sizes forced by (lam;R).  Labels on the rows of nu^k are either
coquantum numbers L (cocharge side) or quantum numbers J (charge side);
the two are exchanged by the complement map Omega.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .core import (
    Partition,
    QPoly,
    Rect,
    RectSeq,
    parse_rects,
    format_rects,
    partition,
    partitions,
    q_binomial,
    r_count,
    rows_of,
    transpose,
    transpose_rects,
)

COQUANTUM = "coquantum"
QUANTUM = "quantum"


class ConfigurationError(TypeError):
    """The size condition fails for the given (lam;R)."""


class ConventionError(ValueError):
    pass


class RiggingError(ValueError):
    pass


class MatrixFormatError(ValueError):
    pass


def _c2(x: int) -> int:
    return x * (x - 1) // 2


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _at(p: Sequence[int], i: int) -> int:
    """p_i with 1-based i, zero past the end."""
    return p[i - 1] if 0 < i <= len(p) else 0


def config_sizes(lam: Sequence[int], R: RectSeq) -> list[int]:
    """|nu^k| for k = 1, 2, ... up to the last level that may be nonempty."""
    top = max([len(lam)] + [r.rows for r in R])
    return [
        sum(lam[k:]) - sum(r.cols * _pos(r.rows - k) for r in R)
        for k in range(1, top)
    ]


def q_count(rho: Sequence[int], n: int) -> int:
    """Q_n(rho): cells in the first n columns."""
    return sum(min(x, n) for x in rho)


# ------------------------------------------------------------ configurations


@dataclass(frozen=True)
class Configuration:
    lam: Partition
    R: RectSeq
    nus: tuple[Partition, ...]

    def __post_init__(self):
        lam = partition(self.lam)
        nus = [partition(p) for p in self.nus]
        while nus and not nus[-1]:
            nus.pop()
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "R", tuple(self.R))
        object.__setattr__(self, "nus", tuple(nus))
        if sum(lam) != sum(r.size for r in self.R):
            raise ConfigurationError(f"|lam| = {sum(lam)} differs from the total size of R")
        sizes = config_sizes(lam, self.R)
        for k, p in enumerate(nus, 1):
            want = sizes[k - 1] if k <= len(sizes) else 0
            if sum(p) != want:
                raise ConfigurationError(f"|nu^{k}| = {sum(p)}, expected {want}")
        for k in range(len(nus) + 1, len(sizes) + 1):
            if sizes[k - 1] != 0:
                raise ConfigurationError(f"|nu^{k}| = 0, expected {sizes[k - 1]}")

    def nu(self, k: int) -> Partition:
        return self.nus[k - 1] if 0 < k <= len(self.nus) else ()

    def alpha(self, k: int, n: int) -> int:
        """Length of column n of nu^k."""
        return sum(1 for x in self.nu(k) if x >= n)

    def mult(self, k: int, n: int) -> int:
        return sum(1 for x in self.nu(k) if x == n)

    @property
    def depth(self) -> int:
        """Number of levels k for which P_{k,n} may differ from its trivial value."""
        return max([len(self.nus) + 1, len(self.lam)] + [r.rows for r in self.R])

    @property
    def width(self) -> int:
        """Beyond this n every P_{k,n} is constant in n."""
        return max([x for p in self.nus for x in p] + [r.cols for r in self.R] + list(self.lam[:1]) + [1])

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "rects": format_rects(self.R), "nu": [list(p) for p in self.nus]}

    @classmethod
    def from_json(cls, data: dict) -> "Configuration":
        return cls(tuple(data["lambda"]), parse_rects(data["rects"]), tuple(tuple(p) for p in data["nu"]))

    def __str__(self):
        return "(" + ",".join("(" + ",".join(map(str, p)) + ")" for p in self.nus) + ")"


def vacancy(nu: Configuration, k: int, n: int) -> int:
    """P_{k,n}(nu); zero for n = 0."""
    if n == 0:
        return 0
    out = q_count(nu.nu(k - 1), n) - 2 * q_count(nu.nu(k), n) + q_count(nu.nu(k + 1), n)
    out += sum(min(r.cols, n) for r in nu.R if r.rows == k)
    return out


def vacancy_table(nu: Configuration, kmax: int | None = None, nmax: int | None = None) -> list[list[int]]:
    kmax = nu.depth if kmax is None else kmax
    nmax = nu.width if nmax is None else nmax
    return [[vacancy(nu, k, n) for n in range(1, nmax + 1)] for k in range(1, kmax + 1)]


def is_admissible(nu: Configuration, mode: str = "direct") -> bool:
    """Admissibility by one of the three equivalent tests: direct, support, strengthened."""
    lam = nu.lam
    K, N = nu.depth, nu.width
    for k in range(1, K + 1):
        for n in range(1, N + 1):
            if mode == "support" and not nu.mult(k, n):
                continue
            P = vacancy(nu, k, n)
            if mode == "strengthened":
                if P < min(_at(lam, k), n) - min(_at(lam, k + 1), n):
                    return False
            elif mode in ("direct", "support"):
                if P < 0:
                    return False
            else:
                raise ValueError(f"unknown admissibility mode {mode!r}")
    return True


def size_valid_configurations(lam: Sequence[int], R: RectSeq, capped: bool = False) -> Iterator[Configuration]:
    """Every configuration satisfying the size condition (optionally parts <= lam_{k+1})."""
    lam = partition(lam)
    R = tuple(R)
    if sum(lam) != sum(r.size for r in R):
        return
    sizes = config_sizes(lam, R)
    if any(s < 0 for s in sizes):
        return
    choices = [
        list(partitions(s, _at(lam, k + 1) if capped else None))
        for k, s in enumerate(sizes, 1)
    ]
    for nus in product(*choices):
        yield Configuration(lam, R, nus)


def enumerate_configurations(lam: Sequence[int], R: RectSeq) -> list[Configuration]:
    """The admissible configurations C(lam;R) in a deterministic order."""
    lam = partition(lam)
    R = tuple(R)
    if sum(lam) != sum(r.size for r in R):
        return []
    sizes = config_sizes(lam, R)
    if any(s < 0 for s in sizes):
        return []
    choices = [list(partitions(s, _at(lam, k + 1))) for k, s in enumerate(sizes, 1)]
    K = len(sizes)
    out: list[Configuration] = []

    def level_ok(nus: list[Partition], k: int) -> bool:
        # support test at level k; needs nu^{k-1}, nu^k, nu^{k+1}
        below = nus[k - 2] if k >= 2 else ()
        here = nus[k - 1]
        above = nus[k] if k < len(nus) else ()
        extra = {}
        for r in R:
            if r.rows == k:
                extra[r.cols] = extra.get(r.cols, 0) + 1
        for n in set(here):
            P = q_count(below, n) - 2 * q_count(here, n) + q_count(above, n)
            P += sum(c * min(w, n) for w, c in extra.items())
            if P < 0:
                return False
        return True

    def rec(nus: list[Partition]):
        k = len(nus)
        if k >= 2 and not level_ok(nus, k - 1):
            return
        if k == K:
            if k >= 1 and not level_ok(nus, k):
                return
            out.append(Configuration(lam, R, tuple(nus)))
            return
        for p in choices[k]:
            nus.append(p)
            rec(nus)
            nus.pop()

    rec([])
    return out


def cocharge_config(nu: Configuration) -> int:
    out = 0
    for k in range(1, len(nu.nus) + 1):
        for n in range(1, max(nu.nu(k), default=0) + 1):
            a = nu.alpha(k, n)
            out += a * (a - nu.alpha(k + 1, n))
    return out


# ------------------------------------------------------------- m-matrix


@dataclass(frozen=True)
class MMatrix:
    """m_{i,j} = alpha_{i-1,j} - alpha_{i,j} on a finite box; zero outside it."""

    entries: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        if 1 <= i <= len(self.entries):
            row = self.entries[i - 1]
            if 1 <= j <= len(row):
                return row[j - 1]
        return 0

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.entries]

    def col_sums(self) -> list[int]:
        return [sum(r[j] for r in self.entries) for j in range(self.cols)]


def m_matrix(nu: Configuration, rows: int | None = None, cols: int | None = None) -> MMatrix:
    I = len(nu.nus) + 1 if rows is None else rows
    J = max((x for p in nu.nus for x in p), default=0) if cols is None else cols
    return MMatrix(tuple(
        tuple(nu.alpha(i - 1, j) - nu.alpha(i, j) for j in range(1, J + 1))
        for i in range(1, I + 1)
    ))


def from_m_matrix(m: MMatrix, lam: Sequence[int], R: RectSeq) -> Configuration:
    nus = []
    acc = [0] * m.cols
    for i in range(1, m.rows + 1):
        acc = [a - m(i, j) for j, a in enumerate(acc, 1)]
        if any(a < 0 for a in acc) or any(a < b for a, b in zip(acc, acc[1:])):
            raise MatrixFormatError(f"column lengths {acc} at level {i} are not a partition")
        nus.append(transpose(acc))
    if any(acc):
        raise MatrixFormatError("column sums of the matrix are not zero")
    return Configuration(partition(lam), tuple(R), tuple(nus))


def charge_config(nu: Configuration) -> int:
    """Sum over k,n of C(m_{k,n} + r_{k,n}(R), 2)."""
    R = nu.R
    I = max([len(nu.nus) + 1] + [r.rows for r in R])
    J = max([x for p in nu.nus for x in p] + [r.cols for r in R] + [0])
    m = m_matrix(nu, I, J)
    return sum(_c2(m(k, n) + r_count(R, k, n)) for k in range(1, I + 1) for n in range(1, J + 1))


# -------------------------------------------------------------- riggings


def _groups(p: Partition) -> list[tuple[int, int, int]]:
    """(part size, start index, multiplicity) for each run of equal parts."""
    out = []
    s = 0
    while s < len(p):
        e = s
        while e < len(p) and p[e] == p[s]:
            e += 1
        out.append((p[s], s, e - s))
        s = e
    return out


@dataclass(frozen=True)
class RiggedConfiguration:
    config: Configuration
    labels: tuple[tuple[int, ...], ...]
    convention: str = COQUANTUM

    def __post_init__(self):
        if self.convention not in (COQUANTUM, QUANTUM):
            raise ConventionError(f"unknown convention {self.convention!r}")
        nu = self.config
        labels = [tuple(x) for x in self.labels]
        while len(labels) > len(nu.nus) and not labels[-1]:
            labels.pop()
        if len(labels) < len(nu.nus):
            labels += [()] * (len(nu.nus) - len(labels))
        norm = []
        for k, (p, L) in enumerate(zip(nu.nus, labels), 1):
            if len(L) != len(p):
                raise RiggingError(f"nu^{k} has {len(p)} rows but {len(L)} labels")
            row = list(L)
            for n, s, c in _groups(p):
                block = sorted(row[s : s + c], reverse=True)
                P = vacancy(nu, k, n)
                if block and (block[-1] < 0 or block[0] > P):
                    raise RiggingError(f"label outside [0, {P}] on a part {n} of nu^{k}")
                row[s : s + c] = block
            norm.append(tuple(row))
        object.__setattr__(self, "labels", tuple(norm))

    def label_sum(self) -> int:
        return sum(sum(L) for L in self.labels)

    def block(self, k: int, n: int) -> tuple[int, ...]:
        """rho_{k,n}: labels on parts of size n in nu^k, weakly decreasing."""
        p = self.config.nu(k)
        if not p:
            return ()
        L = self.labels[k - 1]
        return tuple(L[s] for s, x in enumerate(p) if x == n)

    def to_json(self) -> dict:
        d = self.config.to_json()
        d["labels"] = [list(L) for L in self.labels]
        d["convention"] = self.convention
        return d

    @classmethod
    def from_json(cls, data: dict) -> "RiggedConfiguration":
        return cls(Configuration.from_json(data), tuple(tuple(L) for L in data["labels"]), data.get("convention", COQUANTUM))

    def __str__(self):
        lines = [f"{self.convention} rigged configuration of type ({','.join(map(str, self.config.lam))};{format_rects(self.config.R)})"]
        for k, (p, L) in enumerate(zip(self.config.nus, self.labels), 1):
            lines.append(f"nu^{k}:")
            lines.extend(f"  {'#' * x} {y}" for x, y in zip(p, L))
            if not p:
                lines.append("  (empty)")
        return "\n".join(lines)


def enumerate_riggings(nu: Configuration, convention: str = COQUANTUM) -> list[RiggedConfiguration]:
    if not is_admissible(nu, "support"):
        raise RiggingError("configuration is not admissible")
    slots = []
    for k, p in enumerate(nu.nus, 1):
        for n, s, c in _groups(p):
            P = vacancy(nu, k, n)
            slots.append((k, s, [tuple(reversed(x)) for x in combinations_with_replacement(range(P + 1), c)]))
    out = []
    for pick in product(*(opts for _, _, opts in slots)):
        labels = [list(p) for p in nu.nus]
        for (k, s, _), block in zip(slots, pick):
            labels[k - 1][s : s + len(block)] = block
        out.append(RiggedConfiguration(nu, tuple(tuple(L) for L in labels), convention))
    return out


def enumerate_rc(lam: Sequence[int], R: RectSeq) -> list[RiggedConfiguration]:
    return [rc for nu in enumerate_configurations(lam, R) for rc in enumerate_riggings(nu)]


def _need(rc: RiggedConfiguration, convention: str) -> None:
    if rc.convention != convention:
        raise ConventionError(f"expected {convention} labels, got {rc.convention}")


def cocharge_rc(rc: RiggedConfiguration) -> int:
    _need(rc, COQUANTUM)
    return cocharge_config(rc.config) + rc.label_sum()


def charge_rc(rc: RiggedConfiguration) -> int:
    _need(rc, QUANTUM)
    return charge_config(rc.config) + rc.label_sum()


def omega_complement(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Replace each label x on a part n of nu^k by P_{k,n} - x and toggle the convention."""
    nu = rc.config
    labels = tuple(
        tuple(vacancy(nu, k, n) - x for n, x in zip(p, L))
        for k, (p, L) in enumerate(zip(nu.nus, rc.labels), 1)
    )
    other = QUANTUM if rc.convention == COQUANTUM else COQUANTUM
    return RiggedConfiguration(nu, labels, other)


def rc_polynomial(lam: Sequence[int], R: RectSeq, route: str = "fermionic") -> QPoly:
    """Sum of q^cocharge over RC(lam;R)."""
    out = QPoly()
    for nu in enumerate_configurations(lam, R):
        if route == "enumerate":
            for rc in enumerate_riggings(nu):
                out = out + QPoly.monomial(cocharge_rc(rc))
        elif route == "fermionic":
            term = QPoly.monomial(cocharge_config(nu))
            for k, p in enumerate(nu.nus, 1):
                for n, _, c in _groups(p):
                    term = term * q_binomial(vacancy(nu, k, n) + c, c)
            out = out + term
        else:
            raise ValueError(f"unknown route {route!r}")
    return out


# ------------------------------------------------------------------ maps


def _theta(x: int) -> int:
    return 1 if x >= 0 else 0


def rc_transpose(rc: RiggedConfiguration) -> RiggedConfiguration:
    """RC(lam;R) -> RC(lam^t;R^t), complementing cocharge against n(R)."""
    _need(rc, COQUANTUM)
    nu = rc.config
    lam, R = nu.lam, nu.R
    I = max([_at(lam, 1)] + [r.cols for r in R]) + 1
    J = max([len(lam), len(nu.nus) + 1] + [r.rows for r in R]) + 1
    m = m_matrix(nu, J, I)
    mh = MMatrix(tuple(
        tuple(-m(j, i) + _theta(_at(lam, j) - i) - r_count(R, j, i) for j in range(1, J + 1))
        for i in range(1, I + 1)
    ))
    nuh = from_m_matrix(mh, transpose(lam), transpose_rects(R))
    labels = [[0] * len(p) for p in nuh.nus]
    for k, p in enumerate(nu.nus, 1):
        for n, _, c in _groups(p):
            P = vacancy(nu, k, n)
            block = rc.block(k, n)
            comp = tuple(P - x for x in reversed(block))
            new = list(transpose(comp)) + [0] * P
            new = new[:P]
            target = nuh.nu(n)
            slots = [s for s, x in enumerate(target) if x == k]
            if len(slots) != P:
                raise RiggingError(
                    f"transpose exchange fails at (k,n)=({k},{n}): {len(slots)} parts vs vacancy {P}"
                )
            for s, x in zip(slots, new):
                labels[n - 1][s] = x
    return RiggedConfiguration(nuh, tuple(tuple(L) for L in labels), COQUANTUM)


def duality_type(lam_t: Sequence[int], Rt: RectSeq, k: int) -> tuple[Partition, RectSeq]:
    """Given the type (lam^t;R^t), return (tilde(lam)^t; tilde(R)^t) for the n x k box."""
    lam = transpose(lam_t)
    n = sum(r.cols for r in Rt)
    if len(lam) > n:
        raise ValueError("lam has more rows than letters")
    lp = tuple(lam) + (0,) * (n - len(lam))
    lam_tilde = partition(k - x for x in reversed(lp))
    Rtil_t = tuple(Rect(k - r.rows, r.cols) for r in Rt if k > r.rows)
    return transpose(lam_tilde), Rtil_t


def rc_duality(rc: RiggedConfiguration, k: int | None = None) -> RiggedConfiguration:
    """Reverse the first k-1 labelled partitions; rc has type (lam^t;R^t)."""
    nu = rc.config
    lam = transpose(nu.lam)
    bound = max([_at(lam, 1)] + [r.rows for r in nu.R])
    if k is None:
        k = bound
    if k < bound:
        raise ValueError(f"k = {k} is smaller than lam_1 and every mu_a (need >= {bound})")
    if len(nu.nus) >= k:
        raise ValueError(f"nu^{k} is nonempty")
    lam2, R2 = duality_type(nu.lam, nu.R, k)
    nus = [nu.nu(k - p) for p in range(1, k)]
    labels = [rc.labels[k - p - 1] if k - p <= len(rc.labels) else () for p in range(1, k)]
    return RiggedConfiguration(Configuration(lam2, R2, tuple(nus)), tuple(labels), rc.convention)


def zeta_embed(rc: RiggedConfiguration) -> RiggedConfiguration:
    """RC(lam;R) -> RC(lam;rows(R)); new rows get quantum number 0."""
    _need(rc, QUANTUM)
    nu = rc.config
    R = nu.R
    depth = max([len(nu.nus)] + [r.rows for r in R])
    nus, labels = [], []
    for k in range(1, depth + 1):
        p = list(nu.nu(k))
        L = list(rc.labels[k - 1]) if k <= len(rc.labels) else []
        for r in R:
            extra = _pos(r.rows - k)
            p += [r.cols] * extra
            L += [0] * extra
        order = sorted(range(len(p)), key=lambda s: (-p[s], -L[s]))
        nus.append(tuple(p[s] for s in order))
        labels.append(tuple(L[s] for s in order))
    return RiggedConfiguration(Configuration(nu.lam, rows_of(R), tuple(nus)), tuple(labels), QUANTUM)


def fishel_rects(n: int, r: int, k: int) -> RectSeq:
    if n < 1 or r < 0 or k < 0 or k > r or 2 * r > n:
        raise ValueError(f"need 0 <= k <= r and 2r <= n, got n={n}, r={r}, k={k}")
    return (Rect(1, 2),) * (r - k) + (Rect(2, 1),) * k + (Rect(1, 1),) * (n - 2 * r)


def fishel_m_poly(lam: Sequence[int], n: int, r: int, k: int) -> QPoly:
    """Sum of q^charge over RC(lam; ((2)^(r-k), (1,1)^k, (1)^(n-2r)))."""
    R = fishel_rects(n, r, k)
    lam = partition(lam)
    if sum(lam) != n:
        return QPoly()
    out = QPoly()
    for rc in enumerate_rc(lam, R):
        out = out + QPoly.monomial(charge_rc(omega_complement(rc)))
    return out


__all__ = [
    "COQUANTUM",
    "QUANTUM",
    "Configuration",
    "ConfigurationError",
    "ConventionError",
    "MMatrix",
    "MatrixFormatError",
    "RiggedConfiguration",
    "RiggingError",
    "charge_config",
    "charge_rc",
    "cocharge_config",
    "cocharge_rc",
    "config_sizes",
    "duality_type",
    "enumerate_configurations",
    "enumerate_rc",
    "enumerate_riggings",
    "fishel_m_poly",
    "fishel_rects",
    "from_m_matrix",
    "is_admissible",
    "m_matrix",
    "omega_complement",
    "q_count",
    "rc_duality",
    "rc_polynomial",
    "rc_transpose",
    "size_valid_configurations",
    "vacancy",
    "vacancy_table",
    "zeta_embed",
]
