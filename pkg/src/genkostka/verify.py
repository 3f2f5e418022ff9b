"""Verification suites over bounded instance families.

Each suite checks a group of identities on every instance of a bounded
family and returns one report per instance.  Failures carry both sides
of the failed identity as JSON-ready payloads; nothing aborts the sweep.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

from .catabolism import (
    block_permutation,
    conjugate,
    ct_polynomial,
    ct_transpose,
    enumerate_cct,
    enumerate_ct,
    is_ct,
)
from .core import (
    QPoly,
    Rect,
    RectSeq,
    format_rects,
    gamma_weight,
    is_dominant,
    mirror,
    n_stat,
    num_letters,
    partition,
    partitions,
    rows_of,
    seq_dominates,
    tau_partition,
    transpose,
    transpose_rects,
)
from .kostka import (
    contragredient,
    k_poly_recurrence,
    k_poly_symmetrizer,
    k_poly_symmetrizer_naive,
    symmetrizer_degree_bound,
)
from .lrtab import (
    CapExceeded,
    LRContext,
    NonIntegerCharge,
    act_word,
    all_reduced_words,
    charge_r_min,
    charge_r_orbit,
    embed_cover,
    enumerate_lrt,
    is_lr,
    lr_seq_coeff,
    lr_transpose,
    lrt_polynomial,
    orbit,
    switch_adjacent,
)
from .riggedconf import (
    Configuration,
    charge_rc,
    cocharge_config,
    cocharge_rc,
    enumerate_configurations,
    enumerate_rc,
    fishel_m_poly,
    fishel_rects,
    is_admissible,
    m_matrix,
    omega_complement,
    rc_duality,
    rc_polynomial,
    rc_transpose,
    size_valid_configurations,
    vacancy,
    zeta_embed,
)
from .tableaux import dual_tableau, evacuation, row_word

PASS, FAIL, SKIP = "pass", "fail", "skipped-cap"


@dataclass(frozen=True)
class Bounds:
    max_cells: int = 8
    max_rect: int = 3
    max_seq: int = 3
    decomposition_cap: int = 20_000
    naive_cells: int = 5


@dataclass
class Check:
    name: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    suite: str
    instance: dict
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "instance": self.instance,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Report":
        checks = [Check(c["name"], c["status"], c.get("detail", {})) for c in d["checks"]]
        return cls(d["suite"], d["instance"], checks)


def _enc(x):
    if isinstance(x, QPoly):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_enc(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    return x


class _Recorder:
    def __init__(self, report: Report):
        self.report = report

    def eq(self, name: str, left, right, **ctx):
        if left == right:
            self.report.checks.append(Check(name, PASS))
        else:
            self.report.checks.append(Check(name, FAIL, {"left": _enc(left), "right": _enc(right), **_enc(ctx)}))

    def true(self, name: str, cond: bool, **ctx):
        self.report.checks.append(Check(name, PASS if cond else FAIL, {} if cond else _enc(ctx)))

    def skip(self, name: str, why: str):
        self.report.checks.append(Check(name, SKIP, {"reason": why}))


def _instance(lam, R, **extra) -> dict:
    d = {"lambda": list(lam), "rects": format_rects(R)}
    d.update(extra)
    return d


# ---------------------------------------------------------------- families


def rect_sequences(b: Bounds, dominant: bool | None = None) -> Iterator[RectSeq]:
    shapes = [Rect(r, c) for r in range(1, b.max_rect + 1) for c in range(1, b.max_rect + 1)]
    for t in range(1, b.max_seq + 1):
        for R in product(shapes, repeat=t):
            if sum(r.size for r in R) > b.max_cells:
                continue
            if dominant is not None and is_dominant(R) != dominant:
                continue
            yield tuple(R)


def instances(b: Bounds, dominant: bool | None = True) -> Iterator[tuple[tuple[int, ...], RectSeq]]:
    for R in rect_sequences(b, dominant):
        n = num_letters(R)
        for lam in partitions(sum(r.size for r in R), max_len=n):
            yield lam, R


def dominant_rearrangements(R: RectSeq) -> list[RectSeq]:
    out = sorted(set(p for p in permutations(R) if is_dominant(p)))
    return [tuple(p) for p in out]


def dominated_sequences(R: RectSeq) -> list[RectSeq]:
    """Dominant R' != R with tau^k(R) dominating tau^k(R') for every k."""
    widths = sorted({r.cols for r in R}, reverse=True)
    per_width = []
    for k in widths:
        tau = tau_partition(R, k)
        below = [p for p in partitions(sum(tau)) if seq_dominates((tuple(Rect(h, k) for h in tau)), tuple(Rect(h, k) for h in p))]
        per_width.append([[Rect(h, k) for h in p] for p in below])
    out = []
    for pick in product(*per_width):
        S = tuple(r for group in pick for r in group)
        if S != tuple(sorted(R, key=lambda r: (-r.cols, -r.rows))):
            out.append(S)
    return out


# ------------------------------------------------------------------ suites


def suite_routes(lam, R, b: Bounds) -> Report:
    rep = Report("routes", _instance(lam, R))
    chk = _Recorder(rep)
    N = n_stat(R)
    dominant = is_dominant(R)
    # the default window n(R)+2 is only trusted for dominant R
    D = None if dominant else symmetrizer_degree_bound(lam, R)
    sym = k_poly_symmetrizer(lam, R, D)
    rec = k_poly_recurrence(lam, R)
    chk.eq("symmetrizer=recurrence", sym, rec)
    if sum(lam) <= b.naive_cells:
        chk.eq("symmetrizer=naive", sym, k_poly_symmetrizer_naive(lam, R, D))
    if dominant:
        chk.true("no coefficients in (n(R), n(R)+2]", all(sym[d] == 0 for d in (N + 1, N + 2)), poly=sym, n_R=N)
    else:
        rep.checks.append(Check("degree vs n(R) (measured)", PASS, {"degree": rec.degree, "n_R": N}))
    lrt = enumerate_lrt(lam, R)
    rcs = enumerate_rc(lam, R)
    lr = lr_seq_coeff(lam, R)
    chk.eq("K(1)=LR", rec(1), lr)
    chk.eq("|LRT|=LR", len(lrt), lr)
    chk.eq("|RC|=LR", len(rcs), lr)
    rc_enum = rc_polynomial(lam, R, "enumerate")
    chk.eq("fermionic=enumeration", rc_polynomial(lam, R, "fermionic"), rc_enum)
    if not dominant:
        return rep
    chk.true("positivity", rec.is_nonnegative() or not rec, poly=rec)
    chk.true("degree<=n(R)", rec.degree <= N, poly=rec, n_R=N)
    chk.eq("recurrence=rc", rec, mirror(rc_enum, N) if rc_enum else QPoly())
    chk.eq("|CT|=LR", len(enumerate_ct(lam, R)), lr)
    chk.eq("recurrence=ct", rec, ct_polynomial(lam, R))
    try:
        chk.eq("recurrence=lrt-orbit", rec, lrt_polynomial(lam, R, "orbit"))
    except NonIntegerCharge as e:
        chk.true("recurrence=lrt-orbit", False, error=str(e))
    try:
        chk.eq("recurrence=lrt-min", rec, _lrt_min(lam, R, b.decomposition_cap))
    except CapExceeded as e:
        chk.skip("recurrence=lrt-min", str(e))
    return rep


def _lrt_min(lam, R, cap) -> QPoly:
    ctx = LRContext(tuple(R))
    out = QPoly()
    for T in enumerate_lrt(lam, R):
        out = out + QPoly.monomial(charge_r_min(T, ctx, cap))
    return out


def suite_reordering(lam, R, b: Bounds) -> Report:
    rep = Report("reordering", _instance(lam, R))
    chk = _Recorder(rep)
    K = k_poly_recurrence(lam, R)
    for R2 in dominant_rearrangements(R):
        if R2 != R:
            chk.eq(f"K invariant under {format_rects(R2)}", K, k_poly_recurrence(lam, R2))
    n = len(enumerate_lrt(lam, R))
    for R2 in sorted(set(permutations(R))):
        if R2 != R:
            chk.eq(f"|LRT| invariant under {format_rects(R2)}", len(enumerate_lrt(lam, R2)), n)
    return rep


def suite_duality(lam, R, b: Bounds) -> Report:
    k = max([lam[0] if lam else 0] + [r.cols + 1 for r in R])
    rep = Report("duality", _instance(lam, R, k=k))
    chk = _Recorder(rep)
    n = num_letters(R)
    lt, Rrev = contragredient(lam, R, k)
    K = k_poly_recurrence(lam, R)
    chk.eq("K(lam;R)=K(dual)", K, k_poly_recurrence(lt, Rrev))
    Rt = tuple(Rect(r.rows, k - r.cols) for r in R)
    ctx, ctx2 = LRContext(R), LRContext(Rt)
    images = set()
    for T in enumerate_lrt(lam, R):
        D = dual_tableau(T, k, n)
        images.add(D)
        chk.eq("dual involution", dual_tableau(D, k, n), T)
        chk.true("dual is LR", is_lr(D, Rt), T=T, image=D)
        if is_lr(D, Rt):
            chk.eq("dual preserves charge_R", charge_r_orbit(D, ctx2), charge_r_orbit(T, ctx), T=T)
        E = evacuation(T, n)
        chk.eq("evacuation involution", evacuation(E, n), T)
        chk.eq("evacuation shape", E.outer, T.outer)
        chk.eq("evacuation content", E.content(n), tuple(reversed(T.content(n))))
    chk.eq("dual onto LRT", sorted(images, key=row_word), enumerate_lrt(partition(lt), Rt))
    cct = enumerate_cct(lam, R)
    chk.eq(
        "dual maps CCT onto CCT",
        sorted((dual_tableau(S, k, n) for S in cct), key=row_word),
        enumerate_cct(partition(lt), Rt),
    )
    # rigged configurations of the transposed type
    lam_t, Rtt = transpose(lam), transpose_rects(R)
    for rc in enumerate_rc(lam_t, Rtt):
        d = rc_duality(rc, k)
        chk.eq("rc_duality preserves cocharge", cocharge_rc(d), cocharge_rc(rc))
        chk.eq("rc_duality involution", rc_duality(d, k), rc)
        nu, nd = rc.config, d.config
        ok = all(vacancy(nu, i, j) == vacancy(nd, k - i, j) for i in range(1, k) for j in range(1, nu.width + 2))
        chk.true("vacancy symmetry", ok, rc=rc)
    return rep


def suite_transpose(lam, R, b: Bounds) -> Report:
    rep = Report("transpose", _instance(lam, R))
    chk = _Recorder(rep)
    N = n_stat(R)
    lam_t, Rt = transpose(lam), transpose_rects(R)
    rcs = enumerate_rc(lam, R)
    images = set()
    for rc in rcs:
        try:
            h = rc_transpose(rc)
        except Exception as e:  # reported as a counterexample
            chk.true("rc_transpose defined", False, rc=rc, error=str(e))
            continue
        images.add(h)
        chk.eq("rc_transpose involution", rc_transpose(h), rc)
        chk.eq("cocharge complement", cocharge_rc(rc) + cocharge_rc(h), N, rc=rc, image=h)
        nu, nh = rc.config, h.config
        # P_{i,j}(nu_hat) = m_i(nu^j) + min(lam^t_i, j) - min(lam^t_{i+1}, j), and symmetrically
        span = max(nu.depth, nh.depth, nu.width, nh.width) + 1
        ok = all(
            vacancy(nh, i, j) == nu.mult(j, i) + min(_at(lam_t, i), j) - min(_at(lam_t, i + 1), j)
            and vacancy(nu, i, j) == nh.mult(j, i) + min(_at(lam, i), j) - min(_at(lam, i + 1), j)
            for i in range(1, span + 1)
            for j in range(1, span + 1)
        )
        chk.true("transpose exchange", ok, rc=rc)
    chk.eq("rc_transpose bijective", len(images), len(enumerate_rc(lam_t, Rt)))
    rcp = rc_polynomial(lam, R)
    chk.eq("RC(lam^t;R^t)=mirror", rc_polynomial(lam_t, Rt), mirror(rcp, N) if rcp else QPoly())
    ctx = LRContext(R)
    lt_images = set()
    for T in enumerate_lrt(lam, R):
        U = lr_transpose(T, ctx)
        lt_images.add(U)
        chk.true("lr_transpose lands in LRT", is_lr(U, Rt), T=T, image=U)
    chk.eq("lr_transpose bijective", len(lt_images), len(enumerate_lrt(lam_t, Rt)))
    if is_dominant(R):
        K = k_poly_recurrence(lam, R)
        Kt = mirror(K, N) if K.degree <= N else None
        for R2 in dominant_rearrangements(Rt):
            chk.eq(f"K(lam^t;{format_rects(R2)})=Ktilde", k_poly_recurrence(lam_t, R2), Kt)
        if is_dominant(Rt):
            ct_images = []
            for S in enumerate_ct(lam, R):
                try:
                    ct_images.append(ct_transpose(S, R))
                except Exception as e:
                    chk.true("ct_transpose defined", False, S=S, error=str(e))
            chk.eq("ct_transpose onto CCT", sorted(ct_images, key=row_word), enumerate_cct(lam_t, Rt))
    return rep


def suite_monotonicity(lam, R, b: Bounds, others: Sequence[RectSeq] | None = None) -> Report:
    rep = Report("monotonicity", _instance(lam, R))
    chk = _Recorder(rep)
    K = k_poly_recurrence(lam, R)
    lam_t, Rt = transpose(lam), transpose_rects(R)
    mine = enumerate_rc(lam_t, Rt)
    for R2 in others if others is not None else dominated_sequences(R):
        K2 = k_poly_recurrence(lam, R2)
        chk.true(f"K({format_rects(R2)}) >= K", K2.dominates(K), big=K2, small=K)
        theirs = set(enumerate_rc(lam_t, transpose_rects(R2)))
        for rc in mine:
            try:
                moved = type(rc)(Configuration(lam_t, transpose_rects(R2), rc.config.nus), rc.labels, rc.convention)
                ok = is_admissible(moved.config) and moved in theirs and cocharge_rc(moved) == cocharge_rc(rc)
            except Exception as e:
                ok, moved = False, str(e)
            chk.true(f"RC inclusion into {format_rects(R2)}", ok, rc=rc)
        ctx = LRContext(R)
        if _is_cover(R, R2):
            imgs = [embed_cover(T, ctx, R2) for T in enumerate_lrt(lam, R)]
            chk.eq(f"embed_cover injective into {format_rects(R2)}", len(set(imgs)), len(imgs))
            chk.true("embed_cover lands in LRT", all(is_lr(U, R2) for U in imgs))
    return rep


def _is_cover(R: RectSeq, R2: RectSeq) -> bool:
    from .lrtab import _cover_data, PreconditionError

    try:
        _cover_data(R, R2)
        return True
    except PreconditionError:
        return False


def suite_lemma_vacancy(lam, R, b: Bounds) -> Report:
    rep = Report("lemma-vacancy", _instance(lam, R))
    chk = _Recorder(rep)
    admissible = []
    for nu in size_valid_configurations(lam, R):
        modes = {m: is_admissible(nu, m) for m in ("direct", "support", "strengthened")}
        chk.true("three modes agree", len(set(modes.values())) == 1, nu=nu, modes=modes)
        if not modes["direct"]:
            continue
        admissible.append(nu)
        ok = all(nu.mult(k, n) == 0 for k in range(1, len(nu.nus) + 1) for n in nu.nu(k) if n > _at(lam, k + 1))
        chk.true("no parts above lam_{k+1}", ok, nu=nu)
        big = nu.width + 1
        ok = all(
            vacancy(nu, k, big)
            == _at(lam, k) - _at(lam, k + 1) + sum(min(0, big - r.cols) for r in R if r.rows == k)
            for k in range(1, nu.depth + 1)
        )
        chk.true("large-n closed form", ok, nu=nu)
        # exact second difference, and concavity where m_n(nu^k) = 0
        second = all(
            2 * vacancy(nu, k, n) - vacancy(nu, k, n - 1) - vacancy(nu, k, n + 1)
            == nu.mult(k - 1, n) - 2 * nu.mult(k, n) + nu.mult(k + 1, n)
            + sum(1 for r in R if r.rows == k and r.cols == n)
            for k in range(1, nu.depth + 1)
            for n in range(1, big + 1)
        )
        chk.true("second difference of P", second, nu=nu)
        ok = all(
            2 * vacancy(nu, k, n) >= vacancy(nu, k, n - 1) + vacancy(nu, k, n + 1)
            for k in range(1, nu.depth + 1)
            for n in range(1, big + 1)
            if not nu.mult(k, n)
        )
        chk.true("partial convexity off the support", ok, nu=nu)
        m = m_matrix(nu)
        chk.true("m column sums", all(s == 0 for s in m.col_sums()), nu=nu)
        chk.eq("cocharge via m", cocharge_config(nu), sum(x * (x - 1) // 2 for row in m.entries for x in row))
    chk.eq("capped enumeration", enumerate_configurations(lam, R), admissible)
    return rep


def _at(p, i):
    return p[i - 1] if 0 < i <= len(p) else 0


def suite_charge_r(lam, R, b: Bounds) -> Report:
    rep = Report("charge-r", _instance(lam, R))
    chk = _Recorder(rep)
    N = n_stat(R)
    ctx = LRContext(R)
    for T in enumerate_lrt(lam, R):
        orb = orbit(T, ctx)
        c = charge_r_orbit(T, ctx)
        chk.true("charge_R integral", c.denominator == 1, T=T, value=str(c))
        for u, (U, cu) in orb.items():
            chk.eq("charge_R orbit invariant", charge_r_orbit(U, cu), c, T=T, u=list(u))
            words = all_reduced_words(u)
            results = {act_word(w, T, ctx)[0] for w in words}
            chk.true("reduced-word independence", len(results) == 1 and U in results, T=T, u=list(u))
        for p in range(1, ctx.t):
            S = switch_adjacent(T, p, ctx)
            chk.eq("switch involution", switch_adjacent(S, p, ctx.swap(p)), T, p=p)
    for rc in enumerate_rc(lam, R):
        om = omega_complement(rc)
        chk.eq("Omega involution", omega_complement(om), rc)
        chk.eq("charge+cocharge=n(R)", charge_rc(om) + cocharge_rc(rc), N, rc=rc)
    return rep


def suite_catabolism(lam, R, b: Bounds) -> Report:
    rep = Report("catabolism", _instance(lam, R))
    chk = _Recorder(rep)
    cts = enumerate_ct(lam, R)
    g = gamma_weight(R)
    chk.true("CT content", all(S.content(len(g)) == g for S in cts))
    if is_dominant(R):
        lr = lr_seq_coeff(lam, R)
        chk.eq("|CT|=LR", len(cts), lr)
        N = n_stat(R)
        rcp = rc_polynomial(lam, R)
        chk.eq("ct_polynomial=mirror(RC)", ct_polynomial(lam, R), mirror(rcp, N) if rcp else QPoly())
        for order in permutations(range(1, len(R) + 1)):
            R2 = tuple(R[order.index(p)] for p in range(1, len(R) + 1))
            if R2 == R or not is_dominant(R2):
                continue
            u = block_permutation(R, order)
            imgs = [conjugate(u, S) for S in cts]
            chk.true(
                f"conjugation maps CT into CT({format_rects(R2)})",
                all(is_ct(U, R2) for U in imgs) and len(set(imgs)) == len(imgs),
                order=list(order),
            )
    return rep


def suite_zeta(lam, R, b: Bounds) -> Report:
    rep = Report("zeta", _instance(lam, R))
    chk = _Recorder(rep)
    rows = rows_of(R)
    images = []
    for rc in enumerate_rc(lam, R):
        J = omega_complement(rc)
        z = zeta_embed(J)
        images.append(z)
        chk.eq("zeta preserves charge", charge_rc(z), charge_rc(J), rc=rc)
        chk.true("zeta image admissible", is_admissible(z.config), image=z)
    chk.eq("zeta injective", len(set(images)), len(images))
    target = {omega_complement(x) for x in enumerate_rc(lam, rows)}
    chk.true("zeta lands in RC(lam;rows(R))", all(z in target for z in images))
    return rep


def fishel_cases(max_n: int = 6) -> Iterator[tuple[tuple[int, ...], int, int, int]]:
    for n in range(1, max_n + 1):
        for r in range(0, n // 2 + 1):
            for k in range(0, r + 1):
                for lam in partitions(n):
                    yield lam, n, r, k


def suite_fishel(lam, n, r, k) -> Report:
    R = fishel_rects(n, r, k)
    rep = Report("fishel", {"lambda": list(lam), "n": n, "r": r, "k": k, "rects": format_rects(R)})
    chk = _Recorder(rep)
    f = fishel_m_poly(lam, n, r, k)
    rcp = rc_polynomial(lam, R)
    chk.eq("fishel=mirror(RC)", f, mirror(rcp, n_stat(R)) if rcp else QPoly())
    chk.eq("fishel=K recurrence", f, k_poly_recurrence(lam, R))
    chk.eq("fishel=K symmetrizer", f, k_poly_symmetrizer(lam, R))
    return rep


SUITES: dict[str, Callable] = {
    "routes": suite_routes,
    "reordering": suite_reordering,
    "duality": suite_duality,
    "transpose": suite_transpose,
    "monotonicity": suite_monotonicity,
    "lemma-vacancy": suite_lemma_vacancy,
    "charge-r": suite_charge_r,
    "catabolism": suite_catabolism,
    "zeta": suite_zeta,
}

# which instance family each suite runs on by default
_FAMILY = {
    "routes": None,
    "reordering": True,
    "duality": True,
    "transpose": True,
    "monotonicity": True,
    "lemma-vacancy": None,
    "charge-r": None,
    "catabolism": True,
    "zeta": None,
}


def run_suite(
    name: str,
    b: Bounds = Bounds(),
    seed: int | None = None,
    only: tuple[tuple[int, ...], RectSeq] | None = None,
) -> list[Report]:
    """Run one suite exhaustively within the bounds; reports come back in canonical order."""
    if name == "fishel":
        cases = list(fishel_cases(min(6, b.max_cells)))
        run = lambda c: suite_fishel(*c)
    else:
        fn = SUITES[name]
        cases = [only] if only else list(instances(b, _FAMILY[name]))
        run = lambda c: fn(c[0], c[1], b)
    order = list(range(len(cases)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    out: dict[int, Report] = {}
    for i in order:
        t0 = time.perf_counter()
        rep = run(cases[i])
        rep.seconds = time.perf_counter() - t0
        out[i] = rep
    return [out[i] for i in range(len(cases))]


ALL_SUITES = tuple(SUITES) + ("fishel",)
