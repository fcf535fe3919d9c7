"""Cross-model verification: five independent counts per (lambda, mu), plus
the bijection, weight-transport, and promotion-algebra property suites.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .branching import a_staircase, b_staircase, is_k_highest, is_k_lowest, p_aii
from .characters import decompose, restricted_gl_character, sp_character
from .crystal import is_ghat_dominant, wt_ghat, wt_k
from .promotion import phi, pr, pr_inv, psi
from .shapes import Partition, canonical, enumerate_partitions, format_partition
from .tableaux import Rows, enumerate_ssyt, freeze, shape


class BudgetExceeded(Exception):
    """Raised when a sweep would enumerate more tableaux than allowed."""


def _tally_key(weight) -> tuple:
    """Canonical partition key when the weight is dominant, else the raw tuple."""
    try:
        return canonical(weight)
    except ValueError:
        return tuple(weight)


@dataclass
class ModelRow:
    mu: tuple
    g_dom: int
    khw: int
    klw: int
    rec: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.g_dom == self.khw == self.klw == self.rec == self.oracle


@dataclass
class VerificationReport:
    n: int
    lam: Partition
    rows: list[ModelRow]
    sst_total: int
    sp_dim_sum: int
    elapsed: float = 0.0

    @property
    def dim_ok(self) -> bool:
        return self.sst_total == self.sp_dim_sum

    @property
    def passed(self) -> bool:
        return self.dim_ok and all(row.ok for row in self.rows)


def verify_shape(lam: Partition, n: int) -> VerificationReport:
    """Count, for each mu, the dominant / highest / lowest / recording-class
    tableaux of shape lam and compare with the character oracle."""
    start = time.perf_counter()
    g_dom: dict[tuple, int] = {}
    khw: dict[tuple, int] = {}
    klw: dict[tuple, int] = {}
    rec: dict[tuple, int] = {}
    total = 0
    for T in enumerate_ssyt(lam, 2 * n):
        total += 1
        if is_ghat_dominant(T, n):
            key = _tally_key(wt_ghat(T, n))
            g_dom[key] = g_dom.get(key, 0) + 1
        P = p_aii(T)
        mu = shape(P)
        if P == a_staircase(mu, n):
            key = _tally_key(wt_k(T, n))
            khw[key] = khw.get(key, 0) + 1
            rec[mu] = rec.get(mu, 0) + 1
        if P == b_staircase(mu, n):
            klw[mu] = klw.get(mu, 0) + 1
    oracle = decompose(restricted_gl_character(lam, n), n)
    universe = sorted(set(g_dom) | set(khw) | set(klw) | set(rec) | set(oracle))
    rows = [
        ModelRow(
            mu=mu,
            g_dom=g_dom.get(mu, 0),
            khw=khw.get(mu, 0),
            klw=klw.get(mu, 0),
            rec=rec.get(mu, 0),
            oracle=oracle.get(mu, 0),
        )
        for mu in universe
    ]
    sp_dim_sum = sum(
        m * sum(sp_character(mu, n).values()) for mu, m in oracle.items()
    )
    return VerificationReport(
        n=n,
        lam=lam,
        rows=rows,
        sst_total=total,
        sp_dim_sum=sp_dim_sum,
        elapsed=time.perf_counter() - start,
    )


def count_ssyt(lam: Partition, m: int) -> int:
    return sum(1 for _ in enumerate_ssyt(lam, m))


def verify_sweep(
    n: int,
    max_size: int,
    max_length: int | None = None,
    budget: int | None = None,
) -> list[VerificationReport]:
    """Verify every shape with the given size and length bounds.

    The budget caps the cumulative number of enumerated tableaux.
    """
    length = 2 * n if max_length is None else max_length
    reports = []
    spent = 0
    for lam in enumerate_partitions(max_size, length):
        if budget is not None:
            spent += count_ssyt(lam, 2 * n)
            if spent > budget:
                raise BudgetExceeded(
                    f"tableau budget {budget} exceeded at shape {format_partition(lam)}"
                )
        reports.append(verify_shape(lam, n))
    return reports


@dataclass
class SuiteResult:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)


def bijection_suite(lam: Partition, n: int) -> SuiteResult:
    """Check that phi / psi restrict to bijections from the dominant tableaux
    onto the highest (resp. lowest) ones, transporting the weight (phi) and
    its negative (psi)."""
    out = SuiteResult()
    dominant = []
    highest = set()
    lowest = set()
    for T in enumerate_ssyt(lam, 2 * n):
        if is_ghat_dominant(T, n):
            dominant.append(T)
        if is_k_highest(T, n):
            highest.add(freeze(T))
        if is_k_lowest(T, n):
            lowest.add(freeze(T))
    phi_images = set()
    psi_images = set()
    for T in dominant:
        out.checked += 1
        FT = phi(T, n)
        ST = psi(T, n)
        phi_images.add(freeze(FT))
        psi_images.add(freeze(ST))
        w = wt_ghat(T, n)
        if wt_k(FT, n) != w:
            out.failures.append(f"phi weight transport fails at {T}")
        if wt_k(ST, n) != tuple(-c for c in w):
            out.failures.append(f"psi weight transport fails at {T}")
    if len(phi_images) != len(dominant):
        out.failures.append(f"phi not injective on shape {lam}")
    if len(psi_images) != len(dominant):
        out.failures.append(f"psi not injective on shape {lam}")
    if phi_images != highest:
        out.failures.append(f"phi image is not the highest set on shape {lam}")
    if psi_images != lowest:
        out.failures.append(f"psi image is not the lowest set on shape {lam}")
    return out


def _windows(n: int) -> list[tuple[int, int]]:
    N = 2 * n
    return [(a, b) for a in range(1, N + 1) for b in range(a, N + 1)]


def promotion_relations(T: Rows, n: int) -> SuiteResult:
    """Roundtrips, involutivity on adjacent windows, commutation of distant
    windows, and composition of overlapping windows, on one tableau."""
    out = SuiteResult()
    N = 2 * n
    for a, b in _windows(n):
        out.checked += 1
        if pr(pr_inv(T, a, b), a, b) != T or pr_inv(pr(T, a, b), a, b) != T:
            out.failures.append(f"pr roundtrip fails at {T} window ({a},{b})")
    for a in range(1, N):
        out.checked += 1
        if pr(pr(T, a, a + 1), a, a + 1) != T:
            out.failures.append(f"pr_(a,a+1) not an involution at {T}, a={a}")
    for a, b in _windows(n):
        for c, d in _windows(n):
            if c - b >= 2:
                out.checked += 1
                one = pr(pr(T, c, d), a, b)
                two = pr(pr(T, a, b), c, d)
                if one != two:
                    out.failures.append(
                        f"distant windows ({a},{b}),({c},{d}) do not commute at {T}"
                    )
    for a in range(1, N + 1):
        for b in range(a, N + 1):
            for c in range(b, N + 1):
                out.checked += 1
                if pr(pr(T, b, c), a, b) != pr(T, a, c):
                    out.failures.append(
                        f"composition ({a},{b})({b},{c}) != ({a},{c}) at {T}"
                    )
    return out


def promotion_suite_exhaustive(n: int, max_size: int) -> SuiteResult:
    out = SuiteResult()
    for lam in enumerate_partitions(max_size, 2 * n):
        for T in enumerate_ssyt(lam, 2 * n):
            out.merge(promotion_relations(T, n))
    return out


def random_ssyt(lam: Partition, m: int, rng: random.Random) -> Rows:
    """One semistandard tableau of shape lam over [1, m], sampled cell by
    cell (not uniformly; adequate for property trials)."""
    lam = canonical(lam)
    if lam and len(lam) > m:
        raise ValueError("shape too long for the alphabet")
    T: Rows = [[0] * p for p in lam]
    ncols = lam[0] if lam else 0
    col_len = [sum(1 for p in lam if p >= x) for x in range(1, ncols + 1)]
    for x in range(1, ncols + 1):
        for y in range(1, col_len[x - 1] + 1):
            lo = 1
            if y > 1:
                lo = max(lo, T[y - 2][x - 1] + 1)
            if x > 1:
                lo = max(lo, T[y - 1][x - 2])
            hi = m - (col_len[x - 1] - y)
            T[y - 1][x - 1] = rng.randint(lo, hi)
    return T


def random_shape(max_size: int, max_length: int, rng: random.Random) -> Partition:
    shapes = enumerate_partitions(max_size, max_length)
    return shapes[rng.randrange(len(shapes))]


def promotion_suite_random(n: int, trials: int, seed: int) -> SuiteResult:
    out = SuiteResult()
    rng = random.Random(seed)
    for _ in range(trials):
        lam = random_shape(8, 2 * n, rng)
        T = random_ssyt(lam, 2 * n, rng)
        out.merge(promotion_relations(T, n))
    return out
