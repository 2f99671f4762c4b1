"""Exhaustive verification sweeps and figure-dataset generation.

Every check here is an exact statement about rationals or partitions: the
uncertainty inequalities g <= t and t^2 <= g are tested by integer
cross-multiplication, the closed-form decay parameter is compared against the
full prefix-sum scan on every case, and the two classification routes to the
GK-dimension, wavefront set and character are compared as exact equalities.
Floats appear only in CSV rendering columns.

Sweeps split the partition stream into chunks processed independently (worker
processes when ``threads > 1``); summaries merge as a commutative monoid, so
results are independent of the chunking.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import IO, Iterable, Iterator, Optional, Sequence

from .arthur import ArthurSummand, UnitaryRep
from .decay import _max_ratio_scan, decay_t, decay_t_arthur
from .partitions import Partition, dual_partition, partition_count, partition_tuples
from .rationals import rat_decimal
from .segments import SupercuspidalLabel

FIGURE_CSV_HEADER = (
    "partition,d_gk,g_num,g_den,t_num,t_den,g_float,t_float,sqrt_g_float,lower_ok,upper_ok"
)


@dataclass(frozen=True)
class InvariantReport:
    """Bundled invariants of one representation (or one Arthur-SL2 partition)."""

    arthur_sl2: Partition
    wavefront: Partition
    d_gk: Fraction
    g: Fraction
    t: Fraction
    lower_ok: bool
    upper_ok: bool
    maximizers: frozenset[int]
    note: str = ""


@dataclass
class SweepSummary:
    """Outcome of a verification sweep; empty ``failures`` means the checked
    statements held on every case.  ``min_gap_lower`` is the least value of
    t - g and ``min_gap_upper`` the least slack in the upper bound actually
    checked (g - t^2 for Arthur sweeps)."""

    N: Optional[int]
    count: int = 0
    failures: list[InvariantReport] = field(default_factory=list)
    min_gap_lower: Optional[Fraction] = None
    min_gap_upper: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "SweepSummary") -> "SweepSummary":
        def _min(a, b):
            if a is None:
                return b
            if b is None:
                return a
            return min(a, b)

        return SweepSummary(
            N=self.N if self.N == other.N else None,
            count=self.count + other.count,
            failures=self.failures + other.failures,
            min_gap_lower=_min(self.min_gap_lower, other.min_gap_lower),
            min_gap_upper=_min(self.min_gap_upper, other.min_gap_upper),
        )


def report_for_rep(pi: UnitaryRep) -> InvariantReport:
    """Invariants plus uncertainty-bound verdicts for one representation."""
    a_sl2 = pi.arthur_sl2()
    g = pi.non_genericity()
    result = decay_t(pi.character())
    t = result.t
    return InvariantReport(
        arthur_sl2=a_sl2,
        wavefront=dual_partition(a_sl2),
        d_gk=pi.gk_dim(),
        g=g,
        t=t,
        lower_ok=g <= t,
        upper_ok=t * t <= g,
        maximizers=result.maximizers,
    )


def arthur_rep_from_partition(a: Partition | Iterable[int]) -> UnitaryRep:
    """The untwisted representation over dimension-1 labels whose Arthur-SL2
    is the given partition: one summand rho_i[1][d_i] per part."""
    parts = a.parts if isinstance(a, Partition) else tuple(sorted(a, reverse=True))
    return UnitaryRep(
        ArthurSummand(SupercuspidalLabel(f"rho{i}", 1), 1, d)
        for i, d in enumerate(parts, start=1)
    )


def report_for_arthur_partition(a: Partition | Iterable[int]) -> InvariantReport:
    return report_for_rep(arthur_rep_from_partition(a))


# ---------------------------------------------------------------------------
# chunked execution


def _map_chunks(worker, jobs: list, threads: int) -> Iterator:
    if threads > 1 and len(jobs) > 1:
        with multiprocessing.get_context().Pool(min(threads, len(jobs))) as pool:
            yield from pool.imap(worker, jobs)
    else:
        for job in jobs:
            yield worker(job)


def _chunked(seq: Iterable, size: int) -> Iterator[list]:
    it = iter(seq)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def _chunk_size(total: int, threads: int, floor: int = 2000) -> int:
    per = math.ceil(total / max(1, 4 * threads))
    return max(floor, per)


# ---------------------------------------------------------------------------
# Arthur-type uncertainty sweep


def _scan_two_xi(a_parts: Sequence[int], n: int) -> tuple[int, int]:
    """Full prefix-sum scan of the character attached to a partition, using
    the counting layout of its doubled entries.  Returns the unreduced
    (num, den) of the maximum ratio; identical semantics to decay_t."""
    counts = [0] * (2 * n - 1)
    for d in a_parts:
        for v in range(d - 1, -d, -2):
            counts[v + n - 1] += 1
    scaled: list[int] = []
    for v in range(n - 1, -n, -1):
        c = counts[v + n - 1]
        if c:
            scaled.extend([v] * c)
    num, den, _ = _max_ratio_scan(scaled, 2)
    return num, den


def _arthur_chunk(job) -> tuple:
    n, chunk = job
    nn1 = n * (n - 1)
    count = 0
    failures = []
    min_low = None  # (num, den) of t - g
    min_up = None  # (num, den) of g - t^2
    for parts in chunk:
        count += 1
        d1 = parts[0]
        a1 = 0
        s = 0
        for d in parts:
            s += d * (d - 1)
            if d == d1:
                a1 += 1
        if d1 == 1:
            tn, td = 0, 1
        else:
            tn, td = d1 - 1, n - a1
        scan_n, scan_d = _scan_two_xi(parts, n)
        notes = []
        if scan_n * td != tn * scan_d:
            notes.append("closed-form t differs from prefix-sum scan")
        lower_ok = s * td <= tn * nn1
        upper_ok = tn * tn * nn1 <= s * td * td
        if notes or not lower_ok or not upper_ok:
            failures.append(_failure_report(parts, notes))
            continue
        low = (tn * nn1 - s * td, td * nn1)
        if min_low is None or low[0] * min_low[1] < min_low[0] * low[1]:
            min_low = low
        up = (s * td * td - tn * tn * nn1, nn1 * td * td)
        if min_up is None or up[0] * min_up[1] < min_up[0] * up[1]:
            min_up = up
    return count, failures, min_low, min_up


def _failure_report(parts: tuple[int, ...], notes: list[str]) -> InvariantReport:
    report = report_for_arthur_partition(parts)
    extra = "; ".join(notes)
    if not report.lower_ok:
        extra = (extra + "; " if extra else "") + "lower bound g <= t failed"
    if not report.upper_ok:
        extra = (extra + "; " if extra else "") + "upper bound t^2 <= g failed"
    return replace(report, note=extra)


def verify_uncertainty_arthur(N: int, threads: int = 1) -> SweepSummary:
    """Check g <= t and t^2 <= g for every partition of N, with t computed by
    the closed form and cross-checked against the full scan on every case."""
    if N < 2:
        raise ValueError("sweep requires N >= 2")
    size = _chunk_size(partition_count(N), threads)
    jobs = [(N, chunk) for chunk in _chunked(partition_tuples(N), size)]
    summary = SweepSummary(N=N)
    for count, failures, min_low, min_up in _map_chunks(_arthur_chunk, jobs, threads):
        part = SweepSummary(
            N=N,
            count=count,
            failures=failures,
            min_gap_lower=None if min_low is None else Fraction(*min_low),
            min_gap_upper=None if min_up is None else Fraction(*min_up),
        )
        summary = summary.merge(part)
    return summary


# ---------------------------------------------------------------------------
# figure dataset


@dataclass(frozen=True)
class FigureRow:
    partition: tuple[int, ...]
    d_gk: int
    g: Fraction
    t: Fraction
    lower_ok: bool
    upper_ok: bool


def _figure_chunk(job) -> list[tuple]:
    n, start, chunk = job
    nn1 = n * (n - 1)
    nsq = n * n
    rows = []
    for offset, parts in enumerate(chunk):
        d1 = parts[0]
        a1 = 0
        s = 0
        sq = 0
        for d in parts:
            s += d * (d - 1)
            sq += d * d
            if d == d1:
                a1 += 1
        if d1 == 1:
            tn, td = 0, 1
        else:
            tn, td = d1 - 1, n - a1
        d_gk = (nsq - sq) // 2
        lower_ok = s * td <= tn * nn1
        upper_ok = tn * tn * nn1 <= s * td * td
        rows.append((d_gk, start + offset, parts, s, tn, td, lower_ok, upper_ok))
    return rows


def figure_rows(N: int, threads: int = 1) -> list[FigureRow]:
    """One row per partition of N, sorted by GK-dimension and then by the
    canonical enumeration order.  All fields exact."""
    if N < 2:
        raise ValueError("figure requires N >= 2")
    nn1 = N * (N - 1)
    size = _chunk_size(partition_count(N), threads)
    jobs = []
    start = 0
    for chunk in _chunked(partition_tuples(N), size):
        jobs.append((N, start, chunk))
        start += len(chunk)
    raw: list[tuple] = []
    for rows in _map_chunks(_figure_chunk, jobs, threads):
        raw.extend(rows)
    raw.sort(key=lambda r: (r[0], r[1]))
    return [
        FigureRow(
            partition=parts,
            d_gk=d_gk,
            g=Fraction(s, nn1),
            t=Fraction(tn, td),
            lower_ok=lower_ok,
            upper_ok=upper_ok,
        )
        for d_gk, _, parts, s, tn, td, lower_ok, upper_ok in raw
    ]


def write_figure_csv(N: int, out: IO[str], threads: int = 1) -> tuple[int, int]:
    """Write the figure dataset as CSV (LF endings); returns (row count,
    number of rows violating a bound).

    Output is byte-identical across runs and thread counts.
    """
    rows = figure_rows(N, threads=threads)
    violations = sum(1 for r in rows if not (r.lower_ok and r.upper_ok))
    out.write(FIGURE_CSV_HEADER + "\n")
    for row in rows:
        g, t = row.g, row.t
        sqrt_g = math.sqrt(g.numerator / g.denominator)
        out.write(
            "%s,%d,%d,%d,%d,%d,%s,%s,%.12f,%s,%s\n"
            % (
                "+".join(str(p) for p in row.partition),
                row.d_gk,
                g.numerator,
                g.denominator,
                t.numerator,
                t.denominator,
                rat_decimal(g),
                rat_decimal(t),
                sqrt_g,
                "true" if row.lower_ok else "false",
                "true" if row.upper_ok else "false",
            )
        )
    return len(rows), violations


# ---------------------------------------------------------------------------
# unitarizable uncertainty sweep


def _unitary_groups(
    N: int, twist_grid: Sequence[Fraction]
) -> list[tuple[int, int, Fraction]]:
    groups = []
    for a in range(1, N + 1):
        for d in range(1, N // a + 1):
            groups.append((a, d, Fraction(0)))
            if 2 * a * d <= N:
                for y in twist_grid:
                    groups.append((a, d, y))
    return groups


def _group_weight(group: tuple[int, int, Fraction]) -> int:
    a, d, y = group
    return a * d if y == 0 else 2 * a * d


def _unitary_cases(
    N: int, twist_grid: Sequence[Fraction], max_summands: int
) -> Iterator[tuple[tuple[int, int, Fraction], ...]]:
    groups = _unitary_groups(N, twist_grid)

    def rec(start: int, remaining: int, used: int, acc: list):
        if remaining == 0:
            yield tuple(acc)
            return
        if used == max_summands:
            return
        for k in range(start, len(groups)):
            w = _group_weight(groups[k])
            if w <= remaining:
                acc.append(groups[k])
                yield from rec(k, remaining - w, used + 1, acc)
                acc.pop()

    yield from rec(0, N, 0, [])


def _rep_from_groups(case: Sequence[tuple[int, int, Fraction]]) -> UnitaryRep:
    summands = []
    for i, (a, d, y) in enumerate(case, start=1):
        rho = SupercuspidalLabel(f"rho{i}", 1)
        if y == 0:
            summands.append(ArthurSummand(rho, a, d))
        else:
            summands.append(ArthurSummand(rho, a, d, y))
            summands.append(ArthurSummand(rho, a, d, -y))
    return UnitaryRep(summands)


def _unitary_chunk(job) -> tuple:
    n, chunk = job
    two_over_n = Fraction(2, n)
    count = 0
    failures = []
    min_low = None
    min_up = None
    for case in chunk:
        count += 1
        pi = _rep_from_groups(case)
        g = pi.non_genericity()
        t = decay_t(pi.character()).t
        notes = []
        if pi.is_arthur_type and t != decay_t_arthur(pi.arthur_sl2()):
            notes.append("closed-form t differs from prefix-sum scan")
        lower_ok = g <= t
        shifted = t - two_over_n
        if shifted < 0:
            shifted = Fraction(0)
        upper_ok = shifted * shifted <= g
        if notes or not lower_ok or not upper_ok:
            report = report_for_rep(pi)
            extra = "; ".join(notes)
            if not lower_ok:
                extra = (extra + "; " if extra else "") + "lower bound g <= t failed"
            if not upper_ok:
                extra = (extra + "; " if extra else "") + "upper bound (t - 2/N)^2 <= g failed"
            failures.append(replace(report, note=extra))
            continue
        low = t - g
        if min_low is None or low < min_low:
            min_low = low
        up = g - shifted * shifted
        if min_up is None or up < min_up:
            min_up = up
    return count, failures, min_low, min_up


def verify_uncertainty_unitary(
    N: int,
    twist_grid: Sequence[Fraction],
    max_summands: int = 3,
    threads: int = 1,
) -> SweepSummary:
    """Check g <= t and t <= sqrt(g) + 2/N (exactly, as (t - 2/N)^2 <= g when
    t > 2/N) over all unitarizable shapes of total dimension N built from
    untwisted summands and +/- twisted pairs over dimension-1 labels, with at
    most ``max_summands`` summand groups and twists drawn from the grid."""
    if N < 2:
        raise ValueError("sweep requires N >= 2")
    grid = [Fraction(y) for y in twist_grid]
    for y in grid:
        if not 0 < y < Fraction(1, 2):
            raise ValueError(f"twist grid values must lie strictly in (0, 1/2), got {y}")
    cases = list(_unitary_cases(N, grid, max_summands))
    jobs = [(N, chunk) for chunk in _chunked(cases, _chunk_size(len(cases), threads, 200))]
    summary = SweepSummary(N=N)
    for count, failures, min_low, min_up in _map_chunks(_unitary_chunk, jobs, threads):
        summary = summary.merge(
            SweepSummary(
                N=N,
                count=count,
                failures=failures,
                min_gap_lower=min_low,
                min_gap_upper=min_up,
            )
        )
    return summary


# ---------------------------------------------------------------------------
# two-route consistency sweep


@dataclass(frozen=True)
class ConsistencyBudget:
    """Limits for the exhaustive summand sweep."""

    max_summands: int = 4
    max_dim: int = 3
    max_a: int = 4
    max_d: int = 4
    max_total_dim: Optional[int] = None


def _consistency_shapes(budget: ConsistencyBudget) -> list[tuple[int, int, int]]:
    return [
        (dim, a, d)
        for dim in range(1, budget.max_dim + 1)
        for a in range(1, budget.max_a + 1)
        for d in range(1, budget.max_d + 1)
    ]


def _rep_from_specs(specs: Sequence[tuple[int, int, int, int, int, int]]) -> UnitaryRep:
    # specs: (label_group, dim, a, d, x_num, x_den); +/- twisted pairs share a
    # label group so they sit on the same cuspidal line
    summands = []
    for group, dim, a, d, xn, xd in specs:
        summands.append(
            ArthurSummand(SupercuspidalLabel(f"rho{group}", dim), a, d, Fraction(xn, xd))
        )
    return UnitaryRep(summands)


def _check_consistency_rep(pi: UnitaryRep) -> list[str]:
    notes = []
    m_zel = pi.zelevinsky_data()
    if pi.gk_dim() != m_zel.gk_dim():
        notes.append("GK-dimension differs between Arthur and Zelevinsky routes")
    if dual_partition(pi.arthur_sl2()) != m_zel.wavefront():
        notes.append("wavefront differs between Arthur and Zelevinsky routes")
    if pi.character() != pi.langlands_data().character():
        notes.append("character differs between Arthur and Langlands routes")
    return notes


def _consistency_failure(pi: UnitaryRep, notes: list[str]) -> InvariantReport:
    a_sl2 = pi.arthur_sl2()
    report = InvariantReport(
        arthur_sl2=a_sl2,
        wavefront=dual_partition(a_sl2),
        d_gk=pi.gk_dim(),
        g=pi.non_genericity() if pi.N >= 2 else Fraction(0),
        t=decay_t(pi.character()).t if pi.N >= 2 else Fraction(0),
        lower_ok=True,
        upper_ok=True,
        maximizers=frozenset(),
        note="; ".join(notes),
    )
    return report


def _consistency_exhaustive_chunk(job) -> tuple:
    budget, start, stop = job
    shapes = _consistency_shapes(budget)
    count = 0
    failures = []
    combos = itertools.chain.from_iterable(
        itertools.combinations_with_replacement(range(len(shapes)), k)
        for k in range(1, budget.max_summands + 1)
    )
    for combo in itertools.islice(combos, start, stop):
        specs = [(g,) + shapes[i] + (0, 1) for g, i in enumerate(combo, start=1)]
        if budget.max_total_dim is not None:
            if sum(dim * a * d for _, dim, a, d, _, _ in specs) > budget.max_total_dim:
                continue
        count += 1
        pi = _rep_from_specs(specs)
        notes = _check_consistency_rep(pi)
        if notes:
            failures.append(_consistency_failure(pi, notes))
    return count, failures, None, None


def _consistency_random_chunk(job) -> tuple:
    specs_chunk = job
    count = 0
    failures = []
    for specs in specs_chunk:
        count += 1
        pi = _rep_from_specs(specs)
        notes = _check_consistency_rep(pi)
        if notes:
            failures.append(_consistency_failure(pi, notes))
    return count, failures, None, None


def _random_case_specs(
    budget: ConsistencyBudget, random_cases: int, seed: int
) -> list[list[tuple[int, int, int, int, int, int]]]:
    rng = random.Random(seed)
    cases = []
    attempts = 0
    while len(cases) < random_cases:
        attempts += 1
        if attempts > 2000 * max(1, random_cases):
            raise ValueError(
                "the total-dimension cap leaves too few admissible random cases"
            )
        slots = rng.randint(1, budget.max_summands)
        specs: list[tuple[int, int, int, int, int, int]] = []
        group = 0
        while slots > 0:
            group += 1
            dim = rng.randint(1, budget.max_dim)
            a = rng.randint(1, budget.max_a)
            d = rng.randint(1, budget.max_d)
            if slots >= 2 and rng.random() < 0.5:
                num = rng.randint(1, 9)
                specs.append((group, dim, a, d, num, 20))
                specs.append((group, dim, a, d, -num, 20))
                slots -= 2
            else:
                specs.append((group, dim, a, d, 0, 1))
                slots -= 1
        if budget.max_total_dim is not None:
            if sum(dim * a * d for _, dim, a, d, _, _ in specs) > budget.max_total_dim:
                continue
        cases.append(specs)
    return cases


def verify_consistency(
    budget: ConsistencyBudget = ConsistencyBudget(),
    random_cases: int = 10000,
    seed: int = 0,
    threads: int = 1,
) -> SweepSummary:
    """Compare the Arthur route (Arthur-SL2, its dual, the string character)
    against the Zelevinsky/Langlands route (multisegment partition, wavefront,
    midpoint character) as exact equalities.

    Runs exhaustively over all summand multisets within the budget (twists
    zero), then over ``random_cases`` sampled cases that also include +/-
    twisted pairs.
    """
    if budget.max_total_dim is not None and budget.max_total_dim < 1:
        raise ValueError("the total-dimension cap must be a positive integer")
    shapes = _consistency_shapes(budget)
    total = sum(
        math.comb(len(shapes) + k - 1, k) for k in range(1, budget.max_summands + 1)
    )
    size = _chunk_size(total, threads)
    jobs: list = []
    for start in range(0, total, size):
        jobs.append((budget, start, min(start + size, total)))

    summary = SweepSummary(N=budget.max_total_dim)
    for count, failures, _, _ in _map_chunks(_consistency_exhaustive_chunk, jobs, threads):
        summary = summary.merge(SweepSummary(N=summary.N, count=count, failures=failures))

    if random_cases > 0:
        cases = _random_case_specs(budget, random_cases, seed)
        rjobs = list(_chunked(cases, _chunk_size(len(cases), threads, 500)))
        for count, failures, _, _ in _map_chunks(_consistency_random_chunk, rjobs, threads):
            summary = summary.merge(
                SweepSummary(N=summary.N, count=count, failures=failures)
            )
    return summary
