"""Exhaustive labeled enumeration of small graphs, extremal scans, and the
batch verification harness.

Generation walks the upper-triangle adjacency bits in graph6 order with two
degree prunes: a branch that would push a vertex past the maximum degree is
skipped, and a subtree is skipped as soon as some vertex cannot reach the
minimum degree with its remaining undecided slots.  Enumeration is labeled
(no isomorphism reduction); a best-effort canonical relabeling is applied
only to reported witness graphs.

The scan tree can be partitioned by fixing the first k edge bits; partitions
are processed independently and merged by min/max/sum, so results do not
depend on the worker count.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional

from .bounds import SLACK_TOLERANCE, lower_bound, upper_bound, decomposition_residual, telescope_gap
from .constructions import build_degree_chain, degree_chain_certificate
from .graphs import Graph, _graph_unchecked, biregular_certificate, is_connected, to_graph6
from .index import IDENTITY_TOLERANCE, randic_deviation, randic_direct

#: Hard cap on the vertex count; n = 8 works but takes tens of minutes.
MAX_VERTICES = 8

#: Seed for the random triples of the gap-positivity check.
_GAP_SEED = 8128


def enumerate_graphs(n: int, *, connected: Optional[bool] = None,
                     min_degree: Optional[int] = None,
                     max_degree: Optional[int] = None,
                     prefix: tuple[int, ...] = ()) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices meeting the constraints,
    exactly once, in a fixed order (two runs produce identical streams).

    ``prefix`` pins the first len(prefix) adjacency bits, which is how the
    scan tree is partitioned across workers.  Requires 1 <= n <= 8.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    total = len(pairs)
    if len(prefix) > total or any(b not in (0, 1) for b in prefix):
        raise ValueError(f"prefix must be at most {total} bits of 0/1")
    lo = 0 if min_degree is None else min_degree
    hi = n - 1 if max_degree is None else max_degree
    if lo < 0 or hi < 0:
        raise ValueError("degree constraints must be non-negative")
    if lo > n - 1:
        return
    deg = [0] * n
    rem = [n - 1] * n
    edges: list[tuple[int, int]] = []

    def rec(t: int) -> Iterator[Graph]:
        if t == total:
            if connected is not None and _connected(n, edges) != connected:
                return
            yield _graph_unchecked(n, tuple(sorted(edges)), tuple(deg))
            return
        u, v = pairs[t]
        ru = rem[u] = rem[u] - 1
        rv = rem[v] = rem[v] - 1
        du, dv = deg[u], deg[v]
        for bit in (prefix[t],) if t < len(prefix) else (0, 1):
            if bit == 0:
                if du + ru >= lo and dv + rv >= lo:
                    yield from rec(t + 1)
            elif du < hi and dv < hi and du + 1 + ru >= lo and dv + 1 + rv >= lo:
                deg[u] = du + 1
                deg[v] = dv + 1
                edges.append((u, v))
                yield from rec(t + 1)
                edges.pop()
                deg[u] = du
                deg[v] = dv
        rem[u] += 1
        rem[v] += 1

    yield from rec(0)


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == n


def canonical_graph6(g: Graph) -> str:
    """graph6 of the graph relabeled by (degree, sorted neighbor degrees).

    Best effort only: vertices still tied after the two-level key keep their
    relative order, so distinct labelings of highly symmetric graphs can map
    to different strings.  Good enough to deduplicate reported witnesses.
    """
    deg = g.degrees
    adj = g.adjacency
    key = [(deg[v], tuple(sorted(deg[w] for w in adj[v]))) for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: key[v])
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return to_graph6(g.relabel(perm))


@dataclass(frozen=True)
class EnumerationSummary:
    """Extremal statistics for one (n, d, D) class of enumerated graphs."""

    n: int
    d: int
    D: int
    class_count: int
    min_randic: float
    max_randic: float
    argmin_graph6: str
    argmax_graph6: str
    lower_violations: int
    upper_violations: int
    lower_equality_witnesses: int
    upper_equality_witnesses: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "D": self.D,
            "classCount": self.class_count,
            "minR": self.min_randic, "maxR": self.max_randic,
            "argmin": self.argmin_graph6, "argmax": self.argmax_graph6,
            "lowerViolations": self.lower_violations,
            "upperViolations": self.upper_violations,
            "lowerEqualityWitnesses": self.lower_equality_witnesses,
            "upperEqualityWitnesses": self.upper_equality_witnesses,
        }


CSV_COLUMNS = ("n", "d", "D", "classCount", "minR", "maxR", "argmin", "argmax",
               "lowerViolations", "upperViolations",
               "lowerEqualityWitnesses", "upperEqualityWitnesses")


def _new_class_record() -> dict:
    return {
        "count": 0,
        "min_r": math.inf, "argmin": "",
        "max_r": -math.inf, "argmax": "",
        "lower_violations": 0, "upper_violations": 0,
        "lower_witnesses": 0, "upper_witnesses": 0,
    }


def _scan_partition(n: int, connected_only: bool, prefix: tuple[int, ...],
                    slack_tol: float) -> dict[tuple[int, int], dict]:
    records: dict[tuple[int, int], dict] = {}
    lb_cache: dict[tuple[int, int], float] = {}
    ub_cache: dict[tuple[int, int], float] = {}
    gen = enumerate_graphs(n, connected=True if connected_only else None,
                           min_degree=1, prefix=prefix)
    for g in gen:
        deg = g.degrees
        d = min(deg)
        D = max(deg)
        if d == D:
            continue
        value = randic_direct(g).value
        rec = records.get((d, D))
        if rec is None:
            rec = records[(d, D)] = _new_class_record()
            lb_cache[(d, D)] = lower_bound(n, d, D)
            ub_cache[(d, D)] = upper_bound(n, d, D)
        rec["count"] += 1
        if value < rec["min_r"]:
            rec["min_r"] = value
            rec["argmin"] = canonical_graph6(g)
        elif value == rec["min_r"]:
            c6 = canonical_graph6(g)
            if c6 < rec["argmin"]:
                rec["argmin"] = c6
        if value > rec["max_r"]:
            rec["max_r"] = value
            rec["argmax"] = canonical_graph6(g)
        elif value == rec["max_r"]:
            c6 = canonical_graph6(g)
            if c6 < rec["argmax"]:
                rec["argmax"] = c6
        if value < lb_cache[(d, D)] - slack_tol:
            rec["lower_violations"] += 1
        if biregular_certificate(g) is not None:
            rec["lower_witnesses"] += 1
        if connected_only or is_connected(g):
            if value > ub_cache[(d, D)] + slack_tol:
                rec["upper_violations"] += 1
            if degree_chain_certificate(g) is not None:
                rec["upper_witnesses"] += 1
    return records


def _merge_class_records(into: dict, other: dict) -> None:
    for key, rec in other.items():
        dst = into.get(key)
        if dst is None:
            into[key] = dict(rec)
            continue
        dst["count"] += rec["count"]
        if (rec["min_r"], rec["argmin"]) < (dst["min_r"], dst["argmin"]):
            dst["min_r"], dst["argmin"] = rec["min_r"], rec["argmin"]
        if (-rec["max_r"], rec["argmax"]) < (-dst["max_r"], dst["argmax"]):
            dst["max_r"], dst["argmax"] = rec["max_r"], rec["argmax"]
        for field in ("lower_violations", "upper_violations",
                      "lower_witnesses", "upper_witnesses"):
            dst[field] += rec[field]


def _scan_worker(args) -> dict:
    n, connected_only, prefix, slack_tol = args
    return _scan_partition(n, connected_only, tuple(prefix), slack_tol)


def _prefix_tasks(n: int, jobs: int) -> list[tuple[int, ...]]:
    total = n * (n - 1) // 2
    if jobs <= 1 or total == 0:
        return [()]
    k = min(total, max(1, (4 * jobs - 1).bit_length()))
    return [tuple((idx >> (k - 1 - b)) & 1 for b in range(k))
            for idx in range(2 ** k)]


def extremal_scan(n_max: int, connected_only: bool = False, jobs: int = 1,
                  slack_tolerance: float = SLACK_TOLERANCE) -> list[EnumerationSummary]:
    """Scan all classes (n, d, D) with d < D for n <= n_max and report
    per-class extremal statistics.  Violation counts must come back zero."""
    if not 1 <= n_max <= MAX_VERTICES:
        raise ValueError(f"n_max must be in [1, {MAX_VERTICES}], got {n_max}")
    summaries: list[EnumerationSummary] = []
    for n in range(2, n_max + 1):
        merged: dict[tuple[int, int], dict] = {}
        tasks = [(n, connected_only, prefix, slack_tolerance)
                 for prefix in _prefix_tasks(n, jobs)]
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                parts = pool.map(_scan_worker, tasks)
        else:
            parts = [_scan_worker(t) for t in tasks]
        for part in parts:
            _merge_class_records(merged, part)
        for (d, D) in sorted(merged):
            rec = merged[(d, D)]
            summaries.append(EnumerationSummary(
                n=n, d=d, D=D,
                class_count=rec["count"],
                min_randic=rec["min_r"], max_randic=rec["max_r"],
                argmin_graph6=rec["argmin"], argmax_graph6=rec["argmax"],
                lower_violations=rec["lower_violations"],
                upper_violations=rec["upper_violations"],
                lower_equality_witnesses=rec["lower_witnesses"],
                upper_equality_witnesses=rec["upper_witnesses"]))
    return summaries


@dataclass(frozen=True)
class CheckResult:
    name: str
    checked: int
    failures: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class VerificationReport:
    max_n: int
    graphs: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "maxN": self.max_n,
            "graphs": self.graphs,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "checked": c.checked, "failures": c.failures,
                 "counterexample": c.counterexample}
                for c in self.checks
            ],
        }


_CHECK_NAMES = ("identity", "decomposition", "lower-bound", "lower-equality",
                "upper-bound", "upper-equality", "star-baseline")


def _new_verify_counts() -> dict:
    counts: dict = {"graphs": 0}
    for name in _CHECK_NAMES:
        counts[name] = [0, 0, None]  # checked, failures, counterexample
    return counts


def _verify_partition(n: int, prefix: tuple[int, ...], identity_tol: float,
                      slack_tol: float) -> dict:
    counts = _new_verify_counts()
    root = math.sqrt(n - 1)
    lb_cache: dict[tuple[int, int], float] = {}
    ub_cache: dict[tuple[int, int], float] = {}

    def fail(name: str, g: Graph) -> None:
        entry = counts[name]
        entry[1] += 1
        if entry[2] is None:
            entry[2] = to_graph6(g)

    for g in enumerate_graphs(n, min_degree=1, prefix=prefix):
        counts["graphs"] += 1
        deg = g.degrees
        d = min(deg)
        D = max(deg)
        value = randic_direct(g).value

        counts["identity"][0] += 1
        if abs(value - randic_deviation(g)) > identity_tol:
            fail("identity", g)

        counts["star-baseline"][0] += 1
        is_star = g.m == n - 1 and D == n - 1 and n >= 2
        star_equal = abs(value - root) <= slack_tol
        if value < root - slack_tol or star_equal != is_star:
            fail("star-baseline", g)

        if d == D:
            continue

        key = (d, D)
        lb = lb_cache.get(key)
        if lb is None:
            lb = lb_cache[key] = lower_bound(n, d, D)
            ub_cache[key] = upper_bound(n, d, D)

        counts["decomposition"][0] += 1
        if decomposition_residual(g, tolerance=identity_tol) > identity_tol:
            fail("decomposition", g)

        counts["lower-bound"][0] += 1
        if value < lb - slack_tol:
            fail("lower-bound", g)

        counts["lower-equality"][0] += 1
        lower_equal = abs(value - lb) <= slack_tol
        if lower_equal != (biregular_certificate(g) is not None):
            fail("lower-equality", g)

        if is_connected(g):
            ub = ub_cache[key]
            counts["upper-bound"][0] += 1
            if value > ub + slack_tol:
                fail("upper-bound", g)
            counts["upper-equality"][0] += 1
            upper_equal = abs(value - ub) <= slack_tol
            if upper_equal != (degree_chain_certificate(g) is not None):
                fail("upper-equality", g)
    return counts


def _verify_worker(args) -> dict:
    n, prefix, identity_tol, slack_tol = args
    return _verify_partition(n, tuple(prefix), identity_tol, slack_tol)


def _merge_verify_counts(into: dict, other: dict) -> None:
    into["graphs"] += other["graphs"]
    for name in _CHECK_NAMES:
        into[name][0] += other[name][0]
        into[name][1] += other[name][1]
        if into[name][2] is None:
            into[name][2] = other[name][2]


def chain_grid_check(max_degree: int = 9,
                     identity_tol: float = IDENTITY_TOLERANCE) -> CheckResult:
    """Verify the chain construction on every odd pair d < D <= max_degree:
    the built graph is connected, has degree range exactly [d, D], carries a
    chain certificate, has exactly D - d unequal-degree edges (each with
    difference 1), and its index matches the closed form to identity_tol."""
    checked = 0
    failures = 0
    example = None
    for d in range(1, max_degree + 1, 2):
        for D in range(d + 2, max_degree + 1, 2):
            checked += 1
            g = build_degree_chain(d, D)
            deg = g.degrees
            cross = [(u, v) for u, v in g.edges if deg[u] != deg[v]]
            ok = (min(deg) == d and max(deg) == D
                  and is_connected(g)
                  and len(cross) == D - d
                  and all(abs(deg[u] - deg[v]) == 1 for u, v in cross)
                  and degree_chain_certificate(g) is not None
                  and abs(randic_direct(g).value - upper_bound(g.n, d, D)) <= identity_tol)
            if not ok:
                failures += 1
                if example is None:
                    example = to_graph6(g)
    return CheckResult("chain-grid", checked, failures, example)


def gap_positivity_check(samples: int = 10000, low: float = 1.0,
                         high: float = 100.0, seed: int = _GAP_SEED,
                         identity_tol: float = IDENTITY_TOLERANCE) -> CheckResult:
    """Draw ordered random triples and confirm the telescoping gap is
    strictly positive and matches its product form within identity_tol."""
    rng = random.Random(seed)
    checked = 0
    failures = 0
    while checked < samples:
        x, y, z = sorted(rng.uniform(low, high) for _ in range(3))
        if x == y or y == z:
            continue
        checked += 1
        gap = telescope_gap(x, y, z)
        a, b, c = 1 / math.sqrt(x), 1 / math.sqrt(y), 1 / math.sqrt(z)
        product = 2 * (a - b) * (b - c)
        if gap <= 0 or abs(gap - product) > identity_tol:
            failures += 1
    return CheckResult("gap-positivity", checked, failures)


def verify_theorems(n_max: int, jobs: int = 1,
                    identity_tolerance: float = IDENTITY_TOLERANCE,
                    slack_tolerance: float = SLACK_TOLERANCE) -> VerificationReport:
    """Run every per-graph check over all enumerated graphs with no isolated
    vertices and 2 <= n <= n_max, plus the chain-grid and gap-positivity
    batches.  A clean run reports zero failures everywhere."""
    if not 1 <= n_max <= MAX_VERTICES:
        raise ValueError(f"n_max must be in [1, {MAX_VERTICES}], got {n_max}")
    merged = _new_verify_counts()
    tasks = []
    for n in range(2, n_max + 1):
        tasks.extend((n, prefix, identity_tolerance, slack_tolerance)
                     for prefix in _prefix_tasks(n, jobs))
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_verify_worker, tasks)
    else:
        parts = [_verify_worker(t) for t in tasks]
    for part in parts:
        _merge_verify_counts(merged, part)
    checks = [CheckResult(name, merged[name][0], merged[name][1], merged[name][2])
              for name in _CHECK_NAMES]
    checks.append(chain_grid_check(identity_tol=identity_tolerance))
    checks.append(gap_positivity_check(identity_tol=identity_tolerance))
    return VerificationReport(max_n=n_max, graphs=merged["graphs"],
                              checks=tuple(checks))
