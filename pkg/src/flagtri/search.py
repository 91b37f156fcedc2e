"""Exhaustive search for dense fascinating graphs on few vertices.

Graphs are generated through their complements.  Level k holds one
representative per isomorphism class of k-edge complements whose maximum
degree is at most n - 7 (every vertex link needs six vertices).  Level k+1
is obtained by adding one edge in every possible way and deduplicating
canonically; since deleting any edge of a (k+1)-edge graph leaves a k-edge
graph, nothing is missed.  Levels in the requested edge range are then
checked, cheapest test first.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import networkx as nx

from .canon import canonical_form, canonical_labeling
from .constructions import (
    FIGURE2A_MIN_C,
    FIGURE2B_MIN_K,
    figure2a,
    figure2b,
    join_of_cycles_graph,
)
from .fascinating import FascinatingReport, check_fascinating
from .graph import Graph, format_graph
from .joinlike import (
    NotFascinatingError,
    NotJoinlike,
    detect_joinlike,
    is_join_of_two_cycles,
)

JOIN = "join_of_two_cycles"
FIG2A = "figure2a"
FIG2B = "figure2b"
OTHER = "other"

DEFAULT_N_CAP = 10
CHECKPOINT_VERSION = 1


class SearchSpecError(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """Raised when a budget runs out; ``checkpoint`` resumes the run."""

    def __init__(self, message: str, checkpoint: dict):
        super().__init__(message)
        self.checkpoint = checkpoint


def default_m_min(n: int) -> int:
    """Smallest m strictly above (n^2 + 2n + 17) / 4."""
    return (n * n + 2 * n + 17) // 4 + 1


@dataclass
class SearchSpec:
    n: int
    m_min: int | None = None
    m_max: int | None = None  # None: up to the complete graph
    degree_cap: bool = True  # complement max degree <= n - 7
    early_exit: bool = True  # stop checking a graph at its first failed condition
    dedupe: str = "canonical"  # or "labeled"
    chunk_size: int = 256
    threads: int = 1
    seed: int = 0  # only shuffles chunk dispatch; results do not depend on it
    n_cap: int = DEFAULT_N_CAP
    max_states: int | None = None  # total complements generated
    time_limit: float | None = None  # seconds
    max_complement_edges: int | None = None

    def __post_init__(self):
        if self.m_min is None:
            self.m_min = default_m_min(self.n)
        total = self.n * (self.n - 1) // 2
        if self.n < 1:
            raise SearchSpecError("n must be positive")
        if self.n > self.n_cap:
            raise SearchSpecError(f"n={self.n} exceeds the cap {self.n_cap}; raise n_cap explicitly")
        if not 0 <= self.m_min <= total:
            raise SearchSpecError(f"m_min must lie in [0, {total}]")
        if self.m_max is not None and not self.m_min <= self.m_max <= total:
            raise SearchSpecError(f"m_max must lie in [m_min, {total}]")
        if self.dedupe not in ("canonical", "labeled"):
            raise SearchSpecError("dedupe must be 'canonical' or 'labeled'")
        if self.chunk_size < 1 or self.threads < 1:
            raise SearchSpecError("chunk_size and threads must be positive")

    @classmethod
    def exact(cls, n: int, m: int, **kw) -> "SearchSpec":
        return cls(n, m_min=m, m_max=m, **kw)

    @property
    def total_pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def max_level(self) -> int:
        return self.total_pairs - self.m_min

    @property
    def min_level(self) -> int:
        return 0 if self.m_max is None else self.total_pairs - self.m_max

    @property
    def complement_degree_cap(self) -> int:
        return self.n - 7 if self.degree_cap else self.n - 1


# -- classification --------------------------------------------------------------

def _isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


@dataclass
class ClassifiedGraph:
    graph: Graph  # canonical form
    m: int
    cls: str
    t: int | None
    report: FascinatingReport
    matches: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.graph.n

    def to_record(self) -> dict:
        return {"n": self.n, "m": self.m, "class": self.cls, "t": self.t,
                "matches": self.matches, "graph": format_graph(self.graph)}

    def to_json(self) -> dict:
        out = self.to_record()
        out["report"] = self.report.to_json()
        return out


def family_matches(g: Graph) -> list[str]:
    """Every constructor output isomorphic to g, ordered figure2b, figure2a, join."""
    out = []
    if g.n % 2 == 1:
        k = (g.n - 3) // 2
        if k >= FIGURE2B_MIN_K and _isomorphic(g, figure2b(k)):
            out.append(f"{FIG2B}({k})")
        c = (g.n - 1) // 2
        if c >= FIGURE2A_MIN_C:
            for a2 in range(3, c):
                if _isomorphic(g, figure2a(c, a2)):
                    out.append(f"{FIG2A}({c},{a2})")
    ok, c1, c2 = is_join_of_two_cycles(g)
    if ok:
        p, q = sorted((len(c1), len(c2)))
        if p >= 3 and _isomorphic(g, join_of_cycles_graph(p, q)):
            out.append(f"{JOIN}({p},{q})")
    return out


def classify(g: Graph, report: FascinatingReport | None = None) -> ClassifiedGraph:
    """Class of a fascinating graph, its minimal joinlike t and all family matches.

    The first match wins in the order figure2b, figure2a, join: on small
    vertex counts the families overlap (figure2a(4, 3) is C4*C5 and
    figure2b(k) is figure2a(k+1, 4)), and the more specific name is kept.
    All matches are listed in ``matches``.
    """
    if report is None or not report.exhaustive:
        report = check_fascinating(g)
    if not report.passes:
        raise NotFascinatingError(f"graph fails conditions {report.failed_conditions()}")
    canon = canonical_form(g)
    matches = family_matches(canon)
    cls = matches[0].split("(")[0] if matches else OTHER
    try:
        t = detect_joinlike(canon, t_max=canon.n, check=False).t
    except NotJoinlike:
        t = None
    return ClassifiedGraph(canon, canon.m, cls, t, check_fascinating(canon), matches)


# -- upper bound -----------------------------------------------------------------

@dataclass
class UpperBoundReport:
    ok: bool
    checked: int
    violations: list[dict]
    tight: list[dict]  # graphs with 4m = n^2 + 4n

    def to_json(self) -> dict:
        return asdict(self)


def verify_upper_bound(results) -> UpperBoundReport:
    """Check 4m <= n^2 + 4n for every graph (ClassifiedGraph or Graph)."""
    violations, tight = [], []
    count = 0
    for r in results:
        g = r.graph if isinstance(r, ClassifiedGraph) else r
        count += 1
        bound = Fraction(g.n * g.n, 4) + g.n
        row = {"n": g.n, "m": g.m, "bound": str(bound)}
        if g.m > bound:
            violations.append(row)
        elif g.m == bound:
            tight.append(row)
    return UpperBoundReport(not violations, count, violations, tight)


# -- enumeration -----------------------------------------------------------------

Edges = tuple[tuple[int, int], ...]


def _key(h: Graph, dedupe: str) -> tuple[tuple, Edges]:
    if dedupe == "labeled":
        e = tuple(h.edges())
        return e, e
    key, perm = canonical_labeling(h)
    return key, tuple(h.relabel(perm).edges())


def _expand_chunk(args) -> list[tuple[tuple, Edges]]:
    n, cap, dedupe, chunk = args
    out: dict[tuple, Edges] = {}
    for edges in chunk:
        deg = Graph(n, edges).degrees()
        present = set(edges)
        isolated = [v for v in range(n) if deg[v] == 0]
        canon = dedupe == "canonical"
        for u, v in itertools.combinations(range(n), 2):
            if deg[u] >= cap or deg[v] >= cap or (u, v) in present:
                continue
            if canon:
                # isolated vertices are interchangeable: use the first ones only
                fresh = [w for w in (u, v) if deg[w] == 0]
                if fresh and fresh != isolated[:len(fresh)]:
                    continue
            k, e = _key(Graph(n, (*edges, (u, v))), dedupe)
            if k not in out:
                out[k] = e
    return list(out.items())


def _evaluate_chunk(args) -> list[tuple[Edges, str | None]]:
    """For each complement, (complement, None) if fascinating else first failure."""
    n, early, chunk = args
    out = []
    for edges in chunk:
        g = Graph(n, edges).complement()
        rep = check_fascinating(g, exhaustive=not early)
        out.append((edges, None if rep.passes else rep.failed_conditions()[0]))
    return out


def _run_chunks(fn, payloads, threads: int, seed: int):
    order = list(range(len(payloads)))
    random.Random(seed).shuffle(order)
    results = [None] * len(payloads)
    if threads == 1 or len(payloads) <= 1:
        for i in order:
            results[i] = fn(payloads[i])
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = {i: pool.submit(fn, payloads[i]) for i in order}
            for i in order:
                results[i] = futures[i].result()
    return results


def _chunks(items: list, size: int) -> list[list]:
    return [items[i:i + size] for i in range(0, len(items), size)]


@dataclass
class SearchOutcome:
    spec: SearchSpec
    results: list[ClassifiedGraph]
    levels: list[dict]
    failures: dict[str, int]
    elapsed: float

    def summary(self) -> dict:
        n = self.spec.n
        strict = Fraction(n * n + 2 * n + 17, 4)
        classes: dict[str, int] = {}
        for r in self.results:
            classes[r.cls] = classes.get(r.cls, 0) + 1
        exceptions = [{"m": r.m, "class": r.cls, "t": r.t, "graph": format_graph(r.graph)}
                      for r in self.results if r.m > strict and r.cls != JOIN]
        spec = asdict(self.spec)
        spec.pop("threads")
        return {
            "spec": spec,
            "threads": self.spec.threads,
            "results": len(self.results),
            "classes": classes,
            "equality_window": sum(1 for r in self.results if r.m == strict),
            "above_window": sum(1 for r in self.results if r.m > strict),
            "small_n_exceptions": exceptions,
            "upper_bound": verify_upper_bound(self.results).to_json(),
            "levels": self.levels,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _checkpoint(spec: SearchSpec, level: int, frontier, passed, levels, failures) -> dict:
    return {
        "version": CHECKPOINT_VERSION,
        "spec": asdict(spec),
        "level": level,
        "frontier": [list(map(list, e)) for e in frontier],
        "passed": [list(map(list, e)) for e in passed],
        "levels": levels,
        "failures": failures,
    }


def save_checkpoint(checkpoint: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(checkpoint, fh)


def load_checkpoint(path) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION:
        raise SearchSpecError("unsupported checkpoint version")
    return data


def enumerate_dense_fascinating(spec: SearchSpec, resume: dict | None = None) -> SearchOutcome:
    """One ClassifiedGraph per isomorphism class with m_min <= m <= m_max.

    Raises ``SearchBudgetExceeded`` with a resumable checkpoint when
    ``max_states``, ``time_limit`` or ``max_complement_edges`` is exceeded.
    """
    start = time.monotonic()
    n = spec.n
    if resume is not None:
        level = resume["level"]
        frontier = [tuple(map(tuple, e)) for e in resume["frontier"]]
        passed = [tuple(map(tuple, e)) for e in resume["passed"]]
        levels = list(resume["levels"])
        failures = dict(resume["failures"])
    else:
        level, frontier, passed, levels, failures = -1, [], [], [], {}

    def state(lv, fr):
        return _checkpoint(spec, lv, fr, passed, levels, failures)

    if spec.max_complement_edges is not None and spec.max_level > spec.max_complement_edges:
        raise SearchBudgetExceeded(
            f"{spec.max_level} complement edges needed, cap is {spec.max_complement_edges}", state(level, frontier))

    states = sum(row["classes"] for row in levels)
    while level < spec.max_level:
        if level < 0:
            nxt = [()]
        else:
            payloads = [(n, spec.complement_degree_cap, spec.dedupe, c) for c in _chunks(frontier, spec.chunk_size)]
            merged: dict[tuple, Edges] = {}
            for part in _run_chunks(_expand_chunk, payloads, spec.threads, spec.seed + level):
                for k, e in part:
                    merged.setdefault(k, e)
            nxt = [merged[k] for k in sorted(merged)]
        states += len(nxt)
        if spec.max_states is not None and states > spec.max_states:
            raise SearchBudgetExceeded(f"state budget {spec.max_states} exceeded at level {level + 1}",
                                       state(level, frontier))
        if spec.time_limit is not None and time.monotonic() - start > spec.time_limit:
            raise SearchBudgetExceeded(f"time limit {spec.time_limit}s exceeded at level {level + 1}",
                                       state(level, frontier))
        level += 1
        frontier = nxt
        row = {"complement_edges": level, "m": spec.total_pairs - level, "classes": len(frontier),
               "evaluated": 0, "passed": 0}
        if level >= spec.min_level:
            payloads = [(n, spec.early_exit, c) for c in _chunks(frontier, spec.chunk_size)]
            for part in _run_chunks(_evaluate_chunk, payloads, spec.threads, spec.seed + level):
                for edges, why in part:
                    row["evaluated"] += 1
                    if why is None:
                        row["passed"] += 1
                        passed.append(edges)
                    else:
                        failures[why] = failures.get(why, 0) + 1
        levels.append(row)

    results = {}
    for edges in passed:
        cg = classify(Graph(n, edges).complement())
        key = tuple(cg.graph.edges())
        results.setdefault(key, cg)
    ordered = sorted(results.values(), key=lambda r: (-r.m, tuple(r.graph.edges())))
    failures = dict(sorted(failures.items()))
    return SearchOutcome(spec, ordered, levels, failures, time.monotonic() - start)


def brute_force_dense_fascinating(n: int, m_min: int) -> tuple[list[Graph], int]:
    """Unpruned oracle over every labelled complement set.

    Returns the canonical forms found and the number of sets checked.
    """
    pairs = list(itertools.combinations(range(n), 2))
    found: dict[tuple, Graph] = {}
    checked = 0
    for k in range(len(pairs) - m_min + 1):
        for removed in itertools.combinations(pairs, k):
            checked += 1
            gone = set(removed)
            g = Graph(n, [p for p in pairs if p not in gone])
            if check_fascinating(g).passes:
                c = canonical_form(g)
                found.setdefault(tuple(c.edges()), c)
    return [found[k] for k in sorted(found)], checked


def write_ndjson(results, fh) -> None:
    for r in results:
        fh.write(json.dumps(r.to_record(), sort_keys=True) + "\n")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("FLAGTRI_THREADS", "1")))
    except ValueError:
        return 1
