"""Exhaustive ground truth at desk scale.

Backtracking searches over de Bruijn graphs: maximum disjoint k-cycle
packings, enumeration of de Bruijn sequences, and a sweep checking that a
partition into k-cycles exists whenever k | q^l and k > l.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, TooLarge
from .words import Colouring, CyclicWord

MAX_VERTICES = 1 << 20


@dataclass
class SearchResult:
    best_count: int
    witness: Colouring
    exhausted: bool
    nodes_expanded: int = 0
    elapsed: float = 0.0


def _cycle_to_word(cycle, q, l):
    """First symbol of each vertex along the cycle."""
    shift = q ** (l - 1)
    return CyclicWord([v // shift for v in cycle])


class _Timeout(Exception):
    pass


def max_k_cycles(q: int, k: int, l: int, budget: Optional[float] = None) -> SearchResult:
    """Maximum number of pairwise disjoint k-cycles in dB(q, l).

    Branches on the smallest undecided vertex: either it anchors a k-cycle
    through undecided vertices only, or it is excluded.  Prunes when the
    undecided count can no longer beat the best packing, and stops early at
    the q^l/k ceiling.  Raises BudgetExceeded (carrying the best-so-far
    result) when the wall clock runs out.
    """
    n = q ** l
    if n > MAX_VERTICES:
        raise TooLarge(f"q^l = {n} exceeds the {MAX_VERTICES} vertex cap")
    start_time = time.monotonic()
    deadline = None if budget is None else start_time + budget
    shift = n // q
    succ = [[(v % shift) * q + a for a in range(q)] for v in range(n)]

    target = n // k
    status = bytearray(n)  # 0 undecided, 1 covered, 2 excluded
    undecided = n
    best = [0, []]  # count, list of cycles (each a tuple of vertices)
    current: list = []
    nodes = [0]

    def record():
        if len(current) > best[0]:
            best[0] = len(current)
            best[1] = list(current)

    def cycles_through(v0, path, on_path):
        """Yield k-cycles v0 -> ... -> v0 over undecided vertices."""
        if len(path) == k:
            if v0 in succ[path[-1]]:
                yield tuple(path)
            return
        for w in succ[path[-1]]:
            if status[w] == 0 and w not in on_path and w != v0:
                path.append(w)
                on_path.add(w)
                yield from cycles_through(v0, path, on_path)
                on_path.discard(w)
                path.pop()

    def search():
        nonlocal undecided
        nodes[0] += 1
        if deadline is not None and nodes[0] % 256 == 0 and time.monotonic() > deadline:
            raise _Timeout
        if best[0] >= target:
            return True  # provably maximum packing reached
        if len(current) + undecided // k <= best[0]:
            return False
        v0 = next((v for v in range(n) if status[v] == 0), None)
        if v0 is None:
            record()
            return best[0] >= target
        for cycle in cycles_through(v0, [v0], {v0}):
            for v in cycle:
                status[v] = 1
            undecided -= k
            current.append(cycle)
            done = search()
            current.pop()
            undecided += k
            for v in cycle:
                status[v] = 0
            if done:
                return True
        record()
        status[v0] = 2
        undecided -= 1
        done = search()
        status[v0] = 0
        undecided += 1
        return done

    try:
        search()
        exhausted = True
    except _Timeout:
        exhausted = False
    elapsed = time.monotonic() - start_time
    witness = Colouring(q, k, l, [_cycle_to_word(c, q, l) for c in best[1]])
    result = SearchResult(best[0], witness, exhausted, nodes[0], elapsed)
    if not exhausted:
        raise BudgetExceeded(result)
    return result


def debruijn_cycles(q: int, l: int):
    """All Hamiltonian cycles of dB(q, l) as cyclic words, each counted once
    (rooted at the all-zero vertex).  Exhaustive; limited to q^l <= 16."""
    n = q ** l
    if n > 16:
        raise TooLarge(f"q^l = {n} exceeds the enumeration cap of 16")
    shift = n // q
    succ = [[(v % shift) * q + a for a in range(q)] for v in range(n)]
    visited = bytearray(n)
    visited[0] = 1
    path = [0]
    out = []

    def extend():
        if len(path) == n:
            if 0 in succ[path[-1]]:
                out.append(_cycle_to_word(path, q, l))
            return
        for w in succ[path[-1]]:
            if not visited[w]:
                visited[w] = 1
                path.append(w)
                extend()
                path.pop()
                visited[w] = 0

    extend()
    return out


def enumerate_debruijn(q: int, l: int) -> int:
    """Count (q, l)-de Bruijn sequences by exhaustive search."""
    return len(debruijn_cycles(q, l))


@dataclass
class ConjectureCase:
    q: int
    k: int
    l: int
    optimal: bool
    exhausted: bool
    best_count: int
    elapsed: float


@dataclass
class ConjectureReport:
    max_size: int
    cases: list = field(default_factory=list)

    @property
    def failures(self):
        return [c for c in self.cases if not (c.optimal and c.exhausted)]

    @property
    def all_optimal(self):
        return not self.failures


def verify_conjecture(max_size: int, budget: Optional[float] = None) -> ConjectureReport:
    """For every (q, k, l) with q^l <= max_size, k | q^l and l < k < q^l,
    search for a partition of dB(q, l) into k-cycles.  Budget exhaustion and
    missing partitions are recorded as data, not raised."""
    report = ConjectureReport(max_size)
    for q in range(2, max_size + 1):
        l = 1
        while q ** l <= max_size:
            n = q ** l
            for k in range(l + 1, n):
                if n % k != 0:
                    continue
                try:
                    res = max_k_cycles(q, k, l, budget)
                except BudgetExceeded as exc:
                    res = exc.result
                report.cases.append(ConjectureCase(
                    q, k, l, res.best_count == n // k, res.exhausted,
                    res.best_count, res.elapsed))
            l += 1
    return report
