"""Necklace combinatorics: generation and colouring combinators.

Generation: Lyndon words (Duval order), the lexicographically smallest de
Bruijn sequence by concatenation, and the list of canonical necklaces.

Combinators on l-valid colourings: the alphabet product, round-robin
interleaving (two variants), concatenation of l-cycles along a spanning
forest of the necklace adjacency graph, and orientation-free closed-walk
colourings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as iproduct

from sympy import isprime

from .errors import CarvingFailed, InvalidInput, NotADivisor, NotPrime, WindowMismatch
from .words import Colouring, CyclicWord, is_valid


def lyndon_words_upto(q: int, n: int):
    """All q-ary Lyndon words of length <= n in lexicographic order."""
    w = [0]
    while w:
        yield tuple(w)
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == q - 1:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_words(q: int, n: int):
    """All q-ary Lyndon words of length exactly n, lexicographic order."""
    return [w for w in lyndon_words_upto(q, n) if len(w) == n]


def fkm_debruijn(q: int, l: int) -> CyclicWord:
    """Lexicographically smallest (q, l)-de Bruijn sequence: concatenate all
    Lyndon words whose length divides l, in lexicographic order."""
    out = []
    for w in lyndon_words_upto(q, l):
        if l % len(w) == 0:
            out.extend(w)
    return CyclicWord(out)


def necklaces(q: int, l: int, aperiodic_only: bool = False):
    """Canonical representatives of all q-ary length-l necklaces, in
    lexicographic order.  With aperiodic_only, only size-l necklaces."""
    out = []
    for w in lyndon_words_upto(q, l):
        d = len(w)
        if l % d:
            continue
        if aperiodic_only and d != l:
            continue
        out.append(CyclicWord(w * (l // d)))
    out.sort(key=lambda w: w.symbols)
    return out


# ---------------------------------------------------------------------------
# Product colouring
# ---------------------------------------------------------------------------


def product(a: Colouring, b: Colouring) -> Colouring:
    """Merge two l-valid colourings into one over the paired alphabet.

    The symbol pair (x, y) is encoded as x * b.q + y.  Words are repeated
    to length lcm(k1, k2) and merged at the gcd(k1, k2) relative rotations
    (0, j); the output has gcd(k1, k2) * n1 * n2 words and stays l-valid.
    """
    if a.l != b.l:
        raise WindowMismatch(f"window lengths differ: {a.l} != {b.l}")
    for name, c in (("first", a), ("second", b)):
        if not is_valid(c).valid:
            raise InvalidInput(f"{name} colouring is not {c.l}-valid")
    k = math.lcm(a.k, b.k)
    g = math.gcd(a.k, b.k)
    words = []
    for wa in a.words:
        xa = wa.symbols * (k // a.k)
        for wb in b.words:
            for j in range(g):
                yb = wb.rotate(j).symbols * (k // b.k)
                words.append(CyclicWord([x * b.q + y for x, y in zip(xa, yb)]))
    return Colouring(a.q * b.q, k, a.l, words)


# ---------------------------------------------------------------------------
# Interleaving
# ---------------------------------------------------------------------------


def _interleave_words(rows):
    """Round-robin merge: row symbols a_11 a_21 ... a_t1 a_12 ..."""
    k = len(rows[0])
    return CyclicWord([row[i] for i in range(k) for row in rows])


def interleave(c: Colouring, t: int) -> Colouring:
    """Interleave t-tuples of rotated words from an l-valid colouring.

    Keeps tuples with the first word unrotated and rotation offsets summing
    to 0 mod t, giving n^t * k^(t-1) / t words of length t*k that are
    (t*l)-valid.  Requires t | k.
    """
    if t < 1 or c.k % t != 0:
        raise NotADivisor(f"t = {t} does not divide k = {c.k}")
    if not is_valid(c).valid:
        raise InvalidInput(f"input colouring is not {c.l}-valid")
    k = c.k
    words = []
    for sources in iproduct(range(c.n), repeat=t):
        reps = [c.words[s] for s in sources]
        for free in iproduct(range(k), repeat=t - 2) if t >= 2 else [()]:
            # offsets: word 1 fixed at 0, words 2..t-1 free, the last one
            # sweeps its residue class mod t in ascending order
            if t == 1:
                words.append(_interleave_words([reps[0].symbols]))
                continue
            residue = (-sum(free)) % t
            for last in range(residue, k, t):
                offsets = (0,) + free + (last,)
                rows = [reps[i].rotate(off).symbols for i, off in enumerate(offsets)]
                words.append(_interleave_words(rows))
    return Colouring(c.q, t * k, t * c.l, words)


def interleave_pair_odd(c: Colouring) -> Colouring:
    """Pairwise interleaving for odd word lengths: offsets (0, j) with
    j < (k-1)/2 strictly, giving floor(k/2) * n^2 words of length 2k."""
    if not is_valid(c).valid:
        raise InvalidInput(f"input colouring is not {c.l}-valid")
    k = c.k
    words = []
    for i1 in range(c.n):
        for i2 in range(c.n):
            for j in range(k // 2):
                rows = [c.words[i1].symbols, c.words[i2].rotate(j).symbols]
                words.append(_interleave_words(rows))
    return Colouring(c.q, 2 * k, 2 * c.l, words)


# ---------------------------------------------------------------------------
# Necklace adjacency graph and concatenation
# ---------------------------------------------------------------------------


@dataclass
class NecklaceGraph:
    """Necklaces of length l, joined when they share an (l-1)-factor."""

    q: int
    l: int
    aperiodic_only: bool
    vertices: list
    adjacency: dict = field(repr=False)

    @property
    def edges(self):
        out = set()
        for u, nbrs in self.adjacency.items():
            for v in nbrs:
                out.add(frozenset((u, v)))
        return out


def necklace_graph(q: int, l: int, aperiodic_only: bool = False) -> NecklaceGraph:
    verts = necklaces(q, l, aperiodic_only)
    by_factor = {}
    for w in verts:
        key = w._canonical_symbols()
        for f in set(w.windows(l - 1)) if l > 1 else {()}:
            by_factor.setdefault(f, []).append(key)
    adjacency = {w._canonical_symbols(): set() for w in verts}
    for group in by_factor.values():
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                if u != v:
                    adjacency[u].add(v)
                    adjacency[v].add(u)
    return NecklaceGraph(q, l, aperiodic_only, verts, adjacency)


def _splice(u: CyclicWord, v: CyclicWord, l: int) -> CyclicWord:
    """Concatenate two cycles at a shared (l-1)-window: rotate both to start
    at the common vertex of the underlying circuits and join."""
    shared = set(u.windows(l - 1)) & set(v.windows(l - 1))
    if not shared:
        raise CarvingFailed(f"{u} and {v} share no ({l - 1})-factor")
    f = min(shared)
    i = u.windows(l - 1).index(f)
    j = v.windows(l - 1).index(f)
    return CyclicWord(u.rotate(i).symbols + v.rotate(j).symbols)


def _carve_forest(adjacency, t):
    """Partition each BFS spanning tree into connected components of exactly
    t vertices (children must fold into their parent, so the post-order
    residual is forced).  Returns a list of components, each a list of
    (vertex, parent) pairs in visit order."""
    remaining = sorted(adjacency)
    seen = set()
    components = []
    for root in remaining:
        if root in seen:
            continue
        # BFS spanning tree
        parent = {root: None}
        order = [root]
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in sorted(adjacency[u]):
                if v not in parent:
                    parent[v] = u
                    order.append(v)
                    queue.append(v)
        seen.update(order)
        # leaf-first carving: residual subtree sizes accumulate upward
        children = {u: [] for u in order}
        for u in order[1:]:
            children[parent[u]].append(u)
        carved_here = []
        residual = {}  # vertex -> members of its uncut piece, vertex first
        for u in reversed(order):  # post-order via reversed BFS order
            members = [u]
            for ch in children[u]:
                members.extend(residual.pop(ch))
            if len(members) == t:
                carved_here.append(members)
                residual[u] = []
            elif len(members) > t:
                raise CarvingFailed(
                    f"residual piece of size {len(members)} > t = {t} at {u}")
            else:
                residual[u] = members
        if residual.get(root):
            raise CarvingFailed(
                f"component of size {len(order)} leaves "
                f"{len(residual[root])} vertices uncarved")
        components.extend(carved_here)
    return components


def concat_partition(q: int, l: int, t: int) -> Colouring:
    """Best-effort partition of the size-l necklaces of dB(q, l) into
    (t*l)-cycles by splicing t adjacent necklaces at shared (l-1)-factors.

    Heuristic (spanning-tree carving); raises CarvingFailed rather than
    emitting a wrong colouring when no forest with components of exactly t
    vertices is found.
    """
    if not isprime(l):
        raise NotPrime(f"l = {l} must be prime")
    total = (q ** l - q) // l
    if t < 1 or total % t != 0:
        raise NotADivisor(f"t = {t} does not divide (q^l - q)/l = {total}")
    verts = necklaces(q, l, aperiodic_only=True)
    if t == 1:
        return Colouring(q, l, l, verts)
    graph = necklace_graph(q, l, aperiodic_only=True)
    by_key = {w._canonical_symbols(): w for w in verts}
    words = []
    for members in _carve_forest(graph.adjacency, t):
        # each member's tree parent precedes it, so sequential splicing
        # always finds a shared factor in the growing word
        merged = by_key[members[0]]
        for v in members[1:]:
            merged = _splice(merged, by_key[v], l)
        words.append(merged)
    return Colouring(q, t * l, l, words)


# ---------------------------------------------------------------------------
# Closed walks (identification without orientation)
# ---------------------------------------------------------------------------


def closed_walks(q: int, k: int, l: int) -> Colouring:
    """One closed k-walk per length-l necklace: the necklace's cycle
    traversed k/size times.  Window sets are disjoint across words, so the
    colouring identifies robots (but not orientations).  Requires l | k."""
    if k % l != 0:
        raise NotADivisor(f"l = {l} does not divide k = {k}")
    words = []
    for w in necklaces(q, l):
        p = w.size()
        words.append(CyclicWord(w.symbols[:p] * (k // p)))
    return Colouring(q, k, l, words)
