"""Cyclic words, l-validity, the colouring data model and counting.

A colouring assigns one cyclic word of length k (the LED colours) to each
robot.  It is l-valid when every window of l consecutive symbols, over all
rotations of all words, is unique -- equivalently the words are pairwise
disjoint k-cycles in the de Bruijn graph dB(q, l).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import sympy
from sympy import divisors, mobius, totient

from .errors import InvalidColouring, NotAWalk, NotFound, Overflow

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_Q = len(ALPHABET)


def _parse_symbols(s):
    try:
        return tuple(ALPHABET.index(ch) for ch in s)
    except ValueError:
        raise ValueError(f"invalid symbol in {s!r}") from None


def _least_rotation(s):
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s2 = s + s
    f = [-1] * len(s2)
    k = 0
    for j in range(1, len(s2)):
        sj = s2[j]
        i = f[j - k - 1]
        while i != -1 and sj != s2[k + i + 1]:
            if sj < s2[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s2[k + i + 1]:
            if sj < s2[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


class CyclicWord:
    """A symbol sequence considered up to rotation.

    Equality and hashing use the canonical (lexicographically least)
    rotation, so two CyclicWords are equal iff they are rotations of each
    other.  The stored rotation is preserved for display and windowing.
    """

    __slots__ = ("symbols", "_canon")

    def __init__(self, symbols):
        if isinstance(symbols, str):
            symbols = _parse_symbols(symbols)
        else:
            symbols = tuple(int(s) for s in symbols)
        if not symbols:
            raise ValueError("empty word")
        if any(s < 0 for s in symbols):
            raise ValueError("negative symbol")
        self.symbols = symbols
        self._canon = None

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def rotate(self, i: int) -> "CyclicWord":
        k = len(self.symbols)
        i %= k
        return CyclicWord(self.symbols[i:] + self.symbols[:i])

    def window(self, i: int, l: int):
        """First l symbols of rotation i, with wraparound."""
        k = len(self.symbols)
        i %= k
        doubled = self.symbols + self.symbols
        return doubled[i:i + l]

    def windows(self, l: int):
        """All k windows of length l, in rotation order."""
        return [self.window(i, l) for i in range(len(self.symbols))]

    def canonical(self) -> "CyclicWord":
        if self._canon is None:
            i = _least_rotation(self.symbols)
            self._canon = self.symbols[i:] + self.symbols[:i]
        return CyclicWord(self._canon)

    def _canonical_symbols(self):
        if self._canon is None:
            i = _least_rotation(self.symbols)
            self._canon = self.symbols[i:] + self.symbols[:i]
        return self._canon

    def size(self) -> int:
        """Number of distinct rotations (the necklace size)."""
        k = len(self.symbols)
        doubled = self.symbols + self.symbols
        for p in range(1, k + 1):
            if k % p == 0 and doubled[p:p + k] == self.symbols:
                return p
        return k

    def is_aperiodic(self) -> bool:
        return self.size() == len(self.symbols)

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self._canonical_symbols() == other._canonical_symbols()

    def __hash__(self):
        return hash(self._canonical_symbols())

    def __str__(self):
        return "".join(ALPHABET[s] for s in self.symbols)

    def __repr__(self):
        return f"CyclicWord({str(self)!r})"


def necklace_size(w: CyclicWord) -> int:
    return w.size()


def is_aperiodic(w: CyclicWord) -> bool:
    return w.is_aperiodic()


def rotate(w: CyclicWord, i: int) -> CyclicWord:
    return w.rotate(i)


def window(w: CyclicWord, i: int, l: int):
    return w.window(i, l)


def windows(w: CyclicWord, l: int):
    return w.windows(l)


@dataclass
class Colouring:
    """Parameters (q, k, l) plus one cyclic word per robot."""

    q: int
    k: int
    l: int
    words: list = field(default_factory=list)

    def __post_init__(self):
        if not (2 <= self.q <= MAX_Q):
            raise ValueError(f"q must be in 2..{MAX_Q}, got {self.q}")
        if not 1 <= self.l <= self.k:
            raise ValueError(f"need 1 <= l <= k, got l={self.l}, k={self.k}")
        self.words = [w if isinstance(w, CyclicWord) else CyclicWord(w)
                      for w in self.words]
        for w in self.words:
            if len(w) != self.k:
                raise ValueError(f"word {w} has length {len(w)}, expected {self.k}")
            if any(s >= self.q for s in w):
                raise ValueError(f"word {w} uses symbols >= q={self.q}")

    @property
    def n(self):
        return len(self.words)

    def canonicalized(self) -> "Colouring":
        return Colouring(self.q, self.k, self.l,
                         [w.canonical() for w in self.words])


@dataclass
class ValidityReport:
    valid: bool
    window_count: int
    first_conflict: Optional[tuple] = None  # (window, (i1, r1), (i2, r2))


def is_valid(c: Colouring) -> ValidityReport:
    """Check that all n*k windows of length l are pairwise distinct.

    The first conflict, if any, is reported in scan order (word index,
    then rotation)."""
    seen = {}
    conflict = None
    for i, w in enumerate(c.words):
        for r, win in enumerate(w.windows(c.l)):
            if win in seen:
                if conflict is None:
                    conflict = (win, seen[win], (i, r))
            else:
                seen[win] = (i, r)
    return ValidityReport(conflict is None, len(seen), conflict)


def is_valid_identification(c: Colouring) -> ValidityReport:
    """Relaxed check for orientation-free identification: a window may
    repeat within one word, but never across two different words."""
    owner = {}
    conflict = None
    for i, w in enumerate(c.words):
        for r, win in enumerate(w.windows(c.l)):
            if win in owner:
                j, s = owner[win]
                if j != i and conflict is None:
                    conflict = (win, (j, s), (i, r))
            else:
                owner[win] = (i, r)
    return ValidityReport(conflict is None, len(owner), conflict)


def is_optimal_partition(c: Colouring) -> bool:
    """True iff the colouring is valid and its cycles cover all of dB(q, l)."""
    return is_valid(c).valid and c.n * c.k == c.q ** c.l


def upper_bound(q: int, k: int, l: int) -> int:
    """Each robot uses k of the q^l possible windows."""
    return q ** l // k


def lll_lower_bound(q: int, k: int, l: int) -> int:
    """Lovasz-local-lemma guarantee: floor(q^l / ((2l-1) e k)).

    Evaluated symbolically so the floor is exact even near integers."""
    expr = sympy.Rational(q ** l, (2 * l - 1) * k) / sympy.E
    return int(sympy.floor(expr))


@lru_cache(maxsize=None)
def moreau(q: int, t: int) -> int:
    """Number of q-ary aperiodic necklaces of length t."""
    total = sum(int(mobius(t // d)) * q ** d for d in divisors(t))
    assert total % t == 0
    return total // t


@lru_cache(maxsize=None)
def necklace_count(q: int, l: int) -> int:
    """Number of q-ary necklaces of length l (any period)."""
    total = sum(int(totient(l // d)) * q ** d for d in divisors(l))
    assert total % l == 0
    return total // l


def debruijn_count(q: int, l: int) -> int:
    """Number of (q, l)-de Bruijn sequences: (q!)^(q^(l-1)) / q^l."""
    fact = math.factorial(q)
    if q ** (l - 1) * math.log2(fact) > 63:
        raise Overflow(f"de Bruijn count for q={q}, l={l} exceeds 64-bit range")
    num = fact ** (q ** (l - 1))
    assert num % q ** l == 0
    return num // q ** l


def field_cycle_to_word(states) -> CyclicWord:
    """Collapse a cyclically de Bruijn-adjacent state sequence to the word
    of first coordinates; window i of the result is state i."""
    states = list(states)
    if not states:
        raise NotAWalk("empty state sequence")
    n = len(states)
    for i, u in enumerate(states):
        v = states[(i + 1) % n]
        if v[:-1] != u[1:]:
            raise NotAWalk(f"states {i} and {(i + 1) % n} are not adjacent")
    return CyclicWord([s[0] for s in states])


@dataclass
class DecoderTable:
    """Exact map from l-window to (robot index, rotation offset)."""

    l: int
    entries: dict


def build_decoder(c: Colouring) -> DecoderTable:
    report = is_valid(c)
    if not report.valid:
        raise InvalidColouring(f"colouring is not {c.l}-valid: {report.first_conflict}")
    entries = {}
    for i, w in enumerate(c.words):
        for r, win in enumerate(w.windows(c.l)):
            entries[win] = (i, r)
    return DecoderTable(c.l, entries)


def decode(table: DecoderTable, obs):
    """Look up an observed l-window; returns (robot index, rotation)."""
    if isinstance(obs, str):
        try:
            obs = _parse_symbols(obs)
        except ValueError:
            raise NotFound(f"malformed window {obs!r}") from None
    else:
        obs = tuple(obs)
    if len(obs) != table.l:
        raise NotFound(f"window {obs} has length {len(obs)}, expected {table.l}")
    try:
        return table.entries[obs]
    except KeyError:
        raise NotFound(f"window {obs} not in any colouring") from None
