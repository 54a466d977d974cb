"""Shift-register constructions of cycles in de Bruijn graphs.

Four generators, all parameterized by a prime power q and window length l:

* ``lfsr_debruijn``      -- one Hamiltonian cycle (a de Bruijn sequence),
* ``lfsr_split``         -- q-1 disjoint k-cycles for any k <= (q^l-1)/(q-1),
* ``lfsr_translate``     -- an optimal partition into q cycles of length
                            q^(l-1), built from translated circuits in
                            dB(q, l-1),
* ``nonprimitive_cycles``-- (q^l-1)/k disjoint k-cycles from an element of
                            multiplicative order k, covering every nonzero
                            vertex.
"""

from __future__ import annotations

from sympy import divisors

from .errors import DegenerateField, DegenerateK, KTooLarge, NotADivisor, OrderTooSmall
from .field import GF, BaseField, ExtensionField
from .words import Colouring, CyclicWord, field_cycle_to_word


def lfsr_debruijn(q: int, l: int, coeffs=None) -> CyclicWord:
    """De Bruijn sequence of length q^l: the full LFSR cycle from 1 with the
    all-zero vertex spliced in after state 1 (replacing the edge (1, alpha)),
    so the output contains the factor 1 0^l."""
    f = GF(q, l, coeffs)
    states = [f.one, f.zero] + f.antilog_table[1:]
    return field_cycle_to_word(states)


def lfsr_split(q: int, l: int, k: int, coeffs=None) -> Colouring:
    """q-1 pairwise disjoint k-cycles in dB(q, l).

    Cycle e (one per nonzero scalar) runs through the LFSR states
    beta_e, alpha*beta_e, ..., alpha^(k-1)*beta_e with
    beta_e = alpha*e / (alpha^k - 1).  Starting points of distinct cycles
    are at least m = (q^l - 1)/(q - 1) apart along the LFSR sequence, so
    k <= m guarantees disjointness.
    """
    f = GF(q, l, coeffs)
    n = f.order - 1
    m = n // (q - 1)
    if not 1 <= k <= m:
        raise KTooLarge(f"need 1 <= k <= m = {m}, got k = {k}")
    if k % n == 0:
        # alpha^k = 1 happens within k <= m only for q = 2, k = q^l - 1;
        # the single cycle is then the plain full-period LFSR run.
        if q != 2:
            raise DegenerateK(f"alpha^{k} = 1 makes beta_e undefined")
        return Colouring(q, k, l, [field_cycle_to_word(f.antilog_table)])
    denom = f.sub(f.pow(f.alpha, k), f.one)
    denom_inv = f.inv(denom)
    words = []
    for e in range(1, q):
        beta = f.mul(f.mul(f.alpha, f.scalar_embed(e)), denom_inv)
        states = [beta]
        for _ in range(k - 1):
            states.append(f.fib_step(states[-1]))
        words.append(field_cycle_to_word(states))
    return Colouring(q, k, l, words)


def lfsr_translate(q: int, l: int, coeffs=None) -> Colouring:
    """Optimal partition of dB(q, l) into q cycles of length q^(l-1).

    For l >= 2 the LFSR cycle C_0 in dB(q, l-1) is translated by the fixed
    point phi_e = alpha*e/(1-alpha) for each scalar e, and the loop at
    phi_{e-1} is inserted into the translate C_e to pad each circuit to
    length q^(l-1).  Refuses (2, 2), where alpha = 1 leaves phi_e undefined.
    """
    base = BaseField(q)
    if l == 1:
        return Colouring(q, 1, 1, [CyclicWord([e]) for e in range(q)])
    f = ExtensionField(base, l - 1, coeffs)
    if f.alpha == f.one:
        raise DegenerateField(
            f"(q, l) = ({q}, {l}): alpha = 1 in GF({f.order}), phi_e undefined")
    one_minus_alpha_inv = f.inv(f.sub(f.one, f.alpha))
    phi = [f.mul(f.mul(f.alpha, f.scalar_embed(e)), one_minus_alpha_inv)
           for e in range(q)]
    cycle0 = f.antilog_table  # C_0: every nonzero element, in LFSR order
    words = []
    for e in range(q):
        states = [f.add(s, phi[e]) for s in cycle0]
        loop_vertex = phi[base.sub(e, 1)]
        i = states.index(loop_vertex)
        states.insert(i, loop_vertex)
        words.append(field_cycle_to_word(states))
    return Colouring(q, q ** (l - 1), l, words)


def _coordinate_functional(f: ExtensionField, beta):
    """Solve for the linear functional t with t(beta^i) = [i == 0] for
    i < l.  Then (t(x), t(beta x), ..., t(beta^(l-1) x)) are the Fibonacci
    coordinates of x with respect to beta, so the symbol stream of a
    beta-orbit is i -> t(beta^i * start)."""
    base, l = f.base, f.degree
    rows = []
    power = f.one
    for i in range(l):
        rows.append(list(power) + [1 if i == 0 else 0])
        power = f.mul(power, beta)
    # Gaussian elimination over GF(q).
    for col in range(l):
        pivot = next((r for r in range(col, l) if rows[r][col] != 0), None)
        if pivot is None:
            return None  # {1, beta, ..., beta^(l-1)} is not a basis
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = base.inv(rows[col][col])
        rows[col] = [base.mul(inv, x) for x in rows[col]]
        for r in range(l):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [base.sub(x, base.mul(factor, y))
                           for x, y in zip(rows[r], rows[col])]
    return tuple(rows[i][l] for i in range(l))


def nonprimitive_cycles(q: int, l: int, k: int, coeffs=None) -> Colouring:
    """(q^l - 1)/k disjoint k-cycles in dB(q, l) covering every nonzero
    vertex, from an element beta of multiplicative order k.

    Requires k | q^l - 1 and k not dividing q^i - 1 for i < l (otherwise
    beta falls in a proper subfield and its powers do not span).
    """
    f = GF(q, l, coeffs)
    n = f.order - 1
    if k < 2 or n % k != 0:
        raise NotADivisor(f"{k} does not divide q^l - 1 = {n}")
    for i in range(1, l):
        if (q ** i - 1) % k == 0:
            raise OrderTooSmall(f"{k} divides q^{i} - 1; beta lies in GF({q ** i})")
    beta = f.element_of_order(k)
    t = _coordinate_functional(f, beta)
    if t is None:
        raise OrderTooSmall(f"powers of beta (order {k}) do not form a basis")
    base = f.base

    def first_coord(x):
        acc = 0
        for tj, xj in zip(t, x):
            if tj and xj:
                acc = base.add(acc, base.mul(tj, xj))
        return acc

    covered = set()
    words = []
    count = n // k
    for j in range(n):
        gamma = f.antilog_table[j]
        if gamma in covered:
            continue
        symbols = []
        x = gamma
        for _ in range(k):
            covered.add(x)
            symbols.append(first_coord(x))
            x = f.mul(x, beta)
        words.append(CyclicWord(symbols))
        if len(words) == count:
            break
    return Colouring(q, k, l, words)


def zsigmondy_ks(q: int, l: int):
    """All k > 1 dividing q^l - 1 that divide no q^i - 1 with i < l,
    ascending; found by direct divisor search."""
    smaller = [q ** i - 1 for i in range(1, l)]
    return [k for k in divisors(q ** l - 1)
            if k > 1 and all(s % k != 0 for s in smaller)]
