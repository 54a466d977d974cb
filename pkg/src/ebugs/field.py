"""Finite fields GF(q^l) in the Fibonacci (shift-register) basis.

The base alphabet GF(q) works for any prime power q = p^s: symbols are the
integers 0..q-1, where symbol i encodes the base-p digit vector of i
(digit j is the coefficient of x^j), and arithmetic is table-driven.

Extension field elements are length-l coordinate tuples over GF(q) in the
basis where multiplication by the primitive element alpha is a left shift
with a linear feedback term appended.  Each multiplication by alpha is
therefore an edge step in the de Bruijn graph dB(q, l).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sympy import factorint

from .errors import LogOfZero, NotADivisor, NotPrimePower, NotPrimitive


@dataclass(frozen=True)
class PrimePower:
    q: int
    p: int
    s: int


def is_prime_power(n: int):
    """Return PrimePower(n, p, s) with n = p**s and p prime, else None."""
    if n < 2:
        return None
    factors = factorint(n)
    if len(factors) != 1:
        return None
    ((p, s),) = factors.items()
    return PrimePower(n, p, s)


# ---------------------------------------------------------------------------
# Polynomial helpers over an arbitrary BaseField.
#
# A degree-l modulus is stored feedback-style: the coefficient vector
# (c_0, ..., c_{l-1}) means  x^l = c_0 + c_1 x + ... + c_{l-1} x^{l-1}.
# Elements of the quotient ring are coefficient tuples of length l.
# ---------------------------------------------------------------------------


def _poly_one(l):
    return (1,) + (0,) * (l - 1)


def _poly_x(feedback):
    l = len(feedback)
    if l == 1:
        return (feedback[0],)
    return (0, 1) + (0,) * (l - 2)


def _poly_mulmod(a, b, feedback, field):
    l = len(feedback)
    c = [0] * (2 * l - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                c[i + j] = field.add(c[i + j], field.mul(ai, bj))
    for i in range(2 * l - 2, l - 1, -1):
        ci = c[i]
        if ci == 0:
            continue
        c[i] = 0
        for j, fj in enumerate(feedback):
            if fj:
                c[i - l + j] = field.add(c[i - l + j], field.mul(ci, fj))
    return tuple(c[:l])


def _poly_powmod(a, e, feedback, field):
    result = _poly_one(len(feedback))
    base = a
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, feedback, field)
        base = _poly_mulmod(base, base, feedback, field)
        e >>= 1
    return result


def _x_has_full_order(feedback, field):
    """Test whether x has multiplicative order q^l - 1 modulo the feedback
    polynomial.  Since the unit group of the quotient ring has fewer than
    q^l - 1 elements whenever the modulus is reducible, success certifies
    both irreducibility and primitivity."""
    l = len(feedback)
    n = field.q ** l - 1
    one = _poly_one(l)
    x = _poly_x(feedback)
    if _poly_powmod(x, n, feedback, field) != one:
        return False
    for r in factorint(n):
        if _poly_powmod(x, n // r, feedback, field) == one:
            return False
    return True


def find_primitive_coeffs(base, l):
    """Lexicographically smallest (p_0, ..., p_{l-1}) over GF(q) such that x
    is primitive in GF(q)[x] / (x^l - sum p_i x^i)."""
    for cand in itertools.product(range(base.q), repeat=l):
        if cand[0] == 0:
            continue  # x would be a zero divisor
        if _x_has_full_order(cand, base):
            return cand
    raise NotPrimitive(f"no primitive polynomial found for q={base.q}, l={l}")


class BaseField:
    """GF(q) arithmetic on the symbols 0..q-1.

    For prime q this is arithmetic mod q.  For q = p^s the modulus is the
    lexicographically smallest primitive polynomial of degree s over Z_p,
    so construction is deterministic.
    """

    def __init__(self, q: int):
        pp = is_prime_power(q)
        if pp is None:
            raise NotPrimePower(f"{q} is not a prime power")
        self.q, self.p, self.s = pp.q, pp.p, pp.s
        if self.s == 1:
            self.base_modulus = None
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            prime = BaseField(self.p)
            self.base_modulus = find_primitive_coeffs(prime, self.s)
            digits = [self._digits(i) for i in range(q)]
            self.add_table = [
                [self._undigits(tuple((x + y) % self.p for x, y in zip(digits[a], digits[b])))
                 for b in range(q)]
                for a in range(q)
            ]
            self.mul_table = [
                [self._undigits(_poly_mulmod(digits[a], digits[b], self.base_modulus, prime))
                 for b in range(q)]
                for a in range(q)
            ]
        self.neg_table = [0] * q
        self.inv_table = [None] * q
        for a in range(q):
            for b in range(q):
                if self.add_table[a][b] == 0:
                    self.neg_table[a] = b
                if self.mul_table[a][b] == 1:
                    self.inv_table[a] = b

    def _digits(self, i):
        p = self.p
        return tuple((i // p ** j) % p for j in range(self.s))

    def _undigits(self, digits):
        return sum(d * self.p ** j for j, d in enumerate(digits))

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]

    def __repr__(self):
        return f"BaseField(q={self.q})"


def make_base_field(q: int) -> BaseField:
    return BaseField(q)


class ExtensionField:
    """GF(q^l) with full log/antilog tables in the Fibonacci basis.

    The zero element is (0,)*l, the identity is (1, 0, ..., 0), and
    ``fib_step`` multiplies by the primitive element alpha.  Values are
    immutable after construction.
    """

    def __init__(self, base: BaseField, degree: int, coeffs=None):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        if coeffs is None:
            coeffs = find_primitive_coeffs(base, degree)
        else:
            coeffs = tuple(coeffs)
            if len(coeffs) != degree or any(not 0 <= c < base.q for c in coeffs):
                raise NotPrimitive(f"bad coefficient vector {coeffs}")
            if not _x_has_full_order(coeffs, base):
                raise NotPrimitive(f"{coeffs} is not primitive over GF({base.q})")
        self.base = base
        self.degree = degree
        self.feedback = coeffs
        self.order = base.q ** degree
        self.zero = (0,) * degree
        self.one = (1,) + (0,) * (degree - 1)

        antilog = []
        log = {}
        v = self.one
        for i in range(self.order - 1):
            antilog.append(v)
            log[v] = i
            v = self.fib_step(v)
        if v != self.one or len(log) != self.order - 1:
            raise NotPrimitive(
                f"LFSR period check failed for coeffs {coeffs} over GF({base.q})")
        self.antilog_table = antilog
        self.log_table = log
        self.alpha = antilog[1 % (self.order - 1)]

    # -- de Bruijn step -----------------------------------------------------

    def fib_step(self, v):
        """Multiply by alpha: left shift and append the feedback term."""
        base = self.base
        t = 0
        for pi, vi in zip(self.feedback, v):
            if pi and vi:
                t = base.add(t, base.mul(pi, vi))
        return v[1:] + (t,)

    # -- linear structure ---------------------------------------------------

    def add(self, u, v):
        base = self.base
        return tuple(base.add(a, b) for a, b in zip(u, v))

    def neg(self, u):
        base = self.base
        return tuple(base.neg(a) for a in u)

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def scalar_add(self, v, e):
        """Add the scalar e: only the leftmost coordinate changes."""
        return (self.base.add(v[0], e),) + v[1:]

    def scalar_embed(self, e):
        return (e,) + (0,) * (self.degree - 1)

    def scalar_mul(self, e, v):
        base = self.base
        return tuple(base.mul(e, a) for a in v)

    # -- multiplicative structure (log/antilog tables) ----------------------

    def mul(self, u, v):
        if u == self.zero or v == self.zero:
            return self.zero
        n = self.order - 1
        return self.antilog_table[(self.log_table[u] + self.log_table[v]) % n]

    def inv(self, u):
        if u == self.zero:
            raise ZeroDivisionError("inverse of 0")
        n = self.order - 1
        return self.antilog_table[(-self.log_table[u]) % n]

    def pow(self, u, e):
        if u == self.zero:
            if e == 0:
                return self.one
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return self.zero
        n = self.order - 1
        return self.antilog_table[(self.log_table[u] * e) % n]

    def discrete_log(self, u):
        if u == self.zero:
            raise LogOfZero("discrete log of 0")
        return self.log_table[u]

    def element_of_order(self, k):
        n = self.order - 1
        if k < 1 or n % k != 0:
            raise NotADivisor(f"{k} does not divide {n}")
        return self.antilog_table[(n // k) % n]

    # -- matrices (test support) --------------------------------------------

    def companion_matrix(self):
        """State change matrix M of the feedback polynomial (Galois form)."""
        l = self.degree
        m = [[0] * l for _ in range(l)]
        for i in range(l):
            if i > 0:
                m[i][i - 1] = 1
            m[i][l - 1] = self.feedback[i]
        return m

    def change_of_basis_matrix(self):
        """Matrix C with C_ij = (M^i)_0j; satisfies C M = M^T C."""
        l = self.degree
        m = self.companion_matrix()
        base = self.base
        row = [1] + [0] * (l - 1)  # e_0^T M^0
        c = []
        for _ in range(l):
            c.append(list(row))
            nxt = [0] * l
            for j in range(l):
                acc = 0
                for k in range(l):
                    if row[k] and m[k][j]:
                        acc = base.add(acc, base.mul(row[k], m[k][j]))
                nxt[j] = acc
            row = nxt
        return c

    def elements(self):
        """All q^l coordinate tuples (zero included)."""
        return itertools.product(range(self.base.q), repeat=self.degree)

    def __repr__(self):
        return f"ExtensionField(q={self.base.q}, l={self.degree}, feedback={self.feedback})"


def make_extension_field(base: BaseField, degree: int, coeffs=None) -> ExtensionField:
    return ExtensionField(base, degree, coeffs)


def GF(q: int, degree: int = 1, coeffs=None) -> ExtensionField:
    """Convenience constructor for GF(q^degree) over GF(q)."""
    return ExtensionField(BaseField(q), degree, coeffs)
