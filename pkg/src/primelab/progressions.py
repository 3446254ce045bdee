"""Dirichlet characters and primes in arithmetic progressions.

The character group mod q is built constructively: discrete-log tables on
each prime-power component (primitive roots for odd prime powers, the
{-1, 3} two-generator structure for higher powers of two), combined
multiplicatively.  Character values are roots of unity written as integer
exponents, so the orthogonality relations can be verified by exact
counting, with no floating-point tolerance at all.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import engine
from .errors import ArgumentError, RangeError, ResourceError


def euler_phi(q):
    out = 1
    for p, e in engine.factorize(int(q)).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def _primitive_root(p, e):
    """Primitive root mod p^e for an odd prime p."""
    phi_p = p - 1
    prime_divs = [f for f, _ in engine.factorize(phi_p).factors]
    g = 2
    while True:
        if all(pow(g, phi_p // d, p) != 1 for d in prime_divs):
            break
        g += 1
    if e == 1:
        return g
    # g lifts to p^e unless g^(p-1) = 1 mod p^2, in which case g + p works
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _component_logs(p, e):
    """Discrete-log structure of the unit group mod p^e.

    Returns (modulus, orders, dlog) where dlog[n] lists the exponents of n
    against each cyclic generator.  Odd prime powers and 2, 4 are cyclic;
    2^e with e >= 3 splits as {+-1} x <3>.
    """
    m = p**e
    if p == 2 and e == 1:
        return m, (), {1: ()}
    if p == 2 and e == 2:
        return m, (2,), {1: (0,), 3: (1,)}
    if p == 2:
        half = 2 ** (e - 2)
        dlog = {}
        val = 1
        for k in range(half):
            dlog[val] = (0, k)
            dlog[m - val] = (1, k)
            val = val * 3 % m
        return m, (2, half), dlog
    phi = (p - 1) * p ** (e - 1)
    g = _primitive_root(p, e)
    dlog = {}
    val = 1
    for k in range(phi):
        dlog[val] = (k,)
        val = val * g % m
    return m, (phi,), dlog


class Character:
    """One Dirichlet character mod q.

    Values are roots of unity exp(2*pi*i*k/group_exponent); the integer
    exponent array over all residues is built lazily and cached, with -1
    marking residues not coprime to q.
    """

    def __init__(self, q, index, coeffs, orders, unit_logs, group_exponent):
        self.q = q
        self.index = index
        self.coeffs = coeffs
        self._orders = orders
        self._unit_logs = unit_logs
        self.group_exponent = group_exponent
        self.order = 1
        for a, d in zip(coeffs, orders):
            self.order = math.lcm(self.order, d // math.gcd(d, a))
        self._table = None

    @property
    def is_principal(self):
        return self.order == 1

    @property
    def is_real(self):
        return self.order <= 2

    @property
    def is_complex(self):
        return self.order > 2

    def exponent_table(self):
        """int64 array k with chi(n) = zeta^k[n % q]; -1 off the units."""
        if self._table is None:
            q, ex = self.q, self.group_exponent
            ks = np.full(q, -1, dtype=np.int64)
            if self._orders:
                units = self._unit_logs[:, 0] >= 0
                acc = np.zeros(q, dtype=np.int64)
                for j, (a, d) in enumerate(zip(self.coeffs, self._orders)):
                    acc[units] += (ex // d) * a * self._unit_logs[units, j]
                ks[units] = acc[units] % ex
            else:
                for n in range(q):
                    if math.gcd(n, q) == 1:
                        ks[n] = 0
            ks.setflags(write=False)
            self._table = ks
        return self._table

    def values(self):
        """Complex value array v with v[n % q] = chi(n)."""
        k = self.exponent_table()
        out = np.exp(2j * np.pi * k / self.group_exponent)
        out[k < 0] = 0.0
        return out

    def __call__(self, n):
        k = int(self.exponent_table()[int(n) % self.q])
        if k < 0:
            return 0.0 + 0.0j
        return complex(np.exp(2j * np.pi * k / self.group_exponent))

    def __repr__(self):
        kind = "principal" if self.is_principal else ("real" if self.is_real else "complex")
        return f"Character(q={self.q}, index={self.index}, order={self.order}, {kind})"


@dataclass(frozen=True)
class CharacterTable:
    """The full group of phi(q) Dirichlet characters mod q."""

    q: int
    characters: tuple

    @property
    def phi(self):
        return len(self.characters)

    def principal(self):
        return self.characters[0]

    def real_nonprincipal(self):
        return [c for c in self.characters if c.is_real and not c.is_principal]

    def orthogonality_exact(self):
        """Verify both orthogonality relations by exact integer counting.

        A character of order d takes each d-th root of unity on exactly
        phi(q)/d units (fibers of a surjective homomorphism), which makes
        the zero sums algebraic identities; this checks the fiber counts
        for every character and, dually, for every fixed residue, without
        any floating point.
        """
        phi = self.phi
        ex = self.characters[0].group_exponent
        for chi in self.characters:
            tab = chi.exponent_table()
            ks = tab[tab >= 0]
            if len(ks) != phi:
                return False
            step = ex // chi.order
            counts = np.bincount(ks, minlength=ex)
            expected = np.zeros(ex, dtype=np.int64)
            expected[::step] = phi // chi.order
            if not np.array_equal(counts, expected):
                return False
        stacked = np.stack([c.exponent_table() for c in self.characters])
        for n in range(self.q):
            ks = stacked[:, n]
            if ks[0] < 0:
                continue
            if np.any(ks > 0):
                d = int(np.gcd.reduce(np.concatenate([ks[ks > 0], [ex]])))
            else:
                d = ex
            order_n = ex // d
            if n % self.q == 1 % self.q:
                if order_n != 1:
                    return False
                continue
            counts = np.bincount(ks, minlength=ex)
            expected = np.zeros(ex, dtype=np.int64)
            expected[::d] = phi // order_n
            if not np.array_equal(counts, expected):
                return False
        return True


@lru_cache(maxsize=64)
def character_table(q):
    """Construct all phi(q) characters mod q (exponent tables built lazily)."""
    q = int(q)
    if not 1 <= q <= 10**5:
        raise RangeError(f"character_table needs 1 <= q <= 1e5, got {q}")
    if q == 1:
        chi = Character(q=1, index=0, coeffs=(), orders=(), unit_logs=None,
                        group_exponent=1)
        return CharacterTable(q=1, characters=(chi,))

    comps = [_component_logs(p, e) for p, e in engine.factorize(q).factors]
    orders = tuple(d for _, os, _ in comps for d in os)
    exponent = math.lcm(*orders) if orders else 1

    unit_logs = np.full((q, max(len(orders), 1)), -1, dtype=np.int64)
    for n in range(q):
        if math.gcd(n, q) != 1:
            continue
        logs = []
        for m, _, dlog in comps:
            logs.extend(dlog[n % m])
        unit_logs[n, : len(logs)] = logs
    unit_logs.setflags(write=False)

    chis = [
        Character(q=q, index=0, coeffs=vec, orders=orders, unit_logs=unit_logs,
                  group_exponent=exponent)
        for vec in (product(*(range(d) for d in orders)) if orders else [()])
    ]
    # principal first, then ascending order for a stable layout
    chis.sort(key=lambda c: (c.order, c.coeffs))
    for i, c in enumerate(chis):
        c.index = i
    return CharacterTable(q=q, characters=tuple(chis))


def pi_ap(x, q, a):
    """Count of primes p <= x with p = a mod q; requires gcd(a, q) = 1."""
    x, q, a = int(x), int(q), int(a)
    if math.gcd(a, q) != 1:
        raise ArgumentError(f"pi_ap needs gcd(a, q) = 1, got a={a}, q={q}")
    return int(pi_ap_all(x, q)[a % q])


@lru_cache(maxsize=16)
def _residue_counts(x, q):
    counts = np.zeros(q, dtype=np.int64)
    for seg in engine.iter_prime_segments(x):
        seg = seg[seg <= x]
        counts += np.bincount(seg % q, minlength=q)
    counts.setflags(write=False)
    return counts


def pi_ap_all(x, q):
    """Counts of primes <= x in every residue class mod q (one pass, cached)."""
    return _residue_counts(int(x), int(q))


def equidist_stats(q, target_avg, segment_bytes=None):
    """Class-count spread when the reduced classes first average target_avg.

    Streams primes in order, ignoring those dividing q, until the total
    over reduced classes reaches target_avg * phi(q) exactly; reports the
    prime where that happens and the least/most populated class counts.
    """
    q = int(q)
    target_avg = int(target_avg)
    if not 2 <= q <= 10**4:
        raise RangeError(f"equidist_stats needs 2 <= q <= 1e4, got {q}")
    goal = target_avg * euler_phi(q)
    sieve_cap = max(4 * engine.nth_prime_upper_bound(goal + q), 10**6)

    counts = np.zeros(q, dtype=np.int64)
    total = 0
    for seg in engine.iter_prime_segments(sieve_cap, segment_bytes):
        res = seg % q
        coprime = np.gcd(res, q) == 1
        seg, res = seg[coprime], res[coprime]
        if total + len(seg) < goal:
            counts += np.bincount(res, minlength=q)
            total += len(seg)
            continue
        need = goal - total
        counts += np.bincount(res[:need], minlength=q)
        reduced = counts[np.gcd(np.arange(q), q) == 1]
        return {
            "x_reached": int(seg[need - 1]),
            "min_count": int(reduced.min()),
            "max_count": int(reduced.max()),
        }
    raise ResourceError(f"sieve cap {sieve_cap} reached before average {target_avg}")


def l_one(chi, n_max):
    """Partial sum of chi(n)/n at s = 1 with its partial-summation tail bound.

    The tail is at most q/N because character sums over any interval are
    bounded by q.  For real nonprincipal characters with N >= 1000*q the
    positive lower bound value - tail > 0 is asserted.
    """
    if chi.is_principal:
        raise ArgumentError("l_one diverges on the principal character")
    n_max = int(n_max)
    if n_max < chi.q:
        raise RangeError(f"l_one needs N >= q, got N={n_max}, q={chi.q}")
    vals = chi.values()
    parts_re, parts_im = [], []
    lo = 1
    while lo <= n_max:
        hi = min(lo + (1 << 22) - 1, n_max)
        n = np.arange(lo, hi + 1, dtype=np.int64)
        terms = vals[n % chi.q] / n
        parts_re.append(float(np.sum(terms.real)))
        parts_im.append(float(np.sum(terms.imag)))
        lo = hi + 1
    total = complex(math.fsum(parts_re), math.fsum(parts_im))
    tail = chi.q / n_max
    if chi.is_real:
        value = total.real
        if n_max >= 1000 * chi.q and not value - tail > 0:
            raise AssertionError(
                f"L(1, chi) positivity failed for q={chi.q}, index={chi.index}: "
                f"{value} with tail {tail}"
            )
        return {"value": value, "tail_bound": tail}
    return {"value": total, "tail_bound": tail}


def mu_chi_mean(chi, n_max):
    """(1/N) sum_{n<=N} mu(n) chi(n)."""
    n_max = int(n_max)
    if not 1 <= n_max <= 10**8:
        raise RangeError(f"mu_chi_mean needs 1 <= N <= 1e8, got {n_max}")
    vals = chi.values()
    parts_re, parts_im = [], []
    lo = 1
    while lo <= n_max:
        hi = min(lo + (1 << 20) - 1, n_max)
        mu = engine.mobius_range(lo, hi)
        n = np.arange(lo, hi + 1, dtype=np.int64)
        terms = mu * vals[n % chi.q]
        parts_re.append(float(np.sum(terms.real)))
        parts_im.append(float(np.sum(terms.imag)))
        lo = hi + 1
    return complex(math.fsum(parts_re), math.fsum(parts_im)) / n_max


def least_prime_ap(q, a, search_cap=10**8):
    """Least prime p = a mod q, with the exponent log p / log q (q >= 3)."""
    q, a = int(q), int(a)
    if q < 2:
        raise RangeError(f"least_prime_ap needs q >= 2, got {q}")
    if math.gcd(a, q) != 1:
        raise ArgumentError(f"least_prime_ap needs gcd(a, q) = 1, got a={a}, q={q}")
    a %= q
    n = a if a >= 2 else a + q
    table = engine.shared_table(10**5)
    while n <= search_cap:
        if n in (2, 3) or (n % 2 and n % 3):
            root = math.isqrt(n)
            if table.limit < root:
                table = engine.shared_table(max(2 * root, 10**5))
            divisor_found = False
            for p in table.primes:
                p = int(p)
                if p * p > n:
                    break
                if n % p == 0:
                    divisor_found = True
                    break
            if not divisor_found:
                return {
                    "p": n,
                    "linnik_exponent": math.log(n) / math.log(q) if q >= 3 else None,
                }
        n += q
    raise ResourceError(f"no prime = {a} mod {q} below the {search_cap} search cap")
