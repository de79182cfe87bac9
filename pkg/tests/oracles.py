"""Slow, independent reference implementations used only by the tests.

Nothing here imports goodint. Field elements use the same integer codes as
the package (for F_4: 0, 1, a = 2, a^2 = a + 1 = 3) so results can be
compared directly.
"""
from __future__ import annotations

import itertools
from math import gcd


# -- integers ---------------------------------------------------------------

def naive_order(x: int, n: int) -> int:
    if n == 1:
        return 1
    k, y = 1, x % n
    while y != 1:
        y = y * x % n
        k += 1
    return k


def naive_witnesses(a: int, b: int, ell: int) -> set[str]:
    """Parities of k in [1, 2 * ell] with ell | a^k + b^k."""
    found = set()
    for k in range(1, 2 * ell + 1):
        if (pow(a, k, ell) + pow(b, k, ell)) % ell == 0:
            found.add("odd" if k % 2 else "even")
            if len(found) == 2:
                break
    return found


def naive_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_cosets(N: int, q: int) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for a in range(N):
        if a in seen:
            continue
        orbit, x = set(), a
        while x not in orbit:
            orbit.add(x)
            x = x * q % N
        seen |= orbit
        out.append(tuple(sorted(orbit)))
    return out


# -- small fields ---------------------------------------------------------------

class PrimeField:
    def __init__(self, p: int):
        self.p, self.q = p, p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return x * y % self.p

    def inv(self, x):
        return pow(x, self.p - 2, self.p)

    def conj(self, x):
        return x

    def elements(self):
        return range(self.p)


class F4:
    """F_4 with a^2 = a + 1, written out by hand."""

    q = 4
    _MUL = [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ]
    _INV = [None, 1, 3, 2]

    def add(self, x, y):
        return x ^ y

    sub = add

    def mul(self, x, y):
        return self._MUL[x][y]

    def inv(self, x):
        return self._INV[x]

    def conj(self, x):
        # x -> x^2
        return self._MUL[x][x]

    def elements(self):
        return range(4)


# -- polynomials as coefficient lists, low degree first --------------------------

def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def pmul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def pdivmod(F, f, g):
    f, g = trim(f), trim(g)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv = F.inv(g[-1])
    r = list(f)
    while len(r) >= len(g) and r:
        c = F.mul(r[-1], inv)
        s = len(r) - len(g)
        q[s] = c
        for i, b in enumerate(g):
            r[s + i] = F.sub(r[s + i], F.mul(c, b))
        r = trim(r)
    return trim(q), r


def x_n_minus_1(F, n):
    return [F.sub(0, 1)] + [0] * (n - 1) + [1]


def monic_irreducible_divisors(F, n, max_deg):
    """Brute force: every monic irreducible of degree <= max_deg dividing x^n - 1."""
    target = x_n_minus_1(F, n)
    found = []
    for deg in range(1, max_deg + 1):
        for low in itertools.product(list(F.elements()), repeat=deg):
            f = list(low) + [1]
            if pdivmod(F, target, f)[1]:
                continue
            if any(not pdivmod(F, f, g)[1] for g in found if len(g) < len(f)):
                continue
            if deg > 1 and any(not pdivmod(F, f, g)[1] for g in _all_monic_upto(F, deg // 2)):
                continue
            found.append(f)
    return found


def _all_monic_upto(F, deg):
    for d in range(1, deg + 1):
        for low in itertools.product(list(F.elements()), repeat=d):
            yield list(low) + [1]


# -- linear algebra ---------------------------------------------------------------

def rank(F, rows):
    m = [list(r) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(v, F.mul(f, w)) for v, w in zip(m[i], m[r])]
        r += 1
    return r


def cyclic_form(F, g, n, s, hermitian):
    """<g, sigma^s g> with sigma the cyclic shift on F^n."""
    v = list(g) + [0] * (n - len(g))
    acc = 0
    for i in range(n):
        w = v[(i - s) % n]
        acc = F.add(acc, F.mul(v[i], F.conj(w) if hermitian else w))
    return acc


def gram_is_lcd(F, g, n, hermitian):
    """Massey-type criterion: C is LCD iff the Gram matrix of a basis is invertible."""
    k = n - (len(trim(g)) - 1)
    if k == 0:
        return True
    corr = [cyclic_form(F, g, n, s, hermitian) for s in range(n)]
    gram = [[corr[(j - i) % n] for j in range(k)] for i in range(k)]
    return rank(F, gram) == k


def is_self_orthogonal(F, g, n, hermitian):
    return all(cyclic_form(F, g, n, s, hermitian) == 0 for s in range(n))


__all__ = [name for name in dir() if not name.startswith("_")] + ["gcd"]
