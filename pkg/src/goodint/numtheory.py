"""Exact integer primitives: factorization, multiplicative orders, valuations.

Everything here is a pure function of its arguments. Factorizations are
cached because the classification and coset code asks for the same small
moduli over and over.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import DomainError, SizeError

#: Inputs above this bound are rejected by :func:`factorize`.
MAX_FACTOR_INPUT = 2**63 - 1

_TRIAL_LIMIT = 1 << 20
# Deterministic for n < 3.3e24, which covers every admissible input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer with its prime factorization, primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for prime, exp in self.factors:
            if prime <= last or exp < 1 or not is_prime(prime):
                raise DomainError(f"invalid factor entry {(prime, exp)}")
            last = prime
            prod *= prime**exp
        if prod != self.value:
            raise DomainError(f"factors do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __int__(self) -> int:
        return self.value


@lru_cache(maxsize=1)
def _small_primes() -> np.ndarray:
    sieve = np.ones(_TRIAL_LIMIT + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the composite odd n."""
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard-rho failed on {n}")  # pragma: no cover


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=65536)
def _factor_cached(n: int) -> tuple[tuple[int, int], ...]:
    found: dict[int, int] = {}
    rest = n
    if rest > 1 and not is_prime(rest):
        for p in _small_primes():
            p = int(p)
            if p * p > rest:
                break
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                found[p] = e
                if is_prime(rest):
                    break
    _split(rest, found)
    return tuple(sorted(found.items()))


def factorize(n: int, bound: int = MAX_FACTOR_INPUT) -> FactoredInt:
    """Factor ``n`` by trial division to 2^20, then Pollard-Brent.

    >>> factorize(1625).as_dict()
    {5: 3, 13: 1}
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    if n > bound:
        raise SizeError(f"{n} exceeds the factorization bound {bound}")
    return FactoredInt(n, _factor_cached(n))


def _as_factored(n: int | FactoredInt) -> FactoredInt:
    return n if isinstance(n, FactoredInt) else factorize(n)


def two_adic_valuation(n: int) -> int:
    """Largest i with 2^i dividing n."""
    n = int(n)
    if n < 1:
        raise DomainError("two_adic_valuation needs n >= 1")
    return (n & -n).bit_length() - 1


def euler_phi(n: int | FactoredInt) -> int:
    fn = _as_factored(n)
    phi = 1
    for p, e in fn.factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def carmichael_lambda(n: int | FactoredInt) -> int:
    fn = _as_factored(n)
    lam = 1
    for p, e in fn.factors:
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = math.lcm(lam, part)
    return lam


def divisors(n: int | FactoredInt) -> list[int]:
    """All positive divisors of n, ascending."""
    fn = _as_factored(n)
    divs = [1]
    for p, e in fn.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mod_inverse(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise DomainError(f"{a} is not invertible modulo {n}")
    return pow(a % n, -1, n) if n > 1 else 0


@lru_cache(maxsize=65536)
def mult_order(a: int, n: int) -> int:
    """Least k >= 1 with a^k = 1 (mod n).

    Starts from Carmichael's lambda(n) and strips prime factors while the
    power stays 1, so the cost is polylogarithmic in n.
    """
    n = int(n)
    if n < 1:
        raise DomainError("modulus must be positive")
    if math.gcd(a, n) != 1:
        raise DomainError(f"gcd({a}, {n}) != 1: order undefined")
    if n == 1:
        return 1
    a %= n
    order = carmichael_lambda(n)
    for r, _ in factorize(order).factors:
        while order % r == 0 and pow(a, order // r, n) == 1:
            order //= r
    return order


def mult_order_ratio(a: int, b: int, n: int) -> int:
    """Multiplicative order of a * b^{-1} modulo n."""
    n = int(n)
    if math.gcd(a, n) != 1 or math.gcd(b, n) != 1:
        raise DomainError(f"a={a}, b={b} must both be coprime to {n}")
    if n == 1:
        return 1
    return mult_order(a * mod_inverse(b, n) % n, n)


def prime_power_split(n: int, p: int) -> tuple[int, int]:
    """Write n = N * p^t with p not dividing N; return (N, t)."""
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    return n, t


def prime_power_parts(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m, or raise if q is not a prime power."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    fq = factorize(q)
    if len(fq.factors) != 1:
        raise DomainError(f"{q} is not a prime power")
    return fq.factors[0]


def iter_primes_dividing(n: int) -> Iterator[int]:
    yield from factorize(n).primes
