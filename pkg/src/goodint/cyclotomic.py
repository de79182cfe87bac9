"""q-cyclotomic cosets of Z_N and their duality types.

C_q(a) = {a q^i mod N}. Cosets are grouped by additive order
ord(a) = N / gcd(N, a); there are phi(d) / ord_d(q) cosets of order d.

Euclidean: C_q(a) is type I when it equals C_q(-a), else type II and its
partner is C_q(-a). Hermitian (q = r^2): type I' when C_q(a) = C_q(-r a),
else type II' with partner C_q(-r a).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from . import _kernels as K
from .errors import DomainError, SizeError
from .goodness import classify
from .numtheory import divisors, euler_phi, mult_order, prime_power_parts

#: Largest N for which a full partition is materialized.
MAX_PARTITION_N = 1 << 24

TypeName = Literal["I", "II", "I'", "II'"]


@dataclass(frozen=True)
class CyclotomicCoset:
    rep: int
    elements: tuple[int, ...]
    add_order: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements


@dataclass(frozen=True)
class CosetType:
    """Duality type of a coset; ``partner`` is None for the self-paired types."""

    kind: TypeName
    partner: Optional[int] = None

    @property
    def self_paired(self) -> bool:
        return self.partner is None


@dataclass
class CosetPartition:
    N: int
    q: int
    cosets: list[CyclotomicCoset]
    by_divisor: dict[int, list[CyclotomicCoset]] = field(default_factory=dict)
    _rep_of: np.ndarray = field(default=None, repr=False)

    def coset_of(self, a: int) -> CyclotomicCoset:
        rep = int(self._rep_of[a % self.N])
        return self._by_rep[rep]

    def rep_of(self, a: int) -> int:
        return int(self._rep_of[a % self.N])

    def __post_init__(self):
        self._by_rep = {c.rep: c for c in self.cosets}

    def __iter__(self):
        return iter(self.cosets)

    def __len__(self) -> int:
        return len(self.cosets)


def cosets(N: int, q: int) -> CosetPartition:
    """Partition Z_N into q-cyclotomic cosets.

    Ordered by additive order, then representative (the least element).
    """
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if q < 2:
        raise DomainError(f"q must be a prime power, got {q}")
    if math.gcd(N, q) != 1:
        raise DomainError(f"gcd(N, q) = gcd({N}, {q}) != 1")
    if N > MAX_PARTITION_N:
        raise SizeError(f"N = {N} exceeds the partition bound {MAX_PARTITION_N}")
    reps = np.asarray(K.coset_reps(N, q % N if N > 1 else 0), dtype=np.int64)
    order = np.argsort(reps, kind="stable")
    bounds = np.flatnonzero(np.diff(reps[order])) + 1
    groups = np.split(order, bounds)
    out: list[CyclotomicCoset] = []
    for g in groups:
        rep = int(reps[g[0]])
        out.append(CyclotomicCoset(rep, tuple(int(x) for x in np.sort(g)), N // math.gcd(N, rep)))
    out.sort(key=lambda c: (c.add_order, c.rep))
    by_div: dict[int, list[CyclotomicCoset]] = {d: [] for d in divisors(N)}
    for c in out:
        by_div[c.add_order].append(c)
    return CosetPartition(N, q, out, by_div, reps)


def expected_count(d: int, q: int) -> int:
    """Number of q-cyclotomic cosets of additive order d."""
    return euler_phi(d) // mult_order(q, d)


def euclidean_type(c: CyclotomicCoset, part: CosetPartition) -> CosetType:
    neg = (-c.rep) % part.N
    if neg in c.elements:
        return CosetType("I")
    return CosetType("II", part.rep_of(neg))


def _sqrt_order(q: int, r: int) -> None:
    if r * r != q:
        raise DomainError(f"Hermitian type needs q = r^2, got q={q}, r={r}")
    prime_power_parts(r)


def hermitian_type(c: CyclotomicCoset, part: CosetPartition, r: int) -> CosetType:
    """Type I' / II' with respect to the conjugation x -> x^r, q = r^2."""
    _sqrt_order(part.q, r)
    img = (-r * c.rep) % part.N
    if img in c.elements:
        return CosetType("I'")
    return CosetType("II'", part.rep_of(img))


def coset_type(c: CyclotomicCoset, part: CosetPartition, hermitian: bool = False) -> CosetType:
    if not hermitian:
        return euclidean_type(c, part)
    return hermitian_type(c, part, math.isqrt(part.q))


def coset_goodness_bridge(c: CyclotomicCoset, a_base: int, hermitian: bool = False) -> bool:
    """Goodness of ord(a) w.r.t. (a_base, 1): good for Euclidean, oddly-good for Hermitian.

    For the Euclidean bridge a_base is the field order q; for the Hermitian
    one it is the square root r of q.
    """
    v = classify(a_base, 1, c.add_order)
    return v.oddly if hermitian else v.good
