"""Factorization of x^n - 1 into minimal polynomials of cyclotomic cosets.

With n = N p^t and p not dividing N, x^n - 1 = (x^N - 1)^{p^t} and x^N - 1
is the product of f_a(x) = prod_{i in C_q(a)} (x - alpha^i) over the coset
representatives a. The records are regrouped so that self-reciprocal (or
self-conjugate-reciprocal) factors come first and the remaining ones appear
as adjacent pairs f, f* (or f, f-dagger).

alpha is fixed as follows. Let F_Q = F_p[y]/(f) with f the least irreducible
of degree m*e, e = ord_N(q). alpha = z^{(Q-1)/N} for the least z (by code)
that makes this an element of order exactly N.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal, Optional

import numpy as np

from . import _kernels as K
from .cyclotomic import CosetPartition, CyclotomicCoset, coset_type, cosets
from .errors import ConsistencyError, DomainError
from .galois import (
    GF, FqPoly, conj_reciprocal, digits_to_int, field_make, format_poly,
    parse_poly, reciprocal, tower,
)
from .numtheory import is_prime, mult_order, prime_power_split

Duality = Literal["euclidean", "hermitian"]
DUALITIES: tuple[str, ...] = ("euclidean", "hermitian")

SELF_DUAL = "SelfDual"
PAIR_PRIMARY = "PairPrimary"
PAIR_SECONDARY = "PairSecondary"
KINDS = (SELF_DUAL, PAIR_PRIMARY, PAIR_SECONDARY)

TABLE_SCHEMA_VERSION = "1"


def check_duality(duality: str) -> str:
    d = str(duality).lower()
    if d not in DUALITIES:
        raise DomainError(f"duality must be one of {DUALITIES}, got {duality!r}")
    return d


def field_for(p: int, m: int, duality: str) -> GF:
    """Field of the code alphabet: F_{p^m}, or F_{p^{2m}} for Hermitian duality."""
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    return field_make(p, 2 * m if check_duality(duality) == "hermitian" else m)


# ---------------------------------------------------------------------------
# minimal polynomials


class _RootContext:
    """Splitting field of x^N - 1 over F_q with the fixed primitive N-th root."""

    def __init__(self, fld: GF, N: int):
        self.fld, self.N = fld, N
        self.e = mult_order(fld.q, N) if N > 1 else 1
        self.tw = tower(fld, self.e)
        self.big = self.tw.big
        self.alpha = self.big.least_of_order(N)

    def root(self, a: int) -> np.ndarray:
        return self.big.pow(self.alpha, a % self.N)


@lru_cache(maxsize=64)
def _root_context(fld: GF, N: int) -> _RootContext:
    return _RootContext(fld, N)


def _check_coprime(fld: GF, N: int) -> None:
    if N < 1 or math.gcd(N, fld.q) != 1:
        raise DomainError(f"need gcd(N, q) = 1 with N >= 1, got N={N}, q={fld.q}")


def min_poly(coset: CyclotomicCoset, fld: GF, N: int) -> FqPoly:
    """Minimal polynomial over ``fld`` of alpha^rep.

    Solves sum_{i<s} c_i beta^i = -beta^s for c_i in F_q, written in F_p
    coordinates c_i = sum_j c_ij y^j, where s is the coset size.
    """
    _check_coprime(fld, N)
    ctx = _root_context(fld, N)
    big, tw, p, m = ctx.big, ctx.tw, fld.p, fld.m
    beta = ctx.root(coset.rep)
    s = coset.size
    cols = []
    power = big.one()
    for _ in range(s):
        for j in range(m):
            cols.append(big.mul(tw.basis[j], power))
        power = big.mul(power, beta)
    cols.append((-power) % p)
    red, rank, piv = K.rref_mod_p(np.stack(cols, axis=1), p)
    if rank != s * m or piv[s * m - 1] != s * m - 1:
        raise ConsistencyError(f"powers of alpha^{coset.rep} are dependent below degree {s}")
    sol = red[: s * m, s * m]
    coeffs = [digits_to_int(sol[i * m : (i + 1) * m].tolist(), p) for i in range(s)] + [1]
    f = FqPoly(fld, coeffs)
    if tw.eval_base_poly(f, beta).any():
        raise ConsistencyError(f"solved polynomial does not vanish at alpha^{coset.rep}")
    return f


def min_poly_by_roots(coset: CyclotomicCoset, fld: GF, N: int) -> FqPoly:
    """prod (x - alpha^i) over the coset, computed in the big field and mapped down.

    Quadratic in the coset size; used as an oracle for :func:`min_poly`.
    """
    _check_coprime(fld, N)
    ctx = _root_context(fld, N)
    big = ctx.big
    acc = [big.one()]
    for i in coset.elements:
        r = ctx.root(i)
        nxt = [big.zero() for _ in range(len(acc) + 1)]
        for k, c in enumerate(acc):
            nxt[k + 1] = big.add(nxt[k + 1], c)
            nxt[k] = big.sub(nxt[k], big.mul(c, r))
        acc = nxt
    return FqPoly(fld, [ctx.tw.project(c) for c in acc])


# ---------------------------------------------------------------------------
# factor tables


@dataclass(frozen=True)
class FactorRecord:
    poly: FqPoly
    coset_rep: int
    add_order: int
    kind: str
    partner: Optional[int]
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "poly": format_poly(self.poly),
            "coset_rep": self.coset_rep,
            "add_order": self.add_order,
            "kind": self.kind,
            "partner": self.partner,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class FactorTable:
    n: int
    N: int
    p: int
    m: int
    t: int
    duality: str
    records: tuple[FactorRecord, ...]

    @property
    def field(self) -> GF:
        return field_for(self.p, self.m, self.duality)

    @property
    def multiplicity(self) -> int:
        return self.p**self.t

    def self_dual(self) -> list[FactorRecord]:
        return [r for r in self.records if r.kind == SELF_DUAL]

    def pairs(self) -> list[tuple[FactorRecord, FactorRecord]]:
        """(primary, secondary) tuples in table order."""
        recs = [r for r in self.records if r.kind != SELF_DUAL]
        return [(recs[i], recs[i + 1]) for i in range(0, len(recs), 2)]

    def __iter__(self) -> Iterator[FactorRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def product(self) -> FqPoly:
        acc = FqPoly(self.field, [1])
        for r in self.records:
            acc = acc * r.poly
        return acc ** self.multiplicity

    def to_dict(self) -> dict:
        return {
            "schema_version": TABLE_SCHEMA_VERSION,
            "n": self.n, "N": self.N, "p": self.p, "m": self.m, "t": self.t,
            "duality": self.duality,
            "field": self.field.name,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "FactorTable":
        version = str(data.get("schema_version"))
        if version != TABLE_SCHEMA_VERSION:
            raise DomainError(f"unsupported factor table schema_version {version!r}")
        fld = field_for(data["p"], data["m"], data["duality"])
        recs = tuple(
            FactorRecord(
                parse_poly(r["poly"], fld), r["coset_rep"], r["add_order"],
                r["kind"], r["partner"], r["multiplicity"],
            )
            for r in data["records"]
        )
        return cls(data["n"], data["N"], data["p"], data["m"], data["t"], data["duality"], recs)

    @classmethod
    def from_json(cls, text: str) -> "FactorTable":
        return cls.from_dict(json.loads(text))


def dual_poly(f: FqPoly, duality: str, p: int, m: int) -> FqPoly:
    """f* for Euclidean duality, f-dagger (conjugation by x -> x^{p^m}) for Hermitian."""
    if check_duality(duality) == "euclidean":
        return reciprocal(f)
    return conj_reciprocal(f, p**m)


def factor_table(n: int, p: int, m: int = 1, duality: str = "euclidean", verify: bool = True) -> FactorTable:
    """Regrouped factorization of x^n - 1 over F_{p^m} (F_{p^{2m}} if Hermitian)."""
    duality = check_duality(duality)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    fld = field_for(p, m, duality)
    N, t = prime_power_split(n, p)
    part = cosets(N, fld.q)
    mult = p**t
    herm = duality == "hermitian"

    polys = {c.rep: min_poly(c, fld, N) for c in part}
    selfd: list[FactorRecord] = []
    pairs: list[FactorRecord] = []
    for c in part:
        ty = coset_type(c, part, herm)
        if ty.self_paired:
            selfd.append(FactorRecord(polys[c.rep], c.rep, c.add_order, SELF_DUAL, None, mult))
        elif c.rep < ty.partner:
            other = part.coset_of(ty.partner)
            pairs.append(FactorRecord(polys[c.rep], c.rep, c.add_order, PAIR_PRIMARY, other.rep, mult))
            pairs.append(FactorRecord(polys[other.rep], other.rep, other.add_order, PAIR_SECONDARY, c.rep, mult))
    table = FactorTable(n, N, p, m, t, duality, tuple(selfd + pairs))
    if verify:
        verify_table(table, part)
    return table


def verify_table(table: FactorTable, part: Optional[CosetPartition] = None) -> None:
    """Check degrees, kinds against (conjugate-)reciprocals, and the product."""
    fld = table.field
    part = part or cosets(table.N, fld.q)
    for r in table.records:
        if r.poly.degree != part.coset_of(r.coset_rep).size or r.poly.lead != 1:
            raise ConsistencyError(f"record for coset {r.coset_rep} has a bad degree or is not monic")
        dual = dual_poly(r.poly, table.duality, table.p, table.m)
        if r.kind == SELF_DUAL:
            ok = dual == r.poly
        else:
            ok = dual == next(s.poly for s in table.records if s.coset_rep == r.partner)
        if not ok:
            raise ConsistencyError(f"kind {r.kind} of coset {r.coset_rep} disagrees with its dual polynomial")
    if table.product() != FqPoly.x_pow_minus_one(fld, table.n):
        raise ConsistencyError(f"factors do not multiply to x^{table.n} - 1")
