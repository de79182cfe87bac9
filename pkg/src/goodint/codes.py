"""Cyclic codes in factored form: duals, LCD and self-dual codes, and counts.

A cyclic code of length n is stored as one exponent per record of the
factor table of x^n - 1; its generator is g = prod f_i^{e_i}. With
M = p^t the common multiplicity, the dual (Euclidean or Hermitian, matching
the table) has exponent M - e_{j'} at record j, where j' is the partner of j
(j itself for a self-dual record).

From this, C is LCD iff every self-dual record has exponent 0 or M and every
pair carries (0, 0) or (M, M); C is self-dual iff self-dual records carry
M/2 (so p = 2, t >= 1) and every pair (s, s') has s + s' = M.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Literal, Optional, Union

import numpy as np

from . import _kernels as K
from .cyclotomic import expected_count
from .errors import ConsistencyError, DomainError, SizeError
from .factorizer import (
    PAIR_PRIMARY, SELF_DUAL, FactorTable, check_duality, dual_poly, factor_table, field_for,
)
from .galois import GF, FqPoly, format_poly, poly_gcd
from .goodness import classify
from .numtheory import divisors, prime_power_split

#: Length guard for the dense linear-algebra oracle.
MAX_BRUTE_N = 256
DEFAULT_LIMIT = 10**6

CodeKind = Literal["lcd", "self_dual"]
CODE_KINDS: tuple[str, ...] = ("lcd", "self_dual")


def default_limit() -> int:
    raw = os.environ.get("GOODINT_LIMIT")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        val = int(raw)
    except ValueError:
        raise DomainError(f"GOODINT_LIMIT must be an integer, got {raw!r}") from None
    if val < 0:
        raise DomainError("GOODINT_LIMIT must be nonnegative")
    return val


@dataclass(frozen=True)
class DualitySpec:
    flavor: str = "euclidean"

    def __post_init__(self):
        object.__setattr__(self, "flavor", check_duality(self.flavor))

    @property
    def hermitian(self) -> bool:
        return self.flavor == "hermitian"


def _spec(table: FactorTable, d: Union[DualitySpec, str, None]) -> DualitySpec:
    spec = table_spec = DualitySpec(table.duality)
    if d is not None:
        spec = d if isinstance(d, DualitySpec) else DualitySpec(d)
    if spec.hermitian and table.field.m % 2:
        raise DomainError(f"Hermitian duality needs a square field order, got {table.field.name}")
    if spec != table_spec:
        raise DomainError(f"code was built for {table.duality} duality, asked for {spec.flavor}")
    return spec


@dataclass(frozen=True)
class CyclicCode:
    table: FactorTable
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != len(self.table.records):
            raise DomainError(f"expected {len(self.table.records)} exponents, got {len(exps)}")
        M = self.table.multiplicity
        if any(e < 0 or e > M for e in exps):
            raise DomainError(f"exponents must lie in [0, {M}]")

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def field(self) -> GF:
        return self.table.field

    def generator(self) -> FqPoly:
        acc = FqPoly(self.field, [1])
        for rec, e in zip(self.table.records, self.exponents):
            if e:
                acc = acc * rec.poly**e
        return acc

    @property
    def degree(self) -> int:
        return sum(r.poly.degree * e for r, e in zip(self.table.records, self.exponents))

    @property
    def dim(self) -> int:
        return self.n - self.degree

    def check_polynomial(self) -> FqPoly:
        """h = (x^n - 1) / g."""
        M = self.table.multiplicity
        acc = FqPoly(self.field, [1])
        for rec, e in zip(self.table.records, self.exponents):
            if M - e:
                acc = acc * rec.poly ** (M - e)
        return acc

    def to_dict(self) -> dict:
        t = self.table
        return {
            "n": t.n,
            "field": f"{t.p}^{self.field.m}",
            "duality": t.duality,
            "generator": format_poly(self.generator()),
            "exponents": list(self.exponents),
            "dim": self.dim,
        }


def zero_code(table: FactorTable) -> CyclicCode:
    return CyclicCode(table, (table.multiplicity,) * len(table.records))


def whole_space(table: FactorTable) -> CyclicCode:
    return CyclicCode(table, (0,) * len(table.records))


def _partner_index(table: FactorTable) -> list[int]:
    pos = {r.coset_rep: i for i, r in enumerate(table.records)}
    return [i if r.kind == SELF_DUAL else pos[r.partner] for i, r in enumerate(table.records)]


def dual_code(c: CyclicCode, d: Union[DualitySpec, str, None] = None) -> CyclicCode:
    _spec(c.table, d)
    M = c.table.multiplicity
    part = _partner_index(c.table)
    return CyclicCode(c.table, tuple(M - c.exponents[part[j]] for j in range(len(part))))


def is_lcd(c: CyclicCode, d: Union[DualitySpec, str, None] = None) -> bool:
    _spec(c.table, d)
    M = c.table.multiplicity
    part = _partner_index(c.table)
    for j, e in enumerate(c.exponents):
        if e not in (0, M) or c.exponents[part[j]] != e:
            return False
    return True


def is_self_dual(c: CyclicCode, d: Union[DualitySpec, str, None] = None) -> bool:
    return dual_code(c, d).exponents == c.exponents


def intersection_with_dual(c: CyclicCode, d: Union[DualitySpec, str, None] = None) -> CyclicCode:
    """C cap C-perp; its generator is lcm(g, g-perp), i.e. the exponentwise max."""
    dc = dual_code(c, d)
    return CyclicCode(c.table, tuple(max(a, b) for a, b in zip(c.exponents, dc.exponents)))


# ---------------------------------------------------------------------------
# counting


def _checked_params(n: int, p: int, m: int, duality: str) -> tuple[GF, int, int, str]:
    duality = check_duality(duality)
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    fld = field_for(p, m, duality)
    N, t = prime_power_split(n, p)
    return fld, N, t, duality


def record_counts(n: int, p: int, m: int = 1, duality: str = "euclidean") -> tuple[int, int]:
    """(#self-dual records, #pairs) from the divisor sum, no polynomials involved."""
    fld, N, _, duality = _checked_params(n, p, m, duality)
    herm = duality == "hermitian"
    base = p**m if herm else fld.q
    fixed = pairs = 0
    for d in divisors(N):
        gamma = expected_count(d, fld.q)
        verdict = classify(base, 1, d)
        if verdict.oddly if herm else verdict.good:
            fixed += gamma
        else:
            pairs += gamma // 2
    return fixed, pairs


def _structural_counts(n: int, p: int, m: int, duality: str) -> tuple[int, int]:
    table = factor_table(n, p, m, duality, verify=False)
    return len(table.self_dual()), len(table.pairs())


def count_lcd(n: int, p: int, m: int = 1, duality: str = "euclidean", cross_check: bool = True) -> int:
    fixed, pairs = record_counts(n, p, m, duality)
    if cross_check and (fixed, pairs) != _structural_counts(n, p, m, duality):
        raise ConsistencyError("divisor-sum counts disagree with the factor table")  # pragma: no cover
    return 2 ** (fixed + pairs)


def count_self_dual(n: int, p: int, m: int = 1, duality: str = "euclidean", cross_check: bool = True) -> int:
    _, _, t, _ = _checked_params(n, p, m, duality)
    if p != 2 or t < 1:
        return 0
    fixed, pairs = record_counts(n, p, m, duality)
    if cross_check and (fixed, pairs) != _structural_counts(n, p, m, duality):
        raise ConsistencyError("divisor-sum counts disagree with the factor table")  # pragma: no cover
    return (1 + 2**t) ** pairs


def count_codes(n: int, p: int, m: int, duality: str, kind: str) -> int:
    if kind not in CODE_KINDS:
        raise DomainError(f"kind must be one of {CODE_KINDS}, got {kind!r}")
    return (count_lcd if kind == "lcd" else count_self_dual)(n, p, m, duality)


# ---------------------------------------------------------------------------
# enumeration


def _choices(table: FactorTable, kind: str) -> list[list[tuple[int, ...]]]:
    """Per group (a self-dual record or a pair), the admissible exponent tuples, ascending."""
    M = table.multiplicity
    groups = []
    for r in table.records:
        if r.kind == SELF_DUAL:
            if kind == "lcd":
                groups.append([(0,), (M,)])
            elif M % 2 == 0:
                groups.append([(M // 2,)])
            else:
                groups.append([])
        elif r.kind == PAIR_PRIMARY:
            if kind == "lcd":
                groups.append([(0, 0), (M, M)])
            else:
                groups.append([(s, M - s) for s in range(M + 1)])
    return groups


def enumerate_codes(
    n: int, p: int, m: int = 1, duality: str = "euclidean", kind: str = "lcd",
    limit: Optional[int] = None,
) -> Iterator[CyclicCode]:
    """All LCD or self-dual codes, lexicographic in the exponent vector."""
    if kind not in CODE_KINDS:
        raise DomainError(f"kind must be one of {CODE_KINDS}, got {kind!r}")
    if limit is None:
        limit = default_limit()
    table = factor_table(n, p, m, duality)
    if kind == "self_dual" and (p != 2 or table.t < 1):
        return
    combos = itertools.product(*_choices(table, kind))
    for combo in itertools.islice(combos, limit):
        yield CyclicCode(table, tuple(itertools.chain.from_iterable(combo)))


# ---------------------------------------------------------------------------
# oracles


def gcd_lcd(c: CyclicCode) -> bool:
    """LCD test via gcd(g, h*) = 1 (h-dagger for Hermitian), on expanded polynomials."""
    t = c.table
    h = c.check_polynomial()
    return poly_gcd(c.generator(), dual_poly(h, t.duality, t.p, t.m)).degree == 0


def gcd_dual_generator(c: CyclicCode) -> FqPoly:
    """Generator of the dual computed as h* (or h-dagger) from the expanded h."""
    t = c.table
    return dual_poly(c.check_polynomial(), t.duality, t.p, t.m)


def _rref(mat: np.ndarray, fld: GF):
    if fld.m == 1 and fld.p < K.INT64_SAFE_MODULUS:
        return K.rref_mod_p(mat.astype(np.int64), fld.p)
    return K.rref_table(mat.astype(np.int64), fld.add_t, fld.mul_t, fld.neg_t, fld.inv_t)


def rank(mat: np.ndarray, fld: GF) -> int:
    if mat.shape[0] == 0:
        return 0
    return int(_rref(mat, fld)[1])


def generator_matrix(c: CyclicCode) -> np.ndarray:
    """k x n matrix whose rows are x^i g(x), i < k."""
    g = np.asarray(c.generator().coeffs, dtype=np.int64)
    n, k = c.n, c.dim
    out = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        out[i, i : i + len(g)] = g
    return out


def null_space(mat: np.ndarray, n: int, fld: GF) -> np.ndarray:
    """Basis (as rows) of {x : mat @ x = 0} over the field."""
    if mat.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    red, r, piv = _rref(mat, fld)
    pivots = [int(c) for c in piv[:r]]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = fld.neg(int(red[i, f]))
    return basis


def brute_dual_basis(c: CyclicCode) -> np.ndarray:
    """C-perp from the definition; Hermitian conjugates the code side by x -> x^{p^m}."""
    if c.n > MAX_BRUTE_N:
        raise SizeError(f"brute-force verification is limited to n <= {MAX_BRUTE_N}")
    fld = c.field
    G = generator_matrix(c)
    if c.table.duality == "hermitian":
        G = fld.frobenius_table(c.table.p ** c.table.m)[G] if G.size else G
    return null_space(G, c.n, fld)


def brute_verify(c: CyclicCode) -> dict:
    """Dimensions of C, C-perp and their intersection by dense linear algebra."""
    if c.n > MAX_BRUTE_N:
        raise SizeError(f"brute-force verification is limited to n <= {MAX_BRUTE_N}")
    fld = c.field
    G = generator_matrix(c)
    D = brute_dual_basis(c)
    k, kd = G.shape[0], D.shape[0]
    inter = k + kd - rank(np.vstack([G, D]), fld) if k and kd else 0
    return {
        "dim": k,
        "dim_dual": kd,
        "dim_intersection": inter,
        "self_dual": k == kd == inter,
        "lcd": inter == 0,
    }


def contains_rows(basis: np.ndarray, rows: np.ndarray, fld: GF) -> bool:
    """True iff every row of ``rows`` lies in the row span of ``basis``."""
    if rows.shape[0] == 0:
        return True
    return rank(np.vstack([basis, rows]), fld) == rank(basis, fld)
