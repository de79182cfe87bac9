"""Good, oddly-good and evenly-good integers with respect to a coprime pair.

A positive integer ell is *good* for (a, b) when ell | a^k + b^k for some
k >= 1; *oddly-good* / *evenly-good* when such a k can be chosen odd / even.

:func:`classify` decides membership from the factorization of ell alone.
Write ell = 2^beta * d with d odd, and collect

    S = { v_2(ord_p(a/b)) : p prime, p | d }.

For d > 1 the odd part is good iff S = {s} with s >= 1; it is oddly-good iff
S = {1} and evenly-good iff S = {s} with s >= 2. The 2-part then decides:
beta = 1 inherits the verdict of d (needs ab odd), beta >= 2 needs
2^beta | a + b and S = {1}, and always lands in the oddly-good class.

Every verdict carries a trace: an ordered tuple of tags naming the branches
taken. The vocabulary is fixed (the ``TAG_*`` constants below) so callers and
tests can assert the decision path, not only the outcome.

:func:`witness_search` is the definition applied literally, by scanning k.
It shares nothing with :func:`classify` and serves as its oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional

from . import _kernels as K
from .errors import ConsistencyError, DomainError
from .numtheory import factorize, mult_order_ratio, two_adic_valuation

TAG_NOT_COPRIME = "gcd(ab,ell)>1 => bad"
TAG_ONE = "ell=1 => oddly & evenly"
TAG_TWO = "ell=2, ab odd => oddly & evenly"
TAG_AB_EVEN = "ab even, beta>=1 => bad"
TAG_POW2_OK = "beta>=2: 2^beta|(a+b)"
TAG_POW2_FAIL = "beta>=2: 2^beta does not divide a+b => bad"
TAG_POW2_ONLY = "d=1, beta>=2 => oddly"
TAG_S_ZERO = "S={0} => bad"
TAG_S_MIXED = "|S|>=2 => bad"
TAG_S_ONE = "S={1}: d oddly-good"
TAG_S_HIGH = "S={s}, s>=2: d evenly-good"
TAG_BETA1 = "beta=1, ab odd: 2d shares the verdict of d"
TAG_BETA2_NEEDS_S1 = "beta>=2 requires S={1} => bad"

TRACE_TAGS = (
    TAG_NOT_COPRIME, TAG_ONE, TAG_TWO, TAG_AB_EVEN, TAG_POW2_OK, TAG_POW2_FAIL,
    TAG_POW2_ONLY, TAG_S_ZERO, TAG_S_MIXED, TAG_S_ONE, TAG_S_HIGH, TAG_BETA1,
    TAG_BETA2_NEEDS_S1,
)

ClassName = Literal["good", "oddly", "evenly"]
CLASSES: tuple[str, ...] = ("good", "oddly", "evenly")


@dataclass(frozen=True)
class GoodnessQuery:
    a: int
    b: int
    ell: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise DomainError("a and b must be nonzero")
        if math.gcd(self.a, self.b) != 1:
            raise DomainError(f"gcd({self.a}, {self.b}) = {math.gcd(self.a, self.b)}, need coprime a, b")
        if self.ell < 1:
            raise DomainError(f"ell must be positive, got {self.ell}")


@dataclass(frozen=True)
class Classification:
    good: bool
    oddly: bool
    evenly: bool
    witness_k: Optional[int] = None
    trace: tuple[str, ...] = field(default_factory=tuple)
    # decomposition ell = 2^beta * d and the valuation set S (sorted)
    beta: int = 0
    d: int = 1
    s_values: tuple[int, ...] = ()

    @property
    def label(self) -> str:
        if not self.good:
            return "bad"
        if self.oddly and self.evenly:
            return "oddly & evenly"
        return "oddly" if self.oddly else "evenly"

    def member(self, cls: str) -> bool:
        if cls not in CLASSES:
            raise DomainError(f"unknown class {cls!r}; expected one of {CLASSES}")
        return getattr(self, cls)


def _bad(trace, **kw) -> Classification:
    return Classification(False, False, False, None, tuple(trace), **kw)


def valuation_set(a: int, b: int, d: int) -> tuple[int, ...]:
    """Sorted set of v_2(ord_p(a/b)) over primes p dividing the odd d."""
    return tuple(sorted({two_adic_valuation(mult_order_ratio(a, b, p)) for p in factorize(d).primes}))


def classify(a: int, b: int, ell: int) -> Classification:
    """Decide whether ell is good, oddly-good, evenly-good for (a, b)."""
    GoodnessQuery(a, b, ell)
    if math.gcd(a * b, ell) != 1:
        return _bad([TAG_NOT_COPRIME])
    if ell == 1:
        return Classification(True, True, True, 1, (TAG_ONE,))

    beta = two_adic_valuation(ell)
    d = ell >> beta
    ab_odd = (a * b) % 2 == 1
    kw = dict(beta=beta, d=d)
    trace: list[str] = []

    if beta >= 1 and not ab_odd:
        # unreachable after the gcd test, kept so the branch is explicit
        return _bad([TAG_AB_EVEN], **kw)

    if d == 1:
        if beta == 1:
            return Classification(True, True, True, 1, (TAG_TWO,), **kw)
        if (a + b) % (1 << beta):
            return _bad([TAG_POW2_FAIL], **kw)
        return _finish(a, b, ell, True, False, [TAG_POW2_OK, TAG_POW2_ONLY], kw)

    svals = valuation_set(a, b, d)
    kw["s_values"] = svals
    if len(svals) >= 2:
        return _bad([TAG_S_MIXED], **kw)
    s = svals[0]
    if s == 0:
        return _bad([TAG_S_ZERO], **kw)
    oddly = s == 1
    trace.append(TAG_S_ONE if oddly else TAG_S_HIGH)

    if beta == 1:
        trace.append(TAG_BETA1)
    elif beta >= 2:
        if (a + b) % (1 << beta):
            return _bad(trace + [TAG_POW2_FAIL], **kw)
        trace.append(TAG_POW2_OK)
        if not oddly:
            return _bad(trace + [TAG_BETA2_NEEDS_S1], **kw)
    return _finish(a, b, ell, oddly, not oddly, trace, kw)


def _finish(a, b, ell, oddly, evenly, trace, kw) -> Classification:
    k = mult_order_ratio(a, b, ell) // 2
    if k < 1 or (pow(a, k, ell) + pow(b, k, ell)) % ell:
        raise ConsistencyError(f"witness {k} fails for ell={ell}, (a,b)=({a},{b})")
    if (k % 2 == 1) != oddly:
        raise ConsistencyError(f"witness parity disagrees with the verdict for ell={ell}")
    return Classification(True, oddly, evenly, k, tuple(trace), **kw)


def is_good(a: int, b: int, ell: int) -> bool:
    return classify(a, b, ell).good


def is_oddly_good(a: int, b: int, ell: int) -> bool:
    return classify(a, b, ell).oddly


def is_evenly_good(a: int, b: int, ell: int) -> bool:
    return classify(a, b, ell).evenly


_PARITY_CODE = {None: 0, "odd": 1, "even": 2}


def witness_search(
    a: int, b: int, ell: int, k_max: int, parity: Optional[str] = None
) -> Optional[tuple[int, str]]:
    """Smallest k <= k_max with ell | a^k + b^k, scanning k = 1, 2, ...

    ``parity`` restricts the scan to odd or even k. Returns ``(k, "odd"|"even")``
    or None. The scan is exhaustive once k_max reaches ord_ell(a/b) (twice that
    when a parity is requested).
    """
    if parity not in _PARITY_CODE:
        raise DomainError(f"parity must be None, 'odd' or 'even', got {parity!r}")
    if ell < 1 or k_max < 1:
        return None
    ar, br = a % ell, b % ell
    code = _PARITY_CODE[parity]
    if ell < K.INT64_SAFE_MODULUS:
        k = int(K.witness_scan(ar, br, ell, k_max, code))
    else:
        k = K.witness_scan_loop(ar, br, ell, k_max, code)
    if k == 0:
        return None
    return k, "odd" if k % 2 else "even"


def good_table(a: int, b: int, bound: int, cls: str = "good") -> list[int]:
    """All ell <= bound in the requested class, ascending."""
    GoodnessQuery(a, b, 1)
    if cls not in CLASSES:
        raise DomainError(f"unknown class {cls!r}; expected one of {CLASSES}")
    return [ell for ell in range(1, bound + 1) if classify(a, b, ell).member(cls)]
