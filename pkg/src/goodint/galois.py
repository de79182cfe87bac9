"""Arithmetic in finite fields F_{p^m} and in polynomial rings over them.

Field elements are plain ints: the element c_0 + c_1 y + ... + c_{m-1} y^{m-1}
of F_p[y]/(M(y)) is encoded as c_0 + c_1 p + ... + c_{m-1} p^{m-1}. This
"integer code" is also the canonical ordering used whenever something has to
be chosen deterministically (moduli, generators, roots).

The defining polynomial M is the smallest monic irreducible of degree m in
that ordering, e.g. x^2 + x + 1 for F_4 and x^4 + x + 1 for F_16. The
canonical generator ``a`` used when printing elements is the smallest
primitive element; for F_4 it is the class of y, so a^2 = a + 1.

:class:`PrimeExtension` is a second, table-free representation used for the
large splitting fields F_{q^e} needed to compute minimal polynomials, and
:class:`Tower` embeds a small field into such a large one.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import ConsistencyError, DomainError, SizeError
from .numtheory import factorize, is_prime

#: Extension fields keep full q x q lookup tables; bigger fields are refused.
MAX_TABLE_ORDER = 1024


def int_to_digits(code: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, p)
        out.append(r)
    return out


def digits_to_int(digits: Iterable[int], p: int) -> int:
    code = 0
    for d in reversed(list(digits)):
        code = code * p + int(d)
    return code


# ---------------------------------------------------------------------------
# polynomials over F_p as int64 vectors (low degree first); used for moduli


def _fp_trim(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(v)
    return v[: nz[-1] + 1] if nz.size else v[:0]


def _fp_powmod(base: np.ndarray, exp: int, mod: np.ndarray, red: np.ndarray, p: int) -> np.ndarray:
    k = len(mod) - 1
    result = np.zeros(k, dtype=np.int64)
    result[0] = 1
    b = base.copy()
    while exp:
        if exp & 1:
            result = K.polymulmod(result, b, mod, red, p)
        exp >>= 1
        if exp:
            b = K.polymulmod(b, b, mod, red, p)
    return result


_SCREEN_STEPS = 8


def is_irreducible_fp(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    A few Ben-Or steps (gcd with x^{p^i} - x for small i) reject most
    reducible inputs early; survivors get Rabin's test, which needs one gcd
    per prime factor of the degree.
    """
    mod = np.asarray(coeffs, dtype=np.int64) % p
    k = len(mod) - 1
    if k < 1 or mod[k] != 1:
        raise DomainError("is_irreducible_fp expects a monic polynomial of degree >= 1")
    if k == 1:
        return True
    if mod[0] == 0:
        return False
    red = K.reduction_matrix(mod, p)
    x = np.zeros(k, dtype=np.int64)
    x[1] = 1
    rabin_steps = {k // r for r in factorize(k).primes}

    def coprime_to_x_minus(h) -> bool:
        diff = h.copy()
        diff[1] = (diff[1] - 1) % p
        g = K.polygcd_mod_p(mod.copy(), diff, p)
        return g.shape[0] == 1

    h = x.copy()
    for i in range(1, k + 1):
        h = _fp_powmod(h, p, mod, red, p)
        if i < k and (i <= min(_SCREEN_STEPS, k // 2) or i in rabin_steps):
            if not coprime_to_x_minus(h):
                return False
    return bool(np.array_equal(h, x))


@lru_cache(maxsize=None)
def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over F_p, by integer code.

    Returns the coefficient tuple, low degree first, leading 1 included.
    """
    if k == 1:
        return (0, 1)
    code = 0
    while True:
        low = int_to_digits(code, p, k)
        code += 1
        if low[0] == 0:
            continue
        if (sum(low) + 1) % p == 0:  # x = 1 is a root
            continue
        cand = low + [1]
        if is_irreducible_fp(cand, p):
            return tuple(cand)


# ---------------------------------------------------------------------------
# small fields with lookup tables


@dataclass(eq=False)
class GF:
    """The field F_{p^m}; build instances with :func:`field_make`."""

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False)

    def __post_init__(self):
        self.q = self.p**self.m
        self.tabled = self.q <= MAX_TABLE_ORDER
        if self.m > 1 and not self.tabled:
            raise SizeError(f"F_{self.p}^{self.m} exceeds the table size limit {MAX_TABLE_ORDER}")
        if self.tabled:
            self._build_tables()

    # -- construction --------------------------------------------------------

    def _slow_mul(self, x: int, y: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return x * y % p
        a = int_to_digits(x, p, m)
        b = int_to_digits(y, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * self.modulus[j]) % p
        return digits_to_int(prod[:m], p)

    def _slow_order(self, x: int) -> int:
        n = self.q - 1
        order = n
        for r, _ in factorize(n).factors:
            while order % r == 0 and self._slow_pow(x, order // r) == 1:
                order //= r
        return order

    def _slow_pow(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        gen = next(g for g in range(1, q) if self._slow_order(g) == q - 1)
        self.generator = gen
        exp = np.empty(2 * (q - 1), dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = self._slow_mul(x, gen)
        exp[q - 1 :] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self.exp, self.log = exp, log
        codes = np.arange(q, dtype=np.int64)
        self.coords = np.stack([(codes // p**j) % p for j in range(m)], axis=1)
        weights = p ** np.arange(m, dtype=np.int64)
        self.add_t = ((self.coords[:, None, :] + self.coords[None, :, :]) % p) @ weights
        self.neg_t = ((-self.coords) % p) @ weights
        lg = log.copy()
        mul = exp[(lg[:, None] + lg[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul_t = mul
        self.inv_t = np.zeros(q, dtype=np.int64)
        self.inv_t[1:] = exp[(-log[1:]) % (q - 1)]

    # -- element arithmetic --------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        return int(self.add_t[x, y])

    def neg(self, x: int) -> int:
        if self.m == 1:
            return -x % self.p
        return int(self.neg_t[x])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        return int(self.mul_t[x, y])

    def inv(self, x: int) -> int:
        if x % self.q == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(x, -1, self.p)
        return int(self.inv_t[x])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(x, e, self.p)
        return int(self.exp[(int(self.log[x]) * e) % (self.q - 1)])

    def frobenius(self, x: int, power: int) -> int:
        """x -> x^power; meant for power a power of p."""
        return self.pow(x, power)

    def frobenius_table(self, power: int) -> np.ndarray:
        if not self.tabled:
            raise SizeError("frobenius tables need a tabled field")
        out = np.zeros(self.q, dtype=np.int64)
        out[1:] = self.exp[(self.log[1:] * power) % (self.q - 1)]
        return out

    def elem_coords(self, x: int) -> list[int]:
        return int_to_digits(x, self.p, self.m)

    # -- text ----------------------------------------------------------------

    def format_elem(self, x: int) -> str:
        if self.m == 1 or x in (0, 1):
            return str(x)
        j = int(self.log[x])
        return "a" if j == 1 else f"a^{j}"

    @property
    def name(self) -> str:
        return f"F_{self.q}"

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"


@lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> GF:
    """F_{p^m} with the least irreducible modulus."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if m < 1:
        raise DomainError("extension degree must be >= 1")
    return GF(p, m, least_irreducible(p, m))


def field_of_order(q: int) -> GF:
    fq = factorize(q)
    if len(fq.factors) != 1:
        raise DomainError(f"{q} is not a prime power")
    p, m = fq.factors[0]
    return field_make(p, m)


# ---------------------------------------------------------------------------
# polynomials over a small field


class FqPoly:
    """Dense univariate polynomial over a :class:`GF`, low degree first.

    Immutable; coefficients are field element codes with no trailing zeros.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        if field.m == 1:
            c = [v % field.p for v in c]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def monomial(cls, field: GF, degree: int, coeff: int = 1) -> "FqPoly":
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def x_pow_minus_one(cls, field: GF, n: int) -> "FqPoly":
        return cls(field, [field.neg(1)] + [0] * (n - 1) + [1])

    # -- basics --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.p, self.field.m, self.coeffs))
        return self._hash

    def _check(self, other: "FqPoly") -> None:
        if other.field is not self.field:
            raise DomainError("polynomials over different fields")

    def _arr(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.int64)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        f = self.field
        n = max(len(self), len(other))
        return FqPoly(f, [f.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return FqPoly(self.field)
        f = self.field
        a, b = self._arr(), other._arr()
        if f.m == 1 and f.p < (1 << 20) and min(len(a), len(b)) < 4096:
            prod = np.convolve(a, b) % f.p
        elif f.tabled:
            prod = K.polymul_table(a, b, f.add_t, f.mul_t, f.coords, f.p)
        else:
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(self.coeffs):
                for j, bj in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + ai * bj) % f.p
            prod = out
        return FqPoly(f, prod)

    def scale(self, c: int) -> "FqPoly":
        f = self.field
        return FqPoly(f, [f.mul(c, v) for v in self.coeffs])

    def __pow__(self, e: int) -> "FqPoly":
        if e < 0:
            raise DomainError("negative polynomial power")
        result = FqPoly(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = list(self.coeffs)
        dg = other.degree
        if len(r) - 1 < dg:
            return FqPoly(f), self
        inv_lead = f.inv(other.lead)
        quot = [0] * (len(r) - dg)
        g = other.coeffs
        for top in range(len(r) - 1, dg - 1, -1):
            c = r[top]
            if c == 0:
                continue
            qc = f.mul(c, inv_lead)
            quot[top - dg] = qc
            base = top - dg
            for j in range(dg + 1):
                if g[j]:
                    r[base + j] = f.sub(r[base + j], f.mul(qc, g[j]))
        return FqPoly(f, quot), FqPoly(f, r[:dg])

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FqPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def map_coeffs(self, table: np.ndarray) -> "FqPoly":
        return FqPoly(self.field, [int(table[c]) for c in self.coeffs])

    # -- text ----------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FqPoly({self.field.name}: {format_poly(self)})"


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def reciprocal(f: FqPoly) -> FqPoly:
    """f*(x) = f(0)^{-1} x^deg f(1/x)."""
    if f.is_zero() or f[0] == 0:
        raise DomainError("reciprocal polynomial needs f(0) != 0")
    fld = f.field
    s = fld.inv(f[0])
    return FqPoly(fld, [fld.mul(s, c) for c in reversed(f.coeffs)])


def conj_reciprocal(f: FqPoly, sub_order: int) -> FqPoly:
    """f-dagger: reverse, raise every coefficient to sub_order, normalize.

    The field must have order sub_order^2.
    """
    fld = f.field
    if sub_order * sub_order != fld.q:
        raise DomainError(f"{fld.name} is not of order {sub_order}^2")
    if f.is_zero() or f[0] == 0:
        raise DomainError("conjugate-reciprocal polynomial needs f(0) != 0")
    s = fld.inv(fld.pow(f[0], sub_order))
    return FqPoly(fld, [fld.mul(s, fld.pow(c, sub_order)) for c in reversed(f.coeffs)])


# ---------------------------------------------------------------------------
# canonical text form:  x^4 + 2*x^3 + 1,  x^2 + a^2*x + a^2


def format_poly(f: FqPoly) -> str:
    if f.is_zero():
        return "0"
    fld = f.field
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        cs = fld.format_elem(c)
        if k == 0:
            terms.append(cs)
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(terms)


_FACTOR_RE = re.compile(r"\*?(?:(\d+)|a(?:\^(\d+))?|x(?:\^(\d+))?)")


def parse_poly(text: str, fld: GF) -> FqPoly:
    """Parse the canonical text form.

    Also accepts ``α`` for ``a``, ``**`` for ``^`` and juxtaposition such as ``2x^3``.
    """
    s = text.replace("α", "a").replace("−", "-").replace("**", "^").replace(" ", "")
    if not s:
        raise DomainError("empty polynomial text")
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        negate = False
        while term.startswith("-"):
            negate = not negate
            term = term[1:]
        coef, deg = 1, 0
        pos = 0
        while pos < len(term):
            mt = _FACTOR_RE.match(term, pos)
            if not mt or mt.end() == pos or (pos == 0 and term.startswith("*")):
                raise DomainError(f"cannot parse term {term!r} in {text!r}")
            pos = mt.end()
            num, apow, xpow = mt.groups()
            if num is not None:
                coef = fld.mul(coef, int(num) % fld.p)
            elif mt.group(0).lstrip("*").startswith("a"):
                if fld.m == 1:
                    raise DomainError(f"generator 'a' is not defined over prime field {fld.name}")
                coef = fld.mul(coef, fld.pow(fld.generator, int(apow) if apow else 1))
            else:
                deg += int(xpow) if xpow else 1
        if negate:
            coef = fld.neg(coef)
        coeffs[deg] = fld.add(coeffs.get(deg, 0), coef)
    top = max(coeffs) if coeffs else 0
    return FqPoly(fld, [coeffs.get(i, 0) for i in range(top + 1)])


# ---------------------------------------------------------------------------
# large fields F_p[y]/(f) without tables


class PrimeExtension:
    """F_{p^k} as F_p[y]/(f), f the least irreducible of degree k.

    Elements are int64 vectors of length k. Meant for splitting fields of
    x^N - 1, where k can be in the hundreds and tables are out of reach.
    """

    def __init__(self, p: int, k: int):
        if p >= K.INT64_SAFE_MODULUS:
            raise SizeError(f"characteristic {p} too large for the int64 kernels")
        self.p, self.k = p, k
        self.order = p**k
        self.mod = np.asarray(least_irreducible(p, k), dtype=np.int64)
        self.red = K.reduction_matrix(self.mod, p)

    def zero(self) -> np.ndarray:
        return np.zeros(self.k, dtype=np.int64)

    def one(self) -> np.ndarray:
        v = self.zero()
        v[0] = 1
        return v

    def from_code(self, code: int) -> np.ndarray:
        return np.asarray(int_to_digits(code, self.p, self.k), dtype=np.int64)

    def code(self, v: np.ndarray) -> int:
        return digits_to_int(v.tolist(), self.p)

    def key(self, v: np.ndarray) -> tuple[int, ...]:
        """Sort key agreeing with the integer-code order."""
        return tuple(int(c) for c in v[::-1])

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def scale(self, c: int, x):
        return c * x % self.p

    def mul(self, x, y):
        return K.polymulmod(x, y, self.mod, self.red, self.p)

    def pow(self, x, e: int):
        return _fp_powmod(x, e, self.mod, self.red, self.p)

    def is_one(self, x) -> bool:
        return bool(x[0] == 1 and not x[1:].any())

    def has_order(self, x, n: int) -> bool:
        """True iff x has multiplicative order exactly n (n | order - 1)."""
        if not self.is_one(self.pow(x, n)):
            return False
        return all(not self.is_one(self.pow(x, n // r)) for r in factorize(n).primes)

    def least_of_order(self, n: int) -> np.ndarray:
        """z^((order-1)/n) for the least z (by code) for which it has order n."""
        if (self.order - 1) % n:
            raise DomainError(f"{n} does not divide {self.order} - 1")
        cof = (self.order - 1) // n
        code = 1
        while True:
            cand = self.pow(self.from_code(code), cof)
            if self.has_order(cand, n):
                return cand
            code += 1


@lru_cache(maxsize=None)
def prime_extension(p: int, k: int) -> PrimeExtension:
    return PrimeExtension(p, k)


class Tower:
    """F_{q^e} for q = p^m, with an explicit embedding of F_q into it.

    The embedding sends the class of y in F_q to the least root (by code) of
    F_q's modulus inside the big field.
    """

    def __init__(self, base: GF, e: int):
        self.base, self.e = base, e
        p, m = base.p, base.m
        self.big = prime_extension(p, m * e)
        if m == 1:
            self.theta = None
            self.basis = [self.big.one()]
        else:
            w = self.big.least_of_order(base.q - 1)
            roots = []
            x = self.big.one()
            for _ in range(base.q - 1):
                if not self._eval_fp(base.modulus, x).any():
                    roots.append(x)
                x = self.big.mul(x, w)
            if len(roots) != m:
                raise ConsistencyError(f"found {len(roots)} roots of the modulus of {base.name}, expected {m}")
            self.theta = min(roots, key=self.big.key)
            self.basis = [self.big.one()]
            for _ in range(m - 1):
                self.basis.append(self.big.mul(self.basis[-1], self.theta))

    def _eval_fp(self, coeffs: Sequence[int], x: np.ndarray) -> np.ndarray:
        acc = self.big.zero()
        for c in reversed(coeffs):
            acc = self.big.mul(acc, x)
            acc[0] = (acc[0] + c) % self.big.p
        return acc

    def embed(self, code: int) -> np.ndarray:
        acc = self.big.zero()
        for j, d in enumerate(int_to_digits(code, self.base.p, self.base.m)):
            if d:
                acc = (acc + d * self.basis[j]) % self.big.p
        return acc

    def embedding_matrix(self) -> np.ndarray:
        """Columns are the images of y^j, j < m; maps base coords to big coords."""
        return np.stack(self.basis, axis=1)

    def eval_base_poly(self, f: FqPoly, x: np.ndarray) -> np.ndarray:
        acc = self.big.zero()
        for c in reversed(f.coeffs):
            acc = self.big.add(self.big.mul(acc, x), self.embed(c))
        return acc

    def project(self, v: np.ndarray) -> int:
        """Inverse of :meth:`embed`; raise if v is not in the image."""
        mat = np.concatenate([self.embedding_matrix(), v[:, None]], axis=1)
        red, rank, piv = K.rref_mod_p(mat, self.big.p)
        m = self.base.m
        if rank != m or piv[m - 1] != m - 1:
            raise ConsistencyError("element does not lie in the embedded base field")
        return digits_to_int(red[:m, m].tolist(), self.base.p)


@lru_cache(maxsize=None)
def tower(base: GF, e: int) -> Tower:
    return Tower(base, e)
