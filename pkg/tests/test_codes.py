import itertools
import random

import pytest
from hypothesis import given, strategies as st

from goodint import codes as C
from goodint.errors import DomainError, SizeError
from goodint.factorizer import factor_table
from goodint.galois import FqPoly, format_poly, parse_poly
from oracles import F4, PrimeField, gram_is_lcd, is_self_orthogonal, monic_irreducible_divisors, pmul


def code_from_text(table, factors: dict[str, int]) -> C.CyclicCode:
    """Exponent vector from {poly text: exponent}; unspecified factors get 0."""
    idx = {format_poly(r.poly): i for i, r in enumerate(table.records)}
    exps = [0] * len(table.records)
    for text, e in factors.items():
        exps[idx[format_poly(parse_poly(text, table.field))]] = e
    return C.CyclicCode(table, tuple(exps))


def test_zero_and_whole():
    t = factor_table(30, 2)
    z, w = C.zero_code(t), C.whole_space(t)
    assert C.dual_code(z) == w and C.dual_code(w) == z
    assert z.generator() == FqPoly(t.field, [1] + [0] * 29 + [1])
    assert C.is_lcd(z) and C.is_lcd(w)
    assert not C.is_self_dual(z)
    rep = C.brute_verify(z)
    assert rep["dim"] == 0 and rep["lcd"]


def test_known_self_dual_length30_f2():
    t = factor_table(30, 2)
    base = {"x + 1": 1, "x^2 + x + 1": 1, "x^4 + x^3 + x^2 + x + 1": 1}
    printed = [
        {**base, "x^4 + x + 1": 2},
        {**base, "x^4 + x^3 + 1": 2},
        {**base, "x^4 + x + 1": 1, "x^4 + x^3 + 1": 1},
    ]
    codes = [code_from_text(t, g) for g in printed]
    for c in codes:
        assert C.is_self_dual(c)
        assert C.dual_code(c) == c
        assert C.brute_verify(c)["self_dual"] and c.dim == 15
    assert {c.exponents for c in codes} == {c.exponents for c in C.enumerate_codes(30, 2, 1, "euclidean", "self_dual")}


def test_known_lcd_length60_f3():
    t = factor_table(60, 3)
    printed = [
        {"x + 2": 3, "x^4 + 2*x^3 + x^2 + 2*x + 1": 3},
        {"x^2 + 1": 3, "x + 1": 3, "x^4 + x^3 + 2*x + 1": 3, "x^4 + 2*x^3 + x + 1": 3},
        {"x + 2": 3, "x^4 + x^3 + 2*x + 1": 3, "x^4 + 2*x^3 + x + 1": 3},
    ]
    for g in printed:
        c = code_from_text(t, g)
        assert C.is_lcd(c) and C.gcd_lcd(c)
        assert C.brute_verify(c)["dim_intersection"] == 0
    bad = code_from_text(t, {"x + 2": 1})
    assert not C.is_lcd(bad) and not C.gcd_lcd(bad)


def test_known_hermitian_generators_f4():
    t = factor_table(30, 2, 1, "hermitian")
    scrim = ["x + 1", "x^2 + a^2*x + 1", "x + a", "x^2 + a*x + 1", "x + a^2"]
    p1 = ["x^2 + a*x + a", "x^2 + x + a"]
    p2 = ["x^2 + a^2*x + a^2", "x^2 + x + a^2"]
    lcd = [
        {f: 2 for f in scrim},
        {"x + 1": 2, **{f: 2 for f in p2}},
        {f: 2 for f in p1 + p2},
    ]
    for g in lcd:
        c = code_from_text(t, g)
        assert C.is_lcd(c) and C.brute_verify(c)["lcd"]
    sd = [
        {f: 1 for f in scrim + p1 + p2},
        {**{f: 1 for f in scrim}, "x^2 + a*x + a": 2, "x^2 + a^2*x + a^2": 2},
        {**{f: 1 for f in scrim}, "x^2 + x + a": 2, "x^2 + x + a^2": 2},
    ]
    listed = {c.exponents for c in C.enumerate_codes(30, 2, 1, "hermitian", "self_dual")}
    for g in sd:
        c = code_from_text(t, g)
        assert C.is_self_dual(c) and C.brute_verify(c)["self_dual"]
        assert c.exponents in listed


def test_hermitian_counts_against_independent_oracle():
    """Exhaustive check with hand-written F_4 arithmetic and Gram-matrix tests."""
    F = F4()
    fs = monic_irreducible_divisors(F, 15, 2)
    assert len(fs) == 9
    lcd = 0
    for mask in itertools.product([0, 1], repeat=9):
        g = [1]
        for f, e in zip(fs, mask):
            if e:
                g = pmul(F, g, f)
        lcd += gram_is_lcd(F, g, 15, hermitian=True)
    assert lcd == C.count_lcd(15, 2, 1, "hermitian") == C.count_lcd(30, 2, 1, "hermitian") == 64
    degs = [len(f) - 1 for f in fs]
    sd = 0
    for ex in itertools.product([0, 1, 2], repeat=9):
        if sum(d * e for d, e in zip(degs, ex)) != 15:
            continue
        g = [1]
        for f, e in zip(fs, ex):
            for _ in range(e):
                g = pmul(F, g, f)
        sd += is_self_orthogonal(F, g, 30, hermitian=True)
    assert sd == C.count_self_dual(30, 2, 1, "hermitian") == 27


def test_euclidean_count_against_independent_oracle():
    F = PrimeField(2)
    fs = monic_irreducible_divisors(F, 15, 4)
    degs = [len(f) - 1 for f in fs]
    sd = 0
    for ex in itertools.product([0, 1, 2], repeat=len(fs)):
        if sum(d * e for d, e in zip(degs, ex)) != 15:
            continue
        g = [1]
        for f, e in zip(fs, ex):
            for _ in range(e):
                g = pmul(F, g, f)
        sd += is_self_orthogonal(F, g, 30, hermitian=False)
    assert sd == C.count_self_dual(30, 2) == 3


def test_counts_examples():
    assert C.count_lcd(60, 3) == 64
    assert C.count_lcd(1, 2) == 2
    assert C.count_self_dual(30, 2) == 3
    assert C.count_self_dual(15, 2) == 0
    assert C.record_counts(60, 3) == (5, 1)
    with pytest.raises(DomainError):
        C.count_codes(30, 2, 1, "euclidean", "mds")


@pytest.mark.parametrize("n,p,m,dual", [(21, 2, 1, "euclidean"), (26, 3, 1, "euclidean"), (15, 2, 2, "euclidean"),
                                        (21, 2, 1, "hermitian"), (20, 3, 1, "hermitian"), (28, 2, 1, "hermitian")])
def test_dual_against_oracles(n, p, m, dual):
    t = factor_table(n, p, m, dual)
    M = t.multiplicity
    rng = random.Random(n * 1000 + p)
    space = [tuple(rng.randint(0, M) for _ in t.records) for _ in range(60)]
    space += [tuple(v) for v in itertools.islice(itertools.product(range(M + 1), repeat=len(t)), 40)]
    for exps in space:
        c = C.CyclicCode(t, exps)
        d = C.dual_code(c)
        assert C.dual_code(d) == c
        assert d.generator() == C.gcd_dual_generator(c)
        assert C.is_lcd(c) == C.gcd_lcd(c)
        rep = C.brute_verify(c)
        assert rep["dim"] + rep["dim_dual"] == n
        assert rep["dim_dual"] == d.dim
        assert C.contains_rows(C.brute_dual_basis(c), C.generator_matrix(d), t.field)
        assert rep["lcd"] == C.is_lcd(c)
        assert rep["self_dual"] == C.is_self_dual(c)
        assert rep["dim_intersection"] == C.intersection_with_dual(c).dim


def test_enumeration_order_and_limit(monkeypatch):
    seq = [c.exponents for c in C.enumerate_codes(30, 2, 1, "hermitian", "lcd")]
    assert seq == sorted(seq) and len(seq) == 64
    assert len(list(C.enumerate_codes(30, 2, 1, "hermitian", "lcd", limit=5))) == 5
    monkeypatch.setenv("GOODINT_LIMIT", "7")
    assert len(list(C.enumerate_codes(30, 2, 1, "hermitian", "lcd"))) == 7
    monkeypatch.setenv("GOODINT_LIMIT", "lots")
    with pytest.raises(DomainError):
        C.default_limit()


def test_no_self_dual_in_odd_characteristic():
    assert list(C.enumerate_codes(2, 3, 1, "euclidean", "self_dual")) == []
    assert list(C.enumerate_codes(15, 2, 1, "euclidean", "self_dual")) == []


def test_guards():
    t = factor_table(257, 2)
    with pytest.raises(SizeError):
        C.brute_verify(C.whole_space(t))
    t = factor_table(15, 2)
    with pytest.raises(DomainError):
        C.dual_code(C.whole_space(t), "hermitian")
    with pytest.raises(DomainError):
        C.CyclicCode(t, (0,))
    with pytest.raises(DomainError):
        C.CyclicCode(t, (2,) * len(t))


def test_export_fields():
    t = factor_table(30, 2, 1, "hermitian")
    d = C.whole_space(t).to_dict()
    assert set(d) == {"n", "field", "duality", "generator", "exponents", "dim"}
    assert d["field"] == "2^2" and d["dim"] == 30 and d["generator"] == "1"


@given(st.integers(1, 64), st.sampled_from([2, 3, 5]))
def test_existence(n, p):
    has = C.count_self_dual(n, p) > 0
    assert has == (p == 2 and n % 2 == 0)
