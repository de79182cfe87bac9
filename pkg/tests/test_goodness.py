import math

import pytest
from hypothesis import given, strategies as st

from goodint import goodness as G
from goodint.errors import DomainError
from oracles import naive_witnesses
from reference_tables import EVENLY, GOOD, ODDLY


@pytest.mark.parametrize(
    "a,b,ell,label,k",
    [
        (11, 12, 1625, "evenly", 150),
        (11, 12, 6125, "bad", None),
        (11, 12, 3875, "bad", None),
        (5, 7, 1573, "oddly", 165),
        (5, 7, 3146, "oddly", 165),
        (5, 7, 6292, "oddly", 165),
        (5, 7, 11849, "evenly", 340),
        (5, 7, 23698, "evenly", 340),
        (5, 7, 4 * 11849, "bad", None),
        (5, 7, 1, "oddly & evenly", 1),
        (3, 5, 2, "oddly & evenly", 1),
    ],
)
def test_worked_examples(a, b, ell, label, k):
    v = G.classify(a, b, ell)
    assert v.label == label
    assert v.witness_k == k
    if k is not None:
        assert (pow(a, k, ell) + pow(b, k, ell)) % ell == 0


@pytest.mark.parametrize("beta", range(3, 9))
def test_high_powers_of_two_are_bad(beta):
    assert not G.is_good(5, 7, 2**beta * 1573)


def test_trace_names_the_branch():
    assert G.classify(11, 12, 6125).trace == (G.TAG_S_MIXED,)
    assert G.classify(11, 12, 1625).trace == (G.TAG_S_HIGH,)
    assert G.classify(5, 7, 6292).trace == (G.TAG_S_ONE, G.TAG_POW2_OK)
    assert G.classify(5, 7, 4 * 11849).trace[-1] == G.TAG_BETA2_NEEDS_S1
    assert G.classify(2, 3, 4).trace == (G.TAG_NOT_COPRIME,)
    assert G.classify(1, 3, 8).trace == (G.TAG_POW2_FAIL,)
    assert G.classify(3, 5, 8).trace == (G.TAG_POW2_OK, G.TAG_POW2_ONLY)
    assert G.classify(1, 4, 3).trace == (G.TAG_S_ZERO,)
    assert G.classify(1, 2, 10).trace == (G.TAG_NOT_COPRIME,)
    assert G.classify(3, 5, 2 * 17).trace == (G.TAG_S_HIGH, G.TAG_BETA1)
    for ell in range(1, 200):
        assert set(G.classify(3, 5, ell).trace) <= set(G.TRACE_TAGS)


def test_s_values_recorded():
    v = G.classify(11, 12, 6125)
    assert (v.beta, v.d, v.s_values) == (0, 6125, (1, 2))


def test_domain_errors():
    with pytest.raises(DomainError):
        G.classify(2, 4, 3)
    with pytest.raises(DomainError):
        G.classify(0, 1, 3)
    with pytest.raises(DomainError):
        G.classify(1, 2, 0)
    with pytest.raises(DomainError):
        G.good_table(1, 2, 10, "sometimes")
    with pytest.raises(DomainError):
        G.witness_search(1, 2, 3, 10, parity="both")


@pytest.mark.parametrize("table,cls", [(GOOD, "good"), (ODDLY, "oddly"), (EVENLY, "evenly")])
def test_published_tables(table, cls):
    for (a, b), row in table.items():
        assert G.good_table(a, b, 49, cls) == row, (a, b, cls)


def test_witness_search_small():
    assert G.witness_search(11, 12, 1625, 1000) == (150, "even")
    assert G.witness_search(5, 7, 1573, 1000) == (165, "odd")
    assert G.witness_search(5, 7, 1573, 1000, parity="even") is None
    assert G.witness_search(11, 12, 6125, 10**4) is None
    assert G.witness_search(1, 2, 9, 10, parity="odd") == (3, "odd")


def test_witness_search_beyond_int64_modulus():
    ell = (1 << 31) + 11  # prime, above the int64 kernel bound
    k = G.witness_search(ell - 1, 1, ell, 5)
    assert k == (1, "odd")


pairs = st.tuples(st.integers(-40, 40), st.integers(-40, 40)).filter(
    lambda ab: ab[0] != 0 and ab[1] != 0 and math.gcd(*ab) == 1
)


@given(pairs, st.integers(1, 400))
def test_classify_matches_definition(ab, ell):
    a, b = ab
    v = G.classify(a, b, ell)
    seen = naive_witnesses(a, b, ell)
    assert v.good == bool(seen)
    assert v.oddly == ("odd" in seen)
    assert v.evenly == ("even" in seen)
    if v.good:
        assert (pow(a, v.witness_k, ell) + pow(b, v.witness_k, ell)) % ell == 0


@given(pairs, st.integers(1, 300))
def test_classes_disjoint_above_two(ab, ell):
    v = G.classify(*ab, ell)
    if ell > 2:
        assert not (v.oddly and v.evenly)
