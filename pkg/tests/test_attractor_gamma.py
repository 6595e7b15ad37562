import pytest
from hypothesis import given, settings, strategies as st

import oracles
from repsense.adversarial_families import generate
from repsense.attractor_gamma import gamma, gamma_exact, is_attractor
from repsense.lz_family import lzsssr
from repsense.text_core import Inconclusive

texts = st.lists(st.integers(0, 2), min_size=1, max_size=9).map(tuple)


def test_examples():
    assert is_attractor((0,) * 6, [1])
    assert not is_attractor((0, 1), [1])
    assert gamma((0,) * 9) == 1


def test_family_k2():
    inst = generate("gamma-sub", k=2)
    assert len(inst.text) == 14
    assert is_attractor(inst.text, inst.extras["witness"])
    assert gamma(inst.text) == 4
    assert gamma(inst.edited) == 6


@settings(max_examples=60)
@given(texts, st.data())
def test_is_attractor_matches_definition(T, data):
    G = data.draw(st.sets(st.integers(1, len(T)), max_size=len(T)))
    assert is_attractor(T, G) == oracles.is_attractor_naive(T, G)


@settings(max_examples=60)
@given(texts)
def test_witness_is_minimum(T):
    res = gamma_exact(T)
    assert res.exact and len(res.witness) == res.value
    assert oracles.is_attractor_naive(T, res.witness)
    assert res.value == oracles.gamma_naive(T)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=18).map(tuple))
def test_bounded_by_lzss(T):
    assert gamma(T, limit=18) <= lzsssr(T).z


def test_over_limit_is_inconclusive():
    T = tuple(i % 3 for i in range(30))
    assert not gamma_exact(T, limit=10).exact
    with pytest.raises(Inconclusive):
        gamma(T, limit=10)
