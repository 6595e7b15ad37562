import os
from itertools import product

import pytest
from hypothesis import given, strategies as st

from repsense.text_core import (AlphabetPolicy, EditOp, Inconclusive, Text, apply_edit, as_text,
                                canonicalize, check_edit, enumerate_edits, from_letters, limits,
                                parse_bytes, parse_tokens, render)

texts = st.lists(st.integers(0, 3), min_size=1, max_size=20).map(Text)


def test_substitution_example():
    assert apply_edit(from_letters("aab", "abc"), EditOp.sub(3, 2)) == from_letters("aac", "abc")


def test_unary_deletion():
    assert apply_edit(Text((0,) * 5), EditOp.delete(1)) == Text((0,) * 4)


def test_length_contract():
    T = as_text("abaabababababab$")
    for kind, delta in (("sub", 0), ("ins", 1), ("del", -1)):
        for e in enumerate_edits(T, kind):
            assert len(apply_edit(T, e)) == len(T) + delta


def test_enumeration_counts():
    ab = Text((0, 1))
    assert len(list(enumerate_edits(ab, "del"))) == 2
    assert [str(e) for e in enumerate_edits(ab, "sub", AlphabetPolicy.fixed((0, 1)))] == ["sub@1:1", "sub@2:0"]
    assert len(list(enumerate_edits(ab, "ins", AlphabetPolicy.fresh(1)))) == 9


def test_enumeration_order_is_position_then_symbol():
    edits = list(enumerate_edits(Text((0, 1, 0)), "ins"))
    assert edits == sorted(edits, key=lambda e: (e.position, e.symbol))


def test_canonicalize_examples():
    assert canonicalize(from_letters("bbac", "abc")) == Text((0, 0, 1, 2))
    assert canonicalize(Text((0, 0, 1, 2))) == Text((0, 0, 1, 2))


def test_canonical_classes_are_equality_patterns():
    for n in range(1, 7):
        by_canon, by_pattern = {}, {}
        for T in product(range(3), repeat=n):
            pattern = tuple(T[i] == T[j] for i in range(n) for j in range(i))
            by_canon.setdefault(canonicalize(T), set()).add(T)
            by_pattern.setdefault(pattern, set()).add(T)
        assert sorted(map(sorted, by_canon.values())) == sorted(map(sorted, by_pattern.values()))


@given(texts, st.data())
def test_inverse_restores_text(T, data):
    kind = data.draw(st.sampled_from(["sub", "ins", "del"] if len(T) > 1 else ["sub", "ins"]))
    e = data.draw(st.sampled_from(list(enumerate_edits(T, kind))))
    assert apply_edit(apply_edit(T, e), e.inverse(T)) == T


def test_invalid_edits_rejected():
    T = Text((0, 1))
    for e in (EditOp.sub(1, 0), EditOp.sub(3, 1), EditOp.delete(0), EditOp.ins(4, 0)):
        with pytest.raises(ValueError):
            check_edit(T, e)
    with pytest.raises(ValueError):
        EditOp(1, 2, "del")
    with pytest.raises(ValueError):
        Text((0, -1))


@pytest.mark.parametrize("spec", ["fixed(0,1)", "fresh(1)", "fresh(2;0,1)"])
def test_policy_round_trip(spec):
    assert str(AlphabetPolicy.parse(spec)) == spec


def test_fresh_policy_adds_unused_symbols():
    assert AlphabetPolicy.fresh(1, (0, 1)).alphabet_for((0, 0)) == (0, 1, 2)
    assert AlphabetPolicy.fresh(2).alphabet_for((5,)) == (5, 6, 7)


def test_input_modes():
    assert parse_tokens("3 1  4\n1") == Text((3, 1, 4, 1))
    assert parse_bytes(b"a$") == Text((97, 36))
    with pytest.raises(ValueError):
        parse_tokens("1 x")
    assert render(Text((97, 0, 40))) == "a<0><40>"


def test_limits_from_environment(monkeypatch):
    monkeypatch.setenv("REPSENSE_LIMITS", "gamma=30,b=12")
    assert limits() == {"gamma": 30, "b": 12, "e": 2000}
    monkeypatch.setenv("REPSENSE_LIMITS", "bogus=1")
    with pytest.raises(ValueError):
        limits()


def test_inconclusive_is_an_exception():
    assert issubclass(Inconclusive, Exception)
