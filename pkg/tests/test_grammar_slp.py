import pytest
from hypothesis import given, settings, strategies as st

import oracles
from repsense.gcis import gcis_build, to_slp
from repsense.grammar_slp import Slp, bisection, g_bsc, slp_expand, splice_grammar
from repsense.text_core import EditOp, apply_edit, enumerate_edits

texts = st.lists(st.integers(0, 2), min_size=1, max_size=64).map(tuple)


def test_single_symbol():
    assert g_bsc((3,)) == 1


@pytest.mark.parametrize("k", range(1, 8))
def test_power_of_two_unary_shape(k):
    G = bisection((0,) * 2 ** k)
    assert G.binary_rules == k and len(G.rules) == k + 1 and G.height == k + 1


@given(texts)
def test_expansion_and_sharing(T):
    G = bisection(T)
    assert slp_expand(G) == T
    assert G.size == oracles.bisection_size_naive(T)
    expansions = [slp_expand(Slp(G.rules, name)) for name in G.rules]
    assert len(set(expansions)) == len(expansions)


@settings(max_examples=150)
@given(texts, st.data())
def test_splice_grammar(T, data):
    kinds = ["sub", "ins", "del"] if len(T) > 1 else ["sub", "ins"]
    e = data.draw(st.sampled_from(list(enumerate_edits(T, data.draw(st.sampled_from(kinds))))))
    G = bisection(T)
    G2 = splice_grammar(G, e)
    assert slp_expand(G2) == apply_edit(T, e)
    assert G2.size <= 2 * G.size


@pytest.mark.parametrize("k", range(2, 8))
def test_unary_substitution_splice(k):
    T = (0,) * 2 ** k
    G = bisection(T)
    G2 = splice_grammar(G, EditOp.sub(2 ** k, 1))
    assert slp_expand(G2) == T[:-1] + (1,)
    assert G2.size <= 2 * G.size
    assert g_bsc(T[:-1] + (1,)) - g_bsc(T) == 2 * (k - 1) + 1


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40).map(tuple))
def test_gcis_export_round_trip(T):
    assert slp_expand(to_slp(gcis_build(T))) == T


def test_splice_identity_free_single_rule():
    G = Slp({"S": (0, 1, 0)}, "S")
    assert slp_expand(splice_grammar(G, EditOp.delete(2))) == (0, 0)
    with pytest.raises(ValueError):
        splice_grammar(G, EditOp.ins(5, 1))
