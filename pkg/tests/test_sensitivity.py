from fractions import Fraction

import pytest

from repsense.adversarial_families import generate
from repsense.lz_family import lz77
from repsense.sensitivity_harness import (MEASURES, all_texts, evaluate, global_worst, lookup,
                                          sensitivity)
from repsense.text_core import AlphabetPolicy, EditOp, Text, canonical_tuple

BIN = AlphabetPolicy.fresh(1, (0, 1))


def test_delta_unary_substitution():
    rep = sensitivity("delta", (0,) * 6, "sub")
    assert rep.additive == 1 and rep.multiplicative == 2
    assert rep.additive_witness == EditOp.sub(1, 1)


def test_delta_unary_deletion():
    rep = sensitivity("delta", (0,) * 6, "del")
    assert rep.additive == 0 and rep.multiplicative == 1


@pytest.mark.parametrize("p", [3, 4, 5])
def test_z77_q_string(p):
    rep = sensitivity("z77", generate("lz77-q-sub", p=p).text, "sub")
    assert rep.additive == p - 1 and rep.multiplicative == Fraction(2 * p - 1, p)


def test_maxima_come_from_listed_edits():
    rep = sensitivity("zss", Text((0, 1, 0, 0, 1, 1, 0)), "ins")
    values = {r.edit: r.value for r in rep.results}
    assert values[rep.additive_witness] - rep.base == rep.additive
    assert Fraction(values[rep.multiplicative_witness], rep.base) == rep.multiplicative
    assert rep.additive == max(v for v in values.values()) - rep.base


def test_global_delta_n8():
    gw = global_worst("delta", 8, 2, "sub")
    assert gw.multiplicative == 2 and gw.additive == 1 and not gw.partial


def test_global_z77_deletions_n10():
    for T in all_texts(10, 2, canonical=True):
        rep = sensitivity("z77", T, "del", BIN)
        assert rep.additive <= lz77(T).z - 2


def test_global_gis_n6():
    policy = AlphabetPolicy.fixed((0, 1, 2))
    for kind in ("sub", "ins", "del"):
        assert global_worst("gis", 6, 3, kind, policy).multiplicative <= 4


def test_parallel_matches_serial():
    a = global_worst("zss", 8, 2, "ins", BIN, jobs=1)
    b = global_worst("zss", 8, 2, "ins", BIN, jobs=2)
    assert a == b


def test_canonicalization_only_for_renaming_invariant_measures():
    assert global_worst("z77", 5, 3, "sub").texts == len(all_texts(5, 3, True))
    assert global_worst("r", 5, 2, "sub").texts == 32
    assert not MEASURES["r"].order_insensitive and not MEASURES["gis"].order_insensitive


def test_order_insensitive_flags_hold():
    T = (0, 1, 1, 2, 0, 1, 2, 2, 0)
    swapped = tuple({0: 2, 1: 0, 2: 1}[c] for c in T)
    for name, m in MEASURES.items():
        if m.order_insensitive:
            assert evaluate(name, T) == evaluate(name, swapped), name
    assert canonical_tuple(swapped) == canonical_tuple(T)


def test_partial_when_inconclusive():
    rep = sensitivity("gamma", tuple(range(3)) * 2, "ins", limits={"gamma": 6})
    assert rep.partial and any(r.value is None for r in rep.results)


def test_unknown_measure_suggests():
    with pytest.raises(KeyError, match="gamma"):
        lookup("gama")
