from fractions import Fraction

import pytest

from repsense.adversarial_families import FAMILIES, generate, verify
from repsense.attractor_gamma import is_attractor
from repsense.bidirectional import validate_scheme
from repsense.lz_family import PARSERS
from repsense.text_core import check_edit

SMALL = {"k": 2, "p": 2, "m": 2, "n": 4, "h": 1}


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_every_family_generates(name):
    spec = FAMILIES[name]
    params = {p: SMALL[p] for p in spec.params if p in SMALL}
    if name.startswith("lz78") or name == "rev-fibonacci":
        params["k"] = 4
    inst = generate(name, **params)
    assert inst.family == name and len(inst.text) > 0
    check_edit(inst.text, inst.edit)
    assert generate(name, **params) == inst  # deterministic


def test_unknown_family_and_parameter():
    with pytest.raises(KeyError):
        generate("nope")
    with pytest.raises(ValueError):
        generate("lz77-q-sub", q=3)
    with pytest.raises(ValueError):
        generate("delta-del", m=0)


def test_lz77_q_p5():
    inst = generate("lz77-q-sub", p=5)
    assert PARSERS["z77"](inst.text).z == 5 and PARSERS["z77"](inst.edited).z == 9


def test_lz78_k50():
    assert PARSERS["z78"](generate("lz78-sub", k=50).text).z == 150


@pytest.mark.parametrize("p", [2, 3, 4])
def test_gcis_deletion(p):
    rep = verify(generate("gcis-del", p=p))
    assert rep.ok and [c.actual for c in rep.checks] == [p + 11, 4 * p + 15]


def test_lzend_p4():
    assert verify(generate("lzend-sub", p=4)).ok


def test_lzss_p3_substitution():
    rep = verify(generate("lzss-sub", p=3))
    assert rep.ok
    assert {c.actual for c in rep.checks if c.expectation.side == "T"} == {4 * 3 + 6}
    assert {c.actual for c in rep.checks if c.expectation.side == "T'"} == {4 * 3 + 18}


def test_delta_m3():
    rep = verify(generate("delta-del", m=3))
    assert rep.ok and rep.checks[0].actual == 2 and rep.checks[1].actual >= Fraction(29, 10)


def test_gamma_witness_and_b_scheme():
    g = generate("gamma-sub", k=3)
    assert is_attractor(g.text, g.extras["witness"]) and len(g.extras["witness"]) == 5
    b = generate("b-family", k=3)
    assert validate_scheme(b.text, b.extras["scheme"]) and b.extras["scheme"].size == 2 * 3 + 4


def test_inconclusive_checks_are_marked():
    rep = verify(generate("gamma-sub", k=3), limits={"gamma": 5})
    assert rep.inconclusive and not rep.ok
