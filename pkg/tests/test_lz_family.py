import pytest
from hypothesis import given, strategies as st

import oracles
from repsense.adversarial_families import generate
from repsense.lz_family import PARSERS, lz78_with_trie, reconstruct
from repsense.text_core import Text, as_text

W = "abaabababababab$"
V = "abaabababababab"


@pytest.mark.parametrize("name,text,expected", [
    ("z77", W, "a|b|aa|bab|ababa|bab$"),
    ("z77sr", W, "a|b|aa|bab|abababab$"),
    ("zss", V, "a|b|a|aba|ba|baba|bab"),
    ("zsssr", V, "a|b|a|aba|babababab"),
    ("z78", W, "a|b|aa|ba|bab|ab|aba|b$"),
    ("zend", W, "a|b|aa|ba|bab|ababab$"),
    ("z78", "aaaa", "a|aa|a"),
])
def test_worked_parses(name, text, expected):
    assert PARSERS[name](as_text(text)).render() == expected


@pytest.mark.parametrize("name", sorted(PARSERS))
def test_single_and_distinct_symbols(name):
    assert PARSERS[name]((7,)).z == 1
    assert PARSERS[name](tuple(range(6))).z == 6


def test_q_and_r_strings():
    Q = generate("lz77-q-sub", p=4).text
    assert Q == Text((0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 1))
    assert PARSERS["z77"](Q).z == 4
    R = Text((0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1))
    assert PARSERS["z77sr"](R).render() == "<0>|<0><0><0><1>|<0><0><0><0><1><1>"


@pytest.mark.parametrize("n", range(2, 12))
def test_unary_self_reference(n):
    assert PARSERS["z77sr"]((0,) * n).z == 2


@pytest.mark.parametrize("k", [4, 9, 16])
def test_lz78_family_base(k):
    assert PARSERS["z78"](generate("lz78-sub", k=k).text).z == 3 * k


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_lzend_family_base(p):
    q = p * (p + 1) // 2
    assert PARSERS["zend"](generate("lzend-sub", p=p).text).z == p + 1 + q


NAIVE = {
    "z77": lambda T: oracles.lz77_naive(T, False), "z77sr": lambda T: oracles.lz77_naive(T, True),
    "zss": lambda T: oracles.lzss_naive(T, False), "zsssr": lambda T: oracles.lzss_naive(T, True),
    "z78": oracles.lz78_naive, "zend": oracles.lzend_naive,
}


@pytest.mark.parametrize("name", sorted(PARSERS))
@given(T=st.lists(st.integers(0, 3), min_size=1, max_size=40).map(tuple))
def test_parse_matches_reference_and_decodes(name, T):
    fz = PARSERS[name](T)
    assert [tuple(p) for p in fz.pieces()] == NAIVE[name](T)
    assert reconstruct(fz) == T


@pytest.mark.parametrize("name", ["z77", "zss", "zend"])
@given(T=st.lists(st.integers(0, 2), min_size=1, max_size=30).map(tuple))
def test_sources_precede_factors(name, T):
    for f in PARSERS[name](T).factors:
        if f.source is not None:
            assert f.source + f.copied <= f.start


def test_lz78_trie_matches_phrases():
    fz, trie = lz78_with_trie(as_text(W))
    pieces = [tuple(p) for p in fz.pieces()]
    assert len(trie) == len(pieces)
    for (parent, sym), node in trie.items():
        head = pieces[parent - 1] if parent else ()
        assert pieces[node - 1] == head + (sym,)


def _shortest_unique_suffix_parse(T):
    """Each factor is the shortest prefix of the rest that occurs in T[1..end] only as a suffix."""
    out, i = [], 0
    while i < len(T):
        j = i + 1
        while j < len(T):
            f = T[i:j]
            if not any(T[s:s + len(f)] == f for s in range(0, j - len(f))):
                break
            j += 1
        out.append(T[i:j])
        i = j
    return out


def test_self_referencing_phrasings_agree():
    from itertools import product
    for n in range(1, 11):
        for T in product(range(2), repeat=n):
            assert PARSERS["z77sr"](T).z == len(_shortest_unique_suffix_parse(T)), T
