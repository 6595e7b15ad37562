import io
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from repsense.adversarial_families import generate, verify
from repsense.cli import (emit_records, emit_table, from_records, measure_detail, parse_records, run,
                          to_records)
from repsense.relations import check_relations
from repsense.sensitivity_harness import global_worst, sensitivity
from repsense.text_core import as_text


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def round_trip(obj):
    again = from_records(parse_records(emit_records(to_records(obj))))
    assert again == obj
    return again


def test_record_round_trips():
    round_trip(measure_detail("z77", as_text("abaabababababab$")))
    round_trip(measure_detail("delta", as_text("aab")))
    round_trip(sensitivity("delta", (0, 0, 1, 0), "ins"))
    round_trip(global_worst("zss", 5, 2, "del"))
    round_trip(check_relations(as_text("abab")))
    round_trip(emit_table(["delta"], sweep_n=4)[0])
    rep = verify(generate("gcis-sub", p=3))
    again = from_records(parse_records(emit_records(to_records(rep))))
    assert again.checks == rep.checks and again.instance.text == rep.instance.text


def test_annotation_strings_stay_text():
    rows = emit_table(["r"], sweep_n=0)
    assert all(from_records(to_records(r)) == r for r in rows)


def test_measure_worked_example():
    code, out = cli("measure", "--measure", "z77", "--text", "abaabababababab$")
    assert code == 0 and "6" in out and "a|b|aa|bab|ababa|bab$" in out


def test_family_verify_pass():
    code, out = cli("family", "--name", "gcis-sub", "--param", "p=6", "--verify")
    assert code == 0 and "PASS" in out and "actual 11" in out and "actual 31" in out


def test_sweep_delta():
    code, out = cli("sweep", "--measure", "delta", "--n", "9", "--sigma", "2", "--edit", "sub")
    assert code == 0 and "max AS = 1, max MS = 2/1" in out


def test_table_rows():
    rows = {(r.measure, r.edit): r for r in emit_table(["delta", "z77", "e"], sweep_n=0)}
    assert (rows["delta", "sub"].upper, rows["delta", "sub"].lower) == ("2", "2")
    assert (rows["delta", "del"].upper, rows["delta", "del"].lower) == ("1.5", "1.5")
    assert rows["delta", "del"].family_ratio == Fraction(91, 61)
    assert all((rows["z77", k].upper, rows["z77", k].lower) == ("2", "2") for k in ("sub", "ins", "del"))
    assert (rows["e", "del"].upper, rows["e", "del"].lower) == ("-", "2")


def test_exit_codes():
    assert cli("family", "--name", "cdawg-ins", "--param", "n=3", "--verify")[0] == 1
    assert cli("measure", "--measure", "gama", "--text", "ab")[0] == 2
    assert cli("measure", "--text", "ab")[0] == 2
    assert cli("family", "--name", "lz77-q-sub", "--param", "q=2")[0] == 2
    assert cli("measure", "--measure", "gamma", "--text", "aabbaabbabab", "--limits", "gamma=3")[0] == 3


def test_input_modes(tmp_path):
    tok = tmp_path / "t.txt"
    tok.write_text("0 1 0 0 1\n")
    raw = tmp_path / "t.bin"
    raw.write_bytes(b"abaab")
    _, a = cli("measure", "--measure", "zss", "--tokens", str(tok), "--format", "records")
    _, b = cli("measure", "--measure", "zss", "--bytes", str(raw), "--format", "records")
    assert parse_records(a)[0]["value"] == parse_records(b)[0]["value"] == 4


def test_dollar_is_ordinary_symbol():
    _, out = cli("measure", "--measure", "zss", "--text", "ab$", "--format", "records")
    rec = parse_records(out)[0]
    assert rec["text"] == [97, 98, 36] and rec["value"] == 3


def test_seeded_random_relations_repeat():
    argv = ["relations", "--random", "12", "2", "4", "--seed", "3", "--format", "records"]
    assert cli(*argv) == cli(*argv)
    other = cli("relations", "--random", "12", "2", "4", "--seed", "4", "--format", "records")
    assert other[1] != cli(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "repsense", "family", "--list"],
                          capture_output=True, text=True, env=dict(os.environ), timeout=60)
    assert proc.returncode == 0 and "gcis-sub" in proc.stdout
