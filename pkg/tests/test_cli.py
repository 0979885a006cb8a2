import hashlib
import io
import json
import subprocess
import sys

import pytest

from projgenus.cli import run
from projgenus.decomp import Witness
from projgenus.genus import GenusVector, membership_A, membership_B, parse_genus
from projgenus.profile import validate


def call(*argv, env_bound=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    return code, json.loads(out)


@pytest.fixture
def exr1_file(data_dir):
    return data_dir / "exr1.json"


@pytest.fixture
def second_file(data_dir):
    return data_dir / "second-example.json"


def test_validate(exr1_file):
    code, out, _ = call("validate", exr1_file)
    assert code == 0 and "k=12" in out
    code, doc = call_json("validate", exr1_file)
    assert doc["command"] == "validate"
    assert doc["input_digest"] == hashlib.sha256(exr1_file.read_bytes()).hexdigest()
    assert validate(doc["result"]["profile"]).ranks == ((2, 4), (3, 9))


def test_input_errors(tmp_path, exr1_file):
    bad = tmp_path / "bad.json"
    bad.write_text('{"k": 5, "blocks": [{"label": "x", "ranks": [2], "multiplicities": [2]}]}')
    assert call("validate", bad)[0] == 2
    bad.write_text("not json")
    assert call("validate", bad)[0] == 2
    assert call("validate", tmp_path / "missing.json")[0] == 2
    assert call("frobnicate", exr1_file)[0] == 2
    assert call("check", exr1_file, "--genus", "((1,2)")[0] == 2
    assert call("check", exr1_file, "--genus", "((1),(2,0))")[0] == 2
    assert call("decompose", exr1_file, "--genus", "((1,1),(2,0))")[0] == 2
    assert call("add", exr1_file, "--genus", "((1,0),(1,0))", "--genus", "((1,1),(2,0))")[0] == 2


def test_rank_monoid(exr1_file):
    code, doc = call_json("rank-monoid", exr1_file, "--upto", 100)
    assert code == 0 and doc["result"]["members"] == list(range(0, 101, 6))


def test_hilbert(exr1_file):
    code, doc = call_json("hilbert", exr1_file)
    gens = doc["result"]["generators"]
    assert code == 0 and len(gens) == 13
    assert sorted(g["rank"] for g in gens) == [6, 6, 12, 12, 12, 12, 12, 18, 18, 18, 18, 18, 36]
    profile = validate(json.loads(exr1_file.read_text()))
    for g in gens:
        assert membership_A(profile, GenusVector.of(*g["genus"])) == g["rank"]


def test_big_generators(exr1_file):
    code, doc = call_json("big-generators", exr1_file)
    profile = validate(json.loads(exr1_file.read_text()))
    gens = [GenusVector.of(*g) for g in doc["result"]["generators"]]
    assert code == 0 and len(gens) == 12
    assert all(membership_B(profile, g) for g in gens)


def test_traces(exr1_file):
    assert len(call_json("traces", exr1_file)[1]["result"]["traces"]) == 10
    assert len(call_json("traces", exr1_file, "--minimal")[1]["result"]["traces"]) == 4


def test_check(exr1_file):
    code, out, _ = call("check", exr1_file, "--genus", "((inf,1),(inf,0))")
    assert code == 0 and "in B" in out
    code, doc = call_json("check", exr1_file, "--genus", "((1,1),(2,0))")
    assert code == 0 and doc["result"]["rank"] == 6
    code, doc = call_json("check", exr1_file, "--genus", "((1,0),(1,0))")
    assert code == 1 and doc["result"]["block_ranks"] == [2, 3]


def test_decompose_round_trip(exr1_file, second_file):
    code, doc = call_json("decompose", exr1_file, "--genus", "((inf,1),(inf,0))")
    assert code == 0
    w = doc["result"]["witness"]
    witness = Witness(GenusVector.of(*w["a"]), GenusVector.of(*w["aprime"]), GenusVector.of(*w["target"]))
    assert witness.verify(validate(json.loads(exr1_file.read_text())))
    code, doc = call_json("decompose", second_file, "--genus", "((0,inf),(1,inf))")
    assert code == 1
    assert doc["result"]["obstruction"]["congruences"] == ["8x_{1,2} ≡ 0 mod 4", "2 + 4x_{2,2} ≡ 2 mod 4"]


def test_decide_fg(exr1_file, second_file):
    assert call("decide-fg", exr1_file)[0] == 0
    code, out, _ = call("decide-fg", second_file)
    assert code == 1 and "gcd(4,8)=4 does not divide 2" in out


def test_add(exr1_file):
    code, doc = call_json("add", exr1_file, "--genus", "((inf,1),(inf,0))", "--genus", "((inf,0),(inf,1))")
    assert code == 0
    assert GenusVector.of(*doc["result"]["sum"]) == parse_genus("((inf,1),(inf,1))")
    code, doc = call_json("add", exr1_file, "--genus", "((1,1),(2,0))", "--genus", "((3,0),(2,0))")
    assert doc["result"]["sum"] == [[4, 1], [4, 0]] and doc["result"]["trace"] is None


def test_make_order(data_dir, tmp_path):
    for name, dim in (("order-p2.json", 8), ("order-p3.json", 2), ("order-p5.json", 8)):
        code, doc = call_json("make-order", data_dir / name, "--verify")
        assert code == 0
        assert doc["result"]["relations"]["failures"] == []
        assert doc["result"]["residue"]["dimension"] == dim
    bad = tmp_path / "spec.json"
    bad.write_text('{"p": 6, "k": 2, "parts": [[1, 2]]}')
    assert call("make-order", bad)[0] == 2


def test_order_profile(data_dir, tmp_path):
    code, out, _ = call("order-profile", data_dir / "order-p2.json", data_dir / "order-p3.json")
    assert code == 0
    doc = json.loads(out)
    assert validate(doc).ranks == ((2, 4), (3, 9))
    path = tmp_path / "assembled.json"
    path.write_text(out)
    assert call("decide-fg", path)[0] == 0
    # two orders at the same prime
    assert call("order-profile", data_dir / "order-p2.json", data_dir / "order-p2.json")[0] == 2


@pytest.mark.parametrize("argv", [
    ("hilbert",), ("big-generators",), ("traces",), ("decide-fg",),
    ("decompose", "--genus", "((inf,1),(inf,0))"),
])
def test_byte_identical(exr1_file, argv):
    first = call(argv[0], exr1_file, *argv[1:], "--json")
    second = call(argv[0], exr1_file, *argv[1:], "--json")
    assert first == second


def test_bound_from_environment(exr1_file, monkeypatch):
    monkeypatch.setenv("PROJGENUS_BOUND", "3")
    code, doc = call_json("hilbert", exr1_file)
    assert code == 0 and "completeness for entries <= 3" in doc["verified"]
    monkeypatch.setenv("PROJGENUS_BOUND", "oops")
    assert call("hilbert", exr1_file)[0] == 2


def test_bound_from_document(tmp_path, exr1_file):
    data = json.loads(exr1_file.read_text())
    data["bounds"] = {"coordinate": 5, "rank": 24}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(data))
    assert "completeness for entries <= 5" in call_json("hilbert", path)[1]["verified"]
    assert call_json("rank-monoid", path)[1]["result"]["members"] == [0, 6, 12, 18, 24]


def test_console_script(exr1_file):
    proc = subprocess.run([sys.executable, "-m", "projgenus", "validate", str(exr1_file)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "valid profile" in proc.stdout
