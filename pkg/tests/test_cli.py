from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from tropmat.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(*argv):
    buf = io.StringIO()
    code = run([str(a) for a in argv], out=buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text.strip().startswith("{") else text)


def result(*argv):
    code, out = call(*argv)
    assert code == 0, out
    return out["result"]


def test_waut_examples():
    f = DATA / "weighted_u24.json"
    assert result("vm", "waut", "-i", f, "--sigma", "(1 2 3 4)") == {"weak_automorphism": False}
    assert result("vm", "waut", "-i", f, "--sigma", "(1 3)(2 4)") == {
        "weak_automorphism": True,
        "tau": ["1/2", "1/2", "-1/2", "-1/2"],
    }
    assert result("vm", "waut", "-i", f, "--sigma", "[3,4,1,2]")["weak_automorphism"] is True


def test_matroid_aut():
    out = result("matroid", "aut", "-i", DATA / "u24.json")
    assert out["order"] == 24 and out["generators"]


def test_report_envelope_and_determinism():
    argv = ("space", "autstructure", "-i", DATA / "weighted_u24.json")
    c1, a = call(*argv)
    c2, b = call(*argv)
    assert c1 == c2 == 0 and a == b
    assert set(a) == {"command", "input_digest", "result", "exact", "version"}
    assert a["exact"] is True and a["command"] == "space autstructure" and len(a["input_digest"]) == 64
    assert a["result"]["H"]["order"] == 8


def test_output_round_trips():
    buf1, buf2 = io.StringIO(), io.StringIO()
    run(["space", "gens", "-i", str(DATA / "weighted_u24.json")], out=buf1)
    run(["space", "gens", "-i", str(DATA / "weighted_u24.json")], out=buf2)
    assert buf1.getvalue() == buf2.getvalue()
    assert json.loads(buf1.getvalue())["result"]["generators"][0]["vector"] == ["-inf", "-2", "0", "0"]


@pytest.mark.parametrize(
    "argv,key,value",
    [
        (("matroid", "hyperplanes", "-i", DATA / "u24.json"), "hyperplanes", [[1], [2], [3], [4]]),
        (("space", "stab", "-i", DATA / "weighted_u24.json"), "partition", [[1, 2, 3, 4]]),
        (("space", "member", "-i", DATA / "weighted_u24.json", "-x", DATA / "vector.json"), "member", False),
        (("linsub", "partition", "-i", DATA / "equations.json"), "partition", [[1, 3], [2]]),
        (("bmod", "closure", "-i", DATA / "u13_lattice.json"), "classes", 5),
        (("bmod", "quasifree", "-i", DATA / "u13_lattice.json"), "quasi_free", True),
        (("bmod", "qm", "-i", DATA / "u14.json", "--skip-dw"), "classes", 2),
        (("group", "monomialize", "-i", DATA / "monomial_maps.json"), "lambda", ["0", "3"]),
        (("group", "conjugator", "-i", DATA / "conjugator.json"), "d", ["1", "0"]),
        (("cone", "perms", "-i", DATA / "square_cone.json"), "order", 8),
        (("cone", "stab", "-i", DATA / "prism_cone.json"), "dimension", 1),
        (("vm", "projeq", "-i", DATA / "trivial_u24.json", "-j", DATA / "rescaled_u24.json"), "projectively_equivalent", True),
    ],
)
def test_commands(argv, key, value):
    assert result(*argv)[key] == value


def test_subreps_counts_agree():
    out = result("group", "subreps", "-g", DATA / "z2.json", "-m", DATA / "weighted_u24.json")
    assert out["homomorphisms"] == 6
    assert out["class_count"] == len(out["classes"])
    assert sum(c["orbit_size"] for c in out["classes"]) == out["homomorphisms"]


def test_validation_error_is_structured():
    code, out = call("vm", "validate", "-i", DATA / "bad_exchange.json")
    assert code == 2
    assert out["error"]["code"] == "ExchangeValueFailure"
    assert set(out["error"]["counterexample"]) == {"B", "B_prime", "u"}
    code, out = call("vm", "validate", "-i", DATA / "bad_exchange.json", "--skip-dw")
    assert code == 0


def test_exit_codes(tmp_path):
    assert call("nonsense")[0] == 64
    assert call("vm", "waut", "-i", DATA / "weighted_u24.json")[0] == 64  # --sigma missing
    assert call("vm", "validate", "-i", tmp_path / "missing.json")[0] == 66
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = call("matroid", "validate", "-i", bad)
    assert code == 2 and out["error"]["code"] == "ParseError"


def test_text_format():
    code, out = call("matroid", "aut", "-i", DATA / "u24.json", "--format", "text")
    assert code == 0 and "order" in out and "24" in out


def test_large_ground_set_lists_only_generators(tmp_path):
    from itertools import combinations, product

    # coloop + parallel pair + U(2,3) + parallel triple: Aut = 2 * 6 * 6
    parts = [[[1]], [[2], [3]], [list(c) for c in combinations([4, 5, 6], 2)], [[7], [8], [9]]]
    bases = [sum(choice, []) for choice in product(*parts)]
    f = tmp_path / "sum9.json"
    f.write_text(json.dumps({"n": 9, "rank": 5, "bases": bases}))
    out = result("matroid", "aut", "-i", f)
    assert out["order"] == 72 and "elements" not in out and out["generators"]


def test_selftest(monkeypatch):
    monkeypatch.setenv("TROPMAT_SEED", "7")
    out = result("selftest", "--rounds", "3")
    assert out["failures"] == 0 and out["seed"] == 7


def test_qm_reports_both_groups():
    out = result("bmod", "qm", "-i", DATA / "weighted_u24.json")
    assert out["weak_automorphisms"]["order"] == 8
    assert out["shadow_automorphisms"]["order"] == 24
    assert result("bmod", "qm", "-i", DATA / "u14.json")["weak_automorphisms"] is None
