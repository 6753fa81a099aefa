import json
from io import StringIO

import pytest

from comppaths.cli import main

A = "(const a)"
IA = "(app (lam x (var x)) (const a))"
P = f"(beta {IA})"
E = "(app (lam x (var x)) (app (lam y (var y)) (const v)))"
INNER = "(beta (app (lam y (var y)) (const v)))"
P1 = f"(trans (beta {E}) {INNER})"
P2 = f"(trans (mu (lam x (var x)) {INNER}) (beta (app (lam x (var x)) (const v))))"


def run(*argv):
    out = StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_normalize_prints_the_trace():
    code, text = run("normalize", f"(symm (refl {A}))")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 2
    assert lines[0].split(None, 2) == ["[]", "SR", f"(refl {A})"]
    assert lines[-1].startswith("nf: (refl (const a))")


def test_normalize_from_a_file_with_json(tmp_path):
    src = tmp_path / "p.sexp"
    src.write_text(f"(trans {P}\n  (refl {A}))\n")
    out = tmp_path / "trace.json"
    code, text = run("normalize", str(src), "--json", str(out))
    assert code == 0 and "TRR" in text
    data = json.loads(out.read_text())
    assert data["nf"] == f"(beta {IA})"
    assert [s["rule"] for s in data["steps"]] == ["TRR"]


def test_fuel_limit_exit_code():
    code, _ = run("normalize", f"(symm (symm (symm (symm {P}))))", "--fuel", "1")
    assert code == 2


def test_bad_input_exit_code():
    assert run("normalize", "(symm (refl")[0] == 1
    assert run("normalize", f"(trans (refl {A}) (refl (const b)))")[0] == 1
    assert run("normalize", A)[0] == 1


def test_equiv():
    code, text = run("equiv", P, P)
    assert code == 0 and text.strip() == "equivalent"
    code, text = run("equiv", P1, P2, "--bound", "6")
    assert code == 1
    assert text.splitlines()[0] == "not equivalent"
    assert "nothing found" in text


def test_canonical(tmp_path):
    code, text = run("canonical", P1, P2)
    assert code == 1 and "not equivalent" in text
    cert = tmp_path / "c.json"
    code, text = run("canonical", f"(trans {P} (refl {A}))", P, "--json", str(cert))
    assert code == 0 and "2-cell" in text
    assert json.loads(cert.read_text())["kind"] == "cell2"
    code, text = run("verify", str(cert))
    assert code == 0 and text.startswith("ok")
    code, text = run("globular", str(cert))
    assert code == 0 and text.strip() == "globular"


def test_witness_contract_and_certificate_chain(tmp_path):
    d = tmp_path / "d.json"
    assert run("witness", "runit", P, "--json", str(d))[0] == 0
    assert json.loads(d.read_text())["dim"] == 2
    c3 = tmp_path / "c3.json"
    code, _ = run("witness", "lunit", str(d), "--json", str(c3))
    assert code == 0 and json.loads(c3.read_text())["dim"] == 3
    c4 = tmp_path / "c4.json"
    code, text = run("contract", "4", str(c3), str(c3), "--json", str(c4))
    assert code == 0 and "4-cell" in text
    assert run("verify", str(c4))[0] == 0
    assert run("contract", "4", str(d), str(d))[0] == 1
    assert run("witness", "assoc", P)[0] == 1


def test_tampered_certificate_is_rejected(tmp_path):
    d = tmp_path / "d.json"
    run("witness", "invinv", P, "--json", str(d))
    cert = json.loads(d.read_text())
    cert["src"] = {"path": f"(symm {cert['src']['path']})"}
    d.write_text(json.dumps(cert))
    assert run("verify", str(d))[0] == 1
    d.write_text("{not json")
    assert run("verify", str(d))[0] == 1
    assert run("verify", str(tmp_path / "missing.json"))[0] == 1


def test_coherence():
    code, text = run("coherence", "pentagon", P, f"(refl {A})", f"(symm {P})", P)
    assert code == 0 and "3-cell" in text
    assert run("coherence", "triangle", P, f"(symm {P})")[0] == 0
    assert run("coherence", "triangle", P)[0] == 1


def test_fuzz_confluence_json(tmp_path):
    out = tmp_path / "fuzz.json"
    code, text = run("fuzz-confluence", "--count", "200", "--seed", "1", "--json", str(out))
    data = json.loads(out.read_text())
    assert set(data) == {"corpus_seed", "paths", "divergent_pairs", "joinable", "max_steps", "failures"}
    assert data["paths"] == 200 and data["corpus_seed"] == 1
    assert data["joinable"] + len([f for f in data["failures"] if "left" in f]) == data["divergent_pairs"]
    assert code == (1 if data["failures"] else 0)
    for f in data["failures"]:
        assert {"path", "left", "right"} <= set(f)


def test_enable_rc_changes_the_rule_set():
    q = f"(mu (const f) (refl {A}))"
    assert run("normalize", q)[1].startswith("nf:")
    code, text = run("normalize", q, "--enable-rc")
    assert code == 0 and "RC_MU" in text
    assert "nf: (refl (app (const f) (const a)))" in text


@pytest.mark.parametrize("argv", [["coherence", "hexagon", "x"], ["witness", "bogus", "x"], []])
def test_usage_errors(argv):
    with pytest.raises(SystemExit):
        main(argv, StringIO())
