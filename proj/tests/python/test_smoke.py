import os
from pathlib import Path

import pytest

import focq

DATA = Path(os.environ.get("FOCQ_TEST_DATA", Path(__file__).resolve().parents[1] / "data"))


def test_kif_round_trip():
    f = focq.parse_formula("(=> (instance ?X Human) (not (attribute ?X Dead)))")
    assert focq.parse_formula(focq.print_kif(f)) == f
    assert str(f).startswith("(=>")
    assert focq.parse_kif("(p A) (q B)")[1] == focq.parse_formula("(q B)")


def test_syntax_error_raises():
    with pytest.raises(focq.FocqError):
        focq.parse_formula("(p A")


def test_tptp_emission_and_mangling():
    assert focq.mangle_symbol("Fiat-Money") == "s__Fiat_2DMoney"
    assert focq.demangle_symbol("s__Fiat_2DMoney") == "Fiat-Money"
    f = focq.parse_formula("(not (equal Death Killing))")
    assert focq.emit_fof(f, "conjecture", "cq") == "fof(cq, conjecture, ~ (s__Death = s__Killing))."
    assert focq.alpha_equivalent(focq.parse_fof(focq.to_fof(f)), f)


def test_negation_is_nnf():
    f = focq.parse_formula("(not (exists (?X) (and (instance ?X Melting) (instance ?X Freezing))))")
    g = focq.negate(f)
    assert focq.nnf(g) == g
    assert focq.alpha_equivalent(
        g, focq.parse_formula("(exists (?X) (and (instance ?X Melting) (instance ?X Freezing)))"))


def test_szs_and_classification():
    r = focq.parse_szs("% SZS status Theorem for p\n")
    assert r["szs"] == "Theorem"
    v = focq.classify("falsity", "Timeout", "cq_x")
    assert v["classification"] == "unknown"
    assert v["effective"] == "passing"
    assert focq.classify("truth", "Theorem")["classification"] == "passing"


def test_prove():
    r = focq.prove(
        [("man_mortal", "(=> (instance ?X Man) (instance ?X Mortal))"),
         ("socrates", "(instance Socrates Man)")],
        "(instance Socrates Mortal)", timeout=5)
    assert r["szs"] == "Theorem"
    assert r["used_axioms"] == ["man_mortal", "socrates"]
    assert focq.prove([("a", "(p A)")], "(q A)", timeout=5)["szs"] == "GaveUp"
    assert focq.clausify(focq.parse_formula("(and (p A) (q B))")) == ["s__p(s__A)", "s__q(s__B)"]
    assert focq.clausify(focq.parse_formula("(=> (p ?X) (q ?X))")) == ["~ s__p(X0) | s__q(X0)"]


def test_fixture_files():
    cqs = focq.load_creative((DATA / "creative.kif").read_text())
    assert [c["id"] for c in cqs][:2] == ["creative_boy_domestic_animal", "creative_man_pregnant"]
    text = focq.emit_problem(DATA / "entail" / "dead.kif", "cq_dead", "falsity",
                             "(=> (instance ?ORG Organism) (not (attribute ?ORG Dead)))")
    assert "fof(cq_dead, conjecture," in text
    assert "dead_unconscious" in text
