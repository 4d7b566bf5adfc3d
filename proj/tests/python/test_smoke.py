import os
import pathlib

import pytest

import dycknf

GRAMMARS = pathlib.Path(
    os.environ.get("DYCKNF_GRAMMAR_DIR", pathlib.Path(__file__).resolve().parents[2] / "grammars")
)


def load(name):
    return dycknf.Grammar.load(str(GRAMMARS / name))


def test_conversion_of_expression_grammar():
    g, ledger = dycknf.to_dyck_nf(load("expr-cnf.cfg"))
    assert dycknf.is_dyck_nf(g)
    assert len(g.nonterminals) == 15
    assert len(g.rules) == 26
    assert ledger.splitlines()[0] == "E_t1 <- E terminal step=1"
    assert dycknf.enumerate_words(g, 7) == dycknf.enumerate_words(load("expr.cfg"), 7)


def test_trace_and_dyck_checks():
    numeric, named = dycknf.trace(load("expr-dyck.cfg"), "a*a*a+a")
    assert named == "[LE [LT [LT3 ]RT5 [LT2 ]RR ]RT1 [LT2 ]RR ]RE1 [LE4 ]RT4"
    assert dycknf.in_dk_stack(numeric) and dycknf.in_dk_lemma(numeric)
    assert not dycknf.in_dk_lemma("[1 ]2")


def test_round_trip_and_errors():
    g = dycknf.Grammar.parse("start: S\nS -> 'a' S 'b' | 'c'\n")
    assert dycknf.Grammar.parse(g.serialize()) == g
    assert g.terminals == "abc"
    with pytest.raises(dycknf.GrammarParseError):
        dycknf.Grammar.parse("S -> 'a'\n")
    with pytest.raises(dycknf.PreconditionError):
        dycknf.iterated_division(3)
    with pytest.raises(dycknf.DerivationTooShort):
        dycknf.trace(load("expr-dyck.cfg"), "a")


def test_even_linear_recognition():
    g = load("anbn.cfg")
    assert dycknf.is_even_linear(g)
    r = dycknf.elin_recognize(g, "a" * 9 + "c" + "b" * 9)
    assert r["accepted"] and not r["base_case"]
    assert r["alternation_depth"] == 6
    assert not dycknf.elin_recognize(g, "a" * 9 + "c" + "b" * 8)["accepted"]
    assert dycknf.iterated_division(100) == (6, [16, 2], [4, 4])


def test_characterization_and_cli():
    passed, text = dycknf.verify_characterization(load("expr-dyck.cfg"), 6)
    assert passed and text.startswith("characterization PASS")
    code, out, _ = dycknf.run_cli(["member", str(GRAMMARS / "expr.cfg"), "a+a"])
    assert (code, out) == (0, "accept\n")
    assert dycknf.run_cli(["check-dyck", "[1 ]2"])[0] == 1
