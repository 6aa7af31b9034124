import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from birotary.errors import CapExceeded, InvalidAction, NotAPermutation, ParseError
from birotary.groupio import (DEFAULT_CATALOG, group_from_json, group_to_json, load_catalog, load_group,
                              parse_construction, parse_element, parse_word)
from birotary.perm import Permutation


@pytest.mark.parametrize("spec,order", [
    ("Z6", 6), ("Z(6)", 6), ("D8", 8), ("D(12)", 12), ("V4", 4), ("SD16", 16), ("M16", 16), ("A5", 60),
    ("S(4)", 24), ("PSL(2,7)", 168), ("PGL(2,5)", 120), ("PSigmaL(2,8)", 1512), ("torus(1,1)", 64),
    ("dipole(5)", 10), ("bouquet(4)", 8), ("meta(7,3,2)", 21), ("line1(1)", 78), ("desk(2)", 168),
    ("Z3 x S3", 18), ("Z(2) × Z(3) x D(6)", 36), ("composite(6,sd16xy)", None), ("nonsolv(ii,a5)", 60),
])
def test_constructions(spec, order):
    built = parse_construction(spec)
    G = built.group
    if order is not None:
        assert G.order() == order
    assert len(oracles.closure(list(G.generators), G.degree)) == G.order()
    if built.pair is not None:
        assert set(built.generators) >= {"x", "y"}


@pytest.mark.parametrize("spec", ["", "Q8", "Z(a)", "D(7)", "PSL(3,4)", "Z3 x ", "torus(1)",
                                  "line8(1)", "composite(x,SD16)"])
def test_construction_errors(spec):
    with pytest.raises(ParseError):
        parse_construction(spec)


def test_invalid_action_is_not_a_parse_error():
    with pytest.raises(InvalidAction):
        parse_construction("meta(7,2,2)")


def test_cap():
    with pytest.raises(CapExceeded):
        parse_construction("A7", cap=1000)
    with pytest.raises(CapExceeded):
        parse_construction("line1(2)")


def test_words():
    built = parse_construction("SD16")
    x, y = built.pair.x, built.pair.y
    gens, n = built.generators, built.group.degree
    assert parse_word("x*y^3", gens, n) == x * y ** 3
    assert parse_word("(x*y)^-1", gens, n) == ~(x * y)
    assert parse_word("x^2*x^-2", gens, n).is_identity()
    assert parse_word("e", gens, n).is_identity() and parse_word("1", gens, n).is_identity()
    for bad in ("x*", "q", "x^y", "(x", "x y", "x$"):
        with pytest.raises(ParseError):
            parse_word(bad, gens, n)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.sampled_from(["x", "y"]), st.integers(-9, 9)), min_size=1, max_size=6))
def test_words_evaluate_left_to_right(letters):
    built = parse_construction("SD16")
    gens, n = built.generators, built.group.degree
    text = "*".join(f"{s}^{e}" for s, e in letters)
    expected = Permutation.identity(n)
    for s, e in letters:
        expected = expected * gens[s] ** e
    assert parse_word(text, gens, n) == expected


def test_elements():
    gens = {"a": Permutation([1, 2, 0])}
    assert parse_element("(0 1 2)", gens, 3) == gens["a"]
    assert parse_element("[1, 2, 0]", gens, 3) == gens["a"]
    assert parse_element("a^2", gens, 3) == ~gens["a"]
    for bad in ("[1, 2]", "[1, 2", "(0 5)"):
        with pytest.raises(ParseError):
            parse_element(bad, gens, 3)
    with pytest.raises(NotAPermutation):
        parse_element("[0, 0, 1]", gens, 3)


def test_json_round_trip(tmp_path):
    built = parse_construction("PSL(2,7)")
    data = group_to_json(built)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(data))
    again = load_group(str(path))
    assert again.group.order() == 168 and again.group.degree == built.group.degree
    assert again.generators == built.generators
    sd = group_from_json(group_to_json(parse_construction("SD16")))
    assert sd.pair is not None and sd.pair.x.order() == 8
    with pytest.raises(ParseError):
        group_from_json({"degree": 3})
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ParseError):
        load_group(str(bad))


def test_catalogs(tmp_path):
    assert load_catalog(None) == list(DEFAULT_CATALOG) == load_catalog("default")
    assert load_catalog("PSL(2,7), Z(2) x Z(3);A5") == ["PSL(2,7)", "Z(2) x Z(3)", "A5"]
    f = tmp_path / "cat.txt"
    f.write_text("# groups\nSD16\n\nM16\n")
    assert load_catalog(f"@{f}") == ["SD16", "M16"]
