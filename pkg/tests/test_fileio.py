"""File-format round trips and parse diagnostics."""

import json

import pytest

from leibnizalg.algebra import abelian_algebra, direct_sum_algebra
from leibnizalg.decompose import example_5_3, example_5_5
from leibnizalg.fileio import (
    ParseError,
    frac_str,
    parse_algebra,
    parse_rep,
    serialize_algebra,
    serialize_rep,
)
from leibnizalg.reps import adjoint_rep
from leibnizalg.sl2 import (
    classify_extension_irreps,
    simple_ext_algebra,
    sl2_algebra,
    sl2_leibniz_irrep,
)


def catalog_algebras():
    out = [sl2_algebra(), example_5_3()[0], abelian_algebra(3),
           direct_sum_algebra(sl2_algebra(), abelian_algebra(2))]
    out += [simple_ext_algebra(n) for n in range(5, 10)]
    return out


def catalog_reps():
    out = []
    for m in range(0, 4):
        out.append(sl2_leibniz_irrep(m, "zero_lambda"))
        out.append(sl2_leibniz_irrep(m, "anti_symmetric"))
    out += list(classify_extension_irreps(6, 1))
    out.append(example_5_5())
    out.append(adjoint_rep(example_5_3()[0]))
    return out


def test_algebra_round_trip_is_identity():
    for alg in catalog_algebras():
        back = parse_algebra(serialize_algebra(alg))
        assert back == alg
        assert back.name == alg.name


def test_rep_round_trip_is_identity():
    for rep in catalog_reps():
        back = parse_rep(serialize_rep(rep))
        assert back.algebra == rep.algebra
        assert back.right == rep.right
        assert back.left == rep.left
        assert back.name == rep.name


def test_serialization_is_stable_bytes():
    # serialize . parse . serialize = serialize, byte for byte
    for alg in catalog_algebras():
        text = serialize_algebra(alg)
        assert serialize_algebra(parse_algebra(text)) == text
    rep = sl2_leibniz_irrep(2, "anti_symmetric")
    text = serialize_rep(rep)
    assert serialize_rep(parse_rep(text)) == text


def test_rationals_serialize_with_explicit_denominator():
    text = serialize_algebra(sl2_algebra())
    obj = json.loads(text)
    values = [v for entry in obj["brackets"] for v in entry["result"].values()]
    assert set(values) == {"2/1", "-2/1", "1/1", "-1/1"}
    assert text.endswith("\n")


def test_frozen_serialized_form_of_a_small_algebra():
    alg = abelian_algebra(1)
    expected = (
        '{\n'
        '  "basis": [\n'
        '    "a0"\n'
        '  ],\n'
        '  "brackets": [],\n'
        '  "dim": 1,\n'
        '  "name": "abelian1"\n'
        '}\n'
    )
    assert serialize_algebra(alg) == expected


def test_result_map_assigns_bracket():
    text = json.dumps({
        "basis": ["e", "f", "h"],
        "brackets": [
            {"left": "e", "right": "f", "result": {"h": "1/1"}},
            {"left": "f", "right": "e", "result": {"h": "-1"}},
        ],
    })
    alg = parse_algebra(text)
    assert alg.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert alg.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)
    # untouched pairs stay zero
    assert alg.bracket((0, 0, 1), (0, 0, 1)) == (0, 0, 0)


def test_bare_integer_rational_accepted_on_parse():
    text = json.dumps({
        "basis": ["a", "b"],
        "brackets": [{"left": "a", "right": "a", "result": {"b": "2"}}],
    })
    alg = parse_algebra(text)
    assert alg.bracket((1, 0), (1, 0)) == (0, 2)


def test_invalid_table_still_parses():
    # checking validity is the caller's job, not the parser's
    text = json.dumps({
        "basis": ["a", "b"],
        "brackets": [{"left": "a", "right": "a", "result": {"a": "1/1"}}],
    })
    alg = parse_algebra(text)
    assert not alg.is_valid


def test_duplicate_bracket_pair_names_the_pair():
    text = json.dumps({
        "basis": ["e", "f"],
        "brackets": [
            {"left": "e", "right": "f", "result": {}},
            {"left": "e", "right": "f", "result": {}},
        ],
    })
    with pytest.raises(ParseError, match=r"duplicate bracket \(e, f\)"):
        parse_algebra(text)


def test_unknown_labels_are_located():
    base = {"basis": ["e", "f"]}
    bad_left = dict(base, brackets=[{"left": "q", "right": "f", "result": {}}])
    with pytest.raises(ParseError, match=r"brackets\[0\]\.left: unknown label 'q'"):
        parse_algebra(json.dumps(bad_left))
    bad_result = dict(base, brackets=[
        {"left": "e", "right": "f", "result": {"zz": "1"}}])
    with pytest.raises(ParseError, match=r"result: unknown label 'zz'"):
        parse_algebra(json.dumps(bad_result))


def test_basis_validation():
    with pytest.raises(ParseError, match="nonempty list"):
        parse_algebra(json.dumps({"basis": [], "brackets": []}))
    with pytest.raises(ParseError, match="duplicate label"):
        parse_algebra(json.dumps({"basis": ["a", "a"], "brackets": []}))
    with pytest.raises(ParseError, match="nonempty strings"):
        parse_algebra(json.dumps({"basis": ["a", 3], "brackets": []}))


def test_dim_mismatch_is_rejected():
    text = json.dumps({"basis": ["a", "b"], "dim": 4, "brackets": []})
    with pytest.raises(ParseError, match="4 does not match 2 basis labels"):
        parse_algebra(text)


def test_bad_rationals_are_rejected_with_locus():
    entry = {"left": "a", "right": "a", "result": {"a": "1/0"}}
    with pytest.raises(ParseError, match=r"result\.a"):
        parse_algebra(json.dumps({"basis": ["a"], "brackets": [entry]}))
    entry["result"]["a"] = "not-a-number"
    with pytest.raises(ParseError):
        parse_algebra(json.dumps({"basis": ["a"], "brackets": [entry]}))
    entry["result"]["a"] = 1.5  # numbers must arrive as strings
    with pytest.raises(ParseError, match="must be strings"):
        parse_algebra(json.dumps({"basis": ["a"], "brackets": [entry]}))


def test_json_syntax_errors_carry_line_and_column():
    with pytest.raises(ParseError, match="line 2, column"):
        parse_algebra('{\n  "basis": [}')
    with pytest.raises(ParseError, match="top level: expected an object"):
        parse_algebra("[1, 2]")


def test_rep_requires_positive_module_dim():
    alg_obj = json.loads(serialize_algebra(abelian_algebra(1)))
    for bad in (0, -1, "3", None):
        obj = {"algebra": alg_obj, "module_dim": bad,
               "rho": {"a0": [["0"]]}, "lambda": {"a0": [["0"]]}}
        if bad is None:
            del obj["module_dim"]
        with pytest.raises(ParseError, match="module_dim"):
            parse_rep(json.dumps(obj))


def test_rep_matrix_block_validation():
    alg_obj = json.loads(serialize_algebra(abelian_algebra(2)))
    good = {"a0": [["0", "0"], ["0", "0"]], "a1": [["0", "0"], ["0", "0"]]}
    obj = {"algebra": alg_obj, "module_dim": 2, "rho": dict(good),
           "lambda": dict(good)}
    parse_rep(json.dumps(obj))  # sanity: the template itself parses

    missing = dict(obj, rho={"a0": good["a0"]})
    with pytest.raises(ParseError, match="rho: missing matrix for 'a1'"):
        parse_rep(json.dumps(missing))

    extra = dict(obj, rho=dict(good, zz=good["a0"]))
    with pytest.raises(ParseError, match="rho: unknown label 'zz'"):
        parse_rep(json.dumps(extra))

    ragged = dict(obj, rho=dict(good, a0=[["0", "0"], ["0"]]))
    with pytest.raises(ParseError, match=r"rho\.a0\[1\]: expected 2 entries"):
        parse_rep(json.dumps(ragged))

    short = dict(obj, rho=dict(good, a0=[["0", "0"]]))
    with pytest.raises(ParseError, match=r"rho\.a0: expected 2 rows"):
        parse_rep(json.dumps(short))


def test_rep_algebra_by_file_reference(tmp_path):
    (tmp_path / "alg.json").write_text(serialize_algebra(sl2_algebra()))
    rep = sl2_leibniz_irrep(1, "zero_lambda")
    obj = json.loads(serialize_rep(rep))
    obj["algebra"] = "alg.json"
    back = parse_rep(json.dumps(obj), base_dir=str(tmp_path))
    assert back.algebra == sl2_algebra()
    assert back.right == rep.right

    obj["algebra"] = "missing.json"
    with pytest.raises(ParseError, match="cannot read 'missing.json'"):
        parse_rep(json.dumps(obj), base_dir=str(tmp_path))


def test_frac_str_examples():
    from fractions import Fraction
    assert frac_str(Fraction(0)) == "0/1"
    assert frac_str(Fraction(-3, 6)) == "-1/2"
    assert frac_str(Fraction(7)) == "7/1"
