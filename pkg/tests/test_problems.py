import json
from fractions import Fraction

import pytest

from cybe import QQ, PrimeField, Tensor2, recognize_table
from cybe.problems import (
    NAMED_CELLS,
    Problem,
    ProblemError,
    dumps_report,
    field_obj,
    load_problem,
    parse_algebra,
    parse_field,
    parse_problem,
    parse_tensor,
    problem_obj,
    tensor_obj,
)

F5 = PrimeField(5)


def doc_sl2_with_tensor():
    return {
        "field": {"kind": "rational"},
        "algebra": {"family": "sl2"},
        "tensor": {"entries": [[1, 1, "4"]], "named": {"s": "2", "t": "2"}},
    }


def test_parse_field_kinds():
    assert parse_field({"kind": "rational"}) is QQ
    f = parse_field({"kind": "prime", "p": 7})
    assert f.p == 7
    with pytest.raises(ProblemError):
        parse_field({"kind": "prime", "p": 2})
    with pytest.raises(ProblemError):
        parse_field({"kind": "real"})
    with pytest.raises(ProblemError, match="unknown"):
        parse_field({"kind": "rational", "modulus": 5})
    with pytest.raises(ProblemError, match="JSON object"):
        parse_field("rational")


def test_parse_family_algebra():
    L = parse_algebra({"family": "II",
                       "params": {"alpha": "1", "beta": "-4"}}, QQ)
    assert recognize_table(L) == ("ii", Fraction(1), Fraction(-4))
    L = parse_algebra({"family": "I", "params": {"dim": 2}}, QQ)
    assert L.n == 2 and not L.nonzero_constants()
    with pytest.raises(ProblemError, match="bad algebra spec"):
        parse_algebra({"family": "II", "params": {"alpha": "0", "beta": "1"}},
                      QQ)
    with pytest.raises(ProblemError, match="bad algebra spec"):
        parse_algebra({"family": "VIII"}, QQ)
    with pytest.raises(ProblemError, match='"dim" must be an integer'):
        parse_algebra({"family": "I", "params": {"dim": "3"}}, QQ)
    with pytest.raises(ProblemError, match="unknown"):
        parse_algebra({"family": "sl2", "extra": 1}, QQ)


def test_parse_family_params_are_field_strings():
    with pytest.raises(ProblemError, match="strings"):
        parse_algebra({"family": "II", "params": {"alpha": 1, "beta": "1"}},
                      QQ)
    with pytest.raises(ProblemError, match="algebra param alpha"):
        parse_algebra({"family": "II",
                       "params": {"alpha": "0.5", "beta": "1"}}, QQ)


def test_parse_custom_brackets():
    # structurally sl2: [e1,e2]=e3, [e2,e3]=4e1, [e1,e3]=4e2 (so that
    # [e3,e1]=-4e2, the beta=-4 convention)
    obj = {"dim": 3, "brackets": [
        [1, 2, ["0", "0", "1"]],
        [2, 3, ["4", "0", "0"]],
        [1, 3, ["0", "4", "0"]],
    ]}
    L = parse_algebra(obj, QQ)
    assert L.label == "custom"
    assert recognize_table(L) == ("ii", Fraction(4), Fraction(-4))


def test_parse_custom_brackets_errors():
    with pytest.raises(ProblemError, match="1 <= i < j"):
        parse_algebra({"dim": 2, "brackets": [[2, 1, ["0", "0"]]]}, QQ)
    with pytest.raises(ProblemError, match="needs 2 coefficients"):
        parse_algebra({"dim": 2, "brackets": [[1, 2, ["1"]]]}, QQ)
    with pytest.raises(ProblemError, match="duplicate bracket"):
        parse_algebra({"dim": 2, "brackets": [[1, 2, ["1", "0"]],
                                              [1, 2, ["0", "0"]]]}, QQ)
    with pytest.raises(ProblemError, match="bracket entries"):
        parse_algebra({"dim": 2, "brackets": [[1, 2]]}, QQ)
    with pytest.raises(ProblemError, match="positive integer"):
        parse_algebra({"dim": 0, "brackets": []}, QQ)
    with pytest.raises(ProblemError, match="positive integer"):
        parse_algebra({"brackets": []}, QQ)
    with pytest.raises(ProblemError, match="either"):
        parse_algebra({}, QQ)
    # a bracket table that breaks the Jacobi identity still parses; only
    # antisymmetry is structural (the CLI reports Jacobi separately)
    L = parse_algebra({"dim": 3, "brackets": [[1, 2, ["0", "1", "0"]],
                                              [2, 3, ["1", "0", "0"]]]}, QQ)
    from cybe import check_jacobi
    assert check_jacobi(L)


def test_parse_tensor_entries_and_names():
    r = parse_tensor({"entries": [[1, 2, "1/2"]], "named": {"v": "-3"}},
                     3, QQ)
    assert r.entry(0, 1) == Fraction(1, 2)
    assert r.v == Fraction(-3)
    # every named cell round-trips through its alias
    for name, (i, j) in NAMED_CELLS.items():
        r = parse_tensor({"named": {name: "2"}}, 3, QQ)
        assert r.entry(i - 1, j - 1) == Fraction(2)


def test_parse_tensor_errors():
    with pytest.raises(ProblemError, match="duplicate tensor entry"):
        parse_tensor({"entries": [[1, 2, "1"], [1, 2, "2"]]}, 3, QQ)
    with pytest.raises(ProblemError, match="via 'p'"):
        parse_tensor({"entries": [[1, 2, "1"]], "named": {"p": "2"}}, 3, QQ)
    with pytest.raises(ProblemError, match="out of range"):
        parse_tensor({"entries": [[4, 1, "1"]]}, 3, QQ)
    with pytest.raises(ProblemError, match="needs dim 3"):
        parse_tensor({"named": {"z": "1"}}, 2, QQ)
    with pytest.raises(ProblemError, match="unknown coefficient name"):
        parse_tensor({"named": {"w": "1"}}, 3, QQ)
    with pytest.raises(ProblemError, match="must be strings"):
        parse_tensor({"entries": [[1, 1, 0.5]]}, 3, QQ)
    with pytest.raises(ProblemError, match="must be strings"):
        parse_tensor({"entries": [[1, 1, 2]]}, 3, QQ)
    with pytest.raises(ProblemError, match="indices must be ints"):
        parse_tensor({"entries": [["1", 1, "2"]]}, 3, QQ)
    with pytest.raises(ProblemError, match="unknown tensor keys"):
        parse_tensor({"rows": []}, 3, QQ)
    with pytest.raises(ProblemError, match="tensor entry \\(1, 1\\)"):
        parse_tensor({"entries": [[1, 1, "1/0"]]}, 3, QQ)


def test_parse_problem_shapes():
    p = parse_problem(doc_sl2_with_tensor())
    assert p.field is QQ and p.algebra.n == 3 and len(p.tensors) == 1
    assert p.tensors[0].entry(0, 0) == Fraction(4)
    assert p.options == {}

    doc = {
        "field": {"kind": "prime", "p": 5},
        "algebra": {"family": "VI"},
        "tensors": [{"named": {"p": "1", "q": "-1"}}, {}],
        "options": {"workers": 2},
    }
    p = parse_problem(doc)
    assert len(p.tensors) == 2 and p.tensors[1].is_zero()
    assert p.options == {"workers": 2}
    assert int(p.tensors[0].entry(1, 0)) == 4    # -1 mod 5


def test_parse_problem_errors():
    with pytest.raises(ProblemError, match='needs a "field"'):
        parse_problem({"algebra": {"family": "sl2"}})
    with pytest.raises(ProblemError, match="unknown top-level"):
        parse_problem({"field": {"kind": "rational"}, "algebras": {}})
    with pytest.raises(ProblemError, match="not both"):
        parse_problem({"field": {"kind": "rational"},
                       "algebra": {"family": "sl2"},
                       "tensor": {}, "tensors": []})
    with pytest.raises(ProblemError, match="need an algebra"):
        parse_problem({"field": {"kind": "rational"}, "tensor": {}})
    with pytest.raises(ProblemError, match="JSON object"):
        parse_problem([1, 2])
    with pytest.raises(ProblemError, match='"tensors" must be a list'):
        parse_problem({"field": {"kind": "rational"},
                       "algebra": {"family": "sl2"}, "tensors": {}})


def test_round_trip_through_problem_obj():
    p = parse_problem(doc_sl2_with_tensor())
    doc2 = problem_obj(p)
    p2 = parse_problem(doc2)
    assert p2.field is p.field
    assert p2.algebra.c == p.algebra.c
    assert p2.tensors == p.tensors
    # canonical form is stable
    assert problem_obj(p2) == doc2


def test_round_trip_prime_field_problem():
    doc = {
        "field": {"kind": "prime", "p": 5},
        "algebra": {"dim": 2, "brackets": [[1, 2, ["1", "0"]]]},
        "tensors": [{"named": {"x": "3"}}, {"named": {"p": "2", "q": "3"}}],
        "options": {"timing": True},
    }
    p = parse_problem(doc)
    p2 = parse_problem(problem_obj(p))
    assert p2.algebra.c == p.algebra.c
    assert p2.tensors == p.tensors
    assert p2.options == {"timing": True}


def test_load_problem(tmp_path):
    path = tmp_path / "prob.json"
    path.write_text(json.dumps(doc_sl2_with_tensor()))
    p = load_problem(str(path))
    assert p.algebra.label == "sl2"
    with pytest.raises(ProblemError, match="cannot read"):
        load_problem(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(ProblemError, match="not valid JSON"):
        load_problem(str(bad))


def test_serialization_helpers():
    assert field_obj(QQ) == {"kind": "rational"}
    assert field_obj(F5) == {"kind": "prime", "p": 5}
    r = Tensor2.from_entries(2, QQ, {(0, 1): Fraction(-1, 2)})
    assert tensor_obj(r) == {"entries": [[1, 2, "-1/2"]]}
    text = dumps_report({"ok": True, "n": 3})
    assert text.endswith("\n")
    assert json.loads(text) == {"ok": True, "n": 3}
    # key order is preserved, so equal reports serialize identically
    assert dumps_report({"a": 1, "b": 2}) != dumps_report({"b": 2, "a": 1})


def test_problem_obj_without_algebra():
    p = parse_problem({"field": {"kind": "rational"}})
    assert problem_obj(p) == {"field": {"kind": "rational"}}
    assert isinstance(p, Problem)
