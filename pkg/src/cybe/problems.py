"""Problem files: the JSON input format of the CLI, and report serialization.

A problem file is one JSON object:

    {
      "field":   {"kind": "rational"} | {"kind": "prime", "p": 5},
      "algebra": {"family": "II", "params": {"alpha": "1", "beta": "-4"}}
               | {"dim": 3, "brackets": [[1, 2, ["0", "0", "1"]], ...]},
      "tensor":  {"entries": [[1, 2, "1/2"], ...], "named": {"p": "2"}},
      "tensors": [ <tensor object>, ... ],
      "options": {"case": "strong-z", "params": {...}, "budget": 100000000,
                  "workers": 1, "timing": false, "list_solutions": false}
    }

Every scalar is a JSON string ("-4", "1/2"); bare numbers are rejected so
floats can never sneak in.  Indices are 1-based.  In "brackets", entry
[i, j, coeffs] gives [e_i, e_j] for i < j as a coefficient vector; the
mirrored constants are filled in automatically.  Tensor entries may also use
the dim-3 coefficient names x y z p q s t u v (dim 2: x y p q); a named
alias and an explicit entry for the same cell is a duplicate and an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .liealg import LieAlgebra, from_constants, make_family
from .scalars import FieldError, make_field, parse_scalar, scalar_str
from .tensor import Tensor2

NAMED_CELLS = {
    "x": (1, 1), "y": (2, 2), "z": (3, 3),
    "p": (1, 2), "q": (2, 1),
    "s": (1, 3), "t": (3, 1),
    "u": (2, 3), "v": (3, 2),
}


class ProblemError(ValueError):
    """Malformed problem file (schema, indices, coefficient format)."""


@dataclass
class Problem:
    field: object
    algebra: object  # LieAlgebra or None
    tensors: list
    options: dict


def _expect_dict(obj, what):
    if not isinstance(obj, dict):
        raise ProblemError(f"{what} must be a JSON object")
    return obj


def _coeff(text, field, where):
    if not isinstance(text, str):
        raise ProblemError(
            f"{where}: coefficients must be strings, got "
            f"{type(text).__name__} ({text!r})")
    try:
        return parse_scalar(text, field)
    except FieldError as e:
        raise ProblemError(f"{where}: {e}") from None


def parse_field(obj):
    obj = _expect_dict(obj, '"field"')
    kind = obj.get("kind")
    extra = set(obj) - {"kind", "p"}
    if extra:
        raise ProblemError(f'unknown "field" keys: {sorted(extra)}')
    try:
        return make_field(kind, obj.get("p"))
    except FieldError as e:
        raise ProblemError(str(e)) from None


def parse_algebra(obj, field):
    obj = _expect_dict(obj, '"algebra"')
    if "family" in obj:
        extra = set(obj) - {"family", "params"}
        if extra:
            raise ProblemError(f'unknown "algebra" keys: {sorted(extra)}')
        params_in = obj.get("params", {})
        _expect_dict(params_in, '"algebra.params"')
        params = {}
        for name, val in params_in.items():
            if name == "dim":
                if not isinstance(val, int):
                    raise ProblemError('"dim" must be an integer')
                params[name] = val
            else:
                params[name] = _coeff(val, field, f"algebra param {name}")
        try:
            return make_family(obj["family"], field, **params)
        except (FieldError, ValueError, TypeError) as e:
            raise ProblemError(f"bad algebra spec: {e}") from None
    if "brackets" in obj or "dim" in obj:
        extra = set(obj) - {"dim", "brackets"}
        if extra:
            raise ProblemError(f'unknown "algebra" keys: {sorted(extra)}')
        n = obj.get("dim")
        if not isinstance(n, int) or n < 1:
            raise ProblemError('"algebra.dim" must be a positive integer')
        constants = []
        seen_pairs = set()
        for ent in obj.get("brackets", []):
            if (not isinstance(ent, list) or len(ent) != 3
                    or not isinstance(ent[0], int)
                    or not isinstance(ent[1], int)
                    or not isinstance(ent[2], list)):
                raise ProblemError(
                    f"bracket entries are [i, j, [coeffs]], got {ent!r}")
            i, j, coeffs = ent
            if not (1 <= i < j <= n):
                raise ProblemError(
                    f"bracket indices need 1 <= i < j <= {n}, got ({i}, {j})")
            if len(coeffs) != n:
                raise ProblemError(
                    f"bracket [{i}, {j}] needs {n} coefficients")
            vec = [_coeff(cstr, field, f"bracket [{i}, {j}]")
                   for cstr in coeffs]
            if (i, j) in seen_pairs:
                raise ProblemError(f"duplicate bracket for ({i}, {j})")
            seen_pairs.add((i, j))
            for m, val in enumerate(vec):
                if val:
                    constants.append((i - 1, j - 1, m, val))
                    constants.append((j - 1, i - 1, m, -val))
        try:
            return from_constants(n, constants, field, label="custom")
        except ValueError as e:
            raise ProblemError(str(e)) from None
    raise ProblemError(
        '"algebra" needs either "family" or "dim"+"brackets"')


def parse_tensor(obj, n, field):
    obj = _expect_dict(obj, "tensor")
    extra = set(obj) - {"entries", "named"}
    if extra:
        raise ProblemError(f"unknown tensor keys: {sorted(extra)}")
    seen = {}
    entries = obj.get("entries", [])
    if not isinstance(entries, list):
        raise ProblemError('"entries" must be a list')
    for ent in entries:
        if not isinstance(ent, list) or len(ent) != 3:
            raise ProblemError(
                f'tensor entries are [i, j, "coeff"], got {ent!r}')
        i, j, text = ent
        if not isinstance(i, int) or not isinstance(j, int):
            raise ProblemError(f"tensor entry indices must be ints: {ent!r}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise ProblemError(
                f"tensor entry ({i}, {j}) out of range for dim {n}")
        if (i, j) in seen:
            raise ProblemError(f"duplicate tensor entry ({i}, {j})")
        seen[(i, j)] = _coeff(text, field, f"tensor entry ({i}, {j})")
    named = obj.get("named", {})
    _expect_dict(named, '"named"')
    for name, text in named.items():
        cell = NAMED_CELLS.get(name)
        if cell is None:
            raise ProblemError(f"unknown coefficient name {name!r}")
        if cell[0] > n or cell[1] > n:
            raise ProblemError(
                f"coefficient {name!r} needs dim {max(cell)}, have {n}")
        if cell in seen:
            raise ProblemError(
                f"duplicate tensor entry ({cell[0]}, {cell[1]}) via {name!r}")
        seen[cell] = _coeff(text, field, f"coefficient {name}")
    return Tensor2.from_entries(
        n, field, {(i - 1, j - 1): v for (i, j), v in seen.items()})


def parse_problem(doc):
    doc = _expect_dict(doc, "problem file")
    extra = set(doc) - {"field", "algebra", "tensor", "tensors", "options"}
    if extra:
        raise ProblemError(f"unknown top-level keys: {sorted(extra)}")
    if "field" not in doc:
        raise ProblemError('problem file needs a "field"')
    field = parse_field(doc["field"])
    algebra = None
    if "algebra" in doc:
        algebra = parse_algebra(doc["algebra"], field)
    tensors = []
    if "tensor" in doc and "tensors" in doc:
        raise ProblemError('give either "tensor" or "tensors", not both')
    if algebra is not None:
        tensor_objs = ([doc["tensor"]] if "tensor" in doc
                       else doc.get("tensors", []))
        if not isinstance(tensor_objs, list):
            raise ProblemError('"tensors" must be a list')
        tensors = [parse_tensor(t, algebra.n, field) for t in tensor_objs]
    elif "tensor" in doc or "tensors" in doc:
        raise ProblemError("tensors need an algebra (for the dimension)")
    options = doc.get("options", {})
    _expect_dict(options, '"options"')
    return Problem(field=field, algebra=algebra, tensors=tensors,
                   options=options)


def load_problem(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise ProblemError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise ProblemError(f"{path} is not valid JSON: {e}") from None
    return parse_problem(doc)


# ---------------------------------------------------------------------------
# canonical echo / serialization

def field_obj(field):
    return field.to_spec()


def tensor_obj(r):
    return {"entries": [[i + 1, j + 1, scalar_str(v)]
                        for (i, j), v in r.entries()]}


def algebra_obj(L):
    return {
        "label": L.label,
        "dim": L.n,
        "constants": [[i + 1, j + 1, m + 1, scalar_str(v)]
                      for i, j, m, v in L.nonzero_constants()],
    }


def problem_obj(problem):
    """Canonical problem-file form; parse(problem_obj(p)) == p."""
    out = {"field": field_obj(problem.field)}
    if problem.algebra is not None:
        L = problem.algebra
        out["algebra"] = {
            "dim": L.n,
            "brackets": [
                [i + 1, j + 1,
                 [scalar_str(L.c[i][j][m]) for m in range(L.n)]]
                for i in range(L.n) for j in range(i + 1, L.n)
                if any(L.c[i][j])
            ],
        }
    if len(problem.tensors) == 1:
        out["tensor"] = tensor_obj(problem.tensors[0])
    elif problem.tensors:
        out["tensors"] = [tensor_obj(t) for t in problem.tensors]
    if problem.options:
        out["options"] = problem.options
    return out


def dumps_report(report):
    """Stable JSON text: insertion order preserved, trailing newline."""
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
