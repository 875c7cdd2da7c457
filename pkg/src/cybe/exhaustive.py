"""Exhaustive enumeration over prime fields and classification cross-checks.

The oracle (`scan_solution_ids`) walks every candidate tensor over GF(p) and
keeps the ones whose CYBE residual vanishes, by direct evaluation through the
structure constants: it knows nothing about the classification.
`verify_classification` then replays the classified regime's closed-form
predicates over the same candidate space (vectorized, independent of the
scalar predicates in `solve`) and compares the two sets exactly.

Candidate ids are base-p integers, entry (0, 0) most significant (see
`_kernels`).  Scans are split into p*p equal blocks on the two leading
digits; blocks can run on a thread pool and are merged back in block order,
so results are bit-identical whatever the worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._kernels import constants_arrays, decode_grids, pick_backend, scan_range
from .scalars import PrimeField
from .solve import SolutionLabel, UncoveredRegime, recognize_table
from .tensor import Tensor2

DEFAULT_BUDGET = 100_000_000


class BudgetExceeded(RuntimeError):
    """The scan would touch more candidates than the budget allows."""


def candidate_count(n, p):
    return p ** (n * n)


def encode_tensor(r):
    """Tensor over GF(p) -> its candidate id."""
    p = r.field.p
    acc = 0
    for i in range(r.n):
        for j in range(r.n):
            acc = acc * p + int(r.k[i][j])
    return acc


def decode_tensor(idx, n, field):
    """Candidate id -> tensor over GF(p)."""
    p = field.p
    digits = []
    for _ in range(n * n):
        digits.append(idx % p)
        idx //= p
    digits.reverse()
    rows = [[field.from_int(digits[i * n + j]) for j in range(n)]
            for i in range(n)]
    return Tensor2.from_rows(rows, field)


def _require_prime_field(L):
    if not isinstance(L.field, PrimeField):
        raise ValueError("exhaustive scans need a prime field, not QQ")
    return L.field.p


def _blocks(total, p):
    nblocks = min(p * p, total)
    size = total // nblocks
    return [(b * size, (b + 1) * size) for b in range(nblocks)]


def scan_solution_ids(L, workers=1, budget=DEFAULT_BUDGET, backend=None):
    """All candidate ids over GF(p) solving the CYBE on L, ascending.

    Returns (ids ndarray, backend used).  Raises BudgetExceeded if the
    candidate space is larger than `budget`.
    """
    p = _require_prime_field(L)
    total = candidate_count(L.n, p)
    if budget is not None and total > budget:
        raise BudgetExceeded(
            f"{total} candidates exceed the budget of {budget}")
    if backend is None:
        backend = pick_backend(total)
    ci, cj, cm, cv = constants_arrays(L)
    blocks = _blocks(total, p)
    if workers <= 1 or len(blocks) == 1:
        masks = [scan_range(lo, hi, L.n, p, ci, cj, cm, cv, backend)
                 for lo, hi in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            masks = list(pool.map(
                lambda blk: scan_range(blk[0], blk[1], L.n, p,
                                       ci, cj, cm, cv, backend),
                blocks))
    mask = np.concatenate(masks)
    return np.flatnonzero(mask).astype(np.int64), backend


def enumerate_solutions(L, workers=1, budget=DEFAULT_BUDGET, backend=None):
    """Every CYBE solution tensor on L over GF(p), in candidate-id order."""
    ids, _ = scan_solution_ids(L, workers=workers, budget=budget,
                               backend=backend)
    return [decode_tensor(int(i), L.n, L.field) for i in ids]


# ---------------------------------------------------------------------------
# vectorized closed-form predicates
#
# These mirror the scalar predicates in `solve` but are written directly on
# residue arrays; the test suite checks the two agree pointwise.

def _cols3(g):
    return (g[:, 0, 0], g[:, 1, 1], g[:, 2, 2],
            g[:, 0, 1], g[:, 1, 0], g[:, 0, 2],
            g[:, 2, 0], g[:, 1, 2], g[:, 2, 1])


def _strong3(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return ((cp - cq) % P == 0) & ((cs - ct) % P == 0) & ((cu - cv) % P == 0) \
        & ((cx * cy - cp * cp) % P == 0) & ((cx * cz - cs * cs) % P == 0) \
        & ((cy * cz - cu * cu) % P == 0) & ((cx * cu - cs * cp) % P == 0)


def _strong2(g, P):
    cx, cp, cq, cy = g[:, 0, 0], g[:, 0, 1], g[:, 1, 0], g[:, 1, 1]
    return ((cp - cq) % P == 0) & ((cx * cy - cp * cp) % P == 0)


def _skew2(g, P):
    cx, cp, cq, cy = g[:, 0, 0], g[:, 0, 1], g[:, 1, 0], g[:, 1, 1]
    return (cx == 0) & (cy == 0) & ((cp + cq) % P == 0)


def _ab_skew(g, P, a, b):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    quad = a * b * cz * cz + b * cs * cs + a * cu * cu + cp * cp
    return ((cp + cq) % P == 0) & ((cs + ct) % P == 0) & ((cu + cv) % P == 0) \
        & ((cx - a * cz) % P == 0) & ((cy - b * cz) % P == 0) \
        & (quad % P == 0)


def _heis1(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return (cp != 0) & (cp == cq) & ((cp * cp - cx * cy) % P == 0) \
        & ((cx * cu - cs * cp) % P == 0) & ((cx * cv - ct * cp) % P == 0) \
        & ((ct * cu - cv * cs) % P == 0)


def _heis2(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return (cp == 0) & (cq == 0) & ((cx * cy) % P == 0) \
        & ((cx * cu) % P == 0) & ((cx * cv) % P == 0) \
        & ((cy * cs) % P == 0) & ((cy * ct) % P == 0) \
        & ((ct * cu - cv * cs) % P == 0)


def _diag2(g, P, d):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    qp = cq + cp
    return (cz == 0) & ((ct + cs) % P == 0) & ((cv + cu) % P == 0) \
        & ((cx * cu) % P == 0) & ((cx * cs) % P == 0) \
        & ((cy * cs) % P == 0) & ((cy * cu) % P == 0) \
        & (((1 - d) * cu * cs) % P == 0) \
        & (((1 + d) * cs * qp) % P == 0) & (((1 + d) * cu * qp) % P == 0)


def _jordan2(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return (cz == 0) & (cs == 0) & (ct == 0) & ((cv + cu) % P == 0) \
        & ((cx * cu) % P == 0) & ((cy * cu) % P == 0) \
        & ((cu * (cq + cp)) % P == 0)


def _v1(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return (cz != 0) & ((cs - ct) % P == 0) & ((cz * cp - cv * cs) % P == 0) \
        & ((cz * cq - cu * cs) % P == 0) & ((cz * cx - cs * cs) % P == 0)


def _v2(g, P):
    cx, cy, cz, cp, cq, cs, ct, cu, cv = _cols3(g)
    return (cz == 0) & ((ct + cs) % P == 0) & ((cu * cs) % P == 0) \
        & ((cv * cs) % P == 0) & ((cx * cs) % P == 0) \
        & ((cx * cu) % P == 0) & ((cx * cv) % P == 0) \
        & ((cu * cp - cq * cv) % P == 0) & ((cs * (cp + cq)) % P == 0)


def regime_mask_functions(L):
    """(label, mask_fn) pairs for L's regime; raises UncoveredRegime.

    mask_fn takes (grids, p) with grids an int64 (N, n, n) residue array and
    returns a boolean mask: which grids the label's conditions accept.
    """
    reg = recognize_table(L)
    if reg is None:
        raise UncoveredRegime(f"unrecognized table for {L!r}")
    kind = reg[0]
    if kind == "abelian":
        return [(SolutionLabel.ABELIAN,
                 lambda g, P: np.ones(g.shape[0], dtype=bool))]
    if kind == "vi":
        return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong2),
                (SolutionLabel.SKEW_SYMMETRIC, _skew2)]
    if kind == "ii":
        a, b = int(reg[1]), int(reg[2])
        if a and b:
            return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong3),
                    (SolutionLabel.ALPHA_BETA_SKEW,
                     lambda g, P: _ab_skew(g, P, a, b))]
        if not a and not b:
            return [(SolutionLabel.HEISENBERG_CASE1, _heis1),
                    (SolutionLabel.HEISENBERG_CASE2, _heis2)]
        raise UncoveredRegime(
            "II table with exactly one of alpha, beta zero is unclassified")
    if kind == "solvable":
        b, d = int(reg[1]), int(reg[2])
        if not b and d:
            return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong3),
                    (SolutionLabel.IV_DIAGONAL_CASE2,
                     lambda g, P: _diag2(g, P, d))]
        if b and d == 1:
            return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong3),
                    (SolutionLabel.IV_JORDAN_CASE2, _jordan2)]
        if not b and not d:
            return [(SolutionLabel.V_CASE1, _v1),
                    (SolutionLabel.V_CASE2, _v2)]
        raise UncoveredRegime(
            f"solvable table with beta={b}, delta={d} is unclassified")
    raise UncoveredRegime(f"table {kind!r} not classified")


def _sufficient_mask_functions(L):
    """Fallback for uncovered regimes: conditions known to be sufficient
    (strong symmetry solves the CYBE on every Lie algebra here)."""
    if L.n == 2:
        return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong2)]
    return [(SolutionLabel.STRONGLY_SYMMETRIC, _strong3)]


@dataclass(frozen=True)
class EnumerationReport:
    p: int
    dim: int
    algebra: str
    total: int
    backend: str
    workers: int
    solution_count: int
    predicate_count: int
    matched: int
    label_counts: dict
    missed_by_predicate: tuple  # solutions no label accepts (witness grids)
    false_positives: tuple      # label-accepted non-solutions
    confirmed: bool
    empirical_only: bool
    wall_time_ms: object = None


WITNESS_CAP = 100


def _witness(idx, n, p):
    g = decode_grids(np.array([idx], dtype=np.int64), n, p)[0]
    return {"id": int(idx), "grid": [[str(int(v)) for v in row] for row in g]}


def verify_classification(L, workers=1, budget=DEFAULT_BUDGET, backend=None,
                          timing=False):
    """Scan all tensors over GF(p) and compare against the classification.

    Confirmation means the oracle solution set equals the union of the
    regime's label predicates exactly.  On regimes without a classification
    the report is marked empirical_only and the predicate side degrades to
    the sufficient strong-symmetry condition.
    """
    t0 = time.perf_counter()
    p = _require_prime_field(L)
    total = candidate_count(L.n, p)
    ids, used_backend = scan_solution_ids(L, workers=workers, budget=budget,
                                          backend=backend)
    try:
        mask_fns = regime_mask_functions(L)
        empirical_only = False
    except UncoveredRegime:
        mask_fns = _sufficient_mask_functions(L)
        empirical_only = True

    sol_mask = np.zeros(total, dtype=bool)
    sol_mask[ids] = True
    label_counts = {}
    pred_mask = np.zeros(total, dtype=bool)
    chunk = 1 << 16
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        g = decode_grids(np.arange(start, stop, dtype=np.int64), L.n, p)
        for label, fn in mask_fns:
            m = fn(g, p)
            pred_mask[start:stop] |= m
            label_counts[label.value] = (
                label_counts.get(label.value, 0)
                + int(np.count_nonzero(m & sol_mask[start:stop])))

    missed = np.flatnonzero(sol_mask & ~pred_mask)
    extra = np.flatnonzero(pred_mask & ~sol_mask)
    matched = int(np.count_nonzero(sol_mask & pred_mask))
    report = EnumerationReport(
        p=p,
        dim=L.n,
        algebra=L.label,
        total=total,
        backend=used_backend,
        workers=workers,
        solution_count=int(ids.shape[0]),
        predicate_count=int(np.count_nonzero(pred_mask)),
        matched=matched,
        label_counts=label_counts,
        missed_by_predicate=tuple(_witness(i, L.n, p)
                                  for i in missed[:WITNESS_CAP]),
        false_positives=tuple(_witness(i, L.n, p)
                              for i in extra[:WITNESS_CAP]),
        confirmed=(not empirical_only and missed.size == 0
                   and extra.size == 0),
        empirical_only=empirical_only,
        wall_time_ms=(round((time.perf_counter() - t0) * 1000.0, 3)
                      if timing else None),
    )
    return report
