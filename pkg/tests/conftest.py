"""Shared fixtures and the naive CYBE oracle.

`naive_residual` recomputes [r12, r13] + [r12, r23] + [r13, r23] straight
from the definition: place r's legs into the tensor cube, bracket the legs
that collide, expand through L.bracket.  It shares no code path with
cybe.solve (which uses a reindexed summation over the nonzero constants), so
agreement between the two is a real check, not a tautology.
"""

import random
from fractions import Fraction

import pytest

from cybe import QQ, PrimeField, Tensor2


def naive_residual(L, r):
    """Dense n^3 residual grid by literal expansion of the three brackets."""
    n = L.n
    zero = L.field.zero()
    t = [[[zero] * n for _ in range(n)] for _ in range(n)]
    k = r.k
    for i in range(n):
        for j in range(n):
            kij = k[i][j]
            if not kij:
                continue
            for a in range(n):
                for b in range(n):
                    kab = k[a][b]
                    if not kab:
                        continue
                    coef = kij * kab
                    # [r12, r13]: legs 1 collide -> [e_i, e_a] (x) e_j (x) e_b
                    vec = L.bracket_basis(i, a)
                    for m in range(n):
                        if vec[m]:
                            t[m][j][b] = t[m][j][b] + coef * vec[m]
                    # [r12, r23]: leg 2 of r12 meets leg 1 of r23
                    #   -> e_i (x) [e_j, e_a] (x) e_b
                    vec = L.bracket_basis(j, a)
                    for m in range(n):
                        if vec[m]:
                            t[i][m][b] = t[i][m][b] + coef * vec[m]
                    # [r13, r23]: legs 3 collide -> e_i (x) e_a (x) [e_j, e_b]
                    vec = L.bracket_basis(j, b)
                    for m in range(n):
                        if vec[m]:
                            t[i][a][m] = t[i][a][m] + coef * vec[m]
    return t


def residual_grids_equal(report, grid):
    n = report.residual.n
    return all(report.residual.entry(a, b, c) == grid[a][b][c]
               for a in range(n) for b in range(n) for c in range(n))


def rand_fraction(rng, span=4):
    num = rng.randint(-span, span)
    den = rng.randint(1, 3)
    return Fraction(num, den)


def rand_tensor(rng, n, field, span=4):
    if isinstance(field, PrimeField):
        rows = [[field.from_int(rng.randrange(field.p)) for _ in range(n)]
                for _ in range(n)]
    else:
        rows = [[rand_fraction(rng, span) for _ in range(n)]
                for _ in range(n)]
    return Tensor2.from_rows(rows, field)


@pytest.fixture
def rng():
    return random.Random(0xC1BE)


def all_tensors(n, field):
    """Every tensor over a prime field, candidate-id order."""
    p = field.p
    total = p ** (n * n)
    for idx in range(total):
        digits = []
        v = idx
        for _ in range(n * n):
            digits.append(v % p)
            v //= p
        digits.reverse()
        rows = [[field.from_int(digits[i * n + j]) for j in range(n)]
                for i in range(n)]
        yield Tensor2.from_rows(rows, field)
