"""Elements of L(x)L and L(x)L(x)L over an exact field.

Tensor2 holds r = sum k[i][j] e_i (x) e_j as a dense n x n grid; Tensor3 the
analogous n x n x n grid.  Grids are 0-based internally; anything that names
basis vectors in reports is 1-based (e_1..e_n).

For n = 3 a tensor exposes the conventional single-letter view of its grid
    x=k11 y=k22 z=k33 p=k12 q=k21 s=k13 t=k31 u=k23 v=k32
read-only, so reports and tests can speak that language.

Symmetry predicates:
  is_skew_symmetric        k[i][j] = -k[j][i] everywhere
  is_strongly_symmetric    symmetric grid and k[i][j]k[l][m] = k[i][l]k[j][m]
                           for all quadruples (the quantifier form is ground
                           truth; the reduced n<=3 systems live in
                           strongly_symmetric_reduced and are cross-checked
                           against it in the tests)
  is_alpha_beta_skew       the dim-3 class with p=-q, s=-t, u=-v, x=az, y=bz
                           and ab z^2 + b s^2 + a u^2 + p^2 = 0
"""

from __future__ import annotations

from itertools import permutations, product


class Tensor2:
    __slots__ = ("n", "k", "field")

    def __init__(self, n, k, field):
        self.n = n
        self.k = k  # tuple of tuples, 0-based
        self.field = field

    @classmethod
    def zero(cls, n, field):
        z = field.zero()
        return cls(n, tuple(tuple(z for _ in range(n)) for _ in range(n)), field)

    @classmethod
    def from_entries(cls, n, field, entries):
        """Grid from {(i, j): scalar} with 0-based indices; the rest zero."""
        z = field.zero()
        k = [[z] * n for _ in range(n)]
        for (i, j), val in entries.items():
            k[i][j] = val
        return cls(n, tuple(tuple(row) for row in k), field)

    @classmethod
    def from_rows(cls, rows, field):
        n = len(rows)
        return cls(n, tuple(tuple(row) for row in rows), field)

    def entry(self, i, j):
        return self.k[i][j]

    def entries(self):
        """Nonzero entries as ((i, j), value), 0-based, row-major."""
        return [
            ((i, j), self.k[i][j])
            for i in range(self.n)
            for j in range(self.n)
            if self.k[i][j]
        ]

    def is_zero(self):
        return not any(any(row) for row in self.k)

    # arithmetic (used by the bialgebra layer)

    def __add__(self, other):
        assert self.n == other.n
        return Tensor2(
            self.n,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.k, other.k)
            ),
            self.field,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Tensor2(
            self.n, tuple(tuple(-a for a in row) for row in self.k), self.field
        )

    def scale(self, c):
        return Tensor2(
            self.n, tuple(tuple(c * a for a in row) for row in self.k), self.field
        )

    def __eq__(self, other):
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.n == other.n and self.k == other.k

    def __hash__(self):
        return hash(self.k)

    def __repr__(self):
        terms = [f"k[{i+1}][{j+1}]={v}" for (i, j), v in self.entries()]
        return "Tensor2(" + (", ".join(terms) if terms else "0") + ")"

    # the dim-3 (and dim-2) named view

    @property
    def x(self):
        return self.k[0][0]

    @property
    def y(self):
        return self.k[1][1]

    @property
    def z(self):
        self._need3()
        return self.k[2][2]

    @property
    def p(self):
        return self.k[0][1]

    @property
    def q(self):
        return self.k[1][0]

    @property
    def s(self):
        self._need3()
        return self.k[0][2]

    @property
    def t(self):
        self._need3()
        return self.k[2][0]

    @property
    def u(self):
        self._need3()
        return self.k[1][2]

    @property
    def v(self):
        self._need3()
        return self.k[2][1]

    def _need3(self):
        if self.n < 3:
            raise ValueError("named coefficient needs dimension 3")


class Tensor3:
    __slots__ = ("n", "t", "field")

    def __init__(self, n, t, field):
        self.n = n
        self.t = t  # t[i][j][m], tuple^3, 0-based
        self.field = field

    @classmethod
    def zero(cls, n, field):
        z = field.zero()
        return cls(
            n,
            tuple(
                tuple(tuple(z for _ in range(n)) for _ in range(n))
                for _ in range(n)
            ),
            field,
        )

    def entry(self, i, j, m):
        return self.t[i][j][m]

    def entries(self):
        """Nonzero entries as ((i, j, m), value), 0-based, lexicographic."""
        return [
            ((i, j, m), self.t[i][j][m])
            for i in range(self.n)
            for j in range(self.n)
            for m in range(self.n)
            if self.t[i][j][m]
        ]

    def is_zero(self):
        return not self.entries()

    def __add__(self, other):
        assert self.n == other.n
        return Tensor3(
            self.n,
            tuple(
                tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(pa, pb)
                )
                for pa, pb in zip(self.t, other.t)
            ),
            self.field,
        )

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.n == other.n and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    def __repr__(self):
        terms = [f"t[{i+1}][{j+1}][{m+1}]={v}" for (i, j, m), v in self.entries()]
        return "Tensor3(" + (", ".join(terms) if terms else "0") + ")"


def twist_tau(r):
    """tau: x(x)y -> y(x)x, i.e. transpose of the grid."""
    return Tensor2(
        r.n,
        tuple(tuple(r.k[j][i] for j in range(r.n)) for i in range(r.n)),
        r.field,
    )


def cycle_xi(t):
    """xi: x(x)y(x)z -> y(x)z(x)x on simple tensors.

    On coefficients: the result's entry at (a, b, c) is t[c][a][b] (the
    coefficient that moved there came from the last leg).
    """
    n = t.n
    return Tensor3(
        n,
        tuple(
            tuple(
                tuple(t.t[c][a][b] for c in range(n)) for b in range(n)
            )
            for a in range(n)
        ),
        t.field,
    )


def is_skew_symmetric(r):
    for i in range(r.n):
        for j in range(i, r.n):
            if r.k[i][j] != -r.k[j][i]:
                return False
    return True


def is_symmetric(r):
    for i in range(r.n):
        for j in range(i + 1, r.n):
            if r.k[i][j] != r.k[j][i]:
                return False
    return True


def is_strongly_symmetric(r):
    """Symmetric grid with k[i][j]k[l][m] = k[i][l]k[j][m] for all quadruples."""
    if not is_symmetric(r):
        return False
    k = r.k
    rng = range(r.n)
    for i, j, l, m in product(rng, repeat=4):
        if k[i][j] * k[l][m] != k[i][l] * k[j][m]:
            return False
    return True


def strongly_symmetric_reduced(r):
    """Reduced strong-symmetry systems for n <= 3 (fast path).

    n=1: always.  n=2: p=q and xy=p^2.  n=3: p=q, s=t, u=v and
    xy=p^2, xz=s^2, yz=u^2, xu=sp.  Must agree with is_strongly_symmetric;
    the tests check that exhaustively over F_3.
    """
    k = r.k
    if r.n == 1:
        return True
    if r.n == 2:
        x, p, q, y = k[0][0], k[0][1], k[1][0], k[1][1]
        return p == q and x * y == p * p
    if r.n == 3:
        x, y, z = k[0][0], k[1][1], k[2][2]
        p, q = k[0][1], k[1][0]
        s, t = k[0][2], k[2][0]
        u, v = k[1][2], k[2][1]
        return (
            p == q
            and s == t
            and u == v
            and x * y == p * p
            and x * z == s * s
            and y * z == u * u
            and x * u == s * p
        )
    raise ValueError("reduced systems cover n <= 3 only")


def is_alpha_beta_skew(r, alpha, beta):
    """Dim-3 class: p=-q, s=-t, u=-v, x=alpha z, y=beta z and
    alpha beta z^2 + beta s^2 + alpha u^2 + p^2 = 0."""
    if r.n != 3:
        raise ValueError("alpha,beta-skew symmetry is a dim-3 notion")
    x, y, z = r.x, r.y, r.z
    p, q, s, t, u, v = r.p, r.q, r.s, r.t, r.u, r.v
    return (
        p == -q
        and s == -t
        and u == -v
        and x == alpha * z
        and y == beta * z
        and not (alpha * beta * z * z + beta * s * s + alpha * u * u + p * p)
    )


def determinant(rows, field):
    """Exact determinant by permutation expansion (fine for the small n here)."""
    n = len(rows)
    total = field.zero()
    for perm in permutations(range(n)):
        term = field.one()
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        # sign of the permutation by inversion count
        inv = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        total = total + (term if inv % 2 == 0 else -term)
    return total


def change_basis(r, q_rows):
    """Coefficients of r in the primed basis e_i = sum_s e'_s q[s][i].

    result[s][t] = sum_{i,j} k[i][j] q[s][i] q[t][j].  q must be invertible
    (checked via exact determinant).
    """
    n = r.n
    if len(q_rows) != n or any(len(row) != n for row in q_rows):
        raise ValueError(f"need an {n}x{n} grid")
    if not determinant(q_rows, r.field):
        raise ValueError("singular change of basis")
    zero = r.field.zero()
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            kij = r.k[i][j]
            if not kij:
                continue
            for s in range(n):
                qsi = q_rows[s][i]
                if not qsi:
                    continue
                coef = kij * qsi
                for t in range(n):
                    if q_rows[t][j]:
                        out[s][t] = out[s][t] + coef * q_rows[t][j]
    return Tensor2(n, tuple(tuple(row) for row in out), r.field)


def symmetry_flags(r, alpha=None, beta=None):
    """Non-exclusive symmetry classification of a grid.

    Returns a dict with keys strongly_symmetric, skew_symmetric and, when
    alpha/beta are supplied and n=3, alpha_beta_skew.
    """
    flags = {
        "strongly_symmetric": is_strongly_symmetric(r),
        "skew_symmetric": is_skew_symmetric(r),
    }
    if alpha is not None and beta is not None and r.n == 3:
        flags["alpha_beta_skew"] = is_alpha_beta_skew(r, alpha, beta)
    return flags
