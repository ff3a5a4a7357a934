"""Square matrices over GF(2^m) and the MDS / involutory predicates."""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .gf2m import FieldSpec

MAX_ORDER = 8


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class MatrixGF:
    """An n x n matrix of field elements (ints) tied to its field."""

    field: FieldSpec
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if not 1 <= n <= MAX_ORDER:
            raise MatrixError(f"order {n} outside 1..{MAX_ORDER}")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise MatrixError(f"row {i} has {len(r)} entries, expected {n}")
            for a in r:
                if not self.field.contains(a):
                    raise MatrixError(f"entry {a!r} not in {self.field}")

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [a for r in self.rows for a in r]

    def __str__(self):
        fmt = self.field.format
        return "\n".join(" ".join(fmt(a) for a in r) for r in self.rows)


def matrix(field, rows):
    return MatrixGF(field, rows)


def identity(field, n):
    return MatrixGF(field, [[int(i == j) for j in range(n)] for i in range(n)])


def det_elimination(rows, f):
    """Determinant of an int grid by Gaussian elimination over ``f``.

    The pivot is the first nonzero entry in the column; no pivot means
    the matrix is singular.  Row swaps need no sign change in
    characteristic two.
    """
    a = [list(r) for r in rows]
    n = len(a)
    mul = f.mul
    d = 1
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return 0
        if p != k:
            a[k], a[p] = a[p], a[k]
        pivot = a[k][k]
        d = mul(d, pivot)
        pinv = f.inv(pivot)
        for i in range(k + 1, n):
            if a[i][k]:
                c = mul(a[i][k], pinv)
                ri, rk = a[i], a[k]
                for j in range(k, n):
                    ri[j] ^= mul(c, rk[j])
    return d


def det_cofactor(rows, f):
    """Determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    mul = f.mul
    if n == 2:
        return mul(rows[0][0], rows[1][1]) ^ mul(rows[0][1], rows[1][0])
    d = 0
    for j in range(n):
        if rows[0][j]:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            d ^= mul(rows[0][j], det_cofactor(sub, f))
    return d


def det(A):
    return det_elimination(A.rows, A.field)


def _check_same(A, B):
    if A.n != B.n:
        raise MatrixError(f"order mismatch: {A.n} vs {B.n}")
    if A.field != B.field:
        raise MatrixError(f"field mismatch: {A.field} vs {B.field}")


def mat_mul(A, B):
    _check_same(A, B)
    mul = A.field.mul
    n = A.n
    cols = list(zip(*B.rows))
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            s = 0
            for x, y in zip(r, c):
                s ^= mul(x, y)
            row.append(s)
        out.append(row)
    return MatrixGF(A.field, out)


def is_involutory(A):
    return mat_mul(A, A).rows == identity(A.field, A.n).rows


def submatrix(A, rows, cols):
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols) or not rows:
        raise MatrixError("submatrix needs equal, nonempty row/column sets")
    for i in rows + cols:
        if not 0 <= i < A.n:
            raise MatrixError(f"index {i} out of range for order {A.n}")
    return MatrixGF(A.field, [[A.rows[i][j] for j in cols] for i in rows])


def minor_index_sets(n):
    """All (rows, cols) pairs of a square submatrix, in evaluation order.

    Increasing size, then lexicographic row set, then column set, so the
    1x1 minors (zero entries) are tested first.
    """
    for s in range(1, n + 1):
        subsets = list(combinations(range(n), s))
        for rs in subsets:
            for cs in subsets:
                yield rs, cs


def minor_count(n):
    """Number of square submatrices of an n x n matrix: C(2n, n) - 1."""
    return comb(2 * n, n) - 1


def check_minors(A, early_exit=True):
    """Return (all minors nonsingular, number of determinants evaluated)."""
    g = A.rows
    f = A.field
    evaluated = 0
    ok = True
    for rs, cs in minor_index_sets(A.n):
        evaluated += 1
        if det_elimination([[g[i][j] for j in cs] for i in rs], f) == 0:
            ok = False
            if early_exit:
                break
    return ok, evaluated


def is_mds(A):
    return check_minors(A)[0]


def distinct_values(A):
    return len(set(A.entries()))


def check_permutation(P, n):
    P = tuple(P)
    if sorted(P) != list(range(n)):
        raise MatrixError(f"{P} is not a permutation of range({n})")
    return P


def inverse_permutation(P):
    out = [0] * len(P)
    for i, p in enumerate(P):
        out[p] = i
    return tuple(out)


def permute(A, P, Q):
    """R[i][j] = A[P[i]][Q[j]], i.e. the permuted product P A Q."""
    P = check_permutation(P, A.n)
    Q = check_permutation(Q, A.n)
    return MatrixGF(A.field, [[A.rows[p][q] for q in Q] for p in P])


def conjugate(A, P):
    """Relabel rows and columns simultaneously (P A P^-1)."""
    return permute(A, P, P)


def transpose(A):
    return MatrixGF(A.field, list(zip(*A.rows)))


def symmetry_images(A):
    """All images of A under conjugation by S_n and transposition."""
    for P in permutations(range(A.n)):
        C = conjugate(A, P)
        yield C
        yield transpose(C)
