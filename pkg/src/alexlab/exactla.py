"""Exact integer linear algebra: Smith normal form, kernels, Hermite form,
lattice saturation and integer rank.

Everything here works with plain Python integers (arbitrary precision) and
immutable values; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                "entry count %d does not match %d x %d"
                % (len(self.entries), self.rows, self.cols)
            )

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DomainError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other[k, j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix(self.rows, other.cols, tuple(x for r in out for x in r))

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class SnfResult:
    """U * A * V = D with U, V unimodular and D diagonal, nonnegative,
    each entry dividing the next."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


def determinant(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if A.rows != A.cols:
        raise DomainError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    m = A.row_list()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def integer_rank(A: IntMatrix) -> int:
    """Rank of A over the rationals, by fraction-free row elimination."""
    m = [list(r) for r in A.row_list() if any(r)]
    rank = 0
    col = 0
    while m and col < A.cols:
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        a = m[rank][col]
        for i in range(rank + 1, len(m)):
            b = m[i][col]
            if b:
                m[i] = [a * x - b * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
        if rank == len(m):
            break
    return rank


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, c):
    """row dst += c * row src"""
    m[dst] = [x + c * y for x, y in zip(m[dst], m[src])]


def _add_col(m, dst, src, c):
    for row in m:
        row[dst] += c * row[src]


def smith_normal_form(A: IntMatrix) -> SnfResult:
    """Smith normal form by elementary row/column reduction.

    Pivot selection: smallest nonzero absolute value in the remaining
    submatrix, ties broken by (row, col) order, so the transforms are
    reproducible.
    """
    nr, nc = A.rows, A.cols
    d = A.row_list()
    u = IntMatrix.identity(nr).row_list()
    v = IntMatrix.identity(nc).row_list()

    t = 0
    while t < min(nr, nc):
        # Smallest-magnitude nonzero pivot in d[t:, t:].
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                e = d[i][j]
                if e != 0 and (best is None or abs(e) < best):
                    best = abs(e)
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            _swap_rows(d, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(d, t, pj)
            _swap_cols(v, t, pj)

        dirty = False
        for i in range(t + 1, nr):
            if d[i][t]:
                q = d[i][t] // d[t][t]
                if q:
                    _add_row(d, i, t, -q)
                    _add_row(u, i, t, -q)
                if d[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if d[t][j]:
                q = d[t][j] // d[t][t]
                if q:
                    _add_col(d, j, t, -q)
                    _add_col(v, j, t, -q)
                if d[t][j]:
                    dirty = True
        if dirty:
            continue  # a smaller pivot appeared; redo this step

        # Pivot must divide every remaining entry for the divisibility chain.
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if d[i][j] % d[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(d, t, offender, 1)
            _add_row(u, t, offender, 1)
            continue
        t += 1

    # Sign fix: diagonal nonnegative via row scaling by -1 (det flips, still unimodular).
    for i in range(min(nr, nc)):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    return SnfResult(
        U=IntMatrix.from_rows(u) if nr else IntMatrix.zero(0, 0),
        D=IntMatrix.from_rows(d) if nr else IntMatrix.zero(0, nc),
        V=IntMatrix.from_rows(v) if nc else IntMatrix.zero(0, 0),
    )


def kernel_basis(A: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice {v in Z^cols : A v = 0}."""
    snf = smith_normal_form(A)
    rank = sum(1 for x in snf.D.diagonal() if x)
    V = snf.V
    return [tuple(V[i, j] for i in range(A.cols)) for j in range(rank, A.cols)]


def hermite_row_basis(rows, ambient: int) -> list[tuple[int, ...]]:
    """Canonical (row-style HNF) basis of the lattice generated by `rows`.

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Two generating sets span the same lattice iff their Hermite bases
    are equal, which is how lattice equality is tested.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    for r in m:
        if len(r) != ambient:
            raise DomainError("row length does not match ambient rank")
    pivots = []
    top = 0
    for col in range(ambient):
        # xgcd-style elimination below the current top row.
        piv = None
        for i in range(top, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        for i in range(top + 1, len(m)):
            while m[i][col] != 0:
                if abs(m[i][col]) < abs(m[top][col]):
                    m[top], m[i] = m[i], m[top]
                q = m[i][col] // m[top][col]
                m[i] = [x - q * y for x, y in zip(m[i], m[top])]
        if m[top][col] < 0:
            m[top] = [-x for x in m[top]]
        pivots.append((top, col))
        top += 1
    m = m[:top]
    # Reduce entries above pivots for canonicity.
    for r, c in reversed(pivots):
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
    return [tuple(r) for r in m]


@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^ambient given by a basis (rows, independent over Q)."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient:
                raise DomainError("basis vector length does not match ambient rank")
        if self.basis:
            r = integer_rank(IntMatrix.from_rows(self.basis))
            if r != len(self.basis):
                raise DomainError("basis vectors are rationally dependent")

    @property
    def rank(self) -> int:
        return len(self.basis)


def lattice_from_generators(ambient: int, rows) -> Lattice:
    """Lattice spanned by an arbitrary (possibly dependent) generating set."""
    return Lattice(ambient, tuple(hermite_row_basis(rows, ambient)))


def saturate(L: Lattice) -> Lattice:
    """Smallest lattice containing L whose quotient of Z^n is torsion-free.

    Computed as the double integer kernel: ker(ker(L)^T), both kernels
    being saturated by construction.
    """
    if not L.basis:
        return L
    K = kernel_basis(IntMatrix.from_rows(L.basis))
    if not K:
        return lattice_from_generators(
            L.ambient, [tuple(1 if i == j else 0 for j in range(L.ambient)) for i in range(L.ambient)]
        )
    sat = kernel_basis(IntMatrix.from_rows(K))
    return lattice_from_generators(L.ambient, sat)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    if L1.ambient != L2.ambient:
        raise DomainError("ambient mismatch")
    return lattice_from_generators(L1.ambient, list(L1.basis) + list(L2.basis))


def lattice_intersection(L1: Lattice, L2: Lattice) -> Lattice:
    """Intersection of two lattices via the kernel of the stacked basis."""
    if L1.ambient != L2.ambient:
        raise DomainError("ambient mismatch")
    if not L1.basis or not L2.basis:
        return Lattice(L1.ambient, ())
    k1 = len(L1.basis)
    stacked = IntMatrix.from_rows(list(L1.basis) + [tuple(-x for x in b) for b in L2.basis])
    # Row vectors (a, b) with a*B1 = b*B2 form the kernel of stacked^T.
    ker = kernel_basis(stacked.transpose())
    gens = []
    for w in ker:
        a = w[:k1]
        vec = [0] * L1.ambient
        for coeff, brow in zip(a, L1.basis):
            for j, x in enumerate(brow):
                vec[j] += coeff * x
        gens.append(tuple(vec))
    return lattice_from_generators(L1.ambient, gens)


def solve_integer(P: IntMatrix, Q: IntMatrix) -> IntMatrix | None:
    """An integer solution X of P X = Q, or None when none exists."""
    if P.rows != Q.rows:
        raise DomainError("row mismatch in solve_integer")
    snf = smith_normal_form(P)
    rank = sum(1 for x in snf.D.diagonal() if x)
    UQ = snf.U.mul(Q)
    Y = [[0] * Q.cols for _ in range(P.cols)]
    for i in range(P.rows):
        if i < rank:
            di = snf.D[i, i]
            for j in range(Q.cols):
                if UQ[i, j] % di:
                    return None
                Y[i][j] = UQ[i, j] // di
        else:
            for j in range(Q.cols):
                if UQ[i, j]:
                    return None
    return snf.V.mul(IntMatrix.from_rows(Y))


def content(values) -> int:
    """gcd of a collection of integers; 0 for an empty or all-zero collection."""
    g = 0
    for x in values:
        g = gcd(g, x)
    return g
