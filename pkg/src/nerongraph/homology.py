"""Exact integer linear algebra for graph chain complexes.

Boundary and coboundary matrices of an oriented graph, the intersection
matrix M = -(boundary o coboundary), Smith normal form over the integers
with unimodular transforms, and solvability/kernels of linear systems
modulo an arbitrary (possibly composite) positive integer q.

Everything is computed with Python's arbitrary-precision integers; no
floating point is used anywhere.  Smith reduction of integer Laplacians
overflows fixed-width integers even at modest sizes, so exactness is
non-negotiable here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .graph import MultiGraph


class IntMatrix:
    """An immutable matrix of arbitrary-precision integers.

    Matrices hash and compare by value, which lets expensive
    decompositions be memoised on the matrix itself.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None) -> None:
        data = tuple(tuple(self._check_int(x) for x in row) for row in rows)
        if data:
            widths = {len(row) for row in data}
            if len(widths) != 1:
                raise DimensionMismatch("rows of unequal length")
            width = widths.pop()
            if cols is not None and cols != width:
                raise DimensionMismatch(f"expected {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            cols = 0
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @staticmethod
    def _check_int(x: int) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"matrix entries must be integers, got {x!r}")
        return x

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(
            (tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), cols=n
        )

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def row_list(self) -> list[list[int]]:
        """Mutable copy of the entries."""
        return [list(row) for row in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            (self.column(j) for j in range(self.cols)), cols=self.rows
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix((tuple(-x for x in row) for row in self._data), cols=self.cols)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            (
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self._data
            ),
            cols=other.cols,
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(vector) != self.cols:
            raise DimensionMismatch(
                f"matrix has {self.cols} columns, vector has {len(vector)} entries"
            )
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self._data)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._data[i][i] for i in range(min(self.rows, self.cols)))

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.row_list()
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
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.cols, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._data]!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal D with U A V = D.

    The diagonal entries are nonnegative, each divides the next, and
    zeros trail.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal()


def _pivot(d: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    """Smallest nonzero absolute value in the trailing submatrix, ties
    broken by row-major position."""
    best = None
    best_val = None
    for i in range(t, rows):
        row = d[i]
        for j in range(t, cols):
            x = row[j]
            if x != 0:
                a = abs(x)
                if best_val is None or a < best_val:
                    best, best_val = (i, j), a
                    if a == 1:
                        return best
    return best


@lru_cache(maxsize=None)
def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms, deterministically.

    Pivots are chosen as the smallest nonzero absolute value (row-major
    on ties) and diagonal entries are sign-normalised to be nonnegative,
    so a given matrix always yields the same decomposition.  The result
    is cached on the (hashable) input matrix.
    """
    rows, cols = a.rows, a.cols
    d = a.row_list()
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, factor):
        drow, srow = d[dst], d[src]
        for j in range(cols):
            drow[j] += factor * srow[j]
        urow, usrc = u[dst], u[src]
        for j in range(rows):
            urow[j] += factor * usrc[j]

    def add_col(src, dst, factor):
        for row in d:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    for t in range(min(rows, cols)):
        while True:
            p = _pivot(d, t, rows, cols)
            if p is None:
                break
            swap_rows(t, p[0])
            swap_cols(t, p[1])
            pivot = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    add_row(t, i, -(d[i][t] // pivot))
                    if d[i][t] != 0:
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    add_col(t, j, -(d[t][j] // pivot))
                    if d[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # Row and column are clear; enforce divisibility of the rest.
            offender = None
            for i in range(t + 1, rows):
                row = d[i]
                for j in range(t + 1, cols):
                    if row[j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if p is None:
            break

    for t in range(min(rows, cols)):
        if d[t][t] < 0:
            for j in range(cols):
                d[t][j] = -d[t][j]
            for j in range(rows):
                u[t][j] = -u[t][j]

    return SmithDecomposition(
        IntMatrix(u, cols=rows), IntMatrix(d, cols=cols), IntMatrix(v, cols=cols)
    )


# -- graph matrices --------------------------------------------------------


def boundary_matrix(g: MultiGraph) -> IntMatrix:
    """The boundary map from 1-chains to 0-chains.

    Rows follow the vertex order, columns the edge order; the column of
    an edge is +1 at its tip and -1 at its tail, and the all-zero column
    for a loop.
    """
    rows = [[0] * g.n_edges for _ in range(g.n_vertices)]
    for j, e in enumerate(g.edges):
        if not e.is_loop:
            rows[g.vertex_index(e.tip)][j] = 1
            rows[g.vertex_index(e.tail)][j] = -1
    return IntMatrix(rows, cols=g.n_edges)


def coboundary_matrix(g: MultiGraph) -> IntMatrix:
    """The coboundary map from 0-cochains to 1-cochains: a vertex goes to
    the sum of edges ending at it minus the sum of edges starting at it.
    With the canonical identification of chains and cochains this is the
    transpose of the boundary matrix."""
    return boundary_matrix(g).transpose()


def intersection_matrix(g: MultiGraph) -> IntMatrix:
    """M = -(boundary o coboundary).

    The diagonal entry at a vertex is minus the number of non-loop edges
    at it, the off-diagonal entry at (v, w) is the number of edges
    joining v and w; M is the negative of the loopless graph Laplacian,
    and multidegrees of line bundles trivial on the generic fibre form
    its image lattice.
    """
    b = boundary_matrix(g)
    return -(b * b.transpose())


# -- systems modulo q -------------------------------------------------------


def _check_modulus(q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ValueError(f"modulus must be a positive integer, got {q!r}")


def solve_mod(a: IntMatrix, b: Sequence[int], q: int) -> tuple[int, ...] | None:
    """A solution x of a x = b (mod q), or None when there is none.

    Diagonalising with U a V = D turns the system into independent
    congruences d_i y_i = (U b)_i (mod q); kernels and images modulo a
    composite q come out of the integer Smith form directly, with no
    per-prime decomposition.
    """
    _check_modulus(q)
    if len(b) != a.rows:
        raise DimensionMismatch(
            f"matrix has {a.rows} rows, right-hand side has {len(b)} entries"
        )
    snf = smith_normal_form(a)
    c = snf.u.apply(b)
    diag = snf.diagonal
    y = [0] * a.cols
    for i in range(a.rows):
        d_i = diag[i] if i < len(diag) else 0
        rhs = c[i] % q
        g = gcd(d_i, q)  # gcd(0, q) == q
        if rhs % g != 0:
            return None
        if i < a.cols and d_i != 0:
            qg = q // g
            if qg > 1:
                y[i] = (rhs // g) * pow(d_i // g, -1, qg) % qg
    x = tuple(value % q for value in snf.v.apply(y))
    assert all((lhs - rhs) % q == 0 for lhs, rhs in zip(a.apply(x), b))
    return x


def image_contains_mod(a: IntMatrix, b: Sequence[int], q: int) -> bool:
    """Whether b lies in the image of a modulo q."""
    return solve_mod(a, b, q) is not None


def kernel_generators_mod(a: IntMatrix, q: int) -> list[tuple[int, ...]]:
    """Generators of {x : a x = 0 (mod q)} as a Z/qZ-module.

    With U a V = D, the kernel is V applied to the solutions of
    d_j y_j = 0 (mod q), i.e. spanned by (q / gcd(d_j, q)) times the
    columns of V.  Columns whose multiplier vanishes modulo q are
    dropped, so the generators are nonzero and independent whenever the
    diagonal entries are 0 or 1 (the case of graph boundary maps).
    """
    _check_modulus(q)
    snf = smith_normal_form(a)
    diag = snf.diagonal
    gens = []
    for j in range(a.cols):
        d_j = diag[j] if j < len(diag) else 0
        multiplier = q // gcd(d_j, q)
        if multiplier % q == 0:
            continue
        column = snf.v.column(j)
        gens.append(tuple((multiplier * x) % q for x in column))
    return gens


def subgroup_contained_mod(
    gens_a: Iterable[Sequence[int]], b_matrix: IntMatrix, q: int
) -> bool:
    """Whether every generator lies in the image of b_matrix modulo q.

    An empty generator list is vacuously contained.
    """
    _check_modulus(q)
    for gen in gens_a:
        if len(gen) != b_matrix.rows:
            raise DimensionMismatch(
                f"generator of length {len(gen)} against {b_matrix.rows} rows"
            )
        if not image_contains_mod(b_matrix, gen, q):
            return False
    return True
