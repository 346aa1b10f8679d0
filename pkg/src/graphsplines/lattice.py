"""Integer-lattice engine: Hermite normal form and the canonical flow-up basis.

Splines over the integers are exactly the first n coordinates of integer
solutions of E*f = D*t, where E is the signed edge/vertex incidence matrix
and D the diagonal of edge labels. The kernel lattice of [E | -D] is
extracted with a column-style Hermite normal form; projecting its basis to
the f-coordinates and re-triangularizing yields the canonical flow-up basis
with minimal positive leading terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RingMismatchError
from .graphs import LabeledGraph


def _validated(matrix) -> list[list[int]]:
    rows = [list(row) for row in matrix]
    if not rows or not rows[0]:
        raise ValueError("matrix dimensions must be positive")
    width = len(rows[0])
    for row in rows:
        if len(row) != width:
            raise ValueError("matrix rows have unequal lengths")
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise ValueError(f"matrix entry {entry!r} is not an integer")
    return rows


def hermite_normal_form(matrix):
    """Column-style HNF: returns (H, U) with H == matrix @ U and det(U) = +-1.

    H is in column echelon form with strictly increasing pivot rows, positive
    pivots, entries left of each pivot reduced into [0, pivot), and zero
    columns trailing. Intermediate growth is controlled by reducing the
    active row modulo its running column gcd each elimination round.
    """
    rows = _validated(matrix)
    n_rows, n_cols = len(rows), len(rows[0])
    cols = [[rows[i][j] for i in range(n_rows)] for j in range(n_cols)]
    transform = [
        [1 if i == j else 0 for i in range(n_cols)] for j in range(n_cols)
    ]

    def add_multiple(target: int, source: int, factor: int) -> None:
        tc, sc = cols[target], cols[source]
        for i in range(n_rows):
            tc[i] += factor * sc[i]
        tu, su = transform[target], transform[source]
        for i in range(n_cols):
            tu[i] += factor * su[i]

    def swap(a: int, b: int) -> None:
        cols[a], cols[b] = cols[b], cols[a]
        transform[a], transform[b] = transform[b], transform[a]

    def negate(target: int) -> None:
        cols[target] = [-x for x in cols[target]]
        transform[target] = [-x for x in transform[target]]

    pivot = 0
    for row in range(n_rows):
        if pivot >= n_cols:
            break
        while True:
            active = [j for j in range(pivot, n_cols) if cols[j][row]]
            if len(active) <= 1:
                break
            smallest = min(active, key=lambda j: abs(cols[j][row]))
            for j in active:
                if j == smallest:
                    continue
                quotient = cols[j][row] // cols[smallest][row]
                if quotient:
                    add_multiple(j, smallest, -quotient)
        active = [j for j in range(pivot, n_cols) if cols[j][row]]
        if not active:
            continue
        if active[0] != pivot:
            swap(active[0], pivot)
        if cols[pivot][row] < 0:
            negate(pivot)
        for j in range(pivot):
            quotient = cols[j][row] // cols[pivot][row]
            if quotient:
                add_multiple(j, pivot, -quotient)
        pivot += 1

    hnf = [[cols[j][i] for j in range(n_cols)] for i in range(n_rows)]
    unimodular = [[transform[j][i] for j in range(n_cols)] for i in range(n_cols)]
    return hnf, unimodular


def kernel_basis(matrix) -> list[list[int]]:
    """Basis of the integer kernel lattice {v : matrix @ v == 0}.

    The transform columns sitting over zero columns of the HNF form a basis;
    the kernel of an integer matrix is automatically saturated.
    """
    hnf, transform = hermite_normal_form(matrix)
    n_rows = len(hnf)
    n_cols = len(hnf[0])
    basis = []
    for j in range(n_cols):
        if all(hnf[i][j] == 0 for i in range(n_rows)):
            basis.append([transform[i][j] for i in range(n_cols)])
    return basis


def spline_lattice_generators(graph: LabeledGraph) -> list[list[int]]:
    """n x n matrix whose columns generate the integer spline lattice.

    Solves E*f - D*t = 0 by taking the kernel lattice of the block matrix
    [E | -D] and projecting kernel generators to their f-coordinates. The
    projection is injective because every label is nonzero, so the n kernel
    generators map to n independent spline generators.
    """
    if graph.ring.kind != "int":
        raise RingMismatchError("the spline lattice is defined over the integer ring")
    n = graph.n
    m = len(graph.edges)
    if m == 0:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    block = []
    for k, edge in enumerate(graph.edges):
        row = [0] * (n + m)
        row[edge.u] += 1
        row[edge.v] -= 1
        row[n + k] = -edge.label
        block.append(row)
    kernel = kernel_basis(block)
    if len(kernel) != n:
        raise AssertionError("spline lattice rank is not the vertex count")
    return [[vector[i] for vector in kernel] for i in range(n)]


@dataclass(frozen=True)
class HnfBasis:
    """Canonical flow-up basis over the integers.

    Column k (0-based) lies in flow-up class k: it has exactly k leading
    zeros, its diagonal entry is the minimal positive leading term of that
    class, and entries left of each pivot are reduced into [0, pivot).
    """

    columns: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def determinant(self) -> int:
        return math.prod(self.diagonal)

    def rows(self) -> list[list[int]]:
        n = len(self.columns)
        return [[self.columns[j][i] for j in range(n)] for i in range(n)]

    def to_document(self) -> dict:
        return {
            "columns": [list(column) for column in self.columns],
            "diagonal": list(self.diagonal),
            "determinant": self.determinant,
        }


def integer_flow_up_basis(graph: LabeledGraph) -> HnfBasis:
    """Flow-up class basis with minimal positive leading terms (HNF diagonal)."""
    generators = spline_lattice_generators(graph)
    hnf, _ = hermite_normal_form(generators)
    n = graph.n
    columns = []
    for k in range(n):
        column = tuple(hnf[i][k] for i in range(n))
        if any(column[i] for i in range(k)) or column[k] <= 0:
            raise AssertionError("flow-up HNF lost its triangular pivot structure")
        columns.append(column)
    return HnfBasis(tuple(columns), tuple(column[k] for k, column in enumerate(columns)))


def lattice_membership(basis: HnfBasis, candidate):
    """Integer coordinates of ``candidate`` in the basis, or None.

    Back-substitution down the triangle; a non-divisible pivot step certifies
    that the candidate is outside the lattice.
    """
    n = len(basis.columns)
    candidate = list(candidate)
    if len(candidate) != n:
        raise ValueError(f"candidate has {len(candidate)} entries, expected {n}")
    coordinates = []
    for k in range(n):
        quotient, remainder = divmod(candidate[k], basis.diagonal[k])
        if remainder:
            return None
        coordinates.append(quotient)
        if quotient:
            column = basis.columns[k]
            for i in range(k, n):
                candidate[i] -= quotient * column[i]
    if any(candidate):
        raise AssertionError("residual after back-substitution")
    return tuple(coordinates)
