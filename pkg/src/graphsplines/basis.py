"""Determinantal basis criteria: exact determinants, the Q invariant, verdicts.

Over the integers the Q invariant is the product of the minimal leading
terms (the HNF diagonal) and det(C) = unit * Q is an exact basis criterion
in both directions. Over polynomial rings with pairwise coprime labels the
label product plays the same role. Otherwise only the label lcm is
available; it divides every n-subset determinant, which makes acceptance
sound but rejection impossible, hence the UNDECIDED verdict.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .graphs import LabeledGraph
from .lattice import integer_flow_up_basis
from .polynomials import Polynomial
from .splines import flow_up_witness, is_spline, spline_combination


def exact_determinant(ring, rows):
    """Fraction-free (Bareiss) determinant; valid in any ring with exact division.

    Every intermediate entry is a true subdeterminant, so the divisions are
    guaranteed exact and entries stay polynomial-sized.
    """
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise ValueError("determinant needs a nonempty square matrix")
    a = [[ring.check(entry) for entry in row] for row in rows]
    sign = 1
    previous = ring.one
    for k in range(n - 1):
        if ring.is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not ring.is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = ring.sub(
                    ring.mul(a[i][j], a[k][k]), ring.mul(a[i][k], a[k][j])
                )
                quotient = ring.exact_div(numerator, previous)
                if quotient is None:
                    raise AssertionError("Bareiss division was not exact")
                a[i][j] = quotient
            a[i][k] = ring.zero
        previous = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else ring.neg(result)


class SplineMatrix:
    """Ordered collection of n candidate columns, each a verified spline."""

    def __init__(self, graph: LabeledGraph, columns):
        columns = [tuple(column) for column in columns]
        if len(columns) != graph.n:
            raise ValueError(f"need exactly {graph.n} columns, got {len(columns)}")
        for index, column in enumerate(columns):
            check = is_spline(graph, column)
            if not check.ok:
                failed = ", ".join(str(v) for v in check.violations)
                raise ValueError(f"column {index + 1} is not a spline: {failed}")
        self.graph = graph
        self.columns = tuple(columns)

    def rows(self) -> list[list]:
        n = self.graph.n
        return [[self.columns[j][i] for j in range(n)] for i in range(n)]

    def to_document(self) -> dict:
        ring = self.graph.ring
        return {
            "columns": [[ring.to_text(e) for e in column] for column in self.columns]
        }


def spline_determinant(matrix: SplineMatrix):
    return exact_determinant(matrix.graph.ring, matrix.rows())


class Provenance(enum.Enum):
    PID_DIAGONAL = "pid-diagonal"
    COPRIME_PRODUCT = "coprime-product"
    LCM_LOWER_BOUND = "lcm-lower-bound"


@dataclass(frozen=True)
class QInvariant:
    """The reference determinant value together with how it was obtained.

    PID_DIAGONAL and COPRIME_PRODUCT support an exact iff criterion;
    LCM_LOWER_BOUND only guarantees that the value divides every n-subset
    determinant, so basis checks against it are one-directional.
    """

    graph: LabeledGraph
    value: object
    provenance: Provenance


def label_lcm(graph: LabeledGraph):
    """Normalized lcm of all edge labels; divides every n-subset determinant."""
    ring = graph.ring
    value = ring.one
    for label in graph.labels():
        value = ring.lcm(value, label)
    return value


def compute_q(graph: LabeledGraph) -> QInvariant:
    """Best available Q for the graph's ring, most decisive provenance first."""
    ring = graph.ring
    if ring.kind == "int":
        basis = integer_flow_up_basis(graph)
        return QInvariant(graph, basis.determinant, Provenance.PID_DIAGONAL)
    if ring.kind == "poly":
        if graph.pairwise_coprime_labels():
            return QInvariant(graph, ring.product(graph.labels()), Provenance.COPRIME_PRODUCT)
        return QInvariant(graph, label_lcm(graph), Provenance.LCM_LOWER_BOUND)
    raise ValueError(f"no Q invariant for ring {ring.description}")


@dataclass(frozen=True)
class BasisVerdict:
    """Outcome of a determinantal basis check.

    ``is_basis`` is True/False when the criterion is decisive and None for
    UNDECIDED (determinant not a unit multiple of a lower-bound Q).
    """

    is_basis: bool | None
    unit_factor: object | None
    reason: str
    determinant: object

    @property
    def undecided(self) -> bool:
        return self.is_basis is None


def check_basis(matrix: SplineMatrix, q: QInvariant) -> BasisVerdict:
    """Decide basis-hood of the columns by comparing det against Q."""
    if matrix.graph != q.graph:
        raise ValueError("Q invariant was computed for a different graph")
    ring = matrix.graph.ring
    determinant = spline_determinant(matrix)
    if ring.is_zero(determinant):
        return BasisVerdict(False, None, "determinant is zero", determinant)
    unit = ring.exact_div(determinant, q.value)
    if unit is not None and ring.is_unit(unit):
        return BasisVerdict(
            True, unit, "determinant is a unit multiple of Q", determinant
        )
    if q.provenance is Provenance.LCM_LOWER_BOUND:
        return BasisVerdict(
            None,
            None,
            "Q is only a divisor bound here and the determinant is not a unit "
            "multiple of it; the criterion cannot decide",
            determinant,
        )
    return BasisVerdict(
        False, None, "determinant is not a unit multiple of Q", determinant
    )


def cramer_membership(matrix: SplineMatrix, target) -> tuple:
    """Coordinates x with matrix @ x == det(matrix) * target, entrywise exact.

    Each coordinate is the determinant of the matrix with one column replaced
    by the target, so the result always lives in the ring.
    """
    graph = matrix.graph
    ring = graph.ring
    target = tuple(target)
    check = is_spline(graph, target)
    if not check.ok:
        raise ValueError("target is not a spline on this graph")
    determinant = spline_determinant(matrix)
    if ring.is_zero(determinant):
        raise ValueError("matrix is singular")
    n = graph.n
    coordinates = []
    for i in range(n):
        columns = list(matrix.columns)
        columns[i] = target
        rows = [[columns[j][r] for j in range(n)] for r in range(n)]
        coordinates.append(exact_determinant(ring, rows))
    return tuple(coordinates)


@dataclass(frozen=True)
class ProbeResult:
    ok: bool
    counterexample: tuple | None
    trials: int


def divides_all_dets_probe(
    graph: LabeledGraph, q, trials: int, seed: int
) -> ProbeResult:
    """Randomized check that q divides det of sampled n-column spline sets.

    Columns are random small combinations of the flow-up witnesses and the
    constant spline. Returns the first counterexample matrix if one appears.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    ring = graph.ring
    ring.check(q)
    if ring.is_zero(q):
        raise ValueError("q must be nonzero")
    n = graph.n
    pool = [tuple(ring.one for _ in range(n))]
    pool.extend(flow_up_witness(graph, i) for i in range(1, n))
    rng = random.Random(seed)
    for trial in range(trials):
        columns = []
        for _ in range(n):
            coefficients = [ring.from_int(rng.randint(-3, 3)) for _ in pool]
            columns.append(spline_combination(ring, coefficients, pool))
        rows = [[columns[j][i] for j in range(n)] for i in range(n)]
        determinant = exact_determinant(ring, rows)
        if not ring.divides(q, determinant):
            return ProbeResult(False, tuple(columns), trial + 1)
    return ProbeResult(True, None, trials)


def even_constant_term(p: Polynomial) -> bool:
    """Membership test for the ideal generated by 2 and x in ZZ[x]."""
    return p.constant_term() % 2 == 0


def zero_constant_term(p: Polynomial) -> bool:
    """Membership test for the ideal generated by all variables over a field."""
    return p.constant_term() == 0


def c3_flowup_obstruction(ring, a, b, c, in_ideal_bc) -> bool:
    """Decide the 3-cycle obstruction for labels (a, b, c) in edge order.

    For a triangle labeled a (v1~v2), b (v2~v3), c (v3~v1) with pairwise
    coprime labels, any flow-up class basis forces its middle column to be
    (0, a*x, c*y) with x a unit, which puts a inside the ideal generated by
    b and c. So if ``in_ideal_bc`` rejects a, no flow-up class basis exists
    and the cycle is obstructed.
    """
    labels = (ring.check(a), ring.check(b), ring.check(c))
    for label in labels:
        if ring.is_zero(label):
            raise ValueError("labels must be nonzero")
    for i in range(3):
        for j in range(i + 1, 3):
            if not ring.is_unit(ring.gcd(labels[i], labels[j])):
                raise ValueError("labels must be pairwise coprime")
    return not in_ideal_bc(a)
