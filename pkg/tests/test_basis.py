import random
from fractions import Fraction

import pytest

from graphsplines import (
    ZZ,
    Edge,
    LabeledGraph,
    PolynomialRing,
    Provenance,
    SplineMatrix,
    c3_flowup_obstruction,
    check_basis,
    compute_q,
    cramer_membership,
    divides_all_dets_probe,
    even_constant_term,
    exact_determinant,
    integer_flow_up_basis,
    label_lcm,
    spline_combination,
    spline_determinant,
    zero_constant_term,
)
from conftest import bundled_graph
from oracles import cofactor_determinant, random_unimodular, spans_integer_lattice


@pytest.fixture(scope="module")
def fig2():
    return bundled_graph("fig2")


@pytest.fixture(scope="module")
def fig2_basis(fig2):
    return integer_flow_up_basis(fig2)


@pytest.fixture(scope="module")
def fig2_matrix(fig2, fig2_basis):
    return SplineMatrix(fig2, fig2_basis.columns)


@pytest.fixture(scope="module")
def xy_matrix(qxy):
    g = bundled_graph("xy")
    x, y = qxy.variable("x"), qxy.variable("y")
    columns = [
        (qxy.one, qxy.one, qxy.one),
        (qxy.zero, x, x + y),
        (qxy.zero, qxy.zero, y * (x + y)),
    ]
    return SplineMatrix(g, columns)


class TestSplineMatrix:
    def test_rejects_non_spline_column(self, fig2):
        with pytest.raises(ValueError, match="not a spline"):
            SplineMatrix(fig2, [(1, 1, 1), (0, 4, 4), (0, 1, 0)])

    def test_rejects_wrong_count(self, fig2):
        with pytest.raises(ValueError, match="columns"):
            SplineMatrix(fig2, [(1, 1, 1)])


class TestDeterminant:
    def test_triangular_integer(self, fig2_matrix):
        assert spline_determinant(fig2_matrix) == 40
        assert cofactor_determinant(fig2_matrix.rows()) == 40

    def test_polynomial_example(self, qxy, xy_matrix):
        x, y = qxy.variable("x"), qxy.variable("y")
        assert spline_determinant(xy_matrix) == x * y * (x + y)

    def test_repeated_column_vanishes(self, fig2):
        m = SplineMatrix(fig2, [(1, 1, 1), (1, 1, 1), (0, 0, 10)])
        assert spline_determinant(m) == 0

    def test_bareiss_matches_cofactor_randomly(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert exact_determinant(ZZ, rows) == cofactor_determinant(rows)

    def test_bareiss_matches_cofactor_polynomials(self, qxy):
        rng = random.Random(4)
        x, y = qxy.variable("x"), qxy.variable("y")
        pool = [qxy.one, x, y, x + y, x * y, x - y, qxy.from_int(2)]
        for _ in range(25):
            rows = [[rng.choice(pool) for _ in range(3)] for _ in range(3)]
            assert exact_determinant(qxy, rows) == cofactor_determinant(rows)


class TestComputeQ:
    def test_integer_ring_uses_diagonal(self, fig2):
        q = compute_q(fig2)
        assert q.value == 40 and q.provenance is Provenance.PID_DIAGONAL

    def test_coprime_polynomials_use_label_product(self, qxy):
        q = compute_q(bundled_graph("xy"))
        x, y = qxy.variable("x"), qxy.variable("y")
        assert q.value == x * y * (x + y)
        assert q.provenance is Provenance.COPRIME_PRODUCT

    def test_label_lcm_is_a_strict_lower_bound_on_fig2(self, fig2):
        assert label_lcm(fig2) == 20
        assert compute_q(fig2).value == 40  # the bound is not always sharp

    def test_non_coprime_polynomials_fall_back_to_lcm(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        g = LabeledGraph.cycle(qxy, [x * y, y, x + y])
        q = compute_q(g)
        assert q.provenance is Provenance.LCM_LOWER_BOUND
        assert q.value == (x * y * (x + y)).normalized()


class TestCheckBasis:
    def test_accepts_canonical_basis(self, fig2, fig2_matrix):
        verdict = check_basis(fig2_matrix, compute_q(fig2))
        assert verdict.is_basis is True
        assert verdict.unit_factor == 1

    def test_rejects_scaled_column(self, fig2):
        scaled = SplineMatrix(fig2, [(1, 1, 1), (0, 4, 4), (0, 0, 20)])
        verdict = check_basis(scaled, compute_q(fig2))
        assert verdict.is_basis is False

    def test_accepts_handwritten_polynomial_basis(self, xy_matrix):
        verdict = check_basis(xy_matrix, compute_q(xy_matrix.graph))
        assert verdict.is_basis is True
        assert xy_matrix.graph.ring.is_unit(verdict.unit_factor)

    def test_zero_determinant_is_rejected_everywhere(self, fig2):
        degenerate = SplineMatrix(fig2, [(1, 1, 1), (1, 1, 1), (0, 0, 10)])
        verdict = check_basis(degenerate, compute_q(fig2))
        assert verdict.is_basis is False
        assert "zero" in verdict.reason

    def test_graph_mismatch_rejected(self, fig2_matrix):
        other_q = compute_q(bundled_graph("fig2-text"))
        with pytest.raises(ValueError, match="different graph"):
            check_basis(fig2_matrix, other_q)

    def test_unimodular_recombination_accepted(self, fig2, fig2_basis):
        rng = random.Random(31)
        q = compute_q(fig2)
        for _ in range(30):
            u, expected_unit = random_unimodular(rng, 3)
            columns = [
                spline_combination(ZZ, [u[r][j] for r in range(3)], list(fig2_basis.columns))
                for j in range(3)
            ]
            verdict = check_basis(SplineMatrix(fig2, columns), q)
            assert verdict.is_basis is True
            assert verdict.unit_factor == expected_unit
            assert spans_integer_lattice(columns, list(fig2_basis.columns))

    def test_lcm_provenance_accepts_sound_case(self, ):
        # parallel edges labeled x and x^2: lcm is x^2 and a candidate with
        # det == x^2 must be accepted even though Q is only a lower bound
        qx = PolynomialRing("rat", ["x"])
        x = qx.variable("x")
        g = LabeledGraph(qx, ["v1", "v2"], [Edge(0, 1, x), Edge(0, 1, x ** 2)])
        q = compute_q(g)
        assert q.provenance is Provenance.LCM_LOWER_BOUND
        matrix = SplineMatrix(g, [(qx.one, qx.one), (qx.zero, x ** 2)])
        verdict = check_basis(matrix, q)
        assert verdict.is_basis is True

    def test_lcm_provenance_undecided_case(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        g = LabeledGraph.cycle(qxy, [x * y, y, x + y])
        q = compute_q(g)
        columns = [
            (qxy.one, qxy.one, qxy.one),
            (qxy.zero, x * y, qxy.zero),
            (qxy.zero, qxy.zero, y * (x + y)),
        ]
        verdict = check_basis(SplineMatrix(g, columns), q)
        assert verdict.is_basis is None
        assert verdict.undecided


class TestCramer:
    def test_column_target(self, fig2_matrix, fig2_basis):
        coords = cramer_membership(fig2_matrix, fig2_basis.columns[0])
        assert coords == (40, 0, 0)

    def test_fig2_target(self, fig2_matrix):
        assert cramer_membership(fig2_matrix, (3, 15, 5)) == (120, 120, -40)

    def test_zero_target(self, fig2_matrix):
        assert cramer_membership(fig2_matrix, (0, 0, 0)) == (0, 0, 0)

    def test_polynomial_target(self, qxy, xy_matrix):
        x, y = qxy.variable("x"), qxy.variable("y")
        q = x * y * (x + y)
        target = (qxy.zero, qxy.zero, y * (x + y))
        coords = cramer_membership(xy_matrix, target)
        produced = spline_combination(qxy, list(coords), list(xy_matrix.columns))
        assert produced == tuple(q * entry for entry in target)

    def test_singular_matrix_rejected(self, fig2):
        degenerate = SplineMatrix(fig2, [(1, 1, 1), (1, 1, 1), (0, 0, 10)])
        with pytest.raises(ValueError, match="singular"):
            cramer_membership(degenerate, (1, 1, 1))

    def test_non_spline_target_rejected(self, fig2_matrix):
        with pytest.raises(ValueError, match="not a spline"):
            cramer_membership(fig2_matrix, (0, 1, 0))


class TestProbe:
    def test_lcm_divides(self, fig2):
        assert divides_all_dets_probe(fig2, 20, 500, 12345).ok

    def test_basis_determinant_divides(self, fig2):
        assert divides_all_dets_probe(fig2, 40, 500, 12345).ok

    def test_eighty_fails_with_witness(self, fig2):
        result = divides_all_dets_probe(fig2, 80, 500, 12345)
        assert not result.ok
        witness_det = exact_determinant(
            ZZ, [[result.counterexample[j][i] for j in range(3)] for i in range(3)]
        )
        assert witness_det % 80 != 0

    def test_deterministic_given_seed(self, fig2):
        a = divides_all_dets_probe(fig2, 80, 200, 7)
        b = divides_all_dets_probe(fig2, 80, 200, 7)
        assert a == b

    def test_input_validation(self, fig2):
        with pytest.raises(ValueError):
            divides_all_dets_probe(fig2, 20, 0, 1)
        with pytest.raises(ValueError):
            divides_all_dets_probe(fig2, 0, 10, 1)


class TestObstruction:
    def test_zx_instance(self):
        zx = PolynomialRing("int", ["x"])
        x = zx.variable("x")
        assert c3_flowup_obstruction(zx, x + 1, zx.from_int(2), x, even_constant_term)

    def test_integer_style_no_obstruction(self):
        # over a PID the ideal test accepts and no obstruction appears;
        # modeled here with constant polynomials and an always-true predicate
        zx = PolynomialRing("int", ["x"])
        assert (
            c3_flowup_obstruction(
                zx, zx.from_int(3), zx.from_int(2), zx.from_int(5), lambda p: True
            )
            is False
        )

    def test_two_variable_instance(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        assert c3_flowup_obstruction(qxy, x + y + 1, x, y, zero_constant_term)

    def test_coprimality_enforced(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        with pytest.raises(ValueError, match="coprime"):
            c3_flowup_obstruction(qxy, x, x * y, y, zero_constant_term)

    def test_zero_label_rejected(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        with pytest.raises(ValueError, match="nonzero"):
            c3_flowup_obstruction(qxy, qxy.zero, x, y, zero_constant_term)

    def test_predicate_semantics(self, qxy):
        x, y = qxy.variable("x"), qxy.variable("y")
        zx = PolynomialRing("int", ["x"])
        assert even_constant_term(zx.from_int(2)) and not even_constant_term(
            zx.variable("x") + 1
        )
        assert zero_constant_term(x + y) and not zero_constant_term(x + 1)


class TestAcceptanceSoundness:
    def test_accepted_columns_absorb_scaled_units_and_enumerated_splines(
        self, fig2, fig2_basis
    ):
        # whenever the determinant check accepts over the integers, Q*e_i and
        # enumerated splines all have integer coordinates in the accepted set
        from oracles import enumerate_integer_splines, solve_exact

        rng = random.Random(55)
        u, _ = random_unimodular(rng, 3)
        columns = [
            spline_combination(ZZ, [u[r][j] for r in range(3)], list(fig2_basis.columns))
            for j in range(3)
        ]
        verdict = check_basis(SplineMatrix(fig2, columns), compute_q(fig2))
        assert verdict.is_basis
        targets = [tuple(40 if j == i else 0 for j in range(3)) for i in range(3)]
        edges = [(e.u, e.v, e.label) for e in fig2.edges]
        targets += rng.sample(enumerate_integer_splines(3, edges, 15), 50)
        rows = [[columns[j][i] for j in range(3)] for i in range(3)]
        for target in targets:
            coords = solve_exact(rows, list(target))
            assert coords is not None
            assert all(c.denominator == 1 for c in coords)


class TestPartialConverse:
    def test_accepted_basis_determinant_divides_random_subsets(self, fig2, fig2_basis):
        # det of any accepted basis divides det of any n-subset
        rng = random.Random(77)
        pool = list(fig2_basis.columns)
        for _ in range(200):
            columns = []
            for _ in range(3):
                coeffs = [rng.randint(-3, 3) for _ in pool]
                columns.append(spline_combination(ZZ, coeffs, pool))
            det = exact_determinant(
                ZZ, [[columns[j][i] for j in range(3)] for i in range(3)]
            )
            assert det % 40 == 0
