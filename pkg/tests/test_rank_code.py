"""Rank distances, measured code parameters, the distribution, delta = omega."""

import itertools
import random

import pytest

from idealift.algebra import PrimeField
from idealift.rank_code import (
    code_from_matrix_set,
    code_report,
    format_rank_code,
    pairwise_rank_distances,
    parse_rank_code,
    rank_distance,
    rank_distribution,
    rank_distribution_scan,
    verify_delta_equals_omega,
)
from idealift.ring import MatrixRing, enumerate_nontrivial_idempotents, enumerate_ring, principal_ideal


def det2_rank_oracle(mat, p):
    if not (mat % p).any():
        return 0
    det = (mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]) % p
    return 2 if det else 1


def example1_ideal():
    F2 = PrimeField(2)
    return principal_ideal(F2.matrix([[0, 0], [0, 1]]), "left")


def test_rank_distance_basics():
    F2 = PrimeField(2)
    a = F2.matrix([[0, 1], [0, 0]])
    b = F2.matrix([[0, 0], [0, 1]])
    assert rank_distance(a, a) == 0
    assert rank_distance(a, b) == rank_distance(b, a)
    # the difference [[0,1],[0,1]] has equal rows, so the distance is 1;
    # the brute-force sweep below corroborates (all pairwise distances in
    # the example ideal are 1, hence its delta of 1)
    assert (a - b).entries() == (0, 1, 0, 1)
    assert rank_distance(a, b) == 1
    assert rank_distance(F2.identity(2), F2.zeros(2, 2)) == 2


def test_rank_distance_brute_force_over_example_ideal():
    ideal = list(example1_ideal())
    distances = [
        rank_distance(x, y)
        for x, y in itertools.combinations(ideal, 2)
    ]
    oracle = [
        det2_rank_oracle((x.array - y.array) % 2, 2)
        for x, y in itertools.combinations(ideal, 2)
    ]
    assert distances == oracle
    assert min(distances) == 1


def test_code_from_example_1():
    code = code_from_matrix_set(example1_ideal().elements)
    assert (code.k, code.l) == (2, 2)
    assert code.linear
    assert code.rho == 2
    assert code.delta == 1
    assert code.omega == 1


def test_code_from_example_3():
    F3 = PrimeField(3)
    ideal = principal_ideal(F3.matrix([[0, 2], [0, 1]]), "left")
    code = code_from_matrix_set(ideal.elements)
    assert (code.rho, code.delta) == (2, 1)
    assert code.size == 9


def test_two_element_code():
    F2 = PrimeField(2)
    code = code_from_matrix_set([F2.zeros(2, 2), F2.identity(2)])
    assert code.delta == 2
    assert code.omega == 2
    assert code.rho == 1
    assert code.linear


def test_singleton_and_errors():
    F2 = PrimeField(2)
    singleton = code_from_matrix_set([F2.identity(2)])
    assert singleton.delta is None  # a distinct pair is required
    assert not singleton.linear  # no zero element
    with pytest.raises(ValueError):
        code_from_matrix_set([])
    with pytest.raises(ValueError):
        code_from_matrix_set([F2.zeros(2, 2), F2.zeros(2, 3)])


def test_nonlinear_detection():
    F2 = PrimeField(2)
    no_zero = code_from_matrix_set([F2.identity(2), F2.matrix([[0, 1], [0, 0]])])
    assert not no_zero.linear
    not_closed = code_from_matrix_set(
        [F2.zeros(2, 2), F2.identity(2), F2.matrix([[0, 1], [0, 0]])]
    )
    assert not not_closed.linear
    assert not_closed.rho is None


@pytest.mark.parametrize("q,expected", [(2, (1, 9, 6)), (3, (1, 32, 48)), (5, (1, 144, 480))])
def test_rank_distribution(q, expected):
    dist = rank_distribution(q)
    assert dist.counts == expected
    assert rank_distribution_scan(q) == expected
    assert sum(dist.counts) == q ** 4
    assert dist.a0 == 1
    assert dist.a2 == (q ** 2 - 1) * (q ** 2 - q)


def test_rank_distribution_prime_power_closed_form():
    dist = rank_distribution(4)  # formula only; scan needs r = 1
    assert dist.counts == (1, 256 - 180 - 1, 180)
    with pytest.raises(ValueError):
        rank_distribution(6)


@pytest.mark.parametrize("p", [2, 3])
def test_distribution_by_independent_oracle(p):
    counts = [0, 0, 0]
    for m in enumerate_ring(MatrixRing(PrimeField(p))):
        counts[det2_rank_oracle(m.array, p)] += 1
    assert tuple(counts) == rank_distribution(p).counts


def test_delta_equals_omega_examples():
    report = verify_delta_equals_omega(code_from_matrix_set(example1_ideal().elements))
    assert report.applicable and report.equal
    assert report.delta == report.omega == 1
    assert report.min_pair is not None and report.min_element is not None
    assert rank_distance(*report.min_pair) == 1
    assert report.min_element.rank() == 1

    F2 = PrimeField(2)
    two = code_from_matrix_set([F2.zeros(2, 2), F2.identity(2)])
    report = verify_delta_equals_omega(two)
    assert report.equal and report.delta == 2


def test_delta_equals_omega_inapplicable():
    F2 = PrimeField(2)
    code = code_from_matrix_set([F2.identity(2), F2.matrix([[1, 1], [0, 1]])])
    report = verify_delta_equals_omega(code)
    assert not report.applicable
    assert report.equal is None


@pytest.mark.parametrize("p", [2, 3, 5])
def test_delta_equals_omega_ideal_sweep(p):
    ring = MatrixRing(PrimeField(p))
    for idem in enumerate_nontrivial_idempotents(ring):
        for side in ("left", "right"):
            code = code_from_matrix_set(principal_ideal(idem, side).elements)
            report = verify_delta_equals_omega(code)
            assert report.applicable and report.equal


@pytest.mark.parametrize("p", [2, 3])
def test_delta_equals_omega_random_subcodes(p):
    field = PrimeField(p)
    rng = random.Random(20240 + p)
    for _ in range(200):
        dim = rng.randint(1, 4)
        basis = [
            field.matrix([[rng.randrange(p) for _ in range(2)] for _ in range(2)])
            for _ in range(dim)
        ]
        span = set()
        for coeffs in itertools.product(range(p), repeat=dim):
            total = field.zeros(2, 2)
            for c, m in zip(coeffs, basis):
                total = total + c * m
            span.add(total)
        code = code_from_matrix_set(span)
        assert code.linear
        report = verify_delta_equals_omega(code)
        if code.size > 1:
            assert report.equal
        else:
            assert report.delta is None


def test_rank_distance_is_a_metric_on_m2f2():
    elements = list(enumerate_ring(MatrixRing(PrimeField(2))))
    dist = pairwise_rank_distances(elements)
    n = len(elements)
    for i in range(n):
        assert dist[i, i] == 0
        for j in range(n):
            assert dist[i, j] == dist[j, i]
            assert (dist[i, j] == 0) == (i == j)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert dist[i, k] <= dist[i, j] + dist[j, k]


def test_rank_code_file_round_trip():
    code = code_from_matrix_set(example1_ideal().elements)
    parsed = parse_rank_code(format_rank_code(code))
    assert parsed == code
    with pytest.raises(ValueError):
        parse_rank_code("subspacecode 4 2 4")
    with pytest.raises(ValueError):
        parse_rank_code("rankcode 2 2 2\n2 2 3\n0 0\n0 0")


def test_linear_code_basis():
    code = code_from_matrix_set(example1_ideal().elements)
    basis = code.basis()
    assert len(basis) == code.rho == 2
    # the basis spans the whole code
    F2 = PrimeField(2)
    span = set()
    for coeffs in itertools.product(range(2), repeat=len(basis)):
        total = F2.zeros(2, 2)
        for c, m in zip(coeffs, basis):
            total = total + c * m
        span.add(total)
    assert span == set(code.elements)
    nonlinear = code_from_matrix_set([F2.identity(2)])
    with pytest.raises(ValueError):
        nonlinear.basis()


def test_code_report_shape():
    report = code_report(code_from_matrix_set(example1_ideal().elements))
    assert set(report) == {"delta", "omega", "rho", "linear", "witnesses"}
    assert report["delta"] == 1 and report["omega"] == 1 and report["rho"] == 2
    assert report["linear"] is True
    assert "min_distance_pair" in report["witnesses"]
    assert "min_weight_element" in report["witnesses"]
