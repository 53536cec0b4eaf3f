"""Field and matrix arithmetic, gl_order, and the matrix text format."""

import itertools

import numpy as np
import pytest

from idealift.algebra import (
    FieldElement,
    GLOrderQuery,
    MatrixFp,
    PrimeField,
    field_add,
    field_inv,
    field_mul,
    field_neg,
    format_matrix,
    gl_order,
    is_prime,
    mat_add,
    mat_mul,
    mat_neg,
    parse_matrix,
    prime_power,
    rank,
)


def det2_rank_oracle(mat: np.ndarray, p: int) -> int:
    """Independent 2x2 rank: 0 for zero, 2 for nonzero determinant, else 1."""
    if not (mat % p).any():
        return 0
    det = (mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]) % p
    return 2 if det else 1


def all_matrices(p, k=2, l=2):
    field = PrimeField(p)
    for entries in itertools.product(range(p), repeat=k * l):
        yield field.matrix(np.asarray(entries).reshape(k, l))


def test_primality_and_prime_powers():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 0, -4):
        with pytest.raises(ValueError):
            prime_power(bad)
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(2 ** 15 + 3)  # beyond the overflow-safety bound


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    field = PrimeField(p)
    elems = list(field)
    zero, one = field.zero(), field.one()
    for a in elems:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if a != zero:
            assert a * a.inverse() == one
    for a, b in itertools.product(elems, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(elems, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_field_spec_examples():
    F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)
    assert field_add(F2.element(1), F2.element(1)) == F2.zero()
    assert field_inv(F3.element(2)) == F3.element(2)
    assert field_mul(F5.element(2), F5.element(2)) == F5.element(4)
    assert field_neg(F3.element(1)) == F3.element(2)


def test_field_errors():
    F2, F3 = PrimeField(2), PrimeField(3)
    with pytest.raises(ValueError):
        field_add(F2.element(1), F3.element(1))
    with pytest.raises(ZeroDivisionError):
        field_inv(F3.element(0))


def test_matrix_add_and_identity():
    F2 = PrimeField(2)
    a = F2.matrix([[0, 1], [0, 0]])
    b = F2.matrix([[0, 0], [0, 1]])
    assert mat_add(a, b) == F2.matrix([[0, 1], [0, 1]])
    eye = F2.identity(2)
    for m in all_matrices(2):
        assert mat_mul(eye, m) == m
        assert mat_add(m, mat_neg(m)).is_zero()


def test_matrix_product_against_worked_form():
    # right-multiplying by [[0,2],[0,1]] over F_3 lands on [[0,2a0+a1],[0,2a2+a3]]
    F3 = PrimeField(3)
    g = F3.matrix([[0, 2], [0, 1]])
    for m in all_matrices(3):
        a0, a1, a2, a3 = m.entries()
        expected = F3.matrix([[0, 2 * a0 + a1], [0, 2 * a2 + a3]])
        assert mat_mul(m, g) == expected


def test_matrix_shape_errors():
    F2 = PrimeField(2)
    with pytest.raises(ValueError):
        mat_add(F2.zeros(2, 2), F2.zeros(2, 3))
    with pytest.raises(ValueError):
        mat_mul(F2.zeros(2, 3), F2.zeros(2, 3))
    with pytest.raises(ValueError):
        mat_add(F2.zeros(2, 2), PrimeField(3).zeros(2, 2))


def test_rank_examples_and_transpose():
    F2, F3 = PrimeField(2), PrimeField(3)
    assert rank(F2.zeros(2, 2)) == 0
    assert rank(F2.identity(2)) == 2
    assert rank(F3.matrix([[0, 2], [0, 1]])) == 1
    for p in (2, 3):
        for m in all_matrices(p):
            assert m.rank() == m.transpose().rank()
            assert m.rank() == det2_rank_oracle(m.array, p)


def test_rank_subadditivity():
    # exhaustive over M2(F_2), randomized over M2(F_3)
    mats2 = list(all_matrices(2))
    for a, b in itertools.product(mats2, repeat=2):
        assert (a + b).rank() <= a.rank() + b.rank()
    rng = np.random.default_rng(2024)
    F3 = PrimeField(3)
    for _ in range(500):
        a = F3.matrix(rng.integers(0, 3, size=(2, 2)))
        b = F3.matrix(rng.integers(0, 3, size=(2, 2)))
        assert (a + b).rank() <= a.rank() + b.rank()


@pytest.mark.parametrize("q,expected", [(2, 6), (3, 48), (5, 480)])
def test_gl_order_against_brute_force(q, expected):
    count = sum(
        1 for m in all_matrices(q) if det2_rank_oracle(m.array, q) == 2
    )
    assert count == expected
    assert gl_order(q) == count


def test_gl_order_prime_powers():
    assert gl_order(4) == (16 - 1) * (16 - 4) == 180
    # the generic product expansion at n = 2
    for q in (2, 3, 4, 5, 8, 9):
        assert gl_order(q, 2) == (q ** 2 - 1) * (q ** 2 - q)
    with pytest.raises(ValueError):
        gl_order(6)
    with pytest.raises(ValueError):
        GLOrderQuery(12)


def test_scalar_multiplication():
    F3 = PrimeField(3)
    m = F3.matrix([[1, 2], [0, 1]])
    assert 2 * m == m + m
    assert F3.element(2) * m == m + m
    assert 0 * m == F3.zeros(2, 2)


def test_matrix_hash_and_ordering_key():
    F2 = PrimeField(2)
    a = F2.matrix([[0, 1], [0, 0]])
    b = F2.matrix([[0, 1], [0, 0]])
    assert a == b and hash(a) == hash(b)
    assert a.entries() == (0, 1, 0, 0)
    assert sorted({a, b}, key=MatrixFp.entries) == [a]


def test_matrix_text_format_round_trip():
    F5 = PrimeField(5)
    m = F5.matrix([[0, 1, 2, 3], [4, 0, 1, 2]])
    assert parse_matrix(format_matrix(m)) == m
    empty = F5.zeros(0, 3)
    assert parse_matrix(format_matrix(empty)) == empty


def test_matrix_text_format_errors():
    with pytest.raises(ValueError):
        parse_matrix("2 2\n0 0\n0 0")
    with pytest.raises(ValueError):
        parse_matrix("2 2 2\n0 0\n0 5")
    with pytest.raises(ValueError):
        parse_matrix("2 2 2\n0 0")
    with pytest.raises(ValueError):
        parse_matrix("1 2 2\n0 1\n1 1")


def test_field_element_value_range():
    F7 = PrimeField(7)
    assert F7.element(-1).value == 6
    assert F7.element(13).value == 6
    assert FieldElement(21, F7).value == 0
