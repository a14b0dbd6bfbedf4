import random
from fractions import Fraction

import pytest

from jordantypes.errors import NotNilpotentError
from jordantypes.linalg import (
    ExactMatrix,
    FieldSpec,
    SparseRREF,
    commutant_basis,
    kernel_basis,
    nilpotent_jordan_type,
    rank,
    rank_sequence,
    rref,
)
from jordantypes.partitions import Partition

from helpers import chain_extraction_type, random_nilpotent_upper

QQ = FieldSpec()
F7 = FieldSpec(7)


def test_fieldspec_validation():
    with pytest.raises(Exception):
        FieldSpec(6)
    assert FieldSpec(2).p == 2
    assert QQ.is_rational


def test_rank_basics():
    assert rank(ExactMatrix.identity(QQ, 4)) == 4
    assert rank(ExactMatrix.zeros(QQ, 3, 5)) == 0
    # catalecticant of XY between the two degree-1 pieces: a permutation
    assert rank(ExactMatrix(QQ, [[0, 1], [1, 0]])) == 2
    m = ExactMatrix(QQ, [[Fraction(1, 2), 1], [1, 2]])
    assert rank(m) == 1


def test_rank_rational_vs_modular():
    rng = random.Random(99)
    big = FieldSpec(10007)
    for _ in range(40):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        data = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        rq = rank(ExactMatrix(QQ, data))
        rp = rank(ExactMatrix(big, data))
        assert rq == rp


def test_kernel_basis():
    assert kernel_basis(ExactMatrix.identity(QQ, 3)) == []
    kb = kernel_basis(ExactMatrix.zeros(QQ, 2, 2))
    assert len(kb) == 2 and kb[0][0] == 1 and kb[1][1] == 1
    kb = kernel_basis(ExactMatrix(QQ, [[1, 1]]))
    assert kb == [[Fraction(-1), Fraction(1)]]


def test_kernel_is_deterministic_and_annihilates():
    rng = random.Random(4)
    for trial in range(30):
        field = QQ if trial % 2 else F7
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        data = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        m = ExactMatrix(field, data)
        basis = kernel_basis(m)
        assert len(basis) == cols - rank(m)
        for vec in basis:
            for row in m.data:
                s = sum(field.mul(a, b) for a, b in zip(row, vec))
                assert field.coerce(s) == field.coerce(0)


def test_nilpotent_jordan_type_basics():
    block3 = ExactMatrix(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert nilpotent_jordan_type(block3) == Partition((3,))
    assert nilpotent_jordan_type(ExactMatrix.zeros(QQ, 4, 4)) == Partition((1, 1, 1, 1))
    with pytest.raises(NotNilpotentError):
        nilpotent_jordan_type(ExactMatrix.identity(QQ, 2))


def test_jordan_type_parts_equal_nullity():
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(1, 10)
        m = random_nilpotent_upper(rng, n, QQ)
        part = nilpotent_jordan_type(m)
        assert part.weight == n
        assert len(part) == n - rank(m)


def test_rank_sequence_matches_stanley_shape():
    # any rank sequence (40,20,8,2,1,0) conjugates to the 20-part type
    from jordantypes.linalg import jordan_type_from_dims

    part = jordan_type_from_dims([40, 20, 8, 2, 1, 0])
    assert part == Partition((5,) + (3,) * 5 + (2,) * 6 + (1,) * 8)
    assert len(part) == 20


def test_chain_extraction_oracle_agreement():
    rng = random.Random(2024)
    for trial in range(30):
        field = FieldSpec(10007) if trial % 3 else QQ
        n = rng.randint(1, 9)
        m = random_nilpotent_upper(rng, n, field)
        assert nilpotent_jordan_type(m) == chain_extraction_type(m), m.data


def test_commutant_dimensions():
    j2 = ExactMatrix(QQ, [[0, 1], [0, 0]])
    assert len(commutant_basis(j2)) == 2
    assert len(commutant_basis(ExactMatrix.zeros(QQ, 2, 2))) == 4
    j22 = ExactMatrix(QQ, [[0, 1, 0, 0], [0, 0, 0, 0],
                           [0, 0, 0, 1], [0, 0, 0, 0]])
    assert len(commutant_basis(j22)) == 8
    for mat in commutant_basis(j22):
        assert mat.mul(j22).data == j22.mul(mat).data


def test_commutant_min_sum_oracle():
    from jordantypes.commutant import jordan_matrix

    rng = random.Random(8)
    for _ in range(10):
        parts = []
        n = rng.randint(1, 6)
        while n > 0:
            p = rng.randint(1, n)
            parts.append(p)
            n -= p
        part = Partition.sorted(parts)
        b = jordan_matrix(part, QQ)
        expected = sum(min(x, y) for x in part.parts for y in part.parts)
        assert len(commutant_basis(b)) == expected


def test_sparse_rref_consistency():
    field = QQ
    rng = random.Random(31)
    for _ in range(25):
        rows = rng.randint(1, 7)
        cols = rng.randint(1, 7)
        data = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        dense_rows, pivots = rref(ExactMatrix(field, data))
        solver = SparseRREF(field)
        for row in data:
            solver.insert({i: field.coerce(c) for i, c in enumerate(row) if c})
        assert sorted(solver.rows) == pivots
        for pivot, sparse_row in solver.rows.items():
            idx = pivots.index(pivot)
            dense = [field.coerce(0)] * cols
            for c, v in sparse_row.items():
                dense[c] = v
            assert dense == dense_rows[idx]
