import random

import pytest

from jordantypes.errors import (
    EmptyPartitionError,
    InvalidArgumentError,
    WeightMismatchError,
)
from jordantypes.partitions import (
    Dominance,
    HilbertFunction,
    JordanDegreeType,
    Partition,
    almost_rectangular,
    ar_cover_number,
    bar_graph_partition,
    collapse_closure,
    conjugate,
    dominance_cmp,
    dominance_sum,
    dominates,
    hilbert_conjugate,
    hilbert_degree_type,
    is_stable,
    parse_degree_type,
    parse_partition,
    partitions_of,
    power_partition,
    render_partition,
)

from helpers import brute_cover_number


def test_partition_validation():
    with pytest.raises(InvalidArgumentError):
        Partition((2, 3))
    with pytest.raises(InvalidArgumentError):
        Partition((1, 0))
    assert Partition().weight == 0
    assert Partition.sorted([1, 3, 2]).parts == (3, 2, 1)


def test_conjugate_goldens():
    assert conjugate(Partition((3, 3, 3, 2, 1, 1))) == Partition((6, 4, 3))
    assert conjugate(Partition()) == Partition()
    assert conjugate(Partition((7, 2))) == Partition((2, 2, 1, 1, 1, 1, 1))


def test_conjugate_involution_random():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(0, 30)
        parts = []
        while n > 0:
            p = rng.randint(1, n)
            parts.append(p)
            n -= p
        p = Partition.sorted(parts)
        assert conjugate(conjugate(p)) == p


def test_dominance_goldens():
    assert dominance_cmp(Partition((2, 2, 1, 1)), Partition((3, 2, 1))) == Dominance.LESS
    assert dominance_cmp(Partition((3, 3, 3)), Partition((4, 2, 2, 1))) == Dominance.INCOMPARABLE
    assert dominance_cmp(Partition((5, 1)), Partition((5, 1))) == Dominance.EQUAL
    with pytest.raises(WeightMismatchError):
        dominance_cmp(Partition((2,)), Partition((3,)))


def test_dominance_conjugation_duality_exhaustive():
    # dominance reverses under conjugation, exhaustively through weight 12
    flip = {Dominance.LESS: Dominance.GREATER,
            Dominance.GREATER: Dominance.LESS,
            Dominance.EQUAL: Dominance.EQUAL,
            Dominance.INCOMPARABLE: Dominance.INCOMPARABLE}
    for n in range(1, 13):
        parts = list(partitions_of(n))
        for p in parts:
            for q in parts:
                assert dominance_cmp(conjugate(p), conjugate(q)) == \
                    flip[dominance_cmp(p, q)]


def test_hilbert_conjugate_goldens():
    assert hilbert_conjugate(HilbertFunction((1, 3, 2, 3, 3, 1))) == Partition((6, 4, 3))
    assert hilbert_conjugate(HilbertFunction((1, 3, 1, 3, 3, 2))) == Partition((6, 4, 3))
    assert hilbert_conjugate(HilbertFunction((1,))) == Partition((1,))


def test_bar_graph_goldens():
    assert bar_graph_partition(HilbertFunction((1, 3, 2, 3, 3, 1))) == Partition((6, 4, 2, 1))
    assert bar_graph_partition(HilbertFunction((1, 3, 1, 3, 3, 2))) == Partition((6, 3, 2, 1, 1))
    assert bar_graph_partition(HilbertFunction((1, 2, 2, 1))) == Partition((4, 2))


def test_bar_graph_vs_conjugate():
    rng = random.Random(7)
    for _ in range(300):
        values = [1] + [rng.randint(0, 5) for _ in range(rng.randint(0, 6))] + [1]
        h = HilbertFunction(values)
        bar, conj = bar_graph_partition(h), hilbert_conjugate(h)
        assert dominance_cmp(bar, conj) in (Dominance.LESS, Dominance.EQUAL)
        if h.is_unimodal():
            assert bar == conj


def test_degree_type_goldens():
    assert hilbert_degree_type(HilbertFunction((1, 3, 2, 3, 3, 1))) == \
        JordanDegreeType([(6, 0), (4, 1), (1, 1), (2, 3)])
    assert hilbert_degree_type(HilbertFunction((1, 3, 1, 3, 3, 2))) == \
        JordanDegreeType([(6, 0), (1, 1), (1, 1), (3, 3), (2, 3)])
    assert hilbert_degree_type(HilbertFunction((1,))) == JordanDegreeType([(1, 0)])


def test_degree_type_reconstructs_hilbert():
    rng = random.Random(5)
    for _ in range(200):
        values = [rng.randint(0, 4) for _ in range(rng.randint(1, 7))]
        while values and values[-1] == 0:
            values.pop()
        if not values:
            continue
        h = HilbertFunction(values)
        jdt = hilbert_degree_type(h)
        assert jdt.forget() == bar_graph_partition(h)
        assert jdt.bead_counts() == h


def test_almost_rectangular():
    assert almost_rectangular(7, 2) == Partition((4, 3))
    assert almost_rectangular(7, 4) == Partition((2, 2, 2, 1))
    assert almost_rectangular(5, 1) == Partition((5,))
    with pytest.raises(InvalidArgumentError):
        almost_rectangular(3, 4)
    for n in range(1, 15):
        for k in range(1, n + 1):
            p = almost_rectangular(n, k)
            assert p.weight == n and len(p) == k
            assert p.parts[0] - p.parts[-1] <= 1


def test_power_partition():
    assert power_partition(Partition((7, 5)), 2) == Partition((4, 3, 3, 2))
    assert power_partition(Partition((7,)), 3) == Partition((3, 2, 2))
    assert power_partition(Partition((3,)), 1) == Partition((3,))
    # a block below the power collapses to singletons
    assert power_partition(Partition((2,)), 5) == Partition((1, 1))


def test_is_stable():
    assert is_stable(Partition((5, 3)))
    assert not is_stable(Partition((2, 2)))
    assert is_stable(Partition((8,)))


def test_cover_number_goldens():
    assert ar_cover_number(Partition((2, 2))) == 1
    assert ar_cover_number(Partition((3, 1))) == 2
    assert ar_cover_number(Partition((5, 4, 2, 1))) == 2
    with pytest.raises(EmptyPartitionError):
        ar_cover_number(Partition())


def test_cover_number_matches_bruteforce():
    for n in range(1, 13):
        for p in partitions_of(n):
            assert ar_cover_number(p) == brute_cover_number(p), p
            assert (ar_cover_number(p) == 1) == (p.parts[0] - p.parts[-1] <= 1)


def test_dominance_sum():
    assert dominance_sum(Partition((4, 2)), Partition((3, 2))) == Partition((7, 4))
    p = Partition((3, 1))
    assert dominance_sum(p, Partition()) == p
    assert dominance_sum(Partition((1, 1)), Partition((1, 1))) == Partition((2, 2))


def test_collapse_closure_goldens():
    assert collapse_closure(JordanDegreeType([(4, 0), (2, 4), (2, 1), (3, 3)])) == \
        JordanDegreeType([(6, 0), (5, 1)])
    fixed = JordanDegreeType([(3, 0), (2, 5)])
    assert collapse_closure(fixed) == fixed
    assert collapse_closure(JordanDegreeType([(1, 0), (1, 1), (1, 2)])) == \
        JordanDegreeType([(3, 0)])


def test_collapse_closure_properties():
    rng = random.Random(12)
    for _ in range(120):
        entries = []
        for _ in range(rng.randint(1, 7)):
            entries.append((rng.randint(1, 4), rng.randint(0, 5)))
        jdt = JordanDegreeType(entries)
        closed = collapse_closure(jdt)
        assert closed.weight == jdt.weight
        assert len(closed) <= len(jdt)
        assert dominates(closed.forget(), jdt.forget())
        # closure is idempotent
        assert collapse_closure(closed) == closed


def test_render_parse_roundtrip():
    cases = [Partition(), Partition((5, 3, 3, 1)), Partition((2, 1, 1, 1, 1))]
    for p in cases:
        assert parse_partition(render_partition(p)) == p
        assert parse_partition(render_partition(p, compact=True)) == p
    assert render_partition(Partition((5, 3, 3, 1)), compact=True) == "(5,3^2,1)"
    assert parse_partition("(5,3^5,2^6,1^8)").weight == 40
    assert parse_partition("3,2,1") == Partition((3, 2, 1))


def test_parse_degree_type():
    assert parse_degree_type("(6_0,4_1,1_1,2_3)") == \
        JordanDegreeType([(6, 0), (4, 1), (1, 1), (2, 3)])
    assert str(JordanDegreeType([(6, 0), (5, 1)])) == "(6_0,5_1)"


def test_power_partition_matches_matrix_oracle():
    # exhaustive through weight 7, all powers to weight+1: raising the
    # Jordan matrix itself and reading its type must agree
    from jordantypes.commutant import jordan_matrix
    from jordantypes.linalg import ExactMatrix, FieldSpec, nilpotent_jordan_type

    field = FieldSpec()
    for n in range(1, 8):
        for p in partitions_of(n):
            mat = jordan_matrix(p, field)
            power = ExactMatrix.identity(field, n)
            for k in range(1, n + 2):
                power = power.mul(mat)
                assert nilpotent_jordan_type(power) == power_partition(p, k), (p, k)
