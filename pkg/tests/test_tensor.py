from jordantypes.partitions import Partition, hilbert_conjugate, partitions_of
from jordantypes.tensor import (
    cg_block,
    cg_degree,
    cg_general,
    cg_kernel_dim,
    char_zero_deviation,
    congruence_screen,
    deviation,
    is_standard,
    modular_lambda,
    sl_shape,
    two_block_ci_hilbert,
)
from jordantypes.partitions import JordanDegreeType

from helpers import brute_tensor_type


def test_cg_block_goldens():
    assert cg_block(2, 3) == Partition((4, 2))
    assert cg_block(1, 5) == Partition((5,))
    assert cg_block(2, 2) == Partition((3, 1))
    assert cg_block(3, 2) == cg_block(2, 3)  # swap
    for m in range(1, 6):
        for n in range(m, 8):
            block = cg_block(m, n)
            assert block.weight == m * n and len(block) == m


def test_cg_general_goldens():
    assert cg_general(Partition((3,)), Partition((2, 1))) == Partition((4, 3, 2))
    assert cg_general(Partition((1, 1)), Partition((1, 1, 1))) == Partition((1,) * 6)
    assert cg_general(Partition((3,)), Partition((3,))) == Partition((5, 3, 1))
    assert cg_general(Partition((3,)), Partition((3,))) == \
        hilbert_conjugate(two_block_ci_hilbert(3, 3))


def test_cg_kernel_dim():
    p, q = Partition((3, 1)), Partition((2, 2))
    assert cg_kernel_dim(p, q) == 2 + 2 + 1 + 1
    assert cg_kernel_dim(p, q) == len(cg_general(p, q))


def test_cg_degree_goldens():
    assert cg_degree(2, 0, 3, 0) == JordanDegreeType([(4, 0), (2, 1)])
    assert cg_degree(1, 2, 7, 1) == JordanDegreeType([(7, 3)])
    assert cg_degree(2, 1, 2, 0) == JordanDegreeType([(3, 1), (1, 2)])
    for m, s, n, t in [(2, 0, 3, 0), (3, 1, 4, 2), (2, 2, 2, 0)]:
        jdt = cg_degree(m, s, n, t)
        assert jdt.forget() == cg_block(m, n)


def test_cg_general_against_brute_force_small():
    parts = [p for n in range(1, 5) for p in partitions_of(n)]
    for p in parts:
        for q in parts:
            assert cg_general(p, q) == brute_tensor_type(p, q), (p, q)


def test_modular_lambda_goldens():
    assert modular_lambda(2, 2, 2) == Partition((2, 2))
    assert modular_lambda(2, 3, 5) == Partition((4, 2))
    assert modular_lambda(2, 3, 5) == cg_block(2, 3)
    # p > m + n - 2 always reproduces the closed formula
    for m in range(1, 4):
        for n in range(m, 6):
            for p in (7, 11):
                if p > m + n - 2:
                    assert modular_lambda(m, n, p) == cg_block(m, n)


def test_modular_lambda_part_count():
    for m in range(1, 4):
        for n in range(m, 9):
            for p in (2, 3, 5):
                lam = modular_lambda(m, n, p)
                assert len(lam) == m and lam.weight == m * n


def test_deviation_goldens():
    assert deviation(2, 2, 2).epsilon == (0, 0)
    assert deviation(2, 3, 5).epsilon == (1, -1)
    assert deviation(3, 7, 11).epsilon == char_zero_deviation(3)
    assert char_zero_deviation(2) == (1, -1)
    assert str(deviation(2, 2, 2)) == "(0,0)"


def test_standardness_basics():
    # outside the modular range standardness always holds
    for m in range(1, 4):
        for n in range(m, 9):
            if 7 > m + n - 2:
                assert is_standard(m, n, 7), (m, n)
    # frozen modular pattern for m = 2: standard exactly when p does not
    # divide n (the surviving top coefficient is the binomial n choose 1)
    for p in (3, 5):
        for n in range(2, 16):
            assert is_standard(2, n, p) == (n % p != 0), (n, p)


def test_congruence_screen_is_not_sufficient():
    # the congruence screen passes (2,3,3) although the computed type
    # (3,3) is not the strong-Lefschetz shape (4,2); the screen is kept
    # as a reference but never asserted as a criterion
    assert congruence_screen(2, 3, 3)
    assert modular_lambda(2, 3, 3) == Partition((3, 3))
    assert sl_shape(2, 3) == Partition((4, 2))
    assert not is_standard(2, 3, 3)


def test_periodicity_small():
    # deviation depends only on n mod p^k while m <= min(p^k, n, n')
    p = 3
    for m in (2, 3):
        for k in (1, 2):
            mod = p ** k
            if m > mod:
                continue
            for n in range(max(m, mod), 15):
                n2 = n + mod
                if m > min(n, n2):
                    continue
                assert deviation(m, n, p).epsilon == deviation(m, n2, p).epsilon


def test_duality_small():
    # negative reverse under n' = -n mod p^k
    p = 3
    for m in (2, 3):
        for k in (2,):
            mod = p ** k
            for n in range(m, 15):
                n2 = (-n) % mod
                while n2 < m:
                    n2 += mod
                eps = deviation(m, n, p).epsilon
                eps2 = deviation(m, n2, p).epsilon
                assert eps2 == tuple(-e for e in reversed(eps)), (m, n, n2)


def test_two_block_hilbert():
    assert tuple(two_block_ci_hilbert(2, 3).values) == (1, 2, 2, 1)
    assert tuple(two_block_ci_hilbert(3, 3).values) == (1, 2, 3, 2, 1)
    assert tuple(two_block_ci_hilbert(1, 4).values) == (1, 1, 1, 1)


def test_three_factor_pipeline():
    # three-or-more factors go through the general machinery
    from jordantypes.algebra import build_graded
    from jordantypes.polyring import RingSpec
    from jordantypes.jordan import generic_jordan_type
    from jordantypes.sampling import SamplingPlan, Subspace

    a = build_graded(RingSpec(("x", "y", "z")), ["x^2", "y^2", "z^2"])
    plan = SamplingPlan(trials=12, seed=1).with_subspace(Subspace.linear())
    result = generic_jordan_type(a, plan)
    # [2]x[2]x[2] in characteristic zero: ((3,1) tensor (2)) = (4,2,2)
    assert result.partition == Partition((4, 2, 2))


def test_tensor_of_sl_factors_is_sl_shaped():
    # one-variable monomial factors are strong Lefschetz, and their tensor
    # element is too: the block formula reproduces the conjugate Hilbert
    # function of the two-variable complete intersection
    for m in range(1, 7):
        for n in range(m, 9):
            assert cg_block(m, n) == sl_shape(m, n)


def test_modular_lambda_against_raw_tensor_matrix():
    # fully independent route: the literal shift-tensor matrix over F_p
    from jordantypes.linalg import FieldSpec

    for m, n, p in [(2, 2, 2), (2, 3, 3), (3, 4, 3), (2, 5, 5), (3, 3, 2),
                    (4, 5, 3), (3, 7, 7), (4, 6, 2)]:
        raw = brute_tensor_type(Partition((m,)), Partition((n,)), FieldSpec(p))
        assert modular_lambda(m, n, p) == raw, (m, n, p)


def test_two_block_hilbert_matches_construction():
    from jordantypes.algebra import build_graded
    from jordantypes.polyring import RingSpec

    for m, n in [(1, 1), (2, 3), (3, 3), (2, 6), (4, 5)]:
        algebra = build_graded(RingSpec(("x", "y")), [f"x^{m}", f"y^{n}"])
        assert algebra.hilbert == two_block_ci_hilbert(m, n), (m, n)
