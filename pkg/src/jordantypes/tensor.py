"""Clebsch-Gordan decompositions: the closed characteristic-zero formulas,
the block-sum extension, degree-tagged versions, and brute-force modular
types with their deviation vectors.

The modular type of a pair of blocks is computed, not looked up: the
two-variable monomial complete intersection is built over F_p and the
canonical element x + y is measured.  No sampling is involved because the
tensor decomposition is basis-canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import build_graded
from .errors import InvalidArgumentError
from .jordan import jordan_type
from .linalg import FieldSpec
from .partitions import HilbertFunction, JordanDegreeType, Partition, hilbert_conjugate
from .polyring import RingSpec


def cg_block(m: int, n: int) -> Partition:
    """Jordan type of the product of two Jordan blocks in characteristic
    zero (or large): (n+m-1, n+m-3, ..., n-m+1)."""
    if m < 1 or n < 1:
        raise InvalidArgumentError("block sizes must be positive")
    if m > n:
        m, n = n, m
    return Partition(range(n + m - 1, n - m, -2))


def cg_general(p: Partition, q: Partition) -> Partition:
    """Blockwise sum of cg_block over all part pairs (characteristic-zero
    regime; the caller is responsible for the characteristic hypothesis)."""
    parts = []
    for d in p.parts:
        for f in q.parts:
            parts.extend(cg_block(d, f).parts)
    return Partition.sorted(parts)


def cg_kernel_dim(p: Partition, q: Partition) -> int:
    """Kernel dimension of the tensor element: sum of min(d_i, f_j); equals
    the number of parts of cg_general(p, q)."""
    return sum(min(d, f) for d in p.parts for f in q.parts)


def cg_degree(m: int, s: int, n: int, t: int) -> JordanDegreeType:
    """Degree-tagged decomposition of blocks starting in degrees s and t:
    the k-th summand (n+m+1-2k) starts in degree s+t+k-1."""
    if m > n:
        m, n = n, m
    return JordanDegreeType(
        (n + m + 1 - 2 * k, s + t + k - 1) for k in range(1, m + 1))


def two_block_ci_hilbert(m: int, n: int) -> HilbertFunction:
    """Hilbert function of the two-variable monomial complete intersection
    with socle degree m + n - 2."""
    if m > n:
        m, n = n, m
    values = [min(d + 1, m, m + n - 1 - d) for d in range(m + n - 1)]
    return HilbertFunction(values)


def modular_lambda(m: int, n: int, p: int) -> Partition:
    """Jordan type of the canonical element x + y on the two-block monomial
    complete intersection over F_p; always has min(m, n) parts."""
    if m > n:
        m, n = n, m
    ring = RingSpec(("x", "y"), field=FieldSpec(p))
    algebra = build_graded(ring, [f"x^{m}", f"y^{n}"])
    return jordan_type(algebra, "x + y")


@dataclass(frozen=True)
class DeviationVector:
    """Deviation of the modular type from the rectangular baseline."""

    m: int
    n: int
    p: int
    epsilon: tuple

    def __str__(self):
        return "(" + ",".join(f"{e:+d}" if e else "0" for e in self.epsilon) + ")"


def deviation(m: int, n: int, p: int) -> DeviationVector:
    """epsilon(m, n, p): the modular type minus (n, n, ..., n) entrywise."""
    if m > n:
        m, n = n, m
    lam = modular_lambda(m, n, p)
    if len(lam) != m:
        raise InvalidArgumentError(
            f"modular type {lam} does not have {m} parts (internal bug)")
    return DeviationVector(m, n, p, tuple(x - n for x in lam.parts))


def char_zero_deviation(m: int) -> tuple:
    """The deviation in the non-modular regime: (m-1, m-3, ..., -(m-1))."""
    return tuple(m - 1 - 2 * k for k in range(m))


def is_standard(m: int, n: int, p: int) -> bool:
    """Whether the modular type is the full strong-Lefschetz shape.

    Computed outright (the type is a finite computation for fixed inputs);
    see congruence_screen for the literature's congruence test, which is
    kept separate because it disagrees with the computed truth on small
    cases such as (2, 3, 3).
    """
    return modular_lambda(m, n, p) == sl_shape(m, n)


def congruence_screen(m: int, n: int, p: int) -> bool:
    """The congruence test n not congruent to +-1..+-m mod p, sometimes
    reported as sufficient for standardness.  It admits computed
    counterexamples (lambda(2,3,3) = (3,3) is not the strong-Lefschetz
    shape (4,2) although 3 = 0 mod 3 passes the screen), so it is exposed
    only as a screen, never asserted."""
    return all(n % p != k % p and n % p != (-k) % p for k in range(1, m + 1))


def sl_shape(m: int, n: int) -> Partition:
    """Conjugate Hilbert function of the two-block complete intersection,
    the strong-Lefschetz Jordan type; coincides with cg_block(m, n)."""
    return hilbert_conjugate(two_block_ci_hilbert(m, n))
