"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are checking: the
chain-extraction oracle builds explicit Jordan chains from kernels of
powers, the tensor oracle builds the literal tensor-product matrix, and the
cover-number oracle searches all groupings.
"""

from __future__ import annotations

import random
from fractions import Fraction

from jordantypes.algebra import build_graded, build_local
from jordantypes.duality import DualPresentation
from jordantypes.linalg import (
    ExactMatrix,
    FieldSpec,
    SparseRREF,
    kernel_basis,
    nilpotent_jordan_type,
)
from jordantypes.partitions import Partition
from jordantypes.polyring import DividedPowerPoly, Poly, RingSpec

QQ = FieldSpec()


# -- fixture algebras ---------------------------------------------------------


def firstex_graded():
    ring = RingSpec(("y", "z"), (1, 2))
    return build_graded(ring, ["y*z", "y^7", "z^3"])


def firstex_local():
    ring = RingSpec(("y", "z"), local=True)
    return build_local(ring, ["y*z", "z^3 + y^6"])


def stanley_presentation(field=QQ):
    names = ("x", "y", "z") + tuple(f"u{i}" for i in range(1, 11))
    ring = RingSpec(names, field=field)
    cubics = [m for m in ring.monomials_of_degree(3) if all(e == 0 for e in m[3:])]
    assert len(cubics) == 10
    terms = {}
    for i, mono in enumerate(cubics):
        expo = list(mono)
        expo[3 + i] += 1
        terms[tuple(expo)] = 1
    return DualPresentation(ring, DividedPowerPoly(ring, terms))


def stanley_linear_element(ring):
    return " + ".join(ring.variables)


def gondim_cubic(field=QQ):
    """H = (1,8,8,1); fails weak Lefschetz for every linear form."""
    ring = RingSpec(("x1", "x2", "x3", "x4", "u1", "u2", "u3", "u4"), field=field)
    from jordantypes.polyring import parse

    f = parse("X1*U1*U2 + X2*U2*U3 + X3*U3*U4 + X4*U4*U1", ring, dual=True)
    return DualPresentation(ring, f)


def gondim_quartic(field=QQ):
    """H = (1,5,6,5,1); weak but not strong Lefschetz."""
    ring = RingSpec(("u", "v", "x", "y", "z"), field=field)
    from jordantypes.polyring import parse

    f = parse("X*U^3 + Y*U*V^2 + Z*U^2*V", ring, dual=True)
    return DualPresentation(ring, f)


# -- random instance generation ------------------------------------------------


def random_graded_instance(rng: random.Random, field=QQ):
    """A random graded Artinian algebra in <= 3 variables with dim <= 60."""
    nvars = rng.randint(1, 3)
    names = ("x", "y", "z")[:nvars]
    ring = RingSpec(names, field=field)
    gens = []
    for name in names:
        gens.append(f"{name}^{rng.randint(2, 4)}")
    for _ in range(rng.randint(0, 2)):
        degree = rng.randint(2, 4)
        monos = ring.monomials_of_degree(degree)
        terms = {}
        for mono in monos:
            if rng.random() < 0.45:
                c = rng.randint(-3, 3)
                if c:
                    terms[mono] = c
        if terms:
            gens.append(Poly(ring, terms))
    return build_graded(ring, gens)


def random_local_instance(rng: random.Random, field=QQ):
    nvars = rng.randint(1, 3)
    names = ("x", "y", "z")[:nvars]
    ring = RingSpec(names, field=field, local=True)
    gens = []
    for name in names:
        gens.append(f"{name}^{rng.randint(2, 4)}")
    for _ in range(rng.randint(0, 2)):
        terms = {}
        for degree in range(1, 5):
            for mono in ring.monomials_of_degree(degree):
                if rng.random() < 0.25:
                    c = rng.randint(-3, 3)
                    if c:
                        terms[mono] = c
        poly = Poly(ring, terms)
        if not poly.is_zero() and poly.order() >= 1:
            gens.append(poly)
    return build_local(ring, gens)


def random_element(rng: random.Random, algebra, linear=False):
    coords = [0] * algebra.dimension
    for i, order in enumerate(algebra.basis_orders):
        if order < 1 or (linear and order != 1):
            continue
        coords[i] = rng.randint(-9, 9)
    return algebra.element_from_coords(coords)


# -- independent oracles --------------------------------------------------------


def chain_extraction_type(mat: ExactMatrix) -> Partition:
    """Jordan type by explicit chain extraction: kernels of powers give the
    height filtration; chain tops at each height are chosen independent of
    lower kernels and of the images of taller chains, then pushed down."""
    n = mat.nrows
    if n == 0:
        return Partition()
    field = mat.field
    kernels = [[]]  # kernels[h] = basis of ker(M^h)
    power = ExactMatrix.identity(field, n)
    index = 0
    while True:
        power = power.mul(mat)
        index += 1
        kernels.append(kernel_basis(power))
        if len(kernels[-1]) == n:
            break
        if index > n:
            raise AssertionError("matrix is not nilpotent")

    def apply(v):
        out = [field.coerce(0)] * n
        for i, row in enumerate(mat.data):
            s = field.coerce(0)
            for j, c in enumerate(v):
                if c and row[j]:
                    s = field.add(s, field.mul(row[j], c))
            out[i] = s
        return out

    chains = []
    carried = []  # vectors of taller chains pushed to the current height
    for h in range(index, 0, -1):
        base = SparseRREF(field)
        for vec in kernels[h - 1]:
            base.insert({i: c for i, c in enumerate(vec) if c})
        next_carried = []
        for vec in carried:
            base.insert({i: c for i, c in enumerate(vec) if c})
            next_carried.append(apply(vec))
        for cand in kernels[h]:
            sparse = {i: c for i, c in enumerate(cand) if c}
            if base.insert(dict(sparse)) is None:
                continue
            chain = [list(cand)]
            for _ in range(h - 1):
                chain.append(apply(chain[-1]))
            chains.append(h)
            next_carried.append(apply(cand))
        carried = [v for v in next_carried if any(v)]
    assert sum(chains) == n, (chains, n)
    return Partition.sorted(chains)


def random_nilpotent_upper(rng: random.Random, n: int, field: FieldSpec) -> ExactMatrix:
    mat = ExactMatrix.zeros(field, n, n)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.55:
                if field.p is None:
                    mat.data[i][j] = Fraction(rng.randint(-4, 4))
                else:
                    mat.data[i][j] = rng.randrange(field.p)
    return mat


def brute_tensor_type(p: Partition, q: Partition, field=QQ) -> Partition:
    """Jordan type of the sum of commuting shifts on the literal tensor
    product space: the brute-force side of the Clebsch-Gordan check."""
    a, b = p.weight, q.weight
    if a == 0 or b == 0:
        return Partition()
    n = a * b
    mat = ExactMatrix.zeros(field, n, n)
    one = field.coerce(1)

    def shift_pairs(partition):
        pairs = []
        offset = 0
        for part in partition.parts:
            for i in range(part - 1):
                pairs.append((offset + i + 1, offset + i))
            offset += part
        return pairs

    for (r, c) in shift_pairs(p):  # J_p ox I
        for k in range(b):
            mat.data[r * b + k][c * b + k] = one
    for (r, c) in shift_pairs(q):  # I ox J_q
        for k in range(a):
            i, j = k * b + r, k * b + c
            mat.data[i][j] = field.add(mat.data[i][j], one)
    return nilpotent_jordan_type(mat)


def brute_cover_number(p: Partition) -> int:
    """Minimal number of almost-rectangular groups, by exhaustive assignment
    of every part to a group (with pruning); no structural shortcut shared
    with the greedy implementation."""
    parts = list(p.parts)
    best = [len(parts)]
    groups = []  # (min, max) per group

    def rec(i):
        if len(groups) >= best[0] and i < len(parts):
            return
        if i == len(parts):
            best[0] = min(best[0], len(groups))
            return
        v = parts[i]
        for gi, (lo, hi) in enumerate(groups):
            nlo, nhi = min(lo, v), max(hi, v)
            if nhi - nlo <= 1:
                groups[gi] = (nlo, nhi)
                rec(i + 1)
                groups[gi] = (lo, hi)
        groups.append((v, v))
        rec(i + 1)
        groups.pop()

    rec(0)
    return best[0]
