"""The nilpotent commutator of a nilpotent Jordan matrix: centralizer
computation, radical-quotient projections, nilpotent-slice sampling of the
generic commuting Jordan type, and an exhaustive small-case oracle.

Sampling strategy: a matrix X commuting with B is nilpotent exactly when its
images under the projections onto the radical quotient (one matrix of
leading Toeplitz coefficients per block size) are all nilpotent, and every
nilpotent quotient image is conjugate, by a unit of the centralizer, into
strictly upper triangular form.  Conjugation preserves Jordan type, so
sampling the linear slice where every projection is strictly upper
triangular sees every Jordan type of the nilpotent cone.  The exhaustive
oracle does not use that argument: it enumerates all centralizer
coordinates and filters nilpotency by matrix powering.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyPartitionError,
    IncomparableSamplesError,
    InvalidArgumentError,
    StabilityViolationError,
    TooLargeError,
    WeightMismatchError,
)
from .linalg import ExactMatrix, FieldSpec, commutant_basis, kernel_basis, \
    nilpotent_jordan_type
from .partitions import Partition, ar_cover_number, dominates, is_stable
from .sampling import SamplingPlan, dominance_maximum

DEFAULT_QP_FIELD = FieldSpec(10007)
DEFAULT_BRUTE_BUDGET = 2_000_000


def jordan_matrix(p: Partition, field: FieldSpec) -> ExactMatrix:
    """Nilpotent Jordan matrix with block sizes p, largest first."""
    if not p.parts:
        raise EmptyPartitionError("empty partition has no Jordan matrix")
    n = p.weight
    mat = ExactMatrix.zeros(field, n, n)
    one = field.coerce(1)
    offset = 0
    for part in p.parts:
        for i in range(part - 1):
            mat.data[offset + i][offset + i + 1] = one
        offset += part
    return mat


@dataclass(frozen=True)
class CommutantModel:
    """Centralizer of a Jordan matrix with its radical-quotient projections."""

    partition: Partition
    field: FieldSpec
    matrix: ExactMatrix
    centralizer: tuple  # basis of {X : XB = BX}
    block_starts: tuple
    group_starts: dict  # block size q -> tuple of starts of size-q blocks

    @property
    def dimension(self) -> int:
        return len(self.centralizer)

    def projection(self, x: ExactMatrix, q: int):
        """pi_q(x): the matrix of leading Toeplitz coefficients between the
        size-q blocks."""
        starts = self.group_starts[q]
        return [[x.data[a][b] for b in starts] for a in starts]


def centralizer_model(p: Partition, field: FieldSpec = DEFAULT_QP_FIELD) -> CommutantModel:
    if not p.parts:
        raise EmptyPartitionError("empty partition")
    b = jordan_matrix(p, field)
    basis = commutant_basis(b)
    expected = sum(min(pi, pj) for pi in p.parts for pj in p.parts)
    if len(basis) != expected:
        raise InvalidArgumentError(
            f"centralizer dimension {len(basis)} != {expected} (internal bug)")
    starts = []
    offset = 0
    for part in p.parts:
        starts.append(offset)
        offset += part
    group_starts = {}
    for start, part in zip(starts, p.parts):
        group_starts.setdefault(part, []).append(start)
    group_starts = {q: tuple(v) for q, v in group_starts.items()}
    return CommutantModel(p, field, b, tuple(basis), tuple(starts), group_starts)


def nilpotent_slice_basis(model: CommutantModel):
    """Basis of the linear slice {X in the centralizer : every projection is
    strictly upper triangular}; a subspace of the nilpotent cone meeting
    every Jordan type in it."""
    field = model.field
    constraints = []  # (row, col) matrix positions forced to zero
    for q, starts in model.group_starts.items():
        for ai, a in enumerate(starts):
            for bi, b in enumerate(starts):
                if ai >= bi:
                    constraints.append((a, b))
    if not constraints:
        return list(model.centralizer)
    rows = []
    for pos in constraints:
        r, c = pos
        rows.append([mat.data[r][c] for mat in model.centralizer])
    coeff_vectors = kernel_basis(ExactMatrix(field, rows))
    out = []
    n = model.matrix.nrows
    for vec in coeff_vectors:
        combo = ExactMatrix.zeros(field, n, n)
        for k, c in enumerate(vec):
            if not c:
                continue
            basis_mat = model.centralizer[k].data
            for i in range(n):
                row = combo.data[i]
                brow = basis_mat[i]
                for jj in range(n):
                    if brow[jj]:
                        row[jj] = field.add(row[jj], field.mul(c, brow[jj]))
        out.append(combo)
    return out


@dataclass(frozen=True)
class GenericCommutingType:
    partition: Partition
    witness: ExactMatrix
    exploratory: bool  # True when the characteristic is outside the theorem range
    trials: int


def generic_commuting_type(p: Partition, plan: SamplingPlan,
                           field: FieldSpec = DEFAULT_QP_FIELD) -> GenericCommutingType:
    """Dominance maximum of Jordan types over the sampled nilpotent slice.

    In the admissible characteristic range (0, or larger than the weight)
    the result must be stable, have exactly the almost-rectangular cover
    number of parts, and dominate p; any violation raises
    StabilityViolationError since those are theorems there.  Smaller
    characteristics return data flagged exploratory instead.
    """
    model = centralizer_model(p, field)
    slice_basis = nilpotent_slice_basis(model)
    n = model.matrix.nrows
    samples = []
    for trial in range(plan.trials):
        coeffs = plan.coefficients(trial, len(slice_basis), field)
        x = ExactMatrix.zeros(field, n, n)
        for c, mat in zip(coeffs, slice_basis):
            if not c:
                continue
            for i in range(n):
                row = x.data[i]
                brow = mat.data[i]
                for jj in range(n):
                    if brow[jj]:
                        row[jj] = field.add(row[jj], field.mul(c, brow[jj]))
        samples.append((nilpotent_jordan_type(x), x))
    part, witness = dominance_maximum(samples)
    exploratory = field.p is not None and field.p <= p.weight
    if not exploratory:
        if not is_stable(part):
            raise StabilityViolationError(
                f"generic commuting type {part} of {p} is not stable")
        if len(part) != ar_cover_number(p):
            raise StabilityViolationError(
                f"generic commuting type {part} of {p} has {len(part)} parts, "
                f"expected {ar_cover_number(p)}")
        if not dominates(part, p):
            raise StabilityViolationError(
                f"generic commuting type {part} does not dominate {p}")
    return GenericCommutingType(part, witness, exploratory, plan.trials)


# -- exhaustive oracle ---------------------------------------------------------


def _batched_rank_mod(mats: np.ndarray, q: int) -> np.ndarray:
    """Ranks of a batch of matrices over F_q by vectorized elimination."""
    a = (mats % q).astype(np.int64).copy()
    batch, nrows, ncols = a.shape
    inv = np.zeros(q, dtype=np.int64)
    for v in range(1, q):
        inv[v] = pow(v, q - 2, q)
    row = np.zeros(batch, dtype=np.int64)
    rowidx = np.arange(nrows)[None, :]
    for col in range(ncols):
        colvals = a[:, :, col]
        valid = (rowidx >= row[:, None]) & (colvals != 0)
        has = valid.any(axis=1)
        bi = np.nonzero(has)[0]
        if not bi.size:
            continue
        piv = valid[bi].argmax(axis=1)
        r0 = row[bi]
        tmp = a[bi, r0, :].copy()
        a[bi, r0, :] = a[bi, piv, :]
        a[bi, piv, :] = tmp
        pv = a[bi, r0, col]
        a[bi, r0, :] = (a[bi, r0, :] * inv[pv][:, None]) % q
        pivot_rows = a[bi, r0, :]
        factors = a[bi, :, col].copy()
        factors[rowidx[0][None, :].repeat(bi.size, 0) <= r0[:, None]] = 0
        a[bi] = (a[bi] - factors[:, :, None] * pivot_rows[:, None, :]) % q
        row[bi] += 1
    return row


def _batched_types(mats: np.ndarray, q: int):
    """Distinct Jordan types of a batch of nilpotent matrices over F_q."""
    batch, n, _ = mats.shape
    ranks = [np.full(batch, n, dtype=np.int64)]
    power = mats % q
    while True:
        r = _batched_rank_mod(power, q)
        ranks.append(r)
        if not r.any():
            break
        power = np.matmul(power, mats) % q
    table = np.stack(ranks, axis=1)
    from .linalg import jordan_type_from_dims

    types = set()
    for seq in np.unique(table, axis=0):
        dims = [int(x) for x in seq]
        while len(dims) > 1 and dims[-2] == 0:
            dims.pop()
        types.add(jordan_type_from_dims(dims))
    return types


@dataclass(frozen=True)
class BruteForceResult:
    partition: Partition
    types: tuple  # all Jordan types observed over the nilpotent cone
    nilpotent_count: int
    searched: int


def brute_commuting_type(p: Partition, q: int = 3,
                         max_candidates: int = DEFAULT_BRUTE_BUDGET,
                         chunk: int = 1 << 17) -> BruteForceResult:
    """Enumerate every matrix commuting with the Jordan matrix of p over
    F_q, filter the nilpotent ones by powering, and return the dominance
    maximum of their Jordan types.

    Completely independent of the slice argument.  The search space has
    q^(centralizer dimension) points; TooLargeError above the budget.
    """
    field = FieldSpec(q)
    model = centralizer_model(p, field)
    dim = model.dimension
    total = q ** dim
    if total > max_candidates:
        raise TooLargeError(
            f"{total} = {q}^{dim} centralizer points exceed the budget "
            f"{max_candidates}")
    n = model.matrix.nrows
    basis = np.array([[[int(x) for x in row] for row in mat.data]
                      for mat in model.centralizer], dtype=np.int64)
    basis_flat = basis.reshape(dim, n * n)
    squarings = max(1, int(np.ceil(np.log2(n)))) if n > 1 else 1
    place = q ** np.arange(dim, dtype=np.int64)
    types = set()
    nilpotent_count = 0
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        codes = np.arange(start, stop, dtype=np.int64)
        digits = (codes[:, None] // place[None, :]) % q
        flat = np.matmul(digits, basis_flat) % q
        mats = flat.reshape(stop - start, n, n)
        power = mats
        for _ in range(squarings):
            power = np.matmul(power, power) % q
        mask = ~power.any(axis=(1, 2))
        survivors = mats[mask]
        if not survivors.shape[0]:
            continue
        nilpotent_count += survivors.shape[0]
        types |= _batched_types(survivors, q)
    observed = sorted(types, key=lambda t: t.parts, reverse=True)
    part, _ = dominance_maximum((t, None) for t in observed)
    return BruteForceResult(part, tuple(observed), nilpotent_count, total)


def compatibility_check(p: Partition, q: Partition) -> str:
    """Two distinct stable partitions cannot both be Jordan types of
    elements of one commutative local algebra; everything else is open."""
    if p.weight != q.weight:
        raise WeightMismatchError(f"weights differ: {p.weight} vs {q.weight}")
    if p != q and is_stable(p) and is_stable(q):
        return "BothStableForbidden"
    return "Unknown"
