"""Exact dense and sparse linear algebra over the rationals and prime fields.

Rationals use arbitrary-precision Fractions (rank additionally goes through
fraction-free Bareiss elimination on integer-cleared rows); prime fields use
int residues.  No floating point anywhere: Jordan types are
rank-discontinuous, so approximate arithmetic would be unsound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvalidArgumentError, NotNilpotentError
from .partitions import Partition, conjugate


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (p is None) or a prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise InvalidArgumentError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def coerce(self, x):
        if self.p is None:
            return x if isinstance(x, Fraction) else Fraction(x)
        return int(x) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if self.p is None:
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"


QQ = FieldSpec()


class ExactMatrix:
    """Dense matrix with exact entries; treat as immutable after construction."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: FieldSpec, data):
        self.field = field
        self.data = [[field.coerce(x) for x in row] for row in data]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        if any(len(row) != self.ncols for row in self.data):
            raise InvalidArgumentError("ragged matrix rows")

    @classmethod
    def zeros(cls, field, nrows, ncols):
        m = cls.__new__(cls)
        m.field = field
        m.nrows, m.ncols = nrows, ncols
        zero = field.coerce(0)
        m.data = [[zero] * ncols for _ in range(nrows)]
        return m

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.coerce(1)
        for i in range(n):
            m.data[i][i] = one
        return m

    def entry(self, i, j):
        return self.data[i][j]

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows or self.field != other.field:
            raise InvalidArgumentError("incompatible matrix product")
        p = self.field.p
        out = ExactMatrix.zeros(self.field, self.nrows, other.ncols)
        bdata = other.data
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = bdata[k]
                for j, b in enumerate(brow):
                    if b:
                        orow[j] += a * b
            if p is not None:
                out.data[i] = [x % p for x in orow]
        return out

    def add(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise InvalidArgumentError("incompatible matrix sum")
        f = self.field
        return ExactMatrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                               for r1, r2 in zip(self.data, other.data)])

    def scale(self, c) -> "ExactMatrix":
        f = self.field
        c = f.coerce(c)
        return ExactMatrix(f, [[f.mul(c, a) for a in row] for row in self.data])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, list(map(list, zip(*self.data)))
                           if self.data else [])

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.data == other.data)

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.nrows}x{self.ncols})"


def _rank_mod_p(rows, ncols, p):
    rank = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], p - 2, p)
        for i in range(rank + 1, nrows):
            f = rows[i][c] % p
            if f:
                factor = (f * inv) % p
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - factor * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_bareiss(rows, ncols):
    """Fraction-free elimination on integer rows; exact divisions only."""
    rank = 0
    nrows = len(rows)
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = prow[c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * pv - f * prow[j]) // prev
            ri[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(m: ExactMatrix) -> int:
    """Rank over the matrix's field."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.field.p is not None:
        return _rank_mod_p([row[:] for row in m.data], m.ncols, m.field.p)
    int_rows = []
    for row in m.data:
        denom = lcm(*(x.denominator for x in row)) if row else 1
        int_rows.append([int(x * denom) for x in row])
    return _rank_bareiss(int_rows, m.ncols)


def rref(m: ExactMatrix):
    """Reduced row echelon form.  Returns (rows, pivot_cols); pivots are the
    first nonzero entry in column order, normalized to 1, fully reduced."""
    f = m.field
    rows = [[f.coerce(x) for x in row] for row in m.data]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [f.mul(inv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, px))
                           for x, px in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def kernel_basis(m: ExactMatrix):
    """Basis of the right null space, one vector per pivot-free column in
    column order (free variable set to 1)."""
    rows, pivots = rref(m)
    f = m.field
    pivot_set = set(pivots)
    basis = []
    zero, one = f.coerce(0), f.coerce(1)
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = [zero] * m.ncols
        vec[free] = one
        for r, pcol in enumerate(pivots):
            coeff = rows[r][free]
            if coeff:
                vec[pcol] = f.neg(coeff)
        basis.append(vec)
    return basis


def rank_sequence(m: ExactMatrix):
    """Ranks [n, rank m, rank m^2, ...] down to 0; raises NotNilpotent if the
    rank stabilizes above zero."""
    if not m.is_square():
        raise InvalidArgumentError("rank sequence needs a square matrix")
    ranks = [m.nrows]
    power = m
    while ranks[-1] > 0:
        r = rank(power)
        if r == ranks[-1]:
            raise NotNilpotentError(f"rank stabilized at {r}")
        ranks.append(r)
        if r:
            power = power.mul(m)
    return ranks


def jordan_type_from_dims(dims) -> Partition:
    """Jordan partition from a strictly decreasing dimension sequence ending
    at 0 (either ranks of powers, or quotient dimensions)."""
    dims = list(dims)
    if dims and dims[-1] != 0:
        dims.append(0)
    diffs = [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]
    return conjugate(Partition(diffs))


def nilpotent_jordan_type(m: ExactMatrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix, via the rank sequence of its
    powers."""
    return jordan_type_from_dims(rank_sequence(m))


def commutant_basis(b: ExactMatrix):
    """Basis of {X : XB = BX}, via the kernel of the Sylvester-type system
    on the n^2 matrix entries.  Deterministic: entries vectorized row-major,
    kernel vectors ordered by free column."""
    if not b.is_square():
        raise InvalidArgumentError("commutant of a non-square matrix")
    n = b.nrows
    f = b.field
    rows = []
    # Equation for output position (r, c): sum_k X[r,k] B[k,c] - B[r,k] X[k,c] = 0.
    for r in range(n):
        for c in range(n):
            row = {}
            for k in range(n):
                coeff = b.data[k][c]
                if coeff:
                    idx = r * n + k
                    row[idx] = f.add(row.get(idx, f.coerce(0)), coeff)
                coeff = b.data[r][k]
                if coeff:
                    idx = k * n + c
                    row[idx] = f.sub(row.get(idx, f.coerce(0)), coeff)
            row = {k: v for k, v in row.items() if v}
            if row:
                rows.append(row)
    solver = SparseRREF(f)
    for row in rows:
        solver.insert(dict(row))
    vectors = solver.kernel_basis(n * n)
    out = []
    for vec in vectors:
        mat = ExactMatrix.zeros(f, n, n)
        for idx, val in vec.items():
            mat.data[idx // n][idx % n] = val
        out.append(mat)
    return out


class SparseRREF:
    """Incremental reduced row echelon form on sparse rows.

    Rows are dicts keyed by integer column; the pivot of each stored row is
    its smallest column, normalized to 1, and stored rows contain no other
    row's pivot (full reduction).  Insertion order does not affect the final
    row space; pivot choice is first-nonzero in column order.
    """

    __slots__ = ("field", "rows", "_containing")

    def __init__(self, field: FieldSpec):
        self.field = field
        self.rows = {}
        self._containing = {}

    def reduce(self, vec: dict) -> dict:
        """Normal form of vec against the current rows (vec is consumed)."""
        f = self.field
        hits = [c for c in vec if c in self.rows]
        for c in hits:
            coeff = vec.pop(c, None)
            if not coeff:
                continue
            for col, val in self.rows[c].items():
                if col == c:
                    continue
                new = f.sub(vec.get(col, 0) or f.coerce(0), f.mul(coeff, val))
                if new:
                    vec[col] = new
                else:
                    vec.pop(col, None)
        return vec

    def insert(self, vec: dict):
        """Reduce vec and, if independent, add it; returns its pivot or None."""
        f = self.field
        vec = self.reduce(vec)
        if not vec:
            return None
        pivot = min(vec)
        inv = f.inv(vec[pivot])
        row = {c: f.mul(inv, v) for c, v in vec.items()}
        # Back-substitute into existing rows containing the new pivot.
        for other_pivot in list(self._containing.get(pivot, ())):
            other = self.rows[other_pivot]
            coeff = other.get(pivot)
            if not coeff:
                continue
            for col, val in row.items():
                new = f.sub(other.get(col, f.coerce(0)) or f.coerce(0),
                            f.mul(coeff, val))
                if new:
                    if col not in other:
                        self._containing.setdefault(col, set()).add(other_pivot)
                    other[col] = new
                else:
                    if col in other:
                        other.pop(col)
                        self._containing[col].discard(other_pivot)
        self.rows[pivot] = row
        for col in row:
            self._containing.setdefault(col, set()).add(pivot)
        return pivot

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def contains(self, vec: dict) -> bool:
        return not self.reduce(dict(vec))

    def kernel_basis(self, ncols: int):
        """Kernel of the matrix whose rows span this space, as sparse dicts."""
        f = self.field
        one = f.coerce(1)
        basis = []
        for free in range(ncols):
            if free in self.rows:
                continue
            vec = {free: one}
            for pivot, row in self.rows.items():
                coeff = row.get(free)
                if coeff:
                    vec[pivot] = f.neg(coeff)
            basis.append(vec)
        return basis
