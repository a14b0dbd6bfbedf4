"""Finite-dimensional Artinian quotients of polynomial and regular local
rings, with canonical monomial bases, exact reduction data, Hilbert
functions, and multiplication matrices.

Graded quotients are built degree by degree; local quotients through an
m-adic truncation that is raised until the dimension stabilizes (then the
truncation ideal is genuinely zero and the quotient is exact).
"""

from __future__ import annotations

from .errors import (
    InvalidArgumentError,
    NotArtinianError,
    NotHomogeneousError,
    NotInMaximalIdealError,
    NonUnitConstantError,
)
from .linalg import ExactMatrix, SparseRREF
from .partitions import HilbertFunction
from .polyring import Poly, RingSpec, parse

DEFAULT_DIM_CAP = 10000


class AlgebraElement:
    """An element of an ArtinAlgebra in normal form."""

    __slots__ = ("algebra", "poly", "coords")

    def __init__(self, algebra, poly: Poly, coords):
        self.algebra = algebra
        self.poly = poly
        self.coords = list(coords)

    @property
    def ring(self):
        return self.algebra.ring

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def in_maximal_ideal(self) -> bool:
        return not self.coords[0]

    def is_homogeneous(self) -> bool:
        return self.poly.is_homogeneous()

    def degree(self):
        return self.poly.degree()

    def order(self):
        return self.poly.order()

    def power(self, k: int) -> "AlgebraElement":
        result = self.algebra.one()
        for _ in range(k):
            result = self.algebra.reduce(result.poly.mul(self.poly))
        return result

    def add(self, other: "AlgebraElement") -> "AlgebraElement":
        return self.algebra.reduce(self.poly.add(other.poly))

    def scale(self, c) -> "AlgebraElement":
        return self.algebra.reduce(self.poly.scale(c))

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.algebra is other.algebra and self.coords == other.coords)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"AlgebraElement({self.poly})"


class ArtinAlgebra:
    """A finite-dimensional quotient algebra with a canonical monomial basis.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, ring, generators, mode, basis, basis_orders, hilbert,
                 reducers, col_lists, col_indexes, zero_above):
        self.ring = ring
        self.generators = list(generators)
        self.mode = mode  # "graded" | "local"
        self.basis = list(basis)  # monomials, sorted by (order, grevlex desc)
        self.basis_orders = list(basis_orders)
        self.basis_index = {m: i for i, m in enumerate(self.basis)}
        self.hilbert = hilbert
        self.dimension = len(self.basis)
        self.socle_degree = len(hilbert.values) - 1
        self._reducers = reducers      # degree -> SparseRREF (graded), or {None: rref}
        self._col_lists = col_lists    # degree -> [monomial] in column order
        self._col_indexes = col_indexes  # degree -> {monomial: column}
        self._zero_above = zero_above  # degrees beyond this reduce to zero
        self._offsets = [0]
        for h in hilbert.values:
            self._offsets.append(self._offsets[-1] + h)
        self._var_matrices = None
        self._basis_matrices = None
        self._madic_dims = None

    # -- construction helpers ------------------------------------------------

    @property
    def field(self):
        return self.ring.field

    def is_graded(self) -> bool:
        return self.mode == "graded"

    def degree_slice(self, d: int):
        """Basis index range [lo, hi) of degree/order d."""
        if d >= len(self.hilbert.values):
            return self.dimension, self.dimension
        return self._offsets[d], self._offsets[d + 1]

    def sperner(self) -> int:
        """Maximum Hilbert function value."""
        return max(self.hilbert.values)

    # -- reduction ------------------------------------------------------------

    def _reduce_degree_part(self, terms, d):
        """Normal form of a homogeneous degree-d chunk; returns {monomial: coeff}."""
        if d > self._zero_above:
            return {}
        reducer = self._reducers[d]
        colindex = self._col_indexes[d]
        cols = self._cols_of(d)
        vec = {colindex[m]: c for m, c in terms.items()}
        vec = reducer.reduce(vec)
        return {cols[i]: c for i, c in vec.items()}

    def _cols_of(self, d):
        return self._col_lists[d]

    def reduce(self, poly: Poly) -> AlgebraElement:
        """Normal form of a polynomial in the quotient."""
        field = self.field
        coords = [field.coerce(0)] * self.dimension
        if self.mode == "graded":
            by_degree = {}
            for m, c in poly.terms.items():
                by_degree.setdefault(self.ring.weighted_degree(m), {})[m] = c
            residue = {}
            for d, chunk in by_degree.items():
                residue.update(self._reduce_degree_part(chunk, d))
        else:
            reducer = self._reducers[None]
            colindex = self._col_indexes[None]
            vec = {}
            for m, c in poly.terms.items():
                col = colindex.get(m)
                if col is not None:  # terms beyond the truncation are zero
                    vec[col] = c
            vec = reducer.reduce(vec)
            cols = self._col_lists[None]
            residue = {cols[i]: c for i, c in vec.items()}
        terms = {}
        for m, c in residue.items():
            coords[self.basis_index[m]] = c
            terms[m] = c
        return AlgebraElement(self, Poly(self.ring, terms), coords)

    def element(self, src) -> AlgebraElement:
        """Build an element from an expression string, Poly, or coordinates."""
        if isinstance(src, AlgebraElement):
            return src
        if isinstance(src, Poly):
            return self.reduce(src)
        if isinstance(src, str):
            return self.reduce(parse(src, self.ring))
        raise InvalidArgumentError(f"cannot build an element from {type(src).__name__}")

    def element_from_coords(self, coords) -> AlgebraElement:
        field = self.field
        coords = [field.coerce(c) for c in coords]
        terms = {m: c for m, c in zip(self.basis, coords) if c}
        return AlgebraElement(self, Poly(self.ring, terms), coords)

    def zero(self) -> AlgebraElement:
        return self.element_from_coords([0] * self.dimension)

    def one(self) -> AlgebraElement:
        return self.element_from_coords([1] + [0] * (self.dimension - 1))

    # -- multiplication --------------------------------------------------------

    def _mult_matrix_direct(self, ell: AlgebraElement) -> ExactMatrix:
        n = self.dimension
        mat = ExactMatrix.zeros(self.field, n, n)
        for j, mono in enumerate(self.basis):
            product = self.reduce(ell.poly.monomial_mul(mono))
            for i, c in enumerate(product.coords):
                if c:
                    mat.data[i][j] = c
        return mat

    def mult_matrix(self, ell) -> ExactMatrix:
        """Matrix of multiplication by ell on the canonical basis; requires
        ell in the maximal ideal, so the result is nilpotent."""
        ell = self.element(ell)
        if not ell.in_maximal_ideal():
            raise NotInMaximalIdealError(f"{ell.poly} has a nonzero constant term")
        if self._basis_matrices is not None:
            # Multiplication is linear in the element, so combine the cached
            # per-basis-monomial matrices.
            field = self.field
            n = self.dimension
            out = ExactMatrix.zeros(field, n, n)
            p = field.p
            for j, c in enumerate(ell.coords):
                if not c:
                    continue
                bm = self._basis_matrices[j].data
                for i in range(n):
                    row = out.data[i]
                    brow = bm[i]
                    for k in range(n):
                        if brow[k]:
                            row[k] += c * brow[k]
            if p is not None:
                for row in out.data:
                    for k in range(n):
                        row[k] %= p
            return out
        return self._mult_matrix_direct(ell)

    def basis_matrices(self):
        """Multiplication matrices of every basis monomial (cached); speeds
        up mass sampling, where elements are random basis combinations."""
        if self._basis_matrices is None:
            mats = []
            for mono in self.basis:
                mats.append(self._mult_matrix_direct(
                    self.element(Poly(self.ring, {mono: 1}))))
            self._basis_matrices = mats
        return self._basis_matrices

    def variable_matrices(self):
        """Multiplication matrices of the ring variables (cached)."""
        if self._var_matrices is None:
            mats = []
            for name in self.ring.variables:
                mats.append(self.mult_matrix(Poly.variable(self.ring, name)))
            self._var_matrices = mats
        return self._var_matrices

    def homogeneous_blocks(self, ell) -> dict:
        """For homogeneous ell of positive degree w on a graded algebra, the
        per-degree blocks A_d -> A_{d+w} of the multiplication map."""
        ell = self.element(ell)
        if self.mode != "graded" or not ell.is_homogeneous() or ell.is_zero():
            raise NotHomogeneousError("need a graded algebra and homogeneous element")
        w = ell.degree()
        if w < 1:
            raise NotInMaximalIdealError("element has degree 0")
        blocks = {}
        full = None
        for d in range(self.socle_degree + 1):
            lo, hi = self.degree_slice(d)
            tlo, thi = self.degree_slice(d + w)
            if hi == lo:
                continue
            block = ExactMatrix.zeros(self.field, thi - tlo, hi - lo)
            if thi > tlo:
                if full is None:
                    full = self.mult_matrix(ell)
                for j in range(lo, hi):
                    for i in range(tlo, thi):
                        block.data[i - tlo][j - lo] = full.data[i][j]
            blocks[d] = block
        return blocks

    # -- m-adic filtration ------------------------------------------------------

    def madic_dims(self):
        """Dimensions [dim A, dim mA, dim m^2 A, ..., 0] of the m-adic
        filtration (the ideal generated by all positive-order elements)."""
        if self._madic_dims is not None:
            return self._madic_dims
        if self.mode == "local" or all(w == 1 for w in self.ring.weights):
            # Filtration is spanned by basis monomials of order >= t.
            counts = self.hilbert.values
            dims = [sum(counts[t:]) for t in range(len(counts) + 1)]
            self._madic_dims = dims
            return dims
        field = self.field
        mats = self.variable_matrices()
        current = []
        rref = SparseRREF(field)
        for i in range(1, self.dimension):  # all positive-degree basis vectors
            vec = {i: field.coerce(1)}
            if rref.insert(dict(vec)) is not None:
                current.append(vec)
        dims = [self.dimension, rref.nrows]
        while dims[-1] > 0:
            nxt = SparseRREF(field)
            nxt_rows = []
            for vec in current:
                dense = [field.coerce(0)] * self.dimension
                for i, c in vec.items():
                    dense[i] = c
                for mat in mats:
                    img = {}
                    for i, row in enumerate(mat.data):
                        s = field.coerce(0)
                        for j, c in enumerate(dense):
                            if c and row[j]:
                                s = field.add(s, field.mul(row[j], c))
                        if s:
                            img[i] = s
                    if img and nxt.insert(dict(img)) is not None:
                        nxt_rows.append(img)
            dims.append(nxt.nrows)
            current = nxt_rows
            rref = nxt
        self._madic_dims = dims
        return dims

    def madic_hilbert(self) -> HilbertFunction:
        """Hilbert function of the associated graded with respect to powers
        of the maximal ideal."""
        dims = self.madic_dims()
        return HilbertFunction([dims[i] - dims[i + 1] for i in range(len(dims) - 1)])

    def madic_top(self) -> int:
        """Largest t with m^t != 0.  For non-standard gradings this may
        differ from the socle degree; both are reported, neither silently."""
        return len(self.madic_dims()) - 2

    def socle_dimension(self) -> int:
        """Dimension of (0 : m), via the common kernel of the variable maps."""
        from .linalg import kernel_basis
        field = self.field
        stacked = []
        for mat in self.variable_matrices():
            stacked.extend(mat.data)
        if not stacked:
            return self.dimension
        return len(kernel_basis(ExactMatrix(field, stacked)))

    def __repr__(self):
        return (f"ArtinAlgebra({self.mode}, dim={self.dimension}, "
                f"H={self.hilbert})")


def _validate_generators(ring, gens):
    out = []
    for g in gens:
        if isinstance(g, str):
            g = parse(g, ring)
        if g.is_zero():
            continue
        if g.constant_term():
            raise NonUnitConstantError(
                f"generator {g} has a constant term; quotients must have the "
                "residue field in degree zero")
        out.append(g)
    return out


def build_graded(ring: RingSpec, gens, dim_cap: int = DEFAULT_DIM_CAP) -> ArtinAlgebra:
    """Quotient of a (possibly non-standard) graded polynomial ring by
    homogeneous generators, constructed degree by degree."""
    if ring.local:
        raise InvalidArgumentError("build_graded needs a graded RingSpec")
    gens = _validate_generators(ring, gens)
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"generator {g} is not homogeneous "
                                      f"for weights {ring.weights}")
    gens_by_degree = {}
    for g in gens:
        gens_by_degree.setdefault(g.degree(), []).append(g)

    field = ring.field
    max_w = max(ring.weights)
    reducers = {0: SparseRREF(field)}
    col_lists = {0: [ring.unit_monomial()]}
    col_indexes = {0: {ring.unit_monomial(): 0}}
    basis = [ring.unit_monomial()]
    basis_orders = [0]
    dims = [1]
    zero_run = 0
    d = 0
    while zero_run < max_w:
        d += 1
        cols = ring.monomials_of_degree(d)
        colindex = {m: i for i, m in enumerate(cols)}
        reducer = SparseRREF(field)
        # I_d is spanned by x_i * I_{d - w_i} plus the degree-d generators.
        for vi, name in enumerate(ring.variables):
            lower = d - ring.weights[vi]
            if lower < 0 or lower not in reducers:
                continue
            lower_cols = col_lists[lower]
            for row in reducers[lower].rows.values():
                shifted = {}
                for col, coeff in row.items():
                    mono = lower_cols[col]
                    lifted = tuple(e + (1 if k == vi else 0)
                                   for k, e in enumerate(mono))
                    shifted[colindex[lifted]] = coeff
                reducer.insert(shifted)
        for g in gens_by_degree.get(d, ()):
            reducer.insert({colindex[m]: c for m, c in g.terms.items()})
        pivots = set(reducer.rows)
        degree_basis = [m for i, m in enumerate(cols) if i not in pivots]
        reducers[d] = reducer
        col_lists[d] = cols
        col_indexes[d] = colindex
        basis.extend(degree_basis)
        basis_orders.extend([d] * len(degree_basis))
        dims.append(len(degree_basis))
        if len(basis) > dim_cap:
            raise NotArtinianError(f"dimension cap {dim_cap} exceeded at degree {d}")
        zero_run = zero_run + 1 if not degree_basis else 0

    while dims and dims[-1] == 0:
        dims.pop()
    return ArtinAlgebra(ring, gens, "graded", basis, basis_orders,
                        HilbertFunction(dims), reducers, col_lists,
                        col_indexes, d)


def _local_quotient(ring, gens, trunc):
    """RREF data for R / (I + m^(trunc+1)) inside monomials of degree <= trunc."""
    field = ring.field
    cols = []
    for d in range(trunc + 1):
        cols.extend(ring.monomials_of_degree(d))
    colindex = {m: i for i, m in enumerate(cols)}
    reducer = SparseRREF(field)
    for g in gens:
        g_order = g.order()
        for d in range(trunc - g_order + 1):
            for mono in ring.monomials_of_degree(d):
                product = g.monomial_mul(mono)
                vec = {}
                for m, c in product.terms.items():
                    col = colindex.get(m)
                    if col is not None:
                        vec[col] = c
                if vec:
                    reducer.insert(vec)
    pivots = set(reducer.rows)
    basis = [m for i, m in enumerate(cols) if i not in pivots]
    return reducer, cols, colindex, basis


def build_local(ring: RingSpec, gens, dim_cap: int = DEFAULT_DIM_CAP) -> ArtinAlgebra:
    """Quotient of the regular local ring, via m-adic truncation raised until
    the dimension stabilizes (at which point the truncation is exact)."""
    if not ring.local:
        raise InvalidArgumentError("build_local needs a local RingSpec")
    gens = _validate_generators(ring, gens)
    if not gens:
        raise NotArtinianError("the zero ideal is not Artinian")

    prev = None
    trunc = 1
    while True:
        reducer, cols, colindex, basis = _local_quotient(ring, gens, trunc)
        dim = len(basis)
        if dim > dim_cap or trunc > dim_cap:
            raise NotArtinianError(f"dimension cap {dim_cap} exceeded at "
                                   f"truncation {trunc}")
        counts = {}
        for m in basis:
            counts[ring.weighted_degree(m)] = counts.get(ring.weighted_degree(m), 0) + 1
        profile = (dim, tuple(sorted(counts.items())))
        if prev is not None and prev == profile:
            break
        prev = profile
        trunc += 1

    top = max(counts)
    hilbert = HilbertFunction([counts.get(i, 0) for i in range(top + 1)])
    if top >= trunc:
        raise NotArtinianError("truncation boundary reached; not stabilized")

    # cols are sorted by (order, grevlex desc), hence so is the basis.
    return ArtinAlgebra(ring, gens, "local", basis,
                        [ring.weighted_degree(m) for m in basis],
                        hilbert, {None: reducer}, {None: cols},
                        {None: colindex}, trunc)


def associated_graded(a: ArtinAlgebra) -> ArtinAlgebra:
    """The associated graded algebra of a local quotient, presented by the
    initial forms of the reduction rows.  Hilbert function is unchanged."""
    if a.mode != "local":
        raise InvalidArgumentError("associated_graded applies to local algebras")
    graded_ring = RingSpec(a.ring.variables, a.ring.weights, a.ring.field, local=False)
    cols = a._col_lists[None]
    initial_forms = []
    for row in a._reducers[None].rows.values():
        terms = {cols[i]: c for i, c in row.items()}
        poly = Poly(graded_ring, terms)
        initial_forms.append(poly.homogeneous_component(poly.order()))
    result = build_graded(graded_ring, initial_forms)
    if result.hilbert != a.hilbert:
        raise InvalidArgumentError(
            "associated graded Hilbert function mismatch (internal bug): "
            f"{result.hilbert} vs {a.hilbert}")
    return result


def sperner(a: ArtinAlgebra) -> int:
    return a.sperner()
