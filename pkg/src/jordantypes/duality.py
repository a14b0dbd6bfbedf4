"""Macaulay inverse systems: annihilators of divided-power forms, Artinian
Gorenstein algebras from dual generators, and Jordan types through the
colon-ideal quotient chain (which never builds the algebra at all).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ArtinAlgebra, build_graded, build_local
from .errors import InvalidArgumentError, NotInMaximalIdealError
from .linalg import SparseRREF
from .partitions import HilbertFunction, Partition
from .polyring import DividedPowerPoly, Poly, RingSpec, contract, parse


@dataclass(frozen=True)
class DualPresentation:
    """An Artinian Gorenstein algebra presented by its dual generator."""

    ring: RingSpec
    f: DividedPowerPoly

    def __post_init__(self):
        if self.f.is_zero():
            raise InvalidArgumentError("dual generator must be nonzero")

    @classmethod
    def from_string(cls, src: str, ring: RingSpec) -> "DualPresentation":
        return cls(ring, parse(src, ring, dual=True))


def _span_dimension(ring, duals) -> int:
    """Dimension of the span of divided-power forms (sparse echelon count)."""
    colindex = {}
    rref = SparseRREF(ring.field)
    for g in duals:
        vec = {}
        for m, c in g.terms.items():
            col = colindex.setdefault(m, len(colindex))
            vec[col] = c
        if vec:
            rref.insert(vec)
    return rref.nrows


def inverse_system_dim(f) -> int:
    """Dimension of the span of all contractions of a divided-power form;
    equals the length of the algebra it presents."""
    if isinstance(f, DualPresentation):
        f = f.f
    ring = f.ring
    if f.is_zero():
        return 0
    duals = []
    for deg in range(f.degree() + 1):
        for mono in ring.monomials_of_degree(deg):
            g = contract(Poly(ring, {mono: 1}), f)
            if not g.is_zero():
                duals.append(g)
    return _span_dimension(ring, duals)


def _catalecticant_kernel(ring, f, d):
    """Kernel of g |-> g . f restricted to forms of weighted degree d,
    as polynomials."""
    monos = ring.monomials_of_degree(d)
    colindex = {}
    rows = []
    for mono in monos:
        g = contract(Poly(ring, {mono: 1}), f)
        vec = {}
        for m, c in g.terms.items():
            col = colindex.setdefault(m, len(colindex))
            vec[col] = c
        rows.append(vec)
    # Kernel of the (len(monos) x ncols) matrix with the given sparse rows:
    # transpose convention; unknowns are coefficients on monos.
    rref = SparseRREF(ring.field)
    ncols = len(monos)
    transposed = {}
    for i, row in enumerate(rows):
        for col, c in row.items():
            transposed.setdefault(col, {})[i] = c
    for col in sorted(transposed):
        rref.insert(dict(transposed[col]))
    kernel = rref.kernel_basis(ncols)
    out = []
    for vec in kernel:
        out.append(Poly(ring, {monos[i]: c for i, c in vec.items()}))
    return out


def catalecticant_rank(ring, f, d) -> int:
    """Rank of the contraction map from degree-d forms against f."""
    return len(ring.monomials_of_degree(d)) - len(_catalecticant_kernel(ring, f, d))


def annihilator_generators(d: DualPresentation):
    """A (redundant) homogeneous or local generating set for Ann(f).

    Homogeneous f: degreewise catalecticant kernels through the socle degree,
    plus every monomial in the window just above it.  Non-homogeneous f: the
    kernel of the full contraction map on the truncated ring, plus the
    monomials at the truncation boundary; exact because contraction strictly
    lowers degree.
    """
    ring, f = d.ring, d.f
    j = f.degree()
    gens = []
    if f.is_homogeneous() and not ring.local:
        for deg in range(1, j + 1):
            gens.extend(_catalecticant_kernel(ring, f, deg))
        max_w = max(ring.weights)
        for deg in range(j + 1, j + max_w + 1):
            gens.extend(Poly(ring, {m: 1}) for m in ring.monomials_of_degree(deg))
        return gens
    # Local: kernel of g |-> g . f over all monomials of degree <= j.
    monos = []
    for deg in range(j + 1):
        monos.extend(ring.monomials_of_degree(deg))
    colindex = {}
    rref = SparseRREF(ring.field)
    transposed = {}
    for i, mono in enumerate(monos):
        g = contract(Poly(ring, {mono: 1}), f)
        for m, c in g.terms.items():
            col = colindex.setdefault(m, len(colindex))
            transposed.setdefault(col, {})[i] = c
    for col in sorted(transposed):
        rref.insert(dict(transposed[col]))
    for vec in rref.kernel_basis(len(monos)):
        gens.append(Poly(ring, {monos[i]: c for i, c in vec.items()}))
    gens.extend(Poly(ring, {m: 1}) for m in ring.monomials_of_degree(j + 1))
    return gens


def algebra_from_dual(d: DualPresentation) -> ArtinAlgebra:
    """The Artinian Gorenstein algebra R / Ann(f)."""
    gens = annihilator_generators(d)
    if d.f.is_homogeneous() and not d.ring.local:
        return build_graded(d.ring, gens)
    if not d.ring.local:
        raise InvalidArgumentError(
            "non-homogeneous dual generator requires a local RingSpec")
    return build_local(d.ring, gens)


def _contraction_dims(d: DualPresentation, ell: Poly):
    """Lengths of R/Ann(ell^i . f) for i = 0, 1, ... down to zero."""
    ring = d.ring
    if isinstance(ell, str):
        ell = parse(ell, ring)
    if ell.constant_term():
        raise NotInMaximalIdealError(f"{ell} has a nonzero constant term")
    dims = []
    current = d.f
    while not current.is_zero():
        dims.append(inverse_system_dim(current))
        current = contract(ell, current)
    dims.append(0)
    return dims


def jordan_type_via_dual(d: DualPresentation, ell) -> Partition:
    """Jordan type of multiplication by ell, from the dimension chain of the
    contracted inverse systems alone."""
    from .linalg import jordan_type_from_dims

    return jordan_type_from_dims(_contraction_dims(d, ell))


def intermediate_hilberts(d: DualPresentation, ell):
    """Hilbert functions of the quotients R/Ann(ell^i . f), i = 0, 1, ...

    Homogeneous data goes through catalecticant ranks; otherwise each
    quotient algebra is built outright.
    """
    ring = d.ring
    if isinstance(ell, str):
        ell = parse(ell, ring)
    if ell.constant_term():
        raise NotInMaximalIdealError(f"{ell} has a nonzero constant term")
    out = []
    current = d.f
    while not current.is_zero():
        if current.is_homogeneous() and not ring.local:
            j = current.degree()
            values = [catalecticant_rank(ring, current, deg) for deg in range(j + 1)]
            while values and values[-1] == 0:
                values.pop()
            out.append(HilbertFunction(values))
        else:
            out.append(algebra_from_dual(DualPresentation(ring, current)).hilbert)
        current = contract(ell, current)
    return out
