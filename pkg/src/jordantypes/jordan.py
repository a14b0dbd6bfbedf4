"""Jordan types, Jordan strings, degree types, generic types by seeded
sampling, and comparisons against the Hilbert-function bounds.

Two independent computation routes live here.  The rank route reads the
Jordan type off the rank sequence of powers of the multiplication map (with
a per-degree block shortcut for homogeneous elements of graded algebras).
The string route runs the filtration-lifting construction: strings of the
quotient by each filtration level are lifted one level at a time, and a
lifted string whose tail falls into the span of earlier tails is repaired by
subtracting the matching shifts of the earlier strings.  The routes must
agree; the test suite compares them on everything it builds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, ArtinAlgebra, associated_graded
from .errors import (
    EmptySubspaceError,
    InvalidArgumentError,
    NotHomogeneousError,
    NotInMaximalIdealError,
)
from .linalg import SparseRREF, jordan_type_from_dims, rank
from .partitions import (
    Dominance,
    JordanDegreeType,
    Partition,
    bar_graph_partition,
    dominance_cmp,
    dominates,
    hilbert_conjugate,
)
from .sampling import MAXIMAL_IDEAL, SamplingPlan, Subspace, dominance_maximum


# -- the rank route ----------------------------------------------------------


def _graded_rank_sequence(a: ArtinAlgebra, ell: AlgebraElement):
    """Ranks of powers of a homogeneous multiplication map, degree block by
    degree block; exact and much cheaper than dense powering."""
    blocks = a.homogeneous_blocks(ell)
    w = ell.degree()
    ranks = [a.dimension]
    prods = {d: b for d, b in blocks.items() if b.nrows}
    k = 1
    while prods:
        r = sum(rank(m) for m in prods.values())
        ranks.append(r)
        if r == 0:
            return ranks
        nxt = {}
        for d, m in prods.items():
            blk = blocks.get(d + k * w)
            if blk is not None and blk.nrows:
                nxt[d] = blk.mul(m)
        prods = nxt
        k += 1
    ranks.append(0)
    return ranks


def jordan_type(a: ArtinAlgebra, ell) -> Partition:
    """Jordan type of multiplication by ell (in the maximal ideal): conjugate
    of the first differences of the rank sequence."""
    ell = a.element(ell)
    if not ell.in_maximal_ideal():
        raise NotInMaximalIdealError(f"{ell.poly} has a nonzero constant term")
    if (a.mode == "graded" and not ell.is_zero() and ell.is_homogeneous()):
        return jordan_type_from_dims(_graded_rank_sequence(a, ell))
    from .linalg import rank_sequence

    return jordan_type_from_dims(rank_sequence(a.mult_matrix(ell)))


# -- the string route --------------------------------------------------------


def _mult_columns(a: ArtinAlgebra, ell: AlgebraElement):
    """Columns of the multiplication map as sparse dicts."""
    cols = []
    for mono in a.basis:
        product = a.reduce(ell.poly.monomial_mul(mono))
        cols.append({i: c for i, c in enumerate(product.coords) if c})
    return cols


def _apply_columns(field, cols, vec: dict) -> dict:
    out = {}
    for j, c in vec.items():
        for i, m in cols[j].items():
            s = field.add(out.get(i, 0) or field.coerce(0), field.mul(m, c))
            if s:
                out[i] = s
            else:
                out.pop(i, None)
    return out


class _Filtration:
    """The decreasing filtration used by the string construction: graded
    pieces for homogeneous elements, the m-adic filtration otherwise."""

    def __init__(self, a: ArtinAlgebra, aligned: bool):
        self.a = a
        self.aligned = aligned
        if aligned:
            self.top = max(a.basis_orders)
            self.levels = None
        else:
            field = a.field
            mats = a.variable_matrices()
            cols = [[{i: row[j] for i, row in enumerate(mat.data) if row[j]}
                     for j in range(a.dimension)] for mat in mats]
            current = [{i: field.coerce(1)} for i in range(1, a.dimension)]
            levels = []
            while True:
                rref = SparseRREF(field)
                kept = []
                for vec in current:
                    if rref.insert(dict(vec)) is not None:
                        kept.append(vec)
                levels.append(rref)
                if not rref.rows:
                    break
                current = []
                for vec in kept:
                    for mc in cols:
                        img = _apply_columns(field, mc, vec)
                        if img:
                            current.append(img)
            self.levels = levels  # levels[t-1] spans F_t; last is empty
            self.top = len(levels) - 1

    def reduce_mod(self, vec: dict, t: int) -> dict:
        """Canonical representative of vec modulo F_t."""
        if t > self.top:
            return dict(vec)
        if self.aligned:
            orders = self.a.basis_orders
            return {i: c for i, c in vec.items() if orders[i] < t}
        return self.levels[t - 1].reduce(dict(vec))

    def member(self, vec: dict, t: int) -> bool:
        return not self.reduce_mod(vec, t)

    def layer_candidates(self, t: int):
        """Deterministic spanning vectors of F_{t-1} (F_0 = everything)."""
        if self.aligned or t == 1:
            orders = self.a.basis_orders
            one = self.a.field.coerce(1)
            return [{i: one} for i in range(self.a.dimension)
                    if orders[i] == t - 1 or (not self.aligned and orders[i] >= t - 1)]
        rref = self.levels[t - 2]
        return [dict(rref.rows[p]) for p in sorted(rref.rows)]

    def order_of(self, vec: dict) -> int:
        """Largest t with vec in F_t (0 when the vector has a unit part)."""
        if self.aligned:
            return min(self.a.basis_orders[i] for i in vec)
        t = 0
        while t < self.top and self.member(vec, t + 1):
            t += 1
        return t


class _AugmentedSolver:
    """Solve v = sum c_k * w_k against a growing list of independent vectors,
    by row reduction with bookkeeping columns."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rref = SparseRREF(field)
        self.count = 0

    def add(self, vec: dict):
        row = dict(vec)
        row[self.ncols + self.count] = self.field.coerce(1)
        if self.rref.insert(row) is None:
            raise InvalidArgumentError("dependent vector added to solver")
        self.count += 1

    def solve(self, vec: dict):
        """Coefficients [c_0, ..., c_{count-1}] or None if not in the span."""
        residual = self.rref.reduce(dict(vec))
        if any(col < self.ncols for col in residual):
            return None
        coeffs = [self.field.coerce(0)] * self.count
        for col, c in residual.items():
            coeffs[col - self.ncols] = self.field.neg(c)
        return coeffs


@dataclass
class JordanString:
    """One string: its start vector, the full element list, and the degree
    (or m-adic order) where it begins."""

    items: list  # sparse coordinate dicts, items[i] = ell^i . start
    degree: int = 0
    created: int = 0

    @property
    def length(self) -> int:
        return len(self.items)

    @property
    def start(self) -> dict:
        return self.items[0]


@dataclass
class JordanStrings:
    """A complete string decomposition for one (algebra, element) pair."""

    algebra: ArtinAlgebra
    element: AlgebraElement
    strings: list
    canonical_degrees: bool  # graded algebra with homogeneous element

    def jordan_type(self) -> Partition:
        return Partition.sorted(s.length for s in self.strings)

    def degree_type(self) -> JordanDegreeType:
        return JordanDegreeType((s.length, s.degree) for s in self.strings)

    def start_elements(self):
        return [self.algebra.element_from_coords(
            [s.start.get(i, 0) for i in range(self.algebra.dimension)])
            for s in self.strings]


def jordan_strings(a: ArtinAlgebra, ell) -> JordanStrings:
    """String decomposition by filtration lifting.

    Levels run from the residue field down to the socle.  At each level the
    existing strings (longest first) get their next element computed; a tail
    that vanishes leaves the string closed, an independent tail extends it,
    and a dependent tail triggers the repair that subtracts shifted earlier
    strings.  New length-1 strings then complete the basis of the level.
    """
    ell = a.element(ell)
    if not ell.in_maximal_ideal():
        raise NotInMaximalIdealError(f"{ell.poly} has a nonzero constant term")
    field = a.field
    homogeneous = (a.mode == "graded" and ell.is_homogeneous() and not ell.is_zero())
    aligned = (homogeneous or a.mode == "local"
               or all(w == 1 for w in a.ring.weights))
    filt = _Filtration(a, aligned)
    cols = _mult_columns(a, ell)
    n = a.dimension

    strings: list[JordanString] = []
    created = 0
    for t in range(1, filt.top + 2):
        order = sorted(strings, key=lambda s: (-s.length, s.created))
        solver = _AugmentedSolver(field, n)
        extended = []  # (string, pre-extension length)
        for s in order:
            pre_len = s.length
            tail_exact = _apply_columns(field, cols, s.items[-1])
            tail = filt.reduce_mod(tail_exact, t) if t <= filt.top else dict(tail_exact)
            if not tail:
                continue
            coeffs = solver.solve(tail)
            if coeffs is None:
                s.items.append(tail_exact)
                solver.add(tail)
                extended.append((s, pre_len))
                continue
            # Repair: subtract shifted earlier strings so the tail vanishes.
            for c, (other, other_pre) in zip(coeffs, extended):
                if not c:
                    continue
                shift = other_pre - pre_len
                for i in range(pre_len):
                    item = s.items[i]
                    for col, v in other.items[shift + i].items():
                        new = field.sub(item.get(col, field.coerce(0))
                                        or field.coerce(0), field.mul(c, v))
                        if new:
                            item[col] = new
                        else:
                            item.pop(col, None)
        # Complete the level with singleton strings.
        span = SparseRREF(field)
        for s in strings:
            for item in s.items:
                reduced = filt.reduce_mod(item, t) if t <= filt.top else dict(item)
                if reduced:
                    span.insert(reduced)
        for cand in filt.layer_candidates(t):
            reduced = filt.reduce_mod(dict(cand), t) if t <= filt.top else dict(cand)
            if reduced and span.insert(dict(reduced)) is not None:
                strings.append(JordanString(items=[dict(cand)], created=created))
                created += 1

    total = sum(s.length for s in strings)
    if total != n:
        raise InvalidArgumentError(
            f"string extraction covered {total} of {n} dimensions (internal bug)")
    for s in strings:
        s.degree = filt.order_of(s.start)
        # normalize: leading coordinate of the start vector becomes 1
        inv = field.inv(s.start[min(s.start)])
        if inv != field.coerce(1):
            s.items = [{i: field.mul(inv, c) for i, c in item.items()}
                       for item in s.items]
    strings.sort(key=lambda s: (-s.length, s.degree, s.created))
    return JordanStrings(a, ell, strings, canonical_degrees=homogeneous)


def jordan_degree_type(a: ArtinAlgebra, ell) -> JordanDegreeType:
    """Degree-tagged Jordan type; needs a graded algebra and a homogeneous
    element of positive degree."""
    ell = a.element(ell)
    if a.mode != "graded" or not ell.is_homogeneous() or ell.is_zero():
        raise NotHomogeneousError(
            "Jordan degree type needs a graded algebra and a nonzero "
            "homogeneous element")
    return jordan_strings(a, ell).degree_type()


# -- sampling ----------------------------------------------------------------


def _sample_pool(a: ArtinAlgebra, subspace: Subspace):
    if subspace.kind == "linear":
        degree = 1
    elif subspace.kind == "piece":
        degree = subspace.degree
    else:
        degree = None
    if degree is None:
        pool = [i for i, o in enumerate(a.basis_orders) if o >= 1]
    else:
        if a.mode != "graded":
            raise InvalidArgumentError(
                "graded-piece sampling needs a graded algebra; local algebras "
                "sample the maximal ideal")
        lo, hi = a.degree_slice(degree)
        pool = list(range(lo, hi))
    if not pool:
        raise EmptySubspaceError(f"no elements to sample in {subspace}")
    return pool


def sample_element(a: ArtinAlgebra, plan: SamplingPlan, trial: int) -> AlgebraElement:
    """The deterministic trial-th sample from the plan's subspace."""
    pool = _sample_pool(a, plan.subspace)
    coeffs = plan.coefficients(trial, len(pool), a.field)
    coords = [0] * a.dimension
    for i, c in zip(pool, coeffs):
        coords[i] = c
    return a.element_from_coords(coords)


@dataclass(frozen=True)
class GenericTypeResult:
    partition: Partition
    witness: AlgebraElement
    trials: int


def generic_jordan_type(a: ArtinAlgebra, plan: SamplingPlan) -> GenericTypeResult:
    """Dominance maximum of the sampled Jordan types, with a witness element.

    Semicontinuity makes any dominance-maximal sample a certificate for the
    generic value with overwhelming probability; an antichain with no
    maximum raises IncomparableSamplesError instead of guessing.
    """
    samples = []
    for trial in range(plan.trials):
        element = sample_element(a, plan, trial)
        samples.append((jordan_type(a, element), element))
    part, witness = dominance_maximum(samples)
    return GenericTypeResult(part, witness, plan.trials)


def generic_jordan_degree_type(a: ArtinAlgebra, plan: SamplingPlan) -> JordanDegreeType:
    """Generic linear Jordan degree type: maximize the Jordan type in
    dominance, then among witnesses minimize the initial-degree multiset
    (sorted by decreasing string length)."""
    if a.mode != "graded":
        raise InvalidArgumentError("degree types need a graded algebra")
    plan = plan.with_subspace(Subspace.linear())
    samples = []
    for trial in range(plan.trials):
        element = sample_element(a, plan, trial)
        samples.append((jordan_type(a, element), element))
    part, _ = dominance_maximum(samples)
    best = None
    for sampled_part, element in samples:
        if sampled_part != part:
            continue
        jdt = jordan_strings(a, element).degree_type()
        key = tuple(d for _, d in sorted(jdt.entries, key=lambda e: (-e[0], e[1])))
        if best is None or key < best[0]:
            best = (key, jdt)
    return best[1]


def distinct_forms_type(a: ArtinAlgebra, plan: SamplingPlan) -> Partition:
    """The partition from quotients by products of *distinct* sampled linear
    forms instead of powers of one form.

    Each quotient dimension is a rank condition, so the generic value of
    each is its sampled minimum; the conjugate of the first differences of
    the entrywise minima is returned.
    """
    if a.mode != "graded":
        raise InvalidArgumentError("distinct-forms type needs a graded algebra")
    lo, hi = a.degree_slice(1)
    if hi == lo:
        if a.dimension == 1:
            return Partition((1,))
        raise EmptySubspaceError("algebra has no linear forms")
    n = a.dimension
    best_ranks = None
    for trial in range(plan.trials):
        rng = plan.rng(trial)
        ranks = [n]
        prods = None
        step = 0
        while ranks[-1] > 0 and step <= n:
            coeffs = (
                [rng.randint(-plan.coefficient_bound, plan.coefficient_bound)
                 for _ in range(hi - lo)]
                if a.field.p is None else
                [rng.randrange(a.field.p) for _ in range(hi - lo)])
            coords = [0] * n
            for i, c in zip(range(lo, hi), coeffs):
                coords[i] = c
            element = a.element_from_coords(coords)
            if element.is_zero():
                continue
            blocks = a.homogeneous_blocks(element)
            if prods is None:
                prods = {d: b for d, b in blocks.items() if b.nrows}
            else:
                nxt = {}
                for d, m in prods.items():
                    blk = blocks.get(d + step)
                    if blk is not None and blk.nrows:
                        nxt[d] = blk.mul(m)
                prods = nxt
            ranks.append(sum(rank(m) for m in prods.values()))
            step += 1
        if ranks[-1] != 0:
            ranks.append(0)
        # Each rank is generically maximal, so the entrywise maximum over
        # trials is the generic rank sequence.
        if best_ranks is None:
            best_ranks = ranks
        else:
            length = max(len(best_ranks), len(ranks))
            padded = [seq + [0] * (length - len(seq)) for seq in (best_ranks, ranks)]
            best_ranks = [max(x, y) for x, y in zip(*padded)]
    while len(best_ranks) > 1 and best_ranks[-2] == 0:
        best_ranks.pop()
    from .partitions import conjugate

    diffs = sorted((best_ranks[i] - best_ranks[i + 1]
                    for i in range(len(best_ranks) - 1)), reverse=True)
    return conjugate(Partition.sorted(diffs))


@dataclass(frozen=True)
class PosetSample:
    """Observed Jordan types with their dominance Hasse relations; a lower
    approximation of the full type poset."""

    types: tuple
    covers: tuple  # (lower, upper) pairs

    def __contains__(self, p):
        return p in self.types


def poset_sample(a: ArtinAlgebra, plan: SamplingPlan) -> PosetSample:
    """Jordan types of: zero, every basis monomial of the maximal ideal,
    pairwise sums of those monomials, and the plan's random samples."""
    elements = [a.zero()]
    positive = [i for i, o in enumerate(a.basis_orders) if o >= 1]
    for i in positive:
        coords = [0] * a.dimension
        coords[i] = 1
        elements.append(a.element_from_coords(coords))
    for ai in range(len(positive)):
        for bi in range(ai + 1, len(positive)):
            coords = [0] * a.dimension
            coords[positive[ai]] = 1
            coords[positive[bi]] = 1
            elements.append(a.element_from_coords(coords))
    if a.dimension > 1:
        for trial in range(plan.trials):
            elements.append(sample_element(a, plan.with_subspace(MAXIMAL_IDEAL), trial))
    types = sorted({jordan_type(a, e) for e in elements},
                   key=lambda p: p.parts, reverse=True)
    covers = []
    for low in types:
        for high in types:
            if low == high or not dominates(high, low):
                continue
            if any(t not in (low, high) and dominates(high, t) and dominates(t, low)
                   for t in types):
                continue
            covers.append((low, high))
    return PosetSample(tuple(types), tuple(covers))


# -- Hilbert-function bounds --------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """The computed Jordan type next to every applicable Hilbert bound."""

    jordan: Partition
    element_is_linear: bool
    bar_bound: Partition | None      # linear graded bound (bar graph of H)
    conjugate_bound: Partition | None  # conjugate-of-H bound
    madic_bound: Partition | None    # m-adic bound, any element of a graded algebra
    comparisons: dict
    ok: bool


def bound_report(a: ArtinAlgebra, ell) -> BoundReport:
    """Check every inequality that applies to this (algebra, element) pair."""
    ell = a.element(ell)
    jt = jordan_type(a, ell)
    lo, hi = a.degree_slice(1) if a.mode == "graded" else (0, 0)
    linear = (a.mode == "graded" and not ell.is_zero()
              and ell.is_homogeneous() and ell.degree() == 1)
    comparisons = {}
    bar_bound = conj_bound = madic_bound = None
    if a.mode == "graded":
        if linear or ell.is_zero():
            bar_bound = bar_graph_partition(a.hilbert)
            conj_bound = hilbert_conjugate(a.hilbert)
            comparisons["linear_bar_bound"] = dominance_cmp(jt, bar_bound)
            comparisons["bar_vs_conjugate"] = dominance_cmp(bar_bound, conj_bound)
        madic_bound = hilbert_conjugate(a.madic_hilbert())
        comparisons["madic_bound"] = dominance_cmp(jt, madic_bound)
    else:
        conj_bound = hilbert_conjugate(a.hilbert)
        comparisons["local_conjugate_bound"] = dominance_cmp(jt, conj_bound)
    ok = all(c in (Dominance.LESS, Dominance.EQUAL) for c in comparisons.values())
    return BoundReport(jt, linear, bar_bound, conj_bound, madic_bound,
                       comparisons, ok)


def compare_with_associated_graded(a: ArtinAlgebra, ell) -> bool:
    """Deformation inequality: the local type dominates the type of the same
    element on the associated graded algebra."""
    from .polyring import Poly

    if a.mode != "local":
        raise InvalidArgumentError("needs a local algebra")
    graded = associated_graded(a)
    ell = a.element(ell)
    local_type = jordan_type(a, ell)
    lifted = Poly(graded.ring, dict(ell.poly.terms))
    graded_type = jordan_type(graded, graded.element(lifted))
    return dominates(local_type, graded_type)
