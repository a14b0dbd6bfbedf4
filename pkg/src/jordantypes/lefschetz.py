"""Lefschetz classification of elements and algebras.

An element has strong Lefschetz Jordan type when its Jordan type equals the
conjugate of the Hilbert function; the narrow/general strong and weak
Lefschetz flags come from explicit maximal-rank checks on the power maps
between graded pieces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement, ArtinAlgebra
from .errors import (
    InternalInconsistencyError,
    InvalidArgumentError,
    NotInMaximalIdealError,
)
from .jordan import jordan_type, sample_element
from .linalg import rank
from .partitions import Partition, hilbert_conjugate
from .sampling import MAXIMAL_IDEAL, SamplingPlan, Subspace


@dataclass(frozen=True)
class LefschetzVerdict:
    """All Lefschetz flags for one (algebra, element) pair.

    narrow_sl / general_sl / weak_l are None when they do not apply (local
    algebras, or non-linear elements).  failing_witness is the first pair
    (i, d) where the power map from degree i fails maximal rank.
    """

    element: AlgebraElement
    jordan: Partition
    h_conjugate: Partition
    sljt: bool
    narrow_sl: bool | None
    general_sl: bool | None
    weak_l: bool | None
    failing_witness: tuple | None
    modular_regime: bool


def _is_linear(a: ArtinAlgebra, ell: AlgebraElement) -> bool:
    return (a.mode == "graded" and not ell.is_zero() and ell.is_homogeneous()
            and ell.degree() == 1)


def power_map_ranks(a: ArtinAlgebra, ell) -> dict:
    """Ranks of every power map from degree i: {(i, d): rank of the d-th
    power map out of A_i}, for linear ell on a graded algebra."""
    ell = a.element(ell)
    if a.mode != "graded":
        raise InvalidArgumentError("power map ranks need a graded algebra")
    j = a.socle_degree
    h = a.hilbert.values
    ranks = {}
    if ell.is_zero():
        for i in range(j + 1):
            for d in range(1, j - i + 1):
                ranks[(i, d)] = 0
        return ranks
    blocks = a.homogeneous_blocks(ell)
    prods = {i: b for i, b in blocks.items() if h[i]}
    d = 1
    while prods and d <= j:
        for i, m in prods.items():
            ranks[(i, d)] = rank(m) if m.nrows else 0
        nxt = {}
        for i, m in prods.items():
            blk = blocks.get(i + d)
            if blk is not None and i + d <= j and blk.nrows and m.nrows:
                nxt[i] = blk.mul(m)
            # composites through an empty piece are zero and stay absent
        prods = nxt
        d += 1
    for i in range(j + 1):
        for dd in range(1, j - i + 1):
            ranks.setdefault((i, dd), 0)
    return ranks


def classify(a: ArtinAlgebra, ell) -> LefschetzVerdict:
    """Compute SLJT plus (for linear elements of graded algebras) the
    narrow-SL, general-SL, and weak-Lefschetz flags by direct rank checks."""
    ell = a.element(ell)
    if not ell.in_maximal_ideal():
        raise NotInMaximalIdealError(f"{ell.poly} has a nonzero constant term")
    jt = jordan_type(a, ell)
    h_conj = hilbert_conjugate(a.hilbert)
    sljt = jt == h_conj
    modular = a.field.p is not None and a.field.p <= a.socle_degree
    if not _is_linear(a, ell):
        return LefschetzVerdict(ell, jt, h_conj, sljt, None, None, None,
                                None, modular)
    h = a.hilbert.values
    j = a.socle_degree
    ranks = power_map_ranks(a, ell)
    failing = None
    general_sl = True
    for i in range(j + 1):
        for d in range(1, j - i + 1):
            target = h[i + d]
            expected = min(h[i], target)
            if ranks[(i, d)] != expected:
                general_sl = False
                if failing is None:
                    failing = (i, d)
    narrow_sl = True
    for i in range(j // 2 + 1):
        d = j - 2 * i
        if h[i] != h[j - i]:
            narrow_sl = False
            break
        if d >= 1 and ranks[(i, d)] != h[i]:
            narrow_sl = False
            break
    weak_l = all(ranks[(i, 1)] == min(h[i], h[i + 1]) for i in range(j))
    standard = all(w == 1 for w in a.ring.weights)
    if standard and a.hilbert.is_unimodal() and a.hilbert.is_symmetric():
        # Under these hypotheses WL is equivalent to the part count hitting
        # the Sperner number; a mismatch is a library bug.
        if weak_l != (len(jt) == a.sperner()):
            raise InternalInconsistencyError(
                f"weak-Lefschetz flag {weak_l} disagrees with part count "
                f"{len(jt)} vs Sperner {a.sperner()}; please report")
    if narrow_sl and not (a.hilbert.is_unimodal() and a.hilbert.is_symmetric()):
        raise InternalInconsistencyError(
            "narrow SL requires a symmetric unimodal Hilbert function; "
            "please report")
    return LefschetzVerdict(ell, jt, h_conj, sljt, narrow_sl, general_sl,
                            weak_l, failing, modular)


def check_rank_type_equivalence(a: ArtinAlgebra, ell) -> bool:
    """Verify on this instance that all power maps having maximal rank is
    equivalent to the Jordan type equalling the Hilbert-function conjugate.

    Returns the common truth value; a disagreement raises
    InternalInconsistencyError (it would be a library bug, never math).
    """
    ell = a.element(ell)
    if a.dimension == 1:
        return True
    verdict = classify(a, ell)
    if verdict.general_sl is None:
        raise InvalidArgumentError("equivalence check needs a linear element")
    if verdict.general_sl != verdict.sljt:
        raise InternalInconsistencyError(
            f"maximal-rank condition ({verdict.general_sl}) disagrees with "
            f"Jordan type condition ({verdict.sljt}) for {ell.poly}; "
            "please report")
    return verdict.general_sl


@dataclass(frozen=True)
class SLSearchResult:
    witness: AlgebraElement | None
    witness_type: Partition | None
    trials: int
    linear: bool | None  # whether the witness is linear


def find_sl_element(a: ArtinAlgebra, plan: SamplingPlan) -> SLSearchResult:
    """Search sampled elements for one whose Jordan type is the conjugate of
    the Hilbert function.

    Graded algebras try linear samples first, then (when the plan samples
    the maximal ideal) arbitrary elements.  The search is deterministic in
    (seed, trial).
    """
    target = hilbert_conjugate(a.hilbert)
    trials = plan.trials
    h = a.hilbert.values
    has_linear = a.mode == "graded" and len(h) > 1 and h[1] > 0
    if plan.subspace == MAXIMAL_IDEAL:
        if has_linear:
            linear_trials = (trials + 1) // 2
            phases = [(Subspace.linear(), linear_trials, True),
                      (MAXIMAL_IDEAL, trials - linear_trials, False)]
        else:
            phases = [(MAXIMAL_IDEAL, trials, False)]
    else:
        # an explicitly requested empty subspace surfaces as EmptySubspace
        phases = [(plan.subspace, trials, plan.subspace.kind == "linear")]
    if a.dimension > 1 and plan.trials >= 16:
        a.basis_matrices()
    used = 0
    for subspace, count, is_linear in phases:
        phase_plan = plan.with_subspace(subspace)
        for trial in range(count):
            used += 1
            element = sample_element(a, phase_plan, trial)
            jt = jordan_type(a, element)
            if jt == target:
                return SLSearchResult(element, jt, used, is_linear)
    return SLSearchResult(None, None, used, None)
