"""Deterministic seeded sampling shared by the generic-type, Lefschetz, and
commutant searches.

Every trial derives its randomness from (seed, trial index) alone, so
results are bit-identical regardless of evaluation order or worker count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import IncomparableSamplesError
from .partitions import dominates


@dataclass(frozen=True)
class Subspace:
    """Where elements are sampled from: the degree-1 piece, a fixed graded
    piece, or the whole maximal ideal."""

    kind: str  # "linear" | "piece" | "maximal"
    degree: int | None = None

    @staticmethod
    def linear() -> "Subspace":
        return Subspace("linear")

    @staticmethod
    def graded_piece(i: int) -> "Subspace":
        return Subspace("piece", i)

    @staticmethod
    def maximal_ideal() -> "Subspace":
        return Subspace("maximal")


LINEAR = Subspace.linear()
MAXIMAL_IDEAL = Subspace.maximal_ideal()


@dataclass(frozen=True)
class SamplingPlan:
    """Trial count, seed, and coefficient pool for deterministic sampling.

    Over the rationals, coefficients are integers in [-bound, bound]; over a
    prime field, uniform field elements.
    """

    trials: int = 12
    seed: int = 0
    coefficient_bound: int = 101
    subspace: Subspace = MAXIMAL_IDEAL

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def with_subspace(self, subspace: Subspace) -> "SamplingPlan":
        return SamplingPlan(self.trials, self.seed, self.coefficient_bound, subspace)

    def with_trials(self, trials: int) -> "SamplingPlan":
        return SamplingPlan(trials, self.seed, self.coefficient_bound, self.subspace)

    def rng(self, trial: int) -> random.Random:
        r = random.Random()
        r.seed(f"{self.seed}:{trial}", version=2)  # sha512-based, process-stable
        return r

    def coefficients(self, trial: int, count: int, field):
        rng = self.rng(trial)
        if field.p is None:
            b = self.coefficient_bound
            return [rng.randint(-b, b) for _ in range(count)]
        return [rng.randrange(field.p) for _ in range(count)]


def dominance_maximum(samples):
    """The (partition, payload) pair whose partition dominates every sampled
    partition; raises IncomparableSamplesError with the maximal antichain if
    none does."""
    samples = list(samples)
    if not samples:
        raise ValueError("no samples")
    distinct = {}
    for part, payload in samples:
        distinct.setdefault(part, payload)
    for part, payload in distinct.items():
        if all(dominates(part, other) for other in distinct):
            return part, payload
    maximal = [p for p in distinct
               if not any(q != p and dominates(q, p) for q in distinct)]
    raise IncomparableSamplesError(sorted(maximal, key=lambda p: p.parts, reverse=True))
