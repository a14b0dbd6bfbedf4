"""Integer partitions, dominance order, Hilbert-function bounds, and the
degree-tagged refinements used throughout the library.

All values are immutable; every function is pure.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache

from .errors import (
    EmptyPartitionError,
    ExpressionSyntaxError,
    InvalidArgumentError,
    WeightMismatchError,
)


class Dominance(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


class Partition:
    """A weakly decreasing sequence of positive integers.

    The empty partition is allowed and stands for the zero module.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise InvalidArgumentError(f"partition parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise InvalidArgumentError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @staticmethod
    def sorted(parts) -> "Partition":
        """Build a partition from parts in any order (zeros dropped)."""
        return Partition(sorted((p for p in parts if p), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def __str__(self):
        return render_partition(self)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers diagram; an involution."""
    if not p.parts:
        return Partition()
    cols = [0] * p.parts[0]
    for part in p.parts:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def dominance_cmp(p: Partition, q: Partition) -> Dominance:
    """Compare two partitions of the same weight by all prefix sums."""
    if p.weight != q.weight:
        raise WeightMismatchError(f"weights differ: {p.weight} vs {q.weight}")
    le = ge = True
    sp = sq = 0
    for a, b in itertools.zip_longest(p.parts, q.parts, fillvalue=0):
        sp += a
        sq += b
        if sp > sq:
            le = False
        if sp < sq:
            ge = False
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominates(p: Partition, q: Partition) -> bool:
    """True when p >= q in the dominance order."""
    return dominance_cmp(p, q) in (Dominance.GREATER, Dominance.EQUAL)


class HilbertFunction:
    """Finite sequence of nonnegative integers indexed from degree 0.

    The trailing entry must be nonzero (or the sequence empty).  Leading
    entry 1 is an algebra-level invariant, not enforced here: modules may
    start anywhere.
    """

    __slots__ = ("values",)

    def __init__(self, values=()):
        values = tuple(int(v) for v in values)
        if any(v < 0 for v in values):
            raise InvalidArgumentError(f"Hilbert function values must be >= 0: {values}")
        if values and values[-1] == 0:
            raise InvalidArgumentError("trailing Hilbert function entry must be nonzero")
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("HilbertFunction is immutable")

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def socle_degree(self) -> int:
        if not self.values:
            raise InvalidArgumentError("empty Hilbert function has no socle degree")
        return len(self.values) - 1

    def is_unimodal(self) -> bool:
        vals = self.values
        i = 0
        while i + 1 < len(vals) and vals[i] <= vals[i + 1]:
            i += 1
        while i + 1 < len(vals) and vals[i] >= vals[i + 1]:
            i += 1
        return i == len(vals) - 1 if vals else True

    def is_symmetric(self) -> bool:
        return self.values == tuple(reversed(self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        return isinstance(other, HilbertFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"HilbertFunction{self.values}"

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.values) + ")"


def hilbert_conjugate(h: HilbertFunction) -> Partition:
    """The conjugate partition of the Hilbert function's values."""
    return conjugate(Partition.sorted(h.values))


def _bar_runs(h: HilbertFunction):
    """Maximal contiguous runs of the bar graph of h, as (length, start) pairs.

    Row r of the bar graph occupies the degrees i with h_i >= r; each maximal
    contiguous stretch of such degrees is one run.
    """
    runs = []
    if not h.values:
        return runs
    for r in range(1, max(h.values) + 1):
        start = None
        for i, v in enumerate(h.values):
            if v >= r:
                if start is None:
                    start = i
            elif start is not None:
                runs.append((i - start, start))
                start = None
        if start is not None:
            runs.append((len(h.values) - start, start))
    return runs


def bar_graph_partition(h: HilbertFunction) -> Partition:
    """Run lengths of the bar graph of h; equals hilbert_conjugate(h) when h
    is unimodal, and refines it otherwise."""
    return Partition.sorted(length for length, _ in _bar_runs(h))


class JordanDegreeType:
    """A multiset of (length, initial degree) pairs refining a partition."""

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        entries = tuple(sorted(((int(l), int(d)) for l, d in entries),
                               key=lambda e: (-e[0], e[1])))
        for length, degree in entries:
            if length < 1:
                raise InvalidArgumentError(f"string length must be positive: {length}")
            if degree < 0:
                raise InvalidArgumentError(f"initial degree must be >= 0: {degree}")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("JordanDegreeType is immutable")

    def forget(self) -> Partition:
        """Drop degree tags, keeping the sorted length partition."""
        return Partition.sorted(length for length, _ in self.entries)

    @property
    def weight(self) -> int:
        return sum(length for length, _ in self.entries)

    def bead_counts(self) -> HilbertFunction:
        """Number of beads in each degree: entry (l, d) covers degrees d..d+l-1."""
        if not self.entries:
            return HilbertFunction()
        top = max(d + l for l, d in self.entries)
        counts = [0] * top
        for length, degree in self.entries:
            for i in range(degree, degree + length):
                counts[i] += 1
        return HilbertFunction(counts)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, JordanDegreeType) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"JordanDegreeType{self.entries}"

    def __str__(self):
        return "(" + ",".join(f"{l}_{d}" for l, d in self.entries) + ")"


def hilbert_degree_type(h: HilbertFunction) -> JordanDegreeType:
    """Bar-graph runs of h tagged with their starting degrees.

    Forgetting the tags gives bar_graph_partition(h); the per-degree bead
    counts reconstruct h exactly.
    """
    return JordanDegreeType(_bar_runs(h))


def almost_rectangular(n: int, k: int) -> Partition:
    """The unique partition of n with k parts differing pairwise by <= 1."""
    if k < 1 or n < 1:
        raise InvalidArgumentError("n and k must be positive")
    if k > n:
        raise InvalidArgumentError(f"cannot split {n} into {k} positive parts")
    q, r = divmod(n, k)
    return Partition([q + 1] * r + [q] * (k - r))


def power_partition(p: Partition, k: int) -> Partition:
    """Block sizes after raising a nilpotent map of type p to the k-th power.

    A block of size s smaller than k becomes s blocks of size 1, which is
    [s]^s, so each part contributes [s]^min(k, s).
    """
    if k < 1:
        raise InvalidArgumentError("power must be positive")
    out = []
    for s in p.parts:
        out.extend(almost_rectangular(s, min(k, s)).parts)
    return Partition.sorted(out)


def is_stable(p: Partition) -> bool:
    """True when consecutive parts differ by at least two."""
    return all(a - b >= 2 for a, b in zip(p.parts, p.parts[1:]))


def is_almost_rectangular(p: Partition) -> bool:
    return bool(p.parts) and p.parts[0] - p.parts[-1] <= 1


def ar_cover_number(p: Partition) -> int:
    """Minimal number of almost-rectangular subpartitions covering p.

    Greedy on the sorted parts: open a new group whenever the current part
    differs from the group's maximum by >= 2.  Greedy is optimal because the
    groups are intervals of part values.
    """
    if not p.parts:
        raise EmptyPartitionError("cover number of the empty partition")
    groups = 1
    group_max = p.parts[0]
    for part in p.parts[1:]:
        if group_max - part >= 2:
            groups += 1
            group_max = part
    return groups


def dominance_sum(p: Partition, q: Partition) -> Partition:
    """Entrywise sum, the shorter partition padded with zeros."""
    return Partition(a + b for a, b in
                     itertools.zip_longest(p.parts, q.parts, fillvalue=0))


def _merge_candidates(entries):
    """Indices (i, j) whose classes can collapse: (l, d) then (l', d') with
    d' = d + l joins into (l + l', d)."""
    for i, (li, di) in enumerate(entries):
        for j, (lj, dj) in enumerate(entries):
            if i != j and dj == di + li:
                yield i, j


def _jdt_sort_key(entries):
    kappa = tuple(sorted((l for l, _ in entries), reverse=True))
    return kappa, tuple(sorted(entries))


@lru_cache(maxsize=None)
def _collapse_terminals(entries):
    """All merge-terminal states reachable from the given entry tuple."""
    merges = list(_merge_candidates(entries))
    if not merges:
        return frozenset([entries])
    out = set()
    for i, j in merges:
        (li, di), (lj, _) = entries[i], entries[j]
        rest = tuple(e for k, e in enumerate(entries) if k not in (i, j))
        merged = tuple(sorted(rest + ((li + lj, di),)))
        out |= _collapse_terminals(merged)
    return frozenset(out)


EXHAUSTIVE_COLLAPSE_LIMIT = 12


def collapse_closure(d: JordanDegreeType) -> JordanDegreeType:
    """Repeatedly merge classes (l, d) and (l', d + l) into (l + l', d),
    maximising the forgotten partition in the dominance order.

    Exhaustive over merge sequences up to EXHAUSTIVE_COLLAPSE_LIMIT entries;
    greedy (largest merged part first) beyond that.  Among dominance-maximal
    terminal states, ties break by the larger sorted length partition, then
    the smaller sorted entry list, so the result is deterministic.
    """
    entries = tuple(sorted(d.entries))
    if len(entries) <= EXHAUSTIVE_COLLAPSE_LIMIT:
        terminals = _collapse_terminals(entries)
        best = max(terminals, key=_jdt_sort_key)
        return JordanDegreeType(best)
    # Greedy: take the merge producing the largest part, repeat.
    current = list(entries)
    while True:
        merges = list(_merge_candidates(tuple(current)))
        if not merges:
            return JordanDegreeType(current)
        i, j = max(merges, key=lambda ij: current[ij[0]][0] + current[ij[1]][0])
        (li, di), (lj, _) = current[i], current[j]
        current = [e for k, e in enumerate(current) if k not in (i, j)]
        current.append((li + lj, di))
        current.sort()


def partitions_of(n: int, max_part=None):
    """Yield all partitions of n with parts bounded by max_part."""
    if n == 0:
        yield Partition()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def render_partition(p: Partition, compact: bool = False) -> str:
    """Render as "(5,3,3,1)" or, compactly, "(5,3^2,1)"."""
    if not p.parts:
        return "()"
    if not compact:
        return "(" + ",".join(str(x) for x in p.parts) + ")"
    pieces = []
    for value, group in itertools.groupby(p.parts):
        count = sum(1 for _ in group)
        pieces.append(f"{value}^{count}" if count > 1 else str(value))
    return "(" + ",".join(pieces) + ")"


def parse_degree_type(text: str) -> JordanDegreeType:
    """Parse "(6_0,4_1,1_1,2_3)" into a JordanDegreeType."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return JordanDegreeType()
    entries = []
    for piece in s.split(","):
        piece = piece.strip()
        if "_" not in piece:
            raise ExpressionSyntaxError(
                f"degree-type entry {piece!r} needs the form length_degree",
                text.find(piece))
        length, _, degree = piece.partition("_")
        try:
            entries.append((int(length), int(degree)))
        except ValueError:
            raise ExpressionSyntaxError(f"bad degree-type entry {piece!r}",
                                        text.find(piece))
    return JordanDegreeType(entries)


def parse_partition(text: str) -> Partition:
    """Parse "(5,3^2,1)" or "5,3,3,1" (exponents expand to repeats)."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return Partition()
    parts = []
    for piece in s.split(","):
        piece = piece.strip()
        if "^" in piece:
            base, _, exp = piece.partition("^")
            try:
                value, count = int(base), int(exp)
            except ValueError:
                raise ExpressionSyntaxError(f"bad partition piece {piece!r}", text.find(piece))
            if count < 0:
                raise ExpressionSyntaxError(f"negative exponent in {piece!r}", text.find(piece))
            parts.extend([value] * count)
        else:
            try:
                parts.append(int(piece))
            except ValueError:
                raise ExpressionSyntaxError(f"bad partition piece {piece!r}", text.find(piece))
    return Partition.sorted(parts)
