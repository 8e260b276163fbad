"""Exact Stanley depth via interval partitions of the characteristic poset.

The characteristic poset of a factor I/J is the set of multidegrees a with
0 <= a <= g and x^a in I minus J, where g is the componentwise join of all
generator exponents of I and J.  A partition of it into intervals [a, b]
encodes a Stanley decomposition whose depth is the minimum of
rho(b) = #{j : b_j = g_j} over the interval tops; the Stanley depth of I/J
is the best achievable minimum over all interval partitions.

The decision procedure exists_partition is a complete backtracking search:
it always extends the lexicographically smallest uncovered element and
branches over every admissible top, biggest intervals first.  No heuristic
cuts are applied beyond sound ones, so sdepth below is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ideals import DimensionError, Factor, Monomial, deglex_key
from .limits import BoxCapError, SearchBudgetError, check_deadline
from .parse import format_monomial

DEFAULT_BOX_CAP = 10**8
DEFAULT_NODE_BUDGET = 10**7


def rho(b, g) -> int:
    """Number of coordinates of b sitting on the bound g."""
    if len(b) != len(g):
        raise DimensionError(f"rho of vectors with lengths {len(b)} and {len(g)}")
    if any(x > y or x < 0 for x, y in zip(b, g)):
        raise ValueError(f"{b} does not lie in the box [0, {g}]")
    return sum(1 for x, y in zip(b, g) if x == y)


class CharacteristicPoset:
    """Multidegrees of I minus J inside the box [0, g], with bitset machinery.

    Box cells are numbered lexicographically with the last coordinate
    running fastest, so numeric order of cell indices is lex order of
    multidegrees and bit i of any mask refers to cell i.
    """

    __slots__ = ("n", "g", "dims", "strides", "volume", "coords", "elem_mask",
                 "_coord_by_index")

    def __init__(self, factor: Factor, box_cap: int = DEFAULT_BOX_CAP, pad: int = 0):
        g = tuple(e + pad for e in factor.join_exponents())
        dims = tuple(e + 1 for e in g)
        volume = 1
        for d in dims:
            volume *= d
        if volume > box_cap:
            raise BoxCapError(
                f"characteristic box has {volume} cells, over the cap of {box_cap}"
            )
        n = len(dims)
        strides = [1] * n
        for j in range(n - 2, -1, -1):
            strides[j] = strides[j + 1] * dims[j + 1]
        coords: list[Monomial] = []
        mask = 0
        for idx, a in enumerate(itertools.product(*(range(d) for d in dims))):
            if factor.support(a):
                coords.append(a)
                mask |= 1 << idx
        self.n = n
        self.g = g
        self.dims = dims
        self.strides = tuple(strides)
        self.volume = volume
        self.coords = tuple(coords)
        self.elem_mask = mask
        self._coord_by_index = {
            sum(e * s for e, s in zip(a, strides)): a for a in coords
        }

    def index_of(self, a) -> int:
        return sum(e * s for e, s in zip(a, self.strides))

    def coord_of(self, idx: int) -> Monomial:
        return self._coord_by_index[idx]

    def interval_mask(self, a, b) -> int:
        """Bitmask of every box cell in the interval [a, b]."""
        n = self.n
        run = (1 << (b[-1] - a[-1] + 1)) - 1
        if n == 1:
            return run << a[0]
        strides = self.strides
        last = a[-1]
        mask = 0
        for prefix in itertools.product(*(range(a[j], b[j] + 1) for j in range(n - 1))):
            mask |= run << (sum(p * s for p, s in zip(prefix, strides)) + last)
        return mask

    def covered_interval_mask(self, a, b, within: int):
        """Mask of [a, b] if every cell is set in `within`, else None (early exit)."""
        n = self.n
        run = (1 << (b[-1] - a[-1] + 1)) - 1
        if n == 1:
            seg = run << a[0]
            return seg if within & seg == seg else None
        strides = self.strides
        last = a[-1]
        mask = 0
        for prefix in itertools.product(*(range(a[j], b[j] + 1) for j in range(n - 1))):
            seg = run << (sum(p * s for p, s in zip(prefix, strides)) + last)
            if within & seg != seg:
                return None
            mask |= seg
        return mask


def char_poset(F: Factor, box_cap: int = DEFAULT_BOX_CAP, pad: int = 0) -> CharacteristicPoset:
    """Build the characteristic poset of F, refusing boxes over box_cap cells."""
    return CharacteristicPoset(F, box_cap=box_cap, pad=pad)


@dataclass(frozen=True)
class IntervalPartition:
    """Disjoint intervals [bottom, top] whose union is the poset's element set."""

    intervals: tuple[tuple[Monomial, Monomial], ...]

    def as_lists(self):
        return [[list(a), list(b)] for a, b in self.intervals]


def _reaches(poset: CharacteristicPoset, a, d: int) -> bool:
    """Can some interval inside the element set start at a and reach rho >= d?"""
    g = poset.g
    free = sum(1 for x, y in zip(a, g) if x == y)
    need = d - free
    if need <= 0:
        return True
    open_axes = [j for j in range(poset.n) if a[j] < g[j]]
    if need > len(open_axes):
        return False
    em = poset.elem_mask
    for S in itertools.combinations(open_axes, need):
        b = list(a)
        for j in S:
            b[j] = g[j]
        if poset.covered_interval_mask(a, tuple(b), em) is not None:
            return True
    return False


def exists_partition(poset: CharacteristicPoset, d: int,
                     node_budget: int = DEFAULT_NODE_BUDGET,
                     deadline: float | None = None) -> IntervalPartition | None:
    """A partition whose interval tops all have rho >= d, or None if none exists.

    Complete depth-first search.  A node is one candidate interval applied;
    exceeding node_budget raises SearchBudgetError and a passed deadline
    raises TimeLimitError, both distinct from the None answer.
    """
    n, g = poset.n, poset.g
    if not 0 <= d <= n:
        raise ValueError(f"interval-top bound d={d} outside 0..{n}")
    if poset.elem_mask == 0:
        return IntervalPartition(())
    # sound static prune: each element on its own must reach d bound coordinates
    for i, a in enumerate(poset.coords):
        if deadline is not None and not i % 16:
            check_deadline(deadline)
        if not _reaches(poset, a, d):
            return None

    nodes = 0

    def make_frame(uncovered: int):
        low_idx = (uncovered & -uncovered).bit_length() - 1
        a = poset.coord_of(low_idx)
        cands = []
        seen = 0
        for b in itertools.product(*(range(a[j], g[j] + 1) for j in range(n))):
            seen += 1
            if deadline is not None and not seen % 64:
                check_deadline(deadline)
            r = 0
            for x, y in zip(b, g):
                if x == y:
                    r += 1
            if r < d:
                continue
            mask = poset.covered_interval_mask(a, b, uncovered)
            if mask is not None:
                cands.append((-mask.bit_count(), b, mask))
        cands.sort()  # biggest intervals first, then lex on the top
        return [uncovered, a, cands, 0]

    stack = [make_frame(poset.elem_mask)]
    chosen: list[tuple[Monomial, Monomial]] = []
    while stack:
        frame = stack[-1]
        uncovered, a, cands, i = frame
        if i >= len(cands):
            stack.pop()
            if stack:
                chosen.pop()
            continue
        frame[3] = i + 1
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(
                f"partition search exceeded {node_budget} nodes at d={d}"
            )
        if deadline is not None and not nodes % 256:
            check_deadline(deadline)
        _, b, mask = cands[i]
        remaining = uncovered & ~mask
        chosen.append((a, b))
        if remaining == 0:
            return IntervalPartition(tuple(chosen))
        stack.append(make_frame(remaining))
    return None


def sdepth(F: Factor, *, box_cap: int = DEFAULT_BOX_CAP,
           node_budget: int = DEFAULT_NODE_BUDGET,
           deadline: float | None = None) -> tuple[int, IntervalPartition]:
    """Stanley depth of F together with a witnessing interval partition.

    Tries d = n, n-1, ... and returns at the first achievable level; d = 0
    always succeeds on a nonempty poset, so this terminates with the exact
    value (the decision problem is monotone in d).
    """
    poset = char_poset(F, box_cap=box_cap)
    for d in range(poset.n, -1, -1):
        part = exists_partition(poset, d, node_budget=node_budget, deadline=deadline)
        if part is not None:
            return d, part
    raise AssertionError("unreachable: d = 0 always admits the singleton partition")


def verify_decomposition(F: Factor, partition: IntervalPartition, d: int,
                         box_cap: int = DEFAULT_BOX_CAP) -> bool:
    """Certificate check against char_poset(F): disjoint intervals inside the
    element set, union equal to it, every top with rho >= d."""
    poset = char_poset(F, box_cap=box_cap)
    g = poset.g
    covered = 0
    for a, b in partition.intervals:
        if len(a) != poset.n or len(b) != poset.n:
            return False
        if any(x < 0 or x > y or y > gj for x, y, gj in zip(a, b, g)):
            return False
        if rho(b, g) < d:
            return False
        mask = poset.covered_interval_mask(a, b, poset.elem_mask)
        if mask is None:  # some cell is not an element
            return False
        if covered & mask:  # overlap
            return False
        covered |= mask
    return covered == poset.elem_mask


def decomposition_lines(partition: IntervalPartition, g, names) -> list[str]:
    """Stanley spaces 'x^a * K[vars]' with vars = {x_j : b_j = g_j}, sorted."""
    lines = []
    for a, b in sorted(partition.intervals, key=lambda ab: deglex_key(ab[0])):
        free = ", ".join(names[j] for j in range(len(g)) if b[j] == g[j])
        lines.append(f"{format_monomial(a, names)} * K[{free}]")
    return lines
