"""Graph builders for the family catalog, posets, and set-partition encodings.

Pair-labeled families (bell, nn, nc) share the ground set of pairs (i, j)
with 1 <= i < j <= n in lexicographic order; the rook family uses all pairs
(i, j) with 1 <= i, j <= n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bitsets import bits
from .graphs import GroundSet, Label, SimpleGraph, is_stable


def pair_ground(n: int) -> GroundSet:
    """Ground set of pairs (i, j), 1 <= i < j <= n, lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return GroundSet((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def build_empty_graph(n: int) -> SimpleGraph:
    """Edgeless graph on labels 1..n; its stable sets form the n-cube."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SimpleGraph.from_edges(range(1, n + 1), [])


def build_complete_graph(n: int) -> SimpleGraph:
    if n < 0:
        raise ValueError("n must be nonnegative")
    labels = range(1, n + 1)
    return SimpleGraph.from_edges(
        labels, [(i, j) for i in labels for j in range(i + 1, n + 1)]
    )


def build_relation_graph(
    labels: Iterable[Label], pairs: Iterable[tuple[Label, Label]]
) -> SimpleGraph:
    """Symmetrize an arbitrary relation and drop loops."""
    ground = GroundSet(labels)
    adj = [0] * len(ground)
    for a, b in pairs:
        i, j = ground.index(a), ground.index(b)
        if i == j:
            continue
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return SimpleGraph(ground, adj)


class Poset:
    """Strict partial order on a ground set; keeps the full less-than relation."""

    __slots__ = ("ground", "less_than")

    def __init__(self, ground: GroundSet, less_than: Iterable[tuple[int, int]]):
        rel = frozenset(less_than)
        n = len(ground)
        for i, j in rel:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("relation pair outside the ground set")
            if i == j:
                raise ValueError("strict order cannot be reflexive")
            if (j, i) in rel:
                raise ValueError("strict order cannot be symmetric")
        for i, j in rel:
            for k, l in rel:
                if j == k and (i, l) not in rel:
                    raise ValueError("relation is not transitive")
        self.ground = ground
        self.less_than = rel

    @classmethod
    def from_relation(
        cls, labels: Iterable[Label], pairs: Iterable[tuple[Label, Label]]
    ) -> "Poset":
        """Build from any acyclic generating relation; closure is taken here."""
        ground = GroundSet(labels)
        n = len(ground)
        below = [0] * n  # below[j] = mask of elements strictly less than j
        for a, b in pairs:
            i, j = ground.index(a), ground.index(b)
            below[j] |= 1 << i
        # transitive closure, then cycle check
        changed = True
        while changed:
            changed = False
            for j in range(n):
                acc = below[j]
                for i in bits(below[j]):
                    acc |= below[i]
                if acc != below[j]:
                    below[j] = acc
                    changed = True
        for j in range(n):
            if (below[j] >> j) & 1:
                raise ValueError("relation contains a cycle")
        rel = [(i, j) for j in range(n) for i in bits(below[j])]
        return cls(ground, rel)

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.less_than

    def comparable(self, i: int, j: int) -> bool:
        return (i, j) in self.less_than or (j, i) in self.less_than

    def __repr__(self) -> str:
        return f"Poset(n={len(self.ground)}, pairs={len(self.less_than)})"


def build_comparability_graph(p: Poset) -> SimpleGraph:
    """Edges join comparable elements, so stable sets are the antichains."""
    n = len(p.ground)
    adj = [0] * n
    for i, j in p.less_than:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return SimpleGraph(p.ground, adj)


def containment_poset(n: int) -> Poset:
    """Pairs (i, j) ordered by weak interval containment:
    (i, j) < (k, l) iff k <= i, j <= l and the pairs differ."""
    ground = pair_ground(n)
    rel = []
    for a, (i, j) in enumerate(ground.labels):
        for b, (k, l) in enumerate(ground.labels):
            if a != b and k <= i and j <= l:
                rel.append((a, b))
    return Poset(ground, rel)


def build_bell_graph(n: int) -> SimpleGraph:
    """Pairs clash iff they share the left entry or the right entry."""
    ground = pair_ground(n)
    adj = _pair_adjacency(
        ground, lambda i, j, k, l: (i == k) != (j == l)
    )
    return SimpleGraph(ground, adj)


def build_nonnesting_graph(n: int) -> SimpleGraph:
    """Pairs clash iff one interval weakly contains the other."""
    ground = pair_ground(n)
    adj = _pair_adjacency(
        ground,
        lambda i, j, k, l: (k <= i and j <= l) or (i <= k and l <= j),
    )
    return SimpleGraph(ground, adj)


def build_noncrossing_graph(n: int) -> SimpleGraph:
    """Pairs clash iff they share an entry or interleave strictly."""
    ground = pair_ground(n)

    def clash(i: int, j: int, k: int, l: int) -> bool:
        if i == k or j == l:
            return True
        return (i < k < j < l) or (k < i < l < j)

    return SimpleGraph(ground, _pair_adjacency(ground, clash))


def _pair_adjacency(ground: GroundSet, clash) -> list[int]:
    labels = ground.labels
    n = len(labels)
    adj = [0] * n
    for a in range(n):
        i, j = labels[a]
        for b in range(a + 1, n):
            k, l = labels[b]
            if clash(i, j, k, l):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def build_rook_graph(n: int) -> SimpleGraph:
    """All cells (i, j) of an n x n board; edges join same row or column.

    Maximum stable sets are the permutation matrices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ground = GroundSet(
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1)
    )
    labels = ground.labels
    adj = [0] * len(labels)
    for a in range(len(labels)):
        i, j = labels[a]
        for b in range(a + 1, len(labels)):
            k, l = labels[b]
            if i == k or j == l:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return SimpleGraph(ground, adj)


FAMILY_BUILDERS = {
    "empty": build_empty_graph,
    "complete": build_complete_graph,
    "bell": build_bell_graph,
    "nn": build_nonnesting_graph,
    "nc": build_noncrossing_graph,
    "rook": build_rook_graph,
}


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n}; blocks are sorted tuples, ordered by least member."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block or tuple(sorted(block)) != block:
                raise ValueError("blocks must be nonempty and sorted")
            for x in block:
                if not 1 <= x <= self.n or x in seen:
                    raise ValueError("blocks must partition 1..n")
                seen.add(x)
        if len(seen) != self.n:
            raise ValueError("blocks must cover 1..n")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("blocks must be ordered by least member")

    def arcs(self) -> list[tuple[int, int]]:
        """Consecutive-in-block arcs of the standard arc diagram."""
        out = []
        for block in self.blocks:
            out.extend(zip(block, block[1:]))
        out.sort()
        return out


def arcs_to_partition(n: int, a: int, bell_graph: SimpleGraph | None = None) -> SetPartition:
    """Partition of 1..n whose arc diagram has exactly the given arcs.

    The arc set must be stable in build_bell_graph(n): at most one arc out
    of each left endpoint and into each right endpoint.
    """
    g = bell_graph if bell_graph is not None else build_bell_graph(n)
    if not is_stable(g, a):
        raise ValueError("arc set is not stable in the bell graph")
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pos in bits(a):
        i, j = g.ground.labels[pos]
        parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    blocks = sorted((tuple(sorted(b)) for b in groups.values()), key=lambda b: b[0])
    return SetPartition(n, tuple(blocks))


def is_noncrossing(p: SetPartition) -> bool:
    """No two arcs (i, j), (k, l) with i < k < j < l."""
    arcs = p.arcs()
    for idx, (i, j) in enumerate(arcs):
        for k, l in arcs[idx + 1 :]:
            lo, hi = ((i, j), (k, l)) if i < k else ((k, l), (i, j))
            if lo[0] < hi[0] < lo[1] < hi[1]:
                return False
    return True


def is_nonnesting(p: SetPartition) -> bool:
    """No two arcs (i, j), (k, l) with i < k < l < j."""
    arcs = p.arcs()
    for idx, (i, j) in enumerate(arcs):
        for k, l in arcs[idx + 1 :]:
            if (i < k and l < j) or (k < i and j < l):
                return False
    return True
