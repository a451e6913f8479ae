"""Simple graphs over an ordered ground set, with subsets as bitmasks.

The vertex order of the GroundSet is the coordinate order of every vector
and bitmask in the package, so enumeration orders here are what make all
downstream artifacts (skeletons, facet files, DOT exports) deterministic.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .bitsets import bits

Label = Hashable


class GroundSet:
    """A fixed total order on distinct labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[Label]):
        self.labels: tuple[Label, ...] = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate labels in ground set")

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"label {label!r} not in ground set") from None

    def mask_of(self, labels: Iterable[Label]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels_of(self, mask: int) -> tuple[Label, ...]:
        self.check_mask(mask)
        return tuple(self.labels[i] for i in bits(mask))

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask >> len(self.labels):
            raise ValueError("subset mask outside the ground set")


class SimpleGraph:
    """Undirected simple graph; neighborhoods are bitmasks in ground order."""

    __slots__ = ("ground", "adj")

    def __init__(self, ground: GroundSet, adj: Sequence[int]):
        n = len(ground)
        if len(adj) != n:
            raise ValueError("adjacency length does not match ground set")
        for v, nb in enumerate(adj):
            if nb >> n or nb < 0:
                raise ValueError("neighborhood outside the ground set")
            if (nb >> v) & 1:
                raise ValueError(f"self-loop at {ground.labels[v]!r}")
        for v, nb in enumerate(adj):
            for u in bits(nb):
                if not (adj[u] >> v) & 1:
                    raise ValueError("adjacency is not symmetric")
        self.ground = ground
        self.adj = tuple(adj)

    @classmethod
    def from_edges(
        cls, labels: Iterable[Label], edges: Iterable[tuple[Label, Label]]
    ) -> "SimpleGraph":
        ground = GroundSet(labels)
        adj = [0] * len(ground)
        for a, b in edges:
            i, j = ground.index(a), ground.index(b)
            if i == j:
                raise ValueError(f"self-loop at {a!r}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(ground, adj)

    @property
    def n(self) -> int:
        return len(self.ground)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            nb = self.adj[u] >> (u + 1)
            for k in bits(nb):
                out.append((u, u + 1 + k))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"


def is_stable(g: SimpleGraph, a: int) -> bool:
    """True iff no two members of the subset are adjacent in g."""
    g.ground.check_mask(a)
    for v in bits(a):
        if g.adj[v] & a:
            return False
    return True


def enumerate_stable_sets(g: SimpleGraph) -> list[int]:
    """All stable sets, sorted by cardinality then position order.

    Branching include/exclude search; including a vertex prunes its whole
    neighborhood, so the tree size is O(n * number of stable sets).
    """
    n = g.n
    adj = g.adj
    out: list[int] = []

    def go(v: int, current: int, forbidden: int) -> None:
        if v == n:
            out.append(current)
            return
        go(v + 1, current, forbidden)
        if not (forbidden >> v) & 1:
            go(v + 1, current | (1 << v), forbidden | adj[v])

    go(0, 0, 0)
    out.sort(key=_subset_sort_key)
    return out


def _subset_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), tuple(bits(mask)))


def enumerate_max_cliques(g: SimpleGraph) -> list[int]:
    """All maximal cliques (Bron-Kerbosch with pivoting), deterministic order."""
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: vertex of p|x with the most neighbors in p, lowest index wins
        pivot, best = -1, -1
        for u in bits(p | x):
            c = (adj[u] & p).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits(p & ~adj[pivot]):
            vb = 1 << v
            bk(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    bk(0, (1 << n) - 1, 0)
    out.sort(key=_subset_sort_key)
    return out


def connected_components(g: SimpleGraph) -> list[int]:
    """Vertex sets of the connected components, as masks, by least member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_union_of_complete_graphs(g: SimpleGraph) -> bool:
    """True iff every connected component induces a complete subgraph."""
    for comp in connected_components(g):
        for v in bits(comp):
            if g.adj[v] != comp & ~(1 << v):
                return False
    return True
