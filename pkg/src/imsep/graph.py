"""Immutable simple graphs and the separator predicates.

Vertices are the dense integers ``0..n-1``.  Every vertex set is handled
internally as an ``int`` bitmask so that removing a set and running a
breadth-first search stays cheap; the public functions accept any iterable
of ids and return ``frozenset`` objects.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    DisconnectedGraphError,
    GraphFormatError,
    InvalidArgumentError,
    InvalidVertexError,
)

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def canonical(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a vertex set: strictly increasing ids."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; ``adjacency[v]`` is a frozenset and
    ``masks[v]`` the same neighbourhood as a bitmask.
    """

    __slots__ = ("n", "adjacency", "masks", "full_mask", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgumentError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise InvalidVertexError(f"vertex {x} out of range for n={n}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adjacency = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(to_mask(s) for s in nbrs)
        self.full_mask = (1 << n) - 1
        self._m = sum(len(s) for s in nbrs) // 2

    @property
    def m(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def neighborhood_mask(self, mask: int) -> int:
        """Open neighbourhood N(X) of the vertex set encoded by ``mask``."""
        out = 0
        for v in bits(mask):
            out |= self.masks[v]
        return out & ~mask

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} out of range for n={self.n}")

    def mask_of(self, vertices: Iterable[int]) -> int:
        """Validate ``vertices`` against this graph and return its bitmask."""
        if isinstance(vertices, int):
            raise TypeError("expected an iterable of vertex ids, got an int")
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def component_masks(self, removed: int = 0) -> list[int]:
        """Connected components of ``G - removed`` as bitmasks, by lowest vertex."""
        rest = self.full_mask & ~removed
        out = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.masks[v]
                frontier = reach & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g`` after deleting ``removed``.

    The list is empty exactly when every vertex was removed.

    >>> path = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    >>> [sorted(c) for c in components(path, {1})]
    [[0], [2, 3, 4]]
    """
    return [from_mask(c) for c in g.component_masks(g.mask_of(removed))]


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("separator predicates require a connected graph")


def _separates(g: Graph, mask: int) -> bool:
    # two or more components left; fewer than two survivors can never qualify
    rest = g.full_mask & ~mask
    if rest & (rest - 1) == 0:
        return False
    return len(g.component_masks(mask)) >= 2


def _separates_pair(g: Graph, mask: int, a: int, b: int) -> bool:
    rest = g.full_mask & ~mask
    comp = 1 << a
    frontier = comp
    target = 1 << b
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= g.masks[v]
        frontier = reach & rest & ~comp
        if frontier & target:
            return False
        comp |= frontier
    return True


def is_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``g - s`` has at least two connected components."""
    mask = g.mask_of(s)
    _require_connected(g)
    return _separates(g, mask)


def _check_endpoints(g: Graph, mask: int, a: int, b: int) -> None:
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise InvalidArgumentError("endpoints must be distinct")
    if mask >> a & 1 or mask >> b & 1:
        raise InvalidArgumentError("endpoints may not belong to the separator")


def is_ab_separator(g: Graph, s: Iterable[int], a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``g - s``."""
    mask = g.mask_of(s)
    _check_endpoints(g, mask, a, b)
    return _separates_pair(g, mask, a, b)


def is_minimal_ab_separator(g: Graph, s: Iterable[int], a: int, b: int) -> bool:
    """True iff ``s`` separates ``a`` from ``b`` and no proper subset does.

    Separating a fixed pair is upward monotone, so it is enough to try
    dropping one vertex at a time.
    """
    mask = g.mask_of(s)
    _check_endpoints(g, mask, a, b)
    if not _separates_pair(g, mask, a, b):
        return False
    return not any(_separates_pair(g, mask & ~(1 << u), a, b) for u in bits(mask))


def is_inclusion_wise_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is a separator and ``s - {u}`` is not, for every ``u`` in ``s``.

    Although separators are not upward monotone, the co-singleton test is
    equivalent to "no proper subset of ``s`` is a separator".
    """
    mask = g.mask_of(s)
    _require_connected(g)
    if not _separates(g, mask):
        return False
    return not any(_separates(g, mask & ~(1 << u)) for u in bits(mask))


def is_iwm_mask(g: Graph, mask: int) -> bool:
    """Unchecked fast path for :func:`is_inclusion_wise_minimal_separator`.

    Uses the equivalent "every component is full" test: ``g - (s - {u})`` is
    connected exactly when ``u`` touches every component of ``g - s``.
    """
    comps = g.component_masks(mask)
    if len(comps) < 2:
        return False
    for u in bits(mask):
        nu = g.masks[u]
        for c in comps:
            if not nu & c:
                return False
    return True


def is_separator_bruteforce_minimal(g: Graph, s: Iterable[int]) -> bool:
    """Definition-level check: ``s`` separates and no proper subset does.

    Exponential in ``|s|``; kept for cross-checking the co-singleton test.
    """
    mask = g.mask_of(s)
    _require_connected(g)
    if not _separates(g, mask):
        return False
    members = list(bits(mask))
    for r in range(len(members)):
        for sub in combinations(members, r):
            if _separates(g, to_mask(sub)):
                return False
    return True


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``, relabelled densely.

    Returns the new graph and the list mapping new ids to old ids.
    """
    old = sorted(set(keep))
    for v in old:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(old)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph(len(old), edges), old


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines edge-list format."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphFormatError("header values must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    for lineno, u, v in body:
        if not 0 <= u < v < n:
            raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) must satisfy 0 <= u < v < {n}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
    return Graph(n, [(u, v) for _, u, v in body])


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))
