"""Enumeration of minimal and inclusion-wise minimal separators.

Two production routes and two exhaustive oracles:

* :func:`enumerate_minimal_separators` -- the close-separator generation
  procedure of Berry, Bordat and Cogis: seed with ``N(C)`` for the components
  ``C`` of ``G - N[v]``, then close under ``S, x -> N(C)`` for the components
  of ``G - (S | N(x))``.
* :func:`enumerate_iwm_filter` -- the above followed by an
  inclusion-wise minimality filter.
* :func:`enumerate_iwm_search` -- a direct branch-and-prune search for the
  inclusion-wise minimal family that never materialises the minimal one.
* :func:`enumerate_minimal_separators_bruteforce` and
  :func:`enumerate_iwm_bruteforce` -- subset sweeps straight from the
  definitions, for graphs small enough to afford ``2**n``.
"""
from __future__ import annotations

import json
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import BudgetExceededError, DisconnectedGraphError, InvalidArgumentError
from .graph import Graph, bits, canonical, is_iwm_mask, to_mask

DEFAULT_MAX_SEPARATORS = 10**6
DEFAULT_BRUTEFORCE_CAP = 20

METHODS = ("berry", "filter", "search", "bruteforce")


def sort_key(s: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Canonical family order: by size, then lexicographically."""
    return (len(s), s)


@dataclass(frozen=True)
class SeparatorFamily:
    """Deduplicated, canonically ordered vertex sets with a provenance tag.

    Equality compares the sets only, so families produced by different
    methods can be checked against each other directly.
    """

    sets: tuple[tuple[int, ...], ...]
    method: str = field(default="berry", compare=False)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], method: str) -> "SeparatorFamily":
        if method not in METHODS:
            raise InvalidArgumentError(f"unknown method {method!r}")
        uniq = {canonical(s) for s in sets}
        return cls(tuple(sorted(uniq, key=sort_key)), method)

    @classmethod
    def from_masks(cls, masks: Iterable[int], method: str) -> "SeparatorFamily":
        return cls.from_sets((bits(m) for m in masks), method)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return canonical(s) in self.as_set()

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self.sets)

    def max_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def to_text(self) -> str:
        """One separator per line, ids space-separated."""
        return "".join(" ".join(map(str, s)) + "\n" for s in self.sets)

    def to_dict(self) -> dict:
        return {"count": len(self.sets), "method": self.method, "sets": [list(s) for s in self.sets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_text(cls, text: str, method: str = "berry") -> "SeparatorFamily":
        sets = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                sets.append(int(x) for x in line.split())
        return cls.from_sets(sets, method)

    @classmethod
    def from_dict(cls, doc: dict) -> "SeparatorFamily":
        fam = cls.from_sets(doc["sets"], doc["method"])
        if doc.get("count", len(fam)) != len(fam):
            raise ValueError("count does not match the number of sets")
        return fam


def _check_input(g: Graph) -> None:
    if g.n < 2:
        raise InvalidArgumentError("need at least two vertices")
    if not g.is_connected():
        raise DisconnectedGraphError("enumeration requires a connected graph")


def minimal_separator_masks(
    g: Graph,
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> set[int]:
    """Closure step of the minimal-separator enumeration, on bitmasks.

    Raises :class:`BudgetExceededError` once more than ``max_separators`` sets
    are found or ``time_budget`` seconds have elapsed.
    """
    _check_input(g)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    found: set[int] = set()
    queue: deque[int] = deque()

    def harvest(removed: int) -> None:
        for comp in g.component_masks(removed):
            sep = g.neighborhood_mask(comp)
            if sep and sep not in found:
                found.add(sep)
                queue.append(sep)
                if len(found) > max_separators:
                    raise BudgetExceededError(
                        f"more than {max_separators} minimal separators"
                    )

    for v in range(g.n):
        harvest(g.masks[v] | 1 << v)
    while queue:
        sep = queue.popleft()
        for x in bits(sep):
            harvest(sep | g.masks[x])
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError(f"time budget of {time_budget}s exhausted")
    return found


def enumerate_minimal_separators(
    g: Graph,
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> SeparatorFamily:
    """All minimal separators of a connected graph.

    A complete graph has none and yields an empty family.
    """
    masks = minimal_separator_masks(g, max_separators, time_budget)
    return SeparatorFamily.from_masks(masks, "berry")


def enumerate_iwm_filter(
    g: Graph,
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> SeparatorFamily:
    """Inclusion-wise minimal separators, by filtering all minimal separators.

    Complete because every inclusion-wise minimal separator is a minimal
    separator; the cost is driven by the (possibly much larger) number of
    minimal separators.
    """
    masks = minimal_separator_masks(g, max_separators, time_budget)
    return SeparatorFamily.from_masks((s for s in masks if is_iwm_mask(g, s)), "filter")


def _search_root(g: Graph, root: int, forced: int, emit, deadline) -> None:
    """Inclusion-wise minimal separators ``S`` with ``root`` outside and ``forced`` inside.

    State: the root side ``A`` (connected, contains ``root``) and the set
    ``X`` of vertices barred from ``A``.  Barred vertices adjacent to ``A``
    end up in ``S = N(A_final)``.  Each node branches on one undecided
    frontier vertex (join ``A`` or be barred).

    Pruning uses the components ``K`` of ``G - N[A] - forced``:

    * if some ``K`` has no undecided neighbour it can never touch ``A``, so
      it is a component of the final ``G - S`` and fullness forces
      ``S = N(K)``; that single candidate is tested and the subtree closed;
    * otherwise some ``K`` must touch every barred vertex, since each vertex
      of ``S`` needs a neighbour in every other component.
    """
    masks = g.masks
    stack = [(1 << root, masks[root] & ~(1 << root), forced)]
    steps = 0
    while stack:
        steps += 1
        if deadline is not None and steps % 1024 == 0 and time.monotonic() > deadline:
            raise BudgetExceededError("time budget exhausted")
        side, frontier, barred = stack.pop()
        undecided = frontier & ~barred
        comps = g.component_masks(side | frontier | forced)
        if not comps:
            continue
        locked = None
        for comp in comps:
            if not g.neighborhood_mask(comp) & undecided:
                locked = comp
                break
        if locked is not None:
            cand = g.neighborhood_mask(locked)
            if barred & ~cand == 0 and is_iwm_mask(g, cand):
                emit(cand)
            continue
        if not undecided:
            continue
        if barred and not any(
            all(masks[x] & comp for x in bits(barred)) for comp in comps
        ):
            continue
        x = undecided & -undecided
        xi = x.bit_length() - 1
        grown = side | x
        stack.append((side, frontier, barred | x))
        stack.append((grown, (frontier | masks[xi]) & ~grown, barred))


def iwm_search_masks(g: Graph, time_budget: Optional[float] = None) -> set[int]:
    _check_input(g)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    found: set[int] = set()
    forced = 0
    for root in range(g.n):
        # every superset of a separator fails minimality, so once the
        # forced prefix separates, later roots cannot contribute
        if g.n - forced.bit_count() >= 2 and len(g.component_masks(forced)) >= 2:
            if is_iwm_mask(g, forced):
                found.add(forced)
            break
        _search_root(g, root, forced, found.add, deadline)
        forced |= 1 << root
    return found


def enumerate_iwm_search(g: Graph, time_budget: Optional[float] = None) -> SeparatorFamily:
    """Inclusion-wise minimal separators by direct branch-and-prune search.

    Roots are tried in id order; the search for root ``r`` covers the
    separators that avoid ``r`` and contain every smaller id.  Worst-case
    exponential (no output-polynomial algorithm exists unless P = NP), but
    it never walks the minimal separators, which is what makes pendant-heavy
    graphs tractable.
    """
    return SeparatorFamily.from_masks(iwm_search_masks(g, time_budget), "search")


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise BudgetExceededError(
            f"exhaustive search refused: n={g.n} exceeds the cap of {cap}"
        )


def _subsets_by_size(n: int):
    """All bitmasks over ``n`` bits, grouped by popcount (small first)."""
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        by_size[mask.bit_count()].append(mask)
    for group in by_size:
        yield from group


def _separates_pair(g: Graph, removed: int, a: int, b: int) -> bool:
    for comp in g.component_masks(removed):
        if comp >> a & 1:
            return not comp >> b & 1
    return True


def enumerate_minimal_separators_bruteforce(
    g: Graph, cap: int = DEFAULT_BRUTEFORCE_CAP
) -> SeparatorFamily:
    """Union over all pairs ``a, b`` of the minimal ``a``-``b`` separators.

    Every subset ``S`` is tested directly: for each pair of components of
    ``G - S`` pick representatives ``a, b`` and check that no ``S - {u}``
    still separates them.
    """
    _check_cap(g, cap)
    _check_input(g)
    out = []
    for mask in range(1, 1 << g.n):
        comps = g.component_masks(mask)
        if len(comps) < 2:
            continue
        reps = [c & -c for c in comps]
        reps = [r.bit_length() - 1 for r in reps]
        done = False
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                a, b = reps[i], reps[j]
                if all(not _separates_pair(g, mask & ~(1 << u), a, b) for u in bits(mask)):
                    out.append(mask)
                    done = True
                    break
            if done:
                break
    return SeparatorFamily.from_masks(out, "bruteforce")


def enumerate_iwm_bruteforce(g: Graph, cap: int = DEFAULT_BRUTEFORCE_CAP) -> SeparatorFamily:
    """Inclusion-wise minimal separators by a size-ordered subset sweep.

    A subset is kept iff ``G - S`` has two or more components and no
    previously kept set lies strictly inside it.
    """
    _check_cap(g, cap)
    _check_input(g)
    kept: list[int] = []
    for mask in _subsets_by_size(g.n):
        if any(k & mask == k for k in kept):
            continue
        if g.n - mask.bit_count() < 2:
            continue
        if len(g.component_masks(mask)) >= 2:
            kept.append(mask)
    return SeparatorFamily.from_masks(kept, "bruteforce")


def extract_inclusion_minimal(fam: SeparatorFamily) -> SeparatorFamily:
    """Members of ``fam`` with no proper subset in ``fam``; always an antichain."""
    kept: list[int] = []
    for s in fam.sets:  # already ordered by size
        mask = to_mask(s)
        if not any(k & mask == k and k != mask for k in kept):
            kept.append(mask)
    return SeparatorFamily.from_masks(kept, "filter")


def is_antichain(fam: SeparatorFamily) -> bool:
    masks = [to_mask(s) for s in fam.sets]
    return not any(
        p != q and p & q == p for p in masks for q in masks
    )
