"""Exact treedepth of small graphs by the vertex-elimination recursion.

    td(empty) = 0
    td(G)     = max over components, if G is disconnected
    td(G)     = 1 + min over v of td(G - v), if G is connected

Subproblems are memoised on the bitmask of the surviving vertex set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import Graph, bits

DEFAULT_CAP = 14


@dataclass(frozen=True)
class TreedepthResult:
    """Treedepth and the elimination choices achieving it.

    ``witness`` lists ``(root, component)`` pairs: ``root`` is removed first
    from the connected vertex set ``component``.  Parents precede children.
    """

    depth: int
    witness: tuple[tuple[int, tuple[int, ...]], ...]

    def parents(self) -> dict[int, int | None]:
        """Elimination forest as a child -> parent map (roots map to ``None``)."""
        owner = {}
        out: dict[int, int | None] = {}
        for root, comp in self.witness:
            out[root] = owner.get(root)
            for v in comp:
                if v != root:
                    owner[v] = root
        return out


def treedepth_bruteforce(g: Graph, cap: int = DEFAULT_CAP) -> TreedepthResult:
    if g.n > cap:
        raise BudgetExceededError(f"treedepth recursion refused: n={g.n} exceeds the cap of {cap}")
    full = g.full_mask
    memo: dict[int, int] = {}
    choice: dict[int, int] = {}

    def comps(mask: int) -> list[int]:
        return g.component_masks(full & ~mask)

    def td(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        parts = comps(mask)
        if len(parts) > 1:
            best = max(td(p) for p in parts)
        else:
            best = None
            for v in bits(mask):
                d = 1 + td(mask & ~(1 << v))
                if best is None or d < best:
                    best, choice[mask] = d, v
        memo[mask] = best
        return best

    depth = td(full)
    witness = []
    todo = comps(full)
    while todo:
        comp = todo.pop(0)
        v = choice[comp]
        witness.append((v, tuple(bits(comp))))
        todo.extend(comps(comp & ~(1 << v)))
    return TreedepthResult(depth, tuple(witness))


def replay_witness(g: Graph, result: TreedepthResult) -> int:
    """Recompute the depth implied by a witness, checking it is a valid elimination.

    Raises ``ValueError`` if the witness does not cover ``g`` consistently.
    """
    full = g.full_mask
    by_comp = {sum(1 << v for v in comp): root for root, comp in result.witness}

    def height(comp: int) -> int:
        if comp not in by_comp:
            raise ValueError(f"witness has no entry for component {sorted(bits(comp))}")
        root = by_comp[comp]
        if not comp >> root & 1:
            raise ValueError(f"root {root} outside its component")
        rest = comp & ~(1 << root)
        sub = g.component_masks(full & ~rest)
        return 1 + max((height(c) for c in sub), default=0)

    return max((height(c) for c in g.component_masks()), default=0)
