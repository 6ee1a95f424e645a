"""Graph families: banner, melon, pendant augmentation and the 3-SAT gadget.

Every constructor returns the graph together with a role map so that tests
and reports can talk about ``a``, ``u.2.1`` or ``c.1`` instead of raw ids.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import ContradictionError, InvalidArgumentError, NormalizationError
from .graph import Graph, is_inclusion_wise_minimal_separator, to_mask
from .sat import Cnf3, is_normalized, is_traversable, var


def banner() -> tuple[Graph, dict[str, int]]:
    """The 4-cycle ``a-b-c-d`` with a pendant ``e`` on ``d``."""
    names = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4}
    a, b, c, d, e = range(5)
    return Graph(5, [(a, b), (b, c), (c, d), (d, a), (d, e)]), names


def melon(n: int) -> tuple[Graph, dict[str, int]]:
    """Hubs ``a`` and ``b`` joined by ``n`` internally disjoint paths ``u_i v_i w_i``.

    Layout: ``a = 0``, ``b = 1``, then ``u_i, v_i, w_i`` at ``2 + 3(i-1) + {0,1,2}``.
    """
    if n < 1:
        raise InvalidArgumentError("a melon needs at least one path")
    names = {"a": 0, "b": 1}
    edges = []
    for i in range(1, n + 1):
        u, v, w = (2 + 3 * (i - 1) + k for k in range(3))
        names[f"u.{i}"], names[f"v.{i}"], names[f"w.{i}"] = u, v, w
        edges += [(0, u), (u, v), (v, w), (w, 1)]
    return Graph(3 * n + 2, edges), names


def melon_cross_product(n: int, names: dict[str, int]):
    """The ``3**n`` sets picking one of ``u_i, v_i, w_i`` per path."""
    from itertools import product

    choices = [[names[f"{r}.{i}"] for r in "uvw"] for i in range(1, n + 1)]
    for pick in product(*choices):
        yield frozenset(pick)


def add_pendants(g: Graph, targets: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Attach one new degree-1 vertex to each target.

    New ids follow the existing ones, in increasing target order.
    """
    hosts = sorted(set(targets))
    g.mask_of(hosts)
    pendants = {h: g.n + k for k, h in enumerate(hosts)}
    edges = g.edges() + [(h, z) for h, z in pendants.items()]
    return Graph(g.n + len(hosts), edges), pendants


def melon_with_pendants(n: int) -> tuple[Graph, dict[str, int]]:
    """Melon with a pendant on every original vertex; pendants named ``z.of.<host>``."""
    g, names = melon(n)
    h, pendants = add_pendants(g, range(g.n))
    by_id = {v: k for k, v in names.items()}
    out = dict(names)
    for host, z in pendants.items():
        out[f"z.of.{by_id[host]}"] = z
    return h, out


@dataclass
class GadgetLabels:
    """Role map of the 3-SAT reduction graph.

    ``u``, ``v``, ``w`` are keyed by ``(i, j)``: literal position ``i`` in
    ``1..3`` of clause ``j`` in ``1..m``.  Each connector is a triple
    ``(y, u_id, w_id)``; ``pendants`` maps host vertex to its pendant.
    """

    a: int
    b: int
    u: dict[tuple[int, int], int]
    v: dict[tuple[int, int], int]
    w: dict[tuple[int, int], int]
    c: dict[int, int]
    connectors: list[tuple[int, int, int]]
    pendants: dict[int, int]
    literal: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return len(self.c)

    @property
    def n_vertices(self) -> int:
        return 2 + 10 * self.m + 2 * len(self.connectors) + 2 + 3 * self.m

    def v1(self) -> frozenset[int]:
        return frozenset([*self.u.values(), *self.v.values(), *self.w.values(), *self.c.values()])

    def v2(self) -> frozenset[int]:
        return frozenset(y for y, _, _ in self.connectors)

    def v3(self) -> frozenset[int]:
        return frozenset(self.pendants.values())

    def candidates(self) -> frozenset[int]:
        """The vertices a large inclusion-wise minimal separator may use: all ``c``, ``u``, ``w``."""
        return frozenset([*self.u.values(), *self.w.values(), *self.c.values()])

    def names(self) -> dict[str, int]:
        out = {"a": self.a, "b": self.b}
        for j in range(1, self.m + 1):
            for i in (1, 2, 3):
                for role, table in (("u", self.u), ("v", self.v), ("w", self.w)):
                    out[f"{role}.{i}.{j}"] = table[i, j]
            out[f"c.{j}"] = self.c[j]
        for k, (y, _, _) in enumerate(self.connectors, 1):
            out[f"y.{k}"] = y
        role = {v: k for k, v in out.items()}
        for host, z in self.pendants.items():
            out[f"z.of.{role[host]}"] = z
        return out

    def role(self, vertex: int) -> str:
        for name, v in self.names().items():
            if v == vertex:
                return name
        raise KeyError(vertex)

    def to_json(self) -> str:
        return json.dumps(self.names(), sort_keys=True)


def conflicting_pairs(f: Cnf3) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Ordered ``((i, j), (i', j'))`` pairs: ``u_i^j`` vs ``w_i'^j'`` over one variable, ``j != j'``."""
    occ = [((i, j), var(lit)) for j, clause in enumerate(f.clauses, 1) for i, lit in enumerate(clause, 1)]
    return [
        (p, q)
        for p, x in occ
        for q, y in occ
        if x == y and p[1] != q[1]
    ]


def sat_to_graph(f: Cnf3) -> tuple[Graph, GadgetLabels]:
    """Build the reduction graph of a normalised 3-CNF formula.

    Layout: ``a = 0``, ``b = 1``; clause ``j`` occupies ten consecutive ids
    ``u1 v1 w1 u2 v2 w2 u3 v3 w3 c``; then one connector per conflicting
    pair; then the pendants of ``a``, ``b``, the middle vertices (clause
    order) and the connectors.
    """
    if not is_normalized(f):
        raise NormalizationError("sat_to_graph needs a normalised formula; call normalize() first")
    a, b = 0, 1
    u, v, w, c, literal = {}, {}, {}, {}, {}
    edges = []
    nxt = 2
    for j, clause in enumerate(f.clauses, 1):
        for i, lit in enumerate(clause, 1):
            u[i, j], v[i, j], w[i, j] = nxt, nxt + 1, nxt + 2
            literal[i, j] = lit
            nxt += 3
            edges += [(a, u[i, j]), (u[i, j], v[i, j]), (v[i, j], w[i, j]), (w[i, j], b)]
        c[j] = nxt
        nxt += 1
        for i, lit in enumerate(clause, 1):
            edges.append((c[j], u[i, j] if lit < 0 else w[i, j]))
    connectors = []
    for p, q in conflicting_pairs(f):
        y = nxt
        nxt += 1
        connectors.append((y, u[p], w[q]))
        edges += [(y, u[p]), (y, w[q])]
    hosts = [a, b] + [v[i, j] for j in range(1, len(f.clauses) + 1) for i in (1, 2, 3)]
    hosts += [y for y, _, _ in connectors]
    pendants = {}
    for h in hosts:
        pendants[h] = nxt
        edges.append((h, nxt))
        nxt += 1
    labels = GadgetLabels(a, b, u, v, w, c, connectors, pendants, literal)
    return Graph(nxt, edges), labels


def assignment_to_separator(f: Cnf3, labels: GadgetLabels, assignment: Sequence[int]) -> frozenset[int]:
    """The separator ``T(I) | F(I) | {c_j : C_j traversable}`` of a model ``I``.

    ``u_i^j`` is taken when the literal's variable is true, ``w_i^j`` when it
    is false, and ``c_j`` when clause ``j`` is satisfied through both a
    positive and a negative literal.
    """
    if len(assignment) != f.num_vars:
        raise InvalidArgumentError(f"assignment has {len(assignment)} values for {f.num_vars} variables")
    if not f.satisfied_by(assignment):
        raise InvalidArgumentError("assignment does not satisfy the formula")
    out = set()
    for (i, j), lit in labels.literal.items():
        out.add(labels.u[i, j] if assignment[var(lit) - 1] == 1 else labels.w[i, j])
    for j, clause in enumerate(f.clauses, 1):
        if is_traversable(clause, assignment):
            out.add(labels.c[j])
    return frozenset(out)


def traversable_clauses(f: Cnf3, assignment: Sequence[int]) -> list[int]:
    return [j for j, clause in enumerate(f.clauses, 1) if is_traversable(clause, assignment)]


def separator_to_assignment(
    f: Cnf3,
    labels: GadgetLabels,
    s: Iterable[int],
    g: Optional[Graph] = None,
    convention: str = "u",
    check: bool = True,
) -> tuple[int, ...]:
    """Read a truth assignment off a large inclusion-wise minimal separator.

    With ``convention="u"`` a variable is true iff some ``u`` vertex of one of
    its occurrences is in ``s``.  ``convention="w"`` is the mirrored reading
    (true iff some ``w`` vertex is selected), kept for empirical comparison.

    Raises :class:`ContradictionError` if ``s`` selects a ``u`` and a ``w``
    vertex over the same variable.
    """
    if convention not in ("u", "w"):
        raise InvalidArgumentError(f"unknown convention {convention!r}")
    s = frozenset(s)
    if check:
        if g is None:
            g, _ = sat_to_graph(f)
        if len(s) < 4:
            raise InvalidArgumentError(f"separator has size {len(s)}, need at least 4")
        if not is_inclusion_wise_minimal_separator(g, s):
            raise InvalidArgumentError("set is not an inclusion-wise minimal separator of the gadget")
    via_u: set[int] = set()
    via_w: set[int] = set()
    for (i, j), lit in labels.literal.items():
        if labels.u[i, j] in s:
            via_u.add(var(lit))
        if labels.w[i, j] in s:
            via_w.add(var(lit))
    clash = via_u & via_w
    if clash:
        raise ContradictionError(f"variables {sorted(clash)} selected with both polarities")
    true_set = via_u if convention == "u" else via_w
    return tuple(int(x in true_set) for x in range(1, f.num_vars + 1))


def contains_conflicting_pair(labels: GadgetLabels, s: Iterable[int]) -> bool:
    s = frozenset(s)
    mask = to_mask(s)
    for (i, j), lit in labels.literal.items():
        if not mask >> labels.u[i, j] & 1:
            continue
        for (i2, j2), lit2 in labels.literal.items():
            if var(lit2) == var(lit) and mask >> labels.w[i2, j2] & 1:
                return True
    return False
