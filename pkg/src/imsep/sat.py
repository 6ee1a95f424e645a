"""3-CNF formulas: DIMACS I/O, normalisation and an exhaustive oracle.

Literals are DIMACS-style signed integers: ``k`` is the variable ``x_k`` and
``-k`` its negation.  An assignment is a tuple of 0/1 values where
``assignment[k - 1]`` is the value of ``x_k``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceededError, CnfFormatError, NormalizationError

DEFAULT_VAR_CAP = 24

Clause = tuple[int, ...]
Assignment = tuple[int, ...]


def var(literal: int) -> int:
    return abs(literal)


def is_negative(literal: int) -> bool:
    return literal < 0


def literal_value(literal: int, assignment: Sequence[int]) -> int:
    value = assignment[abs(literal) - 1]
    return 1 - value if literal < 0 else value


@dataclass(frozen=True)
class Cnf3:
    """A CNF formula over variables ``1..num_vars``.

    Parsed formulas may hold clauses of any width; :func:`normalize` enforces
    the shape the reduction needs.
    """

    num_vars: int
    clauses: tuple[Clause, ...]

    @classmethod
    def of(cls, clauses, num_vars: Optional[int] = None) -> "Cnf3":
        clauses = tuple(tuple(c) for c in clauses)
        if num_vars is None:
            num_vars = max((abs(l) for c in clauses for l in c), default=0)
        return cls(num_vars, clauses)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[int]) -> bool:
        return all(any(literal_value(l, assignment) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        def lit(l):
            return f"~x{-l}" if l < 0 else f"x{l}"

        return " & ".join("(" + " | ".join(map(lit, c)) + ")" for c in self.clauses)


def parse_dimacs_cnf(text: str) -> Cnf3:
    """Parse DIMACS CNF text.  Clause widths are not checked here."""
    header = None
    clauses: list[Clause] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise CnfFormatError(f"line {lineno}: malformed header {raw!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise CnfFormatError(f"line {lineno}: malformed header {raw!r}") from None
            continue
        if header is None:
            raise CnfFormatError(f"line {lineno}: clause before the 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > header[0]:
                raise CnfFormatError(f"line {lineno}: variable {abs(lit)} exceeds header count {header[0]}")
            else:
                current.append(lit)
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if not clauses:
        raise CnfFormatError("formula has no clauses")
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return Cnf3(header[0], tuple(clauses))


def read_dimacs_cnf(path) -> Cnf3:
    with open(path) as fh:
        return parse_dimacs_cnf(fh.read())


def is_normalized(f: Cnf3) -> bool:
    if f.num_clauses < 2:
        return False
    used = set()
    for c in f.clauses:
        vs = {abs(l) for l in c}
        if len(c) != 3 or len(vs) != 3 or 0 in vs:
            return False
        used |= vs
    return used == set(range(1, f.num_vars + 1))


def normalize(f: Cnf3) -> Cnf3:
    """Bring ``f`` into reduction-ready shape.

    Every clause must have three literals over three distinct variables
    (violations raise :class:`NormalizationError`).  Unused variables are
    dropped and the rest renumbered in order of first index; a lone clause
    is duplicated so that there are at least two.
    """
    if not f.clauses:
        raise NormalizationError("formula has no clauses")
    for j, c in enumerate(f.clauses, 1):
        if len(c) != 3:
            raise NormalizationError(f"clause {j} {c} has {len(c)} literals, expected 3")
        if len({abs(l) for l in c}) != 3:
            raise NormalizationError(f"clause {j} {c} repeats a variable")
    used = sorted({abs(l) for c in f.clauses for l in c})
    renumber = {v: k for k, v in enumerate(used, 1)}
    clauses = tuple(tuple(renumber[abs(l)] * (-1 if l < 0 else 1) for l in c) for c in f.clauses)
    if len(clauses) == 1:
        clauses = clauses * 2
    return Cnf3(len(used), clauses)


def _model_mask(f: Cnf3, cap: int) -> np.ndarray:
    if f.num_vars > cap:
        raise BudgetExceededError(f"exhaustive search refused: {f.num_vars} variables exceed the cap of {cap}")
    idx = np.arange(1 << f.num_vars, dtype=np.uint32)
    values = [((idx >> k) & 1).astype(bool) for k in range(f.num_vars)]
    ok = np.ones(idx.shape, dtype=bool)
    for c in f.clauses:
        sat = np.zeros(idx.shape, dtype=bool)
        for l in c:
            sat |= ~values[-l - 1] if l < 0 else values[l - 1]
        ok &= sat
    return ok


def _decode(index: int, num_vars: int) -> Assignment:
    return tuple((index >> k) & 1 for k in range(num_vars))


def brute_force_sat(f: Cnf3, cap: int = DEFAULT_VAR_CAP) -> Optional[Assignment]:
    """Some satisfying assignment of ``f``, or ``None`` if there is none.

    The sweep visits assignments in binary order with ``x_1`` as the least
    significant bit, so the all-zero assignment is tried first.
    """
    hits = np.flatnonzero(_model_mask(f, cap))
    return _decode(int(hits[0]), f.num_vars) if hits.size else None


def enumerate_satisfying(f: Cnf3, cap: int = DEFAULT_VAR_CAP) -> list[Assignment]:
    return [_decode(int(i), f.num_vars) for i in np.flatnonzero(_model_mask(f, cap))]


def count_satisfying(f: Cnf3, cap: int = DEFAULT_VAR_CAP) -> int:
    return int(np.count_nonzero(_model_mask(f, cap)))


def is_traversable(clause: Clause, assignment: Sequence[int]) -> bool:
    """True iff the clause is satisfied through both a negative and a positive literal."""
    neg = any(l < 0 and assignment[-l - 1] == 0 for l in clause)
    pos = any(l > 0 and assignment[l - 1] == 1 for l in clause)
    return neg and pos


def format_assignment(assignment: Sequence[int]) -> str:
    """SAT-competition ``v`` line, e.g. ``v -1 2 3 0``."""
    lits = [str(k if val else -k) for k, val in enumerate(assignment, 1)]
    return "v " + " ".join(lits + ["0"])


def parse_assignment(line: str) -> Assignment:
    toks = line.split()
    if not toks or toks[0] != "v" or toks[-1] != "0":
        raise CnfFormatError(f"malformed assignment line {line!r}")
    lits = [int(t) for t in toks[1:-1]]
    if sorted(abs(l) for l in lits) != list(range(1, len(lits) + 1)):
        raise CnfFormatError("assignment must mention each variable exactly once")
    out = [0] * len(lits)
    for l in lits:
        out[abs(l) - 1] = int(l > 0)
    return tuple(out)


def random_cnf3(num_vars: int, num_clauses: int, rng: random.Random) -> Cnf3:
    """Random 3-CNF with three distinct variables per clause, normalised."""
    if num_vars < 3:
        raise NormalizationError("need at least three variables for a 3-CNF clause")
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return normalize(Cnf3(num_vars, tuple(clauses)))


def full_polarity_clauses(variables=(1, 2, 3)) -> list[Clause]:
    """The eight clauses over three variables, one per sign pattern."""
    x, y, z = variables
    return [
        (sx * x, sy * y, sz * z)
        for sx in (1, -1)
        for sy in (1, -1)
        for sz in (1, -1)
    ]
