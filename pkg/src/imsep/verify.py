"""Empirical checks of the 3-SAT reduction and of the minimal/inclusion-wise gap.

Each check builds the gadget of one formula, computes its inclusion-wise
minimal separators and compares them against an exhaustive SAT oracle.
Budget overruns produce *inconclusive* reports; they are never folded into
a pass or a fail.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .errors import BudgetExceededError, ContradictionError
from .gadgets import (
    GadgetLabels,
    assignment_to_separator,
    contains_conflicting_pair,
    melon_with_pendants,
    sat_to_graph,
    separator_to_assignment,
    traversable_clauses,
)
from .graph import Graph, format_edge_list, is_ab_separator, is_inclusion_wise_minimal_separator
from .sat import (
    Cnf3,
    brute_force_sat,
    enumerate_satisfying,
    full_polarity_clauses,
    normalize,
    random_cnf3,
)
from .separators import (
    DEFAULT_MAX_SEPARATORS,
    SeparatorFamily,
    enumerate_iwm_bruteforce,
    enumerate_iwm_filter,
    enumerate_iwm_search,
    enumerate_minimal_separators,
)

LARGE = 4
VERIFY_METHODS = ("search", "filter", "bruteforce")


def iwm_family(
    g: Graph,
    method: str = "search",
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> SeparatorFamily:
    if method == "search":
        return enumerate_iwm_search(g, time_budget)
    if method == "filter":
        return enumerate_iwm_filter(g, max_separators, time_budget)
    if method == "bruteforce":
        return enumerate_iwm_bruteforce(g)
    raise ValueError(f"unknown method {method!r}; expected one of {VERIFY_METHODS}")


def _dump(g: Graph, labels: GadgetLabels, s, reason: str) -> dict:
    return {
        "reason": reason,
        "separator": sorted(s),
        "roles": sorted(labels.role(v) for v in s),
        "graph": format_edge_list(g),
        "labels": labels.names(),
    }


@dataclass
class EquivalenceReport:
    formula_id: str
    method: str
    num_vars: int
    num_clauses: int
    num_vertices: int
    status: str = "ok"  # "ok" | "inconclusive"
    satisfiable: Optional[bool] = None
    max_iwm_size: Optional[int] = None
    iwm_count: Optional[int] = None
    has_large_iwm: Optional[bool] = None
    equivalent: Optional[bool] = None
    witness: Optional[dict] = None
    detail: str = ""
    timings: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == "ok" and not self.equivalent

    def to_dict(self, timings: bool = False) -> dict:
        doc = asdict(self)
        if not timings:
            doc.pop("timings")
        return doc


def check_hardness_equivalence(
    f: Cnf3,
    method: str = "search",
    formula_id: str = "formula",
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
    family: Optional[SeparatorFamily] = None,
) -> EquivalenceReport:
    """Compare "satisfiable" with "the gadget has an inclusion-wise minimal separator of size >= 4"."""
    f = normalize(f)
    t0 = time.perf_counter()
    g, labels = sat_to_graph(f)
    t1 = time.perf_counter()
    report = EquivalenceReport(formula_id, method, f.num_vars, f.num_clauses, g.n)
    if family is None:
        try:
            family = iwm_family(g, method, max_separators, time_budget)
        except BudgetExceededError as exc:
            report.status = "inconclusive"
            report.detail = str(exc)
            report.satisfiable = brute_force_sat(f) is not None
            return report
    t2 = time.perf_counter()
    model = brute_force_sat(f)
    t3 = time.perf_counter()
    report.satisfiable = model is not None
    report.iwm_count = len(family)
    report.max_iwm_size = family.max_size()
    report.has_large_iwm = report.max_iwm_size >= LARGE
    report.equivalent = report.satisfiable == report.has_large_iwm
    if model is not None:
        sep = assignment_to_separator(f, labels, model)
        report.witness = {
            "assignment": list(model),
            "separator": sorted(sep),
            "in_family": sep in family,
        }
        if sep not in family:
            report.equivalent = False
            report.detail = "constructed witness missing from the enumerated family"
    report.timings = {"build": t1 - t0, "enumerate": t2 - t1, "sat": t3 - t2}
    return report


@dataclass
class LemmaReport:
    formula_id: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    # separator-to-assignment reading conventions that produced models
    u_convention_ok: int = 0
    w_convention_ok: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        doc = asdict(self)
        doc["ok"] = self.ok
        return doc


def check_lemma1(
    f: Cnf3,
    family: Optional[SeparatorFamily] = None,
    method: str = "search",
    formula_id: str = "formula",
) -> LemmaReport:
    """Audit every inclusion-wise minimal separator of size >= 4 of the gadget.

    Each must avoid ``a``, ``b``, middle, connector and pendant vertices,
    separate ``a`` from ``b``, hit every clause path in exactly one endpoint,
    contain no conflicting pair, and decode (``u`` means true) to a model.
    """
    f = normalize(f)
    g, labels = sat_to_graph(f)
    if family is None:
        family = iwm_family(g, method)
    report = LemmaReport(formula_id)
    cand = labels.candidates()
    for s in family:
        if len(s) < LARGE:
            continue
        report.checked += 1
        s = frozenset(s)
        problems = []
        if not s <= cand:
            problems.append("uses a vertex outside the c/u/w candidates")
        if labels.a in s or labels.b in s or not is_ab_separator(g, s, labels.a, labels.b):
            problems.append("does not separate a from b")
        if contains_conflicting_pair(labels, s):
            problems.append("contains a conflicting pair")
        for key in labels.u:
            hits = (labels.u[key] in s) + (labels.w[key] in s)
            if hits != 1 or labels.v[key] in s:
                problems.append(f"path {key} not hit in exactly one endpoint")
                break
        try:
            model = separator_to_assignment(f, labels, s, g, check=False)
            if f.satisfied_by(model):
                report.u_convention_ok += 1
            else:
                problems.append("decoded assignment does not satisfy the formula")
            if f.satisfied_by(separator_to_assignment(f, labels, s, g, "w", check=False)):
                report.w_convention_ok += 1
        except ContradictionError as exc:
            problems.append(str(exc))
        if problems:
            report.counterexamples.append(_dump(g, labels, s, "; ".join(problems)))
    return report


def check_lemma2(
    f: Cnf3,
    family: Optional[SeparatorFamily] = None,
    formula_id: str = "formula",
) -> LemmaReport:
    """Every model's ``T(I) | F(I) | {c_j : j traversable}`` must be a large inclusion-wise minimal separator.

    When ``family`` is given, each constructed set must also be a member.
    """
    f = normalize(f)
    g, labels = sat_to_graph(f)
    report = LemmaReport(formula_id)
    for model in enumerate_satisfying(f):
        report.checked += 1
        s = assignment_to_separator(f, labels, model)
        problems = []
        expected = 3 * f.num_clauses + len(traversable_clauses(f, model))
        if len(s) != expected or len(s) < LARGE:
            problems.append(f"size {len(s)}, expected {expected} (>= {LARGE})")
        if not is_inclusion_wise_minimal_separator(g, s):
            problems.append("not an inclusion-wise minimal separator")
        if not is_ab_separator(g, s, labels.a, labels.b):
            problems.append("does not separate a from b")
        if family is not None and s not in family:
            problems.append("missing from the enumerated family")
        if problems:
            dump = _dump(g, labels, s, "; ".join(problems))
            dump["assignment"] = list(model)
            report.counterexamples.append(dump)
    return report


@dataclass
class GapReport:
    n: int
    minimal_count: int
    iwm_count: int
    ok: bool

    def to_dict(self) -> dict:
        return asdict(self)


def gap_report(
    n: int,
    max_n: int = 4,
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> GapReport:
    """Minimal vs inclusion-wise minimal separator counts of the pendant melon.

    ``ok`` requires at least ``3**n`` minimal separators and exactly
    ``3n + 2`` inclusion-wise minimal ones.
    """
    if n > max_n:
        raise BudgetExceededError(f"gap report limited to n <= {max_n}")
    g, _ = melon_with_pendants(n)
    minimal = enumerate_minimal_separators(g, max_separators, time_budget)
    iwm = enumerate_iwm_filter(g, max_separators, time_budget)
    return GapReport(n, len(minimal), len(iwm), len(minimal) >= 3**n and len(iwm) == 3 * n + 2)


def full_polarity_pairs() -> list[tuple[str, Cnf3]]:
    """All 64 ordered two-clause formulas over the eight sign patterns of ``x1, x2, x3``."""
    cl = full_polarity_clauses()
    return [(f"pair-{p}-{q}", Cnf3(3, (cl[p], cl[q]))) for p in range(8) for q in range(8)]


def random_suite(count: int, max_vars: int = 6, max_clauses: int = 4, seed: int = 0) -> list[tuple[str, Cnf3]]:
    """Seeded random 3-CNF formulas with 3..max_vars variables and 2..max_clauses clauses."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        nv = rng.randint(3, max_vars)
        m = rng.randint(2, max_clauses)
        out.append((f"random-s{seed}-{k}", random_cnf3(nv, m, rng)))
    return out


def random_unsat_suite(
    count: int, max_vars: int = 4, clause_range: tuple[int, int] = (8, 12), seed: int = 0
) -> list[tuple[str, Cnf3]]:
    """Seeded unsatisfiable formulas, found by rejection sampling.

    Below eight clauses a 3-CNF is always satisfiable, so these need more
    clauses than :func:`random_suite` produces.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = random_cnf3(rng.randint(3, max_vars), rng.randint(*clause_range), rng)
        if brute_force_sat(f) is None:
            out.append((f"unsat-s{seed}-{len(out)}", f))
    return out


@dataclass
class FormulaVerdict:
    equivalence: EquivalenceReport
    lemma1: Optional[LemmaReport]
    lemma2: Optional[LemmaReport]

    @property
    def failed(self) -> bool:
        lemmas = [r for r in (self.lemma1, self.lemma2) if r is not None]
        return self.equivalence.failed or any(not r.ok for r in lemmas)

    @property
    def inconclusive(self) -> bool:
        return self.equivalence.status == "inconclusive"

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "equivalence": self.equivalence.to_dict(timings),
            "lemma1": None if self.lemma1 is None else self.lemma1.to_dict(),
            "lemma2": None if self.lemma2 is None else self.lemma2.to_dict(),
        }


def verify_formula(
    formula_id: str,
    f: Cnf3,
    method: str = "search",
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
) -> FormulaVerdict:
    """Equivalence plus both lemma checks, sharing one enumeration."""
    f = normalize(f)
    g, _ = sat_to_graph(f)
    try:
        family = iwm_family(g, method, max_separators, time_budget)
    except BudgetExceededError as exc:
        rep = EquivalenceReport(formula_id, method, f.num_vars, f.num_clauses, g.n, status="inconclusive")
        rep.detail = str(exc)
        rep.satisfiable = brute_force_sat(f) is not None
        return FormulaVerdict(rep, None, None)
    rep = check_hardness_equivalence(f, method, formula_id, family=family)
    return FormulaVerdict(
        rep,
        check_lemma1(f, family, formula_id=formula_id),
        check_lemma2(f, family, formula_id=formula_id),
    )


def _verify_job(args):
    return verify_formula(*args)


def verify_many(
    formulas: Sequence[tuple[str, Cnf3]],
    method: str = "search",
    max_separators: int = DEFAULT_MAX_SEPARATORS,
    time_budget: Optional[float] = None,
    workers: int = 1,
) -> list[FormulaVerdict]:
    """Verify formulas independently; results come back in input order."""
    jobs = [(fid, f, method, max_separators, time_budget) for fid, f in formulas]
    if workers <= 1:
        return [_verify_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_job, jobs))


def summary_table(verdicts: Sequence[FormulaVerdict]) -> str:
    rows = [f"{'formula':<20} {'n':>3} {'m':>3} {'|V|':>5} {'sat':>5} {'max':>4} {'equiv':>6} {'L1':>4} {'L2':>4}"]
    for v in verdicts:
        e = v.equivalence
        l1 = "-" if v.lemma1 is None else ("ok" if v.lemma1.ok else "FAIL")
        l2 = "-" if v.lemma2 is None else ("ok" if v.lemma2.ok else "FAIL")
        eq = "?" if e.status == "inconclusive" else str(e.equivalent).lower()
        rows.append(
            f"{e.formula_id:<20} {e.num_vars:>3} {e.num_clauses:>3} {e.num_vertices:>5} "
            f"{str(e.satisfiable).lower():>5} {str(e.max_iwm_size):>4} {eq:>6} {l1:>4} {l2:>4}"
        )
    failed = sum(v.failed for v in verdicts)
    inconclusive = sum(v.inconclusive for v in verdicts)
    rows.append(f"total {len(verdicts)}, failed {failed}, inconclusive {inconclusive}")
    return "\n".join(rows)
