import random

import pytest
from hypothesis import given, settings, strategies as st

from imsep.errors import BudgetExceededError, CnfFormatError, NormalizationError
from imsep.sat import (
    Cnf3,
    brute_force_sat,
    count_satisfying,
    enumerate_satisfying,
    format_assignment,
    full_polarity_clauses,
    is_normalized,
    is_traversable,
    normalize,
    parse_assignment,
    parse_dimacs_cnf,
    random_cnf3,
)

from oracles import models

FIG3_CLAUSES = ((-1, 2, -5), (-3, -4, 5))
# 32 assignments minus the 4 falsifying each clause (disjoint: x5 differs)
FIG3_MODEL_COUNT = 24


def test_parse_fig3(fig3):
    assert fig3 == Cnf3(5, FIG3_CLAUSES)
    assert is_normalized(fig3)
    assert normalize(fig3) == fig3


def test_parse_clause_over_lines_and_percent():
    f = parse_dimacs_cnf("c x\np cnf 3 2\n1 -2\n 3 0 -1 2 3 0\n%\n0\n")
    assert f.clauses == ((1, -2, 3), (-1, 2, 3))


@pytest.mark.parametrize(
    "text",
    [
        "p cnf 3 0\n",
        "1 2 3 0\n",
        "p cnf x 1\n1 2 3 0\n",
        "p dnf 3 1\n1 2 3 0\n",
        "p cnf 3 1\n1 2 4 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "p cnf 3 1\n1 a 3 0\n",
        "",
    ],
)
def test_parse_errors(text):
    with pytest.raises(CnfFormatError):
        parse_dimacs_cnf(text)


def test_repeated_variable_parses_but_fails_normalize():
    f = parse_dimacs_cnf("p cnf 2 1\n1 1 2 0\n")
    assert f.clauses == ((1, 1, 2),)
    with pytest.raises(NormalizationError, match="clause 1"):
        normalize(f)


def test_wrong_width_fails_normalize():
    with pytest.raises(NormalizationError):
        normalize(Cnf3(3, ((1, 2), (1, 2, 3))))


def test_normalize_pads_single_clause():
    f = normalize(Cnf3(3, ((1, -2, 3),)))
    assert f.clauses == ((1, -2, 3), (1, -2, 3))
    assert (brute_force_sat(f) is None) == (brute_force_sat(Cnf3(3, ((1, -2, 3),))) is None)


def test_normalize_drops_unused_variable():
    f = normalize(Cnf3(7, ((1, -2, 3), (-1, 7, 2))))
    assert f.num_vars == 4
    assert f.clauses == ((1, -2, 3), (-1, 4, 2))


def test_fig3_models(fig3):
    assert brute_force_sat(fig3) == (0, 0, 0, 0, 0)
    ms = enumerate_satisfying(fig3)
    assert len(ms) == FIG3_MODEL_COUNT == count_satisfying(fig3)
    assert set(ms) == set(models(5, FIG3_CLAUSES))


def test_full_polarity_unsat():
    f = Cnf3(3, tuple(full_polarity_clauses()))
    assert brute_force_sat(f) is None
    assert enumerate_satisfying(f) == []


def test_duplicated_clause_sat():
    assert brute_force_sat(Cnf3(3, ((1, 2, 3), (1, 2, 3)))) is not None


def test_var_cap():
    f = Cnf3(30, ((1, 2, 30), (3, 4, 5)))
    with pytest.raises(BudgetExceededError):
        brute_force_sat(f)
    with pytest.raises(BudgetExceededError):
        enumerate_satisfying(Cnf3(5, FIG3_CLAUSES), cap=4)


def test_traversable_paper_example():
    i = (0, 1, 1, 1, 1)
    assert is_traversable(FIG3_CLAUSES[0], i)
    assert not is_traversable(FIG3_CLAUSES[1], i)
    for bits in range(8):
        i = tuple((bits >> k) & 1 for k in range(3))
        assert not is_traversable((1, 2, 3), i)


def test_traversable_implies_satisfied():
    rng = random.Random(3)
    for _ in range(2000):
        vs = rng.sample(range(1, 7), 3)
        clause = tuple(v if rng.random() < 0.5 else -v for v in vs)
        i = tuple(rng.randint(0, 1) for _ in range(6))
        if is_traversable(clause, i):
            assert Cnf3(6, (clause,)).satisfied_by(i)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_oracle_matches_enumeration(seed):
    rng = random.Random(seed)
    f = random_cnf3(rng.randint(3, 7), rng.randint(1, 9), rng)
    expected = set(models(f.num_vars, f.clauses))
    assert set(enumerate_satisfying(f)) == expected
    assert (brute_force_sat(f) is None) == (not expected)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_normalize_preserves_satisfiability(seed):
    rng = random.Random(seed)
    nv = rng.randint(3, 8)
    clauses = []
    for _ in range(rng.randint(1, 6)):
        vs = rng.sample(range(1, nv + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    raw = Cnf3(nv, tuple(clauses))
    f = normalize(raw)
    assert is_normalized(f)
    assert bool(models(raw.num_vars, raw.clauses)) == bool(models(f.num_vars, f.clauses))


def test_assignment_lines():
    line = format_assignment((0, 1, 1))
    assert line == "v -1 2 3 0"
    assert parse_assignment(line) == (0, 1, 1)
    with pytest.raises(CnfFormatError):
        parse_assignment("v 1 1 0")


def test_dimacs_round_trip(fig3):
    assert parse_dimacs_cnf(fig3.to_dimacs()) == fig3
    assert str(fig3) == "(~x1 | x2 | ~x5) & (~x3 | ~x4 | x5)"
