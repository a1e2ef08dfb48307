"""Acceptance gate: every top-level guarantee at its stated scale.

Each test prints one pass/fail line; run with ``pytest -s`` to see them all.
Budgets are wall-clock upper bounds for the criteria that state one.
"""

import time
from contextlib import contextmanager

from unitprop.circuit import Circuit, gate
from unitprop.cnf import CnfFormula, propagate_staged, propagate_standard
from unitprop.propagator import Filtering, FunctionTable, Matching, Propagator, tabulate
from unitprop.reify import reify
from unitprop.translate import circuit_to_propagator, extract_circuit
from unitprop.verify import boolean_representation, check_monotone, run_suite

SEED = 20260810

fs = frozenset


@contextmanager
def criterion(number, name, budget=None):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion-{number:02d} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - started
    if budget is not None:
        assert elapsed < budget, f"criterion-{number:02d} took {elapsed:.2f}s (budget {budget}s)"
    print(f"criterion-{number:02d} {name}: PASS ({elapsed:.2f}s)")


def run_clean(suite, count):
    records = list(run_suite(suite, seed=SEED, count=count))
    assert len(records) == count
    failing = [r.line() for r in records if not r.passed]
    assert not failing, "\n".join(failing[:5])


def test_criterion_01_worked_example_goldens():
    with criterion(1, "worked-example-goldens", budget=1.0):
        # (a) production trace of (a or -b) and (b) and (-a or c or -d)
        chain = CnfFormula([[1, -2], [2], [-1, 3, -4]])
        staged = propagate_staged(chain)
        assert staged.outcome == {2, 1}
        assert staged.stage(1) == {2}
        assert staged.stage(2) == {1}
        assert propagate_standard(chain).outcome == {2, 1}

        # (b) the full mirror of (a) and (-a or b), by clause group
        mirrored = reify(CnfFormula([[1], [-1, 2]]))
        d = mirrored.index.delta_id
        groups = {
            "init": {clause for role, clause in mirrored.emissions if role.kind == "init"},
            "prop": {clause for role, clause in mirrored.emissions if role.kind == "prop"},
            "ded": {clause for role, clause in mirrored.emissions if role.kind == "ded"},
        }
        assert groups["init"] == {fs({d(1, 0)}), fs({-d(1, 0), d(1, 1)})}
        assert groups["prop"] == {fs({-d(w, i - 1), d(w, i)})
                                  for i in (2, 3) for w in (1, -1, 2, -2)}
        assert groups["ded"] == {
            fs({-d(1, 1), d(2, 2)}), fs({-d(-2, 1), d(-1, 2)}),
            fs({-d(1, 2), d(2, 3)}), fs({-d(-2, 2), d(-1, 3)}),
        }

        # (c) compiling the paired and/or circuit yields exactly three clauses
        paired = Circuit(["e1", "e2", "e3", "e4"],
                         [gate("and", "u1", "e1", "e2"), gate("or", "u2", "u1", "e4")],
                         "u2")
        compiled = circuit_to_propagator(paired, variables=(1, 2))
        assert set(compiled.formula.clauses) == {fs({-1, -2, 3}), fs({-3, 4}), fs({2, 4})}

        # (d) extraction trace of (a or -b or c) with inputs {a, b}
        wide = Propagator(CnfFormula([[1, -2, 3]], names={1: "a", 2: "b", 3: "c"}),
                          frozenset({1, 2}), 3)
        extraction = extract_circuit(wide)
        assert extraction.initial_always_false == {"c_0+", "c_0-"}
        assert extraction.initial_always_true == frozenset()
        assert gate("and", "c_2+", "a_1-", "b_1+") in extraction.layers[1]
        assert gate("tie", "c_3+_alt1", "c_2+") in extraction.layers[2]
        assert gate("and", "c_3+_alt2", "a_2-", "b_2+") in extraction.layers[2]
        assert gate("or", "c_3+", "c_3+_alt1", "c_3+_alt2") in extraction.layers[2]

        # (e) the nine-row table of the two-input or-reader
        reader = Propagator(CnfFormula([[-1, 3], [-2, 3]], names={1: "v1", 2: "v2", 3: "s"}),
                            frozenset({1, 2}), 3)
        table = tabulate(reader)
        expected = {
            fs({-1, -2}): (0, 0, 1, 1, Filtering.NA),
            fs({-1, 2}): (0, 1, 1, 0, Filtering.TRUE),
            fs({-1}): (0, 0, 1, 0, Filtering.NA),
            fs({1, -2}): (1, 0, 0, 1, Filtering.TRUE),
            fs({1, 2}): (1, 1, 0, 0, Filtering.TRUE),
            fs({1}): (1, 0, 0, 0, Filtering.TRUE),
            fs({-2}): (0, 0, 0, 1, Filtering.NA),
            fs({2}): (0, 1, 0, 0, Filtering.TRUE),
            fs(): (0, 0, 0, 0, Filtering.NA),
        }
        assert len(table) == 9
        for lits, row in expected.items():
            assert boolean_representation(lits, (1, 2)) == row[:4]
            assert table.rows[lits] is row[4]


def test_criterion_02_algorithm_agreement():
    with criterion(2, "algorithm-agreement", budget=10.0):
        run_clean("algorithm-agreement", 1000)


def test_criterion_03_mirror_correspondence():
    with criterion(3, "mirror-correspondence", budget=30.0):
        run_clean("theorem-reif-correspondence", 200)


def test_criterion_04_stage_discipline():
    with criterion(4, "stage-discipline", budget=30.0):
        run_clean("lemma-reif-stage-discipline", 200)


def test_criterion_05_injection_equivalence():
    with criterion(5, "injection-equivalence", budget=30.0):
        run_clean("theorem-inject-equivalence", 200)


def test_criterion_06_counting_identities():
    with criterion(6, "counting-identities", budget=30.0):
        run_clean("reify-counting", 200)


def test_criterion_07_circuit_to_propagator_equivalence():
    with criterion(7, "circuit-to-propagator-equivalence", budget=60.0):
        run_clean("th1-equiv", 100)


def test_criterion_08_propagator_to_circuit_equivalence():
    with criterion(8, "propagator-to-circuit-equivalence", budget=120.0):
        run_clean("th2-equiv", 100)


def test_criterion_09_translation_round_trip():
    with criterion(9, "translation-round-trip", budget=60.0):
        run_clean("th1-th2-roundtrip", 100)


def test_criterion_10_conversions():
    with criterion(10, "conversion-round-trips", budget=120.0):
        run_clean("nu-roundtrip", 100)
        run_clean("filtering-roundtrip", 100)


def test_criterion_11_monotone_characterization():
    with criterion(11, "monotone-characterization", budget=60.0):
        run_clean("monotone-characterization", 100)
        # the classic non-realizable table: yes on the empty assignment but
        # no once the variable is set true
        table = FunctionTable((1,), {
            fs({-1}): Matching.YES,
            fs({1}): Matching.NO,
            fs(): Matching.YES,
        })
        violation = check_monotone(table)
        assert violation is not None
        assert violation.first.literals == fs()
        assert violation.second.literals == fs({1})


def test_criterion_12_failed_literal_simulation():
    with criterion(12, "failed-literal-simulation", budget=60.0):
        run_clean("failed-literal", 200)
