import pytest

from unitprop.circuit import Circuit, evaluate, gate, validate_monotone
from unitprop.cnf import CnfFormula
from unitprop.propagator import (
    Filtering,
    FunctionTable,
    Matching,
    Propagator,
    boolean_representation,
)
from unitprop.verify import (
    SUITES,
    check_equiv_propagator_circuit,
    check_monotone,
    enumerate_assignments,
    random_cnf,
    random_monotone_circuit,
    random_monotone_table,
    realize_monotone_table,
    run_suite,
)

fs = frozenset


def test_enumerate_single_variable_order():
    got = enumerate_assignments([3])
    assert [sorted(a.literals) for a in got] == [[], [3], [-3]]


def test_enumerate_two_variables_covers_all_nine():
    got = enumerate_assignments([1, 2])
    assert len(got) == 9
    assert {a.literals for a in got} == {
        fs(), fs({1}), fs({-1}), fs({2}), fs({-2}),
        fs({1, 2}), fs({1, -2}), fs({-1, 2}), fs({-1, -2}),
    }


def test_enumerate_empty():
    got = enumerate_assignments([])
    assert len(got) == 1 and got[0].literals == fs()


def test_enumerate_cardinality_and_guard():
    for n in range(6):
        assert len(enumerate_assignments(range(1, n + 1))) == 3 ** n
    with pytest.raises(ValueError):
        enumerate_assignments(range(1, 14))


# --- monotonicity ------------------------------------------------------------------

UP_CLOSED = FunctionTable((1, 2), {
    fs(): Matching.NO,
    fs({1}): Matching.YES,
    fs({-1}): Matching.NO,
    fs({2}): Matching.YES,
    fs({-2}): Matching.NO,
    fs({1, 2}): Matching.YES,
    fs({1, -2}): Matching.YES,
    fs({-1, 2}): Matching.YES,
    fs({-1, -2}): Matching.NO,
})

NOT_UP_CLOSED = FunctionTable((1,), {
    fs({-1}): Matching.YES,
    fs({1}): Matching.NO,
    fs(): Matching.YES,
})


def test_check_monotone_passes_up_closed_table():
    assert check_monotone(UP_CLOSED) is None


def test_check_monotone_flags_negation_reader():
    violation = check_monotone(NOT_UP_CLOSED)
    assert violation is not None
    assert violation.witness == "monotonicity-violation"
    assert violation.first.literals == fs()
    assert violation.second.literals == fs({1})
    assert violation.outcomes == (Matching.YES, Matching.NO)


def test_check_monotone_constant_yes():
    table = FunctionTable((1,), {fs(): Matching.YES, fs({1}): Matching.YES, fs({-1}): Matching.YES})
    assert check_monotone(table) is None


def test_check_monotone_prefers_smallest_gap():
    rows = {a.literals: Matching.YES for a in enumerate_assignments([1, 2])}
    rows[fs({1})] = Matching.NO
    rows[fs({1, 2})] = Matching.NO
    violation = check_monotone(FunctionTable((1, 2), rows))
    assert violation.first.literals == fs()
    assert violation.second.literals == fs({1})
    assert len(violation.second.literals - violation.first.literals) == 1


def test_check_monotone_rejects_filtering_tables():
    table = FunctionTable((1,), {fs(): Filtering.NA})
    with pytest.raises(ValueError):
        check_monotone(table)


def test_counterexample_render_names():
    violation = check_monotone(NOT_UP_CLOSED)
    text = violation.render({1: "v"})
    assert "I={}" in text and "J={v}" in text and "yes/no" in text


# --- propagator/circuit comparison --------------------------------------------------

PAIRED = Circuit(
    ["e1", "e2", "e3", "e4"],
    [gate("and", "u1", "e1", "e2"), gate("or", "u2", "u1", "e4")],
    "u2",
)


def test_check_equiv_passes_compiled_pair():
    from unitprop.translate import circuit_to_propagator

    prop = circuit_to_propagator(PAIRED, variables=(1, 2))
    assert check_equiv_propagator_circuit(prop, PAIRED) is None


def test_check_equiv_reports_corruption():
    from unitprop.translate import circuit_to_propagator

    prop = circuit_to_propagator(PAIRED, variables=(1, 2))
    broken = Propagator(CnfFormula([c for c in prop.formula if len(c) == 3]),
                        prop.inputs, prop.output)
    violation = check_equiv_propagator_circuit(broken, PAIRED)
    assert violation is not None
    assert violation.witness == "equivalence-mismatch"


def test_check_equiv_flags_protocol_violations_distinctly():
    broken = Propagator(CnfFormula([[2], [-2]]), frozenset({1}), 2)
    wire = Circuit(["a", "na"], [], "a")
    violation = check_equiv_propagator_circuit(broken, wire)
    assert violation is not None
    assert violation.witness == "protocol-violation"


# --- generators ----------------------------------------------------------------------

def test_random_cnf_deterministic():
    assert random_cnf(6, 20, 4, seed=1) == random_cnf(6, 20, 4, seed=1)
    assert random_cnf(6, 20, 4, seed=1) != random_cnf(6, 20, 4, seed=2)


def test_random_cnf_empty_and_bounds():
    assert len(random_cnf(0, 0, 3, seed=1)) == 0
    assert len(random_cnf(0, 9, 3, seed=1)) == 0
    f = random_cnf(6, 20, 4, seed=3)
    assert f.variables <= set(range(1, 7))
    assert all(1 <= len(c) <= 4 for c in f)
    with pytest.raises(ValueError):
        random_cnf(-1, 2, 3, seed=0)


def test_random_monotone_circuit_deterministic_and_valid():
    a = random_monotone_circuit(8, 12, seed=7)
    b = random_monotone_circuit(8, 12, seed=7)
    assert a == b
    assert validate_monotone(a)
    assert len(a.gates) == 12
    zero = random_monotone_circuit(2, 0, seed=1)
    assert zero.gates == ()
    assert zero.output in zero.inputs
    with pytest.raises(ValueError):
        random_monotone_circuit(3, 1, seed=0)
    with pytest.raises(ValueError):
        random_monotone_circuit(0, 1, seed=0)


def test_random_monotone_table_is_monotone():
    for i in range(20):
        table = random_monotone_table(3, seed=i)
        assert check_monotone(table) is None


def test_realize_monotone_table_matches():
    for i in range(20):
        table = random_monotone_table(2, seed=100 + i)
        circ = realize_monotone_table(table)
        assert validate_monotone(circ)
        for lits, value in table.items():
            rep = boolean_representation(lits, table.variables)
            assert evaluate(circ, rep) == (1 if value is Matching.YES else 0)


def test_realize_constant_tables():
    order = (1,)
    never = FunctionTable(order, {fs(): Matching.NO, fs({1}): Matching.NO, fs({-1}): Matching.NO})
    circ = realize_monotone_table(never)
    assert all(evaluate(circ, boolean_representation(a, order)) == 0
               for a in enumerate_assignments(order))
    always = FunctionTable(order, {fs(): Matching.YES, fs({1}): Matching.YES, fs({-1}): Matching.YES})
    circ = realize_monotone_table(always)
    assert all(evaluate(circ, boolean_representation(a, order)) == 1
               for a in enumerate_assignments(order))


# --- suites ---------------------------------------------------------------------------

def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        list(run_suite("nonsense", seed=1))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_smoke(name):
    records = list(run_suite(name, seed=5, count=3))
    assert len(records) == 3
    for record in records:
        assert record.passed, record.line()
        fields = record.line().split("\t")
        assert fields[0] == name and fields[2] == "PASS"


def test_suites_are_seed_deterministic():
    first = [r.line() for r in run_suite("algorithm-agreement", seed=9, count=5)]
    second = [r.line() for r in run_suite("algorithm-agreement", seed=9, count=5)]
    assert first == second
