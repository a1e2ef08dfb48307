"""Constructive translations between monotone circuits and propagators.

``circuit_to_propagator``: each and/tie gate becomes one clause firing the
gate's fresh output variable, each or gate one binary clause per input; the
paired input labels stand for the positive and negative indicator bits of
the input variables, so the propagator matches exactly where the circuit
evaluates to 1 on the assignment's bit representation.

``extract_circuit``: the propagator's formula is mirrored with its inputs
wired in, and the mirror's rounds are replayed as circuit layers.  Nodes
that collapse to a constant are kept in the always-0 / always-1 ledgers
instead of the circuit; everything else becomes tie/and gates, with an or
gate joining alternatives when several clauses can fire the same node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

from .cnf import CnfFormula, Lit
from .circuit import Circuit, Gate, validate_monotone
from .propagator import Propagator
from .reify import ReifiedFormula, reify_injected

_SAFE_LABEL = re.compile(r"^[^\s#~][^\s#]*$")


def _safe_names(variables, names: Mapping[int, str] | None) -> dict[int, str]:
    candidate = {v: (names or {}).get(v, str(v)) for v in variables}
    values = list(candidate.values())
    if len(set(values)) != len(values) or not all(_SAFE_LABEL.match(n) for n in values):
        return {v: str(v) for v in variables}
    return candidate


# --- circuit -> propagator -------------------------------------------------------

def circuit_to_propagator(circ: Circuit, variables: Sequence[int] | None = None,
                          names: Mapping[int, str] | None = None) -> Propagator:
    """Compile a monotone circuit over paired indicator inputs into a propagator.

    The 2n input labels stand, in order, for the n input variables asserted
    positively and then negatively.  Gate outputs get fresh variables (the
    circuit output gets the final fresh one, the propagator's output); a
    gateless circuit degenerates to reading one indicator directly.
    """
    if not validate_monotone(circ):
        raise ValueError("circuit contains not-gates; only monotone circuits compile")
    if len(circ.inputs) % 2:
        raise ValueError("expected an even number of inputs (positive/negative pairs)")
    n = len(circ.inputs) // 2
    if variables is None:
        variables = tuple(range(1, n + 1))
    variables = tuple(variables)
    if len(variables) != n:
        raise ValueError(f"need {n} variables for {2 * n} input labels, got {len(variables)}")
    if len(set(variables)) != len(variables) or any(v < 1 for v in variables):
        raise ValueError("variables must be distinct positive ints")

    literal_of: dict[str, Lit] = {}
    var_names = dict(names or {})
    for i, label in enumerate(circ.inputs):
        if i < n:
            literal_of[label] = variables[i]
            var_names.setdefault(variables[i], label)
        else:
            literal_of[label] = -variables[i - n]

    inputs = frozenset(variables)
    next_var = max(variables, default=0) + 1
    clauses: list[frozenset] = []

    if circ.output in literal_of:
        out_lit = literal_of[circ.output]
        # still compile any (dead) gates so the formula mirrors the circuit
        fresh_needed = list(circ.topological)
        output_var: int
        if out_lit > 0:
            output_var = out_lit
        else:
            output_var = next_var
            next_var += 1
            clauses.append(frozenset((-out_lit, output_var)))
            var_names.setdefault(output_var, "s")
        for g in fresh_needed:
            literal_of[g.output] = next_var
            var_names.setdefault(next_var, g.output)
            next_var += 1
        for g in fresh_needed:
            clauses.extend(_gate_clauses(g, literal_of))
        return Propagator(CnfFormula(clauses, names=var_names), inputs, output_var)

    for g in circ.topological:
        if g.output == circ.output:
            continue
        literal_of[g.output] = next_var
        var_names.setdefault(next_var, g.output)
        next_var += 1
    literal_of[circ.output] = next_var
    var_names.setdefault(next_var, "s")
    output_var = next_var

    for g in circ.topological:
        clauses.extend(_gate_clauses(g, literal_of))
    return Propagator(CnfFormula(clauses, names=var_names), inputs, output_var)


def _gate_clauses(g: Gate, literal_of: Mapping[str, Lit]) -> list[frozenset]:
    head = literal_of[g.output]
    if g.kind == "and":
        return [frozenset({-literal_of[ref] for ref in g.inputs} | {head})]
    if g.kind == "or":
        return [frozenset((-literal_of[ref], head)) for ref in g.inputs]
    if g.kind == "tie":
        return [frozenset((-literal_of[g.inputs[0]], head))]
    if g.kind == "const1":
        return [frozenset((head,))]
    return []  # const0: the head can never be produced


# --- propagator -> circuit -------------------------------------------------------

@dataclass
class CircuitExtraction:
    """Extracted circuit plus the construction ledger.

    ``layers[i]`` lists the gates produced while replaying round ``i + 1``;
    ``always_false`` / ``always_true`` are the final constant-node ledgers
    (label sets), with ``initial_*`` their state before the first layer.
    """

    circuit: Circuit
    reified: ReifiedFormula
    input_nodes: dict[Lit, str]
    node_labels: dict[int, str]
    initial_always_false: frozenset[str]
    initial_always_true: frozenset[str]
    always_false: frozenset[str]
    always_true: frozenset[str]
    additional: tuple[str, ...]
    layers: tuple[tuple[Gate, ...], ...]
    provenance: dict[str, str]


_NODE = "node"
_TRUE = "true"
_FALSE = "false"


def extract_circuit(prop: Propagator) -> CircuitExtraction:
    # inputs or output outside the formula are legitimate (the circuit
    # compiler's degenerate cases produce them); they are wired straight
    # through or collapse to a constant below
    mirrored = reify_injected(prop.formula, prop.inputs & prop.formula.variables)
    index = mirrored.index
    n = index.n
    safe = _safe_names(set(index.base_vars) | prop.inputs | {prop.output}, prop.formula.names)
    ordered_inputs = sorted(prop.inputs)
    input_nodes: dict[Lit, str] = {}
    for v in ordered_inputs:
        input_nodes[v] = safe[v]
        input_nodes[-v] = "~" + safe[v]
    input_labels = [input_nodes[v] for v in ordered_inputs] + [input_nodes[-v] for v in ordered_inputs]

    def node_label(ident: int) -> str:
        rv = index.describe(ident)
        return rv.label(safe[rv.base])

    status: dict[int, tuple] = {}
    node_labels: dict[int, str] = {}
    seeded = {next(iter(c)) for c in prop.formula.clauses if len(c) == 1}
    for v in index.base_vars:
        for positive in (True, False):
            ident = index.id_of(v, 0, positive)
            node_labels[ident] = node_label(ident)
            if (v if positive else -v) in seeded:
                status[ident] = (_TRUE,)
            elif v not in prop.inputs:
                status[ident] = (_FALSE,)
            # stage-0 nodes of injected variables without a seeding unit are
            # never referenced by any later clause, so they need no entry

    def ledger(which: str) -> frozenset[str]:
        return frozenset(node_labels[i] for i, st in status.items() if st[0] == which)

    initial_false, initial_true = ledger(_FALSE), ledger(_TRUE)

    gates: list[Gate] = []
    layers: list[tuple[Gate, ...]] = []
    additional: list[str] = []
    provenance: dict[str, str] = {}

    def antecedent(lit: Lit) -> str | tuple:
        # node whose value 1 means this body literal is falsified by the run
        if lit < 0:
            rv_id = -lit
            if index.describe(rv_id) is not None:
                st = status.get(rv_id)
                if st is None:
                    raise RuntimeError(f"mirror variable {rv_id} referenced before definition")
                return st if st[0] != _NODE else st[1]
            return input_nodes[rv_id]
        return input_nodes[-lit]

    for stage in range(1, n + 2):
        staged = list(mirrored.clauses_of_rank(stage))
        by_head: dict[int, list[frozenset]] = {}
        for _, clause in staged:
            head = next(l for l in clause
                        if l > 0 and (rv := index.describe(l)) is not None and rv.stage == stage)
            by_head.setdefault(head, []).append(clause)
        layer_gates: list[Gate] = []
        for v in index.base_vars:
            for positive in (True, False):
                head = index.id_of(v, stage, positive)
                label = node_label(head)
                node_labels[head] = label
                fireable: list[list[str]] = []
                forced = False
                for clause in by_head.get(head, ()):
                    sources: list[str] = []
                    dropped = False
                    for lit in clause:
                        if lit == head:
                            continue
                        node = antecedent(lit)
                        if isinstance(node, tuple):
                            if node[0] == _FALSE:
                                dropped = True
                                break
                            continue  # always-true source: literal falls away
                        sources.append(node)
                    if dropped:
                        continue
                    if not sources:
                        forced = True
                        break
                    fireable.append(sources)
                if forced:
                    status[head] = (_TRUE,)
                    continue
                if not fireable:
                    status[head] = (_FALSE,)
                    continue
                if len(fireable) == 1:
                    new = _connect(fireable[0], label)
                    layer_gates.append(new)
                    provenance[label] = _describe_sources(fireable[0], label)
                else:
                    alts = []
                    for k, sources in enumerate(fireable, start=1):
                        alt = f"{label}_alt{k}"
                        additional.append(alt)
                        new = _connect(sources, alt)
                        layer_gates.append(new)
                        provenance[alt] = _describe_sources(sources, alt)
                        alts.append(alt)
                    layer_gates.append(Gate("or", label, tuple(alts)))
                    provenance[label] = f"{label} <- any of {', '.join(alts)}"
                status[head] = (_NODE, label)
        gates.extend(layer_gates)
        layers.append(tuple(layer_gates))

    if prop.output in prop.formula.variables:
        out_id = index.id_of(prop.output, n + 1, True)
        out_status = status[out_id]
        if out_status[0] == _NODE:
            output = out_status[1]
        else:
            output = node_labels[out_id]
            kind = "const1" if out_status[0] == _TRUE else "const0"
            gates.append(Gate(kind, output, ()))
            provenance[output] = f"{output} collapsed to a constant"
    elif prop.output in prop.inputs:
        # the output never occurs in the formula: only its own input unit
        # clause can produce it
        output = input_nodes[prop.output]
    else:
        output = f"{safe[prop.output]}_{n + 1}+"
        gates.append(Gate("const0", output, ()))
        provenance[output] = f"{output} collapsed to a constant"

    circuit = Circuit(input_labels, gates, output)
    return CircuitExtraction(
        circuit=circuit,
        reified=mirrored,
        input_nodes=input_nodes,
        node_labels=node_labels,
        initial_always_false=initial_false,
        initial_always_true=initial_true,
        always_false=ledger(_FALSE),
        always_true=ledger(_TRUE),
        additional=tuple(additional),
        layers=tuple(layers),
        provenance=provenance,
    )


def _connect(sources: list[str], target: str) -> Gate:
    if len(set(sources)) == 1:
        return Gate("tie", target, (sources[0],))
    return Gate("and", target, tuple(sources))


def _describe_sources(sources: list[str], target: str) -> str:
    if len(set(sources)) == 1:
        return f"{target} <- {sources[0]}"
    return f"{target} <- all of {', '.join(sorted(set(sources)))}"


def propagator_to_circuit(prop: Propagator) -> Circuit:
    return extract_circuit(prop).circuit
