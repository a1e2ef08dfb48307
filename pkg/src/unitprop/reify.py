"""Stage-indexed CNF mirrors.

``reify`` turns a formula into a satisfiable companion whose variables
``(v, stage, sign)`` record, under plain unit resolution, exactly which
literals propagation on the source formula would have fixed by each round.
``reify_injected`` additionally wires selected source variables into the
mirror so that restricting it by a partial assignment drives the
simulation.  ``failed_literal_formula`` builds on that to express the
failed-literal probe as a single propagation run.

Rounds on the mirror are numbered from 0 (the seeding round), rounds on the
source from 1; accessors on :class:`unitprop.cnf.PropagationResult` take the
base explicitly.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .cnf import (
    CnfFormula,
    Lit,
    check_lit,
    lit_key,
    restrict,
)


class ReifiedVariable(NamedTuple):
    """Mirror variable: source variable, round index and recorded polarity."""

    base: int
    stage: int
    positive: bool

    def label(self, name: str | None = None) -> str:
        sign = "+" if self.positive else "-"
        return f"{name or self.base}_{self.stage}{sign}"


class ClauseRole(NamedTuple):
    """Role tag of an emitted clause: init (rank 0/1), prop/ded (rank i), inject."""

    kind: str
    rank: int | None = None

    def text(self) -> str:
        if self.kind == "init":
            return f"init{self.rank}"
        if self.kind == "inject":
            return "inject"
        return f"{self.kind} {self.rank}"

    @classmethod
    def parse(cls, text: str) -> "ClauseRole":
        if text == "init0":
            return cls("init", 0)
        if text == "init1":
            return cls("init", 1)
        if text == "inject":
            return cls("inject")
        kind, _, rank = text.partition(" ")
        if kind in ("prop", "ded") and rank.isdigit():
            return cls(kind, int(rank))
        raise ValueError(f"bad clause role: {text!r}")


class ReifiedIndex:
    """Bijection between mirror variables and fresh ids above the source ids.

    For n source variables there are exactly ``2 n (n + 2)`` entries: both
    polarities of every variable at every round 0..n+1.  Ids are allocated
    contiguously above the largest source variable id, so a plain formula
    and any of its restrictions (same variable set) share the same index.
    """

    __slots__ = ("base_vars", "n", "offset", "_rank")

    def __init__(self, base_vars: Iterable[int]):
        ordered = tuple(sorted(set(base_vars)))
        self.base_vars = ordered
        self.n = len(ordered)
        self.offset = max(ordered, default=0)
        self._rank = {v: j for j, v in enumerate(ordered)}

    def __len__(self) -> int:
        return 2 * self.n * (self.n + 2)

    def id_of(self, base: int, stage: int, positive: bool) -> int:
        if base not in self._rank:
            raise ValueError(f"unknown source variable {base}")
        if not 0 <= stage <= self.n + 1:
            raise ValueError(f"stage {stage} outside 0..{self.n + 1}")
        return self.offset + self._rank[base] * 2 * (self.n + 2) + 2 * stage + (1 if positive else 2)

    def delta(self, lit: Lit, stage: int) -> ReifiedVariable:
        """Mirror variable recording that ``lit`` holds by ``stage``."""
        check_lit(lit)
        return ReifiedVariable(abs(lit), stage, lit > 0)

    def delta_id(self, lit: Lit, stage: int) -> int:
        rv = self.delta(lit, stage)
        return self.id_of(rv.base, rv.stage, rv.positive)

    def describe(self, ident: int) -> ReifiedVariable | None:
        """Reverse lookup; ``None`` for ids outside the index."""
        span = 2 * (self.n + 2)
        pos = ident - self.offset - 1
        if pos < 0 or pos >= 2 * self.n * (self.n + 2):
            return None
        rank, rest = divmod(pos, span)
        stage, sign = divmod(rest, 2)
        return ReifiedVariable(self.base_vars[rank], stage, sign == 0)

    def __contains__(self, ident: int) -> bool:
        return self.describe(ident) is not None

    def ids(self) -> Iterable[int]:
        for base in self.base_vars:
            for stage in range(self.n + 2):
                yield self.id_of(base, stage, True)
                yield self.id_of(base, stage, False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReifiedIndex):
            return NotImplemented
        return self.base_vars == other.base_vars and self.offset == other.offset

    def __hash__(self) -> int:
        return hash((self.base_vars, self.offset))


class ReifiedFormula:
    """Mirror formula plus its index, emission ledger and injected variables.

    ``emissions`` records every clause in definition order together with its
    role; the formula itself deduplicates, so the ledger is the authority for
    the counting properties.  ``source`` is kept for convenience and ignored
    by equality (serialization does not carry it).
    """

    __slots__ = ("formula", "index", "emissions", "injected", "source")

    def __init__(self, formula: CnfFormula, index: ReifiedIndex,
                 emissions: Iterable[tuple[ClauseRole, frozenset]],
                 injected: Iterable[int] = (), source: CnfFormula | None = None):
        self.formula = formula
        self.index = index
        self.emissions = tuple((role, frozenset(clause)) for role, clause in emissions)
        self.injected = frozenset(injected)
        self.source = source

    @property
    def n(self) -> int:
        return self.index.n

    def count(self, kind: str) -> int:
        return sum(1 for role, _ in self.emissions if role.kind == kind)

    def clauses_of_rank(self, rank: int) -> list[tuple[ClauseRole, frozenset]]:
        """Emissions whose heads are fixed at round ``rank`` (ledger order).

        Rank 0 holds the seeding units, rank 1 the rank-1 init clauses plus
        the injection clauses, ranks 2..n+1 the prop/ded clauses.
        """
        out = []
        for role, clause in self.emissions:
            if role.kind == "inject":
                if rank == 1:
                    out.append((role, clause))
            elif role.rank == rank:
                out.append((role, clause))
        return out

    def roles_for(self, clause) -> list[ClauseRole]:
        target = frozenset(clause)
        return [role for role, emitted in self.emissions if emitted == target]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReifiedFormula):
            return NotImplemented
        return (self.formula == other.formula and self.index == other.index
                and self.emissions == other.emissions and self.injected == other.injected)

    def __repr__(self) -> str:
        return (f"ReifiedFormula({self.n} source vars, {len(self.emissions)} emissions, "
                f"{len(self.injected)} injected)")


def _mirror_names(formula: CnfFormula, index: ReifiedIndex) -> dict[int, str]:
    names = dict(formula.names)
    for ident in index.ids():
        rv = index.describe(ident)
        names[ident] = rv.label(formula.names.get(rv.base))
    return names


def reify(formula: CnfFormula) -> ReifiedFormula:
    """Build the stage-indexed mirror of ``formula``.

    Per unit clause (w): the round-0 seed and its round-1 carrier.  Per round
    2..n+1 and variable: both carry-over clauses.  Per round 2..n+1,
    non-unary clause q and literal w of q: the clause firing w's mirror at
    that round when the other literals were falsified one round earlier.
    Redundant emissions are kept exactly as defined, never pruned.
    """
    index = ReifiedIndex(formula.variables)
    n = index.n
    emissions: list[tuple[ClauseRole, frozenset]] = []

    for clause in formula.clauses:
        if len(clause) == 1:
            (w,) = clause
            seed = index.delta_id(w, 0)
            emissions.append((ClauseRole("init", 0), frozenset((seed,))))
            emissions.append((ClauseRole("init", 1), frozenset((-seed, index.delta_id(w, 1)))))

    for stage in range(2, n + 2):
        for v in index.base_vars:
            for positive in (True, False):
                prev = index.id_of(v, stage - 1, positive)
                here = index.id_of(v, stage, positive)
                emissions.append((ClauseRole("prop", stage), frozenset((-prev, here))))

    for stage in range(2, n + 2):
        for clause in formula.clauses:
            if len(clause) < 2:
                continue
            for w in sorted(clause, key=lit_key):
                body = {-index.delta_id(-t, stage - 1) for t in clause if t != w}
                emissions.append((ClauseRole("ded", stage), frozenset(body | {index.delta_id(w, stage)})))

    mirror = CnfFormula((clause for _, clause in emissions), names=_mirror_names(formula, index))
    return ReifiedFormula(mirror, index, emissions, source=formula)


def reify_injected(formula: CnfFormula, inject: Iterable[int]) -> ReifiedFormula:
    """Mirror of ``formula`` with the variables of ``inject`` wired in.

    Each injected source variable v gets the two clauses routing a raw
    assignment of v into the round-1 mirror variables, so that restricting
    the result by a partial assignment over ``inject`` drives the simulation
    the same way restricting the source formula would.
    """
    inject_set = frozenset(inject)
    stray = inject_set - formula.variables
    if stray:
        raise ValueError(f"injected variables not in the formula: {sorted(stray)}")
    base = reify(formula)
    emissions = list(base.emissions)
    for v in sorted(inject_set):
        emissions.append((ClauseRole("inject"), frozenset((-v, base.index.id_of(v, 1, True)))))
        emissions.append((ClauseRole("inject"), frozenset((v, base.index.id_of(v, 1, False)))))
    mirror = CnfFormula((clause for _, clause in emissions), names=base.formula.names)
    return ReifiedFormula(mirror, base.index, emissions, injected=inject_set, source=formula)


def failed_literal_formula(formula: CnfFormula, lit: Lit) -> tuple[CnfFormula, Lit]:
    """Formula expressing the failed-literal probe of ``lit`` as propagation.

    Returns ``(probe, target)``: unit resolution on ``probe`` produces
    ``target`` (the opposite of ``lit``) exactly when unit resolution on the
    source formula conjoined with ``lit`` fails.  The clashing pair shows up
    as some variable's mirror fixed both ways at the final round, which the
    added clauses convert into the opposite literal.
    """
    check_lit(lit)
    if abs(lit) not in formula.variables:
        raise ValueError(f"literal {lit} is not over the formula's variables")
    probed = restrict(formula, [lit])
    mirror = reify(probed)
    n = mirror.n
    clauses = list(mirror.formula.clauses)
    for v in mirror.index.base_vars:
        clauses.append(frozenset((
            -mirror.index.id_of(v, n + 1, True),
            -mirror.index.id_of(v, n + 1, False),
            -lit,
        )))
    return CnfFormula(clauses, names=mirror.formula.names), -lit


# --- serialization ------------------------------------------------------------

def format_reified(reified: ReifiedFormula) -> str:
    """Role-tagged DIMACS: one ``c role`` line ahead of each emitted clause."""
    lines = []
    for ident in sorted(reified.index.ids()):
        rv = reified.index.describe(ident)
        sign = "+" if rv.positive else "-"
        lines.append(f"c rv {ident} {rv.base} {rv.stage} {sign}")
    all_ids = [abs(l) for _, clause in reified.emissions for l in clause]
    max_var = max(all_ids + [reified.index.offset + len(reified.index)], default=0)
    lines.append(f"p cnf {max_var} {len(reified.emissions)}")
    for role, clause in reified.emissions:
        lines.append(f"c role {role.text()}")
        lines.append(" ".join(str(l) for l in sorted(clause, key=lit_key)) + " 0")
    return "\n".join(lines) + "\n"


def parse_reified(text: str) -> ReifiedFormula:
    entries: list[tuple[int, int, int, bool]] = []
    emissions: list[tuple[ClauseRole, frozenset]] = []
    pending_role: ClauseRole | None = None
    pending_lits: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c rv "):
            fields = line.split()
            if len(fields) != 6 or fields[5] not in "+-":
                raise ValueError(f"line {lineno}: bad rv line")
            entries.append((int(fields[2]), int(fields[3]), int(fields[4]), fields[5] == "+"))
            continue
        if line.startswith("c role "):
            pending_role = ClauseRole.parse(line[len("c role "):].strip())
            continue
        if line.startswith("c") or line.startswith("p"):
            continue
        for token in line.split():
            lit = int(token)
            if lit == 0:
                if pending_role is None:
                    raise ValueError(f"line {lineno}: clause without a role tag")
                emissions.append((pending_role, frozenset(pending_lits)))
                pending_role = None
                pending_lits = []
            else:
                pending_lits.append(lit)
    if pending_lits:
        raise ValueError("last clause not terminated by 0")
    index = ReifiedIndex(base for _, base, _, _ in entries)
    for ident, base, stage, positive in entries:
        if index.id_of(base, stage, positive) != ident:
            raise ValueError(f"rv line out of order: id {ident} is not ({base},{stage})")
    injected = set()
    for role, clause in emissions:
        if role.kind == "inject":
            injected.update(abs(l) for l in clause if index.describe(abs(l)) is None)
    formula = CnfFormula((clause for _, clause in emissions))
    return ReifiedFormula(formula, index, emissions, injected=injected)
