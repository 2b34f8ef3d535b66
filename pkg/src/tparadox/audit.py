"""Model-side checks at a least fixed point: axiom audit and closure laws."""
from __future__ import annotations

from .calculus import AxiomError, Sequent, TP_SCHEMAS, instantiate_axiom
from .coding import CodingError, CodingTable, build_universe, canonicalize
from .jump import TP_PLUS, StageSequence, compiled
from .semantics import FALSE, TRUE, UNDEFINED, value
from .syntax import And, Eq, Neq, NotPar, Num, Or, Par, Tr

ALL_SCHEMAS = TP_SCHEMAS | {"notPP"}


def _candidates(schema, universe):
    table = universe.table
    if schema in ("T1a", "T1b"):
        for c in sorted(universe.codes):
            phi = table.decode(c)
            if isinstance(phi, (Eq, Neq)):
                yield (phi.left, phi.right)
    elif schema in ("T4a", "T4b", "P4", "P5"):
        want = And if schema in ("T4a", "P4") else Or
        for c in sorted(universe.codes):
            phi = table.decode(c)
            if isinstance(phi, want):
                yield (Num(table.lookup(phi.left)), Num(table.lookup(phi.right)))
    else:
        for c in sorted(universe.codes):
            yield (Num(c),)


def audit_universe(env, seeds=(), schemas=ALL_SCHEMAS):
    """Universe closed under the sentences of every schema instance over a base universe.

    The base universe is built first; then each schema is instantiated at
    every admissible parameter from it and the instance's sentences are added
    as seeds, so the audit does not only see instances that happen to occur.
    """
    table = CodingTable(env)
    base = build_universe(table, seeds, freeze=False)
    instances, extra = [], []
    for schema in sorted(schemas):
        for args in list(_candidates(schema, base)):
            for direction in _directions(schema):
                try:
                    seq = instantiate_axiom(schema, args, table, direction)
                except (AxiomError, CodingError):
                    continue
                instances.append((schema, direction, args, seq))
                extra.extend(canonicalize(f, table) for f in seq.formulas())
    return build_universe(table, extra), instances


def _directions(schema):
    return ("lr",) if schema in ("P1", "I1", "notPP", "I1c") else ("lr", "rl")


def _in_universe(seq: Sequent, universe) -> bool:
    table = universe.table
    for phi in seq.formulas():
        try:
            code = table.lookup(canonicalize(phi, table))
        except CodingError:
            return False
        if code is None or code not in universe.codes:
            return False
    return True


def axiom_instances(universe, schemas):
    """Yield ``(schema, direction, args, sequent)`` for every instance whose sentences lie in U."""
    table = universe.table
    for schema in sorted(schemas):
        for args in _candidates(schema, universe):
            for direction in _directions(schema):
                try:
                    seq = instantiate_axiom(schema, args, table, direction)
                except (AxiomError, CodingError):
                    continue
                if _in_universe(seq, universe):
                    yield schema, direction, args, seq


def fast_sat(M, values: dict, sequent: Sequent) -> bool:
    """sat_sequent through the engine's per-code values; falls back to ``value``."""
    table = M.universe.table

    def v(phi):
        code = table.lookup(canonicalize(phi, table))
        if code is not None and code in values:
            return values[code]
        return value(M, phi)

    if all(v(g) is TRUE for g in sequent.ant):
        return any(v(d) is TRUE for d in sequent.suc)
    return True


def model_values(M) -> dict:
    """Truth value of every sentence of U in ``M``, from the compiled engine."""
    raw = compiled(M.universe).values(M)
    return {c: (FALSE, TRUE, UNDEFINED)[x] for c, x in raw.items()}


def axiom_audit(seq: StageSequence, instances=None) -> dict:
    """Count satisfied and failing axiom instances at the fixed point.

    Without ``instances`` every instance whose sentences all lie in U is used.
    """
    M = seq.final
    schemas = set(TP_SCHEMAS)
    if seq.variant == TP_PLUS:
        schemas.add("notPP")
    if instances is None:
        instances = axiom_instances(M.universe, schemas)
    values = model_values(M)
    checked, failures, per_schema = 0, [], {}
    for schema, direction, args, sequent in instances:
        if schema not in schemas:
            continue
        checked += 1
        per_schema[schema] = per_schema.get(schema, 0) + 1
        if not fast_sat(M, values, sequent):
            failures.append((schema, direction, tuple(a.value for a in args)))
    return {"checked": checked, "failures": failures, "per_schema": dict(sorted(per_schema.items()))}


def negation_symmetry(seq: StageSequence) -> list:
    """Codes c with c in P+ but not its negation (or vice versa)."""
    M = seq.final
    u = M.universe
    return sorted(c for c in u.codes if (c in M.p_plus) != (u.negation(c) in M.p_plus))


def paradoxical_p_literals(seq: StageSequence) -> list:
    M = seq.final
    table = M.universe.table
    return sorted(c for c in M.p_plus if isinstance(table.decode(c), (Par, NotPar)))


def transparency(seq: StageSequence) -> list:
    """Codes where T(φ) and φ disagree, or P(φ) disagrees with P-membership."""
    M = seq.final
    table = M.universe.table
    values = model_values(M)
    bad = []
    for c in sorted(M.universe.codes):
        t_code = table.lookup(Tr(Num(c)))
        t_val = values[t_code] if t_code is not None else value(M, Tr(Num(c)))
        p_code = table.lookup(Par(Num(c)))
        p_val = values[p_code] if p_code is not None else value(M, Par(Num(c)))
        p_expect = TRUE if c in M.p_plus else FALSE if c in M.p_minus else UNDEFINED
        if t_val is not values[c] or p_val is not p_expect:
            bad.append(c)
    return bad


def fixed_point_checks(seq: StageSequence, instances=None) -> tuple:
    audit = axiom_audit(seq, instances)
    return {
        "axiom_audit": not audit["failures"],
        "negation_symmetry": not negation_symmetry(seq),
        "no_paradoxical_p_literal": not paradoxical_p_literals(seq),
        "transparency": not transparency(seq),
    }, audit


__all__ = [
    "axiom_instances", "axiom_audit", "negation_symmetry", "paradoxical_p_literals",
    "transparency", "fixed_point_checks",
]
