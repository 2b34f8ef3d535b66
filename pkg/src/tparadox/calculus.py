"""Proof checking for SK=, PA[SK], TP and TP+.

Sequents are pairs of finite sets, so contraction and exchange are implicit.
Formulas are compared after canonicalization, i.e. closed terms with equal
values are identified.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import syntax as sx
from .coding import (
    CodingError, CodingTable, DefinitionEnvironment, NotRepresentable, canonicalize,
    eval_term, pi,
)
from .semantics import sat_sequent
from .syntax import (
    All, And, Eq, Ex, Neq, NotPar, NotTr, Num, Or, Par, Tr, Var, fn, negate,
)


class AxiomError(ValueError):
    """Unknown schema or violated side condition (Sent, quantifier shape, ...)."""


class CodeOutsideUniverse(ValueError):
    pass


@dataclass(frozen=True)
class Sequent:
    ant: frozenset
    suc: frozenset

    @classmethod
    def of(cls, ant=(), suc=()) -> "Sequent":
        return cls(frozenset(ant), frozenset(suc))

    def formulas(self):
        return self.ant | self.suc


@dataclass(frozen=True, eq=True)
class ProofTree:
    conclusion: Sequent
    rule: str
    params: dict = field(default_factory=dict, hash=False)
    premises: tuple = ()


RULE_ARITY = {
    "init": 0, "axiom": 0, "Ref": 0,
    "Lneg": 1, "LW": 1, "RW": 1, "Ror": 1, "Land": 1, "Lex": 1, "Rex": 1,
    "Lall": 1, "Rall": 1, "Repl": 1, "IND": 1,
    "Cut": 2, "Lor": 2, "Rand": 2,
}

TP_SCHEMAS = frozenset({
    "T1a", "T1b", "T2a", "T2b", "T3a", "T3b", "T4a", "T4b", "T5a", "T5b",
    "P1", "P2a", "P2b", "P3", "P4", "P5", "P6", "P7", "I1",
})
ONE_WAY = frozenset({"P1", "I1", "notPP", "I1c"})

SYSTEMS = {
    "SK": (frozenset(RULE_ARITY) - {"IND"}, frozenset()),
    "PA-SK": (frozenset(RULE_ARITY), frozenset({"arith"})),
    "TP": (frozenset(RULE_ARITY), frozenset({"arith"}) | TP_SCHEMAS),
    "TP-plus": (frozenset(RULE_ARITY), frozenset({"arith", "notPP"}) | TP_SCHEMAS),
}
EXTRA_SCHEMAS = frozenset({"I1c"})  # contrapositive of I1; only behind an explicit flag


# -- axiom schemas ---------------------------------------------------------------

def _table(table_or_env) -> CodingTable:
    if isinstance(table_or_env, DefinitionEnvironment):
        return CodingTable(table_or_env)
    return getattr(table_or_env, "table", table_or_env)


def _value(t, table):
    if not sx.term_closed(t):
        raise AxiomError("axiom parameters must be closed terms")
    try:
        return eval_term(t, table)
    except CodingError as exc:
        raise AxiomError(str(exc)) from None


def _sentence(t, table, shape=None):
    v = _value(t, table)
    phi = table.decode(v)
    if phi is None or not sx.is_closed(phi):
        raise AxiomError(f"{v} is not the code of a sentence")
    if shape is not None and not isinstance(phi, shape):
        raise AxiomError(f"{v} does not code a {shape.__name__} sentence")
    return phi


def _pi_literal(t, table):
    # Π is arithmetical and decidable; its instance at a closed term is replaced by 0=0 or 0=1
    v = _value(t, table)
    return Eq(Num(0), Num(0 if pi(v, table) else 1))


def _ors(*fs):
    out = fs[0]
    for f in fs[1:]:
        out = Or(out, f)
    return out


def _schema_pair(schema: str, args, table):
    """Left and right sides of a schema instance, as tuples of formulas."""
    def need(n):
        if len(args) != n:
            raise AxiomError(f"{schema} takes {n} parameter(s), got {len(args)}")

    if schema in ("T1a", "T1b"):
        need(2)
        s, t = args
        _value(s, table), _value(t, table)
        if schema == "T1a":
            return (Eq(s, t),), (Tr(fn("dEq", s, t)),)
        return (Neq(s, t),), (Tr(fn("dNeq", s, t)),)
    if schema in ("notPP",):
        need(1)
        _value(args[0], table)
        return (), (NotPar(fn("dP", args[0])),)
    if schema in ("T4a", "T4b", "P4", "P5"):
        need(2)
        a, b = args
        _sentence(a, table), _sentence(b, table)
        if schema == "T4a":
            return (And(Tr(a), Tr(b)),), (Tr(fn("dAnd", a, b)),)
        if schema == "T4b":
            return (Or(Tr(a), Tr(b)),), (Tr(fn("dOr", a, b)),)
        if schema == "P4":
            ab = fn("dAnd", a, b)
            return (Par(ab),), (_ors(And(Par(a), Par(b)), And(Tr(a), Par(b)),
                                     And(Tr(b), Par(a)), _pi_literal(ab, table)),)
        ab = fn("dOr", a, b)
        return (Par(ab),), (_ors(And(Par(a), Par(b)), And(NotTr(a), Par(b)),
                                 And(NotTr(b), Par(a)), _pi_literal(ab, table)),)
    need(1)
    c = args[0]
    if schema in ("T5a", "P6"):
        _sentence(c, table, All)
    elif schema in ("T5b", "P7"):
        _sentence(c, table, Ex)
    else:
        _sentence(c, table)
    x, y, z = Var("x"), Var("y"), Var("z")
    if schema == "T2a":
        return (Par(c),), (Tr(fn("dP", c)),)
    if schema == "T2b":
        return (NotPar(c),), (Tr(fn("dnP", c)),)
    if schema == "T3a":
        return (Tr(c),), (Tr(fn("dT", c)),)
    if schema == "T3b":
        return (Tr(fn("dneg", c)),), (NotTr(c),)
    if schema == "T5a":
        return (All("z", Tr(fn("inst", c, z))),), (Tr(c),)
    if schema == "T5b":
        return (Ex("z", Tr(fn("inst", c, z))),), (Tr(c),)
    if schema == "P1":
        return (_pi_literal(c, table),), (Par(c),)
    if schema == "P2a":
        return (Par(fn("dnT", c)),), (Par(fn("dT", c)),)
    if schema == "P2b":
        return (Par(fn("dnP", c)),), (Par(fn("dP", c)),)
    if schema == "P3":
        tc = fn("dT", c)
        return (Par(tc),), (Or(Par(c), _pi_literal(tc, table)),)
    if schema in ("P6", "P7"):
        side = Tr if schema == "P6" else NotTr
        body = And(Ex("x", Par(fn("inst", c, x))),
                   All("y", Or(Par(fn("inst", c, y)), side(fn("inst", c, y)))))
        return (Par(c),), (Or(body, _pi_literal(c, table)),)
    if schema == "I1":
        return (Tr(fn("dOr", c, fn("dneg", c))),), (NotPar(c),)
    if schema == "I1c":
        return (Par(c),), (NotTr(fn("dOr", c, fn("dneg", c))),)
    raise AxiomError(f"unknown axiom schema {schema!r}")


def instantiate_axiom(schema: str, params, table_or_env, direction: str = "lr") -> Sequent:
    """Initial sequent for ``schema`` at ``params``.

    ``params`` is a list of closed terms, except for ``init`` (a formula) and
    ``Ref`` (one term). Two-way schemas give ``left => right`` for ``"lr"``
    and ``right => left`` for ``"rl"``.
    """
    table = _table(table_or_env)
    if schema == "init":
        (phi,) = params
        return Sequent.of([phi], [phi])
    if schema == "Ref":
        (t,) = params
        return Sequent.of([], [Eq(t, t)])
    if direction not in ("lr", "rl"):
        raise AxiomError(f"direction must be 'lr' or 'rl', got {direction!r}")
    left, right = _schema_pair(schema, list(params), table)
    if schema in ONE_WAY and direction != "lr":
        raise AxiomError(f"{schema} is a one-way initial sequent")
    return Sequent.of(left, right) if direction == "lr" else Sequent.of(right, left)


# -- checking ----------------------------------------------------------------------

@dataclass
class Verdict:
    accepted: bool
    errors: list = field(default_factory=list)   # (node path, message)
    nodes: int = 0
    schemas: dict = field(default_factory=dict)  # schema id -> uses
    oracle_used: bool = False

    def __bool__(self):
        return self.accepted


class _Reject(Exception):
    pass


def _fv_sequent(s: Sequent) -> frozenset:
    out = frozenset()
    for f in s.formulas():
        out |= sx.free_vars(f)
    return out


def _side(prem: frozenset, concl: frozenset, active=frozenset(), principal=frozenset()) -> bool:
    active, principal = frozenset(active), frozenset(principal)
    return (active <= prem and principal <= concl
            and (prem - active) <= concl and (concl - principal) <= prem)


class _Checker:
    def __init__(self, table, system, extra):
        if system not in SYSTEMS:
            raise ValueError(f"unknown system {system!r}; choose from {sorted(SYSTEMS)}")
        self.table = table
        self.rules, schemas = SYSTEMS[system]
        self.schemas = schemas | frozenset(extra)
        self.verdict = Verdict(True)

    def canon(self, phi):
        try:
            return canonicalize(phi, self.table)
        except CodingError as exc:
            raise _Reject(f"cannot evaluate a closed term: {exc}") from None

    def seq(self, s: Sequent):
        return frozenset(map(self.canon, s.ant)), frozenset(map(self.canon, s.suc))

    def subst(self, phi, var, t):
        try:
            return self.canon(sx.substitute_open(phi, var, t))
        except sx.FormulaError as exc:
            raise _Reject(str(exc)) from None

    def param(self, node, key):
        try:
            return node.params[key]
        except KeyError:
            raise _Reject(f"rule {node.rule} needs parameter {key!r}") from None

    def run(self, node, path="root"):
        self.verdict.nodes += 1
        try:
            self.check_node(node)
        except _Reject as exc:
            self.verdict.accepted = False
            self.verdict.errors.append((path, str(exc)))
        for i, p in enumerate(node.premises):
            self.run(p, f"{path}.{i}")

    def check_node(self, node):
        rule = node.rule
        if rule not in RULE_ARITY:
            raise _Reject(f"unknown rule {rule!r}")
        if rule not in self.rules:
            raise _Reject(f"rule {rule} is not available in this system")
        if len(node.premises) != RULE_ARITY[rule]:
            raise _Reject(f"{rule} takes {RULE_ARITY[rule]} premise(s), got {len(node.premises)}")
        ca, cs = self.seq(node.conclusion)
        prems = [self.seq(p.conclusion) for p in node.premises]
        getattr(self, "rule_" + rule)(node, ca, cs, prems)

    def fail_unless(self, ok, msg):
        if not ok:
            raise _Reject(msg)

    # zero-premise rules
    def rule_init(self, node, ca, cs, prems):
        phi = self.canon(self.param(node, "formula"))
        self.fail_unless(ca == {phi} and cs == {phi}, "initial sequent must be exactly φ ⇒ φ")

    def rule_Ref(self, node, ca, cs, prems):
        t = self.param(node, "term")
        self.fail_unless(self.canon(Eq(t, t)) in cs, "Ref: t = t missing from the succedent")

    def rule_axiom(self, node, ca, cs, prems):
        schema = self.param(node, "schema")
        if schema == "arith":
            self.fail_unless("arith" in self.schemas, "arithmetic oracle not available in this system")
            self.verdict.oracle_used = True
            return self.arith(ca, cs)
        self.fail_unless(schema in self.schemas, f"axiom schema {schema!r} not available in this system")
        try:
            inst = instantiate_axiom(schema, node.params.get("args", []), self.table,
                                     node.params.get("direction", "lr"))
        except AxiomError as exc:
            raise _Reject(f"{schema}: {exc}") from None
        self.fail_unless(self.seq(inst) == (ca, cs), f"conclusion is not an instance of {schema}")
        self.verdict.schemas[schema] = self.verdict.schemas.get(schema, 0) + 1

    def arith(self, ca, cs):
        for f in ca | cs:
            self.fail_unless(isinstance(f, (Eq, Neq)) and sx.is_closed(f),
                             "arithmetic oracle admits only closed = / != literals")

        def true(f):
            same = f.left.value == f.right.value
            return same if isinstance(f, Eq) else not same

        self.fail_unless(any(not true(f) for f in ca) or any(true(f) for f in cs),
                         "arithmetic sequent is not valid in the standard model")

    # structural
    def rule_Cut(self, node, ca, cs, prems):
        phi = self.canon(self.param(node, "formula"))
        (a1, s1), (a2, s2) = prems
        self.fail_unless(_side(a1, ca) and _side(s1, cs, {phi}), "Cut: left premise mismatch")
        self.fail_unless(_side(a2, ca, {phi}) and _side(s2, cs), "Cut: right premise mismatch")

    def rule_LW(self, node, ca, cs, prems):
        phi = self.canon(self.param(node, "formula"))
        (a, s), = prems
        self.fail_unless(_side(a, ca, (), {phi}) and s == cs, "LW mismatch")

    def rule_RW(self, node, ca, cs, prems):
        phi = self.canon(self.param(node, "formula"))
        (a, s), = prems
        self.fail_unless(a == ca and _side(s, cs, (), {phi}), "RW mismatch")

    def rule_Lneg(self, node, ca, cs, prems):
        phi = self.canon(self.param(node, "formula"))
        (a, s), = prems
        self.fail_unless(_side(a, ca, (), {negate(phi)}) and _side(s, cs, {phi}), "L¬ mismatch")

    # connectives
    def principal(self, node, cls):
        phi = self.canon(self.param(node, "formula"))
        self.fail_unless(isinstance(phi, cls), f"{node.rule}: principal formula must be a {cls.__name__}")
        return phi

    def rule_Lor(self, node, ca, cs, prems):
        phi = self.principal(node, Or)
        (a1, s1), (a2, s2) = prems
        self.fail_unless(_side(a1, ca, {phi.left}, {phi}) and _side(s1, cs), "L∨: left premise mismatch")
        self.fail_unless(_side(a2, ca, {phi.right}, {phi}) and _side(s2, cs), "L∨: right premise mismatch")

    def rule_Ror(self, node, ca, cs, prems):
        phi = self.principal(node, Or)
        (a, s), = prems
        self.fail_unless(_side(a, ca) and _side(s, cs, {phi.left, phi.right}, {phi}), "R∨ mismatch")

    def rule_Land(self, node, ca, cs, prems):
        phi = self.principal(node, And)
        (a, s), = prems
        self.fail_unless(_side(a, ca, {phi.left, phi.right}, {phi}) and _side(s, cs), "L∧ mismatch")

    def rule_Rand(self, node, ca, cs, prems):
        phi = self.principal(node, And)
        (a1, s1), (a2, s2) = prems
        self.fail_unless(_side(a1, ca) and _side(s1, cs, {phi.left}, {phi}), "R∧: left premise mismatch")
        self.fail_unless(_side(a2, ca) and _side(s2, cs, {phi.right}, {phi}), "R∧: right premise mismatch")

    # quantifiers
    def eigen(self, node, ca, cs):
        u = self.param(node, "eigen")
        conclusion_vars = frozenset()
        for f in ca | cs:
            conclusion_vars |= sx.free_vars(f)
        self.fail_unless(u not in conclusion_vars,
                         f"eigenvariable {u} occurs free in the conclusion")
        return Var(u)

    def rule_Lex(self, node, ca, cs, prems):
        phi = self.principal(node, Ex)
        u = self.eigen(node, ca, cs)
        (a, s), = prems
        inst = self.subst(phi.body, phi.var, u)
        self.fail_unless(_side(a, ca, {inst}, {phi}) and _side(s, cs), "L∃ mismatch")

    def rule_Rall(self, node, ca, cs, prems):
        phi = self.principal(node, All)
        u = self.eigen(node, ca, cs)
        (a, s), = prems
        inst = self.subst(phi.body, phi.var, u)
        self.fail_unless(_side(a, ca) and _side(s, cs, {inst}, {phi}), "R∀ mismatch")

    def rule_Rex(self, node, ca, cs, prems):
        phi = self.principal(node, Ex)
        (a, s), = prems
        inst = self.subst(phi.body, phi.var, self.param(node, "term"))
        self.fail_unless(_side(a, ca) and _side(s, cs, {inst}, {phi}), "R∃ mismatch")

    def rule_Lall(self, node, ca, cs, prems):
        phi = self.principal(node, All)
        (a, s), = prems
        inst = self.subst(phi.body, phi.var, self.param(node, "term"))
        self.fail_unless(_side(a, ca, {inst}, {phi}) and _side(s, cs), "L∀ mismatch")

    # identity and induction
    def rule_Repl(self, node, ca, cs, prems):
        phi, x = self.param(node, "formula"), self.param(node, "var")
        s, t = self.param(node, "s"), self.param(node, "t")
        (a, suc), = prems
        at_t, at_s = self.subst(phi, x, t), self.subst(phi, x, s)
        self.fail_unless(_side(a, ca) and _side(suc, cs, {at_t}, {self.canon(Neq(s, t)), at_s}),
                         "Repl mismatch")

    def rule_IND(self, node, ca, cs, prems):
        phi, x = self.param(node, "formula"), self.param(node, "var")
        u = self.eigen(node, ca, cs)
        t = self.param(node, "term")
        (a, s), = prems
        self.fail_unless(
            _side(a, ca, {self.subst(phi, x, u)}, {self.subst(phi, x, Num(0))})
            and _side(s, cs, {self.subst(phi, x, fn("S", u))}, {self.subst(phi, x, t)}),
            "IND mismatch")


def check_proof(proof: ProofTree, system: str, table_or_env, extra_schemas=()) -> Verdict:
    """Check every node of ``proof`` in ``system``; errors carry node paths like ``root.1.0``."""
    unknown = set(extra_schemas) - EXTRA_SCHEMAS
    if unknown:
        raise ValueError(f"unknown extra schemas: {sorted(unknown)}")
    checker = _Checker(_table(table_or_env), system, extra_schemas)
    checker.run(proof)
    return checker.verdict


def proof_sentences(proof: ProofTree):
    """All closed formulas occurring in conclusions, in a stable order."""
    seen, out = set(), []
    stack = [proof]
    while stack:
        node = stack.pop()
        for phi in sorted(node.conclusion.formulas(), key=repr):
            if sx.is_closed(phi) and phi not in seen:
                seen.add(phi)
                out.append(phi)
        stack.extend(reversed(node.premises))
    return out


def cross_validate(sequent: Sequent, seq) -> bool:
    """Does the least fixed point of ``seq`` satisfy ``sequent``?"""
    M = seq.final
    table = M.universe.table
    for phi in sequent.formulas():
        if not sx.is_closed(phi):
            raise CodeOutsideUniverse("cross-validation needs a sequent of sentences")
        try:
            code = table.lookup(canonicalize(phi, table))
        except NotRepresentable as exc:
            raise CodeOutsideUniverse(str(exc)) from None
        if code is None or code not in M.universe.codes:
            raise CodeOutsideUniverse(f"sentence outside the universe: {phi!r}")
    return sat_sequent(M, (sequent.ant, sequent.suc))
