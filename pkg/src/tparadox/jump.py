"""The double jump on truth and paradoxicality and its least fixed point.

Every sentence of a closed universe is compiled once into a small node (its
literal referent, component codes or instance codes). A stage is then
evaluated bottom-up in one pass over the universe ordered by formula size.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import syntax as sx
from .coding import pi
from .semantics import PartialModel
from .syntax import And, Eq, Neq, Or, Par

log = logging.getLogger(__name__)

TP, TP_PLUS = "tp", "tp-plus"
VARIANTS = (TP, TP_PLUS)

_F, _T, _U = 0, 1, 2


class JumpError(RuntimeError):
    pass


class InconsistentInput(JumpError):
    pass


class StageInconsistency(JumpError):
    pass


class NonTermination(JumpError):
    pass


class _Compiled:
    __slots__ = ("order", "node", "neg", "pi", "p_literals", "universe")

    def __init__(self, universe):
        table = universe.table
        self.universe = universe
        self.node = {}
        self.neg = {}
        self.pi = set()
        self.p_literals = set()
        for c in universe.codes:
            phi = table.decode(c)
            self.neg[c] = universe.negation(c)
            if pi(c, table):
                self.pi.add(c)
            if isinstance(phi, (Eq, Neq)):
                same = phi.left.value == phi.right.value
                self.node[c] = ("const", _T if same == isinstance(phi, Eq) else _F)
            elif isinstance(phi, sx.PRED_LITERALS):
                self.node[c] = (type(phi).__name__, phi.term.value)
                if isinstance(phi, Par):
                    self.p_literals.add(c)
            elif isinstance(phi, (And, Or)):
                self.node[c] = (type(phi).__name__, table.lookup(phi.left), table.lookup(phi.right))
            else:
                self.node[c] = (type(phi).__name__, universe.instances(c))
        self.order = sorted(universe.codes, key=lambda c: (sx.size(table.decode(c)), c))

    def values(self, M: PartialModel) -> dict:
        tp, tm, pp, pm = M.sets()
        val = {}
        for c in self.order:
            node = self.node[c]
            kind = node[0]
            if kind == "const":
                v = node[1]
            elif kind in ("Tr", "NotTr", "Par", "NotPar"):
                ref = node[1]
                pos, neg = (tp, tm) if kind in ("Tr", "NotTr") else (pp, pm)
                v = _T if ref in pos else _F if ref in neg else _U
                if kind.startswith("Not") and v != _U:
                    v = 1 - v
            else:
                parts = [val[x] for x in (node[1:] if kind in ("And", "Or") else node[1])]
                absorbing, unit = (_F, _T) if kind in ("And", "All") else (_T, _F)
                if absorbing in parts:
                    v = absorbing
                elif all(p == unit for p in parts):
                    v = unit
                else:
                    v = _U
            val[c] = v
        return val

    def p_condition(self, M: PartialModel, c: int) -> bool:
        if c in self.pi:                                   # P1
            return True
        tp, tm, pp, _ = M.sets()
        node = self.node[c]
        kind = node[0]
        if kind in ("Tr", "NotTr"):                        # P2, P3
            return node[1] in pp
        if kind == "And":                                  # P4
            a, b = node[1], node[2]
            return (a in pp and b in pp) or (a in tp and b in pp) or (b in tp and a in pp)
        if kind == "Or":                                   # P5
            a, b = node[1], node[2]
            return (a in pp and b in pp) or (a in tm and b in pp) or (b in tm and a in pp)
        if kind in ("All", "Ex"):                          # P6, P7
            inst = node[1]
            side = tp if kind == "All" else tm
            return any(i in pp for i in inst) and all(i in pp or i in side for i in inst)
        return False


def compiled(universe) -> _Compiled:
    eng = getattr(universe, "_compiled", None)
    if eng is None:
        eng = _Compiled(universe)
        universe._compiled = eng
    return eng


def p_condition(M: PartialModel, code: int) -> bool:
    """Disjunction of the seven closure conditions for paradoxicality at ``M``.

    "T x" and "~T x" in the conditions read as membership of ``x`` in T+ and
    T- respectively; "P x" as membership in P+.
    """
    eng = compiled(M.universe)
    if code not in eng.node:
        raise KeyError(f"code {code} is not in the universe")
    return eng.p_condition(M, code)


def seeded_p_literals(universe) -> frozenset:
    """Codes of positive P-literals, kept in P- by the starred jump."""
    return frozenset(compiled(universe).p_literals)


def jump(M: PartialModel, star: bool = False) -> PartialModel:
    """Simultaneous update of T and P from the same input stage."""
    if M.t_plus & M.t_minus or M.p_plus & M.p_minus:
        raise InconsistentInput("jump is only defined on consistent interpretations")
    eng = compiled(M.universe)
    val = eng.values(M)
    t_plus = frozenset(c for c, v in val.items() if v == _T)
    t_minus = frozenset(c for c, v in val.items() if v == _F)
    p_plus = frozenset(c for c in eng.order if eng.p_condition(M, c))
    p_minus = t_plus | t_minus
    if star:
        p_minus |= eng.p_literals
    return PartialModel(M.universe, t_plus, t_minus, p_plus, p_minus)


def jump_star(M: PartialModel) -> PartialModel:
    return jump(M, star=True)


# -- stage sequences -------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    kind: str  # "true" | "false" | "paradoxical" | "independent"
    rank: int | None = None

    def __str__(self):
        if self.kind == "paradoxical":
            return f"Paradoxical({self.rank})"
        return self.kind.capitalize()


@dataclass
class StageSequence:
    variant: str
    stages: list
    ranks: dict
    fixed_point: int
    universe: object = field(repr=False, default=None)

    @property
    def final(self) -> PartialModel:
        return self.stages[-1]

    def rank(self, code: int):
        return self.ranks.get(code)

    def classify(self, code: int) -> Classification:
        return classify(code, self)


def initial_stage(universe, variant: str = TP) -> PartialModel:
    if variant == TP:
        return PartialModel(universe)
    if variant == TP_PLUS:
        return PartialModel(universe, p_minus=seeded_p_literals(universe))
    raise ValueError(f"unknown variant {variant!r}")


def lfp(universe, variant: str = TP) -> StageSequence:
    """Iterate the (starred) jump from the bottom until two stages coincide."""
    star = variant == TP_PLUS
    current = initial_stage(universe, variant)
    stages, ranks = [current], {}
    budget = 4 * len(universe) + 1
    for alpha in range(budget):
        nxt = jump(current, star=star)
        if nxt.t_plus & nxt.t_minus or nxt.p_plus & nxt.p_minus:
            raise StageInconsistency(f"stage {alpha + 1} is inconsistent")
        if (nxt.t_plus | nxt.t_minus) & nxt.p_plus:
            raise StageInconsistency(f"stage {alpha} is unsound")
        for c in nxt.p_plus - current.p_plus:
            ranks.setdefault(c, alpha + 1)
        stages.append(nxt)
        if nxt.same_sets(current):
            log.debug("fixed point at stage %d (|U|=%d)", alpha, len(universe))
            return StageSequence(variant, stages, ranks, alpha, universe)
        current = nxt
    raise NonTermination(f"no fixed point within {budget} stages")


def classify(code: int, seq: StageSequence) -> Classification:
    final = seq.final
    if code not in final.universe.codes:
        raise KeyError(f"code {code} is not in the universe")
    if code in final.t_plus:
        return Classification("true")
    if code in final.t_minus:
        return Classification("false")
    if code in final.p_plus:
        return Classification("paradoxical", seq.ranks[code])
    return Classification("independent")


def stage_invariants(seq: StageSequence) -> dict:
    """Per-stage structural laws, each reduced to a single pass/fail flag."""
    eng = compiled(seq.final.universe)
    seeds = eng.p_literals if seq.variant == TP_PLUS else frozenset()
    checks = {
        "t_consistent": True, "p_consistent": True, "sound": True,
        "p_minus_law": True, "anti_extension_law": True, "weakly_increasing": True,
    }
    prev = None
    for M in seq.stages:
        tp, tm, pp, pm = M.sets()
        checks["t_consistent"] &= not (tp & tm)
        checks["p_consistent"] &= not (pp & pm)
        checks["sound"] &= not ((tp | tm) & pp)
        if seq.variant == TP:
            checks["p_minus_law"] &= pm == tp | tm
        else:
            checks["p_minus_law"] &= pm >= (tp | tm | seeds)
        checks["anti_extension_law"] &= tm == frozenset(c for c in M.universe.codes if eng.neg[c] in tp)
        if prev is not None:
            checks["weakly_increasing"] &= prev <= M
        prev = M
    checks["fixed_point"] = seq.stages[-1].same_sets(seq.stages[-2])
    checks["ranks_on_final_p_plus"] = set(seq.ranks) == set(seq.final.p_plus)
    return checks
