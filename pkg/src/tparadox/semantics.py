"""Strong Kleene satisfaction over partial models of T and P."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from . import syntax as sx
from .coding import CodingTable, build_universe, canonicalize
from .syntax import All, And, Eq, Neq, NotPar, NotTr, Num, Or, Par, Tr, negate


class TruthValue(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"

    def __str__(self):
        return self.value


TRUE, FALSE, UNDEFINED = TruthValue.TRUE, TruthValue.FALSE, TruthValue.UNDEFINED


@dataclass(frozen=True)
class PartialModel:
    """The standard model of arithmetic with T = (T+, T-) and P = (P+, P-)."""

    universe: object
    t_plus: frozenset = frozenset()
    t_minus: frozenset = frozenset()
    p_plus: frozenset = frozenset()
    p_minus: frozenset = frozenset()

    def __post_init__(self):
        for name in ("t_plus", "t_minus", "p_plus", "p_minus"):
            s = frozenset(getattr(self, name))
            object.__setattr__(self, name, s)
            stray = s - self.universe.codes
            if stray:
                raise ValueError(f"{name} contains codes outside the universe: {sorted(stray)[:5]}")

    @property
    def env(self):
        return self.universe.env

    def sets(self) -> tuple:
        return self.t_plus, self.t_minus, self.p_plus, self.p_minus

    def __le__(self, other: "PartialModel") -> bool:
        return all(a <= b for a, b in zip(self.sets(), other.sets()))

    def same_sets(self, other: "PartialModel") -> bool:
        return self.sets() == other.sets()


def empty_model(universe) -> PartialModel:
    return PartialModel(universe)


def _literal(code: int, pos: frozenset, neg: frozenset) -> TruthValue:
    if code in pos:
        return TRUE
    if code in neg:
        return FALSE
    return UNDEFINED


def _flip(v: TruthValue) -> TruthValue:
    return FALSE if v is TRUE else TRUE if v is FALSE else UNDEFINED


def _value(M: PartialModel, phi, table) -> TruthValue:
    if isinstance(phi, (Eq, Neq)):
        same = phi.left.value == phi.right.value
        return TRUE if same == isinstance(phi, Eq) else FALSE
    if isinstance(phi, (Tr, NotTr)):
        v = _literal(phi.term.value, M.t_plus, M.t_minus)
        return v if isinstance(phi, Tr) else _flip(v)
    if isinstance(phi, (Par, NotPar)):
        v = _literal(phi.term.value, M.p_plus, M.p_minus)
        return v if isinstance(phi, Par) else _flip(v)
    if isinstance(phi, (And, Or)):
        parts = (_value(M, phi.left, table), _value(M, phi.right, table))
    else:
        parts = tuple(
            _value(M, canonicalize(sx.substitute(phi.body, phi.var, Num(d)), table), table)
            for d in range(M.universe.domain + 1))
    # & and all: false wins; | and ex: true wins
    absorbing, unit = (FALSE, TRUE) if isinstance(phi, (And, All)) else (TRUE, FALSE)
    if absorbing in parts:
        return absorbing
    if all(p is unit for p in parts):
        return unit
    return UNDEFINED


def value(M: PartialModel, phi) -> TruthValue:
    """Strong Kleene value of the sentence ``phi`` in ``M``.

    T and P applied to a number that is not a sentence code of the universe
    are undefined. Quantifiers range over ``0..domain``.
    """
    if not sx.is_closed(phi):
        raise sx.FormulaError("value() needs a sentence")
    table = M.universe.table
    return _value(M, canonicalize(phi, table), table)


def sat_sequent(M: PartialModel, sequent) -> bool:
    """M satisfies Γ ⇒ Δ: if every γ is true then some δ is true."""
    ant, suc = sequent
    if all(value(M, g) is TRUE for g in ant):
        return any(value(M, d) is TRUE for d in suc)
    return True


def is_consistent(M: PartialModel) -> bool:
    return not (M.t_plus & M.t_minus) and not (M.p_plus & M.p_minus)


def is_sound(M: PartialModel) -> bool:
    """No sentence is both determinate (φ ∨ ¬φ true) and meets a closure condition."""
    from .jump import p_condition

    universe = M.universe
    table = universe.table
    for c in universe.codes:
        phi = table.decode(c)
        if value(M, Or(phi, negate(phi))) is TRUE and p_condition(M, c):
            return False
    return True


# -- countermodels ---------------------------------------------------------------

def _candidates(universe, max_candidates: int):
    U = universe.codes
    none = frozenset()
    yield PartialModel(universe)
    yield PartialModel(universe, t_plus=U)
    yield PartialModel(universe, t_minus=U)
    yield PartialModel(universe, p_plus=U)
    yield PartialModel(universe, p_minus=U)
    order = sorted(U)
    emitted = 5
    for c in order:
        for slot in ("t_plus", "t_minus", "p_plus", "p_minus"):
            yield PartialModel(universe, **{slot: frozenset((c,))})
            emitted += 1
    for a, b in itertools.permutations(order, 2):
        if emitted >= max_candidates:
            return
        yield PartialModel(universe, t_plus=frozenset((a,)), t_minus=frozenset((b,)), p_plus=none)
        emitted += 1


def search_countermodel(lhs, rhs, env, max_candidates: int = 50_000):
    """Look for a consistent model in which ``lhs`` and ``rhs`` take different values.

    The family searched is fixed: the empty model, the four models putting the
    whole universe into one of T+, T-, P+, P-, every single-code assignment,
    and every pair (a in T+, b in T-). ``None`` does not prove equivalence.
    """
    table = CodingTable(env)
    universe = build_universe(table, seeds=(lhs, rhs))
    for M in _candidates(universe, max_candidates):
        if value(M, lhs) is not value(M, rhs):
            return M
    return None


__all__ = [
    "TruthValue", "TRUE", "FALSE", "UNDEFINED", "PartialModel", "empty_model", "value",
    "sat_sequent", "is_consistent", "is_sound", "search_countermodel",
]
