"""Tait-style abstract syntax for the language of arithmetic with T and P.

Formulas are built from literals (``=``, ``!=``, ``T``, ``~T``, ``P``, ``~P``)
by ``&``, ``|``, ``all`` and ``ex``. There is no negation node: negation is
the De Morgan dual computed by :func:`negate`.

Terms are numerals, variables, ``quote(name)`` and applications of the
function symbols in :data:`FUNCTIONS`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class FormulaError(ValueError):
    """Malformed term or formula, or an unsupported substitution."""


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise FormulaError(f"numerals are natural numbers, got {self.value}")


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Quote:
    """The numeral of the code of a named sentence."""
    name: str


@dataclass(frozen=True)
class Fn:
    name: str
    args: tuple


Term = Union[Num, Var, Quote, Fn]

# name -> arity. Syntactic builders take *values* and wrap them in numerals,
# e.g. dT(n) is the code of T(n) and dEq(a, b) is the code of a = b.
FUNCTIONS = {
    "S": 1,
    "add": 2,
    "mul": 2,
    "num": 1,
    "dEq": 2,
    "dNeq": 2,
    "dAnd": 2,
    "dOr": 2,
    "dAll": 2,   # first argument is a variable *name*, not evaluated
    "dEx": 2,
    "dT": 1,
    "dP": 1,
    "dnT": 1,
    "dnP": 1,
    "dneg": 1,
    "iterT": 2,  # iterT(n, c): code of T^n applied to the sentence coded by c
    "inst": 2,   # inst(c, d): code of the d-instance of the quantified sentence c
}

BINDER_FUNCTIONS = ("dAll", "dEx")


def fn(name: str, *args: Term) -> Fn:
    if name not in FUNCTIONS:
        raise FormulaError(f"unknown function symbol {name!r}")
    if len(args) != FUNCTIONS[name]:
        raise FormulaError(f"{name} takes {FUNCTIONS[name]} arguments, got {len(args)}")
    if name in BINDER_FUNCTIONS and not isinstance(args[0], Var):
        raise FormulaError(f"first argument of {name} must be a variable")
    return Fn(name, tuple(args))


def term_free_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Fn):
        args = t.args[1:] if t.name in BINDER_FUNCTIONS else t.args
        out = frozenset()
        for a in args:
            out |= term_free_vars(a)
        return out
    return frozenset()


def term_closed(t: Term) -> bool:
    return not term_free_vars(t)


def term_subst(t: Term, v: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == v else t
    if isinstance(t, Fn):
        if t.name in BINDER_FUNCTIONS:
            return Fn(t.name, (t.args[0],) + tuple(term_subst(a, v, s) for a in t.args[1:]))
        return Fn(t.name, tuple(term_subst(a, v, s) for a in t.args))
    return t


def quoted_names(t: Term) -> frozenset:
    if isinstance(t, Quote):
        return frozenset((t.name,))
    if isinstance(t, Fn):
        out = frozenset()
        for a in t.args:
            out |= quoted_names(a)
        return out
    return frozenset()


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Neq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Tr:
    term: Term


@dataclass(frozen=True)
class NotTr:
    term: Term


@dataclass(frozen=True)
class Par:
    term: Term


@dataclass(frozen=True)
class NotPar:
    term: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class All:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Ex:
    var: str
    body: "Formula"


Formula = Union[Eq, Neq, Tr, NotTr, Par, NotPar, And, Or, All, Ex]

ARITH_LITERALS = (Eq, Neq)
PRED_LITERALS = (Tr, NotTr, Par, NotPar)
LITERALS = ARITH_LITERALS + PRED_LITERALS
CONNECTIVES = (And, Or)
QUANTIFIERS = (All, Ex)

_DUAL = {Eq: Neq, Neq: Eq, Tr: NotTr, NotTr: Tr, Par: NotPar, NotPar: Par,
         And: Or, Or: And, All: Ex, Ex: All}


def negate(phi: Formula) -> Formula:
    """De Morgan dual of ``phi``; an involution."""
    cls = type(phi)
    if cls in (Eq, Neq):
        return _DUAL[cls](phi.left, phi.right)
    if cls in PRED_LITERALS:
        return _DUAL[cls](phi.term)
    if cls in CONNECTIVES:
        return _DUAL[cls](negate(phi.left), negate(phi.right))
    if cls in QUANTIFIERS:
        return _DUAL[cls](phi.var, negate(phi.body))
    raise FormulaError(f"not a formula: {phi!r}")


def free_vars(phi: Formula) -> frozenset:
    if isinstance(phi, ARITH_LITERALS):
        return term_free_vars(phi.left) | term_free_vars(phi.right)
    if isinstance(phi, PRED_LITERALS):
        return term_free_vars(phi.term)
    if isinstance(phi, CONNECTIVES):
        return free_vars(phi.left) | free_vars(phi.right)
    return free_vars(phi.body) - {phi.var}


def is_closed(phi: Formula) -> bool:
    return not free_vars(phi)


def map_terms(phi: Formula, f) -> Formula:
    """Rebuild ``phi`` applying ``f(term, bound_vars)`` to every top-level term."""
    def go(p, bound):
        if isinstance(p, ARITH_LITERALS):
            return type(p)(f(p.left, bound), f(p.right, bound))
        if isinstance(p, PRED_LITERALS):
            return type(p)(f(p.term, bound))
        if isinstance(p, CONNECTIVES):
            return type(p)(go(p.left, bound), go(p.right, bound))
        return type(p)(p.var, go(p.body, bound | {p.var}))
    return go(phi, frozenset())


def _subst(phi: Formula, v: str, t: Term) -> Formula:
    t_vars = term_free_vars(t)

    def go(p):
        if isinstance(p, ARITH_LITERALS):
            return type(p)(term_subst(p.left, v, t), term_subst(p.right, v, t))
        if isinstance(p, PRED_LITERALS):
            return type(p)(term_subst(p.term, v, t))
        if isinstance(p, CONNECTIVES):
            return type(p)(go(p.left), go(p.right))
        if p.var == v:
            return p
        if p.var in t_vars and v in free_vars(p.body):
            raise FormulaError(f"substituting for {v} would capture {p.var}")
        return type(p)(p.var, go(p.body))

    return go(phi)


def substitute(phi: Formula, v: str, t: Term) -> Formula:
    """Replace free occurrences of variable ``v`` by the closed term ``t``."""
    if not term_closed(t):
        raise FormulaError("substitute() requires a closed term")
    return _subst(phi, v, t)


def substitute_open(phi: Formula, v: str, t: Term) -> Formula:
    """Like :func:`substitute` but admits open terms; raises on variable capture."""
    return _subst(phi, v, t)


def formula_quoted_names(phi: Formula) -> frozenset:
    out = frozenset()
    if isinstance(phi, ARITH_LITERALS):
        return quoted_names(phi.left) | quoted_names(phi.right)
    if isinstance(phi, PRED_LITERALS):
        return quoted_names(phi.term)
    if isinstance(phi, CONNECTIVES):
        return formula_quoted_names(phi.left) | formula_quoted_names(phi.right)
    return out | formula_quoted_names(phi.body)


def size(phi: Formula) -> int:
    """Number of formula nodes (terms are not counted)."""
    if isinstance(phi, LITERALS):
        return 1
    if isinstance(phi, CONNECTIVES):
        return 1 + size(phi.left) + size(phi.right)
    return 1 + size(phi.body)


def is_arithmetic(phi: Formula) -> bool:
    """True when ``phi`` mentions neither T nor P."""
    if isinstance(phi, ARITH_LITERALS):
        return True
    if isinstance(phi, PRED_LITERALS):
        return False
    if isinstance(phi, CONNECTIVES):
        return is_arithmetic(phi.left) and is_arithmetic(phi.right)
    return is_arithmetic(phi.body)
