"""Gödel coding, closed-term evaluation and finite sentence universes.

Named definitions receive the codes ``0 .. m-1`` in file order; every other
formula is interned on demand and gets the next free code. Formulas are
interned in *canonical form*: every closed term is replaced by the numeral of
its value. Because ``quote(name)`` evaluates to the code reserved for
``name``, a definition such as ``lam := ~T(quote(lam))`` is literally the
sentence ``~T(n)`` whose own code is ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import syntax as sx
from .syntax import (
    All, And, Eq, Ex, Fn, Neq, NotPar, NotTr, Num, Or, Par, Quote, Tr, Var,
    is_closed, negate,
)

MAX_ITER_T = 100_000


class CodingError(ValueError):
    pass


class UndefinedName(CodingError):
    pass


class NotRepresentable(CodingError):
    """A term's value is not in the coding table (universe or domain too small)."""


class ClosureError(CodingError):
    pass


@dataclass(frozen=True)
class DefinitionEnvironment:
    """Named self-referential sentences plus the numeric domain bound."""

    definitions: dict
    domain: int
    base: frozenset = frozenset()
    codes: dict = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "codes", {n: i for i, n in enumerate(self.definitions)})
        if self.domain < 0:
            raise CodingError("domain bound must be a natural number")
        if len(self.definitions) > self.domain + 1:
            raise CodingError(
                f"{len(self.definitions)} definitions do not fit under domain bound {self.domain}")
        for name in self.base:
            if name not in self.definitions:
                raise UndefinedName(f"#base refers to undefined sentence {name!r}")
        for name, phi in self.definitions.items():
            if not is_closed(phi):
                raise CodingError(f"definition of {name!r} is not a sentence")
            for q in sx.formula_quoted_names(phi):
                if q not in self.definitions:
                    raise UndefinedName(f"{name!r} quotes undefined sentence {q!r}")

    def code(self, name: str) -> int:
        try:
            return self.codes[name]
        except KeyError:
            raise UndefinedName(name) from None

    def with_domain(self, domain: int) -> "DefinitionEnvironment":
        return DefinitionEnvironment(dict(self.definitions), domain, self.base)


class CodingTable:
    """Append-only bijection between canonical formulas and natural numbers.

    Once :meth:`freeze` is called, looking up an unknown formula raises
    :class:`NotRepresentable` instead of assigning a new code.
    """

    def __init__(self, env: DefinitionEnvironment):
        self.env = env
        m = len(env.definitions)
        self._formulas: list = [None] * m
        self._codes: dict = {}
        self._pending = dict(enumerate(env.definitions.values()))
        self._busy: set = set()
        self.frozen = False
        for c in range(m):
            self._finalize(c)

    def __len__(self):
        return len(self._formulas)

    def _finalize(self, c: int):
        raw = self._pending.get(c)
        if raw is None:
            return
        if c in self._busy:
            name = list(self.env.definitions)[c]
            raise CodingError(f"definition of {name!r} depends on its own syntax through a builder")
        self._busy.add(c)
        canon = canonicalize(raw, self)
        self._busy.discard(c)
        if canon in self._codes:
            names = list(self.env.definitions)
            other = self._codes[canon]
            other_name = names[other] if other < len(names) else f"#{other}"
            raise CodingError(f"{names[c]!r} defines the same sentence as {other_name!r}")
        del self._pending[c]
        self._formulas[c] = canon
        self._codes[canon] = c

    def code_of(self, phi) -> int:
        """Code of a canonical formula, interning it when the table is open."""
        c = self._codes.get(phi)
        if c is not None:
            return c
        if self.frozen:
            raise NotRepresentable(f"formula outside the coding table: {phi!r}")
        c = len(self._formulas)
        self._formulas.append(phi)
        self._codes[phi] = c
        return c

    def lookup(self, phi):
        """Code of a canonical formula or ``None``; never interns."""
        return self._codes.get(phi)

    def decode(self, c: int):
        """Formula with code ``c``, or ``None`` when ``c`` codes nothing."""
        if 0 <= c < len(self._formulas):
            if c in self._pending:
                self._finalize(c)
            return self._formulas[c]
        return None

    def freeze(self):
        self.frozen = True

    def codes(self):
        return range(len(self._formulas))


def _decode_formula(table: CodingTable, c: int):
    phi = table.decode(c)
    if phi is None:
        raise NotRepresentable(f"{c} is not the code of a formula")
    return phi


def eval_term(t, table: CodingTable) -> int:
    """Value of the closed term ``t``."""
    if isinstance(t, Num):
        return t.value
    if isinstance(t, Quote):
        return table.env.code(t.name)
    if isinstance(t, Var):
        raise CodingError(f"cannot evaluate open term (free variable {t.name})")
    name = t.name
    if name in sx.BINDER_FUNCTIONS:
        body = _decode_formula(table, eval_term(t.args[1], table))
        q = All if name == "dAll" else Ex
        return table.code_of(q(t.args[0].name, body))
    vals = [eval_term(a, table) for a in t.args]
    if name == "S":
        return vals[0] + 1
    if name == "add":
        return vals[0] + vals[1]
    if name == "mul":
        return vals[0] * vals[1]
    if name == "num":
        # builders already wrap their arguments in numerals
        return vals[0]
    if name == "dEq":
        return table.code_of(Eq(Num(vals[0]), Num(vals[1])))
    if name == "dNeq":
        return table.code_of(Neq(Num(vals[0]), Num(vals[1])))
    if name in ("dT", "dP", "dnT", "dnP"):
        lit = {"dT": Tr, "dP": Par, "dnT": NotTr, "dnP": NotPar}[name]
        return table.code_of(lit(Num(vals[0])))
    if name == "dneg":
        return table.code_of(negate(_decode_formula(table, vals[0])))
    if name in ("dAnd", "dOr"):
        a = _decode_formula(table, vals[0])
        b = _decode_formula(table, vals[1])
        return table.code_of((And if name == "dAnd" else Or)(a, b))
    if name == "iterT":
        n, c = vals
        if n > MAX_ITER_T:
            raise NotRepresentable(f"iterT depth {n} exceeds {MAX_ITER_T}")
        _decode_formula(table, c)
        for _ in range(n):
            c = table.code_of(Tr(Num(c)))
        return c
    if name == "inst":
        phi = _decode_formula(table, vals[0])
        if not isinstance(phi, (All, Ex)):
            raise NotRepresentable(f"{vals[0]} does not code a quantified formula")
        return table.code_of(canonicalize(sx.substitute(phi.body, phi.var, Num(vals[1])), table))
    raise CodingError(f"unknown function symbol {name!r}")


def canonical_term(t, table: CodingTable):
    if sx.term_closed(t):
        return Num(eval_term(t, table))
    if isinstance(t, Fn):
        if t.name in sx.BINDER_FUNCTIONS:
            return Fn(t.name, (t.args[0],) + tuple(canonical_term(a, table) for a in t.args[1:]))
        return Fn(t.name, tuple(canonical_term(a, table) for a in t.args))
    return t


def canonicalize(phi, table: CodingTable):
    """Replace every closed subterm of ``phi`` by the numeral of its value."""
    return sx.map_terms(phi, lambda t, _bound: canonical_term(t, table))


def code_of_sentence(phi, table: CodingTable) -> int:
    return table.code_of(canonicalize(phi, table))


# -- universes -----------------------------------------------------------------

@dataclass
class SentenceUniverse:
    """Finite set of sentence codes closed under the operations the semantics needs."""

    table: CodingTable
    codes: frozenset
    origin: dict  # code -> closure rule that first added it

    @property
    def env(self) -> DefinitionEnvironment:
        return self.table.env

    @property
    def domain(self) -> int:
        return self.table.env.domain

    def __contains__(self, c) -> bool:
        return c in self.codes

    def __len__(self):
        return len(self.codes)

    def formula(self, c: int):
        return self.table.decode(c)

    def negation(self, c: int) -> int:
        return self.table.code_of(negate(self.table.decode(c)))

    def instances(self, c: int) -> tuple:
        phi = self.table.decode(c)
        return tuple(
            self.table.code_of(canonicalize(sx.substitute(phi.body, phi.var, Num(d)), self.table))
            for d in range(self.domain + 1))

    def name_of(self, c: int):
        names = list(self.env.definitions)
        return names[c] if c < len(names) else None


def build_universe(env_or_table, seeds=(), max_size: int = 200_000, freeze: bool = True) -> SentenceUniverse:
    """Close every interned sentence (plus ``seeds``) and freeze the table.

    Closure adds negations, immediate subformulas and all quantifier instances
    over ``0..domain``; referents of T/P literals are interned when their terms
    are evaluated during canonicalization. With ``freeze=False`` the table
    stays open so a larger universe can be built on top of this one.
    """
    table = env_or_table if isinstance(env_or_table, CodingTable) else CodingTable(env_or_table)
    if table.frozen:
        raise ClosureError("coding table already frozen")
    origin = {}
    names = list(table.env.definitions)
    for c in range(len(names)):
        origin[c] = "definition"
    for s in seeds:
        if not is_closed(s):
            raise ClosureError("universe seeds must be sentences")
        c = code_of_sentence(s, table)
        origin.setdefault(c, "seed")
    domain = table.env.domain
    i = 0
    while i < len(table):
        c, phi = i, table.decode(i)
        i += 1
        if not is_closed(phi):
            continue
        origin.setdefault(c, "referent")
        before = len(table)
        table.code_of(negate(phi))
        _mark(origin, before, len(table), "negation")
        before = len(table)
        if isinstance(phi, (And, Or)):
            table.code_of(phi.left)
            table.code_of(phi.right)
            _mark(origin, before, len(table), "subformula")
        elif isinstance(phi, (All, Ex)):
            for d in range(domain + 1):
                table.code_of(canonicalize(sx.substitute(phi.body, phi.var, Num(d)), table))
            _mark(origin, before, len(table), "instance")
        if len(table) > max_size:
            raise ClosureError(f"universe exceeds {max_size} sentences; lower the domain bound")
    if freeze:
        table.freeze()
    codes = frozenset(c for c in table.codes() if is_closed(table.decode(c)))
    return SentenceUniverse(table, codes, {c: origin[c] for c in codes})


def _mark(origin, lo, hi, rule):
    # codes interned while canonicalizing a new member are its T/P referents
    for c in range(lo, hi):
        origin.setdefault(c, rule)


# -- base paradoxicality -------------------------------------------------------

_TRUE, _FALSE = Eq(Num(0), Num(0)), Eq(Num(0), Num(1))


def _normalize(phi):
    """Evaluate closed arithmetic literals and simplify boolean units.

    Returns ``True``/``False`` when the formula collapses to a constant.
    Double negations need no cancelling: Tait syntax has none.
    """
    if isinstance(phi, (Eq, Neq)):
        if isinstance(phi.left, Num) and isinstance(phi.right, Num):
            same = phi.left.value == phi.right.value
            return same if isinstance(phi, Eq) else not same
        return phi
    if isinstance(phi, (And, Or)):
        a, b = _normalize(phi.left), _normalize(phi.right)
        unit = isinstance(phi, And)  # True is the unit of &, False of |
        if a is (not unit) or b is (not unit):
            return not unit
        if a is unit:
            return b
        if b is unit:
            return a
        return type(phi)(a, b)
    if isinstance(phi, (All, Ex)):
        body = _normalize(phi.body)
        return body if isinstance(body, bool) else type(phi)(phi.var, body)
    return phi


def is_base_paradoxical(code: int, table_or_universe) -> bool:
    """The recognizer B: does the sentence normalize to ``~T`` of its own code?"""
    table = getattr(table_or_universe, "table", table_or_universe)
    phi = table.decode(code)
    if phi is None or not is_closed(phi):
        return False
    names = list(table.env.definitions)
    if code < len(names) and names[code] in table.env.base:
        return True
    norm = _normalize(phi)
    return isinstance(norm, NotTr) and norm.term == Num(code)


def pi(code: int, table_or_universe) -> bool:
    """Π(x) := B(x) or B(neg x)."""
    table = getattr(table_or_universe, "table", table_or_universe)
    phi = table.decode(code)
    if phi is None or not is_closed(phi):
        return False
    if is_base_paradoxical(code, table):
        return True
    neg = table.lookup(negate(phi))
    if neg is None:
        if table.frozen:
            return False
        neg = table.code_of(negate(phi))
    return is_base_paradoxical(neg, table)
