"""Text syntax for formulas and sentence-definition files.

Formula grammar (``|`` binds loosest, quantifier bodies extend to the right)::

    formula := conj ('|' conj)*
    conj    := unary ('&' unary)*
    unary   := '~' unary | ('all' | 'ex') VAR '.' formula | atom
    atom    := 'T(' term ')' | 'P(' term ')' | term '=' term | term '!=' term
             | '(' formula ')' | NAME          -- NAME inlines a prior definition
    term    := prod ('+' prod)*
    prod    := primary ('*' primary)*
    primary := NUMBER | VAR | 'quote(' NAME ')' | FUNC '(' term, ... ')' | '(' term ')'

``~`` is pushed inward at parse time, so ``~T(x)`` parses to ``NotTr(x)``.

Definition files hold one ``name := formula`` per line, ``#domain N`` and
``#base name`` directives, and ``--`` comments.
"""
from __future__ import annotations

import re

from .syntax import (
    FUNCTIONS, BINDER_FUNCTIONS, All, And, Eq, Ex, FormulaError, Neq, NotPar,
    NotTr, Num, Or, Par, Quote, Tr, Var, fn, negate,
)


class ParseError(FormulaError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_']*)|(:=|!=|[()~&|.,=+*]))")
RESERVED = {"T", "P", "all", "ex", "quote"} | set(FUNCTIONS)


def tokenize(text: str) -> list:
    toks, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        num, ident, sym = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif ident is not None:
            toks.append(("id", ident))
        else:
            toks.append(("sym", sym))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text: str, macros: dict | None = None):
        self.toks = tokenize(text)
        self.i = 0
        self.macros = macros or {}

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else ("eof", None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        return tok[1]

    def at(self, value):
        return self.peek()[0] == "sym" and self.peek()[1] == value

    def done(self):
        if self.peek()[0] != "eof":
            raise ParseError(f"trailing input at {self.peek()[1]!r}")

    # formulas
    def formula(self):
        left = self.conj()
        while self.at("|"):
            self.next()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.at("&"):
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.at("~"):
            self.next()
            return negate(self.unary())
        kind, val = self.peek()
        if kind == "id" and val in ("all", "ex"):
            self.next()
            var = self.expect("id")
            if var in RESERVED:
                raise ParseError(f"reserved word {var!r} used as a variable")
            self.expect("sym", ".")
            body = self.formula()
            return All(var, body) if val == "all" else Ex(var, body)
        return self.atom()

    def atom(self):
        kind, val = self.peek()
        if kind == "id" and val in ("T", "P") and self.peek(1) == ("sym", "("):
            self.next()
            self.next()
            t = self.term()
            self.expect("sym", ")")
            return Tr(t) if val == "T" else Par(t)
        if kind == "id" and val in self.macros and self.peek(1) not in (
                ("sym", "="), ("sym", "!="), ("sym", "+"), ("sym", "*")):
            self.next()
            return self.macros[val]
        if self.at("("):
            save = self.i
            try:
                self.next()
                f = self.formula()
                self.expect("sym", ")")
                return f
            except ParseError:
                self.i = save
        left = self.term()
        op = self.next()
        if op == ("sym", "="):
            return Eq(left, self.term())
        if op == ("sym", "!="):
            return Neq(left, self.term())
        raise ParseError(f"expected '=' or '!=', got {op[1]!r}")

    # terms
    def term(self):
        left = self.prod()
        while self.at("+"):
            self.next()
            left = fn("add", left, self.prod())
        return left

    def prod(self):
        left = self.primary()
        while self.at("*"):
            self.next()
            left = fn("mul", left, self.primary())
        return left

    def primary(self):
        kind, val = self.next()
        if kind == "num":
            return Num(val)
        if kind == "sym" and val == "(":
            t = self.term()
            self.expect("sym", ")")
            return t
        if kind != "id":
            raise ParseError(f"expected a term, got {val!r}")
        if val == "quote":
            self.expect("sym", "(")
            name = self.expect("id")
            self.expect("sym", ")")
            return Quote(name)
        if val in FUNCTIONS and self.at("("):
            self.next()
            args = [self.term()]
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect("sym", ")")
            return fn(val, *args)
        if val in RESERVED:
            raise ParseError(f"reserved word {val!r} used as a variable")
        return Var(val)


def parse_formula(text: str, macros: dict | None = None):
    p = _Parser(text, macros)
    f = p.formula()
    p.done()
    return f


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


# -- printing ----------------------------------------------------------------

def format_term(t) -> str:
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Quote):
        return f"quote({t.name})"
    if t.name == "add":
        return f"({format_term(t.args[0])} + {format_term(t.args[1])})"
    if t.name == "mul":
        return f"({format_term(t.args[0])} * {format_term(t.args[1])})"
    return f"{t.name}({', '.join(format_term(a) for a in t.args)})"


def format_formula(phi) -> str:
    if isinstance(phi, Eq):
        return f"{format_term(phi.left)} = {format_term(phi.right)}"
    if isinstance(phi, Neq):
        return f"{format_term(phi.left)} != {format_term(phi.right)}"
    if isinstance(phi, Tr):
        return f"T({format_term(phi.term)})"
    if isinstance(phi, NotTr):
        return f"~T({format_term(phi.term)})"
    if isinstance(phi, Par):
        return f"P({format_term(phi.term)})"
    if isinstance(phi, NotPar):
        return f"~P({format_term(phi.term)})"
    if isinstance(phi, (All, Ex)):
        q = "all" if isinstance(phi, All) else "ex"
        return f"{q} {phi.var}. {format_formula(phi.body)}"
    op = " & " if isinstance(phi, And) else " | "
    # left operand may be the same connective (left-associative chains)
    left = format_formula(phi.left)
    if not (type(phi.left) is type(phi) or _is_atomic(phi.left)):
        left = f"({left})"
    right = format_formula(phi.right)
    if not _is_atomic(phi.right):
        right = f"({right})"
    return left + op + right


def _is_atomic(phi) -> bool:
    return not isinstance(phi, (And, Or, All, Ex))


# -- definition files ----------------------------------------------------------

_DEF = re.compile(r"^([A-Za-z_][A-Za-z0-9_']*)\s*:=\s*(.+)$")


def parse_definitions(text: str, domain: int | None = None):
    """Parse a definition file into a :class:`~tparadox.coding.DefinitionEnvironment`.

    ``domain`` overrides a ``#domain`` directive when given.
    """
    from .coding import DefinitionEnvironment

    entries, base, file_domain = [], [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("--", 1)[0].strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["domain"] and len(parts) == 2 and parts[1].isdigit():
                file_domain = int(parts[1])
            elif parts[:1] == ["base"] and len(parts) == 2:
                base.append(parts[1])
            else:
                raise ParseError(f"line {lineno}: unknown directive {line!r}")
            continue
        m = _DEF.match(line)
        if not m:
            raise ParseError(f"line {lineno}: expected 'name := formula'")
        entries.append((lineno, m.group(1), m.group(2)))

    names = [name for _, name, _ in entries]
    for name in names:
        if name in RESERVED:
            raise ParseError(f"reserved word {name!r} used as a sentence name")
    if len(set(names)) != len(names):
        raise ParseError("duplicate sentence name")
    macros, definitions = {}, {}
    for lineno, name, body in entries:
        try:
            phi = parse_formula(body, macros)
        except FormulaError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        definitions[name] = phi
        macros[name] = phi
    if domain is None:
        domain = file_domain if file_domain is not None else max(len(names) - 1, 0)
    return DefinitionEnvironment(definitions, domain, frozenset(base))


def format_definitions(env) -> str:
    lines = [f"#domain {env.domain}"]
    lines += [f"#base {name}" for name in sorted(env.base)]
    lines += [f"{name} := {format_formula(phi)}" for name, phi in env.definitions.items()]
    return "\n".join(lines) + "\n"


__all__ = [
    "ParseError", "parse_formula", "parse_term", "format_formula", "format_term",
    "parse_definitions", "format_definitions", "BINDER_FUNCTIONS",
]
