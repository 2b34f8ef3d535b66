"""Proof files, derived-rule macros and the bundled proof corpus.

A proof file is JSON::

    {"defs": "zoo.defs", "system": "TP", "proof": NODE}

where ``defs`` is a definition file relative to the proof file and every
``NODE`` has the keys ``rule``, ``params``, ``conclusion`` (``{"ant": [...],
"suc": [...]}`` with formulas in the DSL) and ``premises``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import syntax as sx
from .calculus import ProofTree, Sequent, instantiate_axiom
from .coding import CodingTable, DefinitionEnvironment, canonicalize, eval_term, pi
from .dsl import format_formula, format_term, parse_definitions, parse_formula, parse_term
from .syntax import And, Eq, NotPar, NotTr, Num, Or, Par, Quote, Tr, fn, negate

_FORMULA_PARAMS = ("formula",)
_TERM_PARAMS = ("term", "s", "t")


class ProofFormatError(ValueError):
    pass


# -- JSON ------------------------------------------------------------------------

def _fmt_set(fs) -> list:
    return sorted(format_formula(f) for f in fs)


def tree_to_json(node: ProofTree) -> dict:
    params = {}
    for key, val in node.params.items():
        if key in _FORMULA_PARAMS:
            params[key] = format_formula(val)
        elif key in _TERM_PARAMS:
            params[key] = format_term(val)
        elif key == "args":
            params[key] = [format_term(a) for a in val]
        else:
            params[key] = val
    return {
        "rule": node.rule,
        "params": dict(sorted(params.items())),
        "conclusion": {"ant": _fmt_set(node.conclusion.ant), "suc": _fmt_set(node.conclusion.suc)},
        "premises": [tree_to_json(p) for p in node.premises],
    }


def tree_from_json(obj: dict, path: str = "root") -> ProofTree:
    try:
        rule = obj["rule"]
        raw = obj.get("params", {})
        concl = obj["conclusion"]
        premises = obj.get("premises", [])
        params = {}
        for key, val in raw.items():
            if key in _FORMULA_PARAMS:
                params[key] = parse_formula(val)
            elif key in _TERM_PARAMS:
                params[key] = parse_term(val)
            elif key == "args":
                params[key] = [parse_term(a) for a in val]
            else:
                params[key] = val
        seq = Sequent.of(map(parse_formula, concl["ant"]), map(parse_formula, concl["suc"]))
    except (KeyError, TypeError, sx.FormulaError) as exc:
        raise ProofFormatError(f"{path}: malformed proof node ({exc})") from None
    kids = tuple(tree_from_json(p, f"{path}.{i}") for i, p in enumerate(premises))
    return ProofTree(seq, rule, params, kids)


def dumps_proof(node: ProofTree, defs: str | None = None, system: str | None = None) -> str:
    body = tree_to_json(node)
    if defs is not None or system is not None:
        body = {"defs": defs, "system": system, "proof": body}
    return json.dumps(body, indent=2, ensure_ascii=False) + "\n"


@dataclass
class ProofFile:
    proof: ProofTree
    env: DefinitionEnvironment | None
    system: str | None
    defs: str | None


def loads_proof(text: str, base: Path | None = None, domain: int | None = None) -> ProofFile:
    obj = json.loads(text)
    if "proof" not in obj:
        return ProofFile(tree_from_json(obj), None, None, None)
    env = None
    if obj.get("defs") and base is not None:
        # definitions are resolved relative to the proof file
        env = parse_definitions((Path(base) / obj["defs"]).read_text(), domain)
    return ProofFile(tree_from_json(obj["proof"]), env, obj.get("system"), obj.get("defs"))


def load_proof(path, domain: int | None = None) -> ProofFile:
    path = Path(path)
    return loads_proof(path.read_text(), path.parent, domain)


# -- construction helpers ------------------------------------------------------

class Builder:
    """Small helpers that compute conclusions so proofs can be written bottom-up."""

    def __init__(self, table_or_env):
        self.table = table_or_env if isinstance(table_or_env, CodingTable) else CodingTable(table_or_env)

    def canon(self, phi):
        return canonicalize(phi, self.table)

    def _drop(self, fs, phi):
        c = self.canon(phi)
        return frozenset(f for f in fs if self.canon(f) != c)

    def axiom(self, schema, *args, direction="lr") -> ProofTree:
        seq = instantiate_axiom(schema, args, self.table, direction)
        return ProofTree(seq, "axiom", {"schema": schema, "args": list(args), "direction": direction})

    def arith(self, ant=(), suc=()) -> ProofTree:
        return ProofTree(Sequent.of(ant, suc), "axiom", {"schema": "arith"})

    def init(self, phi) -> ProofTree:
        return ProofTree(Sequent.of([phi], [phi]), "init", {"formula": phi})

    def ref(self, t) -> ProofTree:
        return ProofTree(Sequent.of([], [Eq(t, t)]), "Ref", {"term": t})

    def lw(self, p, phi) -> ProofTree:
        s = p.conclusion
        return ProofTree(Sequent(s.ant | {phi}, s.suc), "LW", {"formula": phi}, (p,))

    def rw(self, p, phi) -> ProofTree:
        s = p.conclusion
        return ProofTree(Sequent(s.ant, s.suc | {phi}), "RW", {"formula": phi}, (p,))

    def cut(self, left, right, phi) -> ProofTree:
        """Cut on ``phi``; contexts are merged by adding weakenings where needed."""
        l, r = left.conclusion, right.conclusion
        ant = l.ant | self._drop(r.ant, phi)
        suc = self._drop(l.suc, phi) | r.suc
        left = self._weaken(left, ant, suc | {phi}, keep=phi, side="suc")
        right = self._weaken(right, ant | {phi}, suc, keep=phi, side="ant")
        return ProofTree(Sequent(ant, suc), "Cut", {"formula": phi}, (left, right))

    def _weaken(self, p, ant, suc, keep, side):
        have_a = {self.canon(f) for f in p.conclusion.ant}
        for f in sorted(ant, key=format_formula):
            c = self.canon(f)
            if c not in have_a and not (side == "ant" and c == self.canon(keep)):
                p = self.lw(p, f)
                have_a.add(c)
        have_s = {self.canon(f) for f in p.conclusion.suc}
        for f in sorted(suc, key=format_formula):
            c = self.canon(f)
            if c not in have_s and not (side == "suc" and c == self.canon(keep)):
                p = self.rw(p, f)
                have_s.add(c)
        return p

    def lneg(self, p, phi) -> ProofTree:
        s = p.conclusion
        return ProofTree(Sequent(s.ant | {negate(phi)}, self._drop(s.suc, phi)), "Lneg", {"formula": phi}, (p,))

    def ror(self, p, phi) -> ProofTree:
        s = p.conclusion
        suc = self._drop(self._drop(s.suc, phi.left), phi.right) | {phi}
        return ProofTree(Sequent(s.ant, suc), "Ror", {"formula": phi}, (p,))

    def land(self, p, phi) -> ProofTree:
        s = p.conclusion
        ant = self._drop(self._drop(s.ant, phi.left), phi.right) | {phi}
        return ProofTree(Sequent(ant, s.suc), "Land", {"formula": phi}, (p,))

    def rand(self, left, right, phi) -> ProofTree:
        l, r = left.conclusion, right.conclusion
        ant = l.ant | r.ant
        suc = self._drop(l.suc, phi.left) | self._drop(r.suc, phi.right) | {phi}
        rest = self._drop(suc, phi)
        left = self._weaken(left, ant, rest | {phi.left}, keep=phi.left, side="none")
        right = self._weaken(right, ant, rest | {phi.right}, keep=phi.right, side="none")
        return ProofTree(Sequent(ant, suc), "Rand", {"formula": phi}, (left, right))

    def rall(self, p, phi, eigen) -> ProofTree:
        s = p.conclusion
        inst = sx.substitute_open(phi.body, phi.var, sx.Var(eigen))
        return ProofTree(Sequent(s.ant, self._drop(s.suc, inst) | {phi}), "Rall", {"formula": phi, "eigen": eigen}, (p,))


# -- derived rules -------------------------------------------------------------

MACROS = ("p-neg-equiv", "p-implies-not-tlem", "not-p-not-pp")


def _paradox_axiom(b: Builder, c) -> ProofTree:
    """⇒ P c from P1, available when c is (the negation of) a base paradoxical sentence."""
    if not pi(eval_term(c, b.table), b.table):
        raise ProofFormatError("⇒ P c needs a premise unless c is base paradoxical")
    return b.cut(b.ref(Num(0)), b.axiom("P1", c), Eq(Num(0), Num(0)))


def expand_macro(name: str, params: dict, table_or_env) -> ProofTree:
    """Full proof tree for a derived rule or sequent.

    * ``p-neg-equiv`` with ``formula`` (an atomic T/P sentence) and
      ``direction``: ``P φ ⇒ P ¬φ`` ("lr") or its converse ("rl").
    * ``p-implies-not-tlem`` with ``term`` (a sentence code c) and optional
      ``premise`` proving ``Γ ⇒ Δ, P c``; concludes ``T(c ∨ ¬c), Γ ⇒ Δ``.
    * ``not-p-not-pp`` with ``term`` t: ``¬P t ⇒ ¬P ¬P t``.
    * ``p-not-pp`` with ``term`` t: ``P t ⇒ ¬P P t``.
    """
    b = Builder(table_or_env)
    if name == "p-neg-equiv":
        return _p_neg_equiv(b, params["formula"], params.get("direction", "lr"))
    if name == "p-implies-not-tlem":
        c = params["term"]
        premise = params.get("premise") or _paradox_axiom(b, c)
        i1 = b.axiom("I1", c)                              # T(c ∨ ¬c) ⇒ ¬P c
        flipped = b.lneg(i1, NotPar(c))                    # P c, T(c ∨ ¬c) ⇒
        return b.cut(premise, flipped, Par(c))
    if name in ("not-p-not-pp", "p-not-pp"):
        t = params["term"]
        pos, neg = fn("dP", t), fn("dnP", t)
        if name == "p-not-pp":
            start, first, second = b.axiom("T2a", t), pos, neg
        else:
            start, first, second = b.axiom("T2b", t), neg, pos
        # A ⇒ T a, then T a ⇒ T a ∨ T b ⇒ T(a ∨ b), then I1 at a
        disj = Or(Tr(first), Tr(second))
        weak = b.ror(b.rw(b.init(Tr(first)), Tr(second)), disj)
        t4 = b.axiom("T4b", first, second)
        to_lem = b.cut(start, b.cut(weak, t4, disj), Tr(first))
        i1 = b.axiom("I1", first)
        return b.cut(to_lem, i1, Tr(fn("dOr", first, second)))
    raise ProofFormatError(f"unknown macro {name!r}; choose from {MACROS + ('p-not-pp',)}")


def _p_neg_equiv(b: Builder, phi, direction) -> ProofTree:
    if not sx.is_closed(phi) or not isinstance(phi, sx.PRED_LITERALS):
        raise ProofFormatError("p-neg-equiv is supported for atomic T/P sentences only")
    t = phi.term
    if isinstance(phi, (Tr, NotTr)):
        schema = "P2a"
        positive = isinstance(phi, Tr)
    else:
        schema = "P2b"
        positive = isinstance(phi, Par)
    # P2: P(¬A t) ⇔ P(A t); "lr" from φ's side when φ is the negated literal
    if positive:
        direction = {"lr": "rl", "rl": "lr"}[direction]
    return b.axiom(schema, t, direction=direction)


# -- bundled corpus --------------------------------------------------------------

def bundled_dir():
    return resources.files("tparadox") / "data"


def bundled_defs() -> str:
    return (bundled_dir() / "zoo.defs").read_text()


def corpus(env: DefinitionEnvironment) -> dict:
    """name -> (system, extra schemas, proof, expected cross-validation)."""
    b = Builder(env)
    lam = Quote("lam")
    out = {
        "p_not_pp": ("TP", (), expand_macro("p-not-pp", {"term": lam}, b.table), True),
        "not_p_not_pp": ("TP", (), expand_macro("not-p-not-pp", {"term": lam}, b.table), True),
        "tlem_rule_lam": ("TP", (), expand_macro("p-implies-not-tlem", {"term": lam}, b.table), True),
        "p_neg_atomic": ("TP", (), expand_macro("p-neg-equiv", {"formula": Tr(lam)}, b.table), True),
        "negative_control": ("TP", ("I1c",), negative_control(b), False),
        "broken_eigenvariable": ("SK", (), broken_eigenvariable(b), None),
    }
    return out


def negative_control(b: Builder) -> ProofTree:
    """⇒ Tλ ∧ ¬Tλ from the contrapositive of I1."""
    lam = Quote("lam")
    nlam = fn("dneg", lam)
    lem = fn("dOr", lam, nlam)
    p_lam = _paradox_axiom(b, lam)                                   # ⇒ Pλ
    not_t_lem = b.cut(p_lam, b.axiom("I1c", lam), Par(lam))          # ⇒ ¬T(λ ∨ ¬λ)
    t_dual = b.cut(not_t_lem, b.axiom("T3b", lem, direction="rl"), NotTr(lem))  # ⇒ T(¬(λ ∨ ¬λ))
    both = And(Tr(nlam), Tr(lam))
    split = b.cut(t_dual, b.axiom("T4a", nlam, lam, direction="rl"), Tr(fn("dneg", lem)))
    t_nlam = b.cut(split, b.land(b.lw(b.init(Tr(nlam)), Tr(lam)), both), both)
    t_lam = b.cut(split, b.land(b.lw(b.init(Tr(lam)), Tr(nlam)), both), both)
    not_t_lam = b.cut(t_nlam, b.axiom("T3b", lam), Tr(nlam))
    return b.rand(t_lam, not_t_lam, And(Tr(lam), NotTr(lam)))


def broken_eigenvariable(b: Builder) -> ProofTree:
    """R∀ whose eigenvariable stays free in the conclusion."""
    x = sx.Var("x")
    phi = sx.All("y", Eq(sx.Var("y"), sx.Var("y")))
    body = Eq(x, x)
    leaf = ProofTree(Sequent.of([body], [body]), "init", {"formula": body})
    return ProofTree(Sequent.of([body], [phi]), "Rall", {"formula": phi, "eigen": "x"}, (leaf,))


def write_corpus(directory) -> list:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    text = bundled_defs()
    env = parse_definitions(text)
    (directory / "zoo.defs").write_text(text)
    written = []
    for name, (system, extra, proof, _) in corpus(env).items():
        path = directory / f"{name}.json"
        path.write_text(dumps_proof(proof, "zoo.defs", system))
        written.append(path)
    return written
