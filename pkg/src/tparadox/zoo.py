"""Constructors for the classic paradoxical sentences and a standard test universe."""
from __future__ import annotations

from dataclasses import dataclass

from .coding import DefinitionEnvironment
from .dsl import format_definitions
from .syntax import And, Eq, Ex, NotTr, Num, Or, Par, Quote, Tr, Var, All, fn, negate


def make_liar(name: str = "lam"):
    return name, NotTr(Quote(name))


def make_truthteller(name: str = "tau"):
    return name, Tr(Quote(name))


def make_curry(name: str = "kappa"):
    return name, Or(NotTr(Quote(name)), Eq(Num(0), Num(1)))


def make_mcgee(k: int, name: str = "mu"):
    """McGee's sentence ``ex x. ~T(T^x mu)`` plus named ascriptions ``T^i mu`` for ``1 <= i <= k``."""
    if k < 1:
        raise ValueError("McGee iteration bound must be at least 1")
    defs = [(name, Ex("x", NotTr(fn("iterT", Var("x"), Quote(name)))))]
    prev = name
    for i in range(1, k + 1):
        cur = f"{name}_T{i}"
        defs.append((cur, Tr(Quote(prev))))
        prev = cur
    return defs


def make_gupta(name: str = "gamma"):
    return name, All("x", Or(Tr(Var("x")), NotTr(Var("x"))))


def make_revenge(name: str = "rho"):
    return name, Or(NotTr(Quote(name)), Par(Quote(name)))


SELECTABLE = ("liar", "negated_liar", "truthteller", "curry", "mcgee", "gupta", "revenge",
              "grounded", "ascriptions")


@dataclass(frozen=True)
class ZooSpec:
    sentences: tuple = SELECTABLE
    domain: int = 400
    mcgee_k: int = 3

    def __post_init__(self):
        unknown = set(self.sentences) - set(SELECTABLE)
        if unknown:
            raise ValueError(f"unknown zoo sentences: {sorted(unknown)}")
        if "gupta" in self.sentences and "truthteller" not in self.sentences:
            raise ValueError("the Gupta sentence needs the truth-teller in its universe")
        if "negated_liar" in self.sentences and "liar" not in self.sentences:
            raise ValueError("the negated liar needs the liar")


def build_zoo(spec: ZooSpec = ZooSpec()) -> DefinitionEnvironment:
    sel = set(spec.sentences)
    defs = []
    if "liar" in sel:
        defs.append(make_liar())
        if "negated_liar" in sel:
            defs.append(("nlam", negate(defs[0][1])))
        defs.append(("lam_and_true", And(defs[0][1], Eq(Num(0), Num(0)))))
        defs.append(("lam_and_false", And(defs[0][1], Eq(Num(0), Num(1)))))
    if "truthteller" in sel:
        defs.append(make_truthteller())
    if "curry" in sel:
        defs.append(make_curry())
    if "mcgee" in sel:
        defs.extend(make_mcgee(spec.mcgee_k))
    if "gupta" in sel:
        defs.append(make_gupta())
    if "revenge" in sel:
        defs.append(make_revenge())
    if "grounded" in sel:
        defs.append(("zero", Eq(Num(0), Num(0))))
        defs.append(("t_zero", Tr(Quote("zero"))))
        defs.append(("t_zero_and_one", And(Tr(Quote("zero")), Eq(Num(1), Num(1)))))
    if "ascriptions" in sel and "liar" in sel:
        defs.append(("p_lam", Par(Quote("lam"))))
        defs.append(("np_lam", negate(Par(Quote("lam")))))
        defs.append(("pp_lam", Par(Quote("p_lam"))))
        defs.append(("t_lam_or_not", Tr(fn("dOr", Quote("lam"), fn("dneg", Quote("lam"))))))
    return DefinitionEnvironment(dict(defs), spec.domain)


def zoo_dsl(spec: ZooSpec = ZooSpec()) -> str:
    return format_definitions(build_zoo(spec))


# name -> (kind, rank) at the least fixed point of the plain variant
EXPECTED = {
    "lam": ("paradoxical", 1),
    "nlam": ("paradoxical", 1),
    "kappa": ("paradoxical", 1),
    "lam_and_true": ("paradoxical", 2),
    "lam_and_false": ("false", None),
    "tau": ("independent", None),
    "mu": ("independent", None),
    "gamma": ("independent", None),
    "rho": ("independent", None),
    "zero": ("true", None),
    "t_zero": ("true", None),
}
