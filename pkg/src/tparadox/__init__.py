"""Truth and paradoxicality over self-referential sentences: a fixed-point model and a proof checker."""
from .coding import CodingTable, DefinitionEnvironment, build_universe, is_base_paradoxical, pi
from .dsl import format_formula, parse_definitions, parse_formula
from .jump import TP, TP_PLUS, classify, jump, jump_star, lfp
from .semantics import PartialModel, value

__all__ = [
    "CodingTable", "DefinitionEnvironment", "build_universe", "is_base_paradoxical", "pi",
    "format_formula", "parse_definitions", "parse_formula",
    "TP", "TP_PLUS", "classify", "jump", "jump_star", "lfp", "PartialModel", "value",
]
