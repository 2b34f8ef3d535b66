"""Deterministic JSON reports for models, zoo runs and proof checks."""
from __future__ import annotations

import hashlib
import json

from .audit import fixed_point_checks
from .calculus import cross_validate, check_proof, proof_sentences, CodeOutsideUniverse
from .coding import CodingTable, build_universe
from .dsl import format_formula
from .jump import lfp, stage_invariants

REPORT_KEYS = ("variant", "stages", "classifications", "ranks", "invariants", "proofs", "config")


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def model_report(env, variant: str, *, defs_text: str | None = None, seeds=(), extra_config=None,
                 universe=None, instances=None) -> dict:
    """Fixed point of ``env`` (plus ``seeds``) with classifications of every named sentence."""
    if universe is None:
        universe = build_universe(CodingTable(env), seeds)
    seq = lfp(universe, variant)
    invariants = stage_invariants(seq)
    checks, audit = fixed_point_checks(seq, instances)
    invariants.update(checks)
    names = list(env.definitions)
    classes = {n: str(seq.classify(env.code(n))) for n in names}
    ranks = {n: seq.rank(env.code(n)) for n in names if seq.rank(env.code(n)) is not None}
    config = {"domain": env.domain, "universe_size": len(universe), "fixed_point": seq.fixed_point,
              "axiom_instances_checked": audit["checked"]}
    if defs_text is not None:
        config["defs_sha256"] = sha256(defs_text)
    config.update(extra_config or {})
    return {
        "variant": variant,
        "stages": len(seq.stages),
        "classifications": classes,
        "ranks": ranks,
        "invariants": dict(sorted(invariants.items())),
        "proofs": [],
        "config": dict(sorted(config.items())),
    }


def proof_report(name: str, proof, env, system: str, extra=(), variant: str = "tp",
                 cross: bool = True) -> dict:
    """Check ``proof`` and, when accepted, evaluate its end-sequent at the fixed point."""
    table = CodingTable(env)
    verdict = check_proof(proof, system, table, extra)
    out = {
        "name": name,
        "system": system,
        "extra_axioms": sorted(extra),
        "accepted": verdict.accepted,
        "errors": [{"node": path, "message": msg} for path, msg in verdict.errors],
        "nodes": verdict.nodes,
        "schemas": dict(sorted(verdict.schemas.items())),
        "arithmetic_oracle": verdict.oracle_used,
        "endsequent": {
            "ant": sorted(format_formula(f) for f in proof.conclusion.ant),
            "suc": sorted(format_formula(f) for f in proof.conclusion.suc),
        },
        "cross_valid": None,
    }
    if verdict.accepted and cross:
        try:
            universe = build_universe(table, proof_sentences(proof))
            out["cross_valid"] = cross_validate(proof.conclusion, lfp(universe, variant))
        except CodeOutsideUniverse as exc:
            out["errors"].append({"node": "root", "message": str(exc)})
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def to_text(report: dict) -> str:
    lines = [f"variant: {report['variant']}  stages: {report['stages']}"]
    for name, cls in report["classifications"].items():
        lines.append(f"  {name:<18} {cls}")
    for key, ok in report["invariants"].items():
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {key}")
    for p in report["proofs"]:
        lines.append(proof_line(p))
    cfg = ", ".join(f"{k}={v}" for k, v in report["config"].items())
    lines.append(f"config: {cfg}")
    return "\n".join(lines) + "\n"


def proof_line(p: dict) -> str:
    status = "accepted" if p["accepted"] else "rejected"
    cv = "" if p["cross_valid"] is None else f", cross-valid={str(p['cross_valid']).lower()}"
    lines = [f"proof {p['name']} [{p['system']}]: {status}{cv}"]
    lines += [f"  {e['node']}: {e['message']}" for e in p["errors"]]
    return "\n".join(lines)
