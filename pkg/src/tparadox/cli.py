"""Command-line front end.

    tparadox model    --defs FILE [--domain N] [--variant tp|tp-plus]
    tparadox classify --defs FILE [NAME ...] [--sentence DSL]
    tparadox check    PROOF.json ... | --bundled [--system S] [--allow-extra-axiom]
    tparadox zoo      [--domain N] [--mcgee-k K] [--emit FILE] [--audit]
    tparadox compare  --defs FILE

Exit status is 0 iff every requested check passes, 1 if a check fails and 2
on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rep
from .audit import audit_universe
from .calculus import SYSTEMS
from .coding import CodingError, CodingTable, build_universe, canonicalize
from .dsl import parse_definitions, parse_formula
from .jump import JumpError, TP, VARIANTS, lfp
from .proofs import ProofFormatError, bundled_dir, load_proof
from .syntax import FormulaError
from .zoo import EXPECTED, ZooSpec, build_zoo, zoo_dsl


def _emit(args, payload: dict, text: str):
    out = json.dumps(payload, indent=2, ensure_ascii=False) + "\n" if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _load_defs(args):
    text = Path(args.defs).read_text()
    return parse_definitions(text, args.domain), text


def cmd_model(args) -> int:
    env, text = _load_defs(args)
    r = rep.model_report(env, args.variant, defs_text=text)
    _emit(args, r, rep.to_text(r))
    return 0 if all(r["invariants"].values()) else 1


def cmd_classify(args) -> int:
    env, _ = _load_defs(args)
    table = CodingTable(env)
    seeds = [parse_formula(s, env.definitions) for s in args.sentence]
    universe = build_universe(table, seeds)
    seq = lfp(universe, args.variant)
    names = args.names or list(env.definitions)
    result = {}
    for name in names:
        result[name] = str(seq.classify(env.code(name)))
    for text, phi in zip(args.sentence, seeds):
        result[text] = str(seq.classify(table.lookup(canonicalize(phi, table))))
    lines = "".join(f"{k}: {v}\n" for k, v in result.items())
    _emit(args, {"variant": args.variant, "classifications": result}, lines)
    return 0


def _proof_paths(args):
    paths = [Path(p) for p in args.proofs]
    if args.bundled:
        paths += sorted(Path(str(p)) for p in bundled_dir().iterdir() if p.name.endswith(".json"))
    return paths


def cmd_check(args) -> int:
    paths = _proof_paths(args)
    if not paths:
        raise ProofFormatError("no proof files given (pass paths or --bundled)")
    extra = ("I1c",) if args.allow_extra_axiom else ()
    results = []
    for path in paths:
        pf = load_proof(path, args.domain)
        env = parse_definitions(Path(args.defs).read_text(), args.domain) if args.defs else pf.env
        if env is None:
            raise ProofFormatError(f"{path}: no definitions (add a 'defs' field or pass --defs)")
        system = args.system or pf.system or "TP"
        results.append(rep.proof_report(path.stem, pf.proof, env, system, extra, args.variant,
                                        cross=not args.no_cross_validate))
    ok = all(p["accepted"] and p["cross_valid"] is not False for p in results)
    text = "".join(rep.proof_line(p) + "\n" for p in results)
    _emit(args, {"proofs": results, "config": {"variant": args.variant, "extra_axioms": list(extra)}}, text)
    return 0 if ok else 1


def cmd_zoo(args) -> int:
    spec = ZooSpec(domain=args.domain if args.domain is not None else ZooSpec.domain,
                   mcgee_k=args.mcgee_k)
    text = zoo_dsl(spec)
    if args.emit:
        Path(args.emit).write_text(text)
    env = build_zoo(spec)
    universe = instances = None
    if args.audit:
        universe, instances = audit_universe(env)
    r = rep.model_report(env, args.variant, defs_text=text, universe=universe, instances=instances,
                         extra_config={"mcgee_k": spec.mcgee_k,
                                       "mcgee_truncation": f"ex x ranges over 0..{spec.domain}"})
    mismatches = {}
    for name, (kind, rank) in EXPECTED.items():
        if name in r["classifications"]:
            got = r["classifications"][name]
            want = f"Paradoxical({rank})" if kind == "paradoxical" else kind.capitalize()
            if got != want:
                mismatches[name] = {"expected": want, "got": got}
    r["config"]["expected_mismatches"] = mismatches
    _emit(args, r, rep.to_text(r) + "".join(
        f"MISMATCH {n}: expected {m['expected']}, got {m['got']}\n" for n, m in mismatches.items()))
    return 0 if all(r["invariants"].values()) and not mismatches else 1


def cmd_compare(args) -> int:
    env, text = _load_defs(args)
    reports = {v: rep.model_report(env, v, defs_text=text) for v in VARIANTS}
    a, b = (reports[v]["classifications"] for v in VARIANTS)
    diff = {n: {VARIANTS[0]: a[n], VARIANTS[1]: b[n]} for n in a if a[n] != b[n]}
    payload = {"reports": reports, "differences": diff}
    lines = [f"{n}: {d[VARIANTS[0]]} vs {d[VARIANTS[1]]}" for n, d in diff.items()]
    lines = lines or ["no classification differs between the variants"]
    _emit(args, payload, "\n".join(lines) + "\n")
    ok = all(all(r["invariants"].values()) for r in reports.values())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tparadox", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", type=int, default=None, help="quantifier domain bound N_dom")
    common.add_argument("--variant", choices=VARIANTS, default=TP)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("model", parents=[common], help="least fixed point report for a definition file")
    p.add_argument("--defs", required=True)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("classify", parents=[common], help="classify named sentences")
    p.add_argument("--defs", required=True)
    p.add_argument("names", nargs="*")
    p.add_argument("--sentence", action="append", default=[], help="extra sentence in the DSL")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="check proof files and cross-validate them")
    p.add_argument("proofs", nargs="*")
    p.add_argument("--bundled", action="store_true", help="also check the bundled proof corpus")
    p.add_argument("--defs", help="override the proof file's definitions")
    p.add_argument("--system", choices=sorted(SYSTEMS))
    p.add_argument("--allow-extra-axiom", action="store_true",
                   help="admit the contrapositive of I1 (unsound; for the negative control)")
    p.add_argument("--no-cross-validate", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("zoo", parents=[common], help="run the standard zoo of paradoxical sentences")
    p.add_argument("--mcgee-k", type=int, default=3)
    p.add_argument("--emit", help="also write the zoo definition file here")
    p.add_argument("--audit", action="store_true",
                   help="close the universe under every axiom instance before auditing")
    p.set_defaults(func=cmd_zoo)

    p = sub.add_parser("compare", parents=[common], help="compare the tp and tp-plus fixed points")
    p.add_argument("--defs", required=True)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, FormulaError, CodingError, JumpError, ProofFormatError, KeyError,
            ValueError) as exc:
        print(f"tparadox: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
