"""Batch command-line front end.

Every subcommand prints a deterministic report (JSON or text) and exits with
0 on success/pass, 1 when a verification report contains a failure, and 2 on
usage errors.  Randomized checks take an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from .braid import BraidWord, lift
from .coxeter import CoxeterError, CoxeterSystem, named_system
from .free_actions import (
    abelianized_action,
    action_model,
    corrupted_model,
    generic_braid_pair,
    nontriviality_sample,
    verify_braid_relations,
)
from .embedding import embedding_report
from .nmap import (
    cocycle,
    eval_N,
    eval_Np,
    is_admissible,
    nbar,
    splitting_parity_witness,
)
from .oracles import MatrixOracle, PermutationOracle
from .schreier import devissage, presentation_DI, presentation_pure, standard_chain


def _system(name: str) -> CoxeterSystem:
    try:
        return named_system(name)
    except CoxeterError as exc:
        raise UsageError(str(exc))


class UsageError(Exception):
    pass


def _parse_I(system: CoxeterSystem, text: Optional[str]) -> tuple:
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in system.labels:
            raise UsageError(f"unknown generator {tok!r} for {system.name}")
        out.append(system.labels.index(tok))
    return tuple(sorted(set(out)))


def _need_cap(system: CoxeterSystem, max_length: Optional[int]):
    if max_length is None and not system.is_finite():
        raise UsageError(f"{system.name} is infinite; --max-length is required")


def _emit(doc, fmt: str, text_fn=None) -> None:
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text_fn(doc) if text_fn else _default_text(doc))


def _default_text(doc, prefix: str = "") -> str:
    lines = []

    def walk(node, indent):
        if isinstance(node, dict):
            for k in sorted(node):
                v = node[k]
                if isinstance(v, (dict, list)):
                    lines.append(" " * indent + f"{k}:")
                    walk(v, indent + 2)
                else:
                    lines.append(" " * indent + f"{k}: {v}")
        elif isinstance(node, list):
            for v in node:
                if isinstance(v, dict):
                    walk(v, indent)
                elif isinstance(v, list):
                    lines.append(" " * indent + "- [" +
                                 ", ".join(str(x) for x in v) + "]")
                else:
                    lines.append(" " * indent + f"- {v}")

    walk(doc, 0)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands (each returns the exit code)


def cmd_nmap(args) -> int:
    system = _system(args.type)
    b = BraidWord.parse(system, args.word)
    vec = eval_N(b)
    doc = {"word": str(b), "vector": vec.to_json(), "projection": str(b.project())}
    _emit(doc, args.format)
    return 0


def cmd_admissible(args) -> int:
    system = _system(args.type)
    elems = []
    for part in args.set.split(","):
        part = part.strip()
        elems.append(system.normal_form(system.parse_word(part)))
    witness = is_admissible(system, elems)
    if witness is None:
        doc = {"admissible": False, "set": sorted(str(t) for t in elems)}
    else:
        assert nbar(witness) == frozenset(elems)
        doc = {"admissible": True, "witness": str(witness),
               "set": sorted(str(t) for t in elems)}
    _emit(doc, args.format)
    return 0


def cmd_present(args) -> int:
    system = _system(args.type)
    _need_cap(system, args.max_length)
    I = _parse_I(system, args.I)
    p = presentation_DI(system, I, max_length=args.max_length)
    if args.format == "text":
        print(p.to_text())
    else:
        print(json.dumps(p.to_json(), sort_keys=True, indent=2))
    return 0


def cmd_pure_present(args) -> int:
    system = _system(args.type)
    _need_cap(system, args.max_length)
    p = presentation_pure(system, max_length=args.max_length)
    if args.format == "text":
        print(p.to_text())
    else:
        print(json.dumps(p.to_json(), sort_keys=True, indent=2))
    return 0


def cmd_devissage(args) -> int:
    system = _system(args.type)
    _need_cap(system, None)
    chain = standard_chain(system)
    doc = devissage(system, chain).to_json()
    _emit(doc, args.format)
    return 0


def cmd_verify_actions(args) -> int:
    model = action_model(args.kind, args.n)
    braids = verify_braid_relations(model)
    abel = {}
    for lab in model.acting:
        rep = abelianized_action(model, lab)
        abel[lab] = {"permutation": rep["permutation"],
                     "map": {k: f"{v[0]}^{v[1]}" for k, v in rep["map"].items()}}
    controls = {
        "generic_pair": generic_braid_pair()["passed"],
        "corrupted_fails": not verify_braid_relations(corrupted_model(model))["passed"],
    }
    sample = nontriviality_sample(model, samples=args.samples, seed=args.seed)
    passed = braids["passed"] and controls["generic_pair"] \
        and controls["corrupted_fails"] and sample["passed"]
    doc = {"kind": args.kind, "n": args.n,
           "braid_relations": braids, "abelianized": abel,
           "controls": controls,
           "nontriviality": {"tested": sample["tested"],
                             "passed": sample["passed"]},
           "passed": passed}
    _emit(doc, args.format)
    return 0 if passed else 1


def cmd_verify_embedding(args) -> int:
    rep = embedding_report(args.n, samples=args.samples, seed=args.seed)
    doc = {"n": rep["n"], "equivariance": rep["equivariance"],
           "index2": rep["index2"], "roundtrip": rep["roundtrip"],
           "relations": rep["relations"], "status": rep["status"],
           "passed": rep["passed"]}
    _emit(doc, args.format)
    return 0 if rep["passed"] else 1


def cmd_cocycle(args) -> int:
    system = _system(args.type)
    if args.v is not None and args.w is not None:
        v = system.normal_form(system.parse_word(args.v))
        w = system.normal_form(system.parse_word(args.w))
        value = cocycle(v, w)
        doc = {"v": str(v), "w": str(w), "value": value.to_json(),
               "all_even": value.all_even()}
        _emit(doc, args.format)
        return 0
    _need_cap(system, args.max_length)
    rng = random.Random(args.seed)
    cap = args.max_length
    pool = list(system.enumerate_elements(max_length=cap))
    failures = []
    for _ in range(args.samples):
        u, v, w = (pool[rng.randrange(len(pool))] for _ in range(3))
        # 2-cocycle identity: u.c(v,w) - c(uv,w) + c(u,vw) - c(u,v) = 0
        total = (cocycle(v, w).acted_by(u) - cocycle(u * v, w)
                 + cocycle(u, v * w) - cocycle(u, v))
        if not total.is_zero():
            failures.append([str(u), str(v), str(w)])
    diag = all(cocycle(system.gen(s), system.gen(s)).coeffs
               == {system.gen(s): 2} for s in range(system.rank))
    parity = splitting_parity_witness(system)
    passed = not failures and diag and parity["all_odd"]
    doc = {"type": args.type, "samples": args.samples,
           "cocycle_identity_failures": failures,
           "diagonal_is_2s": diag,
           "parity_witness": parity, "passed": passed}
    _emit(doc, args.format)
    return 0 if passed else 1


def cmd_oracle_check(args) -> int:
    system = _system(args.type)
    failures = []
    checked = 0
    try:
        oracle = PermutationOracle.for_system(args.type)
    except CoxeterError:
        oracle = None
    if oracle is not None:
        rng = random.Random(args.seed)
        pool = list(system.enumerate_elements(max_length=args.max_length))
        for _ in range(args.samples):
            v = pool[rng.randrange(len(pool))]
            w = pool[rng.randrange(len(pool))]
            checked += 1
            lhs = oracle.image(v * w)
            rhs = oracle.image_of_word(v.word + w.word)
            if lhs != rhs or oracle.length(oracle.image(v)) != len(v):
                failures.append([str(v), str(w)])
    else:
        _need_cap(system, args.max_length)
        mat = MatrixOracle(system)
        rng = random.Random(args.seed)
        pool = list(system.enumerate_elements(max_length=args.max_length))
        for _ in range(args.samples):
            v = pool[rng.randrange(len(pool))]
            w = pool[rng.randrange(len(pool))]
            checked += 1
            if mat.image(v * w) != mat.image_of_word(v.word + w.word):
                failures.append([str(v), str(w)])
    doc = {"type": args.type, "checked": checked,
           "oracle": "permutation" if oracle else "matrix",
           "failures": failures, "passed": not failures}
    _emit(doc, args.format)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purebraid",
        description="Coxeter/braid computations: the N-map, subgroup "
                    "presentations, free actions and the B-to-A embedding.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_type=True):
        if needs_type:
            p.add_argument("--type", required=True,
                           help="named system, e.g. A3, B2, I2(5), D4, Atilde2")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-length", type=int, default=None)

    p = sub.add_parser("nmap", help="evaluate N on a braid word")
    common(p)
    p.add_argument("--word", required=True, help='braid word, e.g. "s1 s2^-1"')
    p.set_defaults(fn=cmd_nmap)

    p = sub.add_parser("admissible", help="decide whether a reflection set is an inversion set")
    common(p)
    p.add_argument("--set", required=True, help='comma-separated reflections, e.g. "s1, s1 s2 s1"')
    p.set_defaults(fn=cmd_admissible)

    p = sub.add_parser("present", help="presentation of D_I")
    common(p)
    p.add_argument("--I", default="", help='comma-separated generator labels, e.g. "s1,s2"')
    p.set_defaults(fn=cmd_present)

    p = sub.add_parser("pure-present", help="presentation of the pure braid group")
    common(p)
    p.set_defaults(fn=cmd_pure_present)

    p = sub.add_parser("devissage", help="per-level generators along the standard chain")
    common(p)
    p.set_defaults(fn=cmd_devissage)

    p = sub.add_parser("verify-actions", help="braid relations of an action model")
    common(p, needs_type=False)
    p.add_argument("--kind", required=True, choices=("A", "B", "B_ab", "I2", "D"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(fn=cmd_verify_actions)

    p = sub.add_parser("verify-embedding", help="equivariance/index-2/round-trip certificates")
    common(p, needs_type=False)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(fn=cmd_verify_embedding)

    p = sub.add_parser("cocycle", help="extension cocycle: evaluate or verify")
    common(p)
    p.add_argument("--v", default=None)
    p.add_argument("--w", default=None)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(fn=cmd_cocycle)

    p = sub.add_parser("oracle-check", help="cross-check element arithmetic against an oracle")
    common(p)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(fn=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoxeterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
