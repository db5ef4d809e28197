"""Command-line front end: parses inputs, dispatches, writes JSON artifacts.

Artifacts are deterministic: the "artifact" object depends only on the
inputs and configuration (sorted keys, no timestamps); volatile metadata
lives in the sibling "meta" object.  Exit codes: 0 success, 2 for sound but
inconclusive certificates, 1 for errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .certify import certify_sn, cubic_galois_group
from .construct import (BBBudgets, bb_construct, certificate_from_dict,
                        certificate_to_dict, lp_trinomial_data,
                        split_trinomial, verify_bb_certificate)
from .errors import GForgeError, ParseError
from .factorization import DEGREE_CAP
from .fields import field_from_string, rationals
from .grammar import (parse_elem, parse_parampoly, parse_skew,
                      parse_skew_ring, parse_unipoly, print_elem,
                      print_parampoly, print_skew, print_unipoly)
from .permgroup import PermGroup, normalizer_quotient, parse_perm, print_perm
from .skew import center_test, ore_witness, right_divide
from .specialization import specialize_at

DEFAULT_SEED = 0x5EED


@dataclass
class RunConfig:
    command: str
    field_spec: str = "Q"
    budgets: dict = field(default_factory=lambda: {
        "prime_budget": 200, "attempt_budget": 64, "degree_cap": DEGREE_CAP})
    seed: int = DEFAULT_SEED
    output_path: str = ""

    def as_dict(self) -> dict:
        return {"command": self.command, "field": self.field_spec,
                "budgets": dict(self.budgets), "seed": self.seed}


def _read_input(value: str) -> str:
    """Option values name either a literal or a file holding the literal."""
    if value and os.path.isfile(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _emit(config: RunConfig, inputs: dict, result: dict, out_path: str):
    doc = {
        "artifact": {
            "command": config.command,
            "config": config.as_dict(),
            "inputs": inputs,
            "versions": {"gforge": __version__, "schema": 1},
            "result": result,
        },
        "meta": {"timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ",
                                            time.gmtime())},
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report_skeleton() -> dict:
    return {"t0": None, "unramified": None, "fibers": None,
            "group": None, "evidence": None}


# ---------------------------------------------------------------------------
# subcommand handlers (each returns (result_dict, exit_code))


def _cmd_specialize(args, config):
    spec = field_from_string(args.field)
    poly = parse_parampoly(_read_input(args.poly), spec)
    t0 = parse_elem(_read_input(args.at), spec)
    report = specialize_at(poly, t0)
    result = _report_skeleton()
    result.update({
        "t0": print_elem(report.t0),
        "unramified": report.unramified,
        "fibers": [{"factor": print_unipoly(g), "degree": d}
                   for g, d in report.fibers],
        "degree_sum_ok": report.degree_sum_ok,
    })
    return result, 0


def _cmd_certify_sn(args, config):
    spec = rationals()
    poly = parse_unipoly(_read_input(args.poly), spec)
    cert = certify_sn(poly, args.budget)
    result = _report_skeleton()
    result.update({
        "group": cert.claimed_group,
        "evidence": [[p, list(t)] for p, t in cert.evidence],
        "budget_used": cert.budget_used,
        "reason": cert.reason,
    })
    return result, 0 if cert.is_conclusive() else 2


def _cmd_cubic_group(args, config):
    spec = field_from_string(args.field)
    poly = parse_unipoly(_read_input(args.poly), spec)
    cert = cubic_galois_group(poly)
    result = _report_skeleton()
    result.update({
        "group": cert.claimed_group,
        "evidence": [list(map(str, e)) for e in cert.evidence],
        "reason": cert.reason,
    })
    return result, 0 if cert.is_conclusive() else 2


def _cmd_bb_construct(args, config):
    spec = rationals()
    stem = parse_unipoly(_read_input(args.stem), spec)
    budgets = BBBudgets(prime_budget=config.budgets["prime_budget"],
                        attempt_budget=config.budgets["attempt_budget"])
    q_override = None
    if args.q:
        q_override = parse_unipoly(_read_input(args.q), spec)
    cert = bb_construct(stem, args.n, budgets, q_override=q_override)
    verdict = verify_bb_certificate(cert)
    result = certificate_to_dict(cert)
    result["verified"] = verdict.ok
    return result, 0 if verdict.ok else 1


def _cmd_verify(args, config):
    with open(args.cert, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    payload = doc.get("artifact", {}).get("result", doc)
    cert = certificate_from_dict(payload)
    verdict = verify_bb_certificate(cert)
    result = {"verified": verdict.ok, "reasons": verdict.reasons}
    return result, 0 if verdict.ok else 1


def _cmd_trinomial(args, config):
    spec = field_from_string(args.field)
    if args.variant == "lp":
        x = parse_elem(_read_input(args.x), spec)
        data = lp_trinomial_data(x)
        return {
            "poly": print_parampoly(data.poly),
            "discriminant": data.discriminant.to_str("T"),
            "squarefree_part": data.squarefree_part.to_str("T"),
            "nonsquare_witness": data.witness,
        }, 0
    res = split_trinomial(spec)
    return {
        "alpha": print_elem(res.alpha),
        "a": print_elem(res.a),
        "roots": [print_elem(r) for r in res.roots],
        "trinomial": print_unipoly(res.trinomial()),
    }, 0


def _cmd_skew(args, config):
    ring = parse_skew_ring(args.ring)
    lhs = parse_skew(_read_input(args.lhs), ring)
    if args.op == "center":
        return {"poly": print_skew(lhs), "central": center_test(lhs)}, 0
    rhs = parse_skew(_read_input(args.rhs), ring)
    if args.op == "mul":
        return {"result": print_skew(lhs * rhs)}, 0
    if args.op == "div":
        q, r = right_divide(lhs, rhs)
        return {"quotient": print_skew(q), "remainder": print_skew(r)}, 0
    r, s = ore_witness(lhs, rhs)
    return {"r": print_skew(r), "s": print_skew(s),
            "common": print_skew(lhs * r)}, 0


def _parse_group(text: str, degree: int) -> PermGroup:
    text = text.strip()
    if text.upper().startswith("S") and text[1:].isdigit():
        return PermGroup.symmetric(int(text[1:]))
    gens = [parse_perm(part.strip(), degree)
            for part in text.split(",") if part.strip()]
    return PermGroup.from_generators(degree, gens)


def _cmd_normquot(args, config):
    gtext = args.group.strip()
    if gtext.upper().startswith("S") and gtext[1:].isdigit():
        degree = int(gtext[1:])
    else:
        degree = args.degree
        if not degree:
            raise GForgeError("--degree is required for generator lists")
    G = _parse_group(gtext, degree)
    gens = [parse_perm(part.strip(), G.degree)
            for part in args.subgroup.split(",") if part.strip()]
    K = PermGroup.from_generators(G.degree, gens) if gens \
        else PermGroup.trivial(G.degree)
    order, reps = normalizer_quotient(G, K)
    return {
        "group_order": G.order,
        "subgroup_order": K.order,
        "quotient_order": order,
        "coset_representatives": [print_perm(p) for p in reps],
    }, 0


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gforge",
        description="exact constructive Galois toolkit")
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=None,
                        help="run seed (env GFORGE_SEED overrides the "
                             "default)")
    shared.add_argument("--out", default="",
                        help="write the JSON artifact here")
    sub = top.add_subparsers(dest="command", required=True,
                             parser_class=lambda **kw: argparse.ArgumentParser(
                                 parents=[shared], **kw))

    p = sub.add_parser("specialize", help="factor a fiber of a family")
    p.add_argument("--poly", required=True, help="family in T, Y (or a file)")
    p.add_argument("--field", default="Q")
    p.add_argument("--at", required=True, help="base point t0")
    p.set_defaults(handler=_cmd_specialize)

    p = sub.add_parser("certify-sn", help="certify a symmetric Galois group")
    p.add_argument("--poly", required=True)
    p.add_argument("--budget", type=int, default=200)
    p.set_defaults(handler=_cmd_certify_sn)

    p = sub.add_parser("cubic-group", help="classify a cubic's Galois group")
    p.add_argument("--poly", required=True)
    p.add_argument("--field", default="Q")
    p.set_defaults(handler=_cmd_cubic_group)

    p = sub.add_parser("bb-construct",
                       help="build a certified family through a stem")
    p.add_argument("--stem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", default="",
                   help="override the searched S_n polynomial")
    p.set_defaults(handler=_cmd_bb_construct)

    p = sub.add_parser("verify", help="re-verify a construction certificate")
    p.add_argument("--cert", required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("trinomial", help="trinomial constructions")
    p.add_argument("variant", choices=["lp", "split"])
    p.add_argument("--field", default="Q")
    p.add_argument("--x", default="0", help="parameter for the lp family")
    p.set_defaults(handler=_cmd_trinomial)

    p = sub.add_parser("skew", help="twisted polynomial arithmetic")
    p.add_argument("op", choices=["mul", "div", "ore", "center"])
    p.add_argument("--ring", required=True,
                   help='e.g. "GF(4);frob" or "H(-1,-1/Q);conj(i)"')
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", default="")
    p.set_defaults(handler=_cmd_skew)

    p = sub.add_parser("normquot", help="normalizer quotient N_G(K)/K")
    p.add_argument("--group", required=True,
                   help='"S4" or a comma-separated generator list')
    p.add_argument("--subgroup", required=True,
                   help='comma-separated cycles, e.g. "(1 2)(3 4)"')
    p.add_argument("--degree", type=int, default=0)
    p.set_defaults(handler=_cmd_normquot)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("GFORGE_SEED", DEFAULT_SEED))
    config = RunConfig(command=args.command, seed=seed,
                       output_path=args.out,
                       field_spec=getattr(args, "field", "Q"))
    if hasattr(args, "budget"):
        config.budgets["prime_budget"] = args.budget
    try:
        result, code = args.handler(args, config)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except GForgeError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    inputs = {k: _read_input(v) if isinstance(v, str) else v
              for k, v in vars(args).items()
              if k not in ("handler", "seed", "out", "command")
              and v not in (None, "")}
    _emit(config, inputs, result, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
