"""Command-line entry point: ``blockscope <subcommand> ...``.

Exit codes: 0 success or pass, 1 a theorem check failed, 2 bad input or usage,
3 the group exceeds the enumeration capacity.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

from sympy import isprime

from . import blocks as blk
from . import verify
from .chartab import compute_character_table
from .correspond import relative_glauberman, unit_generators
from .cyclo import is_p_rational, sigma_two_special
from .errors import CapacityError, DomainError, InputError, TheoremViolation
from .fileio import dump_report, load_group, scene_from_file
from .permgroup import prime_divisors

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not isprime(p):
        raise argparse.ArgumentTypeError(f"{p} is not a prime")
    return p


def _primes_spec(text: str):
    if text in ("odd", "all"):
        return text
    return [_prime(t) for t in text.split(",") if t]


def bundled_corpus() -> Path:
    return Path(str(resources.files("blockscope") / "data" / "corpus"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--prime", type=_prime, action="append", default=None,
                        help="prime (repeatable)")
    common.add_argument("--report", type=Path, default=None, help="also write the JSON report here")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="blockscope", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("table", parents=[common], help="character table of a group file")
    s.add_argument("group", type=Path)

    s = sub.add_parser("blocks", parents=[common], help="p-blocks with defects and heights")
    s.add_argument("group", type=Path)

    s = sub.add_parser("galois", parents=[common], help="Galois action on the irreducibles")
    s.add_argument("group", type=Path)

    s = sub.add_parser("glauberman", parents=[common], help="relative Glauberman correspondence")
    s.add_argument("scene_file", type=Path)
    s.add_argument("--scene", default=None, help="scene name from the file's 'scenes' section")

    s = sub.add_parser("extend-f", parents=[common], help="canonical p-rational extension")
    s.add_argument("group", type=Path)
    s.add_argument("normal", help="name of the normal subgroup in the group file")
    s.add_argument("theta", type=int, nargs="?", default=0, help="index of theta in Irr(N)")

    s = sub.add_parser("verify", parents=[common], help="run one theorem check")
    s.add_argument("target", choices=("thm-d", "thm-e", "thm-f", "cor-3.6", "gap-216", "conj-6.2"))
    s.add_argument("group", type=Path)
    s.add_argument("--scene", default=None)
    s.add_argument("--normal", default="N", help="normal subgroup name for thm-f / cor-3.6")
    s.add_argument("--character", type=int, default=0, help="character index in Irr(N)")

    s = sub.add_parser("corpus", parents=[common], help="corpus sweeps")
    s.add_argument("action", choices=("run", "list"))
    s.add_argument("directory", type=Path, nargs="?", default=None,
                   help="corpus directory (default: the bundled corpus)")
    s.add_argument("--primes", type=_primes_spec, default="odd", help="odd, all, or a comma list")
    s.add_argument("--max-order", type=int, default=None)
    s.add_argument("--scenes", type=int, default=0, help="Theorem E scenes per group")
    return parser


# ----------------------------------------------------------------------------
# subcommands; each returns (payload, exit code, text rendering)

def _cmd_table(args):
    gf = load_group(args.group)
    T = compute_character_table(gf.group)
    payload = T.to_json()
    lines = [f"{gf.name}: order {T.order}, {T.nr_classes} classes, exponent {T.exponent}",
             "sizes: " + " ".join(str(int(s)) for s in T.sizes)]
    for c in T:
        lines.append(f"X.{c.index}: " + "  ".join(str(v) for v in c.values))
    return payload, EXIT_OK, lines


def _primes_for(args, order):
    return args.prime or prime_divisors(order)


def _cmd_blocks(args):
    gf = load_group(args.group)
    T = compute_character_table(gf.group)
    payload = {"group": gf.name, "partitions": []}
    lines = []
    for p in _primes_for(args, T.order):
        part = blk.block_distribution(T, p)
        payload["partitions"].append(part.to_json())
        lines.append(f"p = {p}: {len(part)} blocks")
        for b, members in enumerate(part.blocks):
            data = part.block_data(b)
            lines.append(f"  B{b} defect {data.defect}: " +
                         ", ".join(f"X.{i}(deg {T[i].degree}, h {data.heights[i]})" for i in members))
    return payload, EXIT_OK, lines


def _cmd_galois(args):
    gf = load_group(args.group)
    T = compute_character_table(gf.group)
    e = T.exponent
    gens = unit_generators(e)
    payload = {"group": gf.name, "exponent": e,
               "action": {str(k): T.galois_permutation(k) for k in gens},
               "p_rational": {str(p): [is_p_rational(c.values, p, e) for c in T]
                              for p in _primes_for(args, T.order)}}
    sigma = sigma_two_special(e)
    payload["sigma_two_special"] = {"multiplier": sigma.multiplier,
                                    "permutation": T.galois_permutation(sigma.multiplier % e if e > 1 else 1)}
    lines = [f"exponent {e}; unit generators {gens}"]
    for k, perm in payload["action"].items():
        lines.append(f"  zeta -> zeta^{k}: {perm}")
    for p, flags in payload["p_rational"].items():
        lines.append(f"  {p}-rational: {[i for i, f in enumerate(flags) if f]}")
    return payload, EXIT_OK, lines


def _cmd_glauberman(args):
    gf = load_group(args.scene_file)
    scene = scene_from_file(gf, args.scene, args.prime[0] if args.prime else None)
    result = relative_glauberman(scene)
    payload = result.to_json()
    lines = [f"C has order {result.C.order}"]
    for pr in result.pairs.values():
        lines.append(f"  X.{pr.source} -> X*.{pr.image}  e = {pr.e}")
    lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in sorted(result.checks.items())))
    return payload, EXIT_OK if result.ok else EXIT_FAIL, lines


def _one_prime(args) -> int:
    if not args.prime or len(args.prime) != 1:
        raise InputError("exactly one -p/--prime is required")
    return args.prime[0]


def _cmd_extend_f(args):
    gf = load_group(args.group)
    N = gf.subgroup(args.normal)
    TN = compute_character_table(N)
    if not 0 <= args.theta < len(TN):
        raise InputError(f"theta index {args.theta} out of range")
    rep = verify.verify_theorem_F_instance(gf.group, N, TN[args.theta], _one_prime(args), gf.name)
    return _report_result(rep)


def _report_result(rep: verify.VerificationReport):
    payload = rep.to_json()
    code = EXIT_FAIL if rep.verdict == verify.FAIL else EXIT_OK
    if rep.verdict == verify.INAPPLICABLE and "reason" in rep.details:
        lines = [f"{rep.target}: inapplicable ({rep.details['reason']})"]
    else:
        lines = [f"{rep.target}: {rep.verdict}"] + [f"  {k}: {v}" for k, v in rep.witnesses.items()]
    return payload, code, lines


def _cmd_verify(args):
    gf = load_group(args.group)
    G = gf.group
    t = args.target
    if t == "thm-d":
        reps = [verify.verify_theorem_D(G, p, gf.name) for p in _primes_for(args, G.order) if p != 2]
        if not reps:
            raise InputError("no odd prime divides the group order")
        results = [_report_result(r) for r in reps]
        code = max(r[1] for r in results)
        return [r[0] for r in results] if len(results) > 1 else results[0][0], code, \
            [line for r in results for line in r[2]]
    if t == "thm-e":
        scene = scene_from_file(gf, args.scene, args.prime[0] if args.prime else None)
        return _report_result(verify.verify_theorem_E_scene(scene))
    if t in ("thm-f", "cor-3.6"):
        N = gf.subgroup(args.normal)
        TN = compute_character_table(N)
        if not 0 <= args.character < len(TN):
            raise InputError(f"character index {args.character} out of range")
        fn = verify.verify_theorem_F_instance if t == "thm-f" else verify.verify_corollary_3_6
        return _report_result(fn(G, N, TN[args.character], _one_prime(args), gf.name))
    if t == "gap-216":
        return _report_result(verify.reproduce_counterexample_216_158(G, args.prime[0] if args.prime else 3,
                                                                      gf.name))
    return _report_result(verify.verify_conjecture_6_2(G, gf.name))


def _cmd_corpus(args):
    directory = args.directory or bundled_corpus()
    if args.action == "list":
        items = verify.corpus_items(directory, args.max_order)
        payload = [{"name": it.name, "order": it.order} for it in items]
        return payload, EXIT_OK, [f"{it.name} ({it.order})" for it in items]
    primes = args.prime if args.prime else args.primes
    agg = verify.corpus_run(directory, primes, args.max_order, args.scenes)
    lines = [f"{agg['items']} groups; counts {agg['counts']}; errors {len(agg['errors'])}"]
    # an item error may hide a TheoremViolation, so it is never reported as success
    code = EXIT_FAIL if agg["fails"] or agg["errors"] else EXIT_OK
    return agg, code, lines


COMMANDS = {"table": _cmd_table, "blocks": _cmd_blocks, "galois": _cmd_galois,
            "glauberman": _cmd_glauberman, "extend-f": _cmd_extend_f, "verify": _cmd_verify,
            "corpus": _cmd_corpus}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        payload, code, lines = COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        print(json.dumps(exc.diagnostics, default=str), file=sys.stderr)
        return EXIT_FAIL
    except (InputError, DomainError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dump_report(payload, args.report)
    if args.format == "json":
        print(text)
    else:
        print("\n".join(lines))
    return code


def main():  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
