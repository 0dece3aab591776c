"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation
(a bug; a diagnostic goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from . import partitions as P
from .lr import InvariantError

SCHEMAS = """\
JSON schemas:
  tableau   {"outer": [int], "inner": [int], "rows": [[int]]}   rows top to bottom,
            skew cells omitted
  element   {"n": int, "mu": [int], "components": [component]}   components left to right
  component {"kind": "T"|"TBAR0"|"SP_PLUS"|"SP_MINUS"|"EMPTY", "a": int,
             "left": [int], "right": [int]}   columns top to bottom; spin columns use "left"
Partitions are comma-separated integers; the empty string is the empty partition.
"""


class UsageError(ValueError):
    pass


def _partition(text: str) -> tuple:
    try:
        la = P.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from e
    if any(x < 0 for x in la) or list(la) != sorted(la, reverse=True):
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    return la


def _key(la) -> str:
    return ",".join(map(str, la))


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from e


# -- subcommands ------------------------------------------------------------------------------

def cmd_branch(args) -> dict:
    from .branching import (BranchingQuery, Group, Method, contributions, multiplicity)
    group = {"O": Group.O, "Sp": Group.SP, "B": Group.B, "C": Group.C}[args.group]
    q = BranchingQuery(args.n, args.lam, args.mu, group)
    if args.method == "all":
        methods = list(Method) if group is Group.O else [Method.BARRED, Method.FLAGGED]
    else:
        methods = [Method(args.method)]
        if group is not Group.O and methods[0] is Method.DIRECT:
            raise UsageError("the direct method is available for --group O only")
    out = {"n": q.n, "lambda": list(q.lam), "mu": list(q.mu), "group": args.group,
           "methods": {}}
    for m in methods:
        entry = {"total": multiplicity(q, m) if m is Method.DIRECT else None}
        if m is not Method.DIRECT:
            per = contributions(q, m)
            entry["per_delta"] = {_key(d): v for d, v in per.items()}
            entry["total"] = sum(per.values())
        out["methods"][m.value] = entry
    totals = {v["total"] for v in out["methods"].values()}
    if len(totals) != 1:
        raise InvariantError(f"methods disagree: {out['methods']}")
    out["total"] = totals.pop()
    return out


def cmd_genexp(args) -> dict:
    from .genexp import K_so_even, K_so_odd, graded_identity_check
    if args.rank < 1 or (args.type == "D" and args.rank < 2):
        raise UsageError(f"rank {args.rank} too small for type {args.type}")
    K = K_so_odd(args.mu, args.rank) if args.type == "B" else K_so_even(args.mu, args.rank)
    out = K.to_json()
    if args.check_identity is not None:
        n = 2 * args.rank + (1 if args.type == "B" else 0)
        out["identity"] = {"degree": args.check_identity,
                           "holds": graded_identity_check(args.mu, n, args.check_identity)}
    return out


def cmd_separate(args) -> dict:
    from .separation import separate
    from .spinor import SpinorElement, enumerate_LRd
    if args.element:
        try:
            elements = [SpinorElement.from_json(_load_json(args.element))]
        except (KeyError, TypeError) as e:
            raise UsageError(f"malformed element: {e}") from e
    else:
        if args.n is None or args.lam is None or args.mu is None:
            raise UsageError("give --input FILE or all of --n, --lambda, --mu")
        if not P.is_orthogonal_label(args.mu, args.n) or len(args.lam) > args.n:
            raise UsageError("invalid (n, lambda, mu)")
        elements = enumerate_LRd(args.mu, args.lam, args.n)
    results = []
    for E in elements:
        steps = [] if args.trace else None
        d = separate(E, None, args.pad, steps).to_json()
        if args.trace:
            d["steps"] = steps
        results.append(d)
    if args.element:
        return results[0]
    return {"count": len(results),
            "separations": [{"element": E.to_json(), **d} for E, d in zip(elements, results)]}


def cmd_lr(args) -> dict:
    from .lr import Kind, enumerate_lr
    kind = Kind(args.kind)
    ws = enumerate_lr(args.lam, args.mu, args.nu, kind)
    out = {"lambda": list(args.lam), "mu": list(args.mu), "nu": list(args.nu),
           "kind": kind.value, "count": len(ws)}
    if args.list:
        out["tableaux"] = [{"filling": w.filling.to_json(), "companion": w.companion.to_json()}
                           for w in ws]
    return out


def cmd_flags(args) -> dict:
    from . import flags as F
    from .tableaux import Tableau
    try:
        T = Tableau.from_json(_load_json(args.tableau))
    except (KeyError, TypeError) as e:
        raise UsageError(f"malformed tableau: {e}") from e
    ctx = F.FlagContext(args.n, args.mu, args.delta)
    if args.side == "row":
        fl = F.flag_sequences_row(T, ctx)
        verdict = F.is_barred_D_row(T, ctx)
    else:
        fl = F.flag_sequences_companion(T, ctx)
        verdict = F.is_flagged_D_companion(T, ctx)
    if fl is F.NOT_IN_SET:
        return {"m": None, "nseq": None, "verdict": False}
    return {"m": list(fl.m), "nseq": list(fl.nseq), "verdict": verdict}


def cmd_verify(args) -> dict:
    from .verify import SUITES, run_suites
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reps = run_suites(names, args.budget)
    out = {"ok": all(r.ok for r in reps), "suites": [r.to_json() for r in reps]}
    if not out["ok"]:
        raise _VerifyFailed(out)
    return out


class _VerifyFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


# -- parser ----------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orthobranch",
        description="Branching from GL_n to O_n via the spinor model and flagged LR tableaux.",
        epilog=SCHEMAS, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--format", choices=["json", "table"], default="json")
    # also accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("branch", parents=[common], help="[V^lambda_GL_n : V^mu_G_n]")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--lambda", dest="lam", type=_partition, required=True)
    b.add_argument("--mu", type=_partition, required=True)
    b.add_argument("--group", choices=["O", "Sp", "B", "C"], default="O")
    b.add_argument("--method", choices=["direct", "barred", "flagged", "all"], default="all")
    b.set_defaults(func=cmd_branch)

    g = sub.add_parser("genexp", parents=[common], help="generalized exponent K_{mu,0}(t) of so_n")
    g.add_argument("--type", choices=["B", "D"], required=True)
    g.add_argument("--rank", type=int, required=True)
    g.add_argument("--mu", type=_partition, required=True)
    g.add_argument("--check-identity", type=int, metavar="D", default=None,
                   help="also check the graded branching identity up to degree D")
    g.set_defaults(func=cmd_genexp)

    s = sub.add_parser("separate", parents=[common], help="separate l-highest elements of the spinor model")
    s.add_argument("--input", "--element", dest="element", metavar="FILE", help="element as JSON")
    s.add_argument("--n", type=int)
    s.add_argument("--lambda", dest="lam", type=_partition)
    s.add_argument("--mu", type=_partition)
    s.add_argument("--pad", type=int, default=None, help="padding height in the negative case")
    s.add_argument("--trace", action="store_true", help="emit every sliding step")
    s.set_defaults(func=cmd_separate)

    r = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson tableaux of shape lambda/mu, content nu")
    r.add_argument("--lambda", dest="lam", type=_partition, required=True)
    r.add_argument("--mu", type=_partition, required=True)
    r.add_argument("--nu", type=_partition, required=True)
    r.add_argument("--kind", choices=["lattice", "anti"], default="lattice")
    r.add_argument("--list", action="store_true")
    r.set_defaults(func=cmd_lr)

    f = sub.add_parser("flags", parents=[common], help="flag sequences and the type D verdict for one tableau")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--mu", type=_partition, required=True)
    f.add_argument("--delta", type=_partition, default=())
    f.add_argument("--tableau", metavar="FILE", required=True)
    f.add_argument("--side", choices=["row", "companion"], default="row")
    f.set_defaults(func=cmd_flags)

    v = sub.add_parser("verify", parents=[common], help="run the cross-check matrix")
    v.add_argument("--suite", choices=["all", "branching", "genexp", "separation", "lr"],
                   default="all")
    v.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    v.set_defaults(func=cmd_verify)
    return ap


def _table(obj, prefix="") -> list:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            lines += _table(v, f"{prefix}{k}.")
        return lines
    return [f"{prefix[:-1]}: {json.dumps(obj, separators=(',', ':'))}"]


def _emit(obj, fmt, stream):
    if fmt == "table":
        stream.write("\n".join(_table(obj)) + "\n")
    else:
        stream.write(json.dumps(obj, separators=(",", ":")) + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        out = args.func(args)
    except _VerifyFailed as e:
        _emit(e.report, args.format, stdout)
        return 2
    except (InvariantError, ArithmeticError) as e:
        stderr.write(f"internal invariant violated: {e}\n")
        traceback.print_exc(file=stderr)
        return 2
    except ValueError as e:
        stderr.write(f"error: {e}\n")
        return 1
    _emit(out, args.format, stdout)
    return 0


def main() -> None:
    sys.exit(run())
