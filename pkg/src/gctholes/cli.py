"""Batch command-line front end.

Exit status: 0 success, 1 internal arithmetic failure, 2 usage error,
3 resource guard exceeded (rerun with ``--acknowledge-expensive``).
"""
import argparse
import csv
import io
import json
import sys

from . import chow, obstructions
from .characters import mn_character
from .errors import GuardError, IntegralityError
from .kronecker import kron, sym_kron
from .monoid import FGMonoid, MembershipOracle, holes_in_box, in_cone, in_group, in_saturation
from .obstructions import write_atomic
from .partitions import format_partition, parse_partition
from .plethysm import schur_expansion

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

# guard value used when the caller acknowledges an expensive run
UNGUARDED = 10**9


class UsageError(Exception):
    pass


def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _vector(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer vector: {text!r}")


def read_generators(path):
    """One comma-separated integer vector per line; blank lines and lines
    starting with ``#`` are ignored."""
    gens = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                gens.append(tuple(int(x) for x in line.split(",")))
            except ValueError:
                raise UsageError(f"{path}:{lineno}: not an integer vector: {line!r}")
    if not gens:
        raise UsageError(f"{path}: no generators")
    if len({len(g) for g in gens}) != 1:
        raise UsageError(f"{path}: generators have different lengths")
    return gens


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file (atomically) instead of stdout")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=1, help="worker processes for scans")
    common.add_argument(
        "--acknowledge-expensive",
        action="store_true",
        help="lift the resource guards; runs may take hours",
    )

    parser = argparse.ArgumentParser(prog="gctholes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="character value chi^LAMBDA(MU)")
    p.add_argument("lam", type=_partition, metavar="LAMBDA")
    p.add_argument("mu", type=_partition, metavar="MU")

    p = sub.add_parser("plethysm", parents=[common], help="Schur expansion of Sym^outer Sym^inner")
    p.add_argument("--outer", type=int, required=True)
    p.add_argument("--inner", type=int, required=True)
    p.add_argument("--max-rows", type=int, default=0)

    p = sub.add_parser("kron", parents=[common], help="Kronecker coefficient g(L,M,N)")
    for name in ("L", "M", "N"):
        p.add_argument(name.lower(), type=_partition, metavar=name)

    p = sub.add_parser("symkron", parents=[common], help="symmetric Kronecker coefficient sk(L,M,M)")
    p.add_argument("l", type=_partition, metavar="L")
    p.add_argument("m", type=_partition, metavar="M")

    p = sub.add_parser("monoid", help="saturation queries for a generated monoid")
    msub = p.add_subparsers(dest="action", required=True)
    q = msub.add_parser("sat", parents=[common], help="group, cone and saturation membership")
    q.add_argument("--gens", required=True, metavar="FILE")
    q.add_argument("--query", type=_vector, required=True, metavar="V")
    q = msub.add_parser("holes", parents=[common], help="holes inside the box [0,B]^r")
    q.add_argument("--gens", required=True, metavar="FILE")
    q.add_argument("--box", type=int, required=True, metavar="B")

    p = sub.add_parser("chow", help="Chow variety computations")
    csub = p.add_subparsers(dest="action", required=True)
    q = csub.add_parser("holes", parents=[common], help="hole table for n=3")
    q.add_argument("--dmax", type=int, required=True)
    q.add_argument("--json", dest="format", action="store_const", const="json")
    q.add_argument("--csv", dest="format", action="store_const", const="csv")
    q = csub.add_parser("family", parents=[common], help="check one member of the infinite hole family")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q = csub.add_parser("bound", parents=[common], help="exact module-rank bound")
    q.add_argument("--n", type=int, required=True)
    q = csub.add_parser("alon-tarsi", parents=[common], help="even minus odd Latin squares")
    q.add_argument("--n", type=int, required=True)

    p = sub.add_parser("scan", help="obstruction scans (JSON reports)")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("problem1", parents=[common])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--dmax", type=int, required=True)
    q = ssub.add_parser("det3gap", parents=[common])
    q.add_argument("--dmax", type=int, required=True)
    return parser


def _emit(args, text, stdout):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        write_atomic(args.out, text)
    else:
        stdout.write(text)


def _json_lines(records):
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)


def _run_char(args):
    return str(mn_character(args.lam, args.mu))


def _run_plethysm(args):
    if args.outer < 0 or args.inner < 1:
        raise UsageError("need --outer >= 0 and --inner >= 1")
    exp = schur_expansion(args.outer, args.inner, args.max_rows)
    rows = sorted(exp.mults.items(), reverse=True)
    if args.format == "json":
        return _json_lines({"partition": list(lam), "mult": m} for lam, m in rows)
    return "\n".join(f"{format_partition(lam)}\t{m}" for lam, m in rows)


def _run_kron(args):
    return str(kron(args.l, args.m, args.n))


def _run_symkron(args):
    return str(sym_kron(args.l, args.m))


def _run_monoid(args):
    gens = read_generators(args.gens)
    M = FGMonoid.from_vectors(gens)
    if args.action == "sat":
        v = args.query
        if len(v) != M.rank:
            raise UsageError(f"query has length {len(v)}, generators have length {M.rank}")
        result = {
            "query": list(v),
            "group": in_group(M, v),
            "cone": in_cone(M, v),
            "saturation": in_saturation(M, v),
        }
        if args.format == "json":
            return json.dumps(result, sort_keys=True)
        return "\n".join(f"{k}\t{str(result[k]).lower()}" for k in ("group", "cone", "saturation"))
    if args.box < 0:
        raise UsageError("--box must be nonnegative")
    oracle = MembershipOracle.from_generators(M, args.box)
    holes = holes_in_box(M, oracle, args.box)
    if args.format == "json":
        return _json_lines({"vector": list(h)} for h in holes)
    return "\n".join(",".join(map(str, h)) for h in holes)


def _run_chow(args):
    guard = {"max_degree": UNGUARDED} if args.acknowledge_expensive else {}
    if args.action == "holes":
        records = chow.chow3_hole_scan(args.dmax, **guard)
        if args.format == "json":
            return _json_lines(r.to_json() for r in records)
        if args.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["partition", "degree", "ambient", "normalization"])
            for r in records:
                writer.writerow([format_partition(r.partition), r.degree, r.ambient, r.normalization])
            return buf.getvalue()
        return "\n".join(f"{format_partition(r.partition)} d={r.degree} ambient={r.ambient}" for r in records)
    if args.action == "family":
        verdict = chow.infinite_family_check(args.j, args.k, **guard)
        if not verdict.holds:
            raise IntegralityError(f"family member j={args.j}, k={args.k} is not a hole: {verdict}")
        if args.format == "json":
            return json.dumps(verdict.to_json(), sort_keys=True)
        return (
            f"{format_partition(verdict.partition)} d={verdict.degree} "
            f"ambient={verdict.ambient} normalization={verdict.normalization} "
            f"cuts={len(verdict.chain) - 1} hole=true"
        )
    if args.action == "bound":
        rec = chow.bound_D(args.n)
        if args.format == "json":
            return json.dumps(rec.to_json(), sort_keys=True)
        return f"D={rec.D}\nbound={rec.bound}\nholds={str(rec.holds).lower()}"
    guard = {"max_n": UNGUARDED} if args.acknowledge_expensive else {}
    return str(chow.alon_tarsi_delta(args.n, **guard))


def _run_scan(args):
    kwargs = {"workers": max(1, args.threads), "checkpoint": args.out}
    if args.action == "problem1":
        if args.acknowledge_expensive:
            kwargs["max_size"] = UNGUARDED
        report = obstructions.problem1_scan(args.n, args.dmax, **kwargs)
    else:
        if args.acknowledge_expensive:
            kwargs["max_degree"] = UNGUARDED
        report = obstructions.det3_gap_scan(args.dmax, **kwargs)
    return report.dumps()


_HANDLERS = {
    "char": _run_char,
    "plethysm": _run_plethysm,
    "kron": _run_kron,
    "symkron": _run_symkron,
    "monoid": _run_monoid,
    "chow": _run_chow,
    "scan": _run_scan,
}


def dispatch(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        text = _HANDLERS[args.command](args)
        if text is not None and not (args.command == "scan" and args.out):
            _emit(args, text, stdout)
    except GuardError as exc:
        print(f"gctholes: {exc}; pass --acknowledge-expensive to run anyway", file=stderr)
        return EXIT_GUARD
    except (IntegralityError, AssertionError) as exc:
        print(f"gctholes: internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError, OSError) as exc:
        print(f"gctholes: {exc}", file=stderr)
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(dispatch())
