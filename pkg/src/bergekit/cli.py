"""Command-line entry point: ``bergekit <subcommand> ...``.

Exit codes: 0 success/found/ok, 1 not-found/violation/discrepancy,
2 usage or input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import constructions, formulas
from .checks import oracle_agreement, rotation_suite
from .hypergraph import HypergraphError
from .io import (
    FormatError,
    format_certificate,
    format_hypergraph,
    parse_hypergraph,
    read_certificate,
    write_certificate,
)
from .oracle import brute_force_ex, compare_with_formula, sweep
from .search import (
    BUDGET,
    FOUND,
    BergePath,
    SearchLimits,
    default_jobs,
    has_berge_cycle_of_length_at_least,
    has_berge_path_of_length,
    longest_berge_path,
    verify_cycle,
    verify_path,
)

log = logging.getLogger("bergekit")

OK, NOT_FOUND, USAGE, OVER_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true",
                        help="info logging; raw rationals in bound rows")
    p = argparse.ArgumentParser(prog="bergekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def command(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    c = command("construct", "write a named hypergraph family member")
    c.add_argument("--family", required=True, choices=["extremal", "complete", "gkl1", "tree-like", "union"])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("-o", "--output")

    for name in ("count", "bounds"):
        b = command(name, f"print {name} rows")
        b.add_argument("--n", type=int, required=True)
        b.add_argument("--k", type=int, required=True)
        b.add_argument("--r", type=int, required=True)
        if name == "bounds":
            b.add_argument("--a", type=int)

    s = command("search", "exact Berge-path / Berge-cycle search")
    s.add_argument("--input", required=True)
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--path-length", type=int)
    mode.add_argument("--longest-path", action="store_true")
    mode.add_argument("--cycle-min", type=int)
    _limit_args(s)
    s.add_argument("--certificate-out")

    v = command("verify", "check a certificate against a hypergraph")
    v.add_argument("--input", required=True)
    v.add_argument("--certificate", required=True)

    f = command("bruteforce", "exact extremal number by enumeration")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--connected", action="store_true")
    _limit_args(f)
    f.add_argument("--out")

    command("selftest", "oracle-agreement and rotation suites")
    return p


def _limit_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--jobs", type=int, default=None)


def _limits(args) -> SearchLimits:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    try:
        return SearchLimits(args.max_nodes, args.time_limit, jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    try:
        return parse_hypergraph(text)[0]
    except (FormatError, HypergraphError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_construct(args) -> int:
    fam, n, k, r = args.family, args.n, args.k, args.r
    if fam != "complete" and k is None:
        raise UsageError(f"--k is required for family {fam}")
    comments: list[str] = []
    try:
        if fam == "extremal":
            H, part = constructions.build_extremal(n, k, r)
            comments.append(part.header())
        elif fam == "complete":
            H = constructions.build_complete(n, r)
        elif fam == "gkl1":
            H = constructions.build_gkl1(n, k, r)
        elif fam == "tree-like":
            H = constructions.build_tree_like(n, k, r)
        else:
            if k < 1 or n % k:
                raise constructions.ConstructionInfeasible(f"k | n violated for n={n}, k={k}")
            H = constructions.disjoint_union(*[constructions.build_complete(k, r)] * (n // k))
    except constructions.ConstructionInfeasible as exc:
        raise UsageError(f"infeasible construction: {exc}") from None
    text = format_hypergraph(H, comments)
    if args.output:
        Path(args.output).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)
    return OK


def cmd_count(args) -> int:
    print(formulas.extremal_count(args.n, args.k, args.r).row(args.verbose))
    print(formulas.BoundValue("threshold_N", formulas.threshold_N(args.k, args.r),
                              formulas.EXACT, True).row(args.verbose))
    return OK


def cmd_bounds(args) -> int:
    for b in formulas.all_bounds(args.n, args.k, args.r, args.a):
        print(b.row(args.verbose))
    return OK


def cmd_search(args) -> int:
    H = _load(args.input)
    limits = _limits(args)
    if args.longest_path:
        out, length = longest_berge_path(H, limits)
        print(f"longest\t{length}\toptimal\t{'yes' if out.optimal else 'no'}")
    elif args.path_length is not None:
        if args.path_length < 1:
            raise UsageError("--path-length must be at least 1")
        out = has_berge_path_of_length(H, args.path_length, limits)
    else:
        out = has_berge_cycle_of_length_at_least(H, args.cycle_min, limits)
    print(f"status\t{out.status}")
    print(f"nodes\t{out.nodes}")
    if out.certificate is not None:
        sys.stdout.write(format_certificate(out.certificate))
        if args.certificate_out:
            write_certificate(out.certificate, args.certificate_out)
    if args.longest_path:
        if out.certificate is None:
            return NOT_FOUND
        return OK if out.optimal else OVER_BUDGET
    if out.status == FOUND:
        return OK
    return OVER_BUDGET if out.status == BUDGET else NOT_FOUND


def cmd_verify(args) -> int:
    H = _load(args.input)
    try:
        cert = read_certificate(args.certificate)
    except OSError as exc:
        raise UsageError(f"{args.certificate}: {exc.strerror}") from None
    except FormatError as exc:
        raise UsageError(f"{args.certificate}: {exc}") from None
    bad = verify_path(H, cert) if isinstance(cert, BergePath) else verify_cycle(H, cert)
    if bad is None:
        print("ok")
        return OK
    print(f"violation\t{bad}")
    return NOT_FOUND


def cmd_bruteforce(args) -> int:
    limits = _limits(args)
    if args.out:
        try:
            summary, bad = sweep([(args.n, args.k, args.r, args.connected)], args.out, limits)
        except OSError as exc:
            raise UsageError(f"{args.out}: {exc}") from None
        sys.stdout.write(summary.read_text())
        return NOT_FOUND if bad else OK
    rep = brute_force_ex(args.n, args.k, args.r, args.connected, limits)
    chk = compare_with_formula(rep)
    sys.stdout.write(rep.to_text())
    print(f"formula\t{chk.bound.name}\t{chk.bound.value}\t"
          f"{'true' if chk.bound.hypothesis_ok else 'false'}\t"
          f"{'DISCREPANCY' if chk.discrepancy else ('yes' if chk.equal else 'no')}")
    if chk.discrepancy:
        return NOT_FOUND
    return OK if rep.authoritative else OVER_BUDGET


def cmd_selftest(args) -> int:
    ok = True
    for suite in (oracle_agreement(), rotation_suite()):
        print(suite.line())
        for msg in suite.failures[:10]:
            log.error("%s: %s", suite.name, msg)
        ok = ok and suite.ok
    return OK if ok else NOT_FOUND


COMMANDS = {
    "construct": cmd_construct,
    "count": cmd_count,
    "bounds": cmd_bounds,
    "search": cmd_search,
    "verify": cmd_verify,
    "bruteforce": cmd_bruteforce,
    "selftest": cmd_selftest,
}


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bergekit: error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
