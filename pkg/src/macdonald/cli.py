"""Command-line front end.

Exit codes: 0 success, 1 an identity failed, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

from . import cfunctions as cf
from . import inner as ip
from . import polynomials as mp
from . import verify
from .algebra import LaurentPoly
from .serialize import DiskCache, default_cache_dir, dumps

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(a) for a in text.replace(" ", "").split(",") if a != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return k


def _positive(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_positive, required=True, help="number of variables")
    common.add_argument("--format", choices=("pretty", "json"), default="pretty")
    common.add_argument("--cache-dir", help="directory for cached E polynomials")

    parser = argparse.ArgumentParser(
        prog="macdonald", description="Exact nonsymmetric and symmetric Macdonald polynomials."
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    e = sub.add_parser("e", parents=[common], help="E_mu")
    e.add_argument("--mu", type=_int_list, required=True)
    for name, what in (("p", "P_lambda"), ("a", "A_{lambda+rho}")):
        s = sub.add_parser(name, parents=[common], help=what)
        s.add_argument("--lambda", dest="lam", type=_int_list, required=True)

    sp = sub.add_parser("spec", parents=[common], help="principal specialization")
    sp.add_argument("which", choices=("e", "p"))
    sp.add_argument("--mu", type=_int_list)
    sp.add_argument("--lambda", dest="lam", type=_int_list)

    nm = sub.add_parser("norm", parents=[common], help="(P_lambda, P_lambda) at t = q^k")
    nm.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    nm.add_argument("--k", type=_nonneg, required=True)

    ct = sub.add_parser("ct", parents=[common], help="constant term of the t = q^k kernel")
    ct.add_argument("--k", type=_nonneg, required=True)

    vf = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    vf.add_argument("suite", choices=verify.SUITES)
    vf.add_argument("--max-deg", type=_nonneg, default=2)
    vf.add_argument("--k", type=_nonneg, default=1)
    return parser


def _index(parser, args, attr: str, flag: str, decreasing: bool = False):
    val = getattr(args, attr, None)
    if val is None:
        parser.error(f"{flag} is required")
    if len(val) != args.n:
        parser.error(f"{flag} has {len(val)} entries but --n is {args.n}")
    if decreasing and any(val[i] < val[i + 1] for i in range(len(val) - 1)):
        parser.error(f"{flag} must be weakly decreasing")
    return tuple(val)


def _seed(disk: Optional[DiskCache], mu: Sequence[int]) -> LaurentPoly:
    """E_mu, through the disk cache when one is configured."""
    if disk is None:
        return mp.E(mu)
    f = disk.E(mu)
    if min(mu) == 0:
        mp.DEFAULT_CACHE.put(tuple(mu), f)
    return f


def _emit_poly(f: LaurentPoly, fmt: str):
    if fmt == "json":
        print(dumps(f))
    else:
        print(f)


def _emit_pair(label: str, direct, closed, fmt: str) -> int:
    ok = direct == closed
    if fmt == "json":
        print(json.dumps({"quantity": label, "direct": str(direct), "closed": str(closed), "equal": ok}, sort_keys=True))
    else:
        print(f"{label}")
        print(f"  direct: {direct}")
        print(f"  closed: {closed}")
    if not ok:
        print(f"identity failed: {label}: direct {direct} != closed {closed}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return _dispatch(parser, args)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK


def _dispatch(parser, args) -> int:
    cache_dir = args.cache_dir or default_cache_dir()
    disk = DiskCache(cache_dir) if cache_dir else None
    n, fmt = args.n, args.format

    if args.cmd == "e":
        _emit_poly(_seed(disk, _index(parser, args, "mu", "--mu")), fmt)
        return EXIT_OK
    if args.cmd == "p":
        lam = _index(parser, args, "lam", "--lambda", decreasing=True)
        _seed(disk, lam)
        _emit_poly(mp.P(lam), fmt)
        return EXIT_OK
    if args.cmd == "a":
        lam = _index(parser, args, "lam", "--lambda", decreasing=True)
        _seed(disk, tuple(a + b for a, b in zip(lam, mp.rho(n))))
        _emit_poly(mp.A(lam), fmt)
        return EXIT_OK
    if args.cmd == "spec":
        if args.which == "e":
            mu = _index(parser, args, "mu", "--mu")
            if min(mu) < 0:
                parser.error("--mu must be nonnegative for the principal specialization")
            direct = cf.princspec_direct(_seed(disk, mu))
            return _emit_pair(f"E{mu}(1, t, ..., t^{n - 1})", direct, cf.princspec_E_closed(mu), fmt)
        lam = _index(parser, args, "lam", "--lambda", decreasing=True)
        if min(lam) < 0:
            parser.error("--lambda must be nonnegative for the principal specialization")
        _seed(disk, lam)
        direct = cf.princspec_direct(mp.P(lam))
        return _emit_pair(f"P{lam}(1, t, ..., t^{n - 1})", direct, cf.princspec_P_closed(lam), fmt)
    if args.cmd == "norm":
        lam = _index(parser, args, "lam", "--lambda", decreasing=True)
        _seed(disk, lam)
        f = mp.P(lam)
        direct = ip.inner(f, f, n, args.k)
        return _emit_pair(f"(P{lam}, P{lam}) at t=q^{args.k}", direct, cf.norm_P_closed(lam, args.k), fmt)
    if args.cmd == "ct":
        direct = ip.kernel(n, args.k).ct()
        return _emit_pair(f"ct kernel(n={n}, k={args.k})", direct, cf.ct_closed(n, args.k), fmt)
    if args.cmd == "verify":
        out = verify.run_suite(args.suite, n, args.max_deg, args.k)
        if fmt == "json":
            print(json.dumps(
                {"suite": out.suite, "n": n, "checked": out.checked, "passed": out.passed,
                 "counterexample": out.failure},
                sort_keys=True,
            ))
        else:
            status = "PASS" if out.passed else "FAIL"
            print(f"{status} {out.suite} n={n} max-deg={args.max_deg} k={args.k}: {out.checked} checks")
        if not out.passed:
            print(f"counterexample: {out.failure}", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    parser.error(f"unknown command {args.cmd!r}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
