"""``gfw`` command line.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import models
from .algebra import Morphism
from .checks import SUITES, run_suite
from .cohomology import betti_table, cohomology_kernel_of_map
from .ideals import chern_ring, truncation_kernel_min_gens

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_betti(args, table, d: int) -> str:
    if args.format == "json":
        return table.to_json(d=d)
    if args.format == "csv":
        return table.to_csv()
    lines = [f"{table.model}: dim H^k for k <= {table.max_degree}"]
    lines += [f"{k:4d}  {table[k]}" for k in range(table.max_degree + 1)]
    return "\n".join(lines)


def cmd_wu_betti(args) -> int:
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    bundle = models.build_WU(args.d)
    if not 0 <= args.max_degree <= bundle.cutoff:
        raise UsageError(f"--max-degree must lie in [0, {bundle.cutoff}] for WU_{args.d}")
    _emit(args, _render_betti(args, betti_table(bundle.dga, args.max_degree, args.jobs), args.d))
    return 0


def cmd_gamma_betti(args) -> int:
    if args.d != 3:
        raise UsageError(f"unsupported dimension d={args.d}: only d=3 is available")
    if not 0 <= args.max_degree <= models.GAMMA_MAX:
        raise UsageError(f"--max-degree must lie in [0, {models.GAMMA_MAX}]: the generator "
                         f"and differential table is only valid through degree {models.GAMMA_MAX}")
    bundle = models.build_gamma(args.max_degree)
    _emit(args, _render_betti(args, betti_table(bundle.dga, args.max_degree, args.jobs), args.d))
    return 0


def cmd_kernel(args) -> int:
    if args.model == "fdso":
        if args.d < 2:
            raise UsageError("--d must be at least 2 for fdso")
        bundle = models.build_FdSOd(args.d)
        source = models.build_BSO(args.d)
        if not 0 <= args.max_degree <= bundle.cutoff:
            raise UsageError(f"--max-degree must lie in [0, {bundle.cutoff}]")
    else:
        if args.d != 3:
            raise UsageError(f"unsupported dimension d={args.d}: only d=3 is available")
        if not 0 <= args.max_degree <= models.GAMMA_MAX:
            raise UsageError(f"--max-degree must lie in [0, {models.GAMMA_MAX}]: the table is "
                             f"only valid through degree {models.GAMMA_MAX}")
        bundle = models.build_gamma()
        source = models.build_BSO(args.d + 1)
    f = Morphism.from_names(source, bundle.algebra, same_name=True)
    ker = cohomology_kernel_of_map(source, f, bundle.dga, args.max_degree)
    kernel = {str(k): [str(v) for v in vs] for k, vs in sorted(ker.items())}
    if args.format == "json":
        text = _dump({"model": args.model, "d": args.d, "max_degree": args.max_degree,
                      "kernel": kernel})
    elif args.format == "csv":
        text = _csv(["degree", "element"], [(k, v) for k, vs in kernel.items() for v in vs])
    else:
        lines = [f"kernel of H(B) -> H({bundle.name}) through degree {args.max_degree}"]
        lines += [f"{k:>4}  {', '.join(vs)}" for k, vs in kernel.items()] or ["  (zero)"]
        text = "\n".join(lines)
    _emit(args, text)
    return 0


def cmd_ideal_mingens(args) -> int:
    if not 1 <= args.d <= 8:
        raise UsageError("--d must lie in [1, 8]")
    mg = truncation_kernel_min_gens(chern_ring(args.d), 2 * args.d)
    data = mg.to_dict()
    if args.format == "json":
        text = _dump({"model": f"U_{args.d}", "d": args.d, "max_degree": 4 * args.d,
                      "mingens": data})
    elif args.format == "csv":
        text = _csv(["degree", "monomial"], [(k, m) for k, ms in data.items() for m in ms])
    else:
        text = "\n".join(f"{k:>4}  {', '.join(ms)}" for k, ms in data.items())
    _emit(args, text)
    return 0


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    results = run_suite(args.suite)
    if args.format == "json":
        text = _dump({"model": args.suite, "d": 3, "max_degree": models.GAMMA_MAX,
                      "report": [r.row() for r in results]})
    elif args.format == "csv":
        text = _csv(["check", "anchor", "status"],
                    [(r.name, r.anchor, "pass" if r.passed else "fail") for r in results])
    else:
        text = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  [{r.anchor}]"
                         + (f"\n      {r.detail}" if not r.passed and r.detail else "")
                         for r in results)
    _emit(args, text)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="json (default) or csv/text; verify defaults to text")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="degree-slice parallelism")

    p = argparse.ArgumentParser(prog="gfw", description="Exact CDGA cohomology workbench")
    sub = p.add_subparsers(dest="command", required=True)

    wu = sub.add_parser("wu", help="truncated Koszul model WU_d")
    wu_sub = wu.add_subparsers(dest="action", required=True)
    q = wu_sub.add_parser("betti", parents=[common])
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--max-degree", type=int, required=True)
    q.set_defaults(func=cmd_wu_betti)

    gamma = sub.add_parser("gamma", help="section-space model for S^3")
    gamma_sub = gamma.add_subparsers(dest="action", required=True)
    q = gamma_sub.add_parser("betti", parents=[common])
    q.add_argument("--d", type=int, default=3)
    q.add_argument("--max-degree", type=int, default=models.GAMMA_MAX)
    q.set_defaults(func=cmd_gamma_betti)

    q = sub.add_parser("kernel", parents=[common], help="kernel of H(BSO) -> H(model)")
    q.add_argument("--model", choices=("fdso", "gamma"), required=True)
    q.add_argument("--d", type=int, default=3)
    q.add_argument("--max-degree", type=int, required=True)
    q.set_defaults(func=cmd_kernel)

    ideal = sub.add_parser("ideal", help="monomial ideals in Q[c_1..c_d]")
    ideal_sub = ideal.add_subparsers(dest="action", required=True)
    q = ideal_sub.add_parser("mingens", parents=[common])
    q.add_argument("--d", type=int, required=True)
    q.set_defaults(func=cmd_ideal_mingens)

    q = sub.add_parser("verify", parents=[common], help="run consistency suites")
    q.add_argument("--suite", default="all")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    if getattr(args, "format", None) is None:
        args.format = "text" if args.func is cmd_verify else "json"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gfw: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
