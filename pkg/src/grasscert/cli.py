"""Command-line front end: ``grasscert <command> ...`` or ``python -m grasscert``."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import (additive_groups, circle_bundle_total, expected_betti, homotopy_table_of,
                      presentation_of, ring_of)
from .distinguish import full_report, invariants_of
from .grading import GradingError, lint_odd_squares, truncation_violations, validate_homogeneous
from .gysin import (GysinError, InfeasibleProfile, format_page, gysin_pipeline, profile_matches,
                    required_d2_profile, verify_total)
from .homotopy import grass_fibration, hopf, les_base
from .spaces import DEFAULT_VARIANT, VARIANTS, SpaceSpecError, parse_space
from .suite import reproduction_suite

BANNER = ("note: variant 'corrected' (default) repairs the printed even-Grassmannian relations; "
          "use --variant verbatim to see them as printed")


class UsageError(Exception):
    pass


def _space(text, args):
    s, variant = parse_space(text, args.variant)
    if s.kind == "GrassEven" and variant == "corrected":
        args._banner = True
    return s, variant


def _tuple(groups):
    return "(" + ",".join(g.short() for g in groups) + ")"


def _emit(args, text, data):
    if args.format == "json":
        args._out.write(json.dumps(data, sort_keys=True, indent=1) + "\n")
    else:
        args._out.write(text if text.endswith("\n") else text + "\n")


def cmd_cohomology(args):
    s, v = _space(args.space, args)
    groups = additive_groups(s, v)
    _emit(args, _tuple(groups), {"space": s.label, "variant": v, "groups": [str(g) for g in groups]})
    return 0


def cmd_ring(args):
    s, v = _space(args.space, args)
    r = ring_of(s, v)
    lines = [f"{s.label} [{v}]", presentation_of(s, v).to_text().rstrip()]
    for d in range(r.top_degree + 1):
        if not r.group(d).is_trivial():
            lines.append(f"H^{d} = {r.group(d)}  basis {', '.join(r.basis_labels(d))}")
    data = r.to_dict()
    try:
        inv = invariants_of(r).to_dict()["power_indices"]
        lines.append(f"power indices of x2: {inv}")
        data["power_indices"] = inv
    except GradingError:
        pass
    _emit(args, "\n".join(lines), {"space": s.label, "variant": v, "ring": data})
    return 0


def cmd_gysin(args):
    base, v = _space(args.base, args)
    total, _ = _space(args.total, args)
    if circle_bundle_total(base) != total:
        raise UsageError(f"{total.label} is not the circle bundle over {base.label} "
                         f"(expected {circle_bundle_total(base).label})")
    r = ring_of(base, v)
    e2, d, lim = gysin_pipeline(r)
    expected = additive_groups(total, v)
    lines = []
    if args.print_pages:
        lines += [format_page(e2).rstrip(), "", format_page(lim).rstrip(), ""]
    data = {"base": base.label, "total": total.label, "variant": v, "mode": args.mode}
    if args.print_pages:
        data["pages"] = {"E2": e2.to_dict(), "Einf": lim.to_dict()}
    if args.mode == "verify":
        rep = verify_total(lim, expected)
        lines.append(f"{'deg':>4}  {'expected':<12}{'assembled':<24}status")
        for vd in rep.verdicts:
            lines.append(f"{vd.degree:>4}  {str(vd.expected):<12}{vd.got:<24}{vd.status}")
        data["report"] = rep.to_dict()
        code = 0 if rep.ok else 1
    else:
        try:
            prof = required_d2_profile(r.groups(), expected)
        except InfeasibleProfile as exc:
            _emit(args, str(exc), {**data, "error": str(exc)})
            return 1
        bad = profile_matches(prof, d)
        for c in prof:
            lines.append(f"d2 at p = {c.p}: {c}" + ("   (computed d2 disagrees)" if c.p in bad else ""))
        data["profile"] = [{"p": c.p, "kind": c.kind,
                            "kernel": None if c.kernel is None else str(c.kernel),
                            "cokernel": None if c.cokernel is None else str(c.cokernel)} for c in prof]
        data["computed_disagrees_at"] = bad
        code = 1 if bad else 0
    _emit(args, "\n".join(lines), data)
    return code


def cmd_homotopy(args):
    m = re.fullmatch(r"(hopf|grass):(\d+)", args.target.strip().lower())
    level = args.max_level
    if m:
        n = int(m.group(2))
        fib = hopf(n) if m.group(1) == "hopf" else grass_fibration(n)
        table = les_base(homotopy_table_of(fib.fiber, level), homotopy_table_of(fib.total, level), level)
        name = f"{fib.name}: base {fib.base.label}"
        label = fib.base.label
    else:
        s, _ = _space(args.target, args)
        table = homotopy_table_of(s, level)
        name = label = s.label
    _emit(args, f"pi({name}) = {table}", {"space": label, "max_level": level, "pi": table.to_list()})
    return 0


def cmd_compare(args):
    a, va = _space(args.a, args)
    b, vb = _space(args.b, args)
    if va != vb:
        raise UsageError("both spaces must use the same variant")
    rep = full_report(a, b, args.max_level, args.bound, va)
    if args.format == "json":
        args._out.write(rep.to_json() + "\n")
    else:
        args._out.write(rep.to_text())
    return 0


def cmd_validate(args):
    s, v = _space(args.space, args)
    p = presentation_of(s, v)
    problems = [f"inhomogeneous: {x}" for x in validate_homogeneous(p)]
    problems += [f"lint: {x}" for x in lint_odd_squares(p)]
    r = ring_of(s, v)
    if not validate_homogeneous(p):
        problems += [f"truncation: degree {d} survives above the dimension"
                     for d in truncation_violations(p, s.dimension)]
    betti = expected_betti(s)
    for d, want in enumerate(betti):
        got = r.group(d).free_rank
        if got != want:
            problems.append(f"rank: degree {d} has rank {got}, Poincare polynomial says {want}")
    if s.kind == "StiefelEven":
        problems.append(f"product relation {p.relations[2]} kills H^{s.dimension}; groups declared instead")
    text = f"{s.label} [{v}]: " + ("ok" if not problems else f"{len(problems)} problem(s)")
    text += "".join(f"\n  {x}" for x in problems)
    _emit(args, text, {"space": s.label, "variant": v, "problems": problems})
    return 1 if problems else 0


def _k_range(text):
    m = re.fullmatch(r"(\d+)(?:-(\d+))?", text)
    if not m:
        raise UsageError(f"--k expects N or N-M, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if lo < 2 or hi < lo:
        raise UsageError(f"--k range {text!r} must satisfy 2 <= N <= M")
    return range(lo, hi + 1)


def cmd_report(args):
    ks = _k_range(args.k)
    if args.variant == "corrected":
        args._banner = True
    doc = reproduction_suite(ks, range(1, 7), args.variant)
    if args.format == "json":
        args._out.write(doc.to_json() + "\n")
    else:
        args._out.write(doc.to_text())
    return 0 if doc.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--variant", choices=VARIANTS, default=DEFAULT_VARIANT,
                        help="presentation variant for spaces without an @variant suffix")

    parser = argparse.ArgumentParser(prog="grasscert",
                                     description="Cohomology and homotopy checks for oriented "
                                                 "Grassmannians of 2-planes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", parents=[common], help="additive cohomology groups")
    p.add_argument("space")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("ring", parents=[common], help="presentation, bases and power indices")
    p.add_argument("space")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("gysin", parents=[common], help="two-row spectral sequence of a circle bundle")
    p.add_argument("--total", required=True)
    p.add_argument("--base", required=True)
    p.add_argument("--mode", choices=("verify", "derive-d2"), default="verify")
    p.add_argument("--print-pages", action="store_true")
    p.set_defaults(func=cmd_gysin)

    p = sub.add_parser("homotopy", parents=[common], help="low homotopy groups (hopf:N, grass:N or a space)")
    p.add_argument("target")
    p.add_argument("--max-level", type=int, default=12)
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("compare", parents=[common], help="full comparison report for two spaces")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--max-level", type=int, default=12)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("validate", parents=[common], help="lint a catalog presentation")
    p.add_argument("space")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("report", parents=[common], help="run the whole reproduction suite")
    p.add_argument("--k", default="2-8", help="k or k range such as 2-8")
    p.set_defaults(func=cmd_report)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "max_level", 0) < 0 or getattr(args, "bound", 0) < 0:
        err.write("grasscert: --max-level and --bound must be non-negative\n")
        return 2
    args._out = out
    args._banner = False
    try:
        code = args.func(args)
    except (SpaceSpecError, UsageError, GysinError) as exc:
        err.write(f"grasscert: {exc}\n")
        return 2
    if args._banner and args.format == "text":
        err.write(BANNER + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
