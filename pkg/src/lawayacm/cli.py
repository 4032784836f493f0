"""Command-line front end: ``lawayacm cohom|spectrum|classify|verify|quiver``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .acm import classify_laway_lines, line_h1_support
from .bundlecalc import Assumption, Spectrum, parse_bundle_expr, spectrum
from .errors import IndeterminateError, InputError, LawayError
from .geometry import chi_line, format_divisor, get_surface, parse_divisor
from .linecoh import cohom_line
from .quiver import Quiver, euler_form, get_shape, moduli_dim, parse_dimvec, root_type
from .verify import REGISTRY, Report, verify_theorem

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- rendering ------------------------------------------------------------------

def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def spectrum_table(sp: Spectrum) -> str:
    """Rows q = 2, 1, 0 over columns p = twist, laid out like the cohomology tables."""
    twists = sp.twists
    cells = {(i, t): str(sp.h(i, t)) for i in range(3) for t in twists}
    labels = {t: f"p={t}" for t in twists}
    width = max(len(s) for s in list(cells.values()) + list(labels.values()))
    lines = []
    for i in (2, 1, 0):
        row = " | ".join(cells[i, t].rjust(width) for t in twists)
        lines.append(f"| {row} |  q={i}")
    lines.append("  " + "   ".join(labels[t].rjust(width) for t in twists))
    return "\n".join(lines) + "\n"


def emit_spectrum(sp: Spectrum, fmt: str) -> str:
    if fmt == "csv":
        return sp.to_csv()
    if fmt == "json":
        rows = [{"twist": t, "h0": str(sp.h(0, t)), "h1": str(sp.h(1, t)), "h2": str(sp.h(2, t)),
                 "chi": sp.chi[t] if sp.chi else None} for t in sp.twists]
        return _json({"kind": sp.kind, "window": list(sp.window), "entries": rows})
    return spectrum_table(sp)


def _fmt_value(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))


def emit(report: Report, fmt: str = "table") -> str:
    """Deterministic rendering of a verification report."""
    if fmt == "json":
        return _json(report.to_dict())
    if fmt == "csv":
        rows = [[report.id, d.location, d.claim, _fmt_value(d.paper_value), _fmt_value(d.computed_value), d.status]
                for d in report.details]
        return _csv(["id", "location", "claim", "paper_value", "computed_value", "status"], rows)
    out = [
        f"id: {report.id}",
        f"anchor: {report.anchor}",
        f"claim: {report.claim}",
        "params: " + (", ".join(f"{k}={v}" for k, v in sorted(report.params.items())) or "defaults"),
        f"verdict: {report.verdict}",
    ]
    for d in report.details:
        stated, got = _fmt_value(d.paper_value), _fmt_value(d.computed_value)
        if d.status == "match":
            out.append(f"{d.status:<13} {d.claim}: {got}")
        else:
            out.append(f"{d.status:<13} {d.claim}: stated {stated}, computed {got}")
    if report.counterexamples:
        out.append("counterexamples:")
        out.extend(f"  {_fmt_value(c)}" for c in report.counterexamples)
    if report.notes:
        out.append("notes:")
        out.extend(f"  - {n}" for n in report.notes)
    return "\n".join(out) + "\n"


# --- subcommands ------------------------------------------------------------------

def _cmd_cohom(args, out):
    surface = get_surface(args.surface)
    d = parse_divisor(args.divisor, surface)
    h = cohom_line(surface, d, sections=args.sections)
    chi = chi_line(surface, d)
    if args.format == "json":
        out.write(_json({"surface": surface.kind, "divisor": format_divisor(d),
                         "h0": h.h0, "h1": h.h1, "h2": h.h2, "chi": chi}))
    elif args.format == "csv":
        out.write(_csv(["divisor", "h0", "h1", "h2", "chi"], [[format_divisor(d), h.h0, h.h1, h.h2, chi]]))
    else:
        out.write(f"{h.h0} {h.h1} {h.h2}  chi={chi}\n")
    return EXIT_OK


def _cmd_spectrum(args, out):
    surface = get_surface(args.surface)
    expr = parse_bundle_expr(args.expr, surface)
    assumptions = [Assumption.parse(a) for a in args.assume]
    sp = spectrum(expr, window=args.window, assumptions=assumptions, duality=not args.no_duality,
                  sections=args.sections, l_max=args.l_max)
    out.write(emit_spectrum(sp, args.format))
    return EXIT_OK


def _cmd_classify(args, out):
    surface = get_surface(args.surface)
    bound = args.bound
    if bound is not None:
        try:
            bound = tuple(int(b) for b in bound.split(",")) if "," in bound else int(bound)
        except ValueError:
            raise InputError(f"--bound {args.bound!r} is not an integer or a comma list") from None
    found = classify_laway_lines(surface, args.l, bound, sections=args.sections)
    rows = []
    for d in found:
        sup = line_h1_support(surface, d, args.sections)
        rows.append((format_divisor(d), sup[0], sup[-1] - sup[0]))
    if args.format == "json":
        out.write(_json({"surface": surface.kind, "l": args.l,
                         "lines": [{"divisor": d, "k0": k0, "s": s} for d, k0, s in rows]}))
    elif args.format == "csv":
        out.write(_csv(["divisor", "k0", "s"], rows))
    else:
        for d, k0, s in rows:
            out.write(f"{d}  k0={k0} s={s}\n")
    return EXIT_OK


def _cmd_verify(args, out):
    ids = list(REGISTRY) if args.id.lower() == "all" else [args.id]
    params = {"l_max": args.l_max}
    if args.families is not None:
        params["families"] = args.families
    code = EXIT_OK
    reports = []
    for key in ids:
        p = dict(params)
        if key.upper() != "BL1-LINES":
            p.pop("families", None)
        rep = verify_theorem(key, p)
        reports.append(rep)
        if rep.verdict == "mismatch":
            code = EXIT_MISMATCH
        elif rep.verdict == "indeterminate" and code == EXIT_OK:
            code = EXIT_USAGE
    if args.format == "json" and len(reports) > 1:
        out.write(_json([r.to_dict() for r in reports]))
    else:
        out.write("".join(emit(r, args.format) for r in reports))
    return code


def _quiver_of(args) -> Quiver:
    if args.arrows:
        return Quiver.parse_arrows(args.arrows, args.vertices)
    return get_shape(args.shape)


def _cmd_quiver(args, out):
    q = _quiver_of(args)
    d = parse_dimvec(args.dim, args.l)
    if args.action == "euler":
        e = parse_dimvec(args.dim2, args.l) if args.dim2 else d
        value = euler_form(q, d, e)
        rt = root_type(q, d) if not args.dim2 else None
        rec = {"quiver": str(q), "d": list(d.dims), "e": list(e.dims), "euler_form": value, "root_type": rt}
    else:
        value = moduli_dim(q, d, args.m)
        rec = {"quiver": str(q), "d": list(d.dims), "m": args.m, "moduli_dim": value}
    if args.format == "json":
        out.write(_json(rec))
    elif args.format == "csv":
        keys = [k for k, v in rec.items() if v is not None]
        out.write(_csv(keys, [[_fmt_value(rec[k]) if isinstance(rec[k], list) else rec[k] for k in keys]]))
    elif args.action == "euler":
        name = "<d,e>" if args.dim2 else "<d,d>"
        out.write(f"{name} = {value}" + (f"  root_type={rt}" if rt else "") + "\n")
    else:
        out.write(f"moduli_dim = {value}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lawayacm", description="Cohomology and l-away ACM checks on rational surfaces.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, sections=True):
        sp.add_argument("--format", choices=FORMATS, default="table")
        if sections:
            sp.add_argument("--sections", choices=("formula", "oracle"), default="formula",
                            help="how h0 of a line bundle is counted (default: formula)")

    c = sub.add_parser("cohom", help="cohomology of a line bundle")
    c.add_argument("surface")
    c.add_argument("divisor")
    common(c)
    c.set_defaults(func=_cmd_cohom)

    s = sub.add_parser("spectrum", help="cohomology table of a bundle expression")
    s.add_argument("surface")
    s.add_argument("expr")
    s.add_argument("--window", help="twist range a..b (default from the slope and --l-max)")
    s.add_argument("--assume", action="append", default=[], metavar="SPEC",
                   help='repeatable, e.g. "h0:t<=-1:0:source"')
    s.add_argument("--l-max", type=int, default=12)
    s.add_argument("--no-duality", action="store_true", help="skip the rank 2 Serre duality pass")
    common(s)
    s.set_defaults(func=_cmd_spectrum)

    k = sub.add_parser("classify", help="enumerate initialized l-away line bundles")
    k.add_argument("what", choices=("lines",))
    k.add_argument("surface")
    k.add_argument("--l", type=int, required=True)
    k.add_argument("--bound", help="coordinate bound B or per-coordinate B1,B2,... (default 3l+9)")
    common(k)
    k.set_defaults(func=_cmd_classify)

    v = sub.add_parser("verify", help="recompute a registered claim")
    v.add_argument("id", help="registry id or 'all': " + ", ".join(REGISTRY))
    v.add_argument("--l-max", type=int)
    v.add_argument("--families", choices=("auto", "strict", "proof"),
                   help="Bl1 family reading for BL1-LINES (default auto)")
    common(v, sections=False)
    v.set_defaults(func=_cmd_verify)

    q = sub.add_parser("quiver", help="Euler form and moduli dimension of quiver representations")
    q.add_argument("action", choices=("euler", "moduli"))
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--shape", choices=("kronecker3", "beilinsonQ"))
    g.add_argument("--arrows", help='inline quiver such as "0>1,0>1,0>1"')
    q.add_argument("--vertices", type=int, help="vertex count for --arrows")
    q.add_argument("--dim", required=True, help='dimension vector, e.g. "l,l+2"')
    q.add_argument("--dim2", help="second vector for <d,e> (euler only)")
    q.add_argument("--l", type=int)
    q.add_argument("--m", type=int, default=1)
    common(q, sections=False)
    q.set_defaults(func=_cmd_quiver)
    return p


def _glue_windows(argv):
    """Let ``--window -4..0`` through: argparse would read the value as a flag."""
    out, it = [], iter(argv)
    for a in it:
        if a == "--window":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--window={nxt}")
        else:
            out.append(a)
    return out


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _glue_windows(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except IndeterminateError as exc:
        err.write(f"indeterminate: {exc}\n")
        return EXIT_USAGE
    except LawayError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
