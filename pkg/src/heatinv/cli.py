"""Command-line interface.

Exit codes: 0 success, 2 domain or admissibility error, 3 numerical
tolerance failure, 64 usage error. Output is RFC-4180 CSV with one header
row.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from heatinv.errors import DomainError, NumericalError

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERICAL = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x, digits):
    if isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    return f"{x:.{digits}g}"


def _emit(header, rows, out, digits=6, formats=None):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(header)
    for row in rows:
        if formats is None:
            w.writerow([_fmt(v, digits) for v in row])
        else:
            w.writerow([f(v) for f, v in zip(formats, row)])
    text = buf.getvalue()
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, newline="")


def _read_config(path):
    cfg = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        msg = f"cannot read config {path}: {exc}"
        raise UsageError(msg) from exc
    for n, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            msg = f"{path}:{n}: expected key=value"
            raise UsageError(msg)
        key, value = (p.strip() for p in line.split("=", 1))
        cfg[key.lstrip("-").replace("-", "_")] = value
    return cfg


def _common(p):
    p.add_argument("--output", "-o", help="write CSV here instead of stdout")
    p.add_argument("--digits", type=int, default=None, help="significant digits (default 6)")
    p.add_argument("--config", help="key=value file; explicit flags take precedence")


def _drainage_flags(p):
    g = p.add_argument_group("drainage scenario (m, days)")
    g.add_argument("--h0", type=float, help="initial water-table height above drains")
    g.add_argument("--d", type=float, help="drain elevation above the impervious layer")
    g.add_argument("--H", type=float, help="observed height")
    g.add_argument("--T", type=float, help="elapsed time")
    g.add_argument("--L", type=float, help="half drain spacing")
    g.add_argument("--A", type=float, help="diffusion coefficient, m^2/day")
    g.add_argument("--K", type=float, help="hydraulic conductivity, m/day")
    g.add_argument("--S-y", dest="S_y", type=float, help="drainable porosity")


def _infiltration_flags(p):
    g = p.add_argument_group("infiltration scenario (cm, h)")
    g.add_argument("--theta0", type=float, help="residual moisture")
    g.add_argument("--theta1", type=float, help="boundary moisture")
    g.add_argument("--Theta", type=float, help="moisture at depth L/2 and time T")
    g.add_argument("--D0", type=float, help="diffusivity, cm^2/h")
    g.add_argument("--L", type=float, help="profile length")
    g.add_argument("--T", type=float, help="measurement time")


def build_parser() -> _Parser:
    parser = _Parser(prog="heatinv", description="Solve I(a) = c and the related inverse problems.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("solve-a", help="estimate a from c")
    p.add_argument("--c", type=float, help="normalized datum in (0, 1)")
    p.add_argument("--scheme", default="perfect_match")
    _common(p)

    p = sub.add_parser("forward", help="evaluate h(x, t) or theta(x, t)")
    p.add_argument("--problem", choices=("drainage", "infiltration"))
    p.add_argument("--x", type=float)
    p.add_argument("--t", type=float)
    g = p.add_argument_group("scenario")
    for flag, help_ in (
        ("--h0", "drainage: initial height"),
        ("--d", "drainage: drain elevation"),
        ("--L", "half spacing (m) or profile length (cm)"),
        ("--A", "drainage: diffusion coefficient"),
        ("--K", "drainage: conductivity"),
        ("--theta0", "infiltration: residual moisture"),
        ("--theta1", "infiltration: boundary moisture"),
        ("--D0", "infiltration: diffusivity"),
    ):
        g.add_argument(flag, type=float, help=help_)
    g.add_argument("--S-y", dest="S_y", type=float, help="drainage: porosity")
    _common(p)

    for name, help_ in (("drain-spacing", "IP1: half spacing L"), ("drain-time", "IP2: time T")):
        p = sub.add_parser(name, help=help_)
        _drainage_flags(p)
        p.add_argument("--scheme", default="perfect_match")
        _common(p)

    p = sub.add_parser("diffusivity", help="IP3: diffusivity D0")
    _infiltration_flags(p)
    p.add_argument("--scheme", default="perfect_match")
    _common(p)

    p = sub.add_parser("table", help="reproduce a comparison table")
    p.add_argument("--id", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--data", help="field CSV for table 2 (T_days,H_minus_d_m,S_y,K_m_per_day)")
    p.add_argument("--d", type=float, help="drain elevation for table 2 from field data")
    _common(p)

    p = sub.add_parser("error-curve", help="relative error of a scheme over a c-grid")
    p.add_argument("--scheme")
    p.add_argument("--grid", type=int, default=999, help="number of uniform points (default 999)")
    p.add_argument("--workers", type=int, default=1)
    _common(p)

    p = sub.add_parser("simulate", help="synthetic infiltration scenarios")
    p.add_argument("--seed", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--times", help="comma-separated times in h")
    _common(p)
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        msg = f"{args.command}: missing " + ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(msg)


def _cmd_solve_a(args):
    from heatinv.composite import relative_error
    from heatinv.schemes import solve_a

    _require(args, "c")
    a = solve_a(args.c, args.scheme)
    r = relative_error(args.c, a)
    _emit(("scheme", "c", "a", "c_reconstructed", "re_percent"),
          [(args.scheme, r.c_target, r.a_estimate, r.c_reconstructed, r.re_percent)],
          args.output, args.digits)


def _drainage(args, need):
    from heatinv.physics import DrainageScenario

    _require(args, "h0", "d", *need)
    if args.A is None and (args.K is None or args.S_y is None):
        msg = f"{args.command}: give --A or both --K and --S-y"
        raise UsageError(msg)
    return DrainageScenario(
        h0=args.h0, d=args.d, H=getattr(args, "H", None), T=getattr(args, "T", None),
        L=args.L, A=args.A, K=args.K, S_y=args.S_y,
    )


def _cmd_forward(args):
    from heatinv.contour import eval_h, eval_theta
    from heatinv.physics import InfiltrationScenario

    _require(args, "problem", "x", "t")
    if args.problem == "drainage":
        s = _drainage(args, ("L",))
        _emit(("x_m", "t_days", "h_m"), [(args.x, args.t, eval_h(args.x, args.t, s))], args.output, args.digits)
    else:
        _require(args, "theta0", "theta1", "L", "D0")
        s = InfiltrationScenario(theta0=args.theta0, theta1=args.theta1, L=args.L, D0=args.D0)
        _emit(("x_cm", "t_h", "theta"), [(args.x, args.t, eval_theta(args.x, args.t, s))], args.output, args.digits)


def _cmd_spacing(args):
    from heatinv.physics import reduce_drainage, solve_ip

    s = _drainage(args, ("H", "T"))
    L = solve_ip("IP1", s, args.scheme)
    _emit(("scheme", "c1", "L_m", "spacing_2L_m"), [(args.scheme, reduce_drainage(s), L, 2 * L)], args.output, args.digits)


def _cmd_time(args):
    from heatinv.physics import reduce_drainage, solve_ip

    s = _drainage(args, ("H", "L"))
    T = solve_ip("IP2", s, args.scheme)
    _emit(("scheme", "c1", "T_days"), [(args.scheme, reduce_drainage(s), T)], args.output, args.digits)


def _cmd_diffusivity(args):
    from heatinv.physics import InfiltrationScenario, reduce_infiltration, solve_ip

    _require(args, "theta0", "theta1", "Theta", "L", "T")
    s = InfiltrationScenario(theta0=args.theta0, theta1=args.theta1, L=args.L, Theta=args.Theta, T=args.T)
    D0 = solve_ip("IP3", s, args.scheme)
    _emit(("scheme", "c2", "D0_cm2_per_h"), [(args.scheme, reduce_infiltration(s), D0)], args.output, args.digits)


def _fixed(n):
    return lambda v: f"{v:.{n}f}"


def _cmd_table(args):
    from heatinv import tables

    _require(args, "id")
    if args.data and args.id != 2:
        msg = "--data applies to table 2 only"
        raise UsageError(msg)
    try:
        rows = tables.read_field_csv(args.data) if args.data else None
    except OSError as exc:
        msg = f"cannot read {args.data}: {exc}"
        raise UsageError(msg) from exc
    result = tables.reproduce(args.id, rows, args.d)
    dec = tables.TABLE_DIGITS[args.id]
    if args.table_digits_explicit:
        formats = None
    else:
        lead = {
            1: [str, str, _fixed(3)],
            2: [_fixed(0), _fixed(5)],
            3: [_fixed(0), _fixed(5)],
            4: [_fixed(0), _fixed(6), _fixed(6)],
        }[args.id]
        formats = lead + [_fixed(dec)] * (len(tables.HEADERS[args.id]) - len(lead))
    _emit(tables.HEADERS[args.id], result, args.output, args.digits, formats)


def _cmd_error_curve(args):
    from heatinv.oracle import default_grid, error_sweep

    _require(args, "scheme")
    if args.grid < 1 or args.workers < 1:
        msg = "--grid and --workers must be positive"
        raise UsageError(msg)
    reports = error_sweep(args.scheme, default_grid(args.grid), workers=args.workers)
    _emit(
        ("c", "a_estimate", "c_reconstructed", "re_percent"),
        [(r.c_target, r.a_estimate, r.c_reconstructed, r.re_percent) for r in reports],
        args.output,
        args.digits,
    )
    failed = [r for r in reports if not r.ok]
    for r in failed:
        print(f"c={r.c_target}: {r.error}", file=sys.stderr)


def _cmd_simulate(args):
    from heatinv.physics import reduce_infiltration, simulate_moisture

    _require(args, "seed", "n", "times")
    try:
        times = [float(t) for t in args.times.split(",") if t.strip()]
    except ValueError as exc:
        msg = f"--times: {exc}"
        raise UsageError(msg) from exc
    scen = simulate_moisture(args.seed, args.n, times)
    _emit(
        ("T_h", "D0_cm2_per_h", "Theta", "c2", "theta0", "theta1", "L_cm"),
        [(s.T, s.D0, s.Theta, reduce_infiltration(s), s.theta0, s.theta1, s.L) for s in scen],
        args.output,
        args.digits,
    )


COMMANDS = {
    "solve-a": _cmd_solve_a,
    "forward": _cmd_forward,
    "drain-spacing": _cmd_spacing,
    "drain-time": _cmd_time,
    "diffusivity": _cmd_diffusivity,
    "table": _cmd_table,
    "error-curve": _cmd_error_curve,
    "simulate": _cmd_simulate,
}


def _parse(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        cfg = _read_config(args.config)
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest for a in sub._actions}
        unknown = sorted(set(cfg) - known - {"config"})
        if unknown:
            msg = f"unknown config keys: {', '.join(unknown)}"
            raise UsageError(msg)
        sub.set_defaults(**cfg)
        args = parser.parse_args(argv)
    return args


def dispatch(argv=None) -> int:
    """Run one command and return its exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _parse(argv)
        args.table_digits_explicit = args.digits is not None
        if args.digits is None:
            args.digits = 6
        if args.digits < 1:
            msg = "--digits must be at least 1"
            raise UsageError(msg)
        COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())
