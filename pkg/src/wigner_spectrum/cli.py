"""
Command-line front end.

Subcommands: ``report``, ``sweep``, ``oracle``, ``asymptote``, ``spectrum``.
Every subcommand accepts ``--config FILE`` with ``key = value`` lines
(``#`` comments); flags given on the command line override the file.

Exit codes: 0 success, 2 domain/argument error, 3 numeric failure,
4 sweep with no successful row, 5 oracle threshold breach.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import entropies, harmonic, oracle, spectrum, sweeps
from .errors import DomainError, WignerSpectrumError
from .potentials import parse_potential
from .spectrum import TrapGeometry, _fmt

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3
EXIT_SWEEP_EMPTY = 4
EXIT_ORACLE_FAIL = 5

PROG = "wigner-spectrum"


class CLIError(Exception):
    def __init__(self, message, code=EXIT_DOMAIN):
        super().__init__(message)
        self.code = code


def _floats(text: str) -> tuple:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _alphas(text: str) -> tuple:
    try:
        return tuple(entropies.renyi_order(v) for v in text.split(",") if v.strip())
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_point_args(p, alpha=False):
    p.add_argument("--pot", help='interaction, e.g. "ip(beta=1)", "il()", "sip(beta=1,gamma=0.5)", "gr(sigma=10)"')
    p.add_argument("--g", type=float, help="interaction strength")
    p.add_argument("--eps", type=_floats, help="anisotropies eps_1,...,eps_{D-1} (each > 1)")
    if alpha:
        p.add_argument("--alpha", type=_alphas, help="Renyi orders, comma separated (numbers, inf, vn)")


def _add_output(p):
    p.add_argument("--output", "-o", help="write CSV here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Entanglement spectrum and entropies of two-particle Wigner molecules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="entropy report for one configuration")
    _add_point_args(p, alpha=True)
    p.add_argument("--csv", action="store_true", help="emit the per-alpha CSV instead of the summary")
    _add_output(p)

    p = sub.add_parser("sweep", help="parameter sweep or named figure preset")
    p.add_argument("--preset", choices=sweeps.PRESETS)
    _add_point_args(p, alpha=True)
    p.add_argument("--g-range", nargs=3, metavar=("LO", "HI", "N"), help="g grid; overrides --g")
    p.add_argument("--g-spacing", choices=("log", "lin"), default="log")
    p.add_argument("--eps-range", nargs=3, metavar=("LO", "HI", "N"), help="grid for a single eps (D=2)")
    p.add_argument("--eps-spacing", choices=("log", "lin"), default="lin")
    p.add_argument("--tail-bound", type=float, help="also count spectrum levels needed for this omitted mass")
    _add_output(p)

    p = sub.add_parser("oracle", help="numerical cross-checks of the closed forms")
    _add_point_args(p)
    p.add_argument("--svd-n", type=int, default=oracle.SVD_POINTS, help="SVD grid points per axis")
    p.add_argument("--fd-n", type=int, default=oracle.FD_POINTS, help="finite-difference grid points")
    p.add_argument("--half-width", type=float, help="SVD grid half width (default from x0 and widths)")
    p.add_argument("--force", action="store_true", help="run outside the overlap gate, without asserting")
    _add_output(p)

    p = sub.add_parser("asymptote", help="S_y^1 against its isotropic-limit leading term")
    p.add_argument("--eps", type=_floats, help="values in (1, 1.1]")
    _add_output(p)

    p = sub.add_parser("spectrum", help="dump the ordered occupancy spectrum")
    _add_point_args(p)
    p.add_argument("--tail-bound", type=float, default=1e-12)
    p.add_argument("--renormalize", action="store_true", help="drop the 1/(1+s) factor")
    _add_output(p)

    for action in sub.choices.values():
        action.add_argument("--config", help="key = value file; command-line flags win")
    return parser


# config -------------------------------------------------------------------


def read_config(path: str) -> list:
    """``(key, value)`` pairs from a config file."""
    pairs = []
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CLIError(f"cannot read config {path}: {exc.strerror}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CLIError(f"{path}:{n}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        pairs.append((key, value))
    return pairs


def _config_tokens(subparser, pairs) -> list:
    options = {}
    for action in subparser._actions:
        for flag in action.option_strings:
            if flag.startswith("--"):
                options[flag[2:].replace("-", "_")] = (flag, action)
    tokens = []
    for key, value in pairs:
        k = key.replace("-", "_")
        if k not in options or k == "config":
            raise CLIError(f"unknown config key {key!r}")
        flag, action = options[k]
        if action.nargs == 0:
            if value.lower() in ("1", "true", "yes", "on"):
                tokens.append(flag)
            elif value.lower() not in ("0", "false", "no", "off"):
                raise CLIError(f"config key {key!r} expects true/false")
        elif isinstance(action.nargs, int) and action.nargs > 1:
            tokens += [flag] + value.split()
        else:
            tokens += [flag, value]
    return tokens


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        idx = list(argv).index(args.command)
        tokens = _config_tokens(sub, read_config(args.config))
        args = parser.parse_args(list(argv[: idx + 1]) + tokens + list(argv[idx + 1 :]))
    return args


# helpers ------------------------------------------------------------------


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise CLIError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _geometry(eps):
    if len(eps) == 1:
        harmonic.require_anisotropic(eps[0])
    return TrapGeometry(tuple(eps))


def _write(args, text, header=()):
    body = "".join(f"# {k} = {v}\n" for k, v in header) + text
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(body)
        except OSError as exc:
            raise CLIError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(body)


def _point_header(args, ha):
    return (
        ("potential", ha.potential.spec()),
        ("g", _fmt(ha.g)),
        ("eps", " ".join(_fmt(e) for e in args.eps)),
    )


# commands -----------------------------------------------------------------


def cmd_report(args) -> int:
    _require(args, "pot", "g", "eps")
    pot = parse_potential(args.pot)
    geo = _geometry(args.eps)
    ha = harmonic.solve(pot, args.g)
    report = entropies.entropy_report(ha, geo, args.alpha or entropies.DEFAULT_ALPHAS)
    if args.csv:
        _write(args, report.to_csv(), _point_header(args, ha))
    else:
        _write(args, report.summary())
    if not report.diagnostics.valid:
        print(f"warning: overlap s = {ha.overlap:.3g}; harmonic approximation outside its validity gate", file=sys.stderr)
    return EXIT_OK


def _range(spec, spacing):
    lo, hi, n = spec
    try:
        return sweeps.grid(float(lo), float(hi), int(n), spacing)
    except ValueError:
        raise CLIError(f"bad range {' '.join(spec)!r}") from None


def cmd_sweep(args) -> int:
    threads = sweeps.thread_count()
    if args.preset:
        table = sweeps.preset(args.preset, threads)
    else:
        _require(args, "pot")
        pot = parse_potential(args.pot)
        if args.g_range:
            gs = _range(args.g_range, args.g_spacing)
        elif args.g is not None:
            gs = (args.g,)
        else:
            raise CLIError("missing --g or --g-range")
        if args.eps_range:
            geos = tuple(TrapGeometry((e,)) for e in _range(args.eps_range, args.eps_spacing))
        elif args.eps:
            geos = (_geometry(args.eps),)
        else:
            raise CLIError("missing --eps or --eps-range")
        spec = sweeps.SweepSpec(pot, gs, geos, args.alpha or entropies.DEFAULT_ALPHAS, args.tail_bound)
        table = sweeps.sweep(spec, threads)
    _write(args, table.to_csv())
    if table.n_ok == 0:
        print("error: no sweep point succeeded", file=sys.stderr)
        return EXIT_SWEEP_EMPTY
    return EXIT_OK


def cmd_oracle(args) -> int:
    _require(args, "pot", "g", "eps")
    pot = parse_potential(args.pot)
    geo = _geometry(args.eps)
    ha = harmonic.solve(pot, args.g)
    if ha.overlap >= oracle.ORACLE_GATE and not args.force:
        raise CLIError(
            f"overlap s = {ha.overlap:.3g} fails the oracle gate s < {oracle.ORACLE_GATE:g}; "
            f"rerun with --force to report deviations without asserting"
        )
    if ha.overlap >= oracle.ORACLE_GATE:
        print(f"warning: overlap s = {ha.overlap:.3g} >= {oracle.ORACLE_GATE:g}; thresholds not asserted", file=sys.stderr)
    report = oracle.run_oracle(ha, geo, args.svd_n, args.fd_n, args.half_width, force=args.force)
    header = _point_header(args, ha) + tuple(("note", n) for n in report.notes)
    _write(args, report.to_csv(), header)
    failed = report.failures
    if failed:
        print("oracle: FAIL " + ", ".join(c.name for c in failed), file=sys.stderr)
        return EXIT_ORACLE_FAIL
    asserted = any(c.threshold is not None for c in report.checks)
    print("oracle: PASS" if asserted else "oracle: thresholds not asserted", file=sys.stderr)
    return EXIT_OK


def cmd_asymptote(args) -> int:
    _require(args, "eps")
    lines = ["eps,S_y_vN,asymptote,difference\n"]
    for e in args.eps:
        a = entropies.vn_isotropic_asymptote(e)
        s = entropies.von_neumann_term(spectrum.xi(e))
        lines.append(",".join(_fmt(v) for v in (e, s, a, s - a)) + "\n")
    _write(args, "".join(lines))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    _require(args, "pot", "g", "eps")
    pot = parse_potential(args.pot)
    geo = _geometry(args.eps)
    ha = harmonic.solve(pot, args.g)
    spec = spectrum.enumerate_spectrum(spectrum.spectral_ratios(ha, geo), args.tail_bound, args.renormalize)
    header = _point_header(args, ha) + (
        ("tail_bound", _fmt(args.tail_bound)),
        ("captured_mass", _fmt(spec.captured_mass)),
        ("omitted_mass", _fmt(spec.omitted_mass)),
    )
    _write(args, spec.to_csv(), header)
    return EXIT_OK


COMMANDS = {
    "report": cmd_report,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
    "asymptote": cmd_asymptote,
    "spectrum": cmd_spectrum,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_DOMAIN
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except WignerSpectrumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
