"""Command-line front end: reproduce the measure tables, run parameter sweeps,
and run the cross-validation suite.

Three subcommands:

  table  -- one row per (molecule, n, l) cell of a measure grid
  sweep  -- plot-ready grid varying l or q, one column per molecule
  check  -- invariant suite; exit status 0 iff every check passes
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np
from scipy.special import eval_genlaguerre

from . import measures, specfun
from .moldata import MoleculeTable, builtin_molecules, load_molecules
from .measures import MeasureKind, Method, UnsupportedMethodError
from .states import Mode, Space, density, make_state, radial_norm

_CSV_HEADER = ["molecule", "n", "l", "q", "space", "method", "value", "err", "norm_deficit"]

_KINDS = {k.value: k for k in MeasureKind}
_NEEDS_Q = (MeasureKind.RENYI, MeasureKind.TSALLIS, MeasureKind.WQ)


class CliError(Exception):
    """User-facing invocation error; message goes to stderr, exit status 2."""


def _parse_range(text: str, what: str) -> list[int]:
    """Parse '3' or '0..10' into an inclusive integer list."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise CliError(f"invalid {what} range {text!r}; expected N or A..B") from None
    if lo < 0 or hi < lo:
        raise CliError(f"invalid {what} range {text!r}; need 0 <= A <= B")
    return list(range(lo, hi + 1))


def _load_table(args) -> MoleculeTable:
    table = builtin_molecules()
    if getattr(args, "molecules", None):
        try:
            with open(args.molecules) as fh:
                table = table.override(load_molecules(fh))
        except OSError as exc:
            raise CliError(f"cannot read molecule file: {exc}") from None
    return table


def _select_molecules(args, table: MoleculeTable):
    names = args.molecule or list(table.names())
    if not names:
        raise CliError("no molecules selected")
    out = []
    for name in names:
        if name not in table:
            raise CliError(f"unknown molecule {name!r}; known: {', '.join(table.names())}")
        out.append(table[name])
    return out


def _fmt(value: float, full_precision: bool) -> str:
    return f"{value:.17g}" if full_precision else f"{value:.6g}"


def _emit(rows: list[dict], fmt: str, full_precision: bool) -> str:
    if fmt == "json":
        out = []
        for r in rows:
            rec = dict(r)
            for key in ("value", "err", "norm_deficit"):
                rec[key] = float(_fmt(rec[key], full_precision)) if math.isfinite(rec[key]) else None
            out.append(rec)
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for r in rows:
        writer.writerow([
            r["molecule"], r["n"], r["l"],
            "" if r["q"] is None else _fmt(r["q"], full_precision),
            r["space"], r["method"],
            _fmt(r["value"], full_precision),
            _fmt(r["err"], full_precision) if math.isfinite(r["err"]) else "",
            _fmt(r["norm_deficit"], full_precision),
        ])
    return buf.getvalue()


def cmd_table(args) -> str:
    kind = _KINDS[args.measure]
    space = Space(args.space)
    mode = Mode(args.mode)
    if kind in _NEEDS_Q and args.q is None:
        raise CliError(f"--measure {args.measure} requires --q")
    if kind not in _NEEDS_Q and args.q is not None:
        raise CliError(f"--measure {args.measure} does not take --q")
    mols = _select_molecules(args, _load_table(args))
    methods = [Method.ANALYTIC, Method.QUADRATURE] if args.method == "both" \
        else [Method(args.method)]

    rows = []
    for mol in mols:
        for n in _parse_range(args.n, "--n"):
            for ell in _parse_range(args.l, "--l"):
                s = make_state(mol, n, ell, mode)
                for method in methods:
                    try:
                        res = measures.measure(s, kind, space, args.q, method)
                    except UnsupportedMethodError as exc:
                        if args.method == "both":
                            continue  # quadrature row still covers the cell
                        raise CliError(str(exc)) from None
                    rows.append({
                        "molecule": mol.name, "n": n, "l": ell, "q": res.q,
                        "space": space.value, "method": method.value,
                        "value": res.value, "err": res.err_estimate,
                        "norm_deficit": res.norm_deficit,
                    })
    return _emit(rows, args.format, args.full_precision)


def cmd_sweep(args) -> str:
    kind = _KINDS[args.measure]
    space = Space(args.space)
    mode = Mode(args.mode)
    if (args.l is None) == (args.q_range is None):
        raise CliError("exactly one of --l and --q-range must be given")
    mols = _select_molecules(args, _load_table(args))
    method = Method(args.method)
    n = int(args.n)

    if args.l is not None:
        points = _parse_range(args.l, "--l")
        variable = "l"
        if kind in _NEEDS_Q and args.q is None:
            raise CliError(f"--measure {args.measure} requires --q")
        fixed_q = args.q
    else:
        points = _parse_range(args.q_range, "--q-range")
        variable = "q"
        if kind not in _NEEDS_Q:
            raise CliError(f"--measure {args.measure} does not take a q sweep")
        fixed_q = None

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([variable] + [m.name for m in mols])
    for point in points:
        row = [point]
        for mol in mols:
            if variable == "l":
                s = make_state(mol, n, point, mode)
                res = measures.measure(s, kind, space, fixed_q, method)
            else:
                s = make_state(mol, n, 0, mode)
                res = measures.measure(s, kind, space, float(point), method)
            row.append(_fmt(res.value, args.full_precision))
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Cross-validation suite
# ---------------------------------------------------------------------------

def _naive_lauricella(a: float, n: int, c: float, s: int, t: float) -> float:
    """Direct nested-index sum over the terminating multi-series (oracle)."""
    total = 0.0
    idx = [0] * s

    def rec(pos: int, prod: float, big_j: int):
        nonlocal total
        if pos == s:
            total += specfun.pochhammer(a, big_j) * prod
            return
        for j in range(n + 1):
            term = specfun.pochhammer(-n, j) / (specfun.pochhammer(c, j) * math.factorial(j))
            rec(pos + 1, prod * term * t**j, big_j + j)

    rec(0, 1.0, 0)
    return total


def _run_checks(table: MoleculeTable, tol_scale: float):
    """Yield (name, deviation, threshold, passed) for every invariant check."""
    mols = list(table)
    na2 = mols[0]

    def report(name, deviation, threshold):
        threshold = threshold * tol_scale
        return name, deviation, threshold, deviation <= threshold

    # Unit radial norm in normalized mode.
    worst = 0.0
    for mol in mols:
        for n in (0, 3, 10):
            s = make_state(mol, n, 0, Mode.RENORMALIZED)
            for space in Space:
                worst = max(worst, abs(radial_norm(s, space) - 1.0))
    yield report("normalized-mode radial norm = 1", worst, 1e-10)

    # Laguerre recurrence against the library evaluator.
    x = np.linspace(0.0, 40.0, 81)
    worst = 0.0
    for n in range(11):
        for alpha in (0.5, 3.7, 12.25):
            ours = specfun.laguerre(n, alpha, x)
            ref = eval_genlaguerre(n, alpha, x)
            scale = np.maximum(np.abs(ref), 1.0)
            worst = max(worst, float(np.max(np.abs(ours - ref) / scale)))
    yield report("Laguerre recurrence vs library evaluator", worst, 1e-10)

    # Bell-polynomial power coefficients against repeated convolution.
    worst = 0.0
    for n in range(5):
        for power in (2, 3, 4):
            via_bell = specfun.orthonormal_power_coeffs_bell(n, 2.5, power)
            via_conv = specfun.poly_power(specfun.orthonormal_laguerre_coeffs(n, 2.5), power)
            scale = max(float(np.max(np.abs(via_conv))), 1.0)
            worst = max(worst, float(np.max(np.abs(via_bell - via_conv))) / scale)
    yield report("Bell-polynomial vs convolution power coefficients", worst, 1e-10)

    # Symmetric-reduction Lauricella against the naive nested sum.
    worst = 0.0
    for n, s_pow in ((1, 2), (2, 2), (2, 4), (3, 3)):
        fast = specfun.lauricella_fa_symmetric(4.25, n, 3.5, s_pow, 0, 0.3)
        naive = _naive_lauricella(4.25, n, 3.5, s_pow, 0.3)
        worst = max(worst, abs(fast - naive) / max(abs(naive), 1e-30))
    yield report("Lauricella symmetric reduction vs naive sum", worst, 1e-10)

    # Closed-form and quadrature entropic moments agree.
    worst = 0.0
    for mol in (mols[0], mols[-1]):
        for q in (2, 3):
            for n in range(6):
                s = make_state(mol, n, 0)
                for space in Space:
                    a = measures.wq(s, q, space, Method.ANALYTIC)
                    b = measures.wq(s, q, space, Method.QUADRATURE)
                    budget = max(1e-8, (a.err_estimate + b.err_estimate) / abs(b.value))
                    worst = max(worst, abs(a.value - b.value) / abs(b.value) / budget)
    yield report("analytic vs quadrature entropic moment (budget units)", worst, 1.0)

    # Closed-form and quadrature Fisher agree in position space.
    worst = 0.0
    for mol in mols:
        for n in range(11):
            s = make_state(mol, n, 0)
            a = measures.fisher(s, Space.POSITION, Method.ANALYTIC)
            b = measures.fisher(s, Space.POSITION, Method.QUADRATURE)
            worst = max(worst, abs(a.value - b.value) / abs(b.value))
    yield report("analytic vs quadrature Fisher, position space", worst, 1e-8)

    # Renyi and Tsallis collapse to Shannon as q -> 1 (unit-norm densities).
    # The probe is two-sided: the symmetric average at 1 +/- eps cancels the
    # first-order (q-1) term, which is intrinsic and large when S is large.
    worst = 0.0
    for n in range(4):
        s = make_state(na2, n, 0, Mode.RENORMALIZED)
        for space in Space:
            sh = measures.shannon(s, space).value
            for fn in (measures.renyi, measures.tsallis):
                lo = fn(s, 1.0 - 1e-4, space).value
                hi = fn(s, 1.0 + 1e-4, space).value
                worst = max(worst, abs(0.5 * (lo + hi) - sh))
    yield report("q -> 1 continuity toward Shannon", worst, 1e-3)

    # Analytic density derivative against central differences.
    worst = 0.0
    s = make_state(na2, 3, 1)
    for space in Space:
        rho = density(s, space)
        h = 1e-6 * rho.gaussian_scale()
        for x in rho.gaussian_scale() * np.array([0.5, 1.0, 1.7, 2.4]):
            numeric = (rho.value(x + h) - rho.value(x - h)) / (2.0 * h)
            exact = rho.derivative(x)
            worst = max(worst, abs(numeric - exact) / max(abs(exact), 1e-12))
    yield report("density derivative vs finite differences", worst, 1e-6)

    # Renyi(2) = -ln(information energy) and Tsallis(2) = 1 - energy.
    worst = 0.0
    for mol in mols:
        for n in range(0, 11, 2):
            s = make_state(mol, n, 0)
            for space in Space:
                e = measures.onicescu(s, space, Method.ANALYTIC).value
                r2 = measures.renyi(s, 2, space, Method.ANALYTIC).value
                t2 = measures.tsallis(s, 2, space, Method.ANALYTIC).value
                worst = max(worst, abs(r2 + math.log(e)))
                worst = max(worst, abs(t2 - (1.0 - e)))
    yield report("entropic-moment identities R2 = -ln E, T2 = 1 - E", worst, 1e-10)

    # Fisher grows with n in both spaces; shrinks with l at n=0.
    violation = 0.0
    for mol in mols:
        pos = [measures.fisher(make_state(mol, n, 0), Space.POSITION, Method.ANALYTIC).value
               for n in range(11)]
        mom = [measures.fisher(make_state(mol, n, 0), Space.MOMENTUM).value
               for n in range(11)]
        for seq in (pos, mom):
            for lo, hi in zip(seq, seq[1:]):
                violation = max(violation, lo - hi)
        ells = [measures.fisher(make_state(mol, 0, ell), Space.POSITION, Method.ANALYTIC).value
                for ell in range(0, 21, 4)]
        for hi, lo in zip(ells, ells[1:]):
            violation = max(violation, lo - hi)
    yield report("Fisher monotone in n (both spaces) and in l", violation, 0.0)

    # Shannon grows with n and shrinks with l in position space.
    violation = 0.0
    for mol in (mols[0], mols[2], mols[-1]):
        seq = [measures.shannon(make_state(mol, n, 0), Space.POSITION).value
               for n in range(6)]
        for lo, hi in zip(seq, seq[1:]):
            violation = max(violation, lo - hi)
        ells = [measures.shannon(make_state(mol, 0, ell), Space.POSITION).value
                for ell in (0, 3, 8, 15)]
        for hi, lo in zip(ells, ells[1:]):
            violation = max(violation, lo - hi)
    yield report("Shannon monotone in n and in l, position space", violation, 0.0)

    # Momentum-space Renyi(2) shrinks with n.
    violation = 0.0
    for mol in mols:
        seq = [measures.renyi(make_state(mol, n, 0), 2, Space.MOMENTUM, Method.ANALYTIC).value
               for n in range(11)]
        for hi, lo in zip(seq, seq[1:]):
            violation = max(violation, lo - hi)
    yield report("momentum Renyi(2) monotone decreasing in n", violation, 0.0)


def cmd_check(args) -> int:
    table = _load_table(args)
    failures = []
    for name, deviation, threshold, passed in _run_checks(table, args.tol_scale):
        status = "PASS" if passed else "FAIL"
        print(f"{status}  {name}: deviation {deviation:.3e}, threshold {threshold:.3e}")
        if not passed:
            failures.append({"check": name, "deviation": deviation, "threshold": threshold})
    if args.ledger and failures:
        with open(args.ledger, "a") as fh:
            for rec in failures:
                fh.write(json.dumps(rec) + "\n")
    print(f"{len(failures)} failing check(s)" if failures else "all checks passed")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--molecule", action="append",
                   help="molecule name; repeatable (default: all built-in)")
    p.add_argument("--molecules", metavar="PATH",
                   help="file of extra molecules: 'name, d_e, r_e' lines")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PAPER_FAITHFUL.value,
                   help="density normalization convention")
    p.add_argument("--full-precision", action="store_true",
                   help="emit 17 significant digits instead of 6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phinfo",
        description="Information measures of pseudoharmonic diatomic states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="measure grid over (molecule, n, l)")
    t.add_argument("--measure", choices=sorted(_KINDS), required=True)
    t.add_argument("--space", choices=[s.value for s in Space], required=True)
    t.add_argument("--q", type=float, help="entropic index for renyi/tsallis/wq")
    t.add_argument("--n", default="0..10", help="N or A..B (default 0..10)")
    t.add_argument("--l", default="0", help="N or A..B (default 0)")
    t.add_argument("--method", choices=["analytic", "quadrature", "both"],
                   default="quadrature")
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_common(t)

    w = sub.add_parser("sweep", help="plot-ready sweep over l or q")
    w.add_argument("--measure", choices=sorted(_KINDS), required=True)
    w.add_argument("--space", choices=[s.value for s in Space], required=True)
    w.add_argument("--n", default="0", help="fixed principal quantum number")
    w.add_argument("--l", help="l range A..B (sweep variable)")
    w.add_argument("--q", type=float, help="fixed entropic index for an l sweep")
    w.add_argument("--q-range", help="integer q range A..B (sweep variable)")
    w.add_argument("--method", choices=["analytic", "quadrature"], default="quadrature")
    w.add_argument("--format", choices=["csv"], default="csv")
    _add_common(w)

    c = sub.add_parser("check", help="run the invariant suite")
    c.add_argument("--tol-scale", type=float, default=1.0,
                   help="multiply every check threshold (0 = strictest)")
    c.add_argument("--ledger", metavar="PATH",
                   help="append failing checks as JSON lines to this file")
    c.add_argument("--molecules", metavar="PATH",
                   help="file of extra molecules: 'name, d_e, r_e' lines")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "table":
            sys.stdout.write(cmd_table(args))
            return 0
        if args.command == "sweep":
            sys.stdout.write(cmd_sweep(args))
            return 0
        return cmd_check(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
