"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 numerical failure or divergent
integral, 4 file I/O failure.  ``--json`` prints one JSON object; floats are
written with ``repr`` so they read back bit-for-bit.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from nonelem import __version__
from nonelem.antideriv import Family, IntegralSpec, evaluate
from nonelem.applications import MaxwellParams, maxwell_cdf, normal_cdf, normal_interval_prob
from nonelem.errors import DivergentIntegral, DomainError, NonelemError, UnsupportedEndpoint
from nonelem.hyper_core import DEFAULT_TOL
from nonelem.identities import SINH_SIGN_NOTE, IdentityId, check
from nonelem.integrals import Endpoint, integrate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def _tol() -> float:
    raw = os.environ.get("NONELEM_TOL")
    if not raw:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise click.UsageError(f"NONELEM_TOL is not a number: {raw!r}")
    if not tol > 0:
        raise click.UsageError("NONELEM_TOL must be positive")
    return tol


def _parse_lambda(ctx, param, text):
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise click.BadParameter(f"expected RE or RE,IM, got {text!r}")


def _parse_endpoint(ctx, param, text):
    try:
        return Endpoint.parse(text)
    except ValueError:
        raise click.BadParameter(f"expected a number, inf or -inf, got {text!r}")


def _num(v: float) -> float:
    # -0.0 prints as 0
    return 0.0 if v == 0 else v


def _fmt(v: float) -> str:
    return "%.17g" % _num(v)


def _emit(record: dict, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(record))
        return
    for k, v in record.items():
        if isinstance(v, float):
            v = repr(_num(v))
        click.echo(f"{k}: {v}")


def _complex_fields(prefix: str, z: complex) -> dict:
    return {f"{prefix}_re": _num(z.real), f"{prefix}_im": _num(z.imag)}


def _guard(fn):
    """Map library errors onto the exit-code contract."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DivergentIntegral as e:
            click.echo(f"error: divergent integral: {e}", err=True)
            sys.exit(EXIT_NUMERIC)
        except (DomainError, UnsupportedEndpoint) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except (NonelemError, ArithmeticError) as e:
            click.echo(f"error: numerical failure: {e}", err=True)
            sys.exit(EXIT_NUMERIC)

    return wrapper


def _spec_options(fn):
    fn = click.option("--alpha", type=float, required=True, help="Exponent alpha >= 2.")(fn)
    fn = click.option("--lambda", "lam", required=True, callback=_parse_lambda,
                      help="RE or RE,IM.")(fn)
    fn = click.option("--family", type=click.Choice([f.value for f in Family]),
                      required=True)(fn)
    return fn


_json_option = click.option("--json", "as_json", is_flag=True, help="Print one JSON object.")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="nonelem")
def main():
    """Antiderivatives of exp/cosh/sinh/cos/sin(lam x^alpha) via 1F1 and 1F2."""


@main.command("eval")
@_spec_options
@click.option("--x", type=float, required=True)
@_json_option
@_guard
def cmd_eval(family, lam, alpha, x, as_json):
    """Print the antiderivative G(x), normalised so G(0) = 0."""
    spec = IntegralSpec(family, lam, alpha)
    r = evaluate(spec, x, _tol())
    rec = {"family": family, **_complex_fields("lambda", lam), "alpha": alpha, "x": x,
           **_complex_fields("value", r.value), "err_estimate": r.err_estimate,
           "regime": r.regime}
    _emit(rec, as_json)


@main.command("integrate")
@_spec_options
@click.option("--from", "lo", required=True, callback=_parse_endpoint, help="Number, inf or -inf.")
@click.option("--to", "hi", required=True, callback=_parse_endpoint, help="Number, inf or -inf.")
@_json_option
@_guard
def cmd_integrate(family, lam, alpha, lo, hi, as_json):
    """Definite integral over [FROM, TO]."""
    spec = IntegralSpec(family, lam, alpha)
    r = integrate(spec, lo, hi, _tol())
    rec = {"family": family, **_complex_fields("lambda", lam), "alpha": alpha,
           "from": str(lo), "to": str(hi), **_complex_fields("value", r.value),
           "err_estimate": r.err_estimate, "method": r.method.value}
    _emit(rec, as_json)


@main.command("cdf")
@click.option("--z", type=float, required=True)
@_json_option
@_guard
def cmd_cdf(z, as_json):
    """Standard normal P(X < z)."""
    _emit({"z": z, "value": normal_cdf(z)}, as_json)


@main.command("prob")
@click.option("--from", "a", type=float, required=True)
@click.option("--to", "b", type=float, required=True)
@_json_option
@_guard
def cmd_prob(a, b, as_json):
    """Standard normal P(FROM < X < TO)."""
    if a > b:
        raise click.UsageError(f"--from {a} exceeds --to {b}")
    _emit({"from": a, "to": b, "value": normal_interval_prob(a, b)}, as_json)


@main.command("maxwell")
@click.option("--theta", type=float, required=True)
@click.option("--gamma", "gamma_c", type=float, required=True)
@click.option("--v", type=float, required=True)
@_json_option
@_guard
def cmd_maxwell(theta, gamma_c, v, as_json):
    """Maxwell-Boltzmann CDF theta * int_0^v x^2 exp(-gamma x^2) dx."""
    value = maxwell_cdf(MaxwellParams(theta, gamma_c), v)
    _emit({"theta": theta, "gamma": gamma_c, "v": v, "value": value}, as_json)


@main.command("identity")
@click.option("--id", "iid", type=click.Choice([i.value for i in IdentityId]), required=True)
@click.option("--lambda", "lam", required=True, callback=_parse_lambda, help="RE or RE,IM.")
@click.option("--alpha", type=float, required=True)
@click.option("--x", type=float, required=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@_json_option
@_guard
def cmd_identity(iid, lam, alpha, x, tol, as_json):
    """Evaluate both sides of a 1F2/1F1 identity; exit 0 iff the residual <= --tol."""
    r = check(iid, lam, alpha, x)
    ok = r.residual <= tol
    rec = {"id": iid, **_complex_fields("lambda", lam), "alpha": alpha, "x": x,
           **_complex_fields("lhs", r.lhs), **_complex_fields("rhs", r.rhs),
           "residual": r.residual, "tol": tol, "passed": ok}
    if iid == IdentityId.T3_SINH.value:
        rec["note"] = SINH_SIGN_NOTE
    _emit(rec, as_json)
    sys.exit(EXIT_OK if ok else EXIT_NUMERIC)


def table_rows(spec: IntegralSpec, x_min: float, x_max: float, steps: int, tol: float):
    """Yield ``(x, G(x))`` rows on ``steps + 1`` equally spaced points."""
    for i in range(steps + 1):
        x = x_max if i == steps else x_min + (x_max - x_min) * i / steps
        yield x, evaluate(spec, x, tol)


@main.command("table")
@click.option("--family", type=click.Choice([f.value for f in Family]), default="exp",
              show_default=True)
@click.option("--lambda", "lam", default="-1", callback=_parse_lambda, show_default=True)
@click.option("--alpha", type=float, default=2.0, show_default=True)
@click.option("--x-min", type=float, default=-5.0, show_default=True)
@click.option("--x-max", type=float, default=5.0, show_default=True)
@click.option("--steps", type=click.IntRange(min=1), default=500, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              default="-", show_default=True, help="CSV destination, - for stdout.")
@_guard
def cmd_table(family, lam, alpha, x_min, x_max, steps, out_path):
    """Write G(x) on a grid as CSV: x,re,im,err,regime."""
    if not x_min < x_max:
        raise click.UsageError("--x-min must be below --x-max")
    spec = IntegralSpec(family, lam, alpha)
    tol = _tol()
    lines = ["x,re,im,err,regime"]
    for x, r in table_rows(spec, x_min, x_max, steps, tol):
        lines.append(",".join((_fmt(x), _fmt(r.value.real), _fmt(r.value.imag),
                               _fmt(r.err_estimate), r.regime)))
    text = "\n".join(lines) + "\n"
    if out_path == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(out_path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as e:
        click.echo(f"error: cannot write {out_path}: {e.strerror or e}", err=True)
        sys.exit(EXIT_IO)


@main.command("selftest")
@click.option("--verbose", "-v", is_flag=True, help="List every case, not just the summary.")
def cmd_selftest(verbose):
    """Cross-check against the independent oracles; exit 0 iff everything passes."""
    from nonelem.selftest import run_all

    results = run_all()
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        failed += not r.passed
        if verbose or not r.passed:
            click.echo(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}")
    groups = {}
    for r in results:
        g = groups.setdefault(r.group, [0, 0])
        g[0] += r.passed
        g[1] += 1
    for name, (ok, total) in groups.items():
        click.echo(f"{name:<24} {ok:>4}/{total:<4} {'PASS' if ok == total else 'FAIL'}")
    click.echo("selftest: " + ("PASS" if not failed else f"FAIL ({failed} case(s))"))
    sys.exit(EXIT_OK if not failed else EXIT_NUMERIC)


if __name__ == "__main__":
    main()
