"""Command-line surface: every library operation behind a sub-command.

Output is one JSON record per line (schema_version 1), keys sorted, so
repeated runs with identical arguments are byte-identical. Sweep tables
can alternatively be emitted as CSV with --format csv.

Exit codes: 0 ok, 1 domain/precondition error, 2 usage error,
3 capacity error.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys
from fractions import Fraction

import click

from . import analysis, constructions, explorer, numcore
from .constructions import CompositeWitness, DivisorPair, KCompositeWitness
from .errors import CapacityError, DomainError
from .numcore import Factorization, Progression

SCHEMA_VERSION = 1
DEFAULT_MAX_SIEVE = 50_000_000

# Sub-command -> library operation(s) it surfaces. A test checks every
# public operation is reachable from here.
DISPATCH = {
    "sieve": (numcore.sieve,),
    "count": (numcore.prime_count, numcore.prime_count_progression),
    "witness multiple": (constructions.witness_multiple_of_b,),
    "witness unit": (constructions.witness_unit_b,),
    "witness power": (constructions.witness_power,),
    "factorial": (constructions.factorial_consecutive,),
    "consecutive": (constructions.consecutive_in_progression,),
    "kcomposite": (constructions.k_composite_witnesses,),
    "poly": (constructions.polynomial_composites,),
    "twin3": (constructions.three_composites_4n3,),
    "density": (analysis.density_bound_check,),
    "binom": (analysis.central_binom_bound,),
    "dyadic": (analysis.dyadic_gap_bound,),
    "pow4": (analysis.pi_power4_bound,),
    "runs": (analysis.longest_prime_run,),
    "ek": (analysis.erdos_kac_samples,),
    "lucky": (explorer.euler_lucky_search,),
    "streak": (explorer.prime_streak,),
    "fermatreal": (explorer.fermat_real_root,),
    "ratscan": (explorer.rational_scan,),
    "sweep density": (analysis.density_bound_check,),
    "sweep dyadic": (analysis.dyadic_gap_bound,),
    "sweep binom": (analysis.central_binom_bound,),
    "sweep pow4": (analysis.pi_power4_bound,),
    "sweep runs": (analysis.longest_prime_run,),
    "sweep pdensity": (analysis.progression_composite_density,),
}


class IntParam(click.ParamType):
    """Integer that also accepts scientific notation like 1e6."""

    name = "integer"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        try:
            return int(value)
        except ValueError:
            try:
                f = float(value)
            except ValueError:
                self.fail(f"{value!r} is not an integer", param, ctx)
            if f != int(f):
                self.fail(f"{value!r} is not an integer", param, ctx)
            return int(f)


INT = IntParam()


def parse_pair(value: str, name: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise click.UsageError(f"{name} must be 'lo,hi'")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise click.UsageError(f"{name} must be two numbers 'lo,hi'")


def parse_range(value: str, name: str) -> tuple[int, int]:
    parts = value.split("..")
    if len(parts) != 2:
        raise click.UsageError(f"{name} must be 'start..stop'")
    try:
        lo = IntParam().convert(parts[0], None, None)
        hi = IntParam().convert(parts[1], None, None)
    except click.exceptions.Exit:  # pragma: no cover
        raise
    if lo > hi:
        raise click.UsageError(f"{name}: start must be <= stop")
    return lo, hi


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
        except CapacityError as exc:
            click.echo(f"capacity error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def emit(command: str, params: dict, result) -> None:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "result": result,
    }
    click.echo(json.dumps(record, sort_keys=True))


def as_jsonable(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator,
                "float": float(obj)}
    if isinstance(obj, Factorization):
        return {"type": "factorization", "value": obj.value,
                "factors": [[p, e] for p, e in obj.factors]}
    if isinstance(obj, DivisorPair):
        return {"type": "divisor_pair", "value": obj.value,
                "d": obj.d, "cofactor": obj.cofactor}
    if isinstance(obj, CompositeWitness):
        return {"a": obj.progression.a, "b": obj.progression.b, "n": obj.n,
                "value": obj.value, "tag": obj.construction_tag,
                "proof": as_jsonable(obj.proof)}
    if isinstance(obj, KCompositeWitness):
        return {"a": obj.progression.a, "b": obj.progression.b, "n": obj.n,
                "value": obj.value, "k": obj.k, "mode": obj.mode,
                "proof": as_jsonable(obj.proof)}
    return obj


def max_sieve_of(ctx) -> int:
    return ctx.obj["max_sieve"]


def check_capacity(ctx, needed: int) -> None:
    cap = max_sieve_of(ctx)
    if needed > cap:
        raise CapacityError(f"needs sieve to {needed}, --max-sieve is {cap}")


@click.group()
@click.option("--max-sieve", type=INT, default=None,
              help="Largest sieve limit allowed (capacity cap).")
@click.option("--config", type=click.Path(exists=True), default=None,
              help="JSON config file; recognized key: max_sieve.")
@click.pass_context
def cli(ctx, max_sieve, config):
    """Composite witnesses, prime-density bounds, and related explorations
    for arithmetic progressions a*n + b."""
    ctx.ensure_object(dict)
    cap = DEFAULT_MAX_SIEVE
    if config is not None:
        with open(config) as fh:
            cap = int(json.load(fh).get("max_sieve", cap))
    if max_sieve is not None:
        cap = max_sieve
    ctx.obj["max_sieve"] = cap


@cli.command("sieve")
@click.option("--limit", type=INT, required=True)
@click.pass_context
@handle_errors
def sieve_cmd(ctx, limit):
    """Prime count and largest prime up to --limit."""
    check_capacity(ctx, limit)
    table = numcore.sieve(limit)
    primes = table.primes()
    emit("sieve", {"limit": limit},
         {"count": int(len(primes)), "largest": int(primes[-1])})


@cli.command("count")
@click.option("--x", type=INT, required=True)
@click.option("--a", type=INT, default=None)
@click.option("--b", type=INT, default=None)
@click.pass_context
@handle_errors
def count_cmd(ctx, x, a, b):
    """pi(x), or pi_{a,b}(x) when --a/--b are given."""
    check_capacity(ctx, x)
    if a is None:
        emit("count", {"x": x}, {"pi": numcore.prime_count(x)})
    else:
        prog = Progression(a, b or 0)
        emit("count", {"x": x, "a": a, "b": prog.b},
             {"pi_ab": numcore.prime_count_progression(prog, x)})


@cli.group("witness")
def witness_group():
    """Composite-witness constructions."""


@witness_group.command("multiple")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--m", type=INT, required=True)
@handle_errors
def witness_multiple_cmd(a, b, m):
    w = constructions.witness_multiple_of_b(Progression(a, b), m)
    emit("witness multiple", {"a": a, "b": b, "m": m}, as_jsonable(w))


@witness_group.command("unit")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--m", type=INT, required=True)
@handle_errors
def witness_unit_cmd(a, b, m):
    w = constructions.witness_unit_b(Progression(a, b), m)
    emit("witness unit", {"a": a, "b": b, "m": m}, as_jsonable(w))


@witness_group.command("power")
@click.option("--a", type=INT, required=True)
@click.option("--sign", type=click.Choice(["+1", "-1", "1"]), required=True)
@click.option("--k", type=INT, required=True)
@handle_errors
def witness_power_cmd(a, sign, k):
    w = constructions.witness_power(a, int(sign), k)
    emit("witness power", {"a": a, "sign": int(sign), "k": k}, as_jsonable(w))


@cli.command("factorial")
@click.option("--m", type=INT, required=True)
@handle_errors
def factorial_cmd(m):
    """Witnesses for the consecutive composites m!+2 ... m!+m."""
    ws = constructions.factorial_consecutive(m)
    emit("factorial", {"m": m}, [as_jsonable(w) for w in ws])


@cli.command("consecutive")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--count", "n_consecutive", type=INT, required=True,
              help="How many consecutive composite terms to find.")
@handle_errors
def consecutive_cmd(a, b, n_consecutive):
    res = constructions.consecutive_in_progression(Progression(a, b), n_consecutive)
    emit("consecutive", {"a": a, "b": b, "count": n_consecutive},
         {"start_n": res.start_n,
          "witnesses": [as_jsonable(w) for w in res.witnesses],
          "factorial_m_bound": res.factorial_m_bound})


@cli.command("kcomposite")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--k", type=INT, required=True)
@click.option("--count", type=INT, default=1)
@click.option("--mode", type=click.Choice(["distinct", "multiplicity"]),
              default="distinct")
@handle_errors
def kcomposite_cmd(a, b, k, count, mode):
    ws = constructions.k_composite_witnesses(Progression(a, b), k, count, mode)
    emit("kcomposite", {"a": a, "b": b, "k": k, "count": count, "mode": mode},
         [as_jsonable(w) for w in ws])


@cli.command("poly")
@click.option("--coeffs", required=True,
              help="Comma-separated coefficients, constant term first.")
@click.option("--count", type=INT, default=1)
@handle_errors
def poly_cmd(coeffs, count):
    try:
        cs = [int(c) for c in coeffs.split(",")]
    except ValueError:
        raise click.UsageError("--coeffs must be comma-separated integers")
    recs = constructions.polynomial_composites(cs, count)
    emit("poly", {"coeffs": cs, "count": count},
         [{"k": r.k, "j": r.j, "index": r.index, "value": r.value,
           "divisor": r.divisor} for r in recs])


@cli.command("twin3")
@click.option("--count", type=INT, required=True)
@click.option("--k-max", type=INT, default=10**4)
@handle_errors
def twin3_cmd(count, k_max):
    res = constructions.three_composites_4n3(count, k_max)
    emit("twin3", {"count": count, "k_max": k_max},
         {"witnesses": [as_jsonable(w) for w in res.witnesses],
          "shortfall": res.shortfall})


def _density_payload(pt) -> dict:
    return {"x": pt.x, "pi": pt.pi_x, "ratio": as_jsonable(pt.ratio),
            "bound": pt.bound, "holds": pt.holds}


@cli.command("density")
@click.option("--x", type=INT, required=True)
@click.pass_context
@handle_errors
def density_cmd(ctx, x):
    """pi(x)/x against the bound 1/x + 4/sqrt(x) + 8/log4(x)."""
    if x >= 2:
        check_capacity(ctx, x)
    pt = analysis.density_bound_check(x)
    emit("density", {"x": x}, _density_payload(pt))


def _bound_payload(bc) -> dict:
    out = {"param": bc.param, "lhs": bc.lhs, "rhs": bc.rhs, "holds": bc.holds}
    out.update({k: v for k, v in bc.detail})
    return out


@cli.command("binom")
@click.option("--n", type=INT, required=True)
@click.pass_context
@handle_errors
def binom_cmd(ctx, n):
    """Check n^(pi(2n)-pi(n)) < 4^n."""
    check_capacity(ctx, 2 * max(n, 1))
    emit("binom", {"n": n}, _bound_payload(analysis.central_binom_bound(n)))


@cli.command("dyadic")
@click.option("--k", type=INT, required=True)
@click.pass_context
@handle_errors
def dyadic_cmd(ctx, k):
    """Check pi(2^k) - pi(2^(k-1)) < 2^k/(k-1)."""
    if k >= 2:
        check_capacity(ctx, 2**k)
    emit("dyadic", {"k": k}, _bound_payload(analysis.dyadic_gap_bound(k)))


@cli.command("pow4")
@click.option("--m", type=INT, required=True)
@click.pass_context
@handle_errors
def pow4_cmd(ctx, m):
    """Check pi(4^m) < 1 + 2^(m+1) + 2^(2m+1)/m."""
    if m >= 1:
        check_capacity(ctx, 4**m)
    emit("pow4", {"m": m}, _bound_payload(analysis.pi_power4_bound(m)))


def _run_payload(scan) -> dict:
    return {
        "n_max": scan.n_max,
        "max_length": scan.max_length,
        "runs": [
            {"start_n": r.start_n, "length": r.length,
             "values": list(r.values), "truncated": r.truncated}
            for r in scan.max_runs
        ],
    }


@cli.command("runs")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--n-max", type=INT, required=True)
@click.pass_context
@handle_errors
def runs_cmd(ctx, a, b, n_max):
    """Longest runs of prime values among n in [1, n_max]."""
    scan = analysis.longest_prime_run(
        Progression(a, b), n_max, sieve_cap=max_sieve_of(ctx))
    emit("runs", {"a": a, "b": b, "n_max": n_max}, _run_payload(scan))


@cli.command("ek")
@click.option("--x", type=INT, required=True)
@click.option("--interval", default="-1,1",
              help="Statistic interval 'lo,hi'.")
@click.pass_context
@handle_errors
def ek_cmd(ctx, x, interval):
    """Distinct-prime-factor statistic summary over 3 <= n <= x."""
    check_capacity(ctx, x)
    lo, hi = parse_pair(interval, "--interval")
    summary = analysis.erdos_kac_samples(x, intervals=((lo, hi),))
    iv = summary.intervals[0]
    emit("ek", {"x": x, "interval": [lo, hi]},
         {"sample_count": summary.sample_count,
          "mean_omega": summary.mean_omega,
          "sample_fraction": iv.sample_fraction,
          "gaussian_mass": iv.gaussian_mass})


@cli.command("lucky")
@click.option("--max", "c_max", type=INT, required=True)
@handle_errors
def lucky_cmd(c_max):
    """Constants C <= max with n^2 - n + C prime for all 1 <= n <= C-1."""
    emit("lucky", {"max": c_max}, {"lucky": explorer.euler_lucky_search(c_max)})


@cli.command("streak")
@click.option("--c", type=INT, required=True)
@handle_errors
def streak_cmd(c):
    """Initial run of n >= 0 with n^2 + n + C prime."""
    res = explorer.prime_streak(c)
    emit("streak", {"c": c},
         {"length": res.length, "first_failure_n": res.first_failure_n,
          "first_failure_value": res.first_failure_value})


@cli.command("fermatreal")
@click.option("--x", type=INT, required=True)
@click.option("--y", type=INT, required=True)
@click.option("--z", type=INT, required=True)
@click.option("--bracket", default="2,3", help="Sign-change bracket 'lo,hi'.")
@click.option("--tol", type=float, default=1e-12)
@handle_errors
def fermatreal_cmd(x, y, z, bracket, tol):
    """Bisect x^t + y^t - z^t to the stated tolerance."""
    lo, hi = parse_pair(bracket, "--bracket")
    r = explorer.fermat_real_root(x, y, z, (lo, hi), tol)
    emit("fermatreal",
         {"x": x, "y": y, "z": z, "bracket": [lo, hi], "tol": tol},
         {"s": r.s, "residual": r.residual,
          "refined_bracket": list(r.refined_bracket),
          "iterations": r.iterations})


@cli.command("ratscan")
@click.option("--x", type=INT, required=True)
@click.option("--y", type=INT, required=True)
@click.option("--z", type=INT, required=True)
@click.option("--bracket", default="2,3")
@click.option("--q-max", type=INT, required=True)
@click.option("--tol", type=float, default=1e-9)
@handle_errors
def ratscan_cmd(x, y, z, bracket, q_max, tol):
    """Rationals p/q in the bracket that nearly solve x^t + y^t = z^t."""
    lo, hi = parse_pair(bracket, "--bracket")
    root = explorer.fermat_real_root(x, y, z, (lo, hi))
    hits = explorer.rational_scan(root, q_max, tol)
    emit("ratscan",
         {"x": x, "y": y, "z": z, "bracket": [lo, hi],
          "q_max": q_max, "tol": tol},
         {"hits": [{"p": h.numerator, "q": h.denominator} for h in hits]})


def emit_sweep(command: str, params: dict, rows: list[dict],
               summary: dict, fmt: str) -> None:
    if fmt == "records":
        for row in rows:
            emit(command, params, row)
        emit(command, params, {"summary": summary})
        return
    buf = io.StringIO()
    fieldnames = list(rows[0].keys()) if rows else []
    writer = csv.DictWriter(buf, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    click.echo(buf.getvalue(), nl=False)
    click.echo("# summary: " + json.dumps(summary, sort_keys=True))


@cli.group("sweep")
def sweep_group():
    """Run a check over a parameter range, with a trailing summary row."""


def _flatten_density(pt) -> dict:
    return {"x": pt.x, "pi": pt.pi_x, "ratio": float(pt.ratio),
            "bound": pt.bound, "holds": pt.holds}


@sweep_group.command("density")
@click.option("--x", "x_range", required=True, help="Range 'start..stop'.")
@click.option("--geometric", type=INT, default=10,
              help="Multiplicative step between points.")
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_density_cmd(ctx, x_range, geometric, fmt):
    lo, hi = parse_range(x_range, "--x")
    if geometric < 2:
        raise click.UsageError("--geometric must be >= 2")
    check_capacity(ctx, hi)
    table = numcore.sieve(hi) if hi >= 2 else None
    rows = []
    x = lo
    while x <= hi:
        rows.append(_flatten_density(analysis.density_bound_check(x, table)))
        x *= geometric
    summary = {"all_holds": all(r["holds"] for r in rows), "rows": len(rows)}
    emit_sweep("sweep density", {"x": [lo, hi], "geometric": geometric},
               rows, summary, fmt)


@sweep_group.command("dyadic")
@click.option("--k", "k_range", required=True, help="Range 'start..stop'.")
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_dyadic_cmd(ctx, k_range, fmt):
    lo, hi = parse_range(k_range, "--k")
    check_capacity(ctx, 2**hi)
    table = numcore.sieve(2**hi)
    rows = [_bound_payload(analysis.dyadic_gap_bound(k, table))
            for k in range(lo, hi + 1)]
    summary = {"all_holds": all(r["holds"] for r in rows), "rows": len(rows)}
    emit_sweep("sweep dyadic", {"k": [lo, hi]}, rows, summary, fmt)


@sweep_group.command("binom")
@click.option("--n", "n_range", required=True, help="Range 'start..stop'.")
@click.option("--step", type=INT, default=1)
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_binom_cmd(ctx, n_range, step, fmt):
    lo, hi = parse_range(n_range, "--n")
    check_capacity(ctx, 2 * hi)
    table = numcore.sieve(2 * hi)
    rows = [_bound_payload(analysis.central_binom_bound(n, table))
            for n in range(lo, hi + 1, step)]
    summary = {"all_holds": all(r["holds"] for r in rows), "rows": len(rows)}
    emit_sweep("sweep binom", {"n": [lo, hi], "step": step}, rows, summary, fmt)


@sweep_group.command("pow4")
@click.option("--m", "m_range", required=True, help="Range 'start..stop'.")
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_pow4_cmd(ctx, m_range, fmt):
    lo, hi = parse_range(m_range, "--m")
    check_capacity(ctx, 4**hi)
    table = numcore.sieve(4**hi)
    rows = [_bound_payload(analysis.pi_power4_bound(m, table))
            for m in range(lo, hi + 1)]
    summary = {"all_holds": all(r["holds"] for r in rows), "rows": len(rows)}
    emit_sweep("sweep pow4", {"m": [lo, hi]}, rows, summary, fmt)


@sweep_group.command("runs")
@click.option("--a", "a_range", required=True, help="Range 'start..stop'.")
@click.option("--b", type=INT, required=True)
@click.option("--n-max", type=INT, required=True)
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_runs_cmd(ctx, a_range, b, n_max, fmt):
    lo, hi = parse_range(a_range, "--a")
    rows = []
    for a in range(lo, hi + 1):
        scan = analysis.longest_prime_run(
            Progression(a, b), n_max, sieve_cap=max_sieve_of(ctx))
        rows.append({"a": a, "b": b, "max_length": scan.max_length,
                     "a_squared": a * a,
                     "within_bound": scan.max_length <= a * a
                     or scan.best.start_n <= analysis.run_length_threshold(
                         Progression(a, b))})
    summary = {"all_within_bound": all(r["within_bound"] for r in rows),
               "rows": len(rows)}
    emit_sweep("sweep runs", {"a": [lo, hi], "b": b, "n_max": n_max},
               rows, summary, fmt)


@sweep_group.command("pdensity")
@click.option("--a", type=INT, required=True)
@click.option("--b", type=INT, required=True)
@click.option("--x", "x_range", required=True, help="Range 'start..stop'.")
@click.option("--geometric", type=INT, default=10)
@click.option("--format", "fmt", type=click.Choice(["records", "csv"]),
              default="records")
@click.pass_context
@handle_errors
def sweep_pdensity_cmd(ctx, a, b, x_range, geometric, fmt):
    """Composite density of |a*n+b| over n <= x, swept in x."""
    lo, hi = parse_range(x_range, "--x")
    if geometric < 2:
        raise click.UsageError("--geometric must be >= 2")
    rows = []
    x = lo
    while x <= hi:
        frac = analysis.progression_composite_density(
            Progression(a, b), x, sieve_cap=max_sieve_of(ctx))
        rows.append({"x": x, "density": float(frac),
                     "num": frac.numerator, "den": frac.denominator})
        x *= geometric
    summary = {"rows": len(rows), "final_density": rows[-1]["density"]}
    emit_sweep("sweep pdensity", {"a": a, "b": b, "x": [lo, hi],
                                  "geometric": geometric},
               rows, summary, fmt)


def main():
    cli(prog_name="apcomposites")


if __name__ == "__main__":
    main()
