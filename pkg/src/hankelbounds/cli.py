"""Command-line interface.

    hankelbounds identities                  # exact identity ledger, one JSON line each
    hankelbounds lemmas --samples 100000     # Monte-Carlo coefficient-estimate suite
    hankelbounds bounds --class r --alpha-grid 0:0.25:0.05
    hankelbounds search --class s --alpha 0 --functional j2
    hankelbounds sweep --class k --functional h31 --alpha-grid 0:0.9:0.1

Exit codes: 0 success, 1 mathematical violation, 2 usage or configuration error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

import click

from . import polyid
from .bounds import (
    Functional,
    alternative_g_bound,
    bound_h31,
    bound_zalcman,
    chi_max,
    exact_alpha,
    reference_bounds,
)
from .caratheodory import lemma_suite
from .coeffs import ALPHA_RANGE, ClassSpec, Kind
from .errors import HankelBoundsError
from .search import SearchConfig, SearchReport, alpha_sweep, maximize

__all__ = ["main", "parse_alpha_grid", "format_exact", "format_real"]

CLASS_ALIASES = {
    "s": Kind.STARLIKE, "starlike": Kind.STARLIKE,
    "k": Kind.CONVEX, "convex": Kind.CONVEX,
    "r": Kind.BOUNDED_TURNING, "bounded-turning": Kind.BOUNDED_TURNING,
    "m": Kind.HARMONIC_M, "harmonic-m": Kind.HARMONIC_M,
}

EXIT_VIOLATION = 1
EXIT_USAGE = 2


def format_real(x) -> str:
    return format(float(x), ".17g")


def format_exact(x) -> str:
    """``num/den`` for rationals (plain integer when the denominator is 1)."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return format_real(x)


def _alpha_text(a: Fraction) -> str:
    # exact decimal when the expansion terminates, otherwise num/den
    d = a.denominator
    for f in (2, 5):
        while d % f == 0:
            d //= f
    if d != 1:
        return str(a)
    with localcontext() as ctx:
        ctx.prec = 60
        text = format(Decimal(a.numerator) / Decimal(a.denominator), "f")
    return text.rstrip("0").rstrip(".") if "." in text else text


def parse_alpha_grid(text: str, kind: Kind | None = None) -> list[Fraction]:
    """``start:stop:step``, inclusive of ``stop``; values at or above the class limit 1 are dropped."""
    parts = text.split(":")
    if len(parts) != 3:
        raise click.BadParameter(f"expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(str(exc)) from None
    if step <= 0:
        raise click.BadParameter("step must be positive")
    grid = []
    a = start
    while a <= stop:
        grid.append(a)
        a += step
    if kind is not None:
        grid = [a for a in grid if a < ALPHA_RANGE[kind][1]]
    return grid


def _parse_alpha(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"not a number: {text!r}") from None


def _alphas(kind: Kind, alpha: str | None, grid: str | None) -> list[Fraction]:
    if (alpha is None) == (grid is None):
        raise click.UsageError("give exactly one of --alpha or --alpha-grid")
    return [_parse_alpha(alpha)] if alpha is not None else parse_alpha_grid(grid, kind)


def _emit(rows: list[dict], fmt: str, out: str | None, columns: list[str] | None = None) -> None:
    columns = columns or (list(rows[0]) if rows else [])
    if fmt == "json":
        text = "".join(json.dumps(r) + "\n" for r in rows)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n",
                                quoting=csv.QUOTE_MINIMAL, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        cells = [[str(c) for c in columns]] + [[str(r.get(c, "")) for c in columns] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        text = "".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n"
                       for row in cells)
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _fail(msg: str, code: int) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


format_option = click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]),
                             default="json", show_default=True)
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write to this file instead of stdout.")
class_option = click.option("--class", "cls", required=True,
                            type=click.Choice(sorted(CLASS_ALIASES), case_sensitive=False),
                            help="s=starlike, k=convex, r=bounded turning, harmonic-m.")


@click.group()
def main():
    """Hankel determinant and Zalcman functional bounds for order-alpha classes."""


@main.command()
@format_option
@out_option
def identities(fmt, out):
    """Verify every registered polynomial identity exactly.

    One row per identity with columns name, holds, residual_term_count.
    """
    reports = [polyid.verify_identity(name) for name in polyid.REGISTRY]
    _emit([r.as_dict() for r in reports], fmt, out, ["name", "holds", "residual_term_count"])
    failing = [r.name for r in reports if not r.holds]
    if failing:
        _fail("identities with non-zero residual: " + ", ".join(failing), EXIT_VIOLATION)


@main.command()
@click.option("--samples", type=click.IntRange(min=1), default=100000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-12, show_default=True)
@format_option
@out_option
def lemmas(samples, seed, tol, fmt, out):
    """Max residual of the coefficient estimates and the witness round trip.

    Columns: check, max_residual, passed.  The |x| and |z| rows are informational.
    """
    res = lemma_suite(samples, seed)
    rows = [
        {"check": "abs_pn_le_2", "max_residual": format_real(res.max_r1), "passed": res.max_r1 <= tol},
        {"check": "pn_minus_pk_pnk", "max_residual": format_real(res.max_r2), "passed": res.max_r2 <= tol},
        {"check": "pn_minus_mu_pk_pnk", "max_residual": format_real(res.max_r3), "passed": res.max_r3 <= tol},
        {"check": "witness_roundtrip", "max_residual": format_real(res.max_roundtrip),
         "passed": res.max_roundtrip <= tol},
        {"check": "witness_max_abs_x", "max_residual": format_real(res.max_abs_x), "passed": ""},
        {"check": "witness_max_abs_z", "max_residual": format_real(res.max_abs_z), "passed": ""},
    ]
    _emit(rows, fmt, out, ["check", "max_residual", "passed"])
    bad = res.violations(tol)
    if bad:
        detail = "; ".join(f"{k}: atoms={list(m.atoms)}" for k, m in bad.items())
        _fail(f"lemma violations (samples={samples}, seed={seed}): {detail}", EXIT_VIOLATION)


def _bounds_row(kind: Kind, a: Fraction) -> dict:
    spec = ClassSpec(kind, a)
    row = {"alpha": _alpha_text(a)}

    def put(name, value):
        row[name] = format_exact(value)
        row[name + "_decimal"] = format_real(value)

    if kind is Kind.HARMONIC_M:
        h_part, g_part = bound_h31(spec)
        put("h31_h", h_part.value)
        put("h31_g", g_part.value)
        row["chi_max"] = format_exact(chi_max(a)[0])
        put("alternative_g", alternative_g_bound(a))
    else:
        put("h31", bound_h31(spec).value)
        put("j2", bound_zalcman(spec, 2).value)
        put("j3", bound_zalcman(spec, 3).value)
    if kind in (Kind.CONVEX, Kind.HARMONIC_M):
        row["reference_c"] = format_real(reference_bounds("C")[0].value) if a == Fraction(-1, 2) else ""
    if kind is Kind.BOUNDED_TURNING:
        row["reference_d"] = format_real(reference_bounds("D", a)[0].value) if a <= Fraction(1, 4) else ""
    return row


@main.command()
@class_option
@click.option("--alpha", default=None, help="Single alpha (decimal or num/den).")
@click.option("--alpha-grid", default=None, help="Inclusive start:stop:step.")
@format_option
@out_option
def bounds(cls, alpha, alpha_grid, fmt, out):
    """Closed-form bounds per alpha.

    \b
    s, k, r:    alpha, h31, j2, j3 (exact num/den plus *_decimal columns)
    k:          + reference_c (literature value, only at alpha = -1/2)
    r:          + reference_d (literature value, only for alpha <= 1/4)
    harmonic-m: alpha, h31_h, h31_g, chi_max, alternative_g, reference_c
    """
    kind = CLASS_ALIASES[cls.lower()]
    try:
        rows = [_bounds_row(kind, a) for a in _alphas(kind, alpha, alpha_grid)]
    except HankelBoundsError as exc:
        _fail(str(exc), EXIT_USAGE)
    _emit(rows, fmt, out)


def _report_row(rep: SearchReport) -> dict:
    cfg = rep.config
    return {
        "class": cfg.class_spec.kind.value,
        "alpha": _alpha_text(exact_alpha(cfg.class_spec.alpha)),
        "functional": cfg.functional.label,
        "best_magnitude": format_real(rep.best_magnitude),
        "bound": format_exact(rep.bound.value),
        "bound_decimal": format_real(rep.bound.value),
        "gap": format_real(rep.gap),
        "respects_bound": rep.respects_bound,
        "restarts": cfg.restarts,
        "atoms": cfg.atoms,
        "seed": cfg.seed,
        "evaluations": rep.evaluations,
        "best_restart": rep.best_restart,
        "best_p": json.dumps([[format_real(v.real), format_real(v.imag)] for v in rep.best_p]),
        "best_measure": json.dumps([[format_real(w), format_real(t)] for w, t in rep.best_measure.atoms]),
    }


def search_options(f):
    for opt in reversed([
        class_option,
        click.option("--functional", default="h31", show_default=True,
                     help="h31, h31-h, h31-g, j2, j3 or jn:<n>."),
        click.option("--restarts", type=int, default=200, show_default=True),
        click.option("--atoms", type=int, default=4, show_default=True),
        click.option("--refine-iters", type=int, default=500, show_default=True),
        click.option("--seed", type=int, default=0, show_default=True),
        click.option("--tol", type=float, default=1e-9, show_default=True),
        click.option("--no-pin", is_flag=True, help="Do not pin the first atom (rotation check)."),
        format_option,
        out_option,
    ]):
        f = opt(f)
    return f


def _configs(kind, alphas, functional, restarts, atoms, refine_iters, seed, tol, no_pin):
    try:
        fn = Functional.parse(functional)
        return [SearchConfig(ClassSpec(kind, a), fn, restarts, atoms, refine_iters, seed, tol,
                             pin_rotation=not no_pin) for a in alphas]
    except (HankelBoundsError, ValueError) as exc:
        _fail(str(exc), EXIT_USAGE)


def _finish(reports: list[SearchReport], fmt, out):
    _emit([_report_row(r) for r in reports], fmt, out)
    bad = [r for r in reports if not r.respects_bound]
    if bad:
        detail = ", ".join(f"alpha={r.config.class_spec.alpha} gap={format_real(r.gap)}" for r in bad)
        _fail(f"search exceeded the closed-form bound: {detail}", EXIT_VIOLATION)


@main.command()
@search_options
@click.option("--alpha", default="0", show_default=True)
def search(cls, functional, restarts, atoms, refine_iters, seed, tol, no_pin, fmt, out, alpha):
    """Multistart maximization of one functional at one alpha."""
    kind = CLASS_ALIASES[cls.lower()]
    (cfg,) = _configs(kind, [_parse_alpha(alpha)], functional, restarts, atoms,
                      refine_iters, seed, tol, no_pin)
    _finish([maximize(cfg)], fmt, out)


@main.command()
@search_options
@click.option("--alpha-grid", required=True, help="Inclusive start:stop:step.")
def sweep(cls, functional, restarts, atoms, refine_iters, seed, tol, no_pin, fmt, out, alpha_grid):
    """Run the search for every alpha of a grid, rows ordered by alpha."""
    kind = CLASS_ALIASES[cls.lower()]
    configs = _configs(kind, parse_alpha_grid(alpha_grid, kind), functional, restarts, atoms,
                       refine_iters, seed, tol, no_pin)
    if not configs:
        _finish([], fmt, out)
        return
    base = configs[0]
    reports = alpha_sweep(kind, base.functional, [c.class_spec.alpha for c in configs], base)
    _finish(reports, fmt, out)


if __name__ == "__main__":
    main()
