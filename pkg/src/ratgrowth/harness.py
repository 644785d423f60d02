"""Bound evaluation and exponent-fitting experiments.

Evaluates the counting bounds for each theorem family, fits log-log
slopes of measured counts against height, and emits deterministic
CSV/JSON reports.  Counts come either from direct enumeration or, for
the shipped parametrizable family, from pulling the count back to P^1.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra.multipoly import MultiPoly, poly_parse
from .detmethod import regime_check
from .enumeration import (
    BudgetExceededError,
    EnumOptions,
    enum_curve_points_proj,
    enum_proj_points,
)
from .globalfield import GlobalField

THEOREMS = (
    "Curve",
    "AffineCurve",
    "AffineHypersurface",
    "DimGrowthProj",
    "DimGrowthAff",
    "PilaK",
)


@dataclass(frozen=True)
class BoundSpec:
    """Which counting bound to evaluate, with its constants."""

    theorem: str
    c: float = 1.0
    kappa: int = 12
    d_K: int = 1

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem family {self.theorem!r}")


class UnsupportedBound(ValueError):
    pass


def bound_value(spec: BoundSpec, d: int, H: float, n: int = 2) -> float:
    """The literal bound formula value; pure arithmetic.

    n is the ambient dimension (P^n or A^n); hypersurfaces there have
    dim X = n - 1.  Degree-3 dimension-growth uses the 2/sqrt(3) branch;
    d <= 2 is unsupported for the dimension-growth families.
    """
    if H <= 2 or d < 1:
        raise ValueError("need H > 2 and d >= 1")
    log_pow = math.log(H) ** spec.kappa
    dim_x = n - 1
    t = spec.theorem
    if t == "Curve":
        return spec.c * d * d * H ** (2.0 * spec.d_K / d) * log_pow
    if t == "AffineCurve":
        return spec.c * d * d * H ** (1.0 / d) * log_pow
    if t == "AffineHypersurface":
        return spec.c * d * d * H ** (n - 2 + 1.0 / d) * log_pow
    if t == "DimGrowthProj":
        if d >= 4:
            return spec.c * d * d * H ** (spec.d_K * dim_x) * log_pow
        if d == 3:
            return spec.c * H ** (spec.d_K * (dim_x - 1 + 2.0 / math.sqrt(3.0))) * log_pow
        raise UnsupportedBound(f"DimGrowthProj needs d >= 3, got {d}")
    if t == "DimGrowthAff":
        if d >= 4:
            return spec.c * d * d * H ** (dim_x - 1) * log_pow
        if d == 3:
            return spec.c * H ** (dim_x - 2 + 2.0 / math.sqrt(3.0)) * log_pow
        raise UnsupportedBound(f"DimGrowthAff needs d >= 3, got {d}")
    if t == "PilaK":
        return spec.c * d * d * H ** (dim_x - 1 + 1.0 / d) * log_pow
    raise AssertionError(t)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A parametrized curve family.

    The template is polynomial text with "{d}" and "{d1}" placeholders
    (d1 = d - 1).  enumerator_hint "parametrized" marks families whose
    counts can be pulled back to P^1 through a degree-1 parametrization;
    the shipped cuspidal monomial family x1*x0^(d-1) - x2^d is such, with
    the parametrization (s : t) -> (s^d : t^d : s^(d-1) t).
    """

    name: str
    template: str
    enumerator_hint: str = "direct"  # "direct" | "parametrized"

    def polynomial(self, d: int, field: GlobalField) -> MultiPoly:
        text = self.template.replace("{d1}", str(d - 1)).replace("{d}", str(d))
        return poly_parse(text, 3, field.integer_domain())


CUSPIDAL_FAMILY = FamilySpec(
    name="cuspidal_monomial",
    template="x1*x0^{d1} - x2^{d}",
    enumerator_hint="parametrized",
)

LINE_FAMILY = FamilySpec(
    name="projective_line",
    template="x2",
    enumerator_hint="parametrized",
)

_BUILTIN_FAMILIES = {f.name: f for f in (CUSPIDAL_FAMILY, LINE_FAMILY)}


def _integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) exactly."""
    if x < 0 or n < 1:
        raise ValueError
    if x == 0:
        return 0
    r = int(round(x ** (1.0 / n)))
    while r > 0 and r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def count_p1_points(field: GlobalField, H: int) -> int:
    """#P^1(K, H) by direct primitive-pair enumeration."""
    return enum_proj_points(1, H, field, EnumOptions(collect=False)).count


def family_count(
    family: FamilySpec, d: int, H: int, field: GlobalField, budget: int | None = None
) -> int:
    """Number of height-<=H points on the degree-d family member.

    Parametrized families pull the count back to P^1: the cuspidal
    monomial curve has height exactly (P^1 height)^d along its
    parametrization, and the line is a copy of P^1.
    """
    if family.enumerator_hint == "parametrized":
        if family.name == "projective_line":
            return count_p1_points(field, H)
        if field.is_rational:
            X = _integer_nth_root(H, d)
            return count_p1_points(field, max(X, 1))
        # function field: height q^(d * max deg) <= H
        j = int(math.floor(math.log(H, field.q) / d))
        return count_p1_points(field, field.q**j if j >= 0 else 1)
    poly = family.polynomial(d, field)
    options = EnumOptions(collect=False, budget=budget) if budget else EnumOptions(collect=False)
    return enum_curve_points_proj(poly, H, options).count


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    residuals: tuple[float, ...]
    degenerate: bool


def ols_loglog(hs, counts) -> FitResult:
    """Ordinary least squares of log(count) against log(H)."""
    if len(hs) != len(counts) or len(hs) < 2:
        raise ValueError("need matching lists with at least 2 entries")
    if any(c <= 0 for c in counts):
        raise ValueError("counts must be positive for a log-log fit")
    xs = [math.log(h) for h in hs]
    ys = [math.log(c) for c in counts]
    if len(set(ys)) == 1:
        return FitResult(0.0, ys[0], tuple(0.0 for _ in ys), True)
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    residuals = tuple(y - (intercept + slope * x) for x, y in zip(xs, ys))
    return FitResult(slope, intercept, residuals, False)


def exponent_fit(
    family: FamilySpec, d: int, H_list, field: GlobalField | None = None
) -> FitResult:
    """Fit the log-log growth exponent of the family's counts; the target
    slope for the shipped family is 2 d_K / d."""
    field = field or GlobalField.rationals()
    if len(H_list) < 4:
        raise ValueError("need at least 4 height values")
    counts = [family_count(family, d, H, field) for H in H_list]
    if any(c <= 0 for c in counts):
        raise ValueError("family produced an empty count; cannot fit")
    return ols_loglog(list(H_list), counts)


# ---------------------------------------------------------------------------
# experiment runner
# ---------------------------------------------------------------------------

CSV_COLUMNS = (
    "family",
    "field",
    "d",
    "H",
    "count",
    "bound",
    "ratio",
    "regime_ok",
    "elapsed_ms",
    "status",
)


@dataclass
class ExperimentRow:
    family: str
    field: str
    d: int
    H: int
    count: int | None
    bound: float
    ratio: float | None
    regime_ok: bool
    elapsed_ms: float
    status: str = "ok"


@dataclass
class ExperimentReport:
    family: str
    field: str
    d: int
    rows: list[ExperimentRow]
    fitted_exponent: float | None
    fitted_c: float | None
    elapsed_ms: float


def _resolve_family(entry) -> FamilySpec:
    if isinstance(entry, FamilySpec):
        return entry
    name = entry.get("name")
    if "template" in entry:
        return FamilySpec(
            name=name,
            template=entry["template"],
            enumerator_hint=entry.get("enumerator_hint", "direct"),
        )
    if name in _BUILTIN_FAMILIES:
        return _BUILTIN_FAMILIES[name]
    raise ValueError(f"unknown family {name!r}")


def run_experiment(config: dict) -> tuple[list[ExperimentReport], str]:
    """Run the configured sweeps; returns (reports, csv_text).

    Config keys: families (list), fields (descriptor strings), heights,
    degrees (optional, default [3]), bounds {theorem?, c, kappa},
    seed, budget.  Deterministic for a fixed config and seed;
    RATGROWTH_SEED overrides the seed, RATGROWTH_THREADS caps workers.
    """
    families = [_resolve_family(e) for e in config.get("families", [])]
    fields = [GlobalField.parse(s) for s in config.get("fields", ["Q"])]
    heights = list(config.get("heights", []))
    degrees = list(config.get("degrees", [3]))
    bounds_cfg = dict(config.get("bounds", {}))
    seed = int(os.environ.get("RATGROWTH_SEED", config.get("seed", 0)))
    budget = int(config.get("budget", 50_000_000))
    spec = BoundSpec(
        theorem=bounds_cfg.get("theorem", "Curve"),
        c=float(bounds_cfg.get("c", 1.0)),
        kappa=int(bounds_cfg.get("kappa", 12)),
    )

    tasks = [
        (family, field, d, H)
        for family in families
        for field in fields
        for d in degrees
        for H in heights
    ]

    def run_one(task) -> ExperimentRow:
        family, field, d, H = task
        t0 = time.perf_counter()
        status = "ok"
        count: int | None = None
        try:
            count = family_count(family, d, H, field, budget=budget)
        except BudgetExceededError:
            status = "budget_exceeded"
        bound = bound_value(spec, d, H) if H > 2 else float("nan")
        regime = regime_check(d, H).ok if H > 2 else False
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        ratio = (count / bound) if (count is not None and bound > 0) else None
        return ExperimentRow(
            family=family.name,
            field=field.kind if field.is_rational else f"Fq(t):q={field.q}",
            d=d,
            H=H,
            count=count,
            bound=bound,
            ratio=ratio,
            regime_ok=regime,
            elapsed_ms=elapsed_ms,
            status=status,
        )

    workers = int(os.environ.get("RATGROWTH_THREADS", "1"))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run_one, tasks))
    else:
        rows = [run_one(t) for t in tasks]

    # deterministic assembly independent of execution order
    keyed = {(r.family, r.field, r.d, r.H): r for r in rows}
    rows = [keyed[(f.name, _field_str(fl), d, H)] for f in families for fl in fields for d in degrees for H in heights]

    reports = []
    for family in families:
        for field in fields:
            for d in degrees:
                t0 = time.perf_counter()
                group = [
                    r
                    for r in rows
                    if r.family == family.name
                    and r.field == _field_str(field)
                    and r.d == d
                ]
                fitted_exponent = fitted_c = None
                usable = [r for r in group if r.count and r.count > 0]
                if len(usable) >= 2:
                    fit = ols_loglog([r.H for r in usable], [r.count for r in usable])
                    fitted_exponent = fit.slope
                    fitted_c = math.exp(fit.intercept)
                reports.append(
                    ExperimentReport(
                        family=family.name,
                        field=_field_str(field),
                        d=d,
                        rows=group,
                        fitted_exponent=fitted_exponent,
                        fitted_c=fitted_c,
                        elapsed_ms=(time.perf_counter() - t0) * 1000.0
                        + sum(r.elapsed_ms for r in group),
                    )
                )
    _ = seed  # recorded for reproducibility; enumeration is deterministic
    return reports, emit_csv(rows)


def _field_str(field: GlobalField) -> str:
    return field.kind if field.is_rational else f"Fq(t):q={field.q}"


def emit_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                r.family,
                r.field,
                r.d,
                r.H,
                "" if r.count is None else r.count,
                repr(r.bound),
                "" if r.ratio is None else repr(r.ratio),
                int(r.regime_ok),
                repr(r.elapsed_ms),
                r.status,
            ]
        )
    return buf.getvalue()


def parse_csv(text: str) -> list[ExperimentRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_COLUMNS:
        raise ValueError("unexpected CSV header")
    rows = []
    for rec in reader:
        rows.append(
            ExperimentRow(
                family=rec[0],
                field=rec[1],
                d=int(rec[2]),
                H=int(rec[3]),
                count=None if rec[4] == "" else int(rec[4]),
                bound=float(rec[5]),
                ratio=None if rec[6] == "" else float(rec[6]),
                regime_ok=bool(int(rec[7])),
                elapsed_ms=float(rec[8]),
                status=rec[9],
            )
        )
    return rows


def report_to_json(reports) -> str:
    payload = []
    for rep in reports:
        payload.append(
            {
                "family": rep.family,
                "field": rep.field,
                "d": rep.d,
                "fitted_exponent": rep.fitted_exponent,
                "fitted_c": rep.fitted_c,
                "elapsed_ms": rep.elapsed_ms,
                "rows": [
                    {
                        "H": r.H,
                        "count": r.count,
                        "bound": r.bound,
                        "ratio": r.ratio,
                        "regime_ok": r.regime_ok,
                        "status": r.status,
                    }
                    for r in rep.rows
                ],
            }
        )
    return json.dumps(payload, indent=2)
