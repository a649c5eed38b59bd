"""Entropy bounds for minimal pseudo-Anosov stretch factors, as functions
of genus g and puncture count n, plus delimited table assembly.

All bounds are on log(lambda) and decay like 1/g.  Natural logarithms
throughout.  Two upper-bound regimes are implemented: a layered regime
constant 24*ln(4*D^4)*n valid for g >= 17n + 1, and a uniform regime
constant 252*K*ln(E) valid for n >= 3 and g >= 6*K*n*ln(n)^2, where K is
the coprime-interval constant and E = 326*D^5 the short-walk cap.  The
lower bounds are the twist-word bound ln(2)/(12g - 12 + 4n) and its
1/g-shaped weakening ln(2)/(12 + 36/C)/g on the uniform domain.  D is a
free intersection-degree parameter, never pinned by the theory; it is
surfaced in every emitted record.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraphs import weighted_path_cap

# Fitted coprime-interval constant over moduli 2..1000 (grid step 0.25,
# 100 rungs); regression-tested against min_interval_constant.
FITTED_INTERVAL_CONSTANT = 4.25

PROVENANCE_LAYERED = "layered"
PROVENANCE_UNIFORM = "uniform"
PROVENANCE_PENNER_N0 = "penner_n0"
PROVENANCE_NONE = "none"


def penner_lower(g: int, n: int = 0) -> float:
    """Lower bound ln(2)/(12g - 12 + 4n) for the least stretch entropy."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if n < 0:
        raise ValueError("puncture count must be non-negative")
    return math.log(2) / (12 * g - 12 + 4 * n)


def penner_reference_upper(g: int) -> float:
    """Classical puncture-free reference upper bound ln(11)/g."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    return math.log(11) / g


def layered_upper(g: int, n: int, max_out_degree: int = 2) -> float | None:
    """Upper bound 24*ln(4*D^4)*n/g, valid once g >= 17n + 1; None below.

    D >= 2 is required: the construction needs at least two outgoing
    intersections to branch.  n = 0 gives a degenerate 0.0, which callers
    assembling tables must not treat as an upper bound.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if n < 0:
        raise ValueError("puncture count must be non-negative")
    if max_out_degree < 2:
        raise ValueError("degree cap below 2 cannot support the construction")
    if g < 17 * n + 1:
        return None
    return 24.0 * math.log(4 * max_out_degree ** 4) * n / g


def uniform_upper(g: int, n: int, path_bound: int,
                  interval_constant: float) -> float | None:
    """Upper bound 252*K*ln(E)/g on the domain n >= 3, g >= 6*K*n*ln(n)^2.

    path_bound is the short-walk cap E (326*D^5 for degree cap D);
    interval_constant is the coprime-interval K.  Returns None outside
    the admissible domain.
    """
    if g < 2:
        raise ValueError("genus must be at least 2")
    if path_bound < 2:
        raise ValueError("path bound must exceed 1 for a positive logarithm")
    if interval_constant <= 0:
        raise ValueError("interval constant must be positive")
    if n < 3 or g < 6 * interval_constant * n * math.log(n) ** 2:
        return None
    return 252.0 * interval_constant * math.log(path_bound) / g


def uniform_lower(g: int, n: int, threshold_constant: float) -> float:
    """Lower bound ln(2)/(12 + 36/C)/g on the domain g >= C*n*ln(n)^2, n >= 3.

    Weaker than penner_lower everywhere on its domain (checked), but of
    pure 1/g shape, matching the upper bounds.
    """
    if n < 3:
        raise ValueError("uniform regime needs at least 3 punctures")
    if threshold_constant <= 0:
        raise ValueError("threshold constant must be positive")
    if g < threshold_constant * n * math.log(n) ** 2:
        raise ValueError("genus below the admissible threshold C*n*ln(n)^2")
    value = math.log(2) / (12.0 + 36.0 / threshold_constant) / g
    if value > penner_lower(g, n):
        raise AssertionError("uniform lower bound exceeded the twist-word bound")
    return value


@dataclass(frozen=True)
class SmallGenusConstant:
    """Upper-bound constant combining the linear term with scaled
    small-genus minima; complete only when all 17n values were supplied."""

    value: float
    complete: bool


def small_genus_max_constant(n: int, linear_constant: float,
                             small_genus_values: Sequence[float] | None = None,
                             ) -> SmallGenusConstant:
    """max(C*n, 17n * v_1, ..., 17n * v_{17n}) over supplied small-genus
    entropy values v_g; with no values, returns C*n flagged incomplete.

    The small-genus minima are unknown in general and must come from the
    caller; nothing is fabricated here.
    """
    if n < 1:
        raise ValueError("puncture count must be at least 1")
    if linear_constant <= 0:
        raise ValueError("linear constant must be positive")
    if small_genus_values is None:
        return SmallGenusConstant(value=linear_constant * n, complete=False)
    if len(small_genus_values) != 17 * n:
        raise ValueError(f"expected 17n = {17 * n} small-genus values, "
                         f"got {len(small_genus_values)}")
    best = linear_constant * n
    for v in small_genus_values:
        if v < 0:
            raise ValueError("entropy values cannot be negative")
        best = max(best, 17 * n * v)
    return SmallGenusConstant(value=best, complete=True)


def thurston_interpolation(g: int, r: int) -> tuple[int, int]:
    """(norm, genus) after adding r fiber classes: norm 2(g + r - 1),
    genus g + r.  The norm is the surface complexity |chi| = 2g - 2
    shifted by 2 per added class."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if r < 0:
        raise ValueError("class count must be non-negative")
    return 2 * (g + r - 1), g + r


# --- sequence-driven genus ratios ----------------------------------------------

@dataclass(frozen=True)
class RatioReport:
    n: int
    variant: str
    count: int
    max_term_ratio: float
    max_genus_ratio: float
    term_cap: float
    genus_cap: float

    @property
    def holds(self) -> bool:
        return (self.max_term_ratio < self.term_cap
                and self.max_genus_ratio <= self.genus_cap)


def genus_ratio_report(n: int, variant: str, count: int,
                       interval_constant: float | None = None) -> RatioReport:
    """Consecutive ratios of coprime-floor terms and of the genus values
    n(6a - 1) + 1 they induce, against caps 3 and 6 (floor at n) or 3K
    and 6K (floor at ln(n)^2)."""
    from .numtheory import FLOOR_LOG2, FLOOR_N, coprime_sequence, genus_from_terms

    if count < 2:
        raise ValueError("ratios need at least two terms")
    if variant == FLOOR_N:
        term_cap, genus_cap = 3.0, 6.0
    elif variant == FLOOR_LOG2:
        if interval_constant is None or interval_constant <= 0:
            raise ValueError("floor_log2 caps need a positive interval constant")
        term_cap = 3.0 * interval_constant
        genus_cap = 6.0 * interval_constant
    else:
        raise ValueError(f"unknown variant {variant!r}")
    seq = coprime_sequence(n, variant, count)
    genus = genus_from_terms(n, seq.terms)
    max_genus = max(b / a for a, b in zip(genus, genus[1:]))
    return RatioReport(n=n, variant=variant, count=count,
                       max_term_ratio=seq.ratio_bound,
                       max_genus_ratio=max_genus,
                       term_cap=term_cap, genus_cap=genus_cap)


# --- bound tables ----------------------------------------------------------------

CSV_COLUMNS = ("n", "g", "lower", "upper", "upper_provenance", "D", "E", "K", "C")


@dataclass(frozen=True)
class BoundRecord:
    n: int
    g: int
    lower: float
    upper: float | None
    upper_provenance: str
    max_out_degree: int
    path_bound: int
    interval_constant: float
    threshold_constant: float

    def __post_init__(self) -> None:
        if self.lower <= 0:
            raise ValueError("lower bound must be positive")
        if self.upper is not None and self.upper < self.lower:
            raise ValueError("upper bound below lower bound")

    def as_row(self) -> tuple:
        return (self.n, self.g, self.lower, self.upper, self.upper_provenance,
                self.max_out_degree, self.path_bound, self.interval_constant,
                self.threshold_constant)


def bounds_table(n_values: Iterable[int], g_values: Iterable[int],
                 max_out_degree: int = 2,
                 interval_constant: float = FITTED_INTERVAL_CONSTANT,
                 ) -> list[BoundRecord]:
    """One record per (n, g), sorted; lower is always the twist-word bound,
    upper is the tightest applicable regime (layered, uniform, or the
    puncture-free reference for n = 0), with its provenance tag.

    The constants columns (D, E, K, C) are table-level parameters: the
    degree cap, the walk cap 326*D^5, the interval constant, and the
    admissibility constant 6K of the uniform regime.
    """
    path_bound = weighted_path_cap(max_out_degree)
    records = []
    for n in sorted(set(n_values)):
        for g in sorted(set(g_values)):
            lower = penner_lower(g, n)
            candidates: list[tuple[float, str]] = []
            if n == 0:
                candidates.append((penner_reference_upper(g), PROVENANCE_PENNER_N0))
            else:
                lay = layered_upper(g, n, max_out_degree)
                if lay is not None:
                    candidates.append((lay, PROVENANCE_LAYERED))
                uni = uniform_upper(g, n, path_bound, interval_constant)
                if uni is not None:
                    candidates.append((uni, PROVENANCE_UNIFORM))
            if candidates:
                upper, provenance = min(candidates)
            else:
                upper, provenance = None, PROVENANCE_NONE
            records.append(BoundRecord(
                n=n, g=g, lower=lower, upper=upper, upper_provenance=provenance,
                max_out_degree=max_out_degree, path_bound=path_bound,
                interval_constant=interval_constant,
                threshold_constant=6.0 * interval_constant))
    return records


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def records_to_csv(records: Iterable[BoundRecord]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        lines.append(",".join(_cell(v) for v in rec.as_row()))
    return "\n".join(lines) + "\n"


def records_to_json(records: Iterable[BoundRecord]) -> str:
    payload = [dict(zip(CSV_COLUMNS, rec.as_row())) for rec in records]
    return json.dumps(payload, indent=2) + "\n"
