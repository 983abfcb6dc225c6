"""Rated-group records and the cohesion/rating correlation analysis."""

from __future__ import annotations

import csv
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal
from typing import TextIO

import numpy as np
from scipy import stats

__all__ = [
    "GroupRatingRecord",
    "read_ratings",
    "Correlation",
    "spearman",
    "log_pearson",
    "rating_bins",
]


@dataclass(frozen=True)
class GroupRatingRecord:
    group_id: str
    cohesion: float
    rating: float
    density: float | None = None
    clustering: float | None = None
    conductance: float | None = None


def _opt(row: dict, key: str) -> float | None:
    v = row.get(key)
    return None if v in (None, "") else float(v)


def read_ratings(
    fh: TextIO, rating_min: float | None = None, rating_max: float | None = None
) -> list[GroupRatingRecord]:
    """Parse a CSV with header columns ``group_id,cohesion,rating`` (plus
    optional ``density,clustering,conductance``)."""
    reader = csv.DictReader(fh)
    missing = {"group_id", "cohesion", "rating"} - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"ratings CSV lacks column(s): {', '.join(sorted(missing))}")
    out = []
    for lineno, row in enumerate(reader, start=2):
        try:
            rec = GroupRatingRecord(
                row["group_id"],
                float(row["cohesion"]),
                float(row["rating"]),
                _opt(row, "density"),
                _opt(row, "clustering"),
                _opt(row, "conductance"),
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not 0.0 <= rec.cohesion <= 1.0:
            raise ValueError(f"line {lineno}: cohesion {rec.cohesion} outside [0, 1]")
        if (rating_min is not None and rec.rating < rating_min) or (
            rating_max is not None and rec.rating > rating_max
        ):
            raise ValueError(f"line {lineno}: rating {rec.rating} outside declared scale")
        out.append(rec)
    return out


@dataclass(frozen=True)
class Correlation:
    coefficient: float
    p_value: float
    n: int
    excluded: int = 0


def spearman(x: Sequence[float], y: Sequence[float]) -> Correlation:
    """Spearman's rho with average ranks for ties; two-sided t-approximation p."""
    if len(x) != len(y):
        raise ValueError("x and y differ in length")
    if len(x) < 3:
        raise ValueError("need at least 3 records")
    res = stats.spearmanr(x, y)
    return Correlation(float(res.statistic), float(res.pvalue), len(x))


def log_pearson(x: Sequence[float], y: Sequence[float]) -> Correlation:
    """Pearson's r between ln x and ln y over pairs where both are positive.

    Dropped pairs are counted in ``excluded``. Fewer than 3 usable pairs
    yield a NaN coefficient.
    """
    if len(x) != len(y):
        raise ValueError("x and y differ in length")
    pairs = [(a, b) for a, b in zip(x, y) if a > 0 and b > 0]
    excluded = len(x) - len(pairs)
    if len(pairs) < 3:
        return Correlation(math.nan, math.nan, len(pairs), excluded)
    lx = np.log([a for a, _ in pairs])
    ly = np.log([b for _, b in pairs])
    if np.ptp(lx) == 0 or np.ptp(ly) == 0:
        return Correlation(math.nan, math.nan, len(pairs), excluded)
    res = stats.pearsonr(lx, ly)
    return Correlation(float(res.statistic), float(res.pvalue), len(pairs), excluded)


def rating_bins(
    records: Iterable[GroupRatingRecord], bin_width: float = 0.01
) -> list[tuple[float, float, int]]:
    """Mean rating per left-closed cohesion bin ``[i*w, (i+1)*w)``.

    Bin indices are computed in decimal arithmetic on the values' shortest
    repr, so 0.03 with width 0.01 lands in bin 3. Empty bins are omitted.
    Rows are ``(bin_start, mean_rating, count)`` in ascending order.
    """
    if not bin_width > 0:
        raise ValueError("bin_width must be positive")
    w = Decimal(repr(bin_width))
    sums: dict[int, list[float]] = {}
    for rec in records:
        i = int((Decimal(repr(rec.cohesion)) / w).to_integral_value(rounding=ROUND_FLOOR))
        sums.setdefault(i, []).append(rec.rating)
    return [
        (float(i * w), sum(r) / len(r), len(r)) for i, r in sorted(sums.items())
    ]
