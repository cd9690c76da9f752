"""Per-period schedules, method comparisons, rate sweeps, trade surplus."""

from __future__ import annotations

from dataclasses import dataclass

from .classic import (
    Method,
    _as_period,
    double_declining_book_value,
    straight_line_book_value,
    sum_of_years_book_value,
)
from .core import AssetSpec, DiscountRate, intrinsic_depreciation, intrinsic_value
from .errors import InvalidInput, MissingRate


@dataclass(frozen=True)
class ScheduleRow:
    period: int  # 1-based
    age_end: float
    expense: float  # <= 0
    book_value: float  # >= 0


@dataclass(frozen=True)
class Schedule:
    method: Method
    rate: DiscountRate | None
    asset: AssetSpec
    rows: tuple[ScheduleRow, ...]


@dataclass(frozen=True)
class ComparisonReport:
    asset: AssetSpec
    schedules: tuple[Schedule, ...]


@dataclass(frozen=True)
class SweepReport:
    asset: AssetSpec
    rates: tuple[DiscountRate, ...]
    values: tuple[tuple[float, ...], ...]  # values[rate_index][age]


_CLASSIC_BOOK = {
    Method.STRAIGHT_LINE: straight_line_book_value,
    Method.DOUBLE_DECLINING: double_declining_book_value,
    Method.SUM_OF_YEARS: sum_of_years_book_value,
}


def build_schedule(
    asset: AssetSpec, method: Method, rate: DiscountRate | None = None
) -> Schedule:
    """One row per period 1..lifetime with end-of-period expense and book value.

    Intrinsic schedules need a rate (rate 0 degenerates to straight-line);
    classical methods ignore it.
    """
    life = _as_period(asset.lifetime, "lifetime")
    rows = []
    if method is Method.INTRINSIC:
        if rate is None:
            raise MissingRate("intrinsic schedules require a discount rate")
        for n in range(1, life + 1):
            expense = intrinsic_depreciation(asset, rate, n - 1, n)
            book = intrinsic_value(asset, rate, float(n)).amount
            rows.append(ScheduleRow(n, float(n), expense, book))
    else:
        book_fn = _CLASSIC_BOOK[method]
        prev = asset.cost
        for n in range(1, life + 1):
            book = book_fn(asset, n)
            rows.append(ScheduleRow(n, float(n), book - prev, book))
            prev = book
    return Schedule(method=method, rate=rate if method is Method.INTRINSIC else None,
                    asset=asset, rows=tuple(rows))


def compare_methods(
    asset: AssetSpec, methods: list[Method], rate: DiscountRate | None = None
) -> ComparisonReport:
    """Aligned schedules for several methods over the same asset."""
    if not methods:
        raise InvalidInput("at least one method is required")
    schedules = tuple(
        build_schedule(asset, m, rate if m is Method.INTRINSIC else None)
        for m in methods
    )
    return ComparisonReport(asset=asset, schedules=schedules)


def rate_sweep(asset: AssetSpec, rates: list[DiscountRate]) -> SweepReport:
    """Intrinsic value at every integer age 0..lifetime, one row per rate."""
    if not rates:
        raise InvalidInput("at least one rate is required")
    life = _as_period(asset.lifetime, "lifetime")
    values = tuple(
        tuple(intrinsic_value(asset, r, float(a)).amount for a in range(life + 1))
        for r in rates
    )
    return SweepReport(asset=asset, rates=tuple(rates), values=values)


def chord_gap(asset: AssetSpec, rate: DiscountRate) -> float:
    """Max gap between the intrinsic value curve and its straight-line chord.

    Evaluated by brute force on the integer age grid; non-negative, and
    grows with the rate (the curve bows further above the chord).
    """
    life = _as_period(asset.lifetime, "lifetime")
    return max(
        intrinsic_value(asset, rate, float(a)).amount - asset.cost * (1.0 - a / life)
        for a in range(life + 1)
    )


def trade_surplus(
    asset: AssetSpec,
    age: float,
    seller_rate: DiscountRate,
    buyer_rate: DiscountRate,
) -> float:
    """Buyer's intrinsic valuation minus the seller's at the same age.

    Non-negative whenever the buyer's cost of capital is the higher one;
    zero at age 0 and at end of life regardless of rates.
    """
    buyer = intrinsic_value(asset, buyer_rate, age).amount
    seller = intrinsic_value(asset, seller_rate, age).amount
    return buyer - seller
