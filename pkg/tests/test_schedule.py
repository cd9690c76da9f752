import pytest

from assetval import (
    AssetSpec,
    DiscountRate,
    InvalidInput,
    Method,
    MissingRate,
    NonIntegerPeriod,
    build_schedule,
    chord_gap,
    compare_methods,
    rate_sweep,
    straight_line_book_value,
    trade_surplus,
)

ASSET = AssetSpec(cost=100, lifetime=10)
R20 = DiscountRate(0.2)
ALL_METHODS = [Method.INTRINSIC, Method.STRAIGHT_LINE, Method.DOUBLE_DECLINING, Method.SUM_OF_YEARS]


class TestBuildSchedule:
    def test_intrinsic_first_row(self):
        sched = build_schedule(ASSET, Method.INTRINSIC, R20)
        assert sched.rows[0].expense == pytest.approx(-3.852275688285914, rel=1e-12)
        assert sched.rows[0].book_value == pytest.approx(96.14772431171409, rel=1e-12)

    def test_intrinsic_final_book_is_zero(self):
        sched = build_schedule(ASSET, Method.INTRINSIC, R20)
        assert abs(sched.rows[-1].book_value) < 1e-9

    def test_straight_line_constant_expense(self):
        sched = build_schedule(ASSET, Method.STRAIGHT_LINE)
        assert all(r.expense == pytest.approx(-10, rel=1e-12) for r in sched.rows)

    def test_missing_rate(self):
        with pytest.raises(MissingRate):
            build_schedule(ASSET, Method.INTRINSIC)

    def test_fractional_lifetime_rejected(self):
        with pytest.raises(NonIntegerPeriod):
            build_schedule(AssetSpec(cost=100, lifetime=2.5), Method.STRAIGHT_LINE)

    def test_zero_rate_degenerates_to_straight_line(self):
        sched = build_schedule(ASSET, Method.INTRINSIC, DiscountRate(0))
        for row in sched.rows:
            assert row.expense == pytest.approx(-10, rel=1e-12)

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_recurrence(self, method):
        rate = R20 if method is Method.INTRINSIC else None
        sched = build_schedule(ASSET, method, rate)
        book = ASSET.cost
        for row in sched.rows:
            book += row.expense
            assert row.book_value == pytest.approx(book, rel=1e-9, abs=1e-9 * ASSET.cost)

    def test_expense_shape_by_method(self):
        intrinsic = [r.expense for r in build_schedule(ASSET, Method.INTRINSIC, R20).rows]
        syd = [r.expense for r in build_schedule(ASSET, Method.SUM_OF_YEARS).rows]
        ddb = [r.expense for r in build_schedule(ASSET, Method.DOUBLE_DECLINING).rows]
        # intrinsic expense magnitude grows, accelerated methods shrink
        assert all(abs(b) > abs(a) for a, b in zip(intrinsic, intrinsic[1:]))
        assert all(abs(b) < abs(a) for a, b in zip(syd, syd[1:]))
        assert all(abs(b) < abs(a) for a, b in zip(ddb, ddb[1:]))

    def test_total_write_off(self):
        for method in (Method.INTRINSIC, Method.STRAIGHT_LINE, Method.SUM_OF_YEARS):
            rate = R20 if method is Method.INTRINSIC else None
            total = sum(r.expense for r in build_schedule(ASSET, method, rate).rows)
            assert total == pytest.approx(-100, rel=1e-9)
        ddb_total = sum(r.expense for r in build_schedule(ASSET, Method.DOUBLE_DECLINING).rows)
        assert ddb_total == pytest.approx(-100 * (1 - 0.8**10), rel=1e-12)


class TestCompareMethods:
    def test_aligned_report(self):
        report = compare_methods(ASSET, ALL_METHODS, R20)
        assert len(report.schedules) == 4
        assert all(len(s.rows) == 10 for s in report.schedules)
        intrinsic, sl = report.schedules[0], report.schedules[1]
        assert intrinsic.rows[4].book_value == pytest.approx(71.33290523805154, rel=1e-10)
        assert sl.rows[4].book_value == pytest.approx(50, rel=1e-12)

    def test_singleton(self):
        report = compare_methods(ASSET, [Method.STRAIGHT_LINE], R20)
        direct = build_schedule(ASSET, Method.STRAIGHT_LINE)
        assert report.schedules[0].rows == direct.rows

    def test_ddb_footnote_residual(self):
        report = compare_methods(ASSET, [Method.DOUBLE_DECLINING], R20)
        assert report.schedules[0].rows[-1].book_value == pytest.approx(10.7374, abs=1e-4)

    def test_empty_methods_rejected(self):
        with pytest.raises(InvalidInput):
            compare_methods(ASSET, [], R20)


class TestRateSweep:
    def test_values_and_ordering(self):
        report = rate_sweep(ASSET, [DiscountRate(0.05), DiscountRate(0.2)])
        assert report.values[1][5] == pytest.approx(71.33290523805154, rel=1e-10)
        assert report.values[0][5] == pytest.approx(56.068703605290466, rel=1e-10)
        assert report.values[1][5] > report.values[0][5]

    def test_boundary_columns(self):
        report = rate_sweep(ASSET, [DiscountRate(0.2)])
        assert report.values[0][0] == pytest.approx(100, rel=1e-12)
        assert report.values[0][10] == pytest.approx(0, abs=1e-10)

    def test_tiny_rate_is_straight_line(self):
        report = rate_sweep(ASSET, [DiscountRate(1e-9)])
        for age in range(11):
            assert report.values[0][age] == pytest.approx(
                straight_line_book_value(ASSET, age), rel=1e-6, abs=1e-6
            )

    def test_monotone_across_rates_at_interior_ages(self):
        rates = [DiscountRate(r) for r in (0.01, 0.05, 0.1, 0.2, 0.5)]
        report = rate_sweep(ASSET, rates)
        for age in range(1, 10):
            column = [report.values[i][age] for i in range(len(rates))]
            assert all(b > a for a, b in zip(column, column[1:]))

    def test_empty_rates_rejected(self):
        with pytest.raises(InvalidInput):
            rate_sweep(ASSET, [])


class TestChordGap:
    def test_near_zero_rate_gap_vanishes(self):
        assert chord_gap(ASSET, DiscountRate(1e-9)) == pytest.approx(0, abs=1e-4)

    def test_paper_rate_gap(self):
        # brute force over integer ages puts the max at age 6
        gap = chord_gap(ASSET, R20)
        assert gap == pytest.approx(21.747210597375947, rel=1e-10)

    def test_monotone_in_rate(self):
        gaps = [chord_gap(ASSET, DiscountRate(r)) for r in (0.01, 0.05, 0.1, 0.2, 0.5)]
        assert all(g >= 0 for g in gaps)
        assert all(b > a for a, b in zip(gaps, gaps[1:]))


class TestTradeSurplus:
    def test_midlife_gap(self):
        surplus = trade_surplus(ASSET, 5, DiscountRate(0.05), DiscountRate(0.2))
        assert surplus == pytest.approx(15.264201632761086, rel=1e-10)

    def test_new_asset_no_surplus(self):
        assert trade_surplus(ASSET, 0, DiscountRate(0.05), DiscountRate(0.2)) == pytest.approx(
            0, abs=1e-12
        )

    def test_equal_rates_no_surplus(self):
        assert trade_surplus(ASSET, 5, R20, R20) == 0

    def test_non_negative_when_buyer_rate_higher(self):
        for age in (0, 1, 3.7, 5, 9, 10):
            for low, high in ((0.01, 0.05), (0.05, 0.5), (0.2, 0.2)):
                s = trade_surplus(ASSET, age, DiscountRate(low), DiscountRate(high))
                assert s >= -1e-12
