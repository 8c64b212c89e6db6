import math

import pytest

from abacus_partitions.asymptotics.bounds import (
    BoundReport,
    PowerBoundCheck,
    check_combinatorial_lower,
    check_erdos_upper,
    check_maroti_lower,
    check_pairs_crude_upper,
    check_power_of_four,
    merge_reports,
    run_all_bounds,
)
from abacus_partitions.asymptotics.constants import AsymptoticConstants, precision_context
from abacus_partitions.asymptotics.estimates import hr_estimate, p32_estimate, t_estimate
from abacus_partitions.asymptotics.lemmas import (
    EpsilonBound,
    certify_epsilon_bound,
    fit_epsilon_constant,
    gaussian_sum_check,
)
from abacus_partitions.asymptotics.ratios import RatioKind, infer_b, ratio_table
from abacus_partitions.config import load_settings, use_settings
from abacus_partitions.enumeration import p_table, s_table, t_table
from abacus_partitions.errors import DomainError, IndexOutOfRange, NoConvergence

B = 4 * math.sqrt(3)


def test_constants():
    constants = AsymptoticConstants.evaluate(40)
    assert constants.c == pytest.approx(math.pi * math.sqrt(2 / 3), rel=1e-12)
    assert constants.b == pytest.approx(B, rel=1e-12)
    assert constants.c_digits.startswith("2.565099660")


def test_estimates_reject_small_n():
    with pytest.raises(DomainError):
        hr_estimate(0)
    with pytest.raises(DomainError):
        t_estimate(-3)


def test_p32_estimate_agrees_with_the_main_formula(p5000):
    ctx = precision_context()
    assert float(p32_estimate(100, ctx=ctx)) == pytest.approx(float(hr_estimate(3200, ctx)), rel=1e-12)
    assert float(p5000[3200] / p32_estimate(100)) == pytest.approx(1, abs=0.02)
    assert float(p32_estimate(100, b=2 * B)) == pytest.approx(float(p32_estimate(100)) / 4, rel=1e-12)


@pytest.mark.parametrize("check", [
    check_erdos_upper,
    check_maroti_lower,
    check_combinatorial_lower,
    check_power_of_four,
])
def test_bounds_hold_up_to_5000(p5000, check):
    report = check(p5000, 5000)
    assert report.holds, report.summary()
    assert report.first_violation is None
    assert report.min_slack >= 0


def test_bound_results_do_not_depend_on_worker_count(p5000):
    single = check_erdos_upper(p5000, 1000, workers=1)
    many = check_erdos_upper(p5000, 1000, workers=7)
    assert single == many
    assert single.checked == 1000


def test_power_of_four_indices(p5000):
    assert check_power_of_four(p5000, 5000).checked == 6


def test_violations_report_the_smallest_n():
    report = PowerBoundCheck(p_table(100), 0.5, 0.75).run(100, workers=3)
    assert not report.holds
    assert report.first_violation == 4
    assert "VIOLATED first at n=4" in report.summary()


def test_merge_reports():
    merged = merge_reports("both", [
        BoundReport(bound_name="a", n_lo=1, n_hi=10, holds=True, checked=10, min_slack=1.0, max_slack=2.0),
        BoundReport(bound_name="b", n_lo=11, n_hi=20, holds=False, first_violation=15,
                    checked=10, min_slack=-1.0, max_slack=3.0),
    ])
    assert (merged.n_lo, merged.n_hi, merged.checked) == (1, 20, 20)
    assert not merged.holds
    assert merged.first_violation == 15
    assert (merged.min_slack, merged.max_slack) == (-1.0, 3.0)


def test_bounds_need_a_long_enough_table():
    with pytest.raises(IndexOutOfRange):
        check_erdos_upper(p_table(10), 20)


def test_run_all_bounds(p5000):
    reports = run_all_bounds(p5000, 500)
    assert [r.bound_name for r in reports] == [
        "erdos-upper", "maroti-lower", "combinatorial-lower", "power-of-four",
    ]
    assert all(r.holds for r in reports)


def test_pairs_crude_upper():
    assert check_pairs_crude_upper(t_table(1000), 1000).holds


def test_p_ratio_approaches_one_from_below(p5000):
    rows = ratio_table(RatioKind.P, [100, 500, 1000, 2000, 5000], p5000)
    ratios = [row.ratio for row in rows]
    assert ratios[0] == pytest.approx(0.956, abs=0.005)
    assert ratios[2] == pytest.approx(0.986, abs=0.003)
    assert all(r < 1 for r in ratios)
    assert ratios == sorted(ratios)
    assert abs(ratios[-1] - 1) < 0.02
    assert rows[0].exact == "190569292"


@pytest.mark.parametrize("kind", [RatioKind.T, RatioKind.S, RatioKind.Q])
def test_pairs_and_subfamily_ratios(p5000, kind):
    first, last = ratio_table(kind, [100, 5000], p5000)
    assert abs(last.ratio - 1) < 0.05
    assert abs(last.ratio - 1) < abs(first.ratio - 1)


@pytest.mark.parametrize("kind", [RatioKind.SP, RatioKind.QP])
def test_proportion_ratios(p5000, kind):
    (row,) = ratio_table(kind, [4000], p5000)
    assert abs(row.ratio - 1) < 0.05
    assert float(row.exact) < 1


def test_ratio_rows_format(p5000):
    (row,) = ratio_table(RatioKind.P, [10], p5000)
    n, exact, estimate, ratio = row.csv_row()
    assert (n, exact) == ("10", "42")
    assert "e" in estimate
    assert float(estimate) == pytest.approx(48.1, rel=0.01)
    assert float(ratio) == pytest.approx(42 / float(estimate), rel=1e-6)


def test_ratio_table_checks_sample_points(p5000):
    with pytest.raises(IndexOutOfRange):
        ratio_table(RatioKind.P, [])
    with pytest.raises(IndexOutOfRange):
        ratio_table(RatioKind.P, [0, 10])
    with pytest.raises(IndexOutOfRange):
        ratio_table(RatioKind.P, [20], p_table(10))
    use_settings(load_settings(max_n=100))
    with pytest.raises(IndexOutOfRange):
        ratio_table(RatioKind.P, [200], p5000)


def test_infer_b_approaches_four_root_three(p5000):
    rows = infer_b([100, 1000, 5000], p5000)
    errors = [abs(row.b - B) for row in rows]
    assert errors == sorted(errors, reverse=True)
    assert all(row.b > B for row in rows)
    assert rows[-1].b == pytest.approx(B, rel=0.01)


def test_self_conjugate_count_is_near_the_square_root_of_p(p5000):
    points = [100, 500, 1000, 2000, 5000]
    s = s_table(5000, p5000)
    gaps = [abs(math.log(s[n]) - 0.5 * math.log(p5000[n])) / math.log(p5000[n]) for n in points]
    assert gaps == sorted(gaps, reverse=True)
    assert gaps[-1] < 0.02


def test_fit_epsilon_constant(p5000):
    bound = fit_epsilon_constant(0.25, 2000, p5000)
    assert isinstance(bound, EpsilonBound)
    assert bound.beta == pytest.approx(0.75)
    assert 1 < bound.A < 10
    assert bound.certified
    assert certify_epsilon_bound(bound, p5000, 5000).holds

    smaller = fit_epsilon_constant(0.25, 200, p5000)
    assert smaller.A == pytest.approx(bound.A, rel=1e-5)


def test_fit_epsilon_constant_shrinks_with_epsilon(p5000):
    loose = fit_epsilon_constant(0.4, 500, p5000)
    tight = fit_epsilon_constant(0.1, 500, p5000)
    assert loose.A < tight.A
    assert loose.certified and tight.certified


def test_fit_epsilon_constant_rejects_bad_input():
    with pytest.raises(DomainError):
        fit_epsilon_constant(0.6, 100)
    with pytest.raises(DomainError):
        fit_epsilon_constant(0.0, 100)
    with pytest.raises(NoConvergence):
        fit_epsilon_constant(0.25, 100, bracket=(1.0, 1.5))


@pytest.mark.parametrize("beta, theta", [(0.25, 0.25), (0.75, 0.25), (0.5, 0.1)])
def test_gaussian_sum(beta, theta):
    result = gaussian_sum_check(alpha=1.0, beta=beta, gamma=2.0, theta=theta, m=10 ** 6)
    assert result.corrected_ratio == pytest.approx(1, abs=0.01)
    assert result.sandwich_holds
    assert result.terms == math.floor(1.0 * (10 ** 6) ** (beta + theta)) + 1


def test_gaussian_sum_raw_ratio_for_the_wide_case():
    result = gaussian_sum_check(alpha=1.0, beta=0.75, gamma=2.0, theta=0.25, m=10 ** 6)
    assert result.ratio == pytest.approx(1, abs=0.01)


def test_gaussian_sum_rejects_bad_parameters():
    with pytest.raises(DomainError):
        gaussian_sum_check(alpha=1.0, beta=0.0, gamma=1.0, theta=0.25, m=100)
    with pytest.raises(DomainError):
        gaussian_sum_check(alpha=1.0, beta=0.5, gamma=1.0, theta=0.25, m=0)


C = math.pi * math.sqrt(2 / 3)


@pytest.mark.parametrize("beta, theta, gamma", [(0.75, 0.25, C / 4), (0.25, 0.25, C / math.sqrt(2))])
def test_gaussian_sum_improves_with_m(beta, theta, gamma):
    results = [gaussian_sum_check(1.0, beta, gamma, theta, 10 ** k) for k in (3, 4, 5, 6)]
    errors = [abs(r.ratio - 1) for r in results]
    assert errors == sorted(errors, reverse=True)
    assert all(r.ratio >= 1 for r in results)
    assert results[-1].corrected_ratio == pytest.approx(1, abs=0.01)
