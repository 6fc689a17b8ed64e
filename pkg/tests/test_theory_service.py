import math
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from hdran.core.exceptions import DomainException, UnsupportedEvaluationException
from tests.oracles import (
    enumerate_histories,
    expectation,
    expected_newcomer_histogram,
    label_degree_distribution,
    total_depth,
)

getcontext().prec = 50
PI = Decimal("3.14159265358979323846264338327950288")
PI_SQUARED = PI * PI

# clustering limits as a·π² - b
CLUSTERING_TABLE = {
    3: (Decimal(12), Decimal(353) / Decimal(3)),
    4: (Decimal(120), Decimal(2367) / Decimal(2)),
    5: (Decimal(2800) / Decimal(3), Decimal(138161) / Decimal(15)),
    6: (Decimal(6300), Decimal(746131) / Decimal(12)),
    7: (Decimal(38808), Decimal(134056533) / Decimal(350)),
    8: (Decimal(224224), Decimal(663900367) / Decimal(300)),
    9: (Decimal(1235520), Decimal(26887974331) / Decimal(2205)),
    10: (Decimal(6563700), Decimal(253941996039) / Decimal(3920)),
}


# degree profile

def test_first_limit_fractions(theory_service):
    assert theory_service.limit_fraction(3, 3) == Fraction(2, 5)
    assert theory_service.limit_fraction(4, 3) == Fraction(1, 5)
    assert theory_service.limit_fraction(5, 5) == Fraction(4, 9)


@pytest.mark.parametrize("k", [3, 4, 6, 9])
def test_product_and_gamma_forms_agree(theory_service, k):
    for j in range(k, k + 40):
        assert theory_service.limit_fraction(j, k) == theory_service.limit_fraction_gamma(j, k)


@pytest.mark.parametrize("k,n", [(3, 0), (3, 25), (5, 10), (8, 3)])
def test_partial_sum_closed_form(theory_service, k, n):
    direct = sum((theory_service.limit_fraction(j, k) for j in range(k, k + n + 1)), Fraction(0))
    assert theory_service.partial_sum_fractions(n, k) == direct


def test_limit_fractions_sum_to_one(theory_service):
    assert float(1 - theory_service.partial_sum_fractions(10**6, 3)) < 1e-10
    assert theory_service.limit_fractions(4, 50).tolist() == pytest.approx(
        [float(theory_service.limit_fraction(j, 4)) for j in range(4, 54)], rel=1e-12
    )


def test_power_law_regime(theory_service):
    j = 2000
    ratio = theory_service.degree_fraction_asymptote(j, 3) / float(theory_service.limit_fraction(j, 3))
    assert ratio == pytest.approx(1.0, rel=2e-3)


@pytest.mark.parametrize("k,n", [(3, 5), (4, 4)])
def test_newcomer_recurrence_matches_enumeration(theory_service, k, n):
    exact = expected_newcomer_histogram(enumerate_histories(k, n))

    for j in range(k, k + n):
        expected = float(exact.get(j, Fraction(0)))
        assert theory_service.expected_newcomer_degree_count(n, j, k) == pytest.approx(expected, rel=1e-12, abs=1e-14)


def test_printed_recurrence_is_the_newcomer_view_for_triangles(theory_service):
    for j in range(3, 30):
        assert theory_service.expected_degree_count(200, j, 3) == pytest.approx(
            theory_service.expected_newcomer_degree_count(200, j, 3), rel=1e-12
        )
    assert theory_service.expected_degree_count(1, 3, 3) == 1.0


def test_expected_counts_approach_limit(theory_service):
    n = 20000
    counts = theory_service.expected_degree_counts(n, 3, 10)
    for j, count in counts.items():
        assert count / n == pytest.approx(float(theory_service.limit_fraction(j, 3)), abs=1e-3)


def test_degree_range_checked(theory_service):
    with pytest.raises(DomainException):
        theory_service.expected_degree_count(5, 8, 3)


# labeled vertex

def test_label_pmf_small_cases(theory_service):
    assert theory_service.label_degree_pmf(3, 1, 3) == {0: 0, 1: Fraction(1, 5), 2: Fraction(4, 5)}
    assert theory_service.label_degree_pmf(3, 2, 3) == {0: Fraction(2, 5), 1: Fraction(3, 5)}
    assert theory_service.label_degree_pmf(2, 1, 3) == {0: 0, 1: 1}


@pytest.mark.parametrize("k", [3, 4, 5, 7])
def test_label_pmf_matches_urn(theory_service, k):
    n = 12
    for j in range(1, n + 1):
        assert theory_service.label_degree_pmf(n, j, k) == theory_service.label_degree_pmf_urn(n, j, k)


def test_label_pmf_matches_enumeration(theory_service):
    histories = enumerate_histories(4, 4)
    for j in range(1, 5):
        observed = label_degree_distribution(histories, j)
        pmf = theory_service.label_degree_pmf(4, j, 4)
        assert {delta: mass for delta, mass in pmf.items() if mass} == observed


def test_label_pmf_refuses_long_spans(theory_service):
    with pytest.raises(UnsupportedEvaluationException):
        theory_service.label_degree_pmf(200, 1, 3)


@pytest.mark.parametrize("k,n,j", [(3, 10, 1), (4, 12, 3), (6, 9, 5)])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_label_moments_match_pmf(theory_service, k, n, j, s):
    pmf = theory_service.label_degree_pmf_urn(n, j, k)
    direct = sum(mass * (k + delta) ** s for delta, mass in pmf.items())
    assert theory_service.label_degree_moment(n, j, k, s) == pytest.approx(float(direct), rel=1e-12)


def test_label_moment_float_branch_is_continuous(theory_service):
    exact = theory_service.label_degree_moment(1001, 1, 4, 2)
    approximate = theory_service.label_degree_moment(1002, 1, 4, 2)
    assert approximate == pytest.approx(exact, rel=1e-2)


def test_label_mean_regimes(theory_service):
    early = theory_service.label_degree_asymptotic_mean(10**6, 5, 4)
    late = theory_service.label_degree_asymptotic_mean(1000, 900, 4)

    assert early.regime == "fixed_label"
    assert late.regime == "linear_label"
    assert late.value == pytest.approx(2 * (1 + 0.9 ** (-2 / 3)))


def test_scaled_moment_limit(theory_service):
    value = theory_service.asymptotic_label_degree_moment(3, 4, 1)
    expected = math.exp(math.lgamma(3 + 1 / 3) + math.lgamma(3) - math.lgamma(3 + 2 / 3 + 1 / 3) - math.lgamma(2))
    assert value == pytest.approx(expected, rel=1e-12)


# clustering

@pytest.mark.parametrize("k", sorted(CLUSTERING_TABLE))
def test_clustering_limit_table(theory_service, k):
    scale, offset = CLUSTERING_TABLE[k]
    target = float(scale * PI_SQUARED - offset)
    assert theory_service.clustering_limit(k) == pytest.approx(target, abs=1e-9)


def test_clustering_limit_for_triangles(theory_service):
    assert theory_service.clustering_limit(3) == pytest.approx(0.768586, abs=1e-6)


@pytest.mark.parametrize("k", [3, 5])
def test_series_and_closed_form_agree(theory_service, k):
    assert theory_service.clustering_series(k) == pytest.approx(theory_service.clustering_limit(k), abs=1e-8)


def test_newcomer_clustering_at_birth(theory_service):
    for k in range(3, 9):
        assert theory_service.local_clustering(k, k) == 1.0


@pytest.mark.parametrize("k,n", [(3, 1), (3, 2), (3, 3), (3, 5), (4, 2), (4, 4)])
def test_expected_average_clustering_matches_enumeration(theory_service, metrics_service, k, n):
    histories = enumerate_histories(k, n)
    exact = sum(float(probability) * metrics_service.clustering_profile(net).average for probability, net in histories)

    assert theory_service.expected_average_clustering(n, k) == pytest.approx(exact, rel=1e-12)


def test_expected_average_clustering_first_step_is_a_clique(theory_service):
    for k in range(3, 8):
        assert theory_service.expected_average_clustering(1, k) == pytest.approx(1.0, rel=1e-15)


def test_expected_average_clustering_approaches_the_limit(theory_service):
    limit = theory_service.clustering_limit(3)
    small = theory_service.expected_average_clustering(50, 3)
    large = theory_service.expected_average_clustering(20_000, 3)

    assert abs(large - limit) < 2e-3
    assert abs(small - limit) > abs(large - limit)


def test_expected_average_clustering_refuses_large_n(theory_service):
    with pytest.raises(UnsupportedEvaluationException):
        theory_service.expected_average_clustering(20_001, 3)


# Lorenz and Gini

def test_gini_small_cases(theory_service):
    assert theory_service.theoretical_gini(1, 3) == pytest.approx(0.5, abs=1e-15)
    assert theory_service.theoretical_gini(2, 3) == pytest.approx(10 / 21, abs=1e-15)


@pytest.mark.parametrize("k,n", [(3, 1), (3, 50), (4, 7), (6, 300), (10, 20)])
def test_gini_closed_form_equals_trapezoid(theory_service, k, n):
    assert theory_service.theoretical_gini(n, k) == pytest.approx(theory_service.gini_trapezoid(n, k), abs=1e-12)


def test_gini_tends_to_one(theory_service):
    assert theory_service.theoretical_gini(10**5, 3) > 0.999
    assert theory_service.gini_printed_closed_form(10**5, 3) > 0.99


def test_lorenz_curve_shape(theory_service):
    points = theory_service.theoretical_lorenz(6, 4, exact=True)

    assert len(points) == 8
    assert points[0] == (0, 0)
    assert points[-1] == (1, theory_service.partial_sum_fractions(6, 4))
    assert all(later[1] >= earlier[1] for earlier, later in zip(points, points[1:]))


# clique depth

def test_expected_total_depth_small_values(theory_service):
    assert theory_service.expected_total_depth_exact(1, 3) == 3
    assert theory_service.expected_total_depth_exact(2, 3) == 8
    assert theory_service.expected_total_depth_exact(3, 3) == Fraction(71, 5)
    assert theory_service.expected_total_depth(3, 3) == pytest.approx(14.2)


def test_total_depth_second_moment_small_values(theory_service):
    assert theory_service.total_depth_second_moment_exact(1, 3) == 9
    assert theory_service.total_depth_second_moment_exact(2, 3) == 64
    assert theory_service.total_depth_second_moment_exact(3, 3) == Fraction(1013, 5)
    assert theory_service.total_depth_second_moment(2, 3) == pytest.approx(64.0)
    assert theory_service.total_depth_second_moment(3, 3) == pytest.approx(202.6)


@pytest.mark.parametrize("k,n", [(3, 5), (4, 4)])
def test_depth_moments_match_enumeration(theory_service, k, n):
    histories = enumerate_histories(k, n)

    assert theory_service.expected_total_depth_exact(n, k) == expectation(histories, total_depth)
    assert theory_service.total_depth_second_moment_exact(n, k) == expectation(histories, lambda net: total_depth(net) ** 2)
    squared = expectation(histories, lambda net: int((net.active_depths() ** 2).sum()))
    assert theory_service.expected_squared_depth_sum(n, k) == pytest.approx(float(squared), rel=1e-14)


@pytest.mark.parametrize("k,n", [(3, 1000), (5, 20000)])
def test_digamma_form_of_mean_depth(theory_service, k, n):
    assert theory_service.expected_total_depth_digamma(n, k) == pytest.approx(theory_service.expected_total_depth(n, k), rel=1e-11)


def test_second_moment_float_and_exact_branches_agree(theory_service):
    exact = float(theory_service.total_depth_second_moment_exact(300, 4))
    assert theory_service._depth_recurrence(300, 4, exact=False)[2] == pytest.approx(exact, rel=1e-12)


def test_depth_moments_report(theory_service):
    moments = theory_service.total_depth_moments(500, 3)

    assert moments.mean == pytest.approx(moments.mean_digamma, rel=1e-11)
    assert moments.second_moment > moments.mean**2
    assert moments.leading_order == pytest.approx(3 * 500 * math.log(500))
    assert math.isfinite(moments.printed_second_moment_leading)


def test_printed_leading_term_is_empty_at_first_step(theory_service):
    assert theory_service.printed_second_moment_leading(1, 3) == 0.0
    assert theory_service.printed_second_moment_leading(200, 4) == pytest.approx(theory_service.total_depth_moments(200, 4).printed_second_moment_leading)


# diameter

def test_diameter_constants_for_triangles(theory_service):
    constants = theory_service.diameter_constants(3)

    assert constants.eta_star > 1
    assert constants.eta_residual < 1e-12
    assert constants.a_residual < 1e-10
    assert constants.a == pytest.approx(2.0684, rel=1e-3)
    assert constants.c == pytest.approx(1.6685, rel=1e-3)
    assert constants.c == pytest.approx(2 * constants.height_constant)
    assert constants.upper_bound_constant == pytest.approx(constants.eta_star)


def test_height_constant_large_index_limit(theory_service):
    constants = theory_service.diameter_constants(200)
    assert constants.height_constant * 200 * math.log(2) == pytest.approx(1.0, abs=0.05)


def test_diameter_growth_terms(theory_service):
    constants = theory_service.diameter_constants(4)
    assert theory_service.diameter_asymptote(1000, 4) == pytest.approx(constants.c * math.log(1000))
    assert theory_service.diameter_upper_bound(1000, 4) == pytest.approx(2 * constants.eta_star / 3 * math.log(1000))


# sparsity and report

def test_link_density(theory_service):
    assert theory_service.link_density(1, 3) == 1.0
    assert theory_service.link_density(10**4, 3) == pytest.approx(2 * (3 + 3 * 10**4) / (10003 * 10002))


def test_theory_report(theory_service):
    report = theory_service.theory_report(3, 100)

    assert report.clustering_limit == pytest.approx(0.768586, abs=1e-6)
    assert report.clustering_expected == pytest.approx(theory_service.expected_average_clustering(100, 3))
    assert report.b_fractions[3] == pytest.approx(0.4)
    assert report.b_exact[3] == "2/5"
    assert min(report.b_fractions) == 3
    assert report.expected_counts[3] == pytest.approx(report.newcomer_expected_counts[3])
    assert report.gini_closed_form == pytest.approx(report.gini_trapezoid, abs=1e-12)
    assert len(report.lorenz_points) == 102
    assert report.depth_mean == pytest.approx(theory_service.expected_total_depth(100, 3))


@pytest.mark.parametrize("k", [0, 2])
def test_index_checked(theory_service, k):
    with pytest.raises(DomainException):
        theory_service.clustering_limit(k)
