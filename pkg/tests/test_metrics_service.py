import networkx as nx
import numpy as np
import pytest

from hdran.core.exceptions import DomainException, ResourceBudgetException
from hdran.models.network import Network
from hdran.repositories.network_repository import NetworkRepository
from hdran.services.metrics_service import MetricsService
from hdran.utils.seeding import make_generator


def to_networkx(net):
    graph = nx.Graph()
    graph.add_nodes_from(range(net.vertex_count))
    graph.add_edges_from(net.edges())
    return graph


@pytest.fixture
def fig3_network(fixtures_dir):
    return NetworkRepository().load_network(fixtures_dir / "fig3_k5_n2.json")


def test_degree_histogram_views(generator_service, metrics_service):
    net = generator_service.generate(4, 300, 8)
    histogram = metrics_service.degree_histogram(net)

    assert sum(histogram.counts_all.values()) == 304
    assert sum(histogram.counts_newcomers.values()) == 300
    assert min(histogram.counts_newcomers) == 4
    assert sum(histogram.newcomer_fractions().values()) == pytest.approx(1.0)


def test_newcomer_fractions_at_time_zero(generator_service, metrics_service):
    histogram = metrics_service.degree_histogram(generator_service.init_network(3))
    assert histogram.newcomer_fractions() == {2: 1.0}


def test_label_degree(generator_service, metrics_service):
    net = generator_service.generate(3, 50, 1)

    assert metrics_service.label_degree(net, 50) == 3
    assert metrics_service.label_degree(net, 1) == len(net.adjacency[3])
    with pytest.raises(DomainException):
        metrics_service.label_degree(net, 0)


def test_label_degree_mean_matches_exact_moment(generator_service, metrics_service, theory_service):
    samples = np.array([metrics_service.label_degree(generator_service.generate(3, 200, seed), 10) for seed in range(400)], dtype=float)
    standard_error = samples.std(ddof=1) / np.sqrt(samples.size)

    assert abs(samples.mean() - theory_service.label_degree_moment(200, 10, 3, 1)) < 4 * standard_error


@pytest.mark.parametrize("k,n", [(3, 0), (3, 250), (6, 80)])
def test_degree_sum_is_twice_the_edge_count(generator_service, metrics_service, k, n):
    net = generator_service.generate(k, n, 2)
    histogram = metrics_service.degree_histogram(net)

    assert sum(j * count for j, count in histogram.counts_all.items()) == 2 * net.edge_count == k * (k - 1) + 2 * n * k


@pytest.mark.parametrize("k,n", [(3, 400), (5, 200)])
def test_clustering_matches_networkx(generator_service, metrics_service, k, n):
    net = generator_service.generate(k, n, 17)
    profile = metrics_service.clustering_profile(net)
    reference = nx.clustering(to_networkx(net))

    assert profile.closed_form_verified
    assert profile.average == pytest.approx(np.mean(list(reference.values())), rel=1e-12)
    for degree, value in profile.per_degree.items():
        assert value == pytest.approx(profile.closed_form[degree], rel=1e-12)
    assert sum(profile.vertices_per_degree.values()) == n


def test_clustering_requires_a_step(generator_service, metrics_service):
    with pytest.raises(DomainException):
        metrics_service.clustering_profile(generator_service.init_network(3))


@pytest.mark.parametrize("k,n", [(3, 300), (4, 150), (6, 80)])
def test_exact_distances_match_networkx(generator_service, metrics_service, k, n):
    net = generator_service.generate(k, n, 5)
    graph = to_networkx(net)
    report = metrics_service.distance_metrics(net)

    assert report.exact
    assert report.wiener == round(nx.wiener_index(graph))
    assert report.diameter == nx.diameter(graph)


def test_distances_ignore_vertex_labels(generator_service, metrics_service):
    net = generator_service.generate(3, 120, 6)
    order = make_generator(99).permutation(net.vertex_count)
    relabelled = Network(net.index_k)
    relabelled.adjacency = [[] for _ in range(net.vertex_count)]
    for vertex, neighbors in enumerate(net.adjacency):
        relabelled.adjacency[order[vertex]] = sorted(int(order[u]) for u in neighbors)

    original = metrics_service.distance_metrics(net)
    shuffled = metrics_service.distance_metrics(relabelled)

    assert relabelled.adjacency != net.adjacency
    assert (shuffled.wiener, shuffled.diameter) == (original.wiener, original.diameter)


def test_small_bfs_chunks_give_the_same_result(generator_service, metrics_service, monkeypatch):
    net = generator_service.generate(3, 200, 2)
    expected = metrics_service.distance_metrics(net)
    monkeypatch.setattr("hdran.services.metrics_service.settings.bfs_chunk_bytes", 8 * net.vertex_count * 7)

    assert metrics_service.distance_metrics(net) == expected


def test_fig3_network_distances(fig3_network, metrics_service):
    report = metrics_service.distance_metrics(fig3_network)

    assert report.diameter == 2
    assert report.wiener == 22


def test_sampled_distances(generator_service, metrics_service):
    net = generator_service.generate(3, 500, 3)
    exact = metrics_service.distance_metrics(net)
    everything = metrics_service.distance_metrics(net, mode="sampled", sources=10_000, seed=1)
    sampled = metrics_service.distance_metrics(net, mode="sampled", sources=50, seed=1)

    assert everything.wiener == exact.wiener
    assert not sampled.exact
    assert sampled.source_count == 50
    assert sampled.diameter <= exact.diameter
    assert sampled.wiener == pytest.approx(exact.wiener, rel=0.25)


def test_exact_distances_respect_vertex_budget(fig3_network):
    with pytest.raises(ResourceBudgetException):
        MetricsService(vertex_budget=6).distance_metrics(fig3_network)


def test_unknown_distance_mode(fig3_network, metrics_service):
    with pytest.raises(DomainException):
        metrics_service.distance_metrics(fig3_network, mode="approximate")


def test_vertex_lorenz_gini(metrics_service):
    assert metrics_service.empirical_lorenz_gini([2, 2, 2, 2]).gini == pytest.approx(0.0, abs=1e-15)
    assert metrics_service.empirical_lorenz_gini([0, 0, 0, 4]).gini == pytest.approx(0.75)
    curve = metrics_service.empirical_lorenz_gini([5, 1, 3])
    assert curve.points[0] == (0.0, 0.0)
    assert curve.points[-1] == pytest.approx((1.0, 1.0))
    assert curve.points[1][1] == pytest.approx(1 / 9)


def test_lorenz_is_scale_invariant(generator_service, metrics_service):
    degrees = generator_service.generate(4, 150, 3).degrees()
    base = metrics_service.empirical_lorenz_gini(degrees)
    scaled = metrics_service.empirical_lorenz_gini(7 * degrees)

    assert scaled.gini == pytest.approx(base.gini, abs=1e-12)
    assert np.allclose(scaled.points, base.points, atol=1e-12)


def test_lorenz_rejects_empty_sequence(metrics_service):
    with pytest.raises(DomainException):
        metrics_service.vertex_gini([])


def test_class_lorenz_gini(generator_service, metrics_service):
    histogram = metrics_service.degree_histogram(generator_service.generate(3, 1, 0))
    assert metrics_service.class_lorenz_gini(histogram) == pytest.approx(0.5)


def test_vertex_gini_is_moderate_for_large_networks(generator_service, metrics_service):
    net = generator_service.generate(3, 20000, 11)
    gini = metrics_service.vertex_gini(net.degrees())
    class_gini = metrics_service.class_lorenz_gini(metrics_service.degree_histogram(net))

    assert 0.3 < gini < 0.45
    assert class_gini > 0.9


def test_link_density_matches_theory(generator_service, metrics_service, theory_service):
    net = generator_service.generate(4, 120, 0)
    assert metrics_service.link_density(net) == pytest.approx(theory_service.link_density(120, 4))
