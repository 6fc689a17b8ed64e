import pytest

from hdran.core.exceptions import NetworkFileException, ValidationException
from hdran.repositories.network_repository import NetworkRepository
from hdran.services.generator_service import GeneratorService


@pytest.fixture
def repository():
    return NetworkRepository()


@pytest.fixture
def fig3_text(fixtures_dir):
    return (fixtures_dir / "fig3_k5_n2.json").read_text(encoding="utf-8")


def test_save_and_load_preserve_structure(repository, generator_service, tmp_path):
    net = generator_service.generate(4, 250, 31)
    path = tmp_path / "net.json"

    repository.save_network(net, path)
    loaded = repository.load_network(path)

    assert loaded.same_structure(net)
    assert loaded.rng is None
    assert generator_service.clique_census(loaded) == generator_service.clique_census(net)


def test_serialization_is_canonical(repository, fig3_text):
    assert repository.serialize(repository.parse(fig3_text)) == fig3_text


def test_fig3_fixture(repository, fixtures_dir):
    net = repository.load_network(fixtures_dir / "fig3_k5_n2.json")
    census = GeneratorService().clique_census(net)

    assert (net.index_k, net.time_n, net.vertex_count) == (5, 2, 7)
    assert net.seed is None
    assert census.depth_counts == {1: 4, 2: 5}
    assert census.total_depth == 14


def test_triangle_fixture(repository, fixtures_dir):
    net = repository.load_network(fixtures_dir / "k3_n0.json")
    census = GeneratorService().clique_census(net)

    assert census.active_count == 1
    assert census.depth_counts == {0: 1}
    assert net.adjacency == [[1, 2], [0, 2], [0, 1]]


def test_malformed_json_reports_line(repository, fig3_text):
    with pytest.raises(NetworkFileException) as exc:
        repository.parse(fig3_text.replace('"k": 5,', '"k": 5'))
    assert exc.value.line == 4
    assert exc.value.message.startswith("line 4")


def test_schema_errors(repository, fig3_text):
    with pytest.raises(ValidationException) as exc:
        repository.parse(fig3_text.replace('"k": 5,', '"k": "five",'))
    assert "k" in exc.value.errors


def test_missing_edge_violates_counts(repository, fig3_text):
    with pytest.raises(ValidationException) as exc:
        repository.parse(fig3_text.replace("    [0, 1],\n", ""))

    assert exc.value.message.startswith("Network file validation failed")
    assert "edges" in exc.value.errors
    assert any("E = k(k-1)/2 + n*k" in message for message in exc.value.errors["edges"])


def test_non_adjacent_clique_reports_line(repository, fig3_text):
    broken = fig3_text.replace('{"vertices": [2, 3, 4, 5, 6], "depth": 2}', '{"vertices": [0, 3, 4, 5, 6], "depth": 2}')
    with pytest.raises(ValidationException) as exc:
        repository.parse(broken)

    assert "line 33" in exc.value.errors
    assert "not pairwise adjacent" in exc.value.errors["line 33"][0]


def test_duplicate_active_clique_reports_line(repository, fig3_text):
    broken = fig3_text.replace('{"vertices": [1, 3, 4, 5, 6], "depth": 2}', '{"vertices": [6, 5, 4, 3, 2], "depth": 2}')
    with pytest.raises(ValidationException) as exc:
        repository.parse(broken)

    assert list(exc.value.errors) == ["line 34"]
    assert "duplicates active clique line 33" in exc.value.errors["line 34"][0]


def test_unsupported_schema_version(repository, fig3_text):
    with pytest.raises(ValidationException) as exc:
        repository.parse(fig3_text.replace('"schema_version": 1', '"schema_version": 2'))
    assert "schema_version" in exc.value.errors


def test_missing_file(repository, tmp_path):
    with pytest.raises(OSError):
        repository.load_network(tmp_path / "absent.json")
