from hdran.schemas.network_file import ActiveCliqueEntry, NetworkFile
from hdran.validators.network_validator import NetworkFileValidator


def triangle(**overrides):
    values = {
        "k": 3,
        "n": 0,
        "edges": [(0, 1), (0, 2), (1, 2)],
        "active_cliques": [ActiveCliqueEntry(vertices=[0, 1, 2], depth=0)],
    }
    values.update(overrides)
    return NetworkFile(**values)


def test_valid_triangle():
    result = NetworkFileValidator().validate(triangle())
    assert result.is_valid
    assert result.errors == []


def test_small_index_stops_after_header():
    result = NetworkFileValidator().validate(triangle(k=2))

    assert not result.is_valid
    assert list(result.get_errors_by_field()) == ["k"]


def test_edge_order_and_range():
    result = NetworkFileValidator().validate(triangle(edges=[(1, 0), (0, 2), (1, 5)]))
    errors = result.get_errors_by_field()

    assert "must satisfy u < v" in errors["edges[0]"][0]
    assert "outside" in errors["edges[2]"][0]


def test_duplicate_edge():
    result = NetworkFileValidator().validate(triangle(edges=[(0, 1), (0, 1), (1, 2)]))
    assert "duplicate" in result.get_errors_by_field()["edges[1]"][0]


def test_root_clique_depth():
    result = NetworkFileValidator().validate(triangle(active_cliques=[ActiveCliqueEntry(vertices=[0, 1, 2], depth=1)]))
    assert "depth 0" in result.get_errors_by_field()["active_cliques[0]"][0]


def test_clique_size_and_count():
    result = NetworkFileValidator().validate(
        triangle(active_cliques=[ActiveCliqueEntry(vertices=[0, 1], depth=0), ActiveCliqueEntry(vertices=[0, 1, 1], depth=0)])
    )
    errors = result.get_errors_by_field()

    assert "active_cliques" in errors
    assert "exactly 3 distinct" in errors["active_cliques[0]"][0]
    assert "exactly 3 distinct" in errors["active_cliques[1]"][0]


def test_line_map_names_fields():
    validator = NetworkFileValidator({("edges", 0): 7})
    result = validator.validate(triangle(edges=[(1, 0), (0, 2), (1, 2)]))
    assert "line 7" in result.get_errors_by_field()


def test_summary_lists_first_errors():
    result = NetworkFileValidator().validate(triangle(edges=[(1, 0), (0, 2), (1, 5)]))
    summary = result.summary(limit=2)

    assert summary.startswith("edges[0]: edge (1, 0) must satisfy u < v; edges[2]:")
    assert summary.endswith(f"(+{len(result.errors) - 2} more)")


def test_duplicate_active_clique():
    tetrahedron = NetworkFile(
        k=3,
        n=1,
        edges=[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        active_cliques=[
            ActiveCliqueEntry(vertices=[0, 1, 3], depth=1),
            ActiveCliqueEntry(vertices=[3, 1, 0], depth=1),
            ActiveCliqueEntry(vertices=[1, 2, 3], depth=1),
        ],
    )
    errors = NetworkFileValidator().validate(tetrahedron).get_errors_by_field()

    assert list(errors) == ["active_cliques[1]"]
    assert "duplicates active clique active_cliques[0]" in errors["active_cliques[1]"][0]
