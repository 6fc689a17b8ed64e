import logging
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import shortest_path

from hdran.core.config import settings
from hdran.core.exceptions import DomainException, ResourceBudgetException
from hdran.models.network import Network
from hdran.schemas.metrics import ClusteringProfile, DegreeHistogram, DistanceReport, LorenzCurve
from hdran.utils.seeding import make_generator

logger = logging.getLogger(__name__)


# [METRICS SERVICE]
# [Medições empíricas sobre redes geradas: perfis de grau, agrupamento, Lorenz/Gini e distâncias]
# [ENTRADA: vertex_budget - limite de vértices para distâncias exatas (padrão de settings)]
# [SAIDA: instância MetricsService; operações somente leitura sobre a rede]
# [DEPENDENCIAS: numpy, scipy.sparse, scipy.sparse.csgraph, settings]
class MetricsService:

    def __init__(self, vertex_budget: Optional[int] = None):
        self.vertex_budget = vertex_budget if vertex_budget is not None else settings.vertex_budget

    # [DEGREE HISTOGRAM]
    # [Contagem de vértices por grau (todos e recém-chegados com id >= k)]
    # [ENTRADA: net - rede]
    # [SAIDA: DegreeHistogram]
    # [DEPENDENCIAS: numpy.unique]
    def degree_histogram(self, net: Network) -> DegreeHistogram:
        degrees = net.degrees()
        return DegreeHistogram(
            k=net.index_k,
            n=net.time_n,
            counts_all=self._count(degrees),
            counts_newcomers=self._count(degrees[net.index_k:]),
        )

    # [LABEL DEGREE]
    # [Grau do vértice de rótulo j (id k - 1 + j)]
    # [ENTRADA: net - rede, label - rótulo em [1, n]]
    # [SAIDA: int]
    # [DEPENDENCIAS: DomainException]
    def label_degree(self, net: Network, label: int) -> int:
        if not 1 <= label <= net.time_n:
            raise DomainException(f"label must be in [1, {net.time_n}], got {label}", "label")
        return len(net.adjacency[net.index_k - 1 + label])

    # [ADJACENCY MATRIX]
    # [Matriz de adjacência CSR montada direto das listas ordenadas]
    # [ENTRADA: net - rede]
    # [SAIDA: sparse.csr_matrix simétrica com uns]
    # [DEPENDENCIAS: scipy.sparse, numpy.cumsum]
    def adjacency_matrix(self, net: Network) -> sparse.csr_matrix:
        lengths = [len(neighbors) for neighbors in net.adjacency]
        indptr = np.concatenate(([0], np.cumsum(lengths, dtype=np.int64)))
        indices = np.fromiter(
            (v for neighbors in net.adjacency for v in neighbors), dtype=np.int64, count=int(indptr[-1])
        )
        data = np.ones(len(indices), dtype=np.int64)
        size = net.vertex_count
        return sparse.csr_matrix((data, indices, indptr), shape=(size, size))

    # [CLUSTERING PROFILE]
    # [Agrupamento local por contagem direta de triângulos (A·A ∘ A); verifica a forma fechada nos recém-chegados]
    # [ENTRADA: net - rede com n >= 1]
    # [SAIDA: ClusteringProfile - por grau (recém-chegados), média sobre todos os vértices]
    # [DEPENDENCIAS: scipy.sparse, numpy]
    def clustering_profile(self, net: Network) -> ClusteringProfile:
        if net.time_n < 1:
            raise DomainException("clustering profile requires n >= 1", "n")
        k = net.index_k
        matrix = self.adjacency_matrix(net)
        degrees = np.asarray(matrix.sum(axis=1)).ravel()
        triangles = np.asarray((matrix @ matrix).multiply(matrix).sum(axis=1)).ravel() // 2
        coefficients = 2.0 * triangles / (degrees * (degrees - 1))

        newcomer_degrees = degrees[k:]
        newcomer_triangles = triangles[k:]
        expected_triangles = (k - 1) * (newcomer_degrees - k) + k * (k - 1) // 2
        verified = bool(np.array_equal(newcomer_triangles, expected_triangles))
        if not verified:
            logger.warning(f"Neighborhood edge counts disagree with the closed form on {net!r}")

        per_degree = {}
        closed_form = {}
        vertices_per_degree = {}
        newcomer_coefficients = coefficients[k:]
        for degree in np.unique(newcomer_degrees).tolist():
            mask = newcomer_degrees == degree
            per_degree[degree] = float(np.mean(newcomer_coefficients[mask]))
            closed_form[degree] = (k - 1) * (2 * degree - k) / (degree * (degree - 1))
            vertices_per_degree[degree] = int(np.count_nonzero(mask))
        return ClusteringProfile(
            per_degree=per_degree,
            closed_form=closed_form,
            vertices_per_degree=vertices_per_degree,
            average=float(np.mean(coefficients)),
            closed_form_verified=verified,
        )

    # [EMPIRICAL LORENZ GINI]
    # [Curva de Lorenz por vértice (graus em ordem crescente) e Gini pela regra do trapézio]
    # [ENTRADA: degrees - sequência de graus não vazia]
    # [SAIDA: LorenzCurve - pontos (fração de vértices, fração do grau total) e gini]
    # [DEPENDENCIAS: numpy.sort, numpy.cumsum]
    def empirical_lorenz_gini(self, degrees: Sequence[int]) -> LorenzCurve:
        positions, cumulative = self.lorenz_arrays(degrees)
        return LorenzCurve(points=list(zip(positions.tolist(), cumulative.tolist())), gini=self._trapezoid_gini(positions, cumulative))

    # [LORENZ ARRAYS]
    # [Posições i/V e frações acumuladas do grau total com graus em ordem crescente]
    # [ENTRADA: degrees - sequência de graus com soma positiva]
    # [SAIDA: Tuple[np.ndarray, np.ndarray] - V + 1 pontos começando em (0, 0)]
    # [DEPENDENCIAS: numpy, DomainException]
    def lorenz_arrays(self, degrees: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
        values = np.sort(np.asarray(degrees, dtype=float))
        if values.size == 0:
            raise DomainException("Lorenz curve requires a non-empty degree sequence", "degrees")
        total = values.sum()
        if total <= 0:
            raise DomainException("Lorenz curve requires a positive degree total", "degrees")
        cumulative = np.concatenate(([0.0], np.cumsum(values) / total))
        positions = np.arange(values.size + 1, dtype=float) / values.size
        return positions, cumulative

    # [VERTEX GINI]
    # [Gini da curva de Lorenz por vértice sem materializar os pontos]
    # [ENTRADA: degrees - sequência de graus]
    # [SAIDA: float]
    # [DEPENDENCIAS: self.lorenz_arrays, self._trapezoid_gini]
    def vertex_gini(self, degrees: Sequence[int]) -> float:
        return self._trapezoid_gini(*self.lorenz_arrays(degrees))

    # [CLASS LORENZ GINI]
    # [Gini por classes de grau admissíveis {k..k+n} com frações observadas X_{n,j}/(n+k) em ordem crescente]
    # [ENTRADA: histogram - DegreeHistogram com n >= 1]
    # [SAIDA: float]
    # [DEPENDENCIAS: numpy]
    def class_lorenz_gini(self, histogram: DegreeHistogram) -> float:
        k, n = histogram.k, histogram.n
        if n < 1:
            raise DomainException("class Lorenz construction requires n >= 1", "n")
        shares = np.array([histogram.counts_all.get(j, 0) for j in range(k, k + n + 1)], dtype=float) / (n + k)
        cumulative = np.concatenate(([0.0], np.cumsum(np.sort(shares))))
        positions = np.arange(n + 2, dtype=float) / (n + 1)
        return self._trapezoid_gini(positions, cumulative)

    # [LINK DENSITY]
    # [Densidade medida E / C(V, 2)]
    # [ENTRADA: net - rede com pelo menos dois vértices]
    # [SAIDA: float]
    # [DEPENDENCIAS: net.edge_count]
    def link_density(self, net: Network) -> float:
        size = net.vertex_count
        return 2.0 * net.edge_count / (size * (size - 1))

    # [DISTANCE METRICS]
    # [Índice de Wiener e diâmetro por BFS em blocos de fontes; modo amostrado usa fontes sorteadas sem reposição]
    # [ENTRADA: net - rede, mode - 'exact' ou 'sampled', sources - fontes no modo amostrado, seed - semente das fontes]
    # [SAIDA: DistanceReport - exato, ou estimativa não viesada do Wiener e limite inferior do diâmetro]
    # [DEPENDENCIAS: scipy.sparse.csgraph.shortest_path, settings.get_bfs_chunk_rows]
    def distance_metrics(self, net: Network, mode: str = "exact", sources: Optional[int] = None, seed: int = 0) -> DistanceReport:
        size = net.vertex_count
        if mode == "exact":
            if size > self.vertex_budget:
                raise ResourceBudgetException(
                    "exact distance vertex", self.vertex_budget, size, hint="use sampled mode or raise HDRAN_VERTEX_BUDGET"
                )
            chosen = np.arange(size)
        elif mode == "sampled":
            if sources is None or sources < 1:
                raise DomainException("sampled mode requires a positive number of sources", "sources")
            count = min(sources, size)
            chosen = np.sort(make_generator(seed).choice(size, size=count, replace=False))
        else:
            raise DomainException(f"unknown distance mode '{mode}'", "mode")

        matrix = self.adjacency_matrix(net)
        chunk = settings.get_bfs_chunk_rows(size)
        total = 0
        diameter = 0
        for start in range(0, len(chosen), chunk):
            block = shortest_path(matrix, method="D", unweighted=True, directed=False, indices=chosen[start:start + chunk])
            distances = block.astype(np.int64)
            total += int(distances.sum())
            diameter = max(diameter, int(distances.max()))

        if mode == "exact":
            return DistanceReport(wiener=total // 2, diameter=diameter, source_count=size, exact=True)
        estimate = round(total * size / (2 * len(chosen)))
        return DistanceReport(wiener=estimate, diameter=diameter, source_count=len(chosen), exact=False)

    def _trapezoid_gini(self, positions: np.ndarray, cumulative: np.ndarray) -> float:
        area = np.sum(np.diff(positions) * (cumulative[1:] + cumulative[:-1])) / 2.0
        return float(1.0 - 2.0 * area)

    def _count(self, degrees: np.ndarray) -> dict:
        values, counts = np.unique(degrees, return_counts=True)
        return {int(value): int(count) for value, count in zip(values, counts)}
