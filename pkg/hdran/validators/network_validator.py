from itertools import combinations
from typing import Dict, Set, Tuple

from hdran.schemas.network_file import SCHEMA_VERSION, NetworkFile
from hdran.validators.base_validator import BaseValidator, ValidationResult


# [NETWORK FILE VALIDATOR]
# [Valida todas as invariantes de um NetworkFile: contagens, arestas u < v, ids < k + n e cliques ativas completas]
# [ENTRADA: line_map - mapa opcional (seção, índice) -> linha do arquivo para contexto nas mensagens]
# [SAIDA: ValidationResult com erros por linha]
# [DEPENDENCIAS: BaseValidator, ValidationResult, NetworkFile]
class NetworkFileValidator(BaseValidator):

    # [VALIDATE]
    # [Executa as validações na ordem cabeçalho, arestas, cliques; para no cabeçalho inválido]
    # [ENTRADA: data - NetworkFile]
    # [SAIDA: ValidationResult]
    # [DEPENDENCIAS: métodos privados de validação]
    def validate(self, data: NetworkFile) -> ValidationResult:
        result = ValidationResult()
        self._validate_header(data, result)
        if not result.is_valid:
            return result
        edge_set = self._validate_edges(data, result)
        self._validate_degrees(data, edge_set, result)
        self._validate_cliques(data, edge_set, result)
        return result

    def _validate_header(self, data: NetworkFile, result: ValidationResult):
        if data.schema_version != SCHEMA_VERSION:
            result.add_error(f"unsupported schema_version {data.schema_version}, expected {SCHEMA_VERSION}", "schema_version")
        if data.k < 3:
            result.add_error(f"k must be at least 3, got {data.k}", "k")
        if data.n < 0:
            result.add_error(f"n must be non-negative, got {data.n}", "n")

    # [VALIDATE EDGES]
    # [Confere ordem u < v, faixa de ids, duplicatas e a identidade E = k(k-1)/2 + n*k]
    # [ENTRADA: data - NetworkFile, result - ValidationResult]
    # [SAIDA: Set[Tuple[int, int]] - arestas válidas para as checagens seguintes]
    # [DEPENDENCIAS: ValidationResult.add_error]
    def _validate_edges(self, data: NetworkFile, result: ValidationResult) -> Set[Tuple[int, int]]:
        vertex_count = data.k + data.n
        edge_set: Set[Tuple[int, int]] = set()
        for index, (u, v) in enumerate(data.edges):
            field = self.entry_field("edges", index)
            if not u < v:
                result.add_error(f"edge ({u}, {v}) must satisfy u < v", field)
                continue
            if u < 0 or v >= vertex_count:
                result.add_error(f"edge ({u}, {v}) has an id outside [0, {vertex_count})", field)
                continue
            if (u, v) in edge_set:
                result.add_error(f"duplicate edge ({u}, {v})", field)
                continue
            edge_set.add((u, v))

        expected = data.k * (data.k - 1) // 2 + data.n * data.k
        if len(data.edges) != expected:
            result.add_error(
                f"edge count {len(data.edges)} violates E = k(k-1)/2 + n*k = {expected} for k={data.k}, n={data.n}",
                "edges",
            )
        return edge_set

    def _validate_degrees(self, data: NetworkFile, edge_set: Set[Tuple[int, int]], result: ValidationResult):
        degrees = [0] * (data.k + data.n)
        for u, v in edge_set:
            degrees[u] += 1
            degrees[v] += 1
        minimum = data.k - 1 if data.n == 0 else data.k
        for vertex, degree in enumerate(degrees):
            if degree < minimum:
                result.add_error(f"vertex {vertex} has degree {degree}, below the minimum {minimum}", "edges")

    # [VALIDATE CLIQUES]
    # [Confere contagem 1 + (k-1)n, k ids distintos por clique, cliques repetidas, profundidades e adjacência par a par]
    # [ENTRADA: data - NetworkFile, edge_set - arestas válidas, result - ValidationResult]
    # [SAIDA: None - adiciona erros ao result]
    # [DEPENDENCIAS: itertools.combinations]
    def _validate_cliques(self, data: NetworkFile, edge_set: Set[Tuple[int, int]], result: ValidationResult):
        k, n = data.k, data.n
        vertex_count = k + n
        expected = 1 + (k - 1) * n
        if len(data.active_cliques) != expected:
            result.add_error(
                f"active clique count {len(data.active_cliques)} violates C = 1 + (k-1)n = {expected}",
                "active_cliques",
            )
        seen: Dict[Tuple[int, ...], int] = {}
        for index, entry in enumerate(data.active_cliques):
            field = self.entry_field("active_cliques", index)
            members = entry.vertices
            if len(members) != k or len(set(members)) != k:
                result.add_error(f"clique {members} must have exactly {k} distinct vertices", field)
                continue
            key = tuple(sorted(members))
            if key in seen:
                result.add_error(f"clique {members} duplicates active clique {self.entry_field('active_cliques', seen[key])}", field)
                continue
            seen[key] = index
            if min(members) < 0 or max(members) >= vertex_count:
                result.add_error(f"clique {members} has an id outside [0, {vertex_count})", field)
                continue
            if n == 0 and entry.depth != 0:
                result.add_error(f"the root clique has depth 0, got {entry.depth}", field)
            if n > 0 and entry.depth < 1:
                result.add_error(f"active cliques after step 1 have depth >= 1, got {entry.depth}", field)
            missing = [(u, v) for u, v in combinations(sorted(members), 2) if (u, v) not in edge_set]
            if missing:
                result.add_error(f"clique {members} members are not pairwise adjacent, missing {missing[:3]}", field)
