import logging
from collections import Counter
from typing import List, Optional

import numpy as np

from hdran.core.config import settings
from hdran.core.exceptions import DomainException, ResourceBudgetException
from hdran.models.network import Network
from hdran.schemas.network import CliqueCensus, NetworkSummary
from hdran.utils.seeding import RNG_CHUNK, make_generator

logger = logging.getLogger(__name__)

MAX_SEED = 2**64 - 1


# [GENERATOR SERVICE]
# [Serviço de evolução de HDRANs: subdivisão uniforme de cliques ativas com contabilidade de profundidade]
# [ENTRADA: clique_budget - limite de registros na arena (padrão vem de settings)]
# [SAIDA: instância GeneratorService configurada]
# [DEPENDENCIAS: Network, make_generator, settings]
class GeneratorService:

    def __init__(self, clique_budget: Optional[int] = None):
        self.clique_budget = clique_budget if clique_budget is not None else settings.clique_budget

    # [INIT NETWORK]
    # [Cria o grafo completo K_k com uma única clique ativa (raiz) de profundidade 0]
    # [ENTRADA: k - índice da rede, k >= 3]
    # [SAIDA: Network no tempo 0, sem gerador]
    # [DEPENDENCIAS: Network, DomainException]
    def init_network(self, k: int) -> Network:
        self._check_index(k)
        net = Network(k)
        net.adjacency = [[w for w in range(k) if w != u] for u in range(k)]
        net.clique_vertices.append(tuple(range(k)))
        net.clique_depth.append(0)
        net.clique_active.append(True)
        net.active_ids.append(0)
        return net

    # [SUBDIVIDE]
    # [Desativa a clique na posição dada de active_ids, insere o novo vértice e cria k cliques filhas]
    # [ENTRADA: net - rede, position - posição em net.active_ids]
    # [SAIDA: int - id do novo vértice, (k - 1) + t]
    # [DEPENDENCIAS: listas paralelas da arena]
    def subdivide(self, net: Network, position: int) -> int:
        k = net.index_k
        active_ids = net.active_ids
        chosen = active_ids[position]
        last = active_ids.pop()
        if position < len(active_ids):
            active_ids[position] = last
        net.clique_active[chosen] = False

        members = net.clique_vertices[chosen]
        depth = net.clique_depth[chosen] + 1
        vertex = len(net.adjacency)
        # the newcomer has the largest id, so appending keeps every list sorted
        for u in members:
            net.adjacency[u].append(vertex)
        net.adjacency.append(list(members))

        arena_size = len(net.clique_vertices)
        for i in range(k):
            net.clique_vertices.append(members[:i] + members[i + 1:] + (vertex,))
            net.clique_depth.append(depth)
            net.clique_active.append(True)
            active_ids.append(arena_size + i)
        net.time_n += 1
        return vertex

    # [EVOLVE STEP]
    # [Um passo de evolução com escolha uniforme entre as cliques ativas]
    # [ENTRADA: net - rede com gerador presente]
    # [SAIDA: int - id do vértice inserido]
    # [DEPENDENCIAS: self.subdivide, net.rng]
    def evolve_step(self, net: Network) -> int:
        self._require_generator(net)
        self._check_budget(net.index_k, net.time_n + 1)
        position = int(net.rng.integers(0, len(net.active_ids)))
        return self.subdivide(net, position)

    # [EVOLVE]
    # [Evolui a rede por steps passos, sorteando as posições em blocos de RNG_CHUNK]
    # [ENTRADA: net - rede com gerador presente, steps - número de passos]
    # [SAIDA: List[int] - ids dos vértices inseridos]
    # [DEPENDENCIAS: self.subdivide, numpy bounded integers]
    def evolve(self, net: Network, steps: int) -> List[int]:
        if steps < 0:
            raise DomainException(f"steps must be non-negative, got {steps}", "steps")
        self._require_generator(net)
        self._check_budget(net.index_k, net.time_n + steps)
        k = net.index_k
        inserted = []
        done = 0
        while done < steps:
            size = min(RNG_CHUNK, steps - done)
            times = np.arange(net.time_n, net.time_n + size, dtype=np.int64)
            positions = net.rng.integers(0, 1 + (k - 1) * times)
            for position in positions.tolist():
                inserted.append(self.subdivide(net, position))
            done += size
        return inserted

    # [GENERATE]
    # [Constrói a rede (k, n) a partir da semente; função determinística de (k, n, seed)]
    # [ENTRADA: k - índice, n - passos, seed - semente de 64 bits]
    # [SAIDA: Network evoluída até o tempo n]
    # [DEPENDENCIAS: self.init_network, self.evolve, make_generator]
    def generate(self, k: int, n: int, seed: int) -> Network:
        self._check_index(k)
        if n < 0:
            raise DomainException(f"n must be non-negative, got {n}", "n")
        if not 0 <= seed <= MAX_SEED:
            raise DomainException(f"seed must be a 64-bit unsigned integer, got {seed}", "seed")
        self._check_budget(k, n)
        net = self.init_network(k)
        net.seed = seed
        net.rng = make_generator(seed)
        self.evolve(net, n)
        logger.debug(f"Generated {net!r} from seed {seed}")
        return net

    # [CLIQUE CENSUS]
    # [Contagem de cliques ativas, multiconjunto de profundidades e profundidade total]
    # [ENTRADA: net - rede]
    # [SAIDA: CliqueCensus]
    # [DEPENDENCIAS: Counter]
    def clique_census(self, net: Network) -> CliqueCensus:
        depths = [net.clique_depth[i] for i in net.active_ids]
        return CliqueCensus(
            active_count=len(depths),
            depth_counts=dict(sorted(Counter(depths).items())),
            total_depth=sum(depths),
        )

    # [SUMMARIZE]
    # [Resumo de contagens da rede para saída da linha de comando]
    # [ENTRADA: net - rede]
    # [SAIDA: NetworkSummary]
    # [DEPENDENCIAS: self.clique_census]
    def summarize(self, net: Network) -> NetworkSummary:
        census = self.clique_census(net)
        return NetworkSummary(
            k=net.index_k,
            n=net.time_n,
            seed=net.seed,
            vertices=net.vertex_count,
            edges=net.edge_count,
            active_cliques=census.active_count,
            total_depth=census.total_depth,
        )

    # [TIME LABEL]
    # [Rótulo de tempo de um vértice: 0 para os k iniciais, t para o recém-chegado do passo t]
    # [ENTRADA: net - rede, vertex_id - id em [0, k + n)]
    # [SAIDA: int]
    # [DEPENDENCIAS: DomainException]
    def time_label(self, net: Network, vertex_id: int) -> int:
        if not 0 <= vertex_id < net.vertex_count:
            raise DomainException(f"vertex id {vertex_id} out of range [0, {net.vertex_count})", "vertex_id")
        return max(0, vertex_id - net.index_k + 1)

    # [VERTEX ID]
    # [Id do vértice com rótulo de tempo label (k - 1 + label)]
    # [ENTRADA: net - rede, label - rótulo em [1, n]]
    # [SAIDA: int]
    # [DEPENDENCIAS: DomainException]
    def vertex_id(self, net: Network, label: int) -> int:
        if not 1 <= label <= net.time_n:
            raise DomainException(f"label must be in [1, {net.time_n}], got {label}", "label")
        return net.index_k - 1 + label

    def _check_index(self, k: int):
        if k < 3:
            raise DomainException(f"k must be at least 3 (k = 1, 2 give degenerate networks), got {k}", "k")

    def _check_budget(self, k: int, n: int):
        requested = 1 + k * n
        if requested > self.clique_budget:
            raise ResourceBudgetException(
                "clique arena", self.clique_budget, requested, hint="lower n or raise HDRAN_CLIQUE_BUDGET"
            )

    def _require_generator(self, net: Network):
        if net.rng is None:
            raise DomainException("network has no generator state; build it with generate()", "rng")
