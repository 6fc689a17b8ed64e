from typing import Iterator, List, NamedTuple, Optional, Tuple

import numpy as np


# [CLIQUE RECORD]
# [Visão imutável de uma clique da arena: k vértices, profundidade e flag de ativa]
# [ENTRADA: vertices - ids ordenados, depth - profundidade, active - se ainda recruta]
# [SAIDA: tupla nomeada]
# [DEPENDENCIAS: NamedTuple]
class CliqueRecord(NamedTuple):
    vertices: Tuple[int, ...]
    depth: int
    active: bool


# [NETWORK]
# [Estado de uma HDRAN: listas de adjacência ordenadas, arena de cliques em listas paralelas e ids ativos densos]
# [ENTRADA: index_k - índice k da rede, seed - semente opcional]
# [SAIDA: instância Network no tempo 0 sem adjacência; preenchida pelo GeneratorService ou pelo repositório]
# [DEPENDENCIAS: numpy para o gerador e vetores de grau]
class Network:

    def __init__(self, index_k: int, seed: Optional[int] = None):
        self.index_k = index_k
        self.time_n = 0
        self.seed = seed
        self.rng: Optional[np.random.Generator] = None
        self.adjacency: List[List[int]] = []
        self.clique_vertices: List[Tuple[int, ...]] = []
        self.clique_depth: List[int] = []
        self.clique_active: List[bool] = []
        # positions into the arena; order changes on swap-remove
        self.active_ids: List[int] = []

    # [VERTEX COUNT]
    # [Quantidade de vértices (k + n)]
    # [ENTRADA: nenhuma]
    # [SAIDA: int]
    # [DEPENDENCIAS: self.adjacency]
    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    # [EDGE COUNT]
    # [Quantidade de arestas pela soma dos graus]
    # [ENTRADA: nenhuma]
    # [SAIDA: int]
    # [DEPENDENCIAS: self.adjacency]
    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    # [ACTIVE COUNT]
    # [Quantidade de cliques ativas (1 + (k-1)n)]
    # [ENTRADA: nenhuma]
    # [SAIDA: int]
    # [DEPENDENCIAS: self.active_ids]
    @property
    def active_count(self) -> int:
        return len(self.active_ids)

    # [CLIQUE]
    # [Lê um registro da arena pelo índice]
    # [ENTRADA: index - posição na arena]
    # [SAIDA: CliqueRecord]
    # [DEPENDENCIAS: listas paralelas da arena]
    def clique(self, index: int) -> CliqueRecord:
        return CliqueRecord(self.clique_vertices[index], self.clique_depth[index], self.clique_active[index])

    # [ACTIVE CLIQUES]
    # [Cliques ativas em ordem de arena, formato canônico usado na serialização]
    # [ENTRADA: nenhuma]
    # [SAIDA: List[Tuple[Tuple[int, ...], int]] - (vértices, profundidade)]
    # [DEPENDENCIAS: self.active_ids]
    def active_cliques(self) -> List[Tuple[Tuple[int, ...], int]]:
        return [(self.clique_vertices[i], self.clique_depth[i]) for i in sorted(self.active_ids)]

    # [EDGES]
    # [Arestas (u, v) com u < v em ordem lexicográfica]
    # [ENTRADA: nenhuma]
    # [SAIDA: Iterator de pares de ids]
    # [DEPENDENCIAS: self.adjacency]
    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, neighbors in enumerate(self.adjacency):
            for v in neighbors:
                if v > u:
                    yield u, v

    # [DEGREES]
    # [Vetor de graus indexado por id]
    # [ENTRADA: nenhuma]
    # [SAIDA: np.ndarray de int64]
    # [DEPENDENCIAS: numpy.fromiter]
    def degrees(self) -> np.ndarray:
        return np.fromiter((len(neighbors) for neighbors in self.adjacency), dtype=np.int64, count=self.vertex_count)

    # [ACTIVE DEPTHS]
    # [Profundidades das cliques ativas na ordem de active_ids]
    # [ENTRADA: nenhuma]
    # [SAIDA: np.ndarray de int64]
    # [DEPENDENCIAS: numpy]
    def active_depths(self) -> np.ndarray:
        depths = np.asarray(self.clique_depth, dtype=np.int64)
        return depths[np.asarray(self.active_ids, dtype=np.int64)]

    # [SAME STRUCTURE]
    # [Compara duas redes por k, n, semente, arestas e cliques ativas com profundidade]
    # [ENTRADA: other - outra Network]
    # [SAIDA: bool]
    # [DEPENDENCIAS: self.edges, self.active_cliques]
    def same_structure(self, other: "Network") -> bool:
        return (
            self.index_k == other.index_k
            and self.time_n == other.time_n
            and self.seed == other.seed
            and list(self.edges()) == list(other.edges())
            and self.active_cliques() == other.active_cliques()
        )

    def __repr__(self) -> str:
        return f"Network(k={self.index_k}, n={self.time_n}, vertices={self.vertex_count}, active={self.active_count})"
