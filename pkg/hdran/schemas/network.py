from typing import Dict, Optional

from pydantic import BaseModel, Field


# [CLIQUE CENSUS]
# [Resumo das cliques ativas: contagem, multiconjunto de profundidades e profundidade total]
# [ENTRADA: active_count, depth_counts, total_depth]
# [SAIDA: instância CliqueCensus]
# [DEPENDENCIAS: BaseModel, Field]
class CliqueCensus(BaseModel):
    active_count: int = Field(ge=1)
    depth_counts: Dict[int, int]
    total_depth: int = Field(ge=0)


# [NETWORK SUMMARY]
# [Contagens da rede comparadas às identidades determinísticas de evolução]
# [ENTRADA: k, n, seed, vertices, edges, active_cliques, total_depth]
# [SAIDA: instância NetworkSummary com método de linha resumida]
# [DEPENDENCIAS: BaseModel]
class NetworkSummary(BaseModel):
    k: int
    n: int
    seed: Optional[int] = None
    vertices: int
    edges: int
    active_cliques: int
    total_depth: int

    # [TO LINE]
    # [Linha de resumo impressa pelo comando generate]
    # [ENTRADA: nenhuma]
    # [SAIDA: str - pares chave=valor]
    # [DEPENDENCIAS: nenhuma]
    def to_line(self) -> str:
        return (
            f"k={self.k} n={self.n} seed={self.seed} vertices={self.vertices} "
            f"edges={self.edges} active_cliques={self.active_cliques} total_depth={self.total_depth}"
        )
