from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


# [ACTIVE CLIQUE ENTRY]
# [Clique ativa serializada: lista de vértices e profundidade]
# [ENTRADA: vertices - ids, depth - profundidade]
# [SAIDA: instância ActiveCliqueEntry]
# [DEPENDENCIAS: BaseModel, Field]
class ActiveCliqueEntry(BaseModel):
    vertices: List[int]
    depth: int = Field(ge=0)


# [NETWORK FILE]
# [Formato textual versionado de uma rede: cabeçalho, arestas ordenadas e cliques ativas em ordem de arena]
# [ENTRADA: schema_version, k, n, seed, edges, active_cliques]
# [SAIDA: instância NetworkFile a ser validada por NetworkFileValidator]
# [DEPENDENCIAS: BaseModel, ActiveCliqueEntry]
class NetworkFile(BaseModel):
    schema_version: int = SCHEMA_VERSION
    k: int
    n: int
    seed: Optional[int] = None
    edges: List[Tuple[int, int]]
    active_cliques: List[ActiveCliqueEntry]
