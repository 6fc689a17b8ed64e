from typing import Dict, List, Tuple

from pydantic import BaseModel, Field


# [DEGREE HISTOGRAM]
# [Contagem de vértices por grau nas visões de todos os vértices e somente recém-chegados]
# [ENTRADA: k, n, counts_all, counts_newcomers]
# [SAIDA: instância DegreeHistogram]
# [DEPENDENCIAS: BaseModel]
class DegreeHistogram(BaseModel):
    k: int
    n: int
    counts_all: Dict[int, int]
    counts_newcomers: Dict[int, int]

    # [NEWCOMER FRACTIONS]
    # [Frações por grau na visão de recém-chegados (todos os vértices quando n = 0)]
    # [ENTRADA: nenhuma]
    # [SAIDA: Dict[int, float] - frações que somam 1]
    # [DEPENDENCIAS: self.counts_newcomers, self.counts_all]
    def newcomer_fractions(self) -> Dict[int, float]:
        if self.n == 0:
            total = self.k
            return {j: count / total for j, count in self.counts_all.items()}
        return {j: count / self.n for j, count in self.counts_newcomers.items()}


class DistanceReport(BaseModel):
    wiener: int = Field(ge=0)
    diameter: int = Field(ge=0)
    source_count: int = Field(ge=1)
    exact: bool = True


# [CLUSTERING PROFILE]
# [Coeficientes de agrupamento por grau (recém-chegados), média da rede e verificação da forma fechada]
# [ENTRADA: per_degree, closed_form, vertices_per_degree, average, closed_form_verified]
# [SAIDA: instância ClusteringProfile]
# [DEPENDENCIAS: BaseModel]
class ClusteringProfile(BaseModel):
    per_degree: Dict[int, float]
    closed_form: Dict[int, float]
    vertices_per_degree: Dict[int, int]
    average: float
    closed_form_verified: bool


class LorenzCurve(BaseModel):
    points: List[Tuple[float, float]]
    gini: float
