from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

MEASUREMENTS = frozenset({"degrees", "clustering", "gini", "depth", "wiener", "diameter", "lorenz"})


# [REPLICATE SUMMARY]
# [Estatísticas de uma réplica para agregação: semente derivada, frações de grau, agrupamento, Gini, profundidade e distâncias]
# [ENTRADA: replicate_index, seed e medições opcionais]
# [SAIDA: instância ReplicateSummary]
# [DEPENDENCIAS: BaseModel, Field]
class ReplicateSummary(BaseModel):
    replicate_index: int = Field(ge=0)
    seed: int
    k: int
    n: int
    degree_fractions: Dict[int, float] = {}
    degree_counts: Dict[int, int] = {}
    clustering_avg: Optional[float] = None
    gini: Optional[float] = None
    gini_class: Optional[float] = None
    total_depth: Optional[int] = None
    wiener: Optional[int] = None
    diameter: Optional[int] = None
    lorenz: Optional[List[float]] = None


# [VALIDATION ROW]
# [Linha de comparação teoria x simulação: média, erro padrão, valor teórico, diferença, limite e resultado]
# [ENTRADA: metric, empirical_mean, empirical_se, theory, bound, informational]
# [SAIDA: instância ValidationRow com difference e passed calculados em build]
# [DEPENDENCIAS: BaseModel]
class ValidationRow(BaseModel):
    metric: str
    empirical_mean: float
    empirical_se: float
    theory: float
    difference: float
    bound: float
    passed: bool
    informational: bool = False

    # [BUILD]
    # [Monta a linha calculando a diferença absoluta e o resultado contra o limite]
    # [ENTRADA: metric, empirical_mean, empirical_se, theory, bound, informational]
    # [SAIDA: ValidationRow]
    # [DEPENDENCIAS: nenhuma]
    @classmethod
    def build(cls, metric: str, empirical_mean: float, empirical_se: float, theory: float, bound: float, informational: bool = False) -> "ValidationRow":
        difference = abs(empirical_mean - theory)
        return cls(
            metric=metric,
            empirical_mean=empirical_mean,
            empirical_se=empirical_se,
            theory=theory,
            difference=difference,
            bound=bound,
            passed=bool(difference <= bound),
            informational=informational,
        )


class ConcentrationRow(BaseModel):
    lam: float
    empirical_tail: float
    bound: float
    noise: float
    violated: bool


class NormalityResult(BaseModel):
    statistic: float
    p_value: float
    skewness: float
    kurtosis: float
    sample_size: int

    # [REJECTS]
    # [Rejeição da normalidade ao nível alpha]
    # [ENTRADA: alpha - nível do teste]
    # [SAIDA: bool]
    # [DEPENDENCIAS: nenhuma]
    def rejects(self, alpha: float = 0.01) -> bool:
        return self.p_value < alpha


# [WIENER STUDY RESULT]
# [Amostras exatas do índice de Wiener com histograma, assimetria, teste de normalidade e razão com o termo dominante]
# [ENTRADA: k, n, reps, samples, histogram, normality, trend_ratio]
# [SAIDA: instância WienerStudyResult]
# [DEPENDENCIAS: BaseModel, NormalityResult]
class WienerStudyResult(BaseModel):
    k: int
    n: int
    reps: int
    samples: List[int]
    histogram: List[Tuple[float, float, int]]
    skewness: float
    normality: NormalityResult
    mean: float
    trend_ratio: Optional[float] = None


class DepthScalingRow(BaseModel):
    n: int
    mean_total_depth: float
    standard_error: float
    scaled: float
