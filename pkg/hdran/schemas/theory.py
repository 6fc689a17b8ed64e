from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel


class AsymptoticMean(BaseModel):
    value: float
    regime: Literal["fixed_label", "linear_label"]


# [DIAMETER CONSTANTS]
# [Constantes da altura e do diâmetro: eta*, a, constante de altura e c do diâmetro, com resíduos]
# [ENTRADA: eta_star, a, height_constant, c, upper_bound_constant, resíduos das equações]
# [SAIDA: instância DiameterConstants]
# [DEPENDENCIAS: BaseModel]
class DiameterConstants(BaseModel):
    eta_star: float
    a: float
    height_constant: float
    c: float
    upper_bound_constant: float
    eta_residual: float
    a_residual: float


# [TOTAL DEPTH MOMENTS]
# [Momentos da profundidade total: média por soma direta e por digamma, segundo momento exato e forma impressa]
# [ENTRADA: campos numéricos por (k, n)]
# [SAIDA: instância TotalDepthMoments]
# [DEPENDENCIAS: BaseModel]
class TotalDepthMoments(BaseModel):
    mean: float
    mean_digamma: float
    second_moment: float
    squared_depth_sum: float
    printed_second_moment_leading: float
    leading_order: float


# [THEORY REPORT]
# [Todas as formas fechadas avaliadas para um par (k, n)]
# [ENTRADA: k, n e valores calculados pelo TheoryService]
# [SAIDA: instância TheoryReport consumida por validação e pela CLI]
# [DEPENDENCIAS: BaseModel, DiameterConstants, TotalDepthMoments]
class TheoryReport(BaseModel):
    k: int
    n: int
    b_fractions: Dict[int, float]
    b_exact: Dict[int, str]
    expected_counts: Dict[int, float]
    newcomer_expected_counts: Dict[int, float]
    clustering_limit: float
    clustering_expected: Optional[float] = None
    gini_closed_form: float
    gini_printed_form: float
    gini_trapezoid: float
    lorenz_points: List[Tuple[float, float]]
    depth_mean: float
    depth_second_moment: float
    depth: TotalDepthMoments
    diameter_constants: DiameterConstants
    diameter_asymptote: float
    diameter_upper_bound: float
    link_density: float
    l1_bound: float
