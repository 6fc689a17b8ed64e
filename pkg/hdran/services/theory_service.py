import logging
import math
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln

from hdran.core.exceptions import DomainException, NumericException, UnsupportedEvaluationException
from hdran.schemas.theory import AsymptoticMean, DiameterConstants, TheoryReport, TotalDepthMoments
from hdran.utils.special_functions import (
    eval_digamma,
    eval_trigamma,
    generalized_binomial,
    hyp3f2_unit,
    rising_factorial,
    stirling2,
)

logger = logging.getLogger(__name__)

# Largest n - j evaluated by the exact alternating pmf sum.
PMF_EXACT_LIMIT = 64
# Above this n - j the degree moments switch from rationals to log-gamma differences.
MOMENT_EXACT_LIMIT = 1000
# Above this n the depth recurrences run in floating point.
DEPTH_EXACT_LIMIT = 300
# Above this n the expected average clustering is only available as its limit.
CLUSTERING_EXACT_LIMIT = 20_000
DEFAULT_DEGREE_WINDOW = 60

_ROOT_MAXITER = 200
_ROOT_XTOL = 1e-15
_ROOT_RTOL = 4 * np.finfo(float).eps
_ETA_BRACKET = (1.0 + 1e-6, 64.0)


# [THEORY SERVICE]
# [Avalia as formas fechadas e recorrências da HDRAN: frações limite, perfis de grau, agrupamento, Lorenz-Gini, profundidade e diâmetro]
# [ENTRADA: degree_window - maior deslocamento j - k incluído nos relatórios]
# [SAIDA: instância TheoryService; todas as operações são funções puras dos argumentos]
# [DEPENDENCIAS: Fraction, numpy, scipy.special.gammaln, scipy.optimize.brentq, special_functions]
class TheoryService:

    def __init__(self, degree_window: int = DEFAULT_DEGREE_WINDOW):
        self.degree_window = degree_window

    # ------------------------------------------------------------------
    # degree profile I: limit fractions and expected counts
    # ------------------------------------------------------------------

    # [LIMIT FRACTION]
    # [Fração limite b_{j,k} pela forma produto: b_{k,k} = (k-1)/(2k-1) e b_{j,k} = b_{j-1,k}(j-1)/(j+k-1)]
    # [ENTRADA: j - grau (j >= k), k - índice]
    # [SAIDA: Fraction exata]
    # [DEPENDENCIAS: Fraction]
    def limit_fraction(self, j: int, k: int) -> Fraction:
        self._check_index(k)
        if j < k:
            raise DomainException(f"limit fraction requires j >= k, got j={j}, k={k}", "j")
        value = Fraction(k - 1, 2 * k - 1)
        for i in range(k + 1, j + 1):
            value *= Fraction(i - 1, i + k - 1)
        return value

    # [LIMIT FRACTION GAMMA]
    # [Mesma fração pela razão de gamas Γ(j)Γ(2k-1)/(Γ(j+k)Γ(k-1)) com fatoriais exatos]
    # [ENTRADA: j - grau, k - índice]
    # [SAIDA: Fraction exata]
    # [DEPENDENCIAS: math.factorial]
    def limit_fraction_gamma(self, j: int, k: int) -> Fraction:
        self._check_index(k)
        if j < k:
            raise DomainException(f"limit fraction requires j >= k, got j={j}, k={k}", "j")
        return Fraction(factorial(j - 1) * factorial(2 * k - 2), factorial(j + k - 1) * factorial(k - 2))

    # [LIMIT FRACTIONS]
    # [b_{j,k} para j = k .. k + count - 1 em ponto flutuante, pelo produto acumulado]
    # [ENTRADA: k - índice, count - quantidade de graus]
    # [SAIDA: np.ndarray]
    # [DEPENDENCIAS: numpy.cumprod]
    def limit_fractions(self, k: int, count: int) -> np.ndarray:
        j = np.arange(k + 1, k + count, dtype=float)
        ratios = (j - 1.0) / (j + k - 1.0)
        return (k - 1) / (2 * k - 1) * np.concatenate(([1.0], np.cumprod(ratios)))

    # [PARTIAL SUM FRACTIONS]
    # [Soma parcial Σ_{j=k}^{k+n} b_{j,k} = 1 - Γ(2k-1)Γ(k+n+1)/(Γ(k)Γ(2k+n)) em forma fechada exata]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: Fraction]
    # [DEPENDENCIAS: _gamma_tail]
    def partial_sum_fractions(self, n: int, k: int) -> Fraction:
        self._check_index(k)
        if n < 0:
            raise DomainException(f"n must be non-negative, got {n}", "n")
        head = Fraction(factorial(2 * k - 2), factorial(k - 1))
        return 1 - head * self._gamma_tail(n, k)

    # [DEGREE FRACTION ASYMPTOTE]
    # [Regime de j grande: b_{j,k} ~ Γ(2k-1)/Γ(k-1) · j^-k]
    # [ENTRADA: j - grau, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: gammaln]
    def degree_fraction_asymptote(self, j: int, k: int) -> float:
        self._check_index(k)
        return math.exp(gammaln(2 * k - 1) - gammaln(k - 1) - k * math.log(j))

    # [L1 BOUND]
    # [Constante 2k²/(2k-1) que limita |E[X_{n,j}] - n b_{j,k}|]
    # [ENTRADA: k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: nenhuma]
    def l1_bound(self, k: int) -> float:
        return 2 * k * k / (2 * k - 1)

    # [EXPECTED DEGREE COUNT]
    # [E[X_{n,j}] pelas recorrências impressas com peso de recrutamento j e semente E[X_{1,k}] = 1]
    # [ENTRADA: n - tempo (>= 1), j - grau em [k, k+n-1], k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: self._degree_recurrence]
    def expected_degree_count(self, n: int, j: int, k: int) -> float:
        self._check_degree_range(n, j, k)
        return float(self._degree_recurrence(n, k, j, newcomer_weights=False)[-1])

    # [EXPECTED NEWCOMER DEGREE COUNT]
    # [E[X_{n,j}] na visão de recém-chegados com peso k + (j-k)(k-2), o número de cliques ativas que contêm o vértice]
    # [ENTRADA: n - tempo (>= 1), j - grau em [k, k+n-1], k - índice]
    # [SAIDA: float - igual a expected_degree_count quando k = 3]
    # [DEPENDENCIAS: self._degree_recurrence]
    def expected_newcomer_degree_count(self, n: int, j: int, k: int) -> float:
        self._check_degree_range(n, j, k)
        return float(self._degree_recurrence(n, k, j, newcomer_weights=True)[-1])

    # [EXPECTED DEGREE COUNTS]
    # [Perfil esperado completo de graus k..j_max pela recorrência (impressa ou de recém-chegados)]
    # [ENTRADA: n - tempo, k - índice, j_max - maior grau, newcomer_weights - usa o peso k + (j-k)(k-2)]
    # [SAIDA: Dict[int, float] - vazio quando n = 0]
    # [DEPENDENCIAS: self._degree_recurrence]
    def expected_degree_counts(self, n: int, k: int, j_max: int, newcomer_weights: bool = False) -> Dict[int, float]:
        self._check_index(k)
        if n < 1:
            return {}
        j_max = min(j_max, k + n - 1)
        values = self._degree_recurrence(n, k, j_max, newcomer_weights)
        return {k + offset: float(value) for offset, value in enumerate(values)}

    def _degree_recurrence(self, n: int, k: int, j_max: int, newcomer_weights: bool) -> np.ndarray:
        degrees = np.arange(k, j_max + 1, dtype=float)
        if newcomer_weights:
            weights = k + (degrees - k) * (k - 2)
        else:
            weights = degrees
        counts = np.zeros_like(degrees)
        counts[0] = 1.0
        for m in range(1, n):
            total = (k - 1) * m + 1
            moved = counts * weights / total
            counts = counts - moved
            counts[1:] += moved[:-1]
            counts[0] += 1.0
        return counts

    # ------------------------------------------------------------------
    # degree profile II: the labeled vertex
    # ------------------------------------------------------------------

    # [LABEL DEGREE PMF]
    # [Distribuição exata de D_{n,j} = k + δ pela soma binomial alternada corrigida (início em r = 0, sinal (-1)^r)]
    # [ENTRADA: n - tempo, j - rótulo em [1, n], k - índice]
    # [SAIDA: Dict[int, Fraction] - massa por δ em 0..n-j; δ = 0 por normalização]
    # [DEPENDENCIAS: generalized_binomial, rising_factorial, UnsupportedEvaluationException]
    def label_degree_pmf(self, n: int, j: int, k: int) -> Dict[int, Fraction]:
        self._check_label(n, j, k)
        span = n - j
        if span > PMF_EXACT_LIMIT:
            raise UnsupportedEvaluationException(
                f"exact pmf supports n - j <= {PMF_EXACT_LIMIT}, got {span}; use label_degree_moment instead"
            )
        shift = Fraction(1, k - 1)
        prefactor = Fraction(factorial(span)) / rising_factorial(j + shift, span)
        pmf: Dict[int, Fraction] = {}
        for delta in range(1, span + 1):
            alternating = Fraction(0)
            for r in range(delta + 1):
                top = n - 2 - Fraction((k - 2) * r, k - 1)
                alternating += (-1) ** r * comb(delta, r) * generalized_binomial(top, span)
            pmf[delta] = prefactor * generalized_binomial(delta + Fraction(2, k - 2), delta) * alternating
        pmf[0] = 1 - sum(pmf.values(), Fraction(0))
        return dict(sorted(pmf.items()))

    # [LABEL DEGREE PMF URN]
    # [Mesma distribuição por programação dinâmica na urna triangular (k + δ(k-2) bolas brancas de 1 + (k-1)t)]
    # [ENTRADA: n - tempo, j - rótulo, k - índice]
    # [SAIDA: Dict[int, Fraction]]
    # [DEPENDENCIAS: Fraction]
    def label_degree_pmf_urn(self, n: int, j: int, k: int) -> Dict[int, Fraction]:
        self._check_label(n, j, k)
        distribution = {0: Fraction(1)}
        for t in range(j, n):
            total = 1 + (k - 1) * t
            step: Dict[int, Fraction] = {}
            for delta, mass in distribution.items():
                hit = Fraction(k + delta * (k - 2), total)
                step[delta + 1] = step.get(delta + 1, Fraction(0)) + mass * hit
                step[delta] = step.get(delta, Fraction(0)) + mass * (1 - hit)
            distribution = step
        return {delta: distribution.get(delta, Fraction(0)) for delta in range(n - j + 1)}

    # [LABEL DEGREE MOMENT]
    # [s-ésimo momento de D_{n,j} pela fórmula com números de Stirling de segunda espécie e símbolos de Pochhammer]
    # [ENTRADA: n - tempo, j - rótulo, k - índice, s - ordem do momento (>= 1)]
    # [SAIDA: float - exato em racionais para n - j <= MOMENT_EXACT_LIMIT, senão por diferenças de log-gama]
    # [DEPENDENCIAS: stirling2, rising_factorial, gammaln]
    def label_degree_moment(self, n: int, j: int, k: int, s: int) -> float:
        self._check_label(n, j, k)
        if s < 1:
            raise DomainException(f"moment order must be at least 1, got {s}", "s")
        span = n - j
        exact = span <= MOMENT_EXACT_LIMIT
        base = Fraction(j) + Fraction(1, k - 1)
        leading = k * (k - 3)
        total = Fraction(leading) ** s if exact else float(leading) ** s
        for r in range(1, s + 1):
            inner = Fraction(0) if exact else 0.0
            for i in range(1, r + 1):
                sign = (-1) ** (r - i)
                shifted = base + Fraction((k - 2) * i, k - 1)
                if exact:
                    ratio = rising_factorial(shifted, span) / rising_factorial(base, span)
                    inner += sign * stirling2(r, i) * rising_factorial(Fraction(k, k - 2), i) * ratio
                else:
                    ratio = math.exp(
                        gammaln(float(shifted) + span) - gammaln(float(shifted))
                        - gammaln(float(base) + span) + gammaln(float(base))
                    )
                    inner += sign * stirling2(r, i) * float(rising_factorial(Fraction(k, k - 2), i)) * ratio
            total += comb(s, r) * leading ** (s - r) * (k - 2) ** r * inner
        return float(total / (k - 2) ** s)

    # [LABEL DEGREE ASYMPTOTIC MEAN]
    # [Média assintótica de D_{n,j}: regime de rótulo fixo para j <= n/log n, senão regime linear com α = j/n]
    # [ENTRADA: n - tempo, j - rótulo, k - índice]
    # [SAIDA: AsymptoticMean - valor e regime aplicado]
    # [DEPENDENCIAS: gammaln]
    def label_degree_asymptotic_mean(self, n: int, j: int, k: int) -> AsymptoticMean:
        self._check_label(n, j, k)
        exponent = (k - 2) / (k - 1)
        scale = k / (k - 2)
        if n > 1 and j <= n / math.log(n):
            value = scale * math.exp(gammaln(j + 1 / (k - 1)) - gammaln(j + 1) + exponent * math.log(n))
            return AsymptoticMean(value=value, regime="fixed_label")
        alpha = j / n
        return AsymptoticMean(value=scale * (k - 3 + alpha ** (-exponent)), regime="linear_label")

    # [ASYMPTOTIC LABEL DEGREE MOMENT]
    # [Limite de E[(D_{n,j} / n^((k-2)/(k-1)))^s] como razão de gamas]
    # [ENTRADA: j - rótulo, k - índice, s - ordem do momento]
    # [SAIDA: float]
    # [DEPENDENCIAS: gammaln]
    def asymptotic_label_degree_moment(self, j: int, k: int, s: int) -> float:
        self._check_index(k)
        return math.exp(
            gammaln(j + 1 / (k - 1)) + gammaln(s + k / (k - 2))
            - gammaln(j + (k - 2) * s / (k - 1) + 1 / (k - 1)) - gammaln(k / (k - 2))
        )

    # ------------------------------------------------------------------
    # clustering
    # ------------------------------------------------------------------

    # [CLUSTERING LIMIT]
    # [Coeficiente de agrupamento assintótico ((k-1)/(2k-1))(2(2k-1)/k - 3F2(1,k-1,k; 2k,k+1; 1))]
    # [ENTRADA: k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: hyp3f2_unit]
    def clustering_limit(self, k: int) -> float:
        self._check_index(k)
        series = hyp3f2_unit(1, k - 1, k, 2 * k, k + 1)
        return (k - 1) / (2 * k - 1) * (2 * (2 * k - 1) / k - series)

    # [CLUSTERING SERIES]
    # [Soma direta de C_j · b_{j,k} com cauda de Euler-Maclaurin; confere clustering_limit]
    # [ENTRADA: k - índice, terms - quantidade de graus somados]
    # [SAIDA: float]
    # [DEPENDENCIAS: self.limit_fractions, self._clustering_values]
    def clustering_series(self, k: int, terms: int = 100_000) -> float:
        self._check_index(k)
        degrees = np.arange(k, k + terms, dtype=float)
        values = self._clustering_values(degrees, k) * self.limit_fractions(k, terms)
        last = values[-1]
        tail = last * (degrees[-1] / k - 0.5)
        return float(np.sum(values) + tail)

    # [LOCAL CLUSTERING]
    # [C(d) = (k-1)(2d-k)/(d(d-1)); vale para vértices iniciais e recém-chegados]
    # [ENTRADA: degree - grau (>= k - 1), k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: nenhuma]
    def local_clustering(self, degree: int, k: int) -> float:
        return (k - 1) * (2 * degree - k) / (degree * (degree - 1))

    # [EXPECTED AVERAGE CLUSTERING]
    # [E[média de C_v sobre os k + n vértices] no tempo n: lei exata do grau dos recém-chegados pela recorrência
    #  e urna de cada vértice inicial, que está em 1 + h(k-2) cliques ativas depois de h subdivisões]
    # [ENTRADA: n - tempo em [1, CLUSTERING_EXACT_LIMIT], k - índice]
    # [SAIDA: float - referência de tamanho finito para a validação do agrupamento]
    # [DEPENDENCIAS: self._degree_recurrence, numpy, UnsupportedEvaluationException]
    def expected_average_clustering(self, n: int, k: int) -> float:
        self._check_gini_args(n, k)
        if n > CLUSTERING_EXACT_LIMIT:
            raise UnsupportedEvaluationException(
                f"expected average clustering supports n <= {CLUSTERING_EXACT_LIMIT}, got {n}; use clustering_limit instead"
            )
        newcomer_degrees = np.arange(k, k + n, dtype=float)
        newcomer_counts = self._degree_recurrence(n, k, k + n - 1, newcomer_weights=True)

        hits = np.arange(n + 1, dtype=float)
        initial_weights = 1.0 + hits * (k - 2)
        initial = np.zeros(n + 1)
        initial[0] = 1.0
        for m in range(n):
            moved = initial * initial_weights / ((k - 1) * m + 1)
            initial = initial - moved
            initial[1:] += moved[:-1]

        newcomer_part = float(np.dot(newcomer_counts, self._clustering_values(newcomer_degrees, k)))
        initial_part = k * float(np.dot(initial, self._clustering_values(hits + k - 1, k)))
        return (newcomer_part + initial_part) / (n + k)

    def _clustering_values(self, degrees: np.ndarray, k: int) -> np.ndarray:
        return (k - 1) * (2 * degrees - k) / (degrees * (degrees - 1))

    # ------------------------------------------------------------------
    # Lorenz curve and Gini index
    # ------------------------------------------------------------------

    # [THEORETICAL LORENZ]
    # [Curva de Lorenz por classes: n+2 pontos (i/(n+1), soma das i menores contribuições γ(j,k))]
    # [ENTRADA: n - tempo (>= 1), k - índice, exact - usa Fraction quando verdadeiro]
    # [SAIDA: List[Tuple] - pontos não decrescentes terminando na soma parcial]
    # [DEPENDENCIAS: self.limit_fractions, self.limit_fraction]
    def theoretical_lorenz(self, n: int, k: int, exact: bool = False) -> List[Tuple]:
        self._check_index(k)
        if n < 1:
            raise DomainException(f"Lorenz curve requires n >= 1, got {n}", "n")
        if exact:
            fractions = [self.limit_fraction(k, k)]
            for j in range(k + 1, k + n + 1):
                fractions.append(fractions[-1] * Fraction(j - 1, j + k - 1))
            points = [(Fraction(0), Fraction(0))]
            cumulative = Fraction(0)
            for i, value in enumerate(reversed(fractions), start=1):
                cumulative += value
                points.append((Fraction(i, n + 1), cumulative))
            return points
        ascending = self.limit_fractions(k, n + 1)[::-1]
        cumulative = np.concatenate(([0.0], np.cumsum(ascending)))
        positions = np.arange(n + 2, dtype=float) / (n + 1)
        return list(zip(positions.tolist(), cumulative.tolist()))

    # [GINI TRAPEZOID]
    # [Gini pela regra do trapézio sobre theoretical_lorenz, conferência da forma fechada]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: self.theoretical_lorenz, numpy]
    def gini_trapezoid(self, n: int, k: int) -> float:
        points = np.asarray(self.theoretical_lorenz(n, k), dtype=float)
        widths = np.diff(points[:, 0])
        heights = points[1:, 1] + points[:-1, 1]
        return float(1.0 - np.sum(widths * heights))

    # [THEORETICAL GINI]
    # [Gini da curva por classes em forma fechada exata: 1 - ((3k-2)/(k-2) - 2Γ(2k-2)(2(k-1)n+5k-4)Γ(k+n+1)/((k-2)Γ(k-1)Γ(2k+n)))/(n+1)]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: float - igual à integração trapezoidal de theoretical_lorenz]
    # [DEPENDENCIAS: _gamma_tail, Fraction]
    def theoretical_gini(self, n: int, k: int) -> float:
        self._check_gini_args(n, k)
        head = Fraction(factorial(2 * k - 3), factorial(k - 2))
        weighted = Fraction(3 * k - 2, k - 2) - 2 * head * (2 * (k - 1) * n + 5 * k - 4) * self._gamma_tail(n, k) / (k - 2)
        return float(1 - weighted / (n + 1))

    # [GINI PRINTED CLOSED FORM]
    # [Forma fechada com o fator 2^(2k-1)Γ(k-1/2)/Γ(1/2), reportada ao lado da forma corrigida]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: _gamma_tail, Fraction]
    def gini_printed_closed_form(self, n: int, k: int) -> float:
        self._check_gini_args(n, k)
        # 2^(2k-1)Γ(k-1/2)/Γ(1/2) = 4Γ(2k-2)/Γ(k-1)
        head = 4 * Fraction(factorial(2 * k - 3), factorial(k - 2))
        weighted = Fraction(3 * k - 2, k - 2) - head * ((k - 1) * n + 2) * self._gamma_tail(n, k) / (k - 2)
        return float(1 - weighted / (n + 1))

    # ------------------------------------------------------------------
    # clique depth
    # ------------------------------------------------------------------

    # [EXPECTED TOTAL DEPTH]
    # [E[ext] = (kn - n + 1) Σ_{i=0}^{n-1} k/(k + (k-1)i)]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: math.fsum]
    def expected_total_depth(self, n: int, k: int) -> float:
        self._check_index(k)
        if n < 0:
            raise DomainException(f"n must be non-negative, got {n}", "n")
        return (k * n - n + 1) * math.fsum(k / (k + (k - 1) * i) for i in range(n))

    # [EXPECTED TOTAL DEPTH EXACT]
    # [Mesma média da profundidade total em racionais exatos]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: Fraction]
    # [DEPENDENCIAS: Fraction]
    def expected_total_depth_exact(self, n: int, k: int) -> Fraction:
        self._check_index(k)
        return (k * n - n + 1) * sum((Fraction(k, k + (k - 1) * i) for i in range(n)), Fraction(0))

    # [EXPECTED TOTAL DEPTH DIGAMMA]
    # [Média da profundidade total pela diferença de digammas]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: eval_digamma]
    def expected_total_depth_digamma(self, n: int, k: int) -> float:
        self._check_index(k)
        shift = k / (k - 1)
        return (k * n - n + 1) * shift * (eval_digamma(n + shift) - eval_digamma(shift))

    # [TOTAL DEPTH SECOND MOMENT]
    # [E[ext²] pela recorrência exata sobre (E[ext], E[Σ prof²], E[ext²]) semeada com k²]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: float - racional exato convertido quando n <= DEPTH_EXACT_LIMIT]
    # [DEPENDENCIAS: self._depth_recurrence]
    def total_depth_second_moment(self, n: int, k: int) -> float:
        self._check_depth_args(n, k)
        return float(self._depth_recurrence(n, k, exact=n <= DEPTH_EXACT_LIMIT)[2])

    # [TOTAL DEPTH SECOND MOMENT EXACT]
    # [E[ext²] em racionais exatos]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: Fraction]
    # [DEPENDENCIAS: self._depth_recurrence]
    def total_depth_second_moment_exact(self, n: int, k: int) -> Fraction:
        self._check_depth_args(n, k)
        return self._depth_recurrence(n, k, exact=True)[2]

    # [EXPECTED SQUARED DEPTH SUM]
    # [E[Σ profundidade²] sobre as cliques ativas]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: self._depth_recurrence]
    def expected_squared_depth_sum(self, n: int, k: int) -> float:
        self._check_depth_args(n, k)
        return float(self._depth_recurrence(n, k, exact=n <= DEPTH_EXACT_LIMIT)[1])

    def _depth_recurrence(self, n: int, k: int, exact: bool):
        one = Fraction(1) if exact else 1.0
        depth_sum = k * one
        squared_sum = k * one
        second_moment = k * k * one
        for m in range(2, n + 1):
            active = (k - 1) * (m - 1) + 1
            ratio = one * (k - 1) / active
            second_moment = (
                (1 + 2 * ratio) * second_moment
                + (k - 1) * ratio * squared_sum
                + (2 * k + 2 * k * ratio) * depth_sum
                + k * k
            )
            squared_sum = (1 + ratio) * squared_sum + one * 2 * k * depth_sum / active + k
            depth_sum = (1 + ratio) * depth_sum + k
        return depth_sum, squared_sum, second_moment

    # [PRINTED SECOND MOMENT LEADING]
    # [Termo dominante ((k-1)n + k)((k-1)n + 1) k E(k, n) com E(k, n) em digamma/trigamma, só para comparação]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: eval_digamma, eval_trigamma]
    def printed_second_moment_leading(self, n: int, k: int) -> float:
        self._check_depth_args(n, k)
        km1 = k - 1
        psi_base = eval_digamma(k / km1)
        inner = math.fsum(eval_digamma((km1 * j + 2 * k - 1) / km1) / (km1 * j + k) for j in range(1, n))
        terms = []
        for i in range(1, n):
            upper = (km1 * i + 2 * k - 1) / km1
            braces = (
                (2 * k * k - 2 * k) * inner
                - (2 * psi_base - k + 1) * eval_digamma(upper)
                + 2 * k * (i * eval_digamma((km1 * i + k) / km1) + eval_trigamma(upper))
            )
            terms.append(braces / ((km1 * i + 2 * k - 1) * (km1 * i + k)))
        return (km1 * n + k) * (km1 * n + 1) * k * math.fsum(terms)

    # [TOTAL DEPTH MOMENTS]
    # [Reúne média (duas formas), segundo momento, Σ profundidade² e o termo impresso]
    # [ENTRADA: n - tempo (>= 1), k - índice]
    # [SAIDA: TotalDepthMoments]
    # [DEPENDENCIAS: métodos de profundidade do serviço]
    def total_depth_moments(self, n: int, k: int) -> TotalDepthMoments:
        self._check_depth_args(n, k)
        depth_sum, squared_sum, second_moment = self._depth_recurrence(n, k, exact=n <= DEPTH_EXACT_LIMIT)
        return TotalDepthMoments(
            mean=self.expected_total_depth(n, k),
            mean_digamma=self.expected_total_depth_digamma(n, k),
            second_moment=float(second_moment),
            squared_depth_sum=float(squared_sum),
            printed_second_moment_leading=self.printed_second_moment_leading(n, k),
            leading_order=k * n * math.log(n) if n > 1 else 0.0,
        )

    # ------------------------------------------------------------------
    # diameter
    # ------------------------------------------------------------------

    # [DIAMETER CONSTANTS]
    # [Resolve η* - 1 - log η* = log k (η* > 1) e a equação de a com Γ(k+1)Γ((k-1)a)/Γ((k-1)a+k); c = 2/Σ(k-1)/(ℓ+a(k-1))]
    # [ENTRADA: k - índice]
    # [SAIDA: DiameterConstants com resíduos das duas equações]
    # [DEPENDENCIAS: brentq, gammaln, NumericException]
    def diameter_constants(self, k: int) -> DiameterConstants:
        self._check_index(k)
        log_k = math.log(k)

        def eta_equation(eta: float) -> float:
            return eta - 1.0 - math.log(eta) - log_k

        eta_star = self._solve(eta_equation, *_ETA_BRACKET, name="eta*")
        a_low, a_high = self._scan_bracket(lambda a: self._height_log_equation(a, k), k)
        a = self._solve(lambda value: self._height_log_equation(value, k), a_low, a_high, name="a")
        levels = np.arange(k, dtype=float)
        height_constant = 1.0 / float(np.sum((k - 1) / (levels + a * (k - 1))))
        return DiameterConstants(
            eta_star=eta_star,
            a=a,
            height_constant=height_constant,
            c=2.0 * height_constant,
            upper_bound_constant=2.0 * eta_star / (k - 1),
            eta_residual=abs(eta_equation(eta_star)),
            a_residual=abs(math.expm1(self._height_log_equation(a, k))),
        )

    # [DIAMETER ASYMPTOTE]
    # [c · log n com c = 2 x constante de altura]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: self.diameter_constants]
    def diameter_asymptote(self, n: int, k: int) -> float:
        return self.diameter_constants(k).c * math.log(n)

    # [DIAMETER UPPER BOUND]
    # [Limite superior 2η*/(k-1) · log n]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: self.diameter_constants]
    def diameter_upper_bound(self, n: int, k: int) -> float:
        return self.diameter_constants(k).upper_bound_constant * math.log(n)

    def _height_log_equation(self, a: float, k: int) -> float:
        scaled = (k - 1) * a
        levels = np.arange(k, dtype=float)
        exponent = ((k - 1) * (a + 1) - 1) * float(np.sum(1.0 / (levels + scaled)))
        return float(gammaln(k + 1) + gammaln(scaled) - gammaln(scaled + k)) + exponent

    def _scan_bracket(self, function, k: int) -> Tuple[float, float]:
        grid = np.geomspace(1e-3, 1e3, 241)
        values = [function(a) for a in grid]
        for index in range(len(grid) - 1):
            if values[index] > 0 >= values[index + 1]:
                return float(grid[index]), float(grid[index + 1])
        raise NumericException(f"no sign change found while bracketing a for k={k}", details={"k": k})

    def _solve(self, function, low: float, high: float, name: str) -> float:
        try:
            root = brentq(function, low, high, xtol=_ROOT_XTOL, rtol=_ROOT_RTOL, maxiter=_ROOT_MAXITER)
        except (ValueError, RuntimeError) as e:
            raise NumericException(f"root finding for {name} failed on [{low}, {high}]: {e}") from e
        logger.debug(f"Solved {name} = {root!r}")
        return float(root)

    # ------------------------------------------------------------------
    # sparsity and report assembly
    # ------------------------------------------------------------------

    # [LINK DENSITY]
    # [Densidade determinística 2E/((k+n)(k+n-1)) com E = k(k-1)/2 + nk]
    # [ENTRADA: n - tempo, k - índice]
    # [SAIDA: float]
    # [DEPENDENCIAS: nenhuma]
    def link_density(self, n: int, k: int) -> float:
        vertices = k + n
        edges = k * (k - 1) // 2 + n * k
        return 2 * edges / (vertices * (vertices - 1))

    # [THEORY REPORT]
    # [Reúne todas as quantidades teóricas de (k, n) para validação e saída da CLI]
    # [ENTRADA: k - índice, n - tempo (>= 1), j_max - maior grau reportado (opcional)]
    # [SAIDA: TheoryReport]
    # [DEPENDENCIAS: todos os métodos de avaliação do serviço]
    def theory_report(self, k: int, n: int, j_max: Optional[int] = None) -> TheoryReport:
        self._check_gini_args(n, k)
        if j_max is None:
            j_max = k + min(n, self.degree_window)
        fractions = {j: self.limit_fraction(j, k) for j in range(k, j_max + 1)}
        constants = self.diameter_constants(k)
        depth = self.total_depth_moments(n, k)
        log_n = math.log(n) if n > 1 else 0.0
        logger.info(f"Evaluated theory for k={k}, n={n} over degrees {k}..{j_max}")
        return TheoryReport(
            k=k,
            n=n,
            b_fractions={j: float(value) for j, value in fractions.items()},
            b_exact={j: str(value) for j, value in fractions.items()},
            expected_counts=self.expected_degree_counts(n, k, j_max),
            newcomer_expected_counts=self.expected_degree_counts(n, k, j_max, newcomer_weights=True),
            clustering_limit=self.clustering_limit(k),
            clustering_expected=self.expected_average_clustering(n, k) if n <= CLUSTERING_EXACT_LIMIT else None,
            gini_closed_form=self.theoretical_gini(n, k),
            gini_printed_form=self.gini_printed_closed_form(n, k),
            gini_trapezoid=self.gini_trapezoid(n, k),
            lorenz_points=self.theoretical_lorenz(n, k),
            depth_mean=depth.mean,
            depth_second_moment=depth.second_moment,
            depth=depth,
            diameter_constants=constants,
            diameter_asymptote=constants.c * log_n,
            diameter_upper_bound=constants.upper_bound_constant * log_n,
            link_density=self.link_density(n, k),
            l1_bound=self.l1_bound(k),
        )

    # ------------------------------------------------------------------
    # helpers
    # ------------------------------------------------------------------

    def _gamma_tail(self, n: int, k: int) -> Fraction:
        # Γ(k+n+1)/Γ(2k+n) as a short product
        denominator = 1
        for m in range(k + n + 1, 2 * k + n):
            denominator *= m
        return Fraction(1, denominator)

    def _check_index(self, k: int):
        if k < 3:
            raise DomainException(f"k must be at least 3, got {k}", "k")

    def _check_degree_range(self, n: int, j: int, k: int):
        self._check_index(k)
        if n < 1:
            raise DomainException(f"n must be at least 1, got {n}", "n")
        if not k <= j <= k + n - 1:
            raise DomainException(f"degree j must be in [{k}, {k + n - 1}], got {j}", "j")

    def _check_label(self, n: int, j: int, k: int):
        self._check_index(k)
        if not 1 <= j <= n:
            raise DomainException(f"label j must be in [1, {n}], got {j}", "j")

    def _check_gini_args(self, n: int, k: int):
        self._check_index(k)
        if n < 1:
            raise DomainException(f"n must be at least 1, got {n}", "n")

    def _check_depth_args(self, n: int, k: int):
        self._check_index(k)
        if n < 1:
            raise DomainException(f"n must be at least 1, got {n}", "n")
