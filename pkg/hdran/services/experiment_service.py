import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from hdran.core.config import settings
from hdran.core.exceptions import DomainException, ResourceBudgetException
from hdran.schemas.experiments import (
    MEASUREMENTS,
    ConcentrationRow,
    DepthScalingRow,
    NormalityResult,
    ReplicateSummary,
    ValidationRow,
    WienerStudyResult,
)
from hdran.schemas.metrics import LorenzCurve
from hdran.schemas.theory import TheoryReport
from hdran.services.generator_service import GeneratorService
from hdran.services.metrics_service import MetricsService
from hdran.services.theory_service import TheoryService
from hdran.utils.seeding import replicate_seed

logger = logging.getLogger(__name__)

CLUSTERING_TOLERANCE = 0.005
DEFAULT_DEGREE_ROWS = 10
HISTOGRAM_BINS = 20
MIN_NORMALITY_SAMPLES = 20


# [MEASURE REPLICATE]
# [Gera uma réplica a partir da semente derivada e mede o conjunto pedido; função de módulo para o pool de processos]
# [ENTRADA: task - (k, n, índice, semente, medições, orçamento de vértices, orçamento de cliques)]
# [SAIDA: ReplicateSummary]
# [DEPENDENCIAS: GeneratorService, MetricsService]
def measure_replicate(task: Tuple[int, int, int, int, Tuple[str, ...], int, int]) -> ReplicateSummary:
    k, n, index, seed, measurements, vertex_budget, clique_budget = task
    generator = GeneratorService(clique_budget=clique_budget)
    metrics = MetricsService(vertex_budget=vertex_budget)
    net = generator.generate(k, n, seed)
    fields = {"replicate_index": index, "seed": seed, "k": k, "n": n}

    histogram = metrics.degree_histogram(net)
    if "degrees" in measurements:
        fields["degree_counts"] = histogram.counts_newcomers
        fields["degree_fractions"] = histogram.newcomer_fractions()
    if "clustering" in measurements:
        fields["clustering_avg"] = metrics.clustering_profile(net).average
    if "gini" in measurements:
        fields["gini"] = metrics.vertex_gini(net.degrees())
        fields["gini_class"] = metrics.class_lorenz_gini(histogram)
    if "lorenz" in measurements:
        fields["lorenz"] = metrics.lorenz_arrays(net.degrees())[1].tolist()
    if "depth" in measurements:
        fields["total_depth"] = int(net.active_depths().sum())
    if "wiener" in measurements or "diameter" in measurements:
        report = metrics.distance_metrics(net)
        fields["wiener"] = report.wiener
        fields["diameter"] = report.diameter
    logger.debug(f"Replicate {index} (seed {seed}) measured {sorted(measurements)}")
    return ReplicateSummary(**fields)


# [MEAN AND SE]
# [Média e erro padrão amostral (zero com uma observação)]
# [ENTRADA: values - sequência numérica não vazia]
# [SAIDA: Tuple[float, float]]
# [DEPENDENCIAS: numpy]
def mean_and_se(values: Iterable[float]) -> Tuple[float, float]:
    data = np.asarray(list(values), dtype=float)
    if data.size == 0:
        raise DomainException("cannot aggregate an empty sample", "values")
    if data.size == 1:
        return float(data[0]), 0.0
    return float(data.mean()), float(data.std(ddof=1) / math.sqrt(data.size))


# [EXPERIMENT SERVICE]
# [Replicação Monte Carlo com sementes derivadas, validação teoria x simulação, sonda de concentração e estudo de Wiener]
# [ENTRADA: theory_service, workers, replicate_budget, vertex_budget, clique_budget (padrões de settings)]
# [SAIDA: instância ExperimentService]
# [DEPENDENCIAS: measure_replicate, TheoryService, ProcessPoolExecutor, scipy.stats]
class ExperimentService:

    def __init__(
        self,
        theory_service: Optional[TheoryService] = None,
        workers: Optional[int] = None,
        replicate_budget: Optional[int] = None,
        vertex_budget: Optional[int] = None,
        clique_budget: Optional[int] = None,
    ):
        self.theory_service = theory_service or TheoryService()
        self.workers = workers if workers is not None else settings.workers
        self.replicate_budget = replicate_budget if replicate_budget is not None else settings.replicate_budget
        self.vertex_budget = vertex_budget if vertex_budget is not None else settings.vertex_budget
        self.clique_budget = clique_budget if clique_budget is not None else settings.clique_budget

    # [RUN REPLICATES]
    # [Executa reps réplicas independentes; resultado ordenado por índice e idêntico em execução serial ou paralela]
    # [ENTRADA: k, n, reps, master_seed, measurements - subconjunto de MEASUREMENTS, long_run - libera o orçamento]
    # [SAIDA: List[ReplicateSummary]]
    # [DEPENDENCIAS: measure_replicate, replicate_seed, ResourceBudgetException]
    def run_replicates(
        self, k: int, n: int, reps: int, master_seed: int, measurements: Iterable[str], long_run: bool = False
    ) -> List[ReplicateSummary]:
        wanted = self._check_measurements(measurements)
        if reps < 1:
            raise DomainException(f"reps must be at least 1, got {reps}", "reps")
        self._check_budget(k, n, reps, wanted, long_run)

        tasks = [
            (k, n, index, replicate_seed(master_seed, index), tuple(sorted(wanted)), self.vertex_budget, self.clique_budget)
            for index in range(reps)
        ]
        logger.info(f"Running {reps} replicates of k={k}, n={n} with {self.workers} worker(s)")
        if self.workers > 1 and reps > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                summaries = list(pool.map(measure_replicate, tasks, chunksize=max(1, reps // (4 * self.workers))))
        else:
            summaries = [measure_replicate(task) for task in tasks]
        return sorted(summaries, key=lambda summary: summary.replicate_index)

    # [VALIDATE AGAINST THEORY]
    # [Compara médias das réplicas com o relatório teórico: graus, agrupamento (valor esperado em n, limite só informativo), Gini e profundidade]
    # [ENTRADA: summaries - réplicas de um mesmo (k, n), theory - TheoryReport do mesmo (k, n), degree_rows - quantidade de graus]
    # [SAIDA: List[ValidationRow]]
    # [DEPENDENCIAS: mean_and_se, ValidationRow.build]
    def validate_against_theory(
        self, summaries: Sequence[ReplicateSummary], theory: TheoryReport, degree_rows: int = DEFAULT_DEGREE_ROWS
    ) -> List[ValidationRow]:
        if not summaries:
            raise DomainException("validation requires at least one replicate", "summaries")
        mismatched = [s.replicate_index for s in summaries if (s.k, s.n) != (theory.k, theory.n)]
        if mismatched:
            raise DomainException(
                f"replicates {mismatched[:5]} do not match theory (k={theory.k}, n={theory.n})", "summaries"
            )
        k, n = theory.k, theory.n
        rows: List[ValidationRow] = []

        if summaries[0].degree_counts and n >= 1:
            rows.extend(self._degree_rows(summaries, theory, degree_rows))

        if summaries[0].clustering_avg is not None:
            mean, se = mean_and_se(s.clustering_avg for s in summaries)
            limit_bound = CLUSTERING_TOLERANCE + 3 * se
            if theory.clustering_expected is not None:
                rows.append(ValidationRow.build("clustering", mean, se, theory.clustering_expected, 3 * se + 1e-9))
                rows.append(ValidationRow.build("clustering_limit", mean, se, theory.clustering_limit, limit_bound, informational=True))
            else:
                rows.append(ValidationRow.build("clustering", mean, se, theory.clustering_limit, limit_bound))

        if summaries[0].gini is not None:
            mean, se = mean_and_se(s.gini for s in summaries)
            rows.append(ValidationRow.build("gini_vertex", mean, se, theory.gini_closed_form, 1.0, informational=True))
            mean, se = mean_and_se(s.gini_class for s in summaries)
            rows.append(ValidationRow.build("gini_class", mean, se, theory.gini_closed_form, 1.0, informational=True))

        if summaries[0].total_depth is not None:
            mean, se = mean_and_se(s.total_depth for s in summaries)
            rows.append(ValidationRow.build("total_depth", mean, se, theory.depth_mean, 3 * se + 1e-9 * max(1.0, theory.depth_mean)))
            mean, se = mean_and_se(float(s.total_depth) ** 2 for s in summaries)
            rows.append(
                ValidationRow.build(
                    "total_depth_second_moment", mean, se, theory.depth_second_moment,
                    3 * se + 1e-9 * max(1.0, theory.depth_second_moment),
                )
            )
        failed = [row.metric for row in rows if not row.passed and not row.informational]
        if failed:
            logger.warning(f"Validation rows failed for k={k}, n={n}: {failed}")
        return rows

    def _degree_rows(self, summaries: Sequence[ReplicateSummary], theory: TheoryReport, degree_rows: int) -> List[ValidationRow]:
        k, n = theory.k, theory.n
        # b_{j,k} is the limit of the newcomer profile only at k = 3
        printed_is_exact = k == 3
        rows = []
        for j in range(k, min(k + degree_rows, k + n)):
            mean_fraction, se_fraction = mean_and_se(s.degree_counts.get(j, 0) / n for s in summaries)
            mean_count = mean_fraction * n
            se_count = se_fraction * n
            if j in theory.b_fractions:
                rows.append(
                    ValidationRow.build(
                        f"degree_limit[{j}]", mean_count, se_count, theory.b_fractions[j] * n,
                        theory.l1_bound + 3 * se_count, informational=not printed_is_exact,
                    )
                )
            if j in theory.newcomer_expected_counts:
                rows.append(
                    ValidationRow.build(
                        f"degree_expected[{j}]", mean_count, se_count, theory.newcomer_expected_counts[j],
                        3 * se_count + 1e-9,
                    )
                )
            if j in theory.expected_counts:
                rows.append(
                    ValidationRow.build(
                        f"degree_printed_recurrence[{j}]", mean_count, se_count, theory.expected_counts[j],
                        3 * se_count + 1e-9, informational=True,
                    )
                )
        return rows

    # [CONCENTRATION PROBE]
    # [Probabilidade empírica de |X_{n,j} - média| >= λ ao lado do limite exp(-λ²/(8kn)), com sinalização acima de 3 EPs binomiais]
    # [ENTRADA: k, n, reps, master_seed, j - grau, lambda_grid - valores de λ (padrão: points valores em [0, 2√(8kn)])]
    # [SAIDA: List[ConcentrationRow]]
    # [DEPENDENCIAS: self.run_replicates, numpy]
    def concentration_probe(
        self, k: int, n: int, reps: int, master_seed: int, j: int,
        lambda_grid: Optional[Sequence[float]] = None, points: int = 20, long_run: bool = False,
    ) -> List[ConcentrationRow]:
        if reps < 1000:
            logger.warning(f"Concentration probe with {reps} replicates gives coarse tail estimates")
        if lambda_grid is None:
            lambda_grid = np.linspace(0.0, 2.0 * math.sqrt(8 * k * n), points).tolist()
        summaries = self.run_replicates(k, n, reps, master_seed, {"degrees"}, long_run=long_run)
        counts = np.array([s.degree_counts.get(j, 0) for s in summaries], dtype=float)
        deviations = np.abs(counts - counts.mean())
        rows = []
        for lam in lambda_grid:
            empirical = float(np.mean(deviations >= lam))
            bound = math.exp(-lam * lam / (8 * k * n))
            noise = 3 * math.sqrt(bound * (1 - bound) / reps)
            rows.append(
                ConcentrationRow(lam=float(lam), empirical_tail=empirical, bound=bound, noise=noise, violated=empirical - bound > noise)
            )
        return rows

    # [NORMALITY TEST]
    # [Teste omnibus de assimetria e curtose (D'Agostino-Pearson) com p-valor qui-quadrado assintótico]
    # [ENTRADA: samples - pelo menos 20 valores com variância positiva]
    # [SAIDA: NormalityResult - estatística, p-valor, assimetria e curtose]
    # [DEPENDENCIAS: scipy.stats.normaltest, scipy.stats.skew, scipy.stats.kurtosis]
    def normality_test(self, samples: Sequence[float]) -> NormalityResult:
        data = np.asarray(samples, dtype=float)
        if data.size < MIN_NORMALITY_SAMPLES:
            raise DomainException(f"normality test requires at least {MIN_NORMALITY_SAMPLES} samples, got {data.size}", "samples")
        if np.ptp(data) == 0:
            raise DomainException("normality test requires positive sample variance", "samples")
        statistic, p_value = stats.normaltest(data)
        return NormalityResult(
            statistic=float(statistic),
            p_value=float(p_value),
            skewness=float(stats.skew(data)),
            kurtosis=float(stats.kurtosis(data)),
            sample_size=int(data.size),
        )

    # [WIENER STUDY]
    # [Índices de Wiener exatos de reps réplicas com histograma, assimetria, teste de normalidade e razão com √(3π)n^(5/2)/22 para k = 3]
    # [ENTRADA: k, n, reps, master_seed, long_run]
    # [SAIDA: WienerStudyResult]
    # [DEPENDENCIAS: self.run_replicates, self.normality_test, numpy.histogram]
    def wiener_study(self, k: int, n: int, reps: int, master_seed: int, long_run: bool = False) -> WienerStudyResult:
        if k + n > self.vertex_budget:
            raise ResourceBudgetException(
                "exact distance vertex", self.vertex_budget, k + n, hint="choose a smaller n or use sampled distances"
            )
        summaries = self.run_replicates(k, n, reps, master_seed, {"wiener"}, long_run=long_run)
        samples = [s.wiener for s in summaries]
        counts, edges = np.histogram(np.asarray(samples, dtype=float), bins=HISTOGRAM_BINS)
        histogram = [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(len(counts))]
        normality = self.normality_test(samples)
        mean = float(np.mean(samples))
        trend_ratio = None
        if k == 3 and n > 0:
            trend_ratio = mean / (math.sqrt(3 * math.pi) * n ** 2.5 / 22)
        logger.info(f"Wiener study k={k}, n={n}, reps={reps}: skewness={normality.skewness:.4f}, p={normality.p_value:.3e}")
        return WienerStudyResult(
            k=k, n=n, reps=reps, samples=samples, histogram=histogram,
            skewness=normality.skewness, normality=normality, mean=mean, trend_ratio=trend_ratio,
        )

    # [POWER LAW SLOPE]
    # [Inclinação log-log por mínimos quadrados das frações médias de grau no intervalo [j_min, j_max]]
    # [ENTRADA: summaries - réplicas com graus, j_min, j_max]
    # [SAIDA: float]
    # [DEPENDENCIAS: numpy.polyfit]
    def power_law_slope(self, summaries: Sequence[ReplicateSummary], j_min: int = 10, j_max: int = 40) -> float:
        degrees = np.arange(j_min, j_max + 1)
        means = np.array([np.mean([s.degree_fractions.get(int(j), 0.0) for s in summaries]) for j in degrees])
        observed = means > 0
        if np.count_nonzero(observed) < 2:
            raise DomainException(f"too few observed degrees in [{j_min}, {j_max}] to fit a slope", "summaries")
        slope, _ = np.polyfit(np.log(degrees[observed]), np.log(means[observed]), 1)
        return float(slope)

    # [AVERAGED LORENZ]
    # [Média ponto a ponto das curvas de Lorenz por vértice de reps réplicas]
    # [ENTRADA: k, n, reps, master_seed]
    # [SAIDA: LorenzCurve - pontos médios e Gini da curva média]
    # [DEPENDENCIAS: self.run_replicates, numpy]
    def averaged_lorenz(self, k: int, n: int, reps: int, master_seed: int, long_run: bool = False) -> LorenzCurve:
        summaries = self.run_replicates(k, n, reps, master_seed, {"lorenz"}, long_run=long_run)
        curve = np.mean(np.array([s.lorenz for s in summaries], dtype=float), axis=0)
        positions = np.arange(curve.size, dtype=float) / (curve.size - 1)
        area = np.sum(np.diff(positions) * (curve[1:] + curve[:-1])) / 2.0
        return LorenzCurve(points=list(zip(positions.tolist(), curve.tolist())), gini=float(1.0 - 2.0 * area))

    # [DEPTH SCALING]
    # [Profundidade total média por n e a razão média / (k n log n)]
    # [ENTRADA: k, n_values - tempos (>= 2), reps, master_seed, long_run]
    # [SAIDA: List[DepthScalingRow]]
    # [DEPENDENCIAS: self.run_replicates, mean_and_se]
    def depth_scaling(self, k: int, n_values: Sequence[int], reps: int, master_seed: int, long_run: bool = False) -> List[DepthScalingRow]:
        rows = []
        for n in n_values:
            summaries = self.run_replicates(k, n, reps, master_seed, {"depth"}, long_run=long_run)
            mean, se = mean_and_se(s.total_depth for s in summaries)
            rows.append(DepthScalingRow(n=n, mean_total_depth=mean, standard_error=se, scaled=mean / (k * n * math.log(n))))
        return rows

    def _check_measurements(self, measurements: Iterable[str]) -> FrozenSet[str]:
        wanted = frozenset(measurements)
        unknown = wanted - MEASUREMENTS
        if unknown:
            raise DomainException(f"unknown measurements {sorted(unknown)}; choose from {sorted(MEASUREMENTS)}", "measurements")
        return wanted

    def _check_budget(self, k: int, n: int, reps: int, wanted: FrozenSet[str], long_run: bool):
        work = k * n * reps
        if work > self.replicate_budget and not long_run:
            raise ResourceBudgetException(
                "replicate work (k*n*reps)", self.replicate_budget, work, hint="pass --long to run full-scale experiments"
            )
        if {"wiener", "diameter"} & wanted and k + n > self.vertex_budget:
            raise ResourceBudgetException(
                "exact distance vertex", self.vertex_budget, k + n, hint="choose a smaller n or use sampled distances"
            )
