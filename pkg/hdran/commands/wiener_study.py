import argparse
import logging

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import WienerStudyParams
from hdran.services.experiment_service import ExperimentService

logger = logging.getLogger(__name__)

NORMALITY_ALPHA = 0.01


# [REGISTER WIENER STUDY]
# [Registra o subcomando wiener-study: distribuição do índice de Wiener e teste de normalidade]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("wiener-study", help="Wiener index distribution and normality test")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, default=None, help="Steps (500, or 2000 with --long)")
    parser.add_argument("--reps", type=int, default=None, help="Replicates (200, or 500 with --long)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--long", dest="long_run", action="store_true")
    parser.add_argument("--out-prefix", default="wiener_")
    parser.set_defaults(handler=handle_wiener_study)


# [HANDLE WIENER STUDY]
# [Executa o estudo, grava samples.csv e histogram.csv e imprime assimetria e veredito de normalidade]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída (o veredito não altera o código)]
# [DEPENDENCIAS: WienerStudyParams, ExperimentService, ReportRepository]
def handle_wiener_study(args: argparse.Namespace) -> int:
    params = WienerStudyParams(
        k=args.k, n=args.n, reps=args.reps, seed=args.seed, long_run=args.long_run, out_prefix=args.out_prefix
    )
    result = ExperimentService().wiener_study(
        params.k, params.resolved_n(), params.resolved_reps(), params.seed, long_run=params.long_run
    )
    reports = ReportRepository()
    reports.write_csv(
        f"{params.out_prefix}samples.csv", ("replicate", "wiener"), list(enumerate(result.samples))
    )
    reports.write_csv(f"{params.out_prefix}histogram.csv", ("left", "right", "count"), result.histogram)

    verdict = "reject" if result.normality.rejects(NORMALITY_ALPHA) else "retain"
    print(f"k={result.k} n={result.n} reps={result.reps} mean={result.mean:.6g}")
    print(f"skewness={result.skewness:.6f} kurtosis={result.normality.kurtosis:.6f}")
    print(f"normality statistic={result.normality.statistic:.6f} p_value={result.normality.p_value:.6e} verdict={verdict} (alpha={NORMALITY_ALPHA})")
    if result.trend_ratio is not None:
        print(f"trend_ratio={result.trend_ratio:.6f}")
    return EXIT_OK
