import argparse
import logging
import math

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import TheoryParams
from hdran.services.theory_service import TheoryService

logger = logging.getLogger(__name__)


# [REGISTER THEORY]
# [Registra o subcomando theory: avaliação das formas fechadas de (k, n)]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("theory", help="Evaluate every closed form for (k, n)")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--j-max", type=int, default=None, help="Largest degree in the degree tables")
    parser.add_argument("--out", default=None, help="JSON report path")
    parser.set_defaults(handler=handle_theory)


# [HANDLE THEORY]
# [Avalia o relatório teórico, imprime os valores principais e grava o JSON quando pedido]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: TheoryParams, TheoryService, ReportRepository]
def handle_theory(args: argparse.Namespace) -> int:
    params = TheoryParams(k=args.k, n=args.n, j_max=args.j_max, out=args.out)
    report = TheoryService().theory_report(params.k, params.n, params.j_max)
    constants = report.diameter_constants
    print(f"k={report.k} n={report.n}")
    print(f"clustering_limit={report.clustering_limit:.6f}")
    if report.clustering_expected is not None:
        print(f"clustering_expected={report.clustering_expected:.6f}")
    print(f"gini_closed_form={report.gini_closed_form:.6f} gini_printed_form={report.gini_printed_form:.6f}")
    print(f"expected_total_depth={report.depth_mean:.6f} second_moment={report.depth_second_moment:.6f}")
    # the height constant times k·log 2 tends to 1 for large k; the diameter constant is twice it
    print(
        f"height_constant={constants.height_constant:.6f} "
        f"height_constant_k_log2={constants.height_constant * report.k * math.log(2):.6f} "
        f"diameter_constant={constants.c:.6f}"
    )
    print(f"diameter_asymptote={report.diameter_asymptote:.6f} upper_bound={report.diameter_upper_bound:.6f}")
    print(f"link_density={report.link_density:.6e}")
    if params.out:
        ReportRepository().write_model(params.out, report)
    return EXIT_OK
