import argparse
import logging

from hdran.middleware.error_handler import EXIT_FAILURE, EXIT_OK
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import ValidateParams
from hdran.services.experiment_service import ExperimentService
from hdran.services.theory_service import TheoryService

logger = logging.getLogger(__name__)

VALIDATION_MEASUREMENTS = ("degrees", "clustering", "gini", "depth")
ROW_HEADER = ("metric", "empirical_mean", "empirical_se", "theory", "difference", "bound", "passed", "informational")


# [REGISTER VALIDATE]
# [Registra o subcomando validate: teoria x simulação com código de saída pelas linhas não informativas]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("validate", help="Compare replicate averages with the closed forms")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--reps", type=int, required=True)
    parser.add_argument("--seed", type=int, default=0, help="Master seed for the replicates")
    parser.add_argument("--degree-rows", type=int, default=10)
    parser.add_argument("--long", dest="long_run", action="store_true", help="Lift the replicate budget")
    parser.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    parser.set_defaults(handler=handle_validate)


# [HANDLE VALIDATE]
# [Executa as réplicas, monta as linhas de validação e sai com 1 se alguma linha não informativa falhar]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: ValidateParams, ExperimentService, TheoryService, ReportRepository]
def handle_validate(args: argparse.Namespace) -> int:
    params = ValidateParams(
        k=args.k, n=args.n, reps=args.reps, seed=args.seed, degree_rows=args.degree_rows, long_run=args.long_run, out=args.out
    )
    theory_service = TheoryService()
    experiment_service = ExperimentService(theory_service)
    summaries = experiment_service.run_replicates(
        params.k, params.n, params.reps, params.seed, VALIDATION_MEASUREMENTS, long_run=params.long_run
    )
    report = theory_service.theory_report(params.k, params.n)
    rows = experiment_service.validate_against_theory(summaries, report, degree_rows=params.degree_rows)
    table = [tuple(getattr(row, column) for column in ROW_HEADER) for row in rows]
    if params.out:
        ReportRepository().write_csv(params.out, ROW_HEADER, table)
    else:
        print(",".join(ROW_HEADER))
        for row in rows:
            print(
                f"{row.metric},{row.empirical_mean:.6g},{row.empirical_se:.3g},{row.theory:.6g},"
                f"{row.difference:.3g},{row.bound:.3g},{str(row.passed).lower()},{str(row.informational).lower()}"
            )
    failed = [row.metric for row in rows if not row.passed and not row.informational]
    if failed:
        logger.error(f"{len(failed)} validation row(s) failed: {', '.join(failed)}")
        return EXIT_FAILURE
    logger.info(f"All {len(rows)} validation rows passed or are informational")
    return EXIT_OK
