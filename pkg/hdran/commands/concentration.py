import argparse
import logging

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import ConcentrationParams
from hdran.services.experiment_service import ExperimentService

logger = logging.getLogger(__name__)

ROW_HEADER = ("lambda", "empirical_tail", "bound", "noise", "violated")


# [REGISTER CONCENTRATION]
# [Registra o subcomando concentration: caudas empíricas de X_{n,j} contra o limite exponencial]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("concentration", help="Empirical degree-count tails against the exponential bound")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--j", type=int, required=True, help="Degree whose count is probed")
    parser.add_argument("--reps", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--points", type=int, default=20, help="Size of the lambda grid")
    parser.add_argument("--long", dest="long_run", action="store_true")
    parser.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    parser.set_defaults(handler=handle_concentration)


# [HANDLE CONCENTRATION]
# [Executa a sonda de concentração e emite a tabela; violações são reportadas sem alterar o código de saída]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: ConcentrationParams, ExperimentService, ReportRepository]
def handle_concentration(args: argparse.Namespace) -> int:
    params = ConcentrationParams(
        k=args.k, n=args.n, j=args.j, reps=args.reps, seed=args.seed, points=args.points, long_run=args.long_run, out=args.out
    )
    rows = ExperimentService().concentration_probe(
        params.k, params.n, params.reps, params.seed, params.j, points=params.points, long_run=params.long_run
    )
    table = [(row.lam, row.empirical_tail, row.bound, row.noise, row.violated) for row in rows]
    if params.out:
        ReportRepository().write_csv(params.out, ROW_HEADER, table)
    else:
        print(",".join(ROW_HEADER))
        for lam, tail, bound, noise, violated in table:
            print(f"{lam:.6g},{tail:.6g},{bound:.6g},{noise:.3g},{str(violated).lower()}")
    violations = sum(1 for row in rows if row.violated)
    if violations:
        logger.warning(f"{violations} lambda value(s) exceed the bound by more than the binomial noise")
    return EXIT_OK
