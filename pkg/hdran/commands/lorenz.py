import argparse
import logging

import numpy as np

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import LorenzParams
from hdran.services.experiment_service import ExperimentService

logger = logging.getLogger(__name__)

MAX_CURVE_POINTS = 1001


# [REGISTER LORENZ]
# [Registra o subcomando lorenz: curvas de Lorenz médias por k em SVG e CSV opcional]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("lorenz", help="Averaged vertex-level Lorenz curves")
    parser.add_argument("--k", type=int, nargs="+", required=True, dest="ks", help="One or more indices")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--reps", type=int, required=True)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--long", dest="long_run", action="store_true")
    parser.add_argument("--svg", default=None, help="SVG output with one polyline per k")
    parser.add_argument("--out", default=None, help="CSV output (k, position, cumulative)")
    parser.set_defaults(handler=handle_lorenz)


# [DECIMATE]
# [Reduz a curva a no máximo MAX_CURVE_POINTS pontos mantendo o primeiro e o último]
# [ENTRADA: points - pontos da curva]
# [SAIDA: lista de pontos]
# [DEPENDENCIAS: numpy.linspace]
def decimate(points):
    if len(points) <= MAX_CURVE_POINTS:
        return list(points)
    indices = np.unique(np.linspace(0, len(points) - 1, MAX_CURVE_POINTS).round().astype(int))
    return [points[i] for i in indices]


# [HANDLE LORENZ]
# [Calcula a curva de Lorenz média de cada k, imprime o Gini e grava o SVG e o CSV pedidos]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: LorenzParams, ExperimentService, ReportRepository, decimate]
def handle_lorenz(args: argparse.Namespace) -> int:
    params = LorenzParams(
        ks=args.ks, n=args.n, reps=args.reps, seed=args.seed, long_run=args.long_run, svg=args.svg, out=args.out
    )
    experiment_service = ExperimentService()
    curves = {}
    rows = []
    for k in params.ks:
        curve = experiment_service.averaged_lorenz(k, params.n, params.reps, params.seed, long_run=params.long_run)
        points = decimate(curve.points)
        curves[f"k{k}"] = points
        rows.extend((k, x, y) for x, y in points)
        print(f"k={k} n={params.n} reps={params.reps} gini={curve.gini:.6f}")
    reports = ReportRepository()
    if params.svg:
        reports.write_lorenz_svg(params.svg, curves)
    if params.out:
        reports.write_csv(params.out, ("k", "position", "cumulative"), rows)
    return EXIT_OK
