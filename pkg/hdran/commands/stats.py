import argparse
import logging

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.network_repository import NetworkRepository
from hdran.repositories.report_repository import ReportRepository
from hdran.schemas.params import StatsParams
from hdran.services.generator_service import GeneratorService
from hdran.services.metrics_service import MetricsService
from hdran.services.theory_service import TheoryService

logger = logging.getLogger(__name__)


# [REGISTER STATS]
# [Registra o subcomando stats: medições de uma rede salva]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("stats", help="Measure a saved network and write CSV tables")
    parser.add_argument("--in", dest="input_path", required=True, help="Input network file")
    parser.add_argument("--out-prefix", required=True, help="Prefix for the CSV outputs")
    parser.add_argument("--distances", action="store_true", help="Also compute Wiener index and diameter")
    parser.add_argument("--sources", type=int, default=None, help="Sampled BFS sources (exact when omitted)")
    parser.set_defaults(handler=handle_stats)


# [HANDLE STATS]
# [Carrega a rede e grava degree_hist.csv, clustering.csv, lorenz.csv e summary.csv com o prefixo dado]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: NetworkRepository, MetricsService, GeneratorService, TheoryService, ReportRepository]
def handle_stats(args: argparse.Namespace) -> int:
    params = StatsParams(
        input_path=args.input_path, out_prefix=args.out_prefix, distances=args.distances, sources=args.sources
    )
    net = NetworkRepository().load_network(params.input_path)
    metrics_service = MetricsService()
    theory_service = TheoryService()
    reports = ReportRepository()
    prefix = params.out_prefix
    k = net.index_k

    histogram = metrics_service.degree_histogram(net)
    fractions = histogram.newcomer_fractions()
    degrees = sorted(set(histogram.counts_all) | set(histogram.counts_newcomers))
    limits = theory_service.limit_fractions(k, max(degrees) - k + 1) if max(degrees) >= k else []
    rows = []
    for j in degrees:
        theory_b = float(limits[j - k]) if j >= k else None
        rows.append((j, histogram.counts_all.get(j, 0), histogram.counts_newcomers.get(j, 0), fractions.get(j, 0.0), theory_b))
    reports.write_csv(f"{prefix}degree_hist.csv", ("j", "count_all", "count_newcomers", "fraction", "theory_b"), rows)

    clustering_average = None
    if net.time_n >= 1:
        profile = metrics_service.clustering_profile(net)
        clustering_average = profile.average
        reports.write_csv(
            f"{prefix}clustering.csv",
            ("degree", "vertices", "clustering", "closed_form"),
            [(d, profile.vertices_per_degree[d], profile.per_degree[d], profile.closed_form[d]) for d in sorted(profile.per_degree)],
        )

    lorenz = metrics_service.empirical_lorenz_gini(net.degrees())
    reports.write_csv(f"{prefix}lorenz.csv", ("position", "cumulative"), lorenz.points)

    census = GeneratorService().clique_census(net)
    summary = {
        "k": k,
        "n": net.time_n,
        "vertices": net.vertex_count,
        "edges": net.edge_count,
        "active_cliques": census.active_count,
        "total_depth": census.total_depth,
        "gini_vertex": lorenz.gini,
        "gini_class": metrics_service.class_lorenz_gini(histogram) if net.time_n >= 1 else None,
        "clustering": clustering_average,
        "link_density": metrics_service.link_density(net),
    }
    if params.distances:
        mode = "exact" if params.sources is None else "sampled"
        distances = metrics_service.distance_metrics(net, mode=mode, sources=params.sources, seed=net.seed or 0)
        summary["wiener"] = distances.wiener
        summary["diameter"] = distances.diameter
        summary["distances_exact"] = distances.exact
    reports.write_csv(f"{prefix}summary.csv", tuple(summary), [tuple(summary.values())])
    logger.info(f"Statistics for {net!r} written with prefix {prefix}")
    return EXIT_OK
