import argparse
import logging

from hdran.middleware.error_handler import EXIT_OK
from hdran.repositories.network_repository import NetworkRepository
from hdran.schemas.params import GenerateParams
from hdran.services.generator_service import GeneratorService

logger = logging.getLogger(__name__)


# [REGISTER GENERATE]
# [Registra o subcomando generate: gera uma HDRAN e grava o arquivo de rede]
# [ENTRADA: subparsers - grupo de subcomandos do parser raiz]
# [SAIDA: None - parser configurado com handler]
# [DEPENDENCIAS: argparse]
def register(subparsers):
    parser = subparsers.add_parser("generate", help="Generate a network and write it as a NetworkFile")
    parser.add_argument("--k", type=int, required=True, help="Network index (clique size, at least 3)")
    parser.add_argument("--n", type=int, required=True, help="Number of evolution steps")
    parser.add_argument("--seed", type=int, required=True, help="64-bit seed")
    parser.add_argument("--out", required=True, help="Output network file")
    parser.set_defaults(handler=handle_generate)


# [HANDLE GENERATE]
# [Valida os parâmetros, gera a rede, grava o arquivo e imprime a linha de resumo]
# [ENTRADA: args - Namespace do argparse]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: GenerateParams, GeneratorService, NetworkRepository]
def handle_generate(args: argparse.Namespace) -> int:
    params = GenerateParams(k=args.k, n=args.n, seed=args.seed, out=args.out)
    generator_service = GeneratorService()
    net = generator_service.generate(params.k, params.n, params.seed)
    NetworkRepository().save_network(net, params.out)
    print(generator_service.summarize(net).to_line())
    return EXIT_OK
