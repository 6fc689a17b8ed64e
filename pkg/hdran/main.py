import argparse
import logging
import sys
from typing import List, Optional

from hdran import __version__
from hdran.commands import COMMAND_MODULES
from hdran.core.config import settings
from hdran.middleware.error_handler import EXIT_USAGE, run_command


# [CONFIGURE LOGGING]
# [Configura o logger raiz uma única vez a partir de settings.log_level (DEBUG em development), escrevendo em stderr]
# [ENTRADA: level - nível opcional (padrão settings.log_level)]
# [SAIDA: None]
# [DEPENDENCIAS: logging.basicConfig, settings]
def configure_logging(level: Optional[str] = None):
    if level is None:
        level = "DEBUG" if settings.environment == "development" else settings.log_level
    logging.basicConfig(
        level=level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


# [BUILD PARSER]
# [Cria o parser raiz e registra todos os subcomandos]
# [ENTRADA: nenhuma]
# [SAIDA: argparse.ArgumentParser]
# [DEPENDENCIAS: COMMAND_MODULES]
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdran",
        description="Simulator and analytic-validation toolkit for high-dimensional random Apollonian networks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Overrides HDRAN_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


# [MAIN]
# [Ponto de entrada da CLI: analisa argumentos, configura logs e delega ao tratamento central de erros]
# [ENTRADA: argv - argumentos (padrão sys.argv[1:])]
# [SAIDA: int - código de saída]
# [DEPENDENCIAS: build_parser, configure_logging, run_command]
def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging(args.log_level)
    return run_command(args.handler, args)
