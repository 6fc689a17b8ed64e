import argparse
import logging
from typing import Callable

from pydantic import ValidationError as PydanticValidationError

from hdran.core.exceptions import DomainException, HdranException, ValidationException

# [ERROR HANDLER LOGGER]
# [Logger do tratamento central de erros da CLI]
# [ENTRADA: __name__ - nome do módulo atual]
# [SAIDA: Logger]
# [DEPENDENCIAS: logging.getLogger]
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

CommandHandler = Callable[[argparse.Namespace], int]


# [RUN COMMAND]
# [Executa o handler de um subcomando capturando todas as exceções e convertendo-as em códigos de saída padronizados]
# [ENTRADA: handler - função do subcomando, args - argumentos já analisados pelo argparse]
# [SAIDA: int - 0 sucesso, 2 erro de uso ou de parâmetro, 1 qualquer outra falha]
# [DEPENDENCIAS: logger, PydanticValidationError, DomainException, ValidationException, HdranException]
def run_command(handler: CommandHandler, args: argparse.Namespace) -> int:
    try:
        return handler(args)
    except PydanticValidationError as e:
        for error in e.errors():
            field = ".".join(str(part) for part in error["loc"]) or "arguments"
            logger.error(f"Invalid argument {field}: {error['msg']}")
        return EXIT_USAGE
    except DomainException as e:
        logger.error(f"Invalid argument {e.field or 'arguments'}: {e.message}")
        return EXIT_USAGE
    except ValidationException as e:
        logger.error(e.message)
        for line in e.get_error_lines():
            logger.error(f"  {line}")
        return EXIT_FAILURE
    except HdranException as e:
        logger.error(f"{e.code or 'error'}: {e.message}")
        return EXIT_FAILURE
    except OSError as e:
        logger.error(f"File error: {e}")
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"Unexpected error: {str(e)}")
        return EXIT_FAILURE
