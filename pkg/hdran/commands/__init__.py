from . import concentration, generate, lorenz, stats, theory, validate, wiener_study

# [COMMAND MODULES]
# [Módulos de subcomando registrados no parser raiz, na ordem exibida pela ajuda]
# [ENTRADA: nenhuma]
# [SAIDA: tupla de módulos com função register(subparsers)]
# [DEPENDENCIAS: módulos de hdran.commands]
COMMAND_MODULES = (generate, stats, theory, validate, wiener_study, lorenz, concentration)

__all__ = ["COMMAND_MODULES"]
