from abc import ABC, abstractmethod
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

# (section, index within the section) -> 1-based line of the source file
LineMap = Dict[Tuple[str, int], int]


class EntryError(NamedTuple):
    message: str
    field: Optional[str] = None


# [VALIDATION RESULT]
# [Acumula erros de entradas do arquivo e o status final]
# [ENTRADA: nenhuma no construtor]
# [SAIDA: instância ValidationResult para acumular erros]
# [DEPENDENCIAS: EntryError]
class ValidationResult:

    def __init__(self):
        self.errors: List[EntryError] = []
        self.is_valid: bool = True

    # [ADD ERROR]
    # [Adiciona um erro e marca o resultado como inválido]
    # [ENTRADA: message - mensagem, field - campo ou 'line N' opcional]
    # [SAIDA: None - modifica estado interno]
    # [DEPENDENCIAS: EntryError]
    def add_error(self, message: str, field: Optional[str] = None):
        self.errors.append(EntryError(message, field))
        self.is_valid = False

    # [GET ERRORS BY FIELD]
    # [Erros agrupados por campo ou linha - erros sem campo ficam em 'general']
    # [ENTRADA: nenhuma]
    # [SAIDA: Dict[str, List[str]]]
    # [DEPENDENCIAS: self.errors]
    def get_errors_by_field(self) -> Dict[str, List[str]]:
        errors_by_field: Dict[str, List[str]] = {}
        for error in self.errors:
            errors_by_field.setdefault(error.field or "general", []).append(error.message)
        return errors_by_field

    # [SUMMARY]
    # [Texto de uma linha com os primeiros erros, para mensagens de exceção e logs]
    # [ENTRADA: limit - número máximo de erros listados]
    # [SAIDA: str - 'campo: mensagem; ...' com a contagem dos omitidos]
    # [DEPENDENCIAS: self.errors]
    def summary(self, limit: int = 5) -> str:
        shown = "; ".join(f"{error.field or 'general'}: {error.message}" for error in self.errors[:limit])
        hidden = len(self.errors) - limit
        return f"{shown} (+{hidden} more)" if hidden > 0 else shown


# [BASE VALIDATOR]
# [Classe abstrata base para validadores de arquivos com contexto de linha]
# [ENTRADA: line_map - mapa opcional (seção, índice) -> linha do arquivo]
# [SAIDA: ValidationResult]
# [DEPENDENCIAS: ABC, abstractmethod, ValidationResult]
class BaseValidator(ABC):

    def __init__(self, line_map: Optional[LineMap] = None):
        self.line_map = line_map or {}

    # [VALIDATE]
    # [Método abstrato implementado pelos validadores concretos]
    # [ENTRADA: data - dados a validar]
    # [SAIDA: ValidationResult]
    # [DEPENDENCIAS: abstractmethod]
    @abstractmethod
    def validate(self, data: Any) -> ValidationResult:
        pass

    # [ENTRY FIELD]
    # [Nome do campo de uma entrada: 'line N' quando a linha é conhecida, senão 'seção[índice]']
    # [ENTRADA: section - seção do arquivo, index - posição na seção]
    # [SAIDA: str]
    # [DEPENDENCIAS: self.line_map]
    def entry_field(self, section: str, index: int) -> str:
        line = self.line_map.get((section, index))
        if line is None:
            return f"{section}[{index}]"
        return f"line {line}"
