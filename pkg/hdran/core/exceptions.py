from typing import Any, Dict, List, Optional


# [HDRAN EXCEPTION]
# [Exceção base do simulador com mensagem, código e detalhes opcionais]
# [ENTRADA: message - descrição do erro, code - código opcional, details - detalhes opcionais]
# [SAIDA: exceção com informações contextuais]
# [DEPENDENCIAS: Exception]
class HdranException(Exception):

    def __init__(self, message: str, code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.code = code
        self.details = details or {}
        super().__init__(message)


# [DOMAIN EXCEPTION]
# [Violação de pré-condição de domínio: k < 3, rótulo fora do intervalo, parâmetros divergentes]
# [ENTRADA: message - descrição, field - parâmetro que violou a regra (opcional)]
# [SAIDA: exceção de domínio]
# [DEPENDENCIAS: HdranException]
class DomainException(HdranException):

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(message, code="domain_error", details={"field": field} if field else None)


# [VALIDATION EXCEPTION]
# [Exceção para erros de validação com múltiplos campos, usada na leitura de arquivos de rede]
# [ENTRADA: errors - dict com erros por campo (ex.: 'line 12'), message - mensagem principal opcional]
# [SAIDA: exceção com estrutura de erros organizados por campo]
# [DEPENDENCIAS: HdranException]
class ValidationException(HdranException):

    def __init__(self, errors: Dict[str, List[str]], message: str = "Validation failed"):
        self.errors = errors
        super().__init__(message, code="validation_error", details={"errors": errors})

    # [GET ERROR LINES]
    # [Achata os erros no formato 'campo: mensagem' para exibição]
    # [ENTRADA: nenhuma]
    # [SAIDA: List[str] - linhas de erro]
    # [DEPENDENCIAS: self.errors]
    def get_error_lines(self) -> List[str]:
        lines = []
        for field, messages in self.errors.items():
            for msg in messages:
                lines.append(f"{field}: {msg}")
        return lines


# [RESOURCE BUDGET EXCEPTION]
# [Pedido de trabalho acima do orçamento configurado; nunca deixa estado parcial]
# [ENTRADA: resource - nome do recurso, limit - limite configurado, requested - quantidade pedida, hint - sugestão opcional]
# [SAIDA: exceção com limite e quantidade pedida]
# [DEPENDENCIAS: HdranException]
class ResourceBudgetException(HdranException):

    def __init__(self, resource: str, limit: int, requested: int, hint: Optional[str] = None):
        self.resource = resource
        self.limit = limit
        self.requested = requested
        message = f"{resource} budget exceeded: requested {requested}, limit {limit}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message, code="budget_exceeded", details={"limit": limit, "requested": requested})


# [NUMERIC EXCEPTION]
# [Falha de enquadramento ou convergência numérica; nunca retorna raiz errada em silêncio]
# [ENTRADA: message - descrição da falha]
# [SAIDA: exceção numérica]
# [DEPENDENCIAS: HdranException]
class NumericException(HdranException):

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message, code="numeric_error", details=details)


# [UNSUPPORTED EVALUATION EXCEPTION]
# [Avaliação exata pedida fora da faixa suportada (ex.: pmf com n - j acima do limite racional)]
# [ENTRADA: message - descrição]
# [SAIDA: exceção de avaliação não suportada]
# [DEPENDENCIAS: HdranException]
class UnsupportedEvaluationException(HdranException):

    def __init__(self, message: str):
        super().__init__(message, code="unsupported_evaluation")


# [NETWORK FILE EXCEPTION]
# [Arquivo de rede ilegível ou malformado antes da validação de invariantes]
# [ENTRADA: message - descrição, line - linha do arquivo (opcional)]
# [SAIDA: exceção com contexto de linha]
# [DEPENDENCIAS: HdranException]
class NetworkFileException(HdranException):

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, code="network_file_error", details={"line": line})
