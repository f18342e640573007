class ChoiceDictError(Exception):
    """Erro base da biblioteca; carrega o código de saída usado pela CLI."""

    def __init__(self, message: str, exit_code: int = 1) -> None:
        super().__init__(message)
        self.exit_code = exit_code
        self.message = message


class InvalidArgumentError(ChoiceDictError, ValueError):
    """Argumento fora do domínio da operação."""


class BoundsError(ChoiceDictError, IndexError):
    """Acesso fora do orçamento de bits do BitStore."""


class DecodeError(ChoiceDictError, ValueError):
    """Código γ′ malformado."""


class InvariantViolation(ChoiceDictError):
    def __init__(self, violations: list[str]) -> None:
        super().__init__("; ".join(violations))
        self.violations = violations


class TraceParseError(ChoiceDictError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}", exit_code=2)
        self.line = line

