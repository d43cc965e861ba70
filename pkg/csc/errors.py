# =============================================================================
# csc.errors
#
# Propósito:
# - Hierarquia de exceções da Máquina CSC.
# - Erros de entrada/pré-condição saem com código 2 no CLI; limites de
#   recurso saem com código 3 e carregam o resultado parcial.
#
# Licença:
# - MIT
# =============================================================================

from typing import Any, Dict, Optional


class CscError(Exception):
    """
    Base de todos os erros da biblioteca.
    """
    exit_code: int = 2

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = dict(details)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        if self.details:
            out["details"] = self.details
        return out


class InvalidInput(CscError, ValueError):
    """Dados de entrada malformados (matriz, grafo, parâmetros)."""


class ParseError(InvalidInput):
    """Falha ao ler um arquivo de matriz ou grafo."""


class RankDeficient(CscError, ValueError):
    """A operação exige posto completo nas linhas."""


class PreconditionViolated(CscError, ValueError):
    """
    Hipótese de um teorema ou pré-condição de operação não satisfeita.
    'hypothesis' nomeia a hipótese que falhou.
    """

    def __init__(self, message: str, hypothesis: Optional[str] = None, **details: Any):
        super().__init__(message, **details)
        self.hypothesis = hypothesis
        if hypothesis is not None:
            self.details["hypothesis"] = hypothesis


class NotBipartite(PreconditionViolated):
    def __init__(self, message: str = "o grafo não é bipartido", **details: Any):
        super().__init__(message, hypothesis="bipartite", **details)


class ApexNotUniversalForOddCycles(PreconditionViolated):
    def __init__(self, message: str, **details: Any):
        super().__init__(message, hypothesis="apex_meets_all_odd_cycles", **details)


class NotDecomposable(CscError):
    """O vetor não se escreve como soma de N colunas."""


class ResourceLimit(CscError, RuntimeError):
    """
    Orçamento de computação esgotado. 'partial' guarda o que foi obtido
    até o corte (estrutura serializável em JSON).
    """
    exit_code = 3

    def __init__(self, message: str, partial: Any = None, **details: Any):
        super().__init__(message, **details)
        self.partial = partial

    def to_dict(self) -> Dict[str, Any]:
        out = super().to_dict()
        out["partial"] = self.partial
        return out


class SizeLimit(ResourceLimit):
    """Entrada grande demais para a busca exaustiva configurada."""
