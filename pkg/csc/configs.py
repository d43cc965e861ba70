# =============================================================================
# csc.configs
#
# Propósito:
# - Configurações: matrizes cujas colunas estão num hiperplano afim que não
#   passa pela origem (certificado racional c com <c, a_i> = 1).
# - Construção da configuração centralmente simétrica
#       A± = [ 0  A  -A ]
#            [ 1  1   1 ]
#   com colunas na ordem Centro, bloco Plus, bloco Minus.
# - Configurações de incidência de grafos: rho(e) = e_i + e_j e
#   mu(e) = e_i - e_j (i < j), na ordem das arestas.
#
# API sugerida:
# - is_configuration(a) -> Optional[certificado]
# - as_configuration(a) -> Configuration
# - central_symmetrize(a) -> CscMatrix
# - graph_config_rho(g) / graph_config_mu(g) -> IntMatrix
# - delete_redundant_row(a_g, g) -> IntMatrix
# - nonunimodularity_witness(a) -> MinorPair
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple
import logging

import sympy as sp

from .errors import PreconditionViolated, RankDeficient
from .graphs import Graph, is_bipartite
from .intlin import IntMatrix, bareiss_det, hnf

logger = logging.getLogger(__name__)

Certificate = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Configuration:
    """
    Matriz com funcional de grau: <certificate, a_i> = 1 para toda coluna.
    """
    matrix: IntMatrix
    certificate: Certificate

    def __post_init__(self):
        for j, col in enumerate(self.matrix.columns()):
            if sum(c * x for c, x in zip(self.certificate, col)) != 1:
                raise PreconditionViolated(
                    f"certificado falha na coluna {j}", hypothesis="configuration"
                )

    def degree(self, x: Sequence[int]) -> Fraction:
        return sum((c * v for c, v in zip(self.certificate, x)), Fraction(0))


class Role(Enum):
    CENTER = "center"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class ColumnRole:
    role: Role
    index: Optional[int] = None   # coluna de A (0-based) para PLUS/MINUS

    def label(self) -> str:
        if self.role is Role.CENTER:
            return "center"
        return f"{self.role.value}({self.index + 1})"


@dataclass(frozen=True)
class CscMatrix:
    """
    A± de uma matriz A (d×n): (d+1)×(2n+1), coluna 0 = [0,…,0,1],
    colunas 1..n = [a_i; 1], colunas n+1..2n = [-a_i; 1].
    """
    base: IntMatrix
    matrix: IntMatrix
    column_roles: Tuple[ColumnRole, ...]

    @property
    def n(self) -> int:
        return self.base.cols

    @property
    def d(self) -> int:
        return self.base.rows

    def plus(self, i: int) -> int:
        """Índice em A± da coluna [a_i; 1] (i 0-based)."""
        return 1 + i

    def minus(self, i: int) -> int:
        return 1 + self.n + i

    @property
    def center(self) -> Tuple[int, ...]:
        return self.matrix.column(0)

    @property
    def configuration(self) -> Configuration:
        cert = tuple(Fraction(int(k == self.d)) for k in range(self.d + 1))
        return Configuration(self.matrix, cert)


# ------------------------------------------------------------
# Configurações
# ------------------------------------------------------------
def is_configuration(a: IntMatrix) -> Optional[Certificate]:
    """
    Certificado racional c com <c, a_i> = 1, ou None.

    Se todas as colunas têm a mesma soma s != 0, devolve (1/s, …, 1/s);
    senão resolve A^T c = 1 por Gauss-Jordan exato (sympy) com parâmetros
    livres iguais a zero.
    """
    sums = {sum(col) for col in a.columns()}
    if len(sums) == 1:
        s = sums.pop()
        if s != 0:
            return tuple(Fraction(1, s) for _ in range(a.rows))
    At = a.transpose().to_sympy()
    ones = sp.Matrix([1] * a.cols)
    try:
        sol, params = At.gauss_jordan_solve(ones)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return tuple(Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in sol)


def as_configuration(a: IntMatrix) -> Configuration:
    cert = is_configuration(a)
    if cert is None:
        raise PreconditionViolated("a matriz não é uma configuração", hypothesis="configuration")
    return Configuration(a, cert)


def central_symmetrize(a: IntMatrix) -> CscMatrix:
    d, n = a.rows, a.cols
    cols: List[Tuple[int, ...]] = [tuple([0] * d + [1])]
    roles: List[ColumnRole] = [ColumnRole(Role.CENTER)]
    base_cols = a.columns()
    for i, c in enumerate(base_cols):
        cols.append(tuple(c) + (1,))
        roles.append(ColumnRole(Role.PLUS, i))
    for i, c in enumerate(base_cols):
        cols.append(tuple(-x for x in c) + (1,))
        roles.append(ColumnRole(Role.MINUS, i))
    return CscMatrix(base=a, matrix=IntMatrix.from_columns(cols), column_roles=tuple(roles))


# ------------------------------------------------------------
# Grafos
# ------------------------------------------------------------
def _incidence(g: Graph, sign: int) -> IntMatrix:
    if not g.edges:
        raise PreconditionViolated("o grafo não tem arestas", hypothesis="edges")
    cols = []
    for i, j in g.edges:
        col = [0] * g.vertex_count
        col[i - 1] = 1
        col[j - 1] = sign
        cols.append(col)
    return IntMatrix.from_columns(cols)


def graph_config_rho(g: Graph) -> IntMatrix:
    """A_G: coluna k = e_i + e_j para a k-ésima aresta {i, j}."""
    return _incidence(g, 1)


def graph_config_mu(g: Graph) -> IntMatrix:
    """A_Ḡ: coluna k = e_i - e_j (i < j) para a k-ésima aresta."""
    return _incidence(g, -1)


def delete_redundant_row(a_g: IntMatrix, g: Graph) -> IntMatrix:
    """
    Para G bipartido, remove a linha do vértice de maior rótulo da parte 2
    (a parte sem o vértice 1); a soma das linhas da parte 1 menos a da parte 2
    se anula, então a linha é redundante. Grafo não bipartido: sem mudança.
    """
    parts = is_bipartite(g)
    if parts is None or not parts[1]:
        return a_g
    drop = max(parts[1]) - 1
    return IntMatrix.from_rows([r for k, r in enumerate(a_g.data) if k != drop])


# ------------------------------------------------------------
# A± nunca é unimodular
# ------------------------------------------------------------
@dataclass(frozen=True)
class MinorPair:
    """
    Dois menores maximais de A± com valores absolutos |A'| e 2|A'|.
    'submatrix' são as colunas (0-based) de A que formam A'.
    """
    submatrix: Tuple[int, ...]
    columns1: Tuple[int, ...]
    minor1: int
    columns2: Tuple[int, ...]
    minor2: int


def nonunimodularity_witness(a: IntMatrix) -> MinorPair:
    """
    Escolhe gulosamente d colunas independentes i_1 < … < i_d de A (A') e
    devolve os menores de A± nas colunas {centro} ∪ Plus(A') e
    {Minus(i_1)} ∪ Plus(A'): (-1)^d |A'| e (-1)^d 2|A'|.
    """
    d = a.rows
    res = hnf(a)
    if res.rank < d:
        raise RankDeficient(f"A precisa ter posto {d}", rank=res.rank, rows=d)
    chosen: List[int] = []
    for j in range(a.cols):
        trial = chosen + [j]
        if hnf(a.select_columns(trial)).rank == len(trial):
            chosen = trial
            if len(chosen) == d:
                break
    csc = central_symmetrize(a)
    plus = [csc.plus(i) for i in chosen]
    cols1 = tuple([0] + plus)
    cols2 = tuple([csc.minus(chosen[0])] + plus)
    m = csc.matrix

    def minor(cols):
        return bareiss_det([[r[j] for j in cols] for r in m.data])

    pair = MinorPair(tuple(chosen), cols1, minor(cols1), cols2, minor(cols2))
    logger.debug("par de menores de A±: %d e %d", pair.minor1, pair.minor2)
    return pair
