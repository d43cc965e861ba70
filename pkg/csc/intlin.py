# =============================================================================
# csc.intlin
#
# Propósito:
# - Álgebra linear inteira exata: forma normal de Hermite (por colunas),
#   posto, menores maximais, índice de reticulado e unimodularidade.
# - Toda a aritmética é feita com inteiros de precisão arbitrária
#   (numpy com dtype=object ou listas Python); nenhum ponto flutuante.
#
# Convenção da HNF:
# - A·U = H = [B | O], U unimodular (operações elementares de coluna);
# - pivôs positivos, H em escada por colunas;
# - à esquerda de cada pivô p, as entradas da linha ficam em [0, p).
#
# API sugerida:
# - IntMatrix.from_rows(rows) / IntMatrix.from_columns(cols)
# - hnf(a) -> HnfResult
# - hnf_solve(res, x) / in_column_lattice(res, x)
# - bareiss_det(m) / gcd_maximal_minors(a) / lattice_index(a)
# - is_unimodular(a) -> (flag, delta)
# - lattice_normalize(a) -> (b, a_prime)
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass
from fractions import Fraction
from enum import Enum
from itertools import combinations
from math import comb, gcd
from typing import Iterator, List, Optional, Sequence, Tuple, Union
import logging
import operator

import numpy as np
import sympy as sp

from .config import setting
from .errors import CscError, InvalidInput, RankDeficient

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """
    Matriz densa de inteiros exatos, armazenada por linhas.
    """
    rows: int
    cols: int
    data: Tuple[Vector, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidInput(f"matriz precisa ter ao menos 1 linha e 1 coluna: {self.rows}x{self.cols}")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise InvalidInput("linhas com comprimentos diferentes")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        try:
            data = tuple(tuple(operator.index(x) for x in r) for r in rows)
        except TypeError as e:
            raise InvalidInput(f"entrada não inteira na matriz: {e}")
        if not data:
            raise InvalidInput("matriz vazia")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise InvalidInput("linhas com comprimentos diferentes")
        return cls(len(data), width, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise InvalidInput("matriz sem colunas")
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_numpy(cls, arr: np.ndarray) -> "IntMatrix":
        return cls.from_rows([[int(x) for x in row] for row in arr])

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> List[Vector]:
        return [tuple(c) for c in zip(*self.data)]

    def select_columns(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([[r[j] for j in idx] for r in self.data])

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(list(zip(*self.data)))

    def apply(self, x: Sequence[int]) -> Vector:
        """A·x para um vetor inteiro x."""
        return tuple(sum(a * b for a, b in zip(r, x)) for r in self.data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = other.columns()
        return IntMatrix.from_columns([self.apply(c) for c in cols])

    def to_lists(self) -> List[List[int]]:
        return [list(r) for r in self.data]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=object)

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.to_lists())


class Infinite(Enum):
    """Índice de reticulado de uma matriz sem posto completo nas linhas."""
    INFINITE = "infinite"


INFINITE = Infinite.INFINITE
LatticeIndex = Union[int, Infinite]


@dataclass(frozen=True)
class HnfResult:
    """
    Resultado de hnf(a): h = a·transform, com b = bloco d×d quando rank = d.
    'pivots' lista pares (linha, coluna); as colunas pivô são 0..rank-1.
    """
    h: IntMatrix
    b: Optional[IntMatrix]
    transform: IntMatrix
    rank: int
    pivots: Tuple[Tuple[int, int], ...]

    def require_b(self) -> IntMatrix:
        if self.b is None:
            raise RankDeficient(
                f"posto {self.rank} < {self.h.rows} linhas: bloco B indisponível",
                rank=self.rank, rows=self.h.rows,
            )
        return self.b

    def basis(self) -> List[Vector]:
        """Colunas não nulas de h: base do reticulado gerado pelas colunas de a."""
        return [self.h.column(j) for j in range(self.rank)]


def exgcd(a: int, b: int) -> np.ndarray:
    """
    Algoritmo de Euclides estendido.
    Retorna M 2x2 inteira, det(M) = 1, com M @ [a, b] = [gcd(a, b), 0].
    Se a divide b, M[0, 1] = 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclides com operações de linha sobre [a, b], acompanhadas pela identidade
    M = np.array([[a, 1, 0],
                  [b, 0, 1]], dtype=object)
    M = M[::-1]
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]

    g = M[0, 0]
    M = M[:, 1:]
    M *= [a_sign, b_sign]

    # corrige o sinal do determinante usando M[0,0]*a + M[0,1]*b = g
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return M


def hnf(a: IntMatrix) -> HnfResult:
    """
    Forma normal de Hermite por colunas, para qualquer posto.

    Para cada linha i, as colunas col..n-1 são zeradas à direita do pivô
    por combinações 2x2 de determinante 1 (exgcd). Pivô nulo: a linha é
    pulada. Pivô negativo: a coluna troca de sinal. Depois as colunas
    anteriores são reduzidas módulo o pivô.
    """
    H = a.to_numpy()
    m, n = H.shape
    U = np.eye(n, dtype=object)
    pivots: List[Tuple[int, int]] = []
    col = 0
    for i in range(m):
        if col >= n:
            break
        for j in range(col + 1, n):
            if H[i, j] != 0:
                M = exgcd(H[i, col], H[i, j]).T
                H[:, [col, j]] = H[:, [col, j]] @ M
                U[:, [col, j]] = U[:, [col, j]] @ M
        if H[i, col] == 0:
            continue
        if H[i, col] < 0:
            H[:, col] = -H[:, col]
            U[:, col] = -U[:, col]
        p = H[i, col]
        for k in range(col):
            q = H[i, k] // p
            if q:
                H[:, k] = H[:, k] - q * H[:, col]
                U[:, k] = U[:, k] - q * U[:, col]
        pivots.append((i, col))
        col += 1

    h = IntMatrix.from_numpy(H)
    rank = len(pivots)
    b = h.select_columns(range(m)) if rank == m else None
    return HnfResult(h=h, b=b, transform=IntMatrix.from_numpy(U), rank=rank, pivots=tuple(pivots))


def hnf_solve(res: HnfResult, x: Sequence) -> Optional[List[Fraction]]:
    """
    Resolve h·y = x nas colunas pivô (substituição direta, racional exata).
    Retorna y (comprimento rank) ou None se x não está no espaço gerado.
    """
    h = res.h
    residual = [Fraction(v) for v in x]
    if len(residual) != h.rows:
        raise InvalidInput(f"vetor de dimensão {len(residual)} para matriz com {h.rows} linhas")
    y: List[Fraction] = []
    for row, col in res.pivots:
        coef = residual[row] / h.data[row][col]
        y.append(coef)
        if coef:
            for r in range(row, h.rows):
                residual[r] -= coef * h.data[r][col]
    if any(residual):
        return None
    return y


def in_column_lattice(res: HnfResult, x: Sequence[int]) -> bool:
    """x pertence a ZA (A com HNF 'res')?"""
    y = hnf_solve(res, x)
    return y is not None and all(c.denominator == 1 for c in y)


def matrix_rank(a: IntMatrix) -> int:
    return hnf(a).rank


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """
    Determinante por eliminação de Bareiss (sem frações, divisões exatas).
    """
    M = [list(r) for r in m]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pkk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
        prev = pkk
    return sign * M[n - 1][n - 1]


def maximal_minors(a: IntMatrix) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Itera (colunas, menor) sobre todos os menores d×d, d = número de linhas.
    """
    d = a.rows
    for cols in combinations(range(a.cols), d):
        yield cols, bareiss_det([[r[j] for j in cols] for r in a.data])


def gcd_maximal_minors(a: IntMatrix, limit: Optional[int] = None) -> int:
    """
    mdc dos menores maximais; 0 se e só se rank < d.
    Acima de 'limit' menores usa det(B) da HNF (mesmo valor).
    """
    limit = setting("intlin", "minor_enumeration_limit", limit)
    d, n = a.rows, a.cols
    if d > n:
        return 0
    if comb(n, d) <= limit:
        g = 0
        for _, minor in maximal_minors(a):
            g = gcd(g, minor)
            if g == 1:
                break
        return abs(g)
    logger.debug("C(%d,%d) > %d: usando a HNF para o mdc dos menores", n, d, limit)
    res = hnf(a)
    if res.rank < d:
        return 0
    return _diagonal_product(res.require_b())


def _diagonal_product(b: IntMatrix) -> int:
    out = 1
    for i in range(b.rows):
        out *= b.data[i][i]
    return out


def lattice_index(a: IntMatrix, cross_check: bool = False) -> LatticeIndex:
    """
    Índice [Z^d : ZA] = det(B); INFINITE quando rank < d.
    Com cross_check=True compara com o mdc dos menores maximais.
    """
    res = hnf(a)
    if res.rank < a.rows:
        return INFINITE
    value = _diagonal_product(res.require_b())
    if cross_check:
        g = gcd_maximal_minors(a)
        if g != value:
            raise CscError(f"índice {value} difere do mdc dos menores {g}", index=value, gcd=g)
    return value


def is_unimodular(a: IntMatrix) -> Tuple[bool, int]:
    """
    (True, delta) se todos os menores maximais não nulos têm o mesmo valor
    absoluto delta; senão (False, 0).
    """
    rank = hnf(a).rank
    if rank < a.rows:
        raise RankDeficient(f"is_unimodular exige posto {a.rows}, obtido {rank}", rank=rank, rows=a.rows)
    delta = 0
    for _, minor in maximal_minors(a):
        m = abs(minor)
        if m == 0:
            continue
        if delta == 0:
            delta = m
        elif m != delta:
            return False, 0
    return True, delta


def lattice_normalize(a: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Fatora a = b · a' com b o bloco da HNF e a' inteira de índice 1.
    """
    res = hnf(a)
    b = res.require_b()
    columns = []
    for col in a.columns():
        # h = [B | O]: coordenadas nas colunas pivô são coordenadas em B
        y = hnf_solve(res, col)
        columns.append(tuple(int(c) for c in y))
    return b, IntMatrix.from_columns(columns)
