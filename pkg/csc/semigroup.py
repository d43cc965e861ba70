# =============================================================================
# csc.semigroup
#
# Propósito:
# - Fatias graduadas do monoide Z≥0 A: slice[N] = somas de N colunas,
#   guardadas como chaves lineares ordenadas (numpy, int64 ou object).
# - Função de Hilbert H(N) = |slice[N]| e h-vetor por diferenças finitas.
# - Teste de normalidade até um grau: pontos de N·Conv(A) ∩ ZA contra slice[N].
# - Decomposição de um ponto de grau N em N colunas.
# - Testemunha de não normalidade de A_G± a partir de dois ciclos ímpares.
#
# Convenções:
# - Chave de y em grau N: sum_j (y_j + N·B) · R^j, R = 2·N·B + 1,
#   B = maior valor absoluto de entrada das colunas.
# - Testemunha: o primeiro vetor preferido presente entre as violações do
#   menor grau violado, senão o maior delas (ordem lexicográfica); todas
#   as violações vêm junto.
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass, field
from math import comb
from typing import List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from .config import setting
from .configs import Configuration, as_configuration, central_symmetrize, graph_config_rho
from .errors import InvalidInput, NotDecomposable, ResourceLimit, SizeLimit
from .graphs import Graph, _disjoint_pairs, odd_chordless_cycles
from .intlin import IntMatrix, hnf, in_column_lattice, matrix_rank
from .polytope import build_polytope, facets

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

_INT64_SAFE = 2 ** 62


# ------------------------------------------------------------
# Fatias
# ------------------------------------------------------------
class DegreeSlices:
    """
    slice[N] para N = 0..max_degree, extensível grau a grau.
    """

    def __init__(self, config: Configuration, point_budget: Optional[int] = None, chunk_rows: Optional[int] = None):
        self.config = config
        a = config.matrix
        self.m = a.rows
        distinct = sorted(set(a.columns()))
        self.columns = np.array(distinct, dtype=np.int64)
        self.bound = max(1, max(abs(x) for c in distinct for x in c))
        self.point_budget = setting("semigroup", "point_budget", point_budget)
        self.chunk_rows = setting("semigroup", "chunk_rows", chunk_rows)
        self.keys: List[np.ndarray] = [self._encode(np.zeros((1, self.m), dtype=np.int64), 0)]

    @property
    def max_degree(self) -> int:
        return len(self.keys) - 1

    def _radix(self, n: int) -> Tuple[int, int]:
        offset = n * self.bound
        return offset, 2 * offset + 1

    def _dtype(self, n: int):
        _, radix = self._radix(n)
        return np.int64 if radix ** self.m < _INT64_SAFE else object

    def _encode(self, points: np.ndarray, n: int) -> np.ndarray:
        offset, radix = self._radix(n)
        dtype = self._dtype(n)
        pts = points.astype(dtype)
        keys = np.zeros(len(pts), dtype=dtype)
        for j in range(self.m - 1, -1, -1):
            keys = keys * radix + (pts[:, j] + offset)
        return keys

    def decode(self, n: int) -> np.ndarray:
        """Pontos de slice[n] (linhas), na ordem das chaves."""
        offset, radix = self._radix(n)
        k = self.keys[n].copy()
        pts = np.empty((len(k), self.m), dtype=np.int64)
        for j in range(self.m):
            pts[:, j] = (k % radix - offset).astype(np.int64)
            k = k // radix
        return pts

    def extend(self) -> np.ndarray:
        """Calcula slice[N+1] = slice[N] + colunas e devolve suas chaves."""
        n = self.max_degree + 1
        prev = self.decode(n - 1)
        ncols = len(self.columns)
        block = max(1, self.chunk_rows // ncols)
        parts = []
        for start in range(0, len(prev), block):
            sums = (prev[start:start + block, None, :] + self.columns[None, :, :]).reshape(-1, self.m)
            parts.append(np.unique(self._encode(sums, n)))
        keys = np.unique(np.concatenate(parts))
        if len(keys) > self.point_budget:
            raise ResourceLimit(
                f"slice[{n}] com {len(keys)} pontos excede o orçamento {self.point_budget}",
                partial={"hilbert_values": self.values()},
                budget=self.point_budget, degree=n,
            )
        self.keys.append(keys)
        logger.debug("slice[%d]: %d pontos", n, len(keys))
        return keys

    def ensure(self, n: int) -> None:
        while self.max_degree < n:
            self.extend()

    def contains(self, y: Sequence[int], n: int) -> bool:
        return bool(self.contains_many(np.array([y], dtype=np.int64), n)[0])

    def contains_many(self, ys: np.ndarray, n: int) -> np.ndarray:
        self.ensure(n)
        offset, _ = self._radix(n)
        inside = np.all(np.abs(ys) <= offset, axis=1)
        out = np.zeros(len(ys), dtype=bool)
        if inside.any():
            keys = self._encode(ys[inside], n)
            table = self.keys[n]
            pos = np.searchsorted(table, keys)
            pos = np.minimum(pos, len(table) - 1)
            out[inside] = table[pos] == keys
        return out

    def points(self, n: int) -> List[Vector]:
        self.ensure(n)
        return [tuple(int(x) for x in row) for row in self.decode(n)]

    def values(self) -> List[int]:
        return [len(k) for k in self.keys]


def degree_slices(c: Union[Configuration, IntMatrix], max_degree: int, point_budget: Optional[int] = None) -> DegreeSlices:
    if max_degree < 0:
        raise InvalidInput(f"max_degree deve ser >= 0, recebido {max_degree}")
    if isinstance(c, IntMatrix):
        c = as_configuration(c)
    s = DegreeSlices(c, point_budget=point_budget)
    s.ensure(max_degree)
    return s


# ------------------------------------------------------------
# Série de Hilbert
# ------------------------------------------------------------
@dataclass(frozen=True)
class HilbertData:
    values: Tuple[int, ...]
    krull_dim: int
    h_vector: Tuple[int, ...]
    stabilized: bool


def _h_entry(values: Sequence[int], dim: int, k: int) -> int:
    return sum((-1) ** i * comb(dim, i) * values[k - i] for i in range(min(dim, k) + 1))


def hilbert_h_vector(
    c: Union[Configuration, IntMatrix],
    max_degree: Optional[int] = None,
    zero_run: Optional[int] = None,
    confirm_degrees: Optional[int] = None,
    point_budget: Optional[int] = None,
) -> HilbertData:
    """
    h-vetor do anel K[A]: coeficientes de (1 - λ)^dim · sum H(N) λ^N,
    até 'zero_run' entradas nulas consecutivas (mais 'confirm_degrees').
    """
    if isinstance(c, IntMatrix):
        c = as_configuration(c)
    max_degree = setting("semigroup", "hilbert_max_degree", max_degree)
    zero_run = setting("semigroup", "zero_run", zero_run)
    confirm = setting("semigroup", "confirm_degrees", confirm_degrees)
    dim = matrix_rank(c.matrix)
    slices = DegreeSlices(c, point_budget=point_budget)
    needed = zero_run + confirm
    h: List[int] = [1]
    zeros = 0
    while zeros < needed and slices.max_degree < max_degree:
        slices.extend()
        h.append(_h_entry(slices.values(), dim, slices.max_degree))
        zeros = zeros + 1 if h[-1] == 0 else 0
    stabilized = zeros >= needed
    if not stabilized:
        logger.warning("h-vetor não estabilizou até o grau %d", slices.max_degree)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    data = HilbertData(tuple(slices.values()), dim, tuple(h), stabilized)
    logger.info("Hilbert: dim=%d, h=%s, estabilizado=%s", dim, data.h_vector, stabilized)
    return data


def gorenstein_consistent(h: Sequence[int]) -> bool:
    """h-vetor palíndromo (necessário para Gorenstein; não é prova)."""
    h = list(h)
    return h == h[::-1]


# ------------------------------------------------------------
# Normalidade
# ------------------------------------------------------------
@dataclass(frozen=True)
class Normal:
    up_to: int


@dataclass(frozen=True)
class NonNormal:
    witness: Vector
    degree: int
    violations: Tuple[Vector, ...] = field(default=())


NormalityResult = Union[Normal, NonNormal]


def _box_points(lo: Sequence[int], hi: Sequence[int], chunk: int):
    """Itera a caixa inteira [lo, hi] em blocos de linhas (numpy)."""
    shape = tuple(b - a + 1 for a, b in zip(lo, hi))
    total = int(np.prod(shape, dtype=object))
    base = np.array(lo, dtype=np.int64)
    for start in range(0, total, chunk):
        flat = np.arange(start, min(start + chunk, total), dtype=np.int64)
        idx = np.stack(np.unravel_index(flat, shape), axis=1)
        yield idx + base


def normality_check(
    c: Union[Configuration, IntMatrix],
    max_degree: Optional[int] = None,
    box_budget: Optional[int] = None,
    point_budget: Optional[int] = None,
    prefer: Sequence[Sequence[int]] = (),
) -> NormalityResult:
    """
    Para N = 1..max_degree compara N·Conv(A) ∩ ZA com slice[N].
    Normal(up_to) significa apenas "sem violação até o grau".
    Um vetor de 'prefer' entre as violações do menor grau vira a testemunha.
    """
    if isinstance(c, IntMatrix):
        c = as_configuration(c)
    a = c.matrix
    max_degree = max_degree if max_degree is not None else 2 * a.rows
    box_budget = setting("semigroup", "box_budget", box_budget)
    chunk = setting("semigroup", "chunk_rows", None)

    poly = build_polytope(a.columns())
    if poly.dim == 0:
        return Normal(max_degree)
    fs = facets(poly)
    p0 = np.array(poly.frame.origin, dtype=np.int64)
    M = np.array(poly.frame.basis, dtype=np.int64).reshape(len(poly.frame.basis), a.rows)
    normals = np.array([f.normal for f in fs], dtype=np.int64).reshape(len(fs), poly.dim)
    offsets = np.array([f.offset for f in fs], dtype=np.int64)
    coords = np.array(poly.coords, dtype=np.int64).reshape(len(poly.coords), poly.dim)
    lattice = hnf(a)
    slices = DegreeSlices(c, point_budget=point_budget)

    for n in range(1, max_degree + 1):
        slices.ensure(n)
        lo = (n * coords.min(axis=0)).tolist() if poly.dim else []
        hi = (n * coords.max(axis=0)).tolist() if poly.dim else []
        size = 1
        for x, y in zip(lo, hi):
            size *= y - x + 1
        if size > box_budget:
            raise SizeLimit(
                f"caixa de grau {n} com {size} pontos excede o orçamento {box_budget}",
                partial={"normal_up_to": n - 1}, degree=n,
            )
        violations: List[Vector] = []
        for W in _box_points(lo, hi, chunk):
            if len(fs):
                W = W[np.all(W @ normals.T <= n * offsets, axis=1)]
            Y = n * p0 + W @ M
            missing = Y[~slices.contains_many(Y, n)]
            for y in missing:
                y = tuple(int(v) for v in y)
                if in_column_lattice(lattice, y):
                    violations.append(y)
        logger.debug("grau %d: caixa %d, %d violações", n, size, len(violations))
        if violations:
            violations.sort()
            found = set(violations)
            chosen = [tuple(p) for p in prefer if tuple(p) in found]
            return NonNormal(chosen[0] if chosen else violations[-1], n, tuple(violations))
    return Normal(max_degree)


# ------------------------------------------------------------
# Decomposição
# ------------------------------------------------------------
def decompose(c: Union[Configuration, IntMatrix], alpha: Sequence[int], n: int) -> List[Vector]:
    """
    alpha ∈ slice[n] como soma de n colunas de A (com repetição),
    escolhidas gulosamente na ordem das colunas com resto em slice[k-1].
    """
    if isinstance(c, IntMatrix):
        c = as_configuration(c)
    if n < 0:
        raise InvalidInput(f"n deve ser >= 0, recebido {n}")
    alpha = tuple(int(x) for x in alpha)
    slices = DegreeSlices(c)
    slices.ensure(n)
    if not slices.contains(alpha, n):
        raise NotDecomposable(f"{alpha!r} não é soma de {n} colunas", alpha=list(alpha), n=n)
    columns: List[Vector] = []
    for col in c.matrix.columns():
        if col not in columns:
            columns.append(col)
    out: List[Vector] = []
    rest = alpha
    for k in range(n, 0, -1):
        for col in columns:
            cand = tuple(x - y for x, y in zip(rest, col))
            if slices.contains(cand, k - 1):
                out.append(col)
                rest = cand
                break
    return out


# ------------------------------------------------------------
# Testemunha por ciclos ímpares
# ------------------------------------------------------------
def odd_cycle_witness(g: Graph) -> Optional[Tuple[Vector, int]]:
    """
    (alpha, grau) para A_G±, com alpha = sum_{C1} e_i - sum_{C2} e_j
    + ((r+s)/2) e_{d+1} para o primeiro par de ciclos ímpares disjuntos
    (ordem canônica) com alpha ∈ ZA_G±; None se não houver.
    """
    d = g.vertex_count
    csc = central_symmetrize(graph_config_rho(g))
    lattice = hnf(csc.matrix)
    for c1, c2 in _disjoint_pairs(odd_chordless_cycles(g)):
        degree = (len(c1) + len(c2)) // 2
        alpha = [0] * (d + 1)
        for i in c1:
            alpha[i - 1] = 1
        for j in c2:
            alpha[j - 1] = -1
        alpha[d] = degree
        if in_column_lattice(lattice, alpha):
            return tuple(alpha), degree
    return None
