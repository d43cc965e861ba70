# =============================================================================
# csc.toric
#
# Propósito:
# - Aritmética de binômios x^u - x^v (coeficientes +1/-1, corpo irrelevante).
# - Ordens monomiais graduadas (revlex com permutação, lex graduada).
# - Buchberger para binômios com critérios de Gebauer-Möller e estratégia
#   normal de seleção.
# - Ideal tórico I_A: binômios de uma base do reticulado Ker(A), saturados
#   nas variáveis que a base compartilha (I : x_i^∞ via revlex com x_i
#   menor) e reduzidos.
# - Verificador independente de bases reduzidas, graus dos geradores
#   minimais por fibras e a base explícita de grafos bipartidos cordais.
#
# Convenções:
# - Monômios são tuplas de expoentes (inteiros >= 0).
# - TermOrder.variable_order lista as variáveis da menor para a maior.
# - Nomes: x1..xn para matrizes simples; x0..x2n para A± (x0 = centro);
#   z, x_{i,k}, y_{i,k} para a base de grafos bipartidos.
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .config import setting
from .configs import central_symmetrize, graph_config_mu, is_configuration
from .errors import CscError, InvalidInput, NotBipartite, PreconditionViolated, ResourceLimit
from .graphs import Bipartition, Graph, is_bipartite, is_chordal_bipartite, is_connected, star_condition_violation
from .intlin import IntMatrix, hnf

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


# ------------------------------------------------------------
# Ordens monomiais
# ------------------------------------------------------------
class OrderKind(Enum):
    GRADED_REVLEX = "grevlex"
    GRADED_LEX = "glex"
    REVLEX_WITH_ORDERING = "revlex"


@dataclass(frozen=True)
class TermOrder:
    """
    Ordem graduada. variable_order vai da menor para a maior variável;
    para revlex o desempate olha primeiro a menor variável, para lex a maior.
    """
    kind: OrderKind
    variable_order: Tuple[int, ...]
    _largest_first: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if sorted(self.variable_order) != list(range(len(self.variable_order))):
            raise InvalidInput(f"variable_order não é uma permutação: {self.variable_order!r}")
        object.__setattr__(self, "_largest_first", tuple(reversed(self.variable_order)))

    @property
    def nvars(self) -> int:
        return len(self.variable_order)

    @classmethod
    def graded_revlex(cls, n: int) -> "TermOrder":
        """x1 > x2 > … > xn (a última variável é a menor)."""
        return cls(OrderKind.GRADED_REVLEX, tuple(range(n - 1, -1, -1)))

    @classmethod
    def graded_lex(cls, n: int) -> "TermOrder":
        return cls(OrderKind.GRADED_LEX, tuple(range(n - 1, -1, -1)))

    @classmethod
    def revlex(cls, smallest_first: Sequence[int]) -> "TermOrder":
        return cls(OrderKind.REVLEX_WITH_ORDERING, tuple(smallest_first))

    @classmethod
    def center_smallest(cls, n_base: int) -> "TermOrder":
        """
        Revlex para A± (2n+1 variáveis): centro menor, depois Minus e Plus
        em ordem decrescente de índice (x1 é a maior).
        """
        return cls.revlex((0,) + tuple(range(2 * n_base, 0, -1)))

    def with_smallest(self, var: int) -> "TermOrder":
        """Revlex com 'var' menor e as demais na ordem relativa atual."""
        rest = tuple(v for v in self.variable_order if v != var)
        return TermOrder.revlex((var,) + rest)

    def key(self, m: Monomial) -> tuple:
        """Chave de comparação: maior chave = maior monômio."""
        if self.kind is OrderKind.GRADED_LEX:
            return (sum(m), tuple(m[v] for v in self._largest_first))
        return (sum(m), tuple(-m[v] for v in self.variable_order))

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind.value, "smallest_to_largest": list(self.variable_order)}


# ------------------------------------------------------------
# Monômios e binômios
# ------------------------------------------------------------
def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _shift(m: Monomial, minus: Monomial, plus: Monomial) -> Monomial:
    return tuple(x - y + z for x, y, z in zip(m, minus, plus))


@dataclass(frozen=True)
class Binomial:
    """x^lead - x^trail, com lead > trail na ordem da base que o contém."""
    lead: Monomial
    trail: Monomial

    @property
    def degree(self) -> int:
        return sum(self.lead)

    def exponent_vector(self) -> Tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.lead, self.trail))

    def is_primitive(self) -> bool:
        return _coprime(self.lead, self.trail)


def orient(u: Monomial, v: Monomial, order: TermOrder) -> Optional[Binomial]:
    if u == v:
        return None
    if order.key(u) < order.key(v):
        u, v = v, u
    return Binomial(tuple(u), tuple(v))


def binomial_from_vector(w: Sequence[int], order: TermOrder) -> Optional[Binomial]:
    """x^{w+} - x^{w-} orientado."""
    pos = tuple(max(x, 0) for x in w)
    neg = tuple(max(-x, 0) for x in w)
    return orient(pos, neg, order)


def spoly(f: Binomial, g: Binomial) -> Tuple[Monomial, Monomial]:
    """S-binômio de f e g como par de monômios (não orientado)."""
    L = _lcm(f.lead, g.lead)
    return _shift(L, f.lead, f.trail), _shift(L, g.lead, g.trail)


def reduce_binomial(u: Monomial, v: Monomial, G: Sequence[Binomial], order: TermOrder) -> Optional[Binomial]:
    """
    Redução do termo líder de u - v por G até que nenhum líder de G divida
    o termo líder. None se o binômio reduz a zero.
    """
    while True:
        if u == v:
            return None
        if order.key(u) < order.key(v):
            u, v = v, u
        for g in G:
            if _divides(g.lead, u):
                u = _shift(u, g.lead, g.trail)
                break
        else:
            return Binomial(u, v)


def normal_form_monomial(m: Monomial, G: Sequence[Binomial]) -> Monomial:
    """Forma normal de um monômio (única quando G é base de Gröbner)."""
    while True:
        for g in G:
            if _divides(g.lead, m):
                m = _shift(m, g.lead, g.trail)
                break
        else:
            return m


# ------------------------------------------------------------
# Bases de Gröbner
# ------------------------------------------------------------
def variable_names(n: int, csc: bool = False) -> Tuple[str, ...]:
    """x1..xn, ou x0..x{n-1} para as 2n+1 colunas de A±."""
    start = 0 if csc else 1
    return tuple(f"x{k + start}" for k in range(n))


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Binomial, names: Sequence[str]) -> str:
    return f"{format_monomial(b.lead, names)} - {format_monomial(b.trail, names)}"


@dataclass(frozen=True)
class GroebnerBasis:
    elements: Tuple[Binomial, ...]
    order: TermOrder
    reduced: bool
    names: Optional[Tuple[str, ...]] = None

    def variable_names(self) -> Tuple[str, ...]:
        return self.names if self.names is not None else variable_names(self.order.nvars)

    @property
    def max_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)

    def to_text(self) -> str:
        names = self.variable_names()
        return "\n".join(format_binomial(b, names) for b in self.elements)

    def to_dict(self) -> Dict[str, object]:
        names = self.variable_names()
        return {
            "order": self.order.describe(),
            "reduced": self.reduced,
            "variables": list(names),
            "binomials": [format_binomial(b, names) for b in self.elements],
            "exponents": [{"lead": list(b.lead), "trail": list(b.trail)} for b in self.elements],
        }


class _PairBudget:
    """Contador de S-pares compartilhado entre as etapas de uma computação."""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, stage: str, G: Sequence[Binomial]) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimit(
                f"orçamento de {self.limit} S-pares esgotado na etapa '{stage}'",
                partial={
                    "stage": stage,
                    "spairs": self.limit,
                    "generators": [{"lead": list(g.lead), "trail": list(g.trail)} for g in G],
                },
                budget=self.limit,
            )


Pairs = Dict[Tuple[int, int], Tuple]


def _select(P: Pairs) -> Tuple[int, int]:
    """Estratégia normal: par de menor mmc dos líderes (chave guardada em P)."""
    return min(P, key=lambda p: (P[p], p))


def _update(G: List[Binomial], P: Pairs, f: Binomial, order: TermOrder) -> Pairs:
    """
    Acrescenta f a G (no lugar) e devolve o novo conjunto de pares,
    com os critérios de Gebauer-Möller. Cada par leva a chave do seu mmc.
    """
    lmf = f.lead
    lmG = [g.lead for g in G]
    kept: Pairs = {}
    for p, key in P.items():
        L = _lcm(lmG[p[0]], lmG[p[1]])
        if (not _divides(lmf, L)
                or L == _lcm(lmG[p[0]], lmf)
                or L == _lcm(lmG[p[1]], lmf)):
            kept[p] = key
    lcm_dict: Dict[Monomial, List[int]] = {}
    for i in range(len(G)):
        lcm_dict.setdefault(_lcm(lmG[i], lmf), []).append(i)
    minimalized: List[Tuple[Monomial, Tuple]] = []
    for L, key in sorted(((L, order.key(L)) for L in lcm_dict), key=lambda t: t[1]):
        if all(not _divides(L_, L) for L_, _ in minimalized):
            minimalized.append((L, key))
    for L, key in minimalized:
        if not any(_coprime(lmG[i], lmf) for i in lcm_dict[L]):
            kept[(min(lcm_dict[L]), len(G))] = key
    G.append(f)
    return kept


def _minimalize(G: Sequence[Binomial], order: TermOrder) -> List[Binomial]:
    Gmin: List[Binomial] = []
    for f in sorted(G, key=lambda h: order.key(h.lead)):
        if all(not _divides(g.lead, f.lead) for g in Gmin):
            Gmin.append(f)
    return Gmin


def _interreduce(G: Sequence[Binomial], order: TermOrder) -> List[Binomial]:
    Gred = []
    for i, g in enumerate(G):
        others = list(G[:i]) + list(G[i + 1:])
        Gred.append(Binomial(g.lead, normal_form_monomial(g.trail, others)))
    return sorted(Gred, key=lambda b: (order.key(b.lead), order.key(b.trail)))


def buchberger(
    F: Iterable[Binomial],
    order: TermOrder,
    budget: Optional[int] = None,
    stage: str = "final",
    _tracker: Optional[_PairBudget] = None,
) -> List[Binomial]:
    """
    Base de Gröbner reduzida do ideal gerado pelos binômios F.
    ResourceLimit se o número de S-pares exceder o orçamento.
    """
    tracker = _tracker or _PairBudget(setting("toric", "spair_budget", budget))
    G: List[Binomial] = []
    P: Pairs = {}
    for f in F:
        r = reduce_binomial(f.lead, f.trail, G, order)
        if r is not None:
            P = _update(G, P, r, order)
    while P:
        i, j = _select(P)
        del P[(i, j)]
        tracker.spend(stage, G)
        u, v = spoly(G[i], G[j])
        r = reduce_binomial(u, v, G, order)
        if r is not None:
            P = _update(G, P, r, order)
    return _interreduce(_minimalize(G, order), order)


# ------------------------------------------------------------
# Ideal tórico
# ------------------------------------------------------------
def kernel_lattice(a: IntMatrix) -> List[Tuple[int, ...]]:
    """
    Base canônica de Ker(A) ∩ Z^n: últimas n - r colunas de U (A·U = [B|O]),
    normalizadas pela HNF da própria base.
    """
    res = hnf(a)
    n = a.cols
    if res.rank == n:
        return []
    U = res.transform
    K = IntMatrix.from_columns([U.column(j) for j in range(res.rank, n)])
    return hnf(K).basis()


def _shorten(basis: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Redução gulosa em norma L1 (b_i ± b_j); preserva o reticulado."""
    vecs = [list(b) for b in basis]

    def l1(v):
        return sum(abs(x) for x in v)

    changed = True
    while changed:
        changed = False
        for i in range(len(vecs)):
            for j in range(len(vecs)):
                if i == j:
                    continue
                for s in (1, -1):
                    cand = [x + s * y for x, y in zip(vecs[i], vecs[j])]
                    if l1(cand) < l1(vecs[i]):
                        vecs[i] = cand
                        changed = True
    return [tuple(v) for v in vecs]


def _saturation_variables(basis: Sequence[Tuple[int, ...]], n: int) -> List[int]:
    """
    Variáveis que aparecem em mais de um vetor da base. Uma coordenada
    presente num único vetor varia monotonamente ao longo de qualquer
    caminho de movimentos, logo J : x_j^∞ não acrescenta nada por ela.
    """
    return [i for i in range(n) if sum(1 for b in basis if b[i]) > 1]


def _require_configuration(a: IntMatrix) -> None:
    if is_configuration(a) is None:
        raise PreconditionViolated(
            "o ideal tórico graduado exige uma configuração", hypothesis="configuration"
        )


def toric_ideal_gb(
    a: IntMatrix,
    order: Optional[TermOrder] = None,
    budget: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
    verify: Optional[bool] = None,
) -> GroebnerBasis:
    """
    Base de Gröbner reduzida de I_A.

    J = <x^{w+} - x^{w-} : w na base de Ker(A)>; para cada variável x_i
    presente em mais de um vetor da base, base de J em revlex com x_i menor
    e divisão pela maior potência de x_i (Bayer-Stillman), o que dá
    J : x_i^∞. Ao fim, Buchberger na ordem pedida.
    """
    n = a.cols
    order = order or TermOrder.graded_revlex(n)
    if order.nvars != n:
        raise InvalidInput(f"ordem com {order.nvars} variáveis para matriz com {n} colunas")
    if any(not any(col) for col in a.columns()):
        raise PreconditionViolated("coluna nula na matriz", hypothesis="nonzero_columns")
    names = tuple(names) if names is not None else None
    basis = kernel_lattice(a)
    if not basis:
        return GroebnerBasis((), order, True, names)
    _require_configuration(a)

    tracker = _PairBudget(setting("toric", "spair_budget", budget))
    lattice = _shorten(basis)
    sat_vars = _saturation_variables(lattice, n)
    if len(_saturation_variables(basis, n)) < len(sat_vars):
        lattice, sat_vars = basis, _saturation_variables(basis, n)
    logger.debug("saturando %d de %d variáveis", len(sat_vars), n)
    gens = [binomial_from_vector(w, order) for w in lattice]
    for var in sat_vars:
        sat_order = order.with_smallest(var)
        G = buchberger(gens, sat_order, stage=f"saturate:x{var}", _tracker=tracker)
        gens = []
        for g in G:
            k = min(g.lead[var], g.trail[var])
            if k:
                lead = g.lead[:var] + (g.lead[var] - k,) + g.lead[var + 1:]
                trail = g.trail[:var] + (g.trail[var] - k,) + g.trail[var + 1:]
                g = Binomial(lead, trail)
            gens.append(g)
        logger.debug("saturação em x%d: %d geradores, %d S-pares", var, len(gens), tracker.used)

    G = buchberger(gens, order, stage="final", _tracker=tracker)
    gb = GroebnerBasis(tuple(G), order, True, names)
    logger.info("base reduzida com %d binômios (%d S-pares)", len(G), tracker.used)
    if setting("toric", "verify_results", verify) and not verify_reduced_gb(gb, a):
        raise CscError("a base calculada falhou na verificação independente")
    return gb


def initial_ideal(gb: GroebnerBasis) -> List[Monomial]:
    if not gb.reduced:
        raise PreconditionViolated("initial_ideal exige base reduzida", hypothesis="reduced")
    return [b.lead for b in gb.elements]


def is_squarefree(monomials: Iterable[Monomial]) -> bool:
    return all(e <= 1 for m in monomials for e in m)


def ideals_equal(gens1: Iterable[Binomial], gens2: Iterable[Binomial], order: TermOrder) -> bool:
    """
    Igualdade de ideais por redução mútua a zero entre as bases das duas listas.
    """
    g1 = buchberger(gens1, order)
    g2 = buchberger(gens2, order)
    return (all(reduce_binomial(b.lead, b.trail, g2, order) is None for b in g1)
            and all(reduce_binomial(b.lead, b.trail, g1, order) is None for b in g2))


# ------------------------------------------------------------
# Fibras de grau t
# ------------------------------------------------------------
def _degree_fibers(a: IntMatrix, t: int, monomial_budget: Optional[int]) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
    """
    Monômios de grau t (multiconjuntos de índices) agrupados pela imagem A·u.
    """
    budget = setting("toric", "monomial_budget", monomial_budget)
    n = a.cols
    count = comb(n + t - 1, t)
    if count > budget:
        raise ResourceLimit(
            f"{count} monômios de grau {t} excedem o orçamento de {budget}",
            partial={"degree": t, "monomials": count}, budget=budget,
        )
    cols = a.columns()
    fibers: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for combo in combinations_with_replacement(range(n), t):
        image = tuple(map(sum, zip(*(cols[i] for i in combo))))
        fibers.setdefault(image, []).append(combo)
    return fibers


def _exponents(combo: Sequence[int], n: int) -> Monomial:
    m = [0] * n
    for i in combo:
        m[i] += 1
    return tuple(m)


def _fiber_components(fiber: List[Tuple[int, ...]]) -> int:
    """Componentes do grafo 'compartilham uma variável' na fibra."""
    G = nx.Graph()
    G.add_nodes_from(range(len(fiber)))
    first_with: Dict[int, int] = {}
    for idx, combo in enumerate(fiber):
        for var in set(combo):
            if var in first_with:
                G.add_edge(idx, first_with[var])
            else:
                first_with[var] = idx
    return nx.number_connected_components(G)


def minimal_generator_degrees(
    a: IntMatrix, max_degree: int, monomial_budget: Optional[int] = None
) -> Dict[int, int]:
    """
    {grau: número de geradores minimais} para graus <= max_degree.
    Numa fibra de grau t, os geradores minimais de grau t são
    (componentes do grafo de monômios que compartilham variável) - 1.
    """
    if max_degree < 2:
        raise InvalidInput(f"max_degree deve ser >= 2, recebido {max_degree}")
    if not kernel_lattice(a):
        return {}
    _require_configuration(a)
    out: Dict[int, int] = {}
    for t in range(1, max_degree + 1):
        fibers = _degree_fibers(a, t, monomial_budget)
        count = sum(_fiber_components(f) - 1 for f in fibers.values() if len(f) > 1)
        if count:
            out[t] = count
        logger.debug("grau %d: %d fibras, %d geradores minimais", t, len(fibers), count)
    return out


def is_quadratically_generated(a: IntMatrix, max_degree: int = 3, monomial_budget: Optional[int] = None) -> bool:
    """Sem geradores minimais fora do grau 2 até max_degree."""
    return all(t == 2 for t in minimal_generator_degrees(a, max_degree, monomial_budget))


# ------------------------------------------------------------
# Verificação independente
# ------------------------------------------------------------
def verify_reduced_gb(candidate: GroebnerBasis, a: IntMatrix, monomial_budget: Optional[int] = None) -> bool:
    """
    True sse 'candidate' é a base reduzida de I_A na sua ordem:
    núcleo, orientação, primitividade, redução, critério de Buchberger e
    completude por fibras até o grau máximo + 1 (em cada fibra, exatamente
    um monômio padrão).
    """
    order = candidate.order
    n = a.cols
    G = list(candidate.elements)
    if order.nvars != n:
        logger.info("verificação: ordem com %d variáveis, matriz com %d colunas", order.nvars, n)
        return False
    if not G:
        return not kernel_lattice(a)
    for b in G:
        if len(b.lead) != n or len(b.trail) != n:
            return False
        if a.apply(b.lead) != a.apply(b.trail):
            logger.info("verificação: binômio fora do núcleo: %s", b)
            return False
        if order.key(b.lead) <= order.key(b.trail):
            logger.info("verificação: orientação inválida: %s", b)
            return False
        if not b.is_primitive():
            logger.info("verificação: binômio não primitivo: %s", b)
            return False
    for i, g in enumerate(G):
        for j, h in enumerate(G):
            if i == j:
                continue
            if _divides(h.lead, g.lead) or _divides(h.lead, g.trail):
                logger.info("verificação: base não reduzida (%s por %s)", g, h)
                return False
        if _divides(g.lead, g.trail):
            return False
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if _coprime(G[i].lead, G[j].lead):
                continue
            u, v = spoly(G[i], G[j])
            if reduce_binomial(u, v, G, order) is not None:
                logger.info("verificação: S-par (%d, %d) não reduz a zero", i, j)
                return False
    if is_configuration(a) is None:
        logger.info("verificação: a matriz não é configuração, completude por grau indisponível")
        return False
    top = candidate.max_degree + 1
    for t in range(1, top + 1):
        for fiber in _degree_fibers(a, t, monomial_budget).values():
            standard = 0
            for combo in fiber:
                m = _exponents(combo, n)
                if not any(_divides(g.lead, m) for g in G):
                    standard += 1
            if standard != 1:
                logger.info("verificação: fibra de grau %d com %d monômios padrão", t, standard)
                return False
    return True


# ------------------------------------------------------------
# Base explícita para grafos bipartidos cordais com a condição estrela
# ------------------------------------------------------------
def bipartite_gb(g: Graph, parts: Optional[Bipartition] = None) -> GroebnerBasis:
    """
    Base reduzida de I_{A_Ḡ±} para G conexo, bipartido cordal, com a
    condição estrela na bipartição rotulada 'parts' (V1 -> 1..p, V2 -> 1'..q').

    Variáveis: z = centro; x_{ik} = coluna [e_{v_i} - e_{w_k}; 1] e
    y_{ik} = [e_{w_k} - e_{v_i}; 1]. Ordem revlex
    z < y11 < x11 < y12 < x12 < … < y_pq < x_pq (só arestas presentes).
    """
    if not is_connected(g):
        raise PreconditionViolated("o grafo precisa ser conexo", hypothesis="connected")
    if parts is None:
        parts = is_bipartite(g)
        if parts is None:
            raise NotBipartite()
    violation = star_condition_violation(g, parts)
    if not is_chordal_bipartite(g):
        raise PreconditionViolated("há ciclo de comprimento >= 6 sem corda", hypothesis="chordal_bipartite")
    if violation is not None:
        raise PreconditionViolated(
            f"condição estrela falha na quádrupla (i, j, k, l) = {violation}",
            hypothesis="star_condition", quadruple=list(violation),
        )
    v1, v2 = tuple(parts[0]), tuple(parts[1])
    csc = central_symmetrize(graph_config_mu(g))
    nvars = csc.matrix.cols
    edge_index = {e: k for k, e in enumerate(g.edges)}

    xvar: Dict[Tuple[int, int], int] = {}
    yvar: Dict[Tuple[int, int], int] = {}
    for i, v in enumerate(v1, start=1):
        for k, w in enumerate(v2, start=1):
            e = (min(v, w), max(v, w))
            if e not in edge_index:
                continue
            plus, minus = csc.plus(edge_index[e]), csc.minus(edge_index[e])
            xvar[(i, k)], yvar[(i, k)] = (plus, minus) if v < w else (minus, plus)

    smallest_first = [0]
    names = ["?"] * nvars
    names[0] = "z"
    for ik in sorted(xvar):
        smallest_first += [yvar[ik], xvar[ik]]
        names[xvar[ik]] = f"x_{{{ik[0]},{ik[1]}}}"
        names[yvar[ik]] = f"y_{{{ik[0]},{ik[1]}}}"
    order = TermOrder.revlex(smallest_first)

    def mono(*variables: int) -> Monomial:
        m = [0] * nvars
        for var in variables:
            m[var] += 1
        return tuple(m)

    X, Y = xvar, yvar
    elements: List[Binomial] = []
    for ik in sorted(xvar):
        elements.append(Binomial(mono(X[ik], Y[ik]), mono(0, 0)))
    p, q = len(v1), len(v2)
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            for k in range(1, q + 1):
                for l in range(k + 1, q + 1):
                    if not all(e in X for e in ((i, k), (i, l), (j, k), (j, l))):
                        continue
                    elements += [
                        Binomial(mono(X[i, l], X[j, k]), mono(X[i, k], X[j, l])),
                        Binomial(mono(X[i, l], Y[j, l]), mono(X[i, k], Y[j, k])),
                        Binomial(mono(Y[j, l], X[j, k]), mono(X[i, k], Y[i, l])),
                        Binomial(mono(X[j, l], Y[j, k]), mono(Y[i, k], X[i, l])),
                        Binomial(mono(Y[i, l], X[j, l]), mono(Y[i, k], X[j, k])),
                        Binomial(mono(Y[i, l], Y[j, k]), mono(Y[i, k], Y[j, l])),
                    ]
    # com q >= 3 as famílias repetem líderes; minimalizar e inter-reduzir dá a base reduzida
    oriented = [orient(b.lead, b.trail, order) for b in elements]
    G = _interreduce(_minimalize(oriented, order), order)
    logger.debug("base bipartida: %d binômios das famílias, %d após redução", len(elements), len(G))
    return GroebnerBasis(tuple(G), order, True, tuple(names))
