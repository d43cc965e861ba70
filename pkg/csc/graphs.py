# =============================================================================
# csc.graphs
#
# Propósito:
# - Grafos simples com vértices 1..d e lista ordenada de arestas {i, j}, i < j.
# - Critérios de grafos que governam a álgebra de A_G e A_Ḡ:
#     * conexidade e bipartição (2-coloração BFS com raízes de menor rótulo);
#     * pares de ciclos ímpares disjuntos e a condição de ponte entre eles;
#     * bipartido cordal (nenhum ciclo induzido de comprimento >= 6);
#     * condição estrela de uma bipartição rotulada;
#     * separação do ápice (vértice comum a todos os ciclos ímpares).
# - Famílias de grafos (roda, ciclo, caminho, completos, atlas de networkx).
#
# Observações:
# - Buscas exaustivas usam ciclos sem corda (networkx >= 3.1): todo ciclo
#   ímpar contém um ciclo ímpar sem corda no seu conjunto de vértices.
# - Testemunhas são canônicas: ciclo começa no menor vértice, sentido com
#   o menor segundo vértice; pares ordenados por (comprimento, sequência).
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from .config import setting
from .errors import (
    ApexNotUniversalForOddCycles,
    InvalidInput,
    NotBipartite,
    PreconditionViolated,
    SizeLimit,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Bipartition = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class Graph:
    """
    Grafo simples finito: vértices 1..vertex_count, arestas (i, j) com i < j
    na ordem dada (a ordem define as colunas de A_G e A_Ḡ).
    """
    vertex_count: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidInput(f"número de vértices inválido: {self.vertex_count}")
        seen = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise InvalidInput(f"laço no vértice {i}")
            if not i < j:
                raise InvalidInput(f"aresta {e!r} fora da forma (i, j) com i < j")
            if i < 1 or j > self.vertex_count:
                raise InvalidInput(f"aresta {e!r} fora de 1..{self.vertex_count}")
            if e in seen:
                raise InvalidInput(f"aresta repetida {e!r}")
            seen.add(e)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertex_count: Optional[int] = None) -> "Graph":
        """
        Normaliza cada par para (min, max) preservando a ordem.
        Sem 'vertex_count', usa o maior rótulo.
        """
        norm: List[Edge] = []
        for e in edges:
            if len(e) != 2:
                raise InvalidInput(f"aresta deve ter dois vértices: {e!r}")
            i, j = int(e[0]), int(e[1])
            norm.append((min(i, j), max(i, j)) if i != j else (i, j))
        if vertex_count is None:
            vertex_count = max((j for _, j in norm), default=1)
        return cls(vertex_count, tuple(norm))

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """
        Reetiqueta os nós ordenados como 1..k; arestas em ordem lexicográfica.
        """
        label = {v: k + 1 for k, v in enumerate(sorted(G.nodes()))}
        edges = sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in G.edges())
        return cls(max(len(label), 1), tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_set

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices())
        G.add_edges_from(self.edges)
        return G

    def without_vertex(self, v: int) -> nx.Graph:
        """Subgrafo induzido em V - {v} (rótulos preservados)."""
        G = self.to_networkx()
        G.remove_node(v)
        return G


@dataclass(frozen=True)
class OddCyclePair:
    cycle1: Tuple[int, ...]
    cycle2: Tuple[int, ...]
    disjoint: bool


# ------------------------------------------------------------
# Conexidade e bipartição
# ------------------------------------------------------------
def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.to_networkx())


def _bfs_coloring(G: nx.Graph) -> Optional[Dict[int, int]]:
    """
    2-coloração por BFS, raiz de cada componente = menor rótulo (cor 0),
    vizinhos visitados em ordem crescente. None se houver aresta monocromática.
    """
    color: Dict[int, int] = {}
    for root in sorted(G.nodes()):
        if root in color:
            continue
        color[root] = 0
        for u, w in nx.bfs_edges(G, root, sort_neighbors=sorted):
            color[w] = 1 - color[u]
    for u, w in G.edges():
        if color[u] == color[w]:
            return None
    return color


def _parts_from_coloring(color: Dict[int, int]) -> Bipartition:
    v1 = tuple(sorted(v for v, c in color.items() if c == 0))
    v2 = tuple(sorted(v for v, c in color.items() if c == 1))
    return v1, v2


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """
    Bipartição (V1, V2) com o vértice 1 em V1, ou None.
    """
    color = _bfs_coloring(g.to_networkx())
    if color is None:
        return None
    return _parts_from_coloring(color)


# ------------------------------------------------------------
# Ciclos ímpares
# ------------------------------------------------------------
def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Rotaciona para o menor vértice e escolhe o sentido de menor segundo vértice."""
    seq = list(seq)
    k = seq.index(min(seq))
    rot = seq[k:] + seq[:k]
    rev = [rot[0]] + rot[1:][::-1]
    return tuple(min(rot, rev))


def _check_size(g: Graph, vertex_limit: Optional[int]) -> None:
    limit = setting("graphs", "exhaustive_vertex_limit", vertex_limit)
    if g.vertex_count > limit:
        raise SizeLimit(
            f"busca exaustiva limitada a {limit} vértices (grafo com {g.vertex_count})",
            vertex_count=g.vertex_count, limit=limit,
        )


def odd_chordless_cycles(g: Graph, vertex_limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Ciclos ímpares sem corda, canônicos, ordenados por (comprimento, sequência).
    """
    _check_size(g, vertex_limit)
    cycles = {
        canonical_cycle(c)
        for c in nx.chordless_cycles(g.to_networkx())
        if len(c) % 2 == 1
    }
    return sorted(cycles, key=lambda c: (len(c), c))


def _disjoint_pairs(cycles: List[Tuple[int, ...]]) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    for a, c1 in enumerate(cycles):
        s1 = set(c1)
        for c2 in cycles[a + 1:]:
            if s1.isdisjoint(c2):
                yield c1, c2


def find_disjoint_odd_cycles(g: Graph, vertex_limit: Optional[int] = None) -> Optional[OddCyclePair]:
    """
    Primeiro par de ciclos ímpares disjuntos na ordem canônica, ou None.
    """
    for c1, c2 in _disjoint_pairs(odd_chordless_cycles(g, vertex_limit)):
        return OddCyclePair(c1, c2, True)
    return None


def _joined(g: Graph, c1: Sequence[int], c2: Sequence[int]) -> bool:
    return any(g.has_edge(u, w) for u in c1 for w in c2)


def unbridged_odd_cycle_pair(g: Graph, vertex_limit: Optional[int] = None) -> Optional[OddCyclePair]:
    """
    Par de ciclos ímpares disjuntos sem aresta entre eles, ou None.
    Ciclos sem corda bastam: subciclos ímpares herdam a ausência de ponte.
    """
    for c1, c2 in _disjoint_pairs(odd_chordless_cycles(g, vertex_limit)):
        if not _joined(g, c1, c2):
            return OddCyclePair(c1, c2, True)
    return None


def disjoint_odd_cycles_bridged(g: Graph, vertex_limit: Optional[int] = None) -> bool:
    """
    True sse todo par de ciclos ímpares disjuntos é ligado por uma aresta
    (critério de normalidade de K[A_G]).
    """
    if not is_connected(g):
        raise PreconditionViolated("o grafo precisa ser conexo", hypothesis="connected")
    return unbridged_odd_cycle_pair(g, vertex_limit) is None


# ------------------------------------------------------------
# Bipartidos cordais e condição estrela
# ------------------------------------------------------------
def is_chordal_bipartite(g: Graph, vertex_limit: Optional[int] = None) -> bool:
    """
    Bipartido em que todo ciclo de comprimento >= 6 tem corda.
    """
    if is_bipartite(g) is None:
        raise NotBipartite()
    _check_size(g, vertex_limit)
    for c in nx.chordless_cycles(g.to_networkx()):
        if len(c) >= 6:
            logger.debug("ciclo induzido de comprimento %d: %s", len(c), canonical_cycle(c))
            return False
    return True


def _validate_parts(g: Graph, parts: Bipartition) -> Bipartition:
    v1, v2 = tuple(parts[0]), tuple(parts[1])
    s1, s2 = set(v1), set(v2)
    if s1 & s2 or len(s1) != len(v1) or len(s2) != len(v2):
        raise NotBipartite("partes sobrepostas ou com repetição", parts=[list(v1), list(v2)])
    if s1 | s2 != set(g.vertices()):
        raise NotBipartite("as partes não cobrem os vértices do grafo", parts=[list(v1), list(v2)])
    for i, j in g.edges:
        if (i in s1) == (j in s1):
            raise NotBipartite(f"aresta {(i, j)!r} dentro de uma parte", parts=[list(v1), list(v2)])
    return v1, v2


def star_condition_violation(g: Graph, parts: Optional[Bipartition] = None) -> Optional[Tuple[int, int, int, int]]:
    """
    Primeira quádrupla (i, j, k, l) com i<j, k<l, {i,l'},{j,k'},{j,l'} em E
    e {i,k'} fora de E, nos rótulos 1..p e 1'..q' das partes; ou None.
    """
    if parts is None:
        parts = is_bipartite(g)
        if parts is None:
            raise NotBipartite()
    v1, v2 = _validate_parts(g, parts)
    lab1 = {v: n + 1 for n, v in enumerate(v1)}
    lab2 = {v: n + 1 for n, v in enumerate(v2)}
    adj = set()
    for a, b in g.edges:
        u, w = (a, b) if a in lab1 else (b, a)
        adj.add((lab1[u], lab2[w]))
    p, q = len(v1), len(v2)
    for j in range(1, p + 1):
        for l in range(1, q + 1):
            if (j, l) not in adj:
                continue
            for i in range(1, j):
                if (i, l) not in adj:
                    continue
                for k in range(1, l):
                    if (j, k) in adj and (i, k) not in adj:
                        return i, j, k, l
    return None


def satisfies_star_condition(g: Graph, parts: Optional[Bipartition] = None) -> bool:
    return star_condition_violation(g, parts) is None


# ------------------------------------------------------------
# Ápice e separação
# ------------------------------------------------------------
def find_odd_cycle_apex(g: Graph) -> Optional[int]:
    """
    Menor vértice v tal que todo ciclo ímpar passa por v (G - v bipartido);
    None se G é bipartido ou se não há tal vértice.
    """
    if is_bipartite(g) is not None:
        return None
    for v in g.vertices():
        if _bfs_coloring(g.without_vertex(v)) is not None:
            return v
    return None


def split_apex(g: Graph, v: int) -> Graph:
    """
    Grafo bipartido G' em d+1 vértices com I_{A_G} = I_{A_G'}.

    G'' = G - v é 2-colorido (V1, V2); arestas {i, v} com i em V1 ficam,
    as com i em V2 viram {i, d+1}; as demais arestas não mudam.
    A ordem das arestas é preservada.
    """
    if v not in g.vertices():
        raise InvalidInput(f"vértice {v} fora de 1..{g.vertex_count}")
    if not is_connected(g):
        raise PreconditionViolated("o grafo precisa ser conexo", hypothesis="connected")
    if is_bipartite(g) is not None:
        raise PreconditionViolated("grafo já bipartido: nada a separar", hypothesis="nonbipartite")
    color = _bfs_coloring(g.without_vertex(v))
    if color is None:
        raise ApexNotUniversalForOddCycles(f"há ciclo ímpar que não passa pelo vértice {v}", vertex=v)
    new = g.vertex_count + 1
    edges: List[Edge] = []
    for i, j in g.edges:
        if v in (i, j):
            other = j if i == v else i
            edges.append((i, j) if color[other] == 0 else (other, new))
        else:
            edges.append((i, j))
    return Graph(new, tuple(edges))


# ------------------------------------------------------------
# Famílias
# ------------------------------------------------------------
def wheel_graph(d: int) -> Graph:
    """Roda W_d em [d]: centro = vértice 1, aro = ciclo 2..d."""
    if d < 4:
        raise InvalidInput(f"roda W_d exige d >= 4, recebido {d}")
    return Graph.from_networkx(nx.wheel_graph(d))


def cycle_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    """K_{p,q} com partes 1..p e p+1..p+q."""
    return Graph.from_networkx(nx.complete_bipartite_graph(p, q))


def complete_multipartite_graph(*sizes: int) -> Graph:
    return Graph.from_networkx(nx.complete_multipartite_graph(*sizes))


def connected_graphs(k: int) -> List[Graph]:
    """
    Um representante por classe de isomorfismo de grafos conexos em k vértices
    (atlas de networkx, k <= 7).
    """
    if not 1 <= k <= 7:
        raise InvalidInput(f"o atlas cobre 1..7 vértices, recebido {k}")
    return [
        Graph.from_networkx(G)
        for G in nx.graph_atlas_g()
        if G.number_of_nodes() == k and nx.is_connected(G)
    ]


_FAMILIES = {
    "wheel": (wheel_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "complete": (complete_graph, 1),
    "bipartite": (complete_bipartite_graph, 2),
    "multipartite": (complete_multipartite_graph, None),
}


def graph_from_family(spec: str) -> Graph:
    """
    Constrói um grafo a partir de 'tipo:args', por ex. 'wheel:6',
    'bipartite:2,3', 'multipartite:2,2,2'.
    """
    kind, _, args = spec.partition(":")
    kind = kind.strip().lower()
    if kind not in _FAMILIES:
        raise InvalidInput(f"família desconhecida: {kind!r} (opções: {', '.join(sorted(_FAMILIES))})")
    try:
        values = [int(x) for x in args.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"argumentos inválidos em {spec!r}")
    fn, arity = _FAMILIES[kind]
    if arity is not None and len(values) != arity:
        raise InvalidInput(f"{kind} espera {arity} argumento(s), recebido {len(values)}")
    if not values:
        raise InvalidInput(f"{kind} exige argumentos")
    return fn(*values)
