# =============================================================================
# csc.polytope
#
# Propósito:
# - Geometria poliedral exata para Conv(A±) e politopos de reticulado em geral.
# - Referencial afim: origem p0 e base do reticulado (span linear ∩ Z^m),
#   que leva os pontos a Z^dim (forma padrão).
# - Facetas por força bruta sobre subconjuntos de dim pontos, com normais
#   inteiras primitivas (cofatores).
# - Politopo dual, vértices, veredito Fano / Gorenstein Fano.
# - Triangulação por puxamento e volume normalizado.
#
# Convenções:
# - Facet: <normal, w> <= offset em coordenadas do referencial.
# - Para A± a origem do referencial é a coluna central [0,…,0,1], e com
#   posto d o referencial é a deleção da última coordenada.
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from .config import setting
from .configs import CscMatrix
from .errors import InvalidInput, PreconditionViolated, RankDeficient, SizeLimit
from .intlin import IntMatrix, bareiss_det, hnf, hnf_solve, lattice_index, matrix_rank
from .toric import OrderKind, TermOrder, kernel_lattice

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    normal: Tuple[int, ...]
    offset: int
    tight: Tuple[int, ...]   # índices dos pontos na faceta

    def value(self, w: Sequence) -> Fraction:
        return sum((Fraction(c) * x for c, x in zip(self.normal, w)), Fraction(0))


@dataclass(frozen=True)
class AffineFrame:
    """
    x = origin + basis · w, com 'basis' uma base do reticulado span ∩ Z^m.
    """
    origin: Point
    basis: Tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _basis_hnf(self):
        return hnf(IntMatrix.from_columns(self.basis))

    def to_frame(self, x: Sequence) -> Optional[Tuple[Fraction, ...]]:
        """Coordenadas racionais de x; None se x está fora do span afim."""
        diff = [Fraction(v) - o for v, o in zip(x, self.origin)]
        if not self.basis:
            return () if not any(diff) else None
        res = self._basis_hnf
        y = hnf_solve(res, diff)
        if y is None:
            return None
        # coordenadas na base HNF -> coordenadas na base original
        U = res.transform
        return tuple(sum((U.data[i][j] * y[j] for j in range(len(y))), Fraction(0)) for i in range(U.rows))

    def from_frame(self, w: Sequence[int]) -> Point:
        return tuple(
            o + sum(c * b[k] for c, b in zip(w, self.basis))
            for k, o in enumerate(self.origin)
        )

    def describe(self) -> Dict[str, object]:
        m = len(self.origin)
        deletion = self.dim == m - 1 and all(
            b == tuple(int(i == k) for i in range(m)) for k, b in enumerate(self.basis)
        )
        identity = self.dim == m and not any(self.origin) and all(
            b == tuple(int(i == k) for i in range(m)) for k, b in enumerate(self.basis)
        )
        kind = "identity" if identity else "last_coordinate_deletion" if deletion else "lattice_basis"
        return {"kind": kind, "origin": list(self.origin), "basis": [list(b) for b in self.basis]}


@dataclass
class PolytopeRep:
    points: Tuple[Point, ...]
    frame: AffineFrame
    coords: Tuple[Point, ...]
    facets: Optional[Tuple[Facet, ...]] = None

    @property
    def dim(self) -> int:
        return self.frame.dim


# ------------------------------------------------------------
# Referencial e forma padrão
# ------------------------------------------------------------
def affine_dim(points: Sequence[Sequence[int]]) -> int:
    pts = [tuple(p) for p in points]
    if not pts:
        raise InvalidInput("conjunto de pontos vazio")
    diffs = [tuple(x - y for x, y in zip(p, pts[0])) for p in pts[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return 0
    return matrix_rank(IntMatrix.from_columns(diffs))


def _dedupe(points: Sequence[Sequence[int]]) -> Tuple[Point, ...]:
    seen: Dict[Point, None] = {}
    for p in points:
        seen.setdefault(tuple(int(x) for x in p), None)
    if len(seen) < len(points):
        logger.warning("%d ponto(s) repetido(s) descartado(s)", len(points) - len(seen))
    return tuple(seen)


def _span_lattice(diffs: List[Point], m: int) -> Tuple[Point, ...]:
    """Base do reticulado (span linear das diferenças) ∩ Z^m."""
    if not diffs:
        return ()
    ortho = kernel_lattice(IntMatrix.from_rows(diffs))
    if not ortho:
        return tuple(tuple(int(i == k) for i in range(m)) for k in range(m))
    return tuple(kernel_lattice(IntMatrix.from_rows(ortho)))


def build_polytope(points: Sequence[Sequence[int]], origin: Optional[Sequence[int]] = None) -> PolytopeRep:
    """
    Politopo (sem facetas ainda) com referencial afim. Origem padrão:
    o zero se os pontos têm dimensão cheia, senão o primeiro ponto.
    """
    pts = _dedupe(points)
    if not pts:
        raise InvalidInput("conjunto de pontos vazio")
    m = len(pts[0])
    if any(len(p) != m for p in pts):
        raise InvalidInput("pontos com dimensões diferentes")
    diffs = [d for d in (tuple(x - y for x, y in zip(p, pts[0])) for p in pts[1:]) if any(d)]
    basis = _span_lattice(diffs, m)
    if origin is None:
        origin = (0,) * m if len(basis) == m else pts[0]
    frame = AffineFrame(tuple(int(x) for x in origin), basis)
    coords = []
    for p in pts:
        w = frame.to_frame(p)
        if w is None or any(c.denominator != 1 for c in w):
            raise InvalidInput(f"origem {tuple(origin)!r} fora do reticulado afim dos pontos")
        coords.append(tuple(int(c) for c in w))
    return PolytopeRep(points=pts, frame=frame, coords=tuple(coords))


def csc_polytope(csc: CscMatrix) -> PolytopeRep:
    """Conv(A±) com origem na coluna central."""
    return build_polytope(csc.matrix.columns(), origin=csc.center)


def standard_form(p: PolytopeRep) -> Tuple[Tuple[Point, ...], AffineFrame]:
    return p.coords, p.frame


# ------------------------------------------------------------
# Facetas
# ------------------------------------------------------------
def _primitive(v: Sequence[int]) -> Tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def _cofactor_normal(rows: List[Point], k: int) -> Tuple[int, ...]:
    """Normal ao span de k-1 vetores em Z^k (produto vetorial generalizado)."""
    if k == 1:
        return (1,)
    return tuple(
        (-1) ** j * bareiss_det([[r[c] for c in range(k) if c != j] for r in rows])
        for j in range(k)
    )


def enumerate_facets(
    coords: Sequence[Point],
    max_dim: Optional[int] = None,
    max_points: Optional[int] = None,
    max_subsets: Optional[int] = None,
) -> Tuple[Facet, ...]:
    """
    Facetas de Conv(coords) ⊂ Z^k, com coords de dimensão cheia.
    Cada k-subconjunto afim-independente define um hiperplano; fica se
    todos os pontos estão de um lado.
    """
    pts = list(coords)
    k = len(pts[0]) if pts else 0
    if k == 0:
        return ()
    max_dim = setting("polytope", "max_dim", max_dim)
    max_points = setting("polytope", "max_points", max_points)
    max_subsets = setting("polytope", "max_subsets", max_subsets)
    n_sub = comb(len(pts), k)
    if k > max_dim or len(pts) > max_points or n_sub > max_subsets:
        raise SizeLimit(
            f"busca de facetas grande demais: dim={k}, pontos={len(pts)}, subconjuntos={n_sub}",
            partial=None, dim=k, points=len(pts), subsets=n_sub,
        )
    found: Dict[Tuple[Tuple[int, ...], int], Facet] = {}
    for subset in combinations(range(len(pts)), k):
        base = pts[subset[0]]
        rows = [tuple(x - y for x, y in zip(pts[i], base)) for i in subset[1:]]
        normal = _cofactor_normal(rows, k)
        if not any(normal):
            continue
        normal = _primitive(normal)
        offset = sum(c * x for c, x in zip(normal, base))
        values = [sum(c * x for c, x in zip(normal, p)) for p in pts]
        if max(values) == offset:
            pass
        elif min(values) == offset:
            normal = tuple(-c for c in normal)
            offset = -offset
            values = [-v for v in values]
        else:
            continue
        key = (normal, offset)
        if key not in found:
            tight = tuple(i for i, v in enumerate(values) if v == offset)
            found[key] = Facet(normal, offset, tight)
    logger.debug("%d facetas em dimensão %d (%d subconjuntos)", len(found), k, n_sub)
    return tuple(sorted(found.values(), key=lambda f: (f.normal, f.offset)))


def facets(p: PolytopeRep, **limits) -> Tuple[Facet, ...]:
    """Facetas irredundantes, calculadas uma vez e guardadas em p."""
    if p.facets is None:
        p.facets = enumerate_facets(p.coords, **limits)
    return p.facets


def interior_contains(p: PolytopeRep, x: Sequence) -> bool:
    """x (coordenadas ambientes, racionais) no interior relativo de p?"""
    w = p.frame.to_frame(x)
    if w is None:
        return False
    if p.dim == 0:
        return True
    return all(f.value(w) < f.offset for f in facets(p))


def polytope_vertices(p: PolytopeRep) -> List[Point]:
    """Pontos cujas facetas apertadas determinam um único ponto."""
    if p.dim == 0:
        return list(p.points)
    fs = facets(p)
    out = []
    for i, pt in enumerate(p.points):
        normals = [f.normal for f in fs if i in f.tight]
        if normals and matrix_rank(IntMatrix.from_rows(normals)) == p.dim:
            out.append(pt)
    return sorted(out)


# ------------------------------------------------------------
# Dual e Fano
# ------------------------------------------------------------
def dual_polytope(p: PolytopeRep) -> List[Tuple[Fraction, ...]]:
    """
    Vértices do dual em relação à origem do referencial: normal / offset
    de cada faceta. Exige a origem no interior.
    """
    fs = facets(p)
    if p.dim == 0 or any(f.offset <= 0 for f in fs):
        raise PreconditionViolated("a origem não está no interior", hypothesis="origin_interior")
    return sorted(tuple(Fraction(c, f.offset) for c in f.normal) for f in fs)


@dataclass(frozen=True)
class FanoVerdict:
    origin_interior: bool
    fano: bool
    gorenstein_fano: bool
    reason: str
    dual_vertices: Tuple[Tuple[Fraction, ...], ...] = ()
    interior_lattice_points: Tuple[Point, ...] = field(default=())


def _interior_lattice_points(p: PolytopeRep, box_budget: Optional[int]) -> List[Point]:
    fs = facets(p)
    lo = [min(c[k] for c in p.coords) for k in range(p.dim)]
    hi = [max(c[k] for c in p.coords) for k in range(p.dim)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    budget = setting("semigroup", "box_budget", box_budget)
    if size > budget:
        raise SizeLimit(f"caixa com {size} pontos excede o orçamento {budget}", partial=None)
    out = []
    for w in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(sum(c * x for c, x in zip(f.normal, w)) < f.offset for f in fs):
            out.append(w)
    return out


def fano_verdict(p: PolytopeRep, box_budget: Optional[int] = None) -> FanoVerdict:
    """
    Fano: origem do referencial é o único ponto inteiro interior.
    Gorenstein Fano: além disso, o dual tem vértices inteiros (offset 1
    em toda faceta, pois as normais são primitivas).
    """
    if p.dim == 0:
        return FanoVerdict(False, False, False, "origin_not_interior")
    fs = facets(p)
    if any(f.offset <= 0 for f in fs):
        return FanoVerdict(False, False, False, "origin_not_interior")
    interior = _interior_lattice_points(p, box_budget)
    dual = tuple(dual_polytope(p))
    fano = interior == [(0,) * p.dim]
    integral = all(c.denominator == 1 for v in dual for c in v)
    if not fano:
        reason = "extra_interior_lattice_points"
    elif not integral:
        reason = "nonintegral_dual_vertex"
    else:
        reason = "ok"
    return FanoVerdict(True, fano, fano and integral, reason, dual, tuple(interior))


def is_gorenstein_fano(p: PolytopeRep) -> bool:
    return fano_verdict(p).gorenstein_fano


# ------------------------------------------------------------
# Triangulação por puxamento
# ------------------------------------------------------------
@dataclass(frozen=True)
class Triangulation:
    """
    simplices: índices de colunas de A±; determinants: |det| das colunas;
    volumes: volume normalizado relativo a ZA± (= |det| / [Z^{d+1} : ZA±]).
    """
    simplices: Tuple[Tuple[int, ...], ...]
    determinants: Tuple[int, ...]
    volumes: Tuple[int, ...]

    @property
    def total_volume(self) -> int:
        return sum(self.volumes)


def _pull(labels: List[int], points: Dict[int, Point], rank: Dict[int, int]) -> List[Tuple[int, ...]]:
    """
    Puxa o ponto de menor posto e recorre nas facetas que não o contêm.
    labels: índices distintos; points: índice -> ponto ambiente.
    """
    poly = build_polytope([points[i] for i in labels])
    if len(labels) == poly.dim + 1:
        return [tuple(sorted(labels))]
    v = min(labels, key=lambda i: rank[i])
    vpos = labels.index(v)
    out: List[Tuple[int, ...]] = []
    for f in facets(poly):
        if vpos in f.tight:
            continue
        sub = [labels[i] for i in f.tight]
        for simplex in _pull(sub, points, rank):
            out.append(tuple(sorted(simplex + (v,))))
    return out


def triangulate_points(points: Sequence[Sequence[int]], pull_order: Sequence[int]) -> List[Tuple[int, ...]]:
    """
    Triangulação por puxamento de pontos distintos; pull_order lista
    índices do primeiro a ser puxado ao último.
    """
    rank = {i: r for r, i in enumerate(pull_order)}
    pts = {i: tuple(p) for i, p in enumerate(points)}
    if len(set(pts.values())) != len(pts):
        raise InvalidInput("triangulate_points exige pontos distintos")
    return sorted(_pull(list(range(len(points))), pts, rank))


def pulling_triangulation(csc: CscMatrix, order: Optional[TermOrder] = None) -> Triangulation:
    """
    Triangulação de Conv(A±) puxando na ordem das variáveis de 'order'
    (revlex com o centro menor). Colunas repetidas ficam de fora.
    """
    order = order or TermOrder.center_smallest(csc.n)
    if order.kind is OrderKind.GRADED_LEX or order.variable_order[0] != 0:
        raise PreconditionViolated("a ordem deve ser revlex com o centro como menor variável",
                                   hypothesis="center_smallest_revlex")
    a = csc.base
    if matrix_rank(a) < a.rows:
        raise RankDeficient(f"A precisa ter posto {a.rows}", rows=a.rows)
    cols = csc.matrix.columns()
    chosen: Dict[Point, int] = {}
    for i in order.variable_order:
        chosen.setdefault(cols[i], i)
    if len(chosen) < len(cols):
        logger.warning("%d coluna(s) repetida(s) de A± fora da triangulação", len(cols) - len(chosen))
    labels = sorted(chosen.values())
    rank = {i: r for r, i in enumerate(order.variable_order)}
    simplices = sorted(_pull(labels, {i: cols[i] for i in labels}, rank))

    index = lattice_index(csc.matrix)
    dets, vols = [], []
    for s in simplices:
        det = abs(bareiss_det([[cols[j][r] for j in s] for r in range(csc.matrix.rows)]))
        dets.append(det)
        vols.append(det // index)
    logger.info("triangulação com %d simplexos, volume %d", len(simplices), sum(vols))
    return Triangulation(tuple(simplices), tuple(dets), tuple(vols))


def normalized_volume(p: PolytopeRep, index: int = 1) -> int:
    """
    Volume normalizado de p no reticulado do referencial, dividido pelo
    índice de um sub-reticulado (por exemplo [Z^{d+1} ∩ span : ZA±]).
    """
    if p.dim == 0:
        return 1
    simplices = triangulate_points(p.coords, range(len(p.coords)))
    total = 0
    for s in simplices:
        base = p.coords[s[0]]
        rows = [[x - y for x, y in zip(p.coords[i], base)] for i in s[1:]]
        total += abs(bareiss_det(rows))
    return total // index
