import argparse
import logging
import sys

from csc.config import get_config, load_config, set_config, setup_logging
from csc.configs import (
    central_symmetrize,
    delete_redundant_row,
    graph_config_mu,
    graph_config_rho,
    is_configuration,
    nonunimodularity_witness,
)
from csc.errors import CscError, InvalidInput
from csc.graphs import (
    find_disjoint_odd_cycles,
    find_odd_cycle_apex,
    graph_from_family,
    is_bipartite,
    is_chordal_bipartite,
    is_connected,
    split_apex,
    star_condition_violation,
    unbridged_odd_cycle_pair,
)
from csc.intlin import INFINITE, gcd_maximal_minors, hnf, is_unimodular, lattice_index
from csc.io_report import (
    build_report,
    canonical_json,
    gb_to_text,
    load_graph_library,
    load_matrix_library,
    named_graph,
    named_graph_parts,
    named_matrix,
    read_graph,
    read_matrix,
    to_jsonable,
)
from csc.polytope import csc_polytope, facets, fano_verdict, polytope_vertices, pulling_triangulation
from csc.semigroup import NonNormal, gorenstein_consistent, hilbert_h_vector, normality_check, odd_cycle_witness
from csc.toric import (
    TermOrder,
    bipartite_gb,
    format_monomial,
    initial_ideal,
    is_squarefree,
    kernel_lattice,
    toric_ideal_gb,
    variable_names,
    verify_reduced_gb,
)
from scripts.common.io_utils import dump_yaml, write_output
from scripts.prep.validate_inputs import validate_all, print_report


logger = logging.getLogger("csc.cli")

_KINDS = {
    "plain": "plain", "pm": "pm", "±": "pm",
    "rho": "rho", "mu": "mu",
    "rho±": "rho±", "rhopm": "rho±", "rho+-": "rho±",
    "mu±": "mu±", "mupm": "mu±", "mu+-": "mu±",
}


# ------------------------------------------------------------
# Entradas
# ------------------------------------------------------------
class Subject:
    """
    Entrada resolvida: matriz base, grafo (se houver) e a matriz alvo
    conforme --kind, com a A± correspondente quando o tipo é simétrico.
    """

    def __init__(self, args, default_kind):
        self.graph = None
        self.base = None
        self.parts = None
        self.inputs = {}
        if args.graph:
            self.graph = read_graph(args.graph)
            self.inputs["graph"] = args.graph
        elif args.family:
            self.graph = graph_from_family(args.family)
            self.inputs["family"] = args.family
        elif args.named:
            if args.named in load_graph_library():
                self.graph = named_graph(args.named)
                self.parts = named_graph_parts(args.named)
            elif args.named in load_matrix_library():
                self.base = named_matrix(args.named)
            else:
                raise InvalidInput(f"nome desconhecido nas bibliotecas: {args.named!r}")
            self.inputs["named"] = args.named
        elif args.matrix:
            self.base = read_matrix(args.matrix)
            self.inputs["matrix"] = args.matrix
        else:
            raise InvalidInput("informe --matrix, --graph, --family ou --named")

        kind = args.kind or (default_kind["graph"] if self.graph is not None else default_kind["matrix"])
        if kind not in _KINDS:
            raise InvalidInput(f"--kind desconhecido: {kind!r}")
        kind = _KINDS[kind]
        if self.graph is None and kind not in ("plain", "pm"):
            raise InvalidInput(f"--kind {kind} exige um grafo")
        if self.graph is not None:
            if kind in ("plain", "pm"):
                kind = "rho" if kind == "plain" else "rho±"
            self.base = graph_config_rho(self.graph) if kind.startswith("rho") else graph_config_mu(self.graph)
            self.inputs["edges"] = [list(e) for e in self.graph.edges]
            self.inputs["vertices"] = self.graph.vertex_count
        self.kind = kind
        self.inputs["kind"] = kind
        self.csc = central_symmetrize(self.base) if kind in ("pm", "rho±", "mu±") else None
        self.matrix = self.csc.matrix if self.csc is not None else self.base
        self.inputs["rows"] = self.base.to_lists()

    def names(self):
        return variable_names(self.matrix.cols, csc=self.csc is not None)


def _limits(*sections):
    cfg = get_config()
    return {s: cfg[s] for s in sections}


def _matrix_summary(a):
    res = hnf(a)
    index = lattice_index(a)
    out = {
        "rows": a.rows,
        "cols": a.cols,
        "rank": res.rank,
        "hnf_block": res.b.to_lists() if res.b is not None else None,
        "index": index,
        "gcd_maximal_minors": gcd_maximal_minors(a),
        "configuration_certificate": is_configuration(a),
    }
    if index is INFINITE:
        out.update(unimodular=None, delta=None)
    else:
        flag, delta = is_unimodular(a)
        out.update(unimodular=flag, delta=delta if flag else None)
    return out


# ------------------------------------------------------------
# Subcomandos
# ------------------------------------------------------------
def cmd_analyze(args):
    subj = Subject(args, {"matrix": "plain", "graph": "rho"})
    a = subj.base
    results = {"matrix": _matrix_summary(a)}
    csc = central_symmetrize(a)
    pm = {
        "rows": csc.matrix.rows,
        "cols": csc.matrix.cols,
        "layout": [r.label() for r in csc.column_roles],
        "index": lattice_index(csc.matrix),
    }
    if results["matrix"]["rank"] == a.rows:
        flag, delta = is_unimodular(csc.matrix)
        pm.update(unimodular=flag, delta=delta if flag else None)
        pm["minor_pair"] = nonunimodularity_witness(a)
    else:
        pm.update(unimodular=None, delta=None)
    results["pm"] = pm
    return build_report("analyze", subj.inputs, results, _limits("intlin"))


def _order_for(args, subj):
    n = subj.matrix.cols
    if args.center_smallest:
        if subj.csc is None:
            raise InvalidInput("--center-smallest exige um tipo simétrico (pm, rho±, mu±)")
        return TermOrder.center_smallest(subj.csc.n)
    if args.order == "glex":
        return TermOrder.graded_lex(n)
    return TermOrder.graded_revlex(n)


def cmd_gb(args):
    subj = Subject(args, {"matrix": "pm", "graph": "rho"})
    order = _order_for(args, subj)
    gb = toric_ideal_gb(subj.matrix, order=order, budget=args.budget, names=subj.names())
    names = gb.variable_names()
    leads = initial_ideal(gb)
    results = {
        "groebner_basis": gb,
        "size": len(gb.elements),
        "max_degree": gb.max_degree,
        "initial_ideal": [format_monomial(m, names) for m in leads],
        "squarefree": is_squarefree(leads),
    }
    if args.verify:
        results["verified"] = verify_reduced_gb(gb, subj.matrix)
    if args.format == "text":
        args.text = gb_to_text(gb)
    limits = _limits("toric")
    if args.budget is not None:
        limits["toric"] = dict(limits["toric"], spair_budget=args.budget)
    return build_report("gb", subj.inputs, results, limits)


def cmd_graph_report(args):
    subj = Subject(args, {"matrix": "plain", "graph": "rho"})
    g = subj.graph
    if g is None:
        raise InvalidInput("graph-report exige um grafo")
    parts = is_bipartite(g)
    results = {
        "vertices": g.vertex_count,
        "edges": len(g.edges),
        "connected": is_connected(g),
        "bipartite": parts is not None,
        "parts": parts,
    }
    if parts is not None:
        results["chordal_bipartite"] = is_chordal_bipartite(g)
        results["star_condition_violation"] = star_condition_violation(g, subj.parts or parts)
        results["disjoint_odd_cycles"] = None
        results["bridged"] = True
        results["apex"] = None
    else:
        pair = find_disjoint_odd_cycles(g)
        results["disjoint_odd_cycles"] = pair
        results["bridged"] = unbridged_odd_cycle_pair(g) is None
        results["apex"] = find_odd_cycle_apex(g)
    a_g = delete_redundant_row(graph_config_rho(g), g)
    if hnf(a_g).rank == a_g.rows:
        flag, delta = is_unimodular(a_g)
        results["unimodular_A_G"] = flag
        results["delta_A_G"] = delta if flag else None
    else:
        results["unimodular_A_G"] = None
    return build_report("graph-report", subj.inputs, results, _limits("graphs"))


def cmd_hilbert(args):
    subj = Subject(args, {"matrix": "pm", "graph": "rho±"})
    data = hilbert_h_vector(subj.matrix, max_degree=args.max_degree, confirm_degrees=args.confirm_degrees)
    results = {
        "values": data.values,
        "krull_dim": data.krull_dim,
        "h_vector": data.h_vector,
        "stabilized": data.stabilized,
        "gorenstein_consistent": gorenstein_consistent(data.h_vector) if data.stabilized else None,
    }
    limits = _limits("semigroup")
    if args.max_degree is not None:
        limits["semigroup"] = dict(limits["semigroup"], hilbert_max_degree=args.max_degree)
    if args.confirm_degrees is not None:
        limits["semigroup"] = dict(limits["semigroup"], confirm_degrees=args.confirm_degrees)
    return build_report("hilbert", subj.inputs, results, limits)


def cmd_normal(args):
    subj = Subject(args, {"matrix": "pm", "graph": "rho±"})
    bound = args.bound if args.bound is not None else 2 * subj.matrix.rows
    prefer = []
    if subj.graph is not None and subj.kind == "rho±":
        found = odd_cycle_witness(subj.graph)
        if found is not None:
            prefer.append(found[0])
    verdict = normality_check(subj.matrix, max_degree=bound, prefer=prefer)
    if isinstance(verdict, NonNormal):
        results = {
            "verdict": "nonnormal",
            "witness": verdict.witness,
            "degree": verdict.degree,
            "violations": verdict.violations,
        }
    else:
        results = {"verdict": "normal", "up_to": verdict.up_to}
    return build_report("normal", subj.inputs, results, dict(_limits("semigroup"), bound=bound))


def cmd_fano(args):
    subj = Subject(args, {"matrix": "pm", "graph": "rho±"})
    if subj.csc is None:
        raise InvalidInput("fano trabalha com Conv(A±): use um tipo simétrico")
    poly = csc_polytope(subj.csc)
    verdict = fano_verdict(poly)
    results = {
        "dimension": poly.dim,
        "frame": poly.frame.describe(),
        "vertices": polytope_vertices(poly),
        "facets": [{"normal": f.normal, "offset": f.offset} for f in facets(poly)],
        "origin_interior": verdict.origin_interior,
        "fano": verdict.fano,
        "gorenstein_fano": verdict.gorenstein_fano,
        "reason": verdict.reason,
        "dual_vertices": verdict.dual_vertices,
    }
    if args.triangulate and hnf(subj.base).rank == subj.base.rows:
        tri = pulling_triangulation(subj.csc)
        results["triangulation"] = {
            "simplices": tri.simplices,
            "volumes": tri.volumes,
            "normalized_volume": tri.total_volume,
        }
    return build_report("fano", subj.inputs, results, _limits("polytope"))


def cmd_bipartite_gb(args):
    subj = Subject(args, {"matrix": "mu±", "graph": "mu±"})
    if subj.graph is None:
        raise InvalidInput("bipartite-gb exige um grafo")
    gb = bipartite_gb(subj.graph, subj.parts)
    results = {"groebner_basis": gb, "size": len(gb.elements)}
    if args.verify:
        results["verified"] = verify_reduced_gb(gb, central_symmetrize(graph_config_mu(subj.graph)).matrix)
    return build_report("bipartite-gb", subj.inputs, results, _limits("toric"))


def cmd_split_apex(args):
    subj = Subject(args, {"matrix": "rho", "graph": "rho"})
    g = subj.graph
    if g is None:
        raise InvalidInput("split-apex exige um grafo")
    v = args.vertex if args.vertex is not None else find_odd_cycle_apex(g)
    if v is None:
        raise InvalidInput("nenhum vértice comum a todos os ciclos ímpares")
    g2 = split_apex(g, v)
    a_g, a_g2 = graph_config_rho(g), graph_config_rho(g2)
    results = {
        "vertex": v,
        "edges": g2.edges,
        "vertices": g2.vertex_count,
        "matrix": a_g2.to_lists(),
        "bipartite": is_bipartite(g2) is not None,
        "same_toric_ideal": kernel_lattice(a_g) == kernel_lattice(a_g2),
    }
    return build_report("split-apex", subj.inputs, results, _limits("graphs"))


def cmd_validate(args):
    rpt = validate_all()
    if not args.quiet:
        print_report(rpt)
    return build_report("validate", {}, rpt, {})


# ------------------------------------------------------------
# Parser
# ------------------------------------------------------------
def _add_inputs(p):
    src = p.add_argument_group("entrada")
    src.add_argument("--matrix", help="Arquivo de matriz (texto 'd n' + linhas, ou JSON).")
    src.add_argument("--graph", help="Arquivo de grafo (uma aresta 'i j' por linha).")
    src.add_argument("--family", help="Família paramétrica, por ex. wheel:6, bipartite:2,3.")
    src.add_argument("--named", help="Nome nas bibliotecas data/graphs ou data/matrices.")
    src.add_argument("--kind", help="plain, pm, rho, mu, rho± ou mu±.", default=None)


def _add_common(p):
    p.add_argument("--config", help="Arquivo de configuração (yaml/json).", default=None)
    p.add_argument("-o", "--output", help="Caminho para salvar o relatório (json/yaml).", default=None)
    p.add_argument("--pretty", action="store_true", help="Imprime YAML legível em vez de JSON.")
    p.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING ou ERROR.")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="csc-machine",
        description="CLI da Máquina CSC: configurações centralmente simétricas, ideais tóricos e normalidade."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Posto, HNF, índice, unimodularidade de A e layout de A±.")
    _add_inputs(p)
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gb", help="Base de Gröbner reduzida do ideal tórico.")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--order", choices=["grevlex", "glex"], default="grevlex")
    p.add_argument("--center-smallest", action="store_true", help="Revlex com o centro de A± menor.")
    p.add_argument("--budget", type=int, default=None, help="Orçamento de S-pares.")
    p.add_argument("--verify", action="store_true", help="Verificação independente da base.")
    p.add_argument("--format", choices=["json", "text"], default="json", help="text imprime só a base, um binômio por linha.")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("graph-report", help="Critérios de grafo: ciclos ímpares, bipartição, unimodularidade.")
    _add_inputs(p)
    _add_common(p)
    p.set_defaults(func=cmd_graph_report)

    p = sub.add_parser("hilbert", help="Função de Hilbert e h-vetor.")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument(
        "--confirm-degrees", type=int, default=None,
        help="Graus extras após os zeros do h-vetor. Padrão 0 (W7 com 2 estoura o orçamento de pontos); use 2 em entradas pequenas.",
    )
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("normal", help="Normalidade até um grau, com testemunha.")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_normal)

    p = sub.add_parser("fano", help="Veredito Fano / Gorenstein Fano de Conv(A±).")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--triangulate", action="store_true", help="Inclui a triangulação por puxamento.")
    p.set_defaults(func=cmd_fano)

    p = sub.add_parser("bipartite-gb", aliases=["theorem42"], help="Base explícita de I_{A_Ḡ±} para bipartidos cordais com a condição estrela.")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_bipartite_gb)

    p = sub.add_parser("split-apex", help="Separa o vértice comum aos ciclos ímpares.")
    _add_inputs(p)
    _add_common(p)
    p.add_argument("--vertex", type=int, default=None)
    p.set_defaults(func=cmd_split_apex)

    p = sub.add_parser("validate", help="Valida as bibliotecas YAML contra os schemas.")
    _add_common(p)
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_validate)

    return parser


def _emit(args, payload_json, payload):
    if args.output:
        write_output(args.output, payload, payload_json)
    if getattr(args, "text", None) is not None:
        print(args.text, end="")
    elif args.pretty:
        print(dump_yaml(payload), end="")
    else:
        print(payload_json, end="")


def main(argv=None):
    argv = argv if argv is not None else sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {"logging": {"level": args.log_level}} if args.log_level else None
    try:
        cfg = load_config(args.config, overrides=overrides)
        set_config(cfg)
        setup_logging(cfg)
        report = args.func(args)
    except CscError as e:
        logger.debug("erro: %s", e.message)
        payload = {"command": args.command, "error": e.to_dict()}
        _emit(args, canonical_json(payload), to_jsonable(payload))
        return e.exit_code
    except (OSError, ValueError) as e:
        payload = {"command": args.command, "error": {"error": type(e).__name__, "message": str(e)}}
        _emit(args, canonical_json(payload), payload)
        return 2
    _emit(args, report.to_json(), report.to_dict())
    if args.command == "validate" and not report.results.get("ok"):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
