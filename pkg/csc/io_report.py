# =============================================================================
# csc.io_report
#
# Propósito:
# - Leitura de matrizes (texto "d n" + linhas, ou JSON {"rows","cols","data"})
#   e de grafos (linhas "i j", comentários '#', cabeçalho opcional "vertices k").
# - Bibliotecas nomeadas em YAML validadas por JSON Schema (Draft 7).
# - Conversão para JSON (to_jsonable) e serialização canônica.
# - Serialização de bases de Gröbner (texto e JSON).
# - Montagem do relatório do CLI.
#
# API sugerida:
# - parse_matrix_text(text) / read_matrix(path) -> IntMatrix
# - parse_graph_text(text) / read_graph(path) -> Graph
# - load_graph_library(path=None) / load_matrix_library(path=None) -> dict
# - validate_with_schema(instance, schema, label) -> list[str]
# - to_jsonable(obj) / canonical_json(obj) -> str
# - gb_to_text(gb)
# - build_report(command, inputs, results, limits) -> Report
#
# Licença:
# - MIT
# =============================================================================

from dataclasses import dataclass, fields, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional
import json
import logging

import numpy as np
import yaml
from jsonschema import Draft7Validator

from .config import DEFAULT_CONFIG
from .errors import InvalidInput, ParseError
from .graphs import Graph
from .intlin import IntMatrix
from .toric import GroebnerBasis, TermOrder

logger = logging.getLogger(__name__)

ROOT = Path(__file__).resolve().parents[1]
SCHEMAS_DIR = ROOT / "schemas"
DATA_DIR = ROOT / "data"
GRAPH_LIBRARY = DATA_DIR / "graphs" / "library.yaml"
MATRIX_LIBRARY = DATA_DIR / "matrices" / "library.yaml"


# ------------------------------------------------------------
# Matrizes
# ------------------------------------------------------------
def _int_token(tok: str, where: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"entrada não inteira {tok!r} em {where}")


def _strip_comments(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_matrix_text(text: str) -> IntMatrix:
    """
    Formato texto: primeira linha "d n", depois d linhas com n inteiros.
    Um documento JSON também é aceito.
    """
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text)
    lines = _strip_comments(text)
    if not lines:
        raise ParseError("arquivo de matriz vazio")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"cabeçalho deve ser 'd n', recebido {lines[0]!r}")
    d, n = (_int_token(t, "cabeçalho") for t in header)
    if d < 1 or n < 1:
        raise ParseError(f"dimensões inválidas {d}x{n}")
    body = lines[1:]
    if len(body) != d:
        raise ParseError(f"esperadas {d} linhas, encontradas {len(body)}")
    rows = []
    for k, line in enumerate(body, start=1):
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"linha {k}: esperados {n} inteiros, encontrados {len(toks)}")
        rows.append([_int_token(t, f"linha {k}") for t in toks])
    return IntMatrix.from_rows(rows)


def parse_matrix_json(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON de matriz inválido: {e}")
    return matrix_from_obj(obj)


def matrix_from_obj(obj: Any) -> IntMatrix:
    """{"rows": d, "cols": n, "data": [[...]]} ou uma lista de linhas."""
    if isinstance(obj, list):
        data = obj
        d, n = len(obj), len(obj[0]) if obj else 0
    elif isinstance(obj, dict) and "data" in obj:
        data = obj["data"]
        d, n = obj.get("rows", len(data)), obj.get("cols", len(data[0]) if data else 0)
    else:
        raise ParseError("matriz JSON deve ter as chaves 'rows', 'cols' e 'data'")
    if len(data) != d or any(not isinstance(r, list) or len(r) != n for r in data):
        raise ParseError(f"dados não correspondem a {d}x{n}")
    if any(isinstance(x, bool) or not isinstance(x, int) for r in data for x in r):
        raise ParseError("entradas da matriz devem ser inteiras")
    try:
        return IntMatrix.from_rows(data)
    except InvalidInput as e:
        raise ParseError(e.message)


def read_matrix(path: str) -> IntMatrix:
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if p.suffix.lower() == ".json":
        return parse_matrix_json(text)
    return parse_matrix_text(text)


# ------------------------------------------------------------
# Grafos
# ------------------------------------------------------------
def parse_graph_text(text: str) -> Graph:
    """
    Uma aresta "i j" por linha (vértices 1..d); "vertices k" fixa d
    (vértices isolados no fim).
    """
    vertex_count: Optional[int] = None
    edges = []
    for k, line in enumerate(_strip_comments(text), start=1):
        toks = line.split()
        if toks[0].lower() == "vertices":
            if len(toks) != 2:
                raise ParseError(f"linha {k}: use 'vertices k'")
            vertex_count = _int_token(toks[1], f"linha {k}")
            continue
        if len(toks) != 2:
            raise ParseError(f"linha {k}: esperada aresta 'i j', recebido {line!r}")
        edges.append(tuple(_int_token(t, f"linha {k}") for t in toks))
    try:
        return Graph.from_edges(edges, vertex_count=vertex_count)
    except InvalidInput as e:
        raise ParseError(e.message)


def read_graph(path: str) -> Graph:
    return parse_graph_text(Path(path).read_text(encoding="utf-8"))


# ------------------------------------------------------------
# Bibliotecas nomeadas
# ------------------------------------------------------------
def load_schema(schema_name: str) -> Dict[str, Any]:
    schema_path = SCHEMAS_DIR / schema_name
    if not schema_path.exists():
        raise FileNotFoundError(f"Schema não encontrado: {schema_path}")
    with open(schema_path, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_with_schema(instance: Any, schema: Dict[str, Any], label: str = "") -> List[str]:
    """
    Valida um objeto contra um schema JSON. Retorna lista de erros (strings).
    """
    validator = Draft7Validator(schema)
    errors = []
    for error in sorted(validator.iter_errors(instance), key=lambda e: list(map(str, e.path))):
        loc = ".".join([str(p) for p in error.path]) if error.path else "(root)"
        errors.append(f"[{label}] {loc}: {error.message}")
    return errors


def _load_library(path: Path, schema_name: str, key: str) -> Dict[str, Dict[str, Any]]:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ParseError(f"YAML inválido ({path}): {e}")
    errors = validate_with_schema(data, load_schema(schema_name), label=key)
    if errors:
        raise ParseError(f"biblioteca inválida ({path}): {errors[0]}", errors=errors)
    return {entry["name"]: entry for entry in data[key]}


def load_graph_library(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    return _load_library(Path(path) if path else GRAPH_LIBRARY, "graph_schema.json", "graphs")


def load_matrix_library(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    return _load_library(Path(path) if path else MATRIX_LIBRARY, "matrix_schema.json", "matrices")


def named_graph(name: str, path: Optional[str] = None) -> Graph:
    lib = load_graph_library(path)
    if name not in lib:
        raise InvalidInput(f"grafo nomeado desconhecido: {name!r}")
    entry = lib[name]
    return Graph.from_edges([tuple(e) for e in entry["edges"]], vertex_count=entry.get("vertices"))


def named_graph_parts(name: str, path: Optional[str] = None):
    """Bipartição rotulada guardada na biblioteca, ou None."""
    parts = load_graph_library(path)[name].get("parts")
    return (tuple(parts[0]), tuple(parts[1])) if parts else None


def named_matrix(name: str, path: Optional[str] = None) -> IntMatrix:
    lib = load_matrix_library(path)
    if name not in lib:
        raise InvalidInput(f"matriz nomeada desconhecida: {name!r}")
    return IntMatrix.from_rows(lib[name]["rows"])


# ------------------------------------------------------------
# JSON
# ------------------------------------------------------------
def to_jsonable(obj: Any) -> Any:
    """
    Converte resultados da biblioteca em estruturas JSON: dataclasses
    viram dicts, Fraction vira "p/q", Enum vira seu valor.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, GroebnerBasis):
        return obj.to_dict()
    if isinstance(obj, TermOrder):
        return obj.describe()
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj) if not f.name.startswith("_")}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, Path):
        return str(obj)
    raise TypeError(f"objeto não serializável: {type(obj).__name__}")


def canonical_json(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def gb_to_text(gb: GroebnerBasis) -> str:
    text = gb.to_text()
    return text + "\n" if text else ""


# ------------------------------------------------------------
# Relatório
# ------------------------------------------------------------
@dataclass(frozen=True)
class Report:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    limits: Dict[str, Any]
    version: str

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable(self)

    def to_json(self) -> str:
        return canonical_json(self)


def build_report(command: str, inputs: Dict[str, Any], results: Dict[str, Any], limits: Dict[str, Any]) -> Report:
    return Report(
        command=command,
        inputs=to_jsonable(inputs),
        results=to_jsonable(results),
        limits=to_jsonable(limits),
        version=DEFAULT_CONFIG["version"],
    )
