from pathlib import Path

import yaml
from jsonschema import exceptions as jsonschema_exceptions

from csc.io_report import DATA_DIR, load_schema, validate_with_schema
from scripts.common.io_utils import read_yaml


LIBRARIES = {
    "graphs": ("graph_schema.json", DATA_DIR / "graphs" / "library.yaml"),
    "matrices": ("matrix_schema.json", DATA_DIR / "matrices" / "library.yaml"),
}


def _semantic_errors(section, data):
    """
    Verificações que o schema não expressa: nomes únicos, arestas dentro
    de 1..vertices, linhas de mesmo comprimento.
    """
    errors = []
    names = set()
    for k, entry in enumerate(data.get(section, [])):
        name = entry.get("name", f"#{k}")
        if name in names:
            errors.append(f"[{section}] {k}.name: nome repetido {name!r}")
        names.add(name)
        if section == "graphs":
            nv = entry.get("vertices")
            if nv is None:
                nv = max((max(e) for e in entry.get("edges", [])), default=1)
            for e in entry.get("edges", []):
                if e[0] == e[1] or min(e) < 1 or max(e) > nv:
                    errors.append(f"[{section}] {name}: aresta inválida {e!r}")
        else:
            rows = entry.get("rows", [])
            if len({len(r) for r in rows}) > 1:
                errors.append(f"[{section}] {name}: linhas com comprimentos diferentes")
    return errors


def validate_library(section):
    """
    Valida uma biblioteca YAML (graphs ou matrices) contra o schema correspondente.
    """
    schema_name, path = LIBRARIES[section]
    schema = load_schema(schema_name)
    if not Path(path).exists():
        raise FileNotFoundError(f"Biblioteca não encontrada: {path}")
    try:
        data = read_yaml(path)
    except yaml.YAMLError as e:
        raise ValueError(f"YAML inválido ({path}): {e}")
    errors = validate_with_schema(data, schema, label=section)
    if not errors:
        errors = _semantic_errors(section, data)
    return errors


def validate_all():
    """
    Executa todas as validações e retorna um relatório.
    """
    report = {section: {"errors": validate_library(section)} for section in LIBRARIES}
    report["ok"] = all(not report[s]["errors"] for s in LIBRARIES)
    return report


def print_report(report: dict):
    """
    Imprime o relatório de validação de forma amigável.
    """
    print("=== Validação de entradas ===")
    for section in LIBRARIES:
        errs = report[section]["errors"]
        if errs:
            print(f"- {section}: {len(errs)} erro(s)")
            for e in errs:
                print(f"  * {e}")
        else:
            print(f"- {section}: OK")
    print(f"Resultado geral: {'OK' if report.get('ok') else 'FALHOU'}")


if __name__ == "__main__":
    try:
        rpt = validate_all()
        print_report(rpt)
    except (FileNotFoundError, ValueError, jsonschema_exceptions.SchemaError) as e:
        print(f"Erro de validação: {e}")
