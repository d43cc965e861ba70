import yaml
from pathlib import Path


def ensure_dir(path):
    """
    Garante que o diretório exista. Aceita str ou Path.
    """
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def read_yaml(path):
    """
    Lê um arquivo YAML e retorna o objeto Python.
    """
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def write_text(path, text):
    """
    Escreve texto simples em um arquivo, criando o diretório pai.
    """
    ensure_dir(Path(path).parent)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


def dump_yaml(obj):
    """
    YAML legível (chaves ordenadas) para o modo --pretty.
    """
    return yaml.safe_dump(obj, sort_keys=True, allow_unicode=True, default_flow_style=None)


def write_output(path, payload, json_text):
    """
    Salva um relatório conforme a extensão: .yml/.yaml em YAML,
    qualquer outra em JSON canônico ('json_text'); sem extensão vira .json.
    """
    out_path = Path(path)
    suffix = out_path.suffix.lower()
    if suffix in (".yml", ".yaml"):
        write_text(out_path, dump_yaml(payload))
    elif suffix == ".json":
        write_text(out_path, json_text)
    else:
        out_path = out_path.with_suffix(".json")
        write_text(out_path, json_text)
    return out_path
