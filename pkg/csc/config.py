# =============================================================================
# csc.config
#
# Propósito:
# - Centralizar parâmetros padrão (orçamentos e limites) da Máquina CSC.
# - Fornecer:
#     * Configuração global padrão (DEFAULT_CONFIG)
#     * Carregamento/merge de configurações a partir de YAML ou JSON
#     * Leitura opcional de variáveis de ambiente (prefixo CSC_)
#     * Validação leve de campos conhecidos
#     * Instalação dos handlers de logging do pacote
#
# API sugerida:
# - get_default_config() -> dict
# - deep_update(base, override) -> dict
# - load_config_file(path) -> dict
# - apply_env_overrides(cfg, prefix="CSC_") -> dict
# - validate_config(cfg) -> dict
# - load_config(path=None, env_prefix="CSC_", overrides=None) -> dict
# - get_config() / set_config(cfg) / setting(section, key, value=None)
# - setup_logging(cfg) -> logging.Logger
#
# Licença:
# - MIT
# =============================================================================

from typing import Any, Dict, Optional
from pathlib import Path
import copy
import json
import logging
import os

import yaml


# Configuração padrão global
DEFAULT_CONFIG: Dict[str, Any] = {
    "version": "0.1.0",
    "logging": {
        "level": "WARNING",   # DEBUG, INFO, WARNING, ERROR
        "to_console": True,
        "to_file": False,
        "file_path": "outputs/csc.log",
    },
    "intlin": {
        # acima disso gcd_maximal_minors usa det(B) da HNF
        "minor_enumeration_limit": 100000,
    },
    "graphs": {
        "exhaustive_vertex_limit": 16,
    },
    "toric": {
        "spair_budget": 200000,
        "monomial_budget": 1000000,   # por grau, nas fibras
        "verify_results": False,
    },
    "polytope": {
        "max_dim": 8,
        "max_points": 60,
        "max_subsets": 3000000,
    },
    "semigroup": {
        "point_budget": 5000000,
        "box_budget": 50000000,
        "chunk_rows": 2000000,
        "zero_run": 3,
        "confirm_degrees": 0,
        "hilbert_max_degree": 40,
    },
}

_POSITIVE_INTS = {
    "intlin": ("minor_enumeration_limit",),
    "graphs": ("exhaustive_vertex_limit",),
    "toric": ("spair_budget", "monomial_budget"),
    "polytope": ("max_dim", "max_points", "max_subsets"),
    "semigroup": ("point_budget", "box_budget", "chunk_rows", "zero_run", "hilbert_max_degree"),
}

_ACTIVE: Optional[Dict[str, Any]] = None


def get_default_config() -> Dict[str, Any]:
    """
    Retorna uma cópia profunda da configuração padrão.
    """
    return copy.deepcopy(DEFAULT_CONFIG)


def deep_update(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """
    Atualiza 'base' recursivamente com chaves de 'override' e retorna 'base'.
    """
    for k, v in override.items():
        if isinstance(v, dict) and isinstance(base.get(k), dict):
            deep_update(base[k], v)
        else:
            base[k] = v
    return base


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Carrega um dicionário de configuração de um arquivo YAML ou JSON
    (decidido pela extensão). Retorna {} se o conteúdo não for um dicionário.
    """
    p = Path(path)
    with open(p, "r", encoding="utf-8") as f:
        if p.suffix.lower() == ".json":
            data = json.load(f)
        else:
            data = yaml.safe_load(f)
    if isinstance(data, dict):
        return data
    return {}


def _parse_env_value(val: str) -> Any:
    """
    Converte strings de ambiente em tipos básicos:
      - "true"/"false" -> bool
      - JSON válido (dict/list/number/null)
      - inteiros e floats
      - fallback: string original
    """
    s = val.strip()
    low = s.lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        return json.loads(s)
    except ValueError:
        pass
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        pass
    return s


def apply_env_overrides(cfg: Dict[str, Any], prefix: str = "CSC_") -> Dict[str, Any]:
    """
    Aplica overrides de variáveis de ambiente no dicionário 'cfg'.
    Convenção de chaves ('__' separa níveis, chaves em minúsculas):
      - CSC_LOGGING__LEVEL=DEBUG          -> cfg["logging"]["level"]
      - CSC_TORIC__SPAIR_BUDGET=5000      -> cfg["toric"]["spair_budget"]
      - CSC_SEMIGROUP__POINT_BUDGET=1e6   -> cfg["semigroup"]["point_budget"]
    """
    plen = len(prefix)
    for env_k, env_v in sorted(os.environ.items()):
        if not env_k.startswith(prefix):
            continue
        keys = [k.lower() for k in env_k[plen:].split("__") if k]
        if not keys:
            continue
        cur = cfg
        for k in keys[:-1]:
            if k not in cur or not isinstance(cur[k], dict):
                cur[k] = {}
            cur = cur[k]
        cur[keys[-1]] = _parse_env_value(env_v)
    return cfg


def validate_config(cfg: Dict[str, Any]) -> Dict[str, Any]:
    """
    Validação leve: corrige tipos e aplica limites simples.
    Orçamentos inválidos voltam ao valor padrão.
    """
    lvl = str(cfg.get("logging", {}).get("level", "WARNING")).upper()
    if lvl not in ("DEBUG", "INFO", "WARNING", "ERROR"):
        lvl = "WARNING"
    cfg.setdefault("logging", {})["level"] = lvl

    for section, keys in _POSITIVE_INTS.items():
        sec = cfg.setdefault(section, {})
        for key in keys:
            default = DEFAULT_CONFIG[section][key]
            try:
                val = int(sec.get(key, default))
            except (TypeError, ValueError):
                val = default
            sec[key] = val if val >= 1 else default

    try:
        confirm = int(cfg["semigroup"].get("confirm_degrees", 0))
    except (TypeError, ValueError):
        confirm = 0
    cfg["semigroup"]["confirm_degrees"] = max(confirm, 0)

    def to_bool(x: Any, default: bool) -> bool:
        if isinstance(x, bool):
            return x
        if isinstance(x, str):
            return x.strip().lower() in ("1", "true", "yes", "on")
        if isinstance(x, (int, float)):
            return bool(x)
        return default

    cfg["logging"]["to_console"] = to_bool(cfg["logging"].get("to_console", True), True)
    cfg["logging"]["to_file"] = to_bool(cfg["logging"].get("to_file", False), False)
    cfg["toric"]["verify_results"] = to_bool(cfg["toric"].get("verify_results", False), False)
    return cfg


def load_config(
    path: Optional[str] = None,
    env_prefix: str = "CSC_",
    overrides: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Carrega a configuração completa com a seguinte ordem de precedência:
      1) DEFAULT_CONFIG
      2) Conteúdo de 'path' (YAML/JSON, se fornecido)
      3) Overrides via argumento 'overrides' (dict)
      4) Variáveis de ambiente (prefixo env_prefix)
    Em seguida, valida e retorna.
    """
    cfg = get_default_config()
    if path:
        deep_update(cfg, load_config_file(path))
    if overrides:
        deep_update(cfg, overrides)
    apply_env_overrides(cfg, prefix=env_prefix)
    return validate_config(cfg)


def get_config() -> Dict[str, Any]:
    """
    Configuração ativa do processo (padrões + ambiente, carregada sob demanda).
    """
    global _ACTIVE
    if _ACTIVE is None:
        _ACTIVE = load_config()
    return _ACTIVE


def set_config(cfg: Optional[Dict[str, Any]]) -> None:
    """
    Substitui a configuração ativa. None volta ao carregamento sob demanda.
    """
    global _ACTIVE
    _ACTIVE = validate_config(cfg) if cfg is not None else None


def setting(section: str, key: str, value: Any = None) -> Any:
    """
    Resolve um parâmetro: 'value' explícito vence; senão vale a config ativa.
    """
    if value is not None:
        return value
    return get_config()[section][key]


def setup_logging(cfg: Optional[Dict[str, Any]] = None) -> logging.Logger:
    """
    Instala handlers no logger 'csc' conforme a seção 'logging'.
    Idempotente: handlers anteriores instalados aqui são substituídos.
    """
    cfg = cfg if cfg is not None else get_config()
    log_cfg = cfg["logging"]
    logger = logging.getLogger("csc")
    logger.setLevel(getattr(logging, log_cfg["level"]))
    for h in list(logger.handlers):
        if getattr(h, "_csc_handler", False):
            logger.removeHandler(h)
            h.close()
    fmt = logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
    handlers = []
    if log_cfg.get("to_console", True):
        handlers.append(logging.StreamHandler())
    if log_cfg.get("to_file", False):
        Path(log_cfg["file_path"]).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_cfg["file_path"], encoding="utf-8"))
    for h in handlers:
        h.setFormatter(fmt)
        h._csc_handler = True
        logger.addHandler(h)
    return logger
