import logging
from dataclasses import dataclass
from importlib import import_module
from pathlib import Path
from typing import List, Optional, Union

# Python 3.11 has tomllib; fall back to toml if needed
try:
    import tomllib  # type: ignore

    def _read(path: Path) -> dict:
        with open(path, "rb") as f:
            return tomllib.load(f)
except ImportError:  # pragma: no cover
    import toml

    def _read(path: Path) -> dict:
        return toml.load(str(path))

from core.types import AnalysisModule

log = logging.getLogger(__name__)

CONFIG_PATH = Path(__file__).resolve().parent.parent / "config.toml"


@dataclass(frozen=True)
class Settings:
    tolerance: float = 1e-9
    root_tolerance: float = 1e-12
    max_vertices: int = 20000


def load_config(path: Union[str, Path, None] = None) -> dict:
    path = Path(path) if path is not None else CONFIG_PATH
    if not path.exists():
        log.info("no config at %s, using defaults", path)
        return {}
    return _read(path)


def load_settings(path: Union[str, Path, None] = None) -> Settings:
    raw = load_config(path).get("settings", {})
    defaults = Settings()
    return Settings(
        tolerance=float(raw.get("tolerance", defaults.tolerance)),
        root_tolerance=float(raw.get("root_tolerance", defaults.root_tolerance)),
        max_vertices=int(raw.get("max_vertices", defaults.max_vertices)),
    )


def load_enabled_modules(path: Optional[Union[str, Path]] = None) -> List[AnalysisModule]:
    cfg = load_config(path)
    mods = []
    mod_cfg = cfg.get("modules", {})
    ordered = sorted(((m, v.get("order", 999)) for m, v in mod_cfg.items() if v.get("enabled", True)), key=lambda x: x[1])
    for name, _ in ordered:
        mod = import_module(f"modules.{name}.{name}")
        mods.append(mod)
    log.info("enabled modules: %s", ", ".join(m.id for m in mods))
    return mods
