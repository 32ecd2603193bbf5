"""Configuration management for the simulator"""

import os
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

import yaml
from dotenv import load_dotenv

from .errors import ConfigError
from .game.game_config import GameConfig

# Load environment variables
load_dotenv()

SEED_ENV_VAR = "INTRANS_SEED"
DEFAULT_CONFIG_FILE = "config.yaml"

FAST_MODE = {"repetitions": 20, "scatter_instances": 200, "scatter_discard": 40}


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError("boolean where an integer is expected")
    if isinstance(value, float):
        if not value.is_integer():
            raise TypeError(f"non-integer {value}")
        return int(value)
    return int(value)


def _as_float(value: Any) -> float:
    if isinstance(value, bool):
        raise TypeError("boolean where a number is expected")
    return float(value)


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ("true", "false", "yes", "no", "1", "0"):
        return value.lower() in ("true", "yes", "1")
    raise TypeError(f"expected true/false, got {value!r}")


def _as_str(value: Any) -> str:
    if not isinstance(value, str):
        raise TypeError(f"expected text, got {value!r}")
    return value


def _list_of(item: Callable[[Any], Any]) -> Callable[[Any], List[Any]]:
    def convert(value: Any) -> List[Any]:
        if isinstance(value, str):
            value = [part for part in value.replace(",", " ").split() if part]
        if not isinstance(value, (list, tuple)):
            raise TypeError(f"expected a list, got {value!r}")
        return [item(v) for v in value]
    return convert


# key -> (converter, default)
SCHEMA: Dict[str, Tuple[Callable[[Any], Any], Any]] = {
    # game
    "n_players": (_as_int, 6),
    "p_rand": (_as_float, 0.01),
    "k_factor": (_as_float, 15.0),
    "initial_rating": (_as_float, 1600.0),
    "initial_spread": (_as_float, 5.0),
    "n_instances": (_as_int, 20),
    "discard_transient": (_as_int, 0),
    "rng_seed": (_as_int, 0),
    # scatter grid
    "grid_players": (_list_of(_as_int), [8, 16, 24, 32]),
    "grid_p_rand": (_list_of(_as_float), [0.01, 0.10, 0.25, 0.50, 0.75]),
    "repetitions": (_as_int, 100),
    "scatter_instances": (_as_int, 1000),
    "scatter_discard": (_as_int, 200),
    "workers": (_as_int, 1),
    # substrate
    "landscape": (_as_str, "identity"),
    "landscape_center": (_as_float, 0.0),
    "landscape_width": (_as_float, 1.0),
    "domain_low": (_as_float, -5.0),
    "domain_high": (_as_float, 5.0),
    "neighborhood_radius": (_as_float, 0.1),
    "population_size": (_as_int, 20),
    "mu": (_as_int, 5),
    "include_self": (_as_bool, False),
    "substrate_samples": (_as_int, 1000),
    # output
    "output_dir": (_as_str, "./results"),
}


class Config:
    """Manages configuration from defaults, a flat YAML file, environment variables and CLI flags"""

    def __init__(self, config_path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None):
        self.config_path = config_path
        self.config = self._default_config()
        file_values = self._load_config()
        self._merge(file_values, source="file")
        if "rng_seed" not in file_values:
            self._load_env_vars()
        self._merge({k: v for k, v in (overrides or {}).items() if v is not None}, source="flag")
        self._validate()

    def _default_config(self) -> Dict[str, Any]:
        """Return default configuration"""
        return {key: (list(default) if isinstance(default, list) else default) for key, (_, default) in SCHEMA.items()}

    def _load_config(self) -> Dict[str, Any]:
        """Load the flat mapping from a YAML config file or a run manifest"""
        if self.config_path is None:
            config_file = Path(DEFAULT_CONFIG_FILE)
            if not config_file.exists():
                return {}
        else:
            config_file = Path(self.config_path)
            if not config_file.exists():
                raise ConfigError("config", f"file not found: {config_file}")

        with open(config_file, "r", encoding="utf-8") as f:
            try:
                loaded = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError("config", f"cannot parse {config_file}: {e}")
        if not isinstance(loaded, dict):
            raise ConfigError("config", f"{config_file} must contain a key: value mapping")
        # A run manifest carries its resolved configuration under `config`.
        if "tool_version" in loaded and isinstance(loaded.get("config"), dict):
            loaded = loaded["config"]
        return loaded

    def _load_env_vars(self):
        """Seed fallback from the environment when the file sets none"""
        if os.getenv(SEED_ENV_VAR):
            self._merge({"rng_seed": os.getenv(SEED_ENV_VAR)}, source=f"environment variable {SEED_ENV_VAR}")

    def _merge(self, values: Mapping[str, Any], source: str):
        for key, value in values.items():
            if key not in SCHEMA:
                raise ConfigError(str(key), f"unknown key (from {source})")
            convert, _ = SCHEMA[key]
            if isinstance(value, dict):
                raise ConfigError(key, f"nested mappings are not allowed (from {source})")
            try:
                self.config[key] = convert(value)
            except (TypeError, ValueError) as e:
                raise ConfigError(key, f"invalid value {value!r} (from {source}): {e}")

    def _validate(self):
        # GameConfig checks the game keys and names the offending one.
        self.game_config()
        for key in ("repetitions", "scatter_instances", "workers", "population_size", "mu", "substrate_samples"):
            if self.config[key] < 1:
                raise ConfigError(key, f"must be positive, got {self.config[key]}")
        if not 0 <= self.config["scatter_discard"] < self.config["scatter_instances"]:
            raise ConfigError("scatter_discard", "must be in [0, scatter_instances)")
        for p in self.config["grid_p_rand"]:
            if not 0.0 <= p <= 1.0:
                raise ConfigError("grid_p_rand", f"every level must be in [0, 1], got {p}")
        for n in self.config["grid_players"]:
            if n < 3:
                raise ConfigError("grid_players", f"every player count must be >= 3, got {n}")
        if self.config["mu"] > self.config["population_size"]:
            raise ConfigError("mu", f"must not exceed population_size ({self.config['population_size']})")

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key"""
        return self.config.get(key, default)

    def game_config(self) -> GameConfig:
        """The game parameters as a validated GameConfig"""
        return GameConfig(**{name: self.config[name] for name in GameConfig.__dataclass_fields__})

    def to_dict(self) -> Dict[str, Any]:
        """Resolved configuration, in schema order"""
        return {key: self.config[key] for key in SCHEMA}


def parse_config(path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None, fast: bool = False) -> Config:
    """
    Resolve the effective configuration

    Precedence, lowest first: defaults, INTRANS_SEED (only if the file sets no seed),
    config file (or run manifest), fast-mode presets, explicit flags.
    """
    layered: Dict[str, Any] = dict(FAST_MODE) if fast else {}
    layered.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return Config(path, layered)
