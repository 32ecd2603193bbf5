"""Tunables of the simple random game"""

from dataclasses import dataclass

from ..errors import ConfigError

MAX_SEED = 2 ** 64


@dataclass(frozen=True)
class GameConfig:
    """All parameters of one series of round robin tournaments"""

    n_players: int = 6
    p_rand: float = 0.01
    k_factor: float = 15.0
    initial_rating: float = 1600.0
    initial_spread: float = 5.0
    n_instances: int = 20
    discard_transient: int = 0
    rng_seed: int = 0

    def __post_init__(self):
        if self.n_players < 3:
            raise ConfigError("n_players", f"must be >= 3 so that triads exist, got {self.n_players}")
        if not 0.0 <= self.p_rand <= 1.0:
            raise ConfigError("p_rand", f"must be in [0, 1], got {self.p_rand}")
        if not self.k_factor > 0:
            raise ConfigError("k_factor", f"must be positive, got {self.k_factor}")
        if self.initial_spread < 0:
            raise ConfigError("initial_spread", f"must be nonnegative, got {self.initial_spread}")
        if self.n_instances < 1:
            raise ConfigError("n_instances", f"must be positive, got {self.n_instances}")
        if not 0 <= self.discard_transient < self.n_instances:
            raise ConfigError(
                "discard_transient",
                f"must be in [0, n_instances), got {self.discard_transient} with n_instances={self.n_instances}"
            )
        if not 0 <= self.rng_seed < MAX_SEED:
            raise ConfigError("rng_seed", f"must be a 64-bit unsigned integer, got {self.rng_seed}")

    @property
    def retained_instances(self) -> int:
        return self.n_instances - self.discard_transient
