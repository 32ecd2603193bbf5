"""Objective fitness landscapes over a one-dimensional real search space"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Tuple

import numpy as np

from ..errors import ConfigError, DomainError


class ObjectiveLandscape(ABC):
    """Base class for deterministic objective fitness functions f_obj"""

    name = ""

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}
        self.domain: Tuple[float, float] = (
            float(self.config.get("domain_low", -5.0)),
            float(self.config.get("domain_high", 5.0)),
        )
        if self.domain[0] >= self.domain[1]:
            raise ConfigError("domain_low", f"must be below domain_high, got {self.domain}")
        # Neighbourhood n(s) is an interval of this radius; carried as a descriptor only.
        self.neighborhood_radius = float(self.config.get("neighborhood_radius", 0.1))

    @abstractmethod
    def evaluate(self, s: np.ndarray) -> np.ndarray:
        """
        Objective fitness of one or more search points

        Args:
            s: Coordinates already checked against the domain

        Returns:
            f_obj(s), same shape as s
        """
        pass

    def contains(self, s) -> bool:
        s = np.asarray(s, dtype=float)
        return bool(np.all(np.isfinite(s)) and np.all((s >= self.domain[0]) & (s <= self.domain[1])))

    def __call__(self, s):
        if not self.contains(s):
            raise DomainError(f"Search point {s} outside domain [{self.domain[0]}, {self.domain[1]}] of '{self.name}'")
        return self.evaluate(np.asarray(s, dtype=float))

    def describe(self) -> Dict[str, Any]:
        return {"landscape": self.name, "domain": list(self.domain), "neighborhood_radius": self.neighborhood_radius}


class IdentityLandscape(ObjectiveLandscape):
    """f_obj(s) = s"""

    name = "identity"

    def evaluate(self, s):
        return s


class SphereLandscape(ObjectiveLandscape):
    """Negated sphere, f_obj(s) = -s^2, peak at 0"""

    name = "sphere"

    def evaluate(self, s):
        return -np.square(s)


class GaussianLandscape(ObjectiveLandscape):
    """Single Gaussian peak at `landscape_center` with width `landscape_width`"""

    name = "gaussian"

    def __init__(self, config: Dict[str, Any] = None):
        super().__init__(config)
        self.center = float(self.config.get("landscape_center", 0.0))
        self.width = float(self.config.get("landscape_width", 1.0))
        if not self.width > 0:
            raise ConfigError("landscape_width", f"must be positive, got {self.width}")

    def evaluate(self, s):
        return np.exp(-np.square(s - self.center) / (2.0 * self.width ** 2))

    def describe(self) -> Dict[str, Any]:
        return {**super().describe(), "center": self.center, "width": self.width}


class LandscapeFactory:
    """Factory class for creating objective landscapes by name"""

    _landscapes = {
        "identity": IdentityLandscape,
        "sphere": SphereLandscape,
        "gaussian": GaussianLandscape,
    }

    @classmethod
    def create(cls, name: str, config: Dict[str, Any] = None) -> ObjectiveLandscape:
        """
        Create a landscape instance

        Args:
            name: Landscape name (identity, sphere, gaussian)
            config: Configuration dictionary with domain and shape keys

        Returns:
            Landscape instance
        """
        name = name.lower()
        if name not in cls._landscapes:
            raise ConfigError("landscape", f"unknown landscape '{name}'. Supported: {cls.get_available_landscapes()}")
        return cls._landscapes[name](config)

    @classmethod
    def get_available_landscapes(cls) -> List[str]:
        return list(cls._landscapes.keys())


def objective_fitness(landscape: ObjectiveLandscape, s) -> float:
    """Deterministic objective fitness f_obj(s); DomainError outside the domain"""
    value = landscape(getattr(s, "s", s))
    return float(value) if np.ndim(value) == 0 else value
