"""Number-game minimal substrate"""

from .landscapes import (
    GaussianLandscape,
    IdentityLandscape,
    LandscapeFactory,
    ObjectiveLandscape,
    SphereLandscape,
    objective_fitness,
)
from .number_game import (
    EvaluatorSample,
    Population,
    SearchPoint,
    evaluate_population,
    sample_evaluators,
    subjective_fitness,
)

__all__ = [
    "EvaluatorSample",
    "GaussianLandscape",
    "IdentityLandscape",
    "LandscapeFactory",
    "ObjectiveLandscape",
    "Population",
    "SearchPoint",
    "SphereLandscape",
    "evaluate_population",
    "objective_fitness",
    "sample_evaluators",
    "subjective_fitness",
]
