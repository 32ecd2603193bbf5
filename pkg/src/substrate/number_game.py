"""Number game: subjective fitness from a sampled set of evaluators"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .landscapes import ObjectiveLandscape


@dataclass(frozen=True)
class SearchPoint:
    """A point s of the one-dimensional real search space"""

    s: float

    def __post_init__(self):
        if not np.isfinite(self.s):
            raise ValueError(f"Search point must be finite, got {self.s}")


@dataclass
class Population:
    """Players P(k) of one generation"""

    members: List[SearchPoint]
    generation: int = 0

    def __post_init__(self):
        if not self.members:
            raise ValueError("Population must not be empty")

    def __len__(self) -> int:
        return len(self.members)

    @property
    def coordinates(self) -> np.ndarray:
        return np.array([m.s for m in self.members], dtype=float)

    @classmethod
    def uniform(cls, size: int, landscape: ObjectiveLandscape, rng: np.random.Generator, generation: int = 0) -> "Population":
        """Population drawn uniformly over the landscape domain"""
        if size < 1:
            raise ValueError(f"Population size must be positive, got {size}")
        low, high = landscape.domain
        return cls([SearchPoint(float(s)) for s in rng.uniform(low, high, size=size)], generation)


@dataclass
class EvaluatorSample:
    """Sample sigma(E) of mu evaluators drawn without replacement from a pool of lambda"""

    evaluators: List[SearchPoint]
    mu: int
    lam: int
    indices: List[int] = field(default_factory=list)

    def __post_init__(self):
        if not 1 <= self.mu <= self.lam:
            raise ValueError(f"Need 1 <= mu <= lambda, got mu={self.mu}, lambda={self.lam}")
        if len(self.evaluators) != self.mu:
            raise ValueError(f"Sample holds {len(self.evaluators)} evaluators, expected mu={self.mu}")


def sample_evaluators(pool: Population, mu: int, rng: np.random.Generator, exclude: Optional[int] = None) -> EvaluatorSample:
    """
    Draw a fresh uniform sample of evaluators without replacement

    Args:
        pool: Evaluator pool E (the population by default)
        mu: Sample size
        rng: Random stream owned by the caller
        exclude: Index of a pool member that may not evaluate itself

    Returns:
        EvaluatorSample with lambda = pool size after the exclusion
    """
    candidates = [i for i in range(len(pool)) if i != exclude]
    lam = len(candidates)
    if not 1 <= mu <= lam:
        raise ValueError(f"Sample size mu must be in [1, {lam}], got {mu}")
    chosen = rng.choice(lam, size=mu, replace=False)
    indices = [candidates[int(c)] for c in chosen]
    return EvaluatorSample([pool.members[i] for i in indices], mu, lam, indices)


def subjective_fitness(landscape: ObjectiveLandscape, s: SearchPoint, sample: EvaluatorSample) -> float:
    """
    f_sub(s): share of sampled evaluators that s strictly beats in objective fitness

    Ties count as losses, so s never gains from comparing with an equal evaluator.
    """
    f_s = landscape(s.s)
    f_evaluators = landscape(np.array([e.s for e in sample.evaluators], dtype=float))
    return float(np.count_nonzero(f_s > f_evaluators) / sample.mu)


def evaluate_population(
    landscape: ObjectiveLandscape,
    population: Population,
    mu: int,
    rng: np.random.Generator,
    include_self: bool = False,
    samples: int = 1,
) -> List[Dict[str, float]]:
    """
    Objective and subjective fitness of every population member

    Returns one record per member with a single subjective fitness draw (`f_sub`), its mean over
    `samples` independent draws (`f_sub_mean`) and the expected value, the fraction of
    the evaluator pool strictly below the member (`f_sub_expected`).
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    coordinates = population.coordinates
    f_obj = landscape(coordinates)
    records = []
    for index, member in enumerate(population.members):
        exclude = None if include_self else index
        draws = [
            subjective_fitness(landscape, member, sample_evaluators(population, mu, rng, exclude))
            for _ in range(samples)
        ]
        pool = f_obj if include_self else np.delete(f_obj, index)
        records.append({
            "index": index,
            "s": float(member.s),
            "f_obj": float(f_obj[index]),
            "f_sub": draws[0],
            "f_sub_mean": float(np.mean(draws)),
            "f_sub_expected": float(np.count_nonzero(f_obj[index] > pool) / len(pool)),
        })
    return records
