"""Confidence intervals over repetition means"""

from typing import Sequence, Tuple

import numpy as np
from scipy.stats import norm

DEFAULT_LEVEL = 0.99


def confidence_interval(samples: Sequence[float], level: float = DEFAULT_LEVEL) -> Tuple[float, float]:
    """
    Normal-approximation confidence interval of the mean

    mean +/- z * s / sqrt(n), with s the sample standard deviation and z the two-sided
    normal quantile of `level` (2.576 for 0.99).
    """
    values = np.asarray(samples, dtype=float)
    if values.size < 2:
        raise ValueError(f"Need at least 2 samples for a confidence interval, got {values.size}")
    if not 0.0 < level < 1.0:
        raise ValueError(f"Confidence level must be in (0, 1), got {level}")
    mean = float(values.mean())
    half_width = float(norm.ppf(0.5 + level / 2.0) * values.std(ddof=1) / np.sqrt(values.size))
    return mean - half_width, mean + half_width
