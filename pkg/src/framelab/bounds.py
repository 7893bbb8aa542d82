"""Lower bounds on the minimal achievable coherence for (N, M) unit-norm frames.

Three bounds are evaluated:

* Welch: sqrt((N-M)/(M(N-1))), valid for N > M; equality forces an
  equiangular tight frame.
* Orthoplex: 1/sqrt(M), valid once N exceeds D+1 where D is the traceless
  embedding dimension; saturation is impossible when N > 2D, which is
  reported as an advisory flag (the bound itself stays valid).
* Cap-packing (Toth): (1/2) csc(N pi / (6(N-2))), valid for the complex
  field with M = 2 and N >= 3; strictly stronger than the orthoplex value
  for N > 6 and equal to it at N = 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import NotApplicable
from .frames import COMPLEX, FIELDS
from .embedding import embedding_dimension

# Preference order when bounds tie within this tolerance: Welch equality has
# the strongest structural consequence, then orthoplex, then Toth.
_TIE_TOL = 1e-12
_NAMES = ("Welch", "Orthoplex", "Toth")


@dataclass(frozen=True)
class BoundReport:
    welch: float
    orthoplex: Optional[float]
    toth: Optional[float]
    best: float
    best_name: str
    orthoplex_saturation_impossible: Optional[bool]  # advisory; None when inapplicable


def welch_bound(n: int, m: int) -> float:
    """sqrt((N-M)/(M(N-1))); requires N > M >= 1."""
    if m < 1 or n <= m:
        raise NotApplicable(f"Welch bound needs N > M >= 1, got N={n}, M={m}")
    return math.sqrt((n - m) / (m * (n - 1)))


def orthoplex_ceiling(m: int, field: str) -> int:
    """Largest N for which the orthoplex bound can still be saturated (= 2D)."""
    return 2 * embedding_dimension(m, field)


def orthoplex_bound(n: int, m: int, field: str) -> Optional[float]:
    """1/sqrt(M) when N > D+1 in the embedding dimension D, else None."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")
    if m < 1 or n < 1:
        raise ValueError("N and M must be positive")
    d = embedding_dimension(m, field)
    if n > d + 1:
        return 1.0 / math.sqrt(m)
    return None


def toth_bound(n: int) -> float:
    """(1/2) csc(N pi / (6(N-2))); complex field, M = 2, N >= 3 only."""
    if n < 3:
        raise NotApplicable(f"cap-packing bound needs N >= 3, got N={n}")
    return 0.5 / math.sin(n * math.pi / (6 * (n - 2)))


def best_bound(n: int, m: int, field: str) -> BoundReport:
    """Evaluate all applicable bounds and pick the largest."""
    welch = welch_bound(n, m)
    ortho = orthoplex_bound(n, m, field)
    toth = toth_bound(n) if (field == COMPLEX and m == 2 and n >= 3) else None
    sat_flag = None if ortho is None else (n > orthoplex_ceiling(m, field))

    values = (welch, ortho, toth)
    best = max(v for v in values if v is not None)
    best_name = next(name for name, v in zip(_NAMES, values)
                     if v is not None and v >= best - _TIE_TOL)
    return BoundReport(welch=welch, orthoplex=ortho, toth=toth,
                       best=best, best_name=best_name,
                       orthoplex_saturation_impossible=sat_flag)
