"""Randic index: direct edge sum and the deviation-from-regular form.

Both evaluations use math.fsum (exactly rounded summation) with square
roots taken on integer degree products, which keeps the residual between
the two forms at a few ulp -- far below the 1e-12 contract for any graph
with n <= 62.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph

#: Tolerance for algebraic identities that hold exactly in real arithmetic.
#: Overridable on the command line; inequality slacks use a separate, looser
#: constant (see bounds.SLACK_TOLERANCE).
IDENTITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RandicValue:
    """Computed index plus the exact degree-pair multiset behind it.

    pair_counts maps (i, j) with i <= j to the number of edges whose
    endpoint degrees are {i, j}; the counts sum to |E| and the value equals
    sum(count / sqrt(i*j)).
    """

    value: float
    pair_counts: dict[tuple[int, int], int]


def _checked_degrees(g: Graph) -> tuple[int, ...]:
    if g.n == 0:
        raise ValueError("Randic index undefined for the empty graph")
    deg = g.degrees
    if min(deg) == 0:
        raise ValueError("isolated vertex present (all degrees must be positive)")
    return deg


def randic_direct(g: Graph) -> RandicValue:
    """Sum 1/sqrt(d(u)*d(v)) over all edges uv."""
    deg = _checked_degrees(g)
    counts: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        if a > b:
            a, b = b, a
        key = (a, b)
        counts[key] = counts.get(key, 0) + 1
    value = math.fsum(c / math.sqrt(i * j) for (i, j), c in counts.items())
    return RandicValue(value=value, pair_counts=counts)


def randic_deviation(g: Graph) -> float:
    """Evaluate the index as n/2 minus half the summed squared differences
    of reciprocal root degrees over edges (zero exactly on regular graphs)."""
    deg = _checked_degrees(g)
    inv = {x: 1.0 / math.sqrt(x) for x in set(deg)}
    dev = math.fsum(0.5 * (inv[deg[u]] - inv[deg[v]]) ** 2 for u, v in g.edges)
    return g.n / 2 - dev


def identity_residual(g: Graph) -> float:
    """|randic_direct - randic_deviation|; the two forms agree algebraically."""
    return abs(randic_direct(g).value - randic_deviation(g))
