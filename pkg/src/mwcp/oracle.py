"""Ground-truth solver: exhaustive search over subsets of the positive points.

Only subsets of S+ need enumeration: any optimal polytope can be replaced
by the hull of the positive points it contains without losing weight, so
some optimum has all its vertices in S+.
"""

from __future__ import annotations

import itertools

from .model import (
    Instance,
    Solution,
    best_singleton,
    empty_solution,
    evaluate,
    prune_to_maximal,
    require_canonical,
)

DEFAULT_LIMIT = 20


class OracleSizeError(RuntimeError):
    """Too many positive points for exhaustive subset enumeration."""


def solve_bruteforce(
    instance: Instance, *, limit: int = DEFAULT_LIMIT, allow_empty: bool = True
) -> Solution:
    """Exact optimum in any dimension by subset enumeration over S+.

    Subsets are visited by increasing size, then lexicographically, and only
    strictly better weights replace the incumbent, so the first optimum found
    is the canonical witness.  It is additionally pruned to a maximal set.
    Refuses instances whose |S+| exceeds ``limit``.
    """
    require_canonical(instance)
    pos = instance.positive_indices()
    if len(pos) > limit:
        raise OracleSizeError(
            f"{len(pos)} positive points exceed the exhaustive-search bound of {limit}"
        )
    if not pos:
        return empty_solution(instance.dimension) if allow_empty else best_singleton(instance)
    best: Solution | None = None
    for size in range(0 if allow_empty else 1, len(pos) + 1):
        for combo in itertools.combinations(pos, size):
            sol = evaluate(instance, combo)
            if best is None or sol.weight > best.weight:
                best = sol
    chosen = prune_to_maximal(instance, best.chosen)
    final = evaluate(instance, chosen)
    assert final.weight == best.weight
    for v in final.chosen:
        rest = [u for u in final.chosen if u != v]
        assert evaluate(instance, rest).weight < final.weight, "witness not maximal"
    return final
