"""Walks with +-1 increments, diamond area, and graphical bridges.

A walk is a tuple of +1/-1 increments; a bridge is a walk of even length
whose increments sum to zero.  The diamond area of a walk of length 2m is

    sigma = (1/2) * sum_{i=1..m} X_{2i}

where X_j is the position after j steps.  Sampling only even times makes
sigma the ordinary signed area of the walk's lazy version (pairs of
increments averaged).

A bridge is graphical when sigma = 0 and every even-prefix diamond area
is non-negative.  A graphical bridge is irreducible when no proper
nonempty even prefix is itself a graphical bridge; splitting at every
prefix that completes a graphical bridge (a renewal time: position 0 and
accumulated area 0) decomposes a graphical bridge uniquely into
irreducible parts.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

Walk = tuple  # increments over {+1, -1}

# exhaustive enumeration touches binomial(2n, n) bridges
ENUMERATION_CAP = 10
# the residue DP is cubic-ish in n; past this it stops being interactive
RESIDUE_DP_CAP = 200


def _check_even_length(walk: Walk) -> None:
    if len(walk) % 2:
        raise ValueError(f"walk length must be even, got {len(walk)}")


def _check_bridge(walk: Walk) -> None:
    _check_even_length(walk)
    if sum(walk) != 0:
        raise ValueError("not a bridge: increments do not sum to 0")


def diamond_area(walk: Walk) -> int:
    """Half the sum of the walk's even-indexed positions (exact)."""
    _check_even_length(walk)
    height = 0
    doubled = 0
    for i in range(0, len(walk), 2):
        height += walk[i] + walk[i + 1]
        doubled += height
    assert doubled % 2 == 0
    return doubled // 2


def lazify(walk: Walk) -> tuple:
    """Average consecutive increment pairs, giving a {-1, 0, +1} walk."""
    _check_even_length(walk)
    return tuple(
        (walk[i] + walk[i + 1]) // 2 for i in range(0, len(walk), 2)
    )


def lazy_walk_area(lazy: tuple) -> int:
    """Signed area (sum of positions) of a lazy walk."""
    height = 0
    area = 0
    for step in lazy:
        height += step
        area += height
    return area


def even_prefix_areas(walk: Walk) -> list[int]:
    """Diamond areas of the even prefixes: [sigma_2, sigma_4, ...]."""
    _check_even_length(walk)
    height = 0
    sigma = 0
    out = []
    for i in range(0, len(walk), 2):
        height += walk[i] + walk[i + 1]
        # height is even at even times, so sigma stays integral
        sigma += height // 2
        out.append(sigma)
    return out


def is_graphical_bridge(bridge: Walk) -> bool:
    """True iff sigma(bridge) = 0 and all even-prefix areas are >= 0."""
    _check_bridge(bridge)
    height = 0
    sigma = 0
    for i in range(0, len(bridge), 2):
        height += bridge[i] + bridge[i + 1]
        sigma += height // 2
        if sigma < 0:
            return False
    return sigma == 0


def irreducible_decomposition(bridge: Walk) -> list[Walk]:
    """Split a graphical bridge at its renewal times.

    A renewal time is an even time where the position and the
    accumulated diamond area are both zero, i.e. where a proper prefix
    completes a graphical bridge.  The returned parts are irreducible
    and concatenate to the input.  Rejects non-graphical input.
    """
    if not is_graphical_bridge(bridge):
        raise ValueError("irreducible_decomposition needs a graphical bridge")
    parts = []
    height = 0
    sigma = 0
    start = 0
    for i in range(0, len(bridge), 2):
        height += bridge[i] + bridge[i + 1]
        sigma += height // 2
        if height == 0 and sigma == 0:
            parts.append(bridge[start : i + 2])
            start = i + 2
    return parts


def is_irreducible_bridge(bridge: Walk) -> bool:
    """True iff the bridge is graphical and has no interior renewal time.

    Equivalently: no proper nonempty even prefix is itself a graphical
    bridge, so the decomposition has exactly one part.  The empty bridge
    is graphical but not irreducible.
    """
    if not is_graphical_bridge(bridge):
        return False
    return len(irreducible_decomposition(bridge)) == 1


def enumerate_bridges(n: int) -> Iterator[Walk]:
    """All bridges of length 2n, in lexicographic order with +1 < -1."""
    if n < 0:
        raise ValueError(f"enumerate_bridges needs n >= 0, got {n}")
    for plus_positions in combinations(range(2 * n), n):
        bridge = [-1] * (2 * n)
        for p in plus_positions:
            bridge[p] = 1
        yield tuple(bridge)


def enumerate_graphical_bridges(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Walk]:
    """All graphical bridges of length 2n, lexicographic with +1 < -1.

    Exhaustive, so n is capped (default 10); raise the cap knowingly.
    """
    if n > cap:
        raise ValueError(f"enumerate_graphical_bridges capped at n = {cap}, got {n}")
    for bridge in enumerate_bridges(n):
        if is_graphical_bridge(bridge):
            yield bridge


# two-step transition blocks for the DP over even times: a pair of
# increments moves the height by +2, -2 or 0, and the mixed block (0)
# stands for the two orderings (+1,-1), (-1,+1)
_BLOCKS = ((2, 1), (-2, 1), (0, 2))


@lru_cache(maxsize=None)
def graphical_bridge_counts(n_max: int) -> tuple:
    """Counts of graphical bridges of lengths 0, 2, ..., 2*n_max.

    One forward DP over (height, accumulated diamond area) with the
    area kept non-negative throughout; reading off the (0, 0) state
    after k blocks gives the count for length 2k.
    """
    if n_max < 0:
        raise ValueError(f"graphical_bridge_counts needs n_max >= 0, got {n_max}")
    counts = [0] * (n_max + 1)
    counts[0] = 1
    states = {(0, 0): 1}
    for k in range(1, n_max + 1):
        nxt: dict = {}
        for (height, sigma), ways in states.items():
            for dh, weight in _BLOCKS:
                h2 = height + dh
                s2 = sigma + h2 // 2
                if s2 < 0:
                    continue
                key = (h2, s2)
                if key in nxt:
                    nxt[key] += weight * ways
                else:
                    nxt[key] = weight * ways
        states = nxt
        counts[k] = states.get((0, 0), 0)
    return tuple(counts)


def count_graphical_bridges(n: int) -> int:
    """Number of graphical bridges of length 2n (DP route)."""
    if n < 0:
        raise ValueError(f"count_graphical_bridges needs n >= 0, got {n}")
    return graphical_bridge_counts(n)[n]


def count_bridges_area_divisible(n: int) -> int:
    """Bridges of length 2n whose diamond area is divisible by n (DP).

    State is (height, area mod n); no sign constraint on the area, so
    this counts all bridges, not just graphical ones.
    """
    if n < 1:
        raise ValueError(f"count_bridges_area_divisible needs n >= 1, got {n}")
    if n > RESIDUE_DP_CAP:
        raise ValueError(f"residue DP capped at n = {RESIDUE_DP_CAP}, got {n}")
    states = {(0, 0): 1}
    for k in range(1, n + 1):
        reach = 2 * (n - k)  # must still be able to return to height 0
        nxt: dict = {}
        for (height, res), ways in states.items():
            for dh, weight in _BLOCKS:
                h2 = height + dh
                if h2 > reach or h2 < -reach:
                    continue
                key = (h2, (res + h2 // 2) % n)
                if key in nxt:
                    nxt[key] += weight * ways
                else:
                    nxt[key] = weight * ways
        states = nxt
    return states.get((0, 0), 0)


def count_bridges_area_divisible_bruteforce(n: int) -> int:
    """Exhaustive oracle for count_bridges_area_divisible (n <= 10)."""
    if n < 1:
        raise ValueError(f"needs n >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive bridge count capped at n = {ENUMERATION_CAP}")
    return sum(1 for b in enumerate_bridges(n) if diamond_area(b) % n == 0)


def bridge_to_string(bridge: Walk) -> str:
    """Serialize increments as a string over {U, D} (+1 -> U, -1 -> D)."""
    return "".join("U" if step == 1 else "D" for step in bridge)


def bridge_from_string(text: str) -> Walk:
    """Inverse of bridge_to_string; validates the alphabet."""
    if set(text) - {"U", "D"}:
        raise ValueError(f"bridge string must be over {{U, D}}, got {text!r}")
    return tuple(1 if ch == "U" else -1 for ch in text)
