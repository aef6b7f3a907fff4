"""Monte Carlo estimation for the stopped lazy walk, plus exact uniform
sampling of graphical bridges from the counting DP.

The lazy walk steps +1 or -1 with probability 1/4 each and stays put
with probability 1/2, tracking the running area A_k = sum_{i<=k} Y_i.
It stops at the first k >= 1 with Y_k = 0 and A_k <= 0; the quantity of
interest is the probability that the stopping area is exactly zero.
Runs that never stop within the horizon are reported as capped, never
silently dropped: nothing here guarantees the stop comes in finite
time, and at horizon 10^6 roughly 1.8 percent of runs are still going,
which is why estimates carry the capped fraction alongside the
standard error.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bridges import graphical_bridge_counts

# memory for the per-step suffix-count tables grows like n^4-ish
SAMPLING_CAP = 40
# elements per simulation block; keeps peak numpy memory modest
_BLOCK_BUDGET = 4_000_000


class WalkOutcome(enum.Enum):
    AREA_ZERO = "area_zero"
    AREA_NEGATIVE = "area_negative"
    CAPPED = "capped"


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo result: the estimate is the fraction of area-zero
    stops among non-capped runs; capped runs are excluded from the
    denominator but reported, since they bias the estimate by at most
    their own fraction."""

    estimate: float
    samples: int
    std_error: float
    capped_fraction: float
    seed: int


def stop_time_outcome(increments, horizon: int) -> WalkOutcome:
    """Drive one walk from an increment iterable; mainly a test seam."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    y = 0
    area = 0
    steps = 0
    for inc in increments:
        y += inc
        area += y
        steps += 1
        if y == 0 and area <= 0:
            return WalkOutcome.AREA_ZERO if area == 0 else WalkOutcome.AREA_NEGATIVE
        if steps >= horizon:
            break
    return WalkOutcome.CAPPED


def simulate_stopped_walk(seed: int, horizon: int) -> WalkOutcome:
    """One lazy walk run with its own stdlib generator."""
    rng = random.Random(seed)

    def stream():
        while True:
            u = rng.randrange(4)
            yield 1 if u == 0 else (-1 if u == 1 else 0)

    return stop_time_outcome(stream(), horizon)


def _run_worker(samples: int, horizon: int, seed_seq) -> tuple[int, int, int]:
    """Vectorized batch of walks; returns (zero, negative, capped).

    Same increment law as simulate_stopped_walk (a uniform draw from
    four values: one maps to +1, one to -1, two to 0), consumed in
    blocks whose width adapts so alive * width stays within budget.
    """
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    y = np.zeros(samples, dtype=np.int64)
    area = np.zeros(samples, dtype=np.int64)
    zero = negative = 0
    done = 0
    while y.size and done < horizon:
        width = min(max(16, _BLOCK_BUDGET // y.size), horizon - done)
        u = rng.integers(0, 4, size=(y.size, width), dtype=np.int8)
        inc = (u == 0).astype(np.int64)
        inc -= u == 1
        np.cumsum(inc, axis=1, out=inc)
        ypath = inc
        ypath += y[:, None]
        apath = np.cumsum(ypath, axis=1)
        apath += area[:, None]
        stop = (ypath == 0) & (apath <= 0)
        hit = stop.any(axis=1)
        if hit.any():
            first = np.argmax(stop[hit], axis=1)
            stop_area = apath[hit][np.arange(first.size), first]
            zero += int(np.count_nonzero(stop_area == 0))
            negative += int(np.count_nonzero(stop_area < 0))
            alive = ~hit
            y = ypath[alive, -1].copy()
            area = apath[alive, -1].copy()
        else:
            y = ypath[:, -1].copy()
            area = apath[:, -1].copy()
        done += width
    return zero, negative, y.size


def estimate_zero_area_prob(
    samples: int, horizon: int, seed: int, workers: int = 1
) -> McEstimate:
    """Estimate the zero-area stopping probability.

    Deterministic for fixed (samples, horizon, seed, workers): worker w
    runs its share of the samples on the substream spawned from
    (seed, w).  Workers are independent batches; they are executed
    sequentially, the knob exists for reproducible stream splitting.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    zero = negative = capped = 0
    base, extra = divmod(samples, workers)
    for w in range(workers):
        share = base + (1 if w < extra else 0)
        if share == 0:
            continue
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(w,))
        z, ng, cp = _run_worker(share, horizon, ss)
        zero += z
        negative += ng
        capped += cp
    stopped = zero + negative
    if stopped:
        p = zero / stopped
        se = math.sqrt(p * (1 - p) / samples)
    else:
        p = math.nan
        se = math.nan
    return McEstimate(
        estimate=p,
        samples=samples,
        std_error=se,
        capped_fraction=capped / samples,
        seed=seed,
    )


# ordering matters only for reproducibility of the sampler below
_PAIRS = ((1, 1), (-1, -1), (1, -1), (-1, 1))


@lru_cache(maxsize=8)
def _suffix_counts(n: int) -> tuple:
    """suffix[k][(height, area)] = completions into a graphical bridge."""
    suffix: list[dict] = [dict() for _ in range(n + 1)]
    suffix[n][(0, 0)] = 1
    for k in range(n - 1, -1, -1):
        here = suffix[k]
        for (h2, s2), ways in suffix[k + 1].items():
            for dh, weight in ((2, 1), (-2, 1), (0, 2)):
                h = h2 - dh
                s = s2 - h2 // 2
                if s < 0 or (k == 0 and (h or s)):
                    continue
                key = (h, s)
                if key in here:
                    here[key] += weight * ways
                else:
                    here[key] = weight * ways
    return tuple(suffix)


def sample_uniform_graphical_bridge(n: int, seed: int):
    """Exactly uniform graphical bridge of length 2n.

    Walks the counting DP forward, choosing each increment pair with
    probability proportional to the exact number of completions; the
    draws use integer ranges, so huge counts lose no precision.
    """
    if n < 0:
        raise ValueError(f"needs n >= 0, got {n}")
    if n > SAMPLING_CAP:
        raise ValueError(f"sampling capped at n = {SAMPLING_CAP}, got {n}")
    suffix = _suffix_counts(n)
    assert suffix[0].get((0, 0)) == graphical_bridge_counts(n)[n]
    rng = random.Random(seed)
    out: list[int] = []
    h = s = 0
    for k in range(n):
        nxt = suffix[k + 1]
        weights = []
        for a, b in _PAIRS:
            h2 = h + a + b
            key = (h2, s + h2 // 2)
            weights.append(nxt.get(key, 0))
        total = sum(weights)
        assert total > 0
        pick = rng.randrange(total)
        for (a, b), wt in zip(_PAIRS, weights):
            if pick < wt:
                out.extend((a, b))
                h += a + b
                s += h // 2
                break
            pick -= wt
    return tuple(out)
