"""Uniform-sampling maximizer with a counting-bound-derived iteration budget.

The solver draws assignments uniformly at random and keeps the heaviest.
At least 2**log2_count of the 2**n assignments land within additive slack
eps_eff * w of the optimum (a constructive count, no hidden constants), so
T = ceil(ln(1/fail_prob) * 2**(n - log2_count)) independent samples miss
that set with probability at most fail_prob.

Sample i's bits are a pure function of (seed, i) - see ``rng`` - which makes
runs replayable and lets workers own disjoint index ranges with no
coordination: results are identical for every parallelism degree.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bounds import counting_bound
from .errors import BudgetOverflowError, DomainError, UnsupportedError
from .instance import (
    Assignment,
    CspInstance,
    clause_length_histogram,
    ksat_optimum_lower_bound,
    weight_of_batch,
)
from .rng import assignment_bits

_CHUNK = 1 << 16

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


@dataclass(frozen=True)
class SamplerConfig:
    """Parameters of one solve run.

    ``w_bar``: known lower bound on the optimum weight; when given, the
    additive slack is tightened to eps*w_bar, which converts the guarantee
    to best_weight >= (1-eps)*optimum.
    """

    epsilon: float
    w_bar: float | None = None
    fail_prob: float = 1e-3
    seed: int = 0
    max_iterations: int | None = None
    parallelism: int = 1

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1.0:
            raise DomainError(f"epsilon {self.epsilon} outside (0, 1]")
        if not 0.0 < self.fail_prob < 1.0:
            raise DomainError(f"fail_prob {self.fail_prob} outside (0, 1)")
        if self.w_bar is not None and self.w_bar <= 0.0:
            raise DomainError("w_bar must be positive")
        if not 0 <= int(self.seed) < 1 << 64:
            raise DomainError("seed must fit in 64 bits")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise DomainError("max_iterations must be positive")
        if self.parallelism < 1:
            raise DomainError("parallelism must be positive")


@dataclass(frozen=True)
class SamplerResult:
    best_assignment: Assignment
    best_weight: float
    iterations_used: int
    iterations_budget: int
    target_kind: str
    seed: int
    effective_epsilon: float
    log2_count: float
    achieved_fail_prob: float
    clamped: bool


def _budget(num_vars: int, log2_count: float, cfg: SamplerConfig) -> tuple[int, bool]:
    """Iteration count, and whether the max_iterations cap clamped it."""
    lam = -math.log(cfg.fail_prob)
    log2_t = math.log2(lam) + (num_vars - log2_count)
    if log2_t >= 63.0:
        if cfg.max_iterations is None:
            raise BudgetOverflowError(
                f"iteration budget 2^{log2_t:.1f} exceeds 2^63; set max_iterations to cap the run"
            )
        return cfg.max_iterations, True
    t = max(1, math.ceil(lam * 2.0 ** (num_vars - log2_count)))
    if cfg.max_iterations is not None and t > cfg.max_iterations:
        return cfg.max_iterations, True
    return t, False


def iteration_budget(inst: CspInstance, cfg: SamplerConfig) -> int:
    """T = ceil(ln(1/fail_prob) * 2**(n - log2_count)), clamped to any cap."""
    cb = counting_bound(inst, cfg.epsilon, cfg.w_bar)
    return _budget(inst.num_vars, cb.log2_count, cfg)[0]


def _scan_range(
    inst: CspInstance,
    seed: int,
    lo: int,
    hi: int,
    trace: Callable[[int, float], None] | None,
) -> tuple[float, int]:
    """Best (weight, index) over iteration indices [lo, hi), earliest-wins."""
    best_w = -math.inf
    best_i = -1
    n = inst.num_vars
    for start in range(lo, hi, _CHUNK):
        count = min(_CHUNK, hi - start)
        bits = assignment_bits(seed, start, count, n)
        weights = weight_of_batch(inst, bits)
        if trace is not None:
            running = np.maximum.accumulate(np.concatenate(([best_w], weights)))[:-1]
            for j in np.flatnonzero(weights > running):
                trace(start + int(j), float(weights[j]))
        j = int(np.argmax(weights))
        w = float(weights[j])
        if w > best_w:
            best_w, best_i = w, start + j
    return best_w, best_i


def solve(
    inst: CspInstance,
    cfg: SamplerConfig,
    trace: Callable[[int, float], None] | None = None,
) -> SamplerResult:
    """Sample the budgeted number of assignments and return the heaviest.

    Deterministic in (instance, config): ties break toward the lowest
    iteration index, and the outcome does not depend on ``parallelism``.
    ``trace(index, weight)`` is invoked for every strict improvement a
    worker sees while scanning its own index range in order.
    """
    cb = counting_bound(inst, cfg.epsilon, cfg.w_bar)
    budget, clamped = _budget(inst.num_vars, cb.log2_count, cfg)

    workers = min(cfg.parallelism, budget)
    cuts = np.linspace(0, budget, workers + 1, dtype=np.int64)
    ranges = [(int(cuts[i]), int(cuts[i + 1])) for i in range(workers)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: _scan_range(inst, cfg.seed, *r, trace), ranges))
    else:
        parts = [_scan_range(inst, cfg.seed, lo, hi, trace) for lo, hi in ranges]

    best_w, best_i = parts[0]
    for w, i in parts[1:]:
        if w > best_w or (w == best_w and i < best_i):
            best_w, best_i = w, i

    bits = assignment_bits(cfg.seed, best_i, 1, inst.num_vars)[0]
    hit_rate = 2.0 ** (cb.log2_count - inst.num_vars)
    return SamplerResult(
        best_assignment=Assignment(tuple(int(b) for b in bits)),
        best_weight=best_w,
        iterations_used=budget,
        iterations_budget=budget,
        target_kind=MULTIPLICATIVE if cfg.w_bar is not None else ADDITIVE,
        seed=cfg.seed,
        effective_epsilon=cb.effective_epsilon,
        log2_count=cb.log2_count,
        achieved_fail_prob=math.exp(-budget * hit_rate),
        clamped=clamped,
    )


def solve_ksat(
    inst: CspInstance,
    k: int,
    epsilon: float,
    fail_prob: float = 1e-3,
    seed: int = 0,
    max_iterations: int | None = None,
    parallelism: int = 1,
    trace: Callable[[int, float], None] | None = None,
) -> SamplerResult:
    """Solve unit-weight CNF with the clause-length guarantee built in.

    Uses w_bar = max(m/2, sum_i (2^i-1)/2^i * m_i) from the length
    histogram, so the result carries the multiplicative (1-eps) guarantee
    without the caller supplying a bound.
    """
    hist = clause_length_histogram(inst)
    if not all(c.weight == 1.0 for c in inst.constraints):
        raise UnsupportedError("the clause-length lower bound requires unit weights")
    if max(hist) > int(k):
        raise DomainError(f"instance has clauses of length {max(hist)} > k={k}")
    m = inst.num_constraints
    w_bar = max(m / 2.0, ksat_optimum_lower_bound(hist))
    cfg = SamplerConfig(
        epsilon=epsilon,
        w_bar=w_bar,
        fail_prob=fail_prob,
        seed=seed,
        max_iterations=max_iterations,
        parallelism=parallelism,
    )
    return solve(inst, cfg, trace=trace)
