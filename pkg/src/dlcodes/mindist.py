"""Exact and sampled minimum weight of linear codes over GF(q).

Exhaustive search walks one message per projective class (leading nonzero
digit equal to 1); scalar multiples share a weight, so the distribution is
recovered by multiplying counts by q - 1.  Messages are encoded in blocks
through :func:`dlcodes.linalg.matmul`.

Sampling uses numpy's PCG64 bit generator seeded through ``SeedSequence``,
so a seed fully determines the report.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from typing import Any

import numpy as np

from .bundle_codes import LinearCode
from .errors import BudgetExceeded
from .linalg import matmul

DEFAULT_BUDGET = 1 << 24
BLOCK = 1 << 15


def default_budget() -> int:
    env = os.environ.get("DLCODES_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class WeightReport:
    method: str
    min_weight: int
    n: int
    k: int
    distribution: dict[int, int] | None = None
    samples: int | None = None
    seed: int | None = None
    verified_bound: tuple[int, bool] | None = None
    notes: list[str] = dc_field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        prov = "constructed" if self.method == "exhaustive" else "sampled"
        out: dict[str, Any] = {
            "method": self.method,
            "min_weight": {"value": self.min_weight, "provenance": prov},
            "n": {"value": self.n, "provenance": "constructed"},
            "k": {"value": self.k, "provenance": "constructed"},
        }
        if self.distribution is not None:
            out["distribution"] = {
                "value": {str(w): c for w, c in sorted(self.distribution.items())},
                "provenance": prov,
            }
        if self.samples is not None:
            out["samples"] = {"value": self.samples, "provenance": "input"}
            out["seed"] = {"value": self.seed, "provenance": "input"}
        if self.verified_bound is not None:
            out["bound"] = {"value": self.verified_bound[0], "provenance": "input"}
            out["bound_passed"] = self.verified_bound[1]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _digits(indices: np.ndarray, q: int, width: int) -> np.ndarray:
    out = np.zeros((len(indices), width), dtype=np.int64)
    rest = indices.copy()
    for j in range(width - 1, -1, -1):
        rest, out[:, j] = np.divmod(rest, q)
    return out


def _weights(code: LinearCode, messages: np.ndarray) -> np.ndarray:
    cw = matmul(messages.astype(code.field.dtype), code.gen, code.field)
    return np.count_nonzero(cw, axis=1)


def exact_min_distance(
    code: LinearCode,
    *,
    budget: int | None = None,
    distribution: bool = False,
    projective: bool = True,
) -> WeightReport:
    """Minimum Hamming weight over all nonzero codewords.

    ``projective=False`` walks all q^k - 1 nonzero messages instead of one per
    scalar class (used to cross-check the projective shortcut).
    """
    q, k, n = code.field.q, code.k, code.n
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    budget = default_budget() if budget is None else budget
    total = (q**k - 1) // (q - 1) if projective else q**k - 1
    if total > budget:
        raise BudgetExceeded(f"{total} messages exceed the budget {budget}; use sampling")
    counts = np.zeros(n + 1, dtype=np.int64)
    if projective:
        for lead in range(k):
            free = k - 1 - lead
            size = q**free
            for start in range(0, size, BLOCK):
                idx = np.arange(start, min(size, start + BLOCK), dtype=np.int64)
                msgs = np.zeros((len(idx), k), dtype=np.int64)
                msgs[:, lead] = 1
                if free:
                    msgs[:, lead + 1 :] = _digits(idx, q, free)
                counts += np.bincount(_weights(code, msgs), minlength=n + 1)
        counts *= q - 1
    else:
        for start in range(1, q**k, BLOCK):
            idx = np.arange(start, min(q**k, start + BLOCK), dtype=np.int64)
            counts += np.bincount(_weights(code, _digits(idx, q, k)), minlength=n + 1)
    # counts[0] > 0 only for a rank-deficient generator
    min_w = int(np.flatnonzero(counts)[0])
    dist = None
    if distribution:
        dist = {0: 1}
        for w in np.flatnonzero(counts):
            dist[int(w)] = dist.get(int(w), 0) + int(counts[w])
    return WeightReport("exhaustive", min_w, n, k, distribution=dist)


def sampled_min_weight(
    code: LinearCode,
    trials: int,
    seed: int,
    *,
    claimed_bound: int | None = None,
    distribution: bool = False,
) -> WeightReport:
    """Minimum weight over ``trials`` random nonzero codewords (an upper bound on d)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    q, k, n = code.field.q, code.k, code.n
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    counts = np.zeros(n + 1, dtype=np.int64)
    done = 0
    while done < trials:
        m = min(BLOCK, trials - done)
        msgs = rng.integers(0, q, size=(m, k))
        zero = ~msgs.any(axis=1)
        while zero.any():
            msgs[zero] = rng.integers(0, q, size=(int(zero.sum()), k))
            zero = ~msgs.any(axis=1)
        counts += np.bincount(_weights(code, msgs), minlength=n + 1)
        done += m
    min_w = int(np.flatnonzero(counts)[0])
    rep = WeightReport("sampled", min_w, n, k, samples=trials, seed=seed)
    if distribution:
        rep.distribution = {int(w): int(counts[w]) for w in np.flatnonzero(counts)}
    if claimed_bound is not None:
        rep.verified_bound = (claimed_bound, min_w >= claimed_bound)
    return rep


@dataclass
class BoundCheck:
    passed: bool
    bound: int
    report: WeightReport

    @property
    def method(self) -> str:
        return self.report.method

    def evidence(self) -> dict[str, Any]:
        ev = self.report.to_json()
        ev["bound"] = {"value": self.bound, "provenance": "input"}
        ev["bound_passed"] = self.passed
        return ev


def verify_bound(
    code: LinearCode,
    d_lower: int,
    *,
    budget: int | None = None,
    trials: int = 10_000,
    seed: int = 0,
) -> BoundCheck:
    """Exact check when the message space fits the budget, sampled falsification otherwise."""
    try:
        rep = exact_min_distance(code, budget=budget)
    except BudgetExceeded:
        rep = sampled_min_weight(code, trials, seed)
        rep.notes.append("sampled: a pass only means no counterexample was found")
    passed = rep.min_weight >= d_lower
    rep.verified_bound = (d_lower, passed)
    return BoundCheck(passed, d_lower, rep)
