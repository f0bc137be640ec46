"""Independent brute-force references.

Everything here deliberately avoids the main code paths it checks: the
front comes from exhaustive enumeration instead of the closed form, and the
hypervolume from inclusion-exclusion or Monte-Carlo sampling instead of the
dimension sweep.  The oracles ship in the library (not only in the tests)
so the CLI ``verify`` subcommand can run self-verification on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .benchmarks import FrontDescriptor, ProblemInstance, incomparable_family_instance
from .core import Individual, ObjectiveVector, incomparable, weakly_dominates
from .selection import ReferencePoint


@dataclass(frozen=True, slots=True)
class OracleBudget:
    """Caps on brute-force work."""

    max_n_exhaustive: int = 14
    mc_samples: int = 10**6

    def __post_init__(self) -> None:
        if self.max_n_exhaustive > 24:
            raise ValueError("exhaustive enumeration beyond n=24 is not desk-scale")


def brute_force_front(inst: ProblemInstance, budget: OracleBudget = OracleBudget()) -> FrontDescriptor:
    """Enumerate all 2^n genomes and keep the non-dominated objective values."""
    if inst.n > budget.max_n_exhaustive:
        raise ValueError(f"n={inst.n} exceeds the exhaustive budget {budget.max_n_exhaustive}")
    values = sorted({inst.evaluate_mask(mask) for mask in range(1 << inst.n)})
    front = [
        v
        for v in values
        if not any(w != v and weakly_dominates(w, v) for w in values)
    ]
    return FrontDescriptor(frozenset(front))


def brute_force_pareto_optimal(mask: int, inst: ProblemInstance, budget: OracleBudget = OracleBudget()) -> bool:
    """Direct non-dominance check of one genome against the whole space."""
    if inst.n > budget.max_n_exhaustive:
        raise ValueError(f"n={inst.n} exceeds the exhaustive budget {budget.max_n_exhaustive}")
    v = inst.evaluate_mask(mask)
    return not any(
        w != v and weakly_dominates(w, v)
        for w in (inst.evaluate_mask(other) for other in range(1 << inst.n))
    )


def hv_inclusion_exclusion(points: Iterable[ObjectiveVector], r: ReferencePoint) -> int:
    """Union-of-boxes volume by inclusion-exclusion over subsets (|S| <= 15)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) > 15:
        raise ValueError(f"inclusion-exclusion capped at 15 points, got {len(pts)}")
    for p in pts:
        if len(p) != len(r) or not all(a > b for a, b in zip(p, r)):
            raise ValueError(f"point {p} does not strictly dominate reference {r}")
    total = 0
    for size in range(1, len(pts) + 1):
        sign = 1 if size % 2 == 1 else -1
        for subset in itertools.combinations(pts, size):
            vol = 1
            for coord, rc in zip(zip(*subset), r):
                vol *= min(coord) - rc
            total += sign * vol
    return total


def hv_monte_carlo(
    points: Sequence[ObjectiveVector],
    r: ReferencePoint,
    samples: int,
    rng: np.random.Generator,
) -> tuple[float, float]:
    """Unbiased estimate of the union volume with its standard error.

    Uniform sampling in the bounding box between r and the coordinatewise
    maximum of the point set.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        return 0.0, 0.0
    if samples < 10**3:
        raise ValueError(f"at least 1000 samples required, got {samples}")
    lo = np.array(r, dtype=float)
    hi = np.array([max(c) for c in zip(*pts)], dtype=float)
    box = float(np.prod(hi - lo))
    draws = rng.uniform(lo, hi, size=(samples, len(r)))
    arr = np.array(pts, dtype=float)
    inside = np.zeros(samples, dtype=bool)
    for p in arr:
        inside |= (draws <= p).all(axis=1)
    frac = inside.mean()
    est = box * float(frac)
    se = box * float(np.sqrt(frac * (1.0 - frac) / samples))
    return est, se


def verify_antichain(individuals: Sequence[Individual | ObjectiveVector]) -> bool:
    """True iff all pairs of objective vectors are incomparable."""
    vecs = [ind.objectives if isinstance(ind, Individual) else tuple(ind) for ind in individuals]
    return all(
        incomparable(vecs[i], vecs[j])
        for i in range(len(vecs))
        for j in range(i + 1, len(vecs))
    )


def random_antichain(
    rng: np.random.Generator,
    size: int,
    m: int,
    coord_max: int = 20,
) -> list[ObjectiveVector]:
    """Greedy random antichain of at most ``size`` vectors with coordinates
    in [0..coord_max]."""
    out: list[ObjectiveVector] = []
    for _ in range(50 * size):
        v = tuple(int(c) for c in rng.integers(0, coord_max + 1, size=m))
        if all(incomparable(v, u) for u in out):
            out.append(v)
            if len(out) == size:
                break
    return out


def run_verification(budget: OracleBudget = OracleBudget(), seed: int = 0) -> list[tuple[str, bool, str]]:
    """Cross-check the closed forms and the hypervolume engine; returns
    (check name, passed, detail) rows.  Used by the CLI ``verify`` subcommand."""
    from . import selection
    from .benchmarks import incomparable_family, is_pareto_optimal, pareto_front
    from .core import BitString

    rng = np.random.default_rng(seed)
    results: list[tuple[str, bool, str]] = []

    # closed-form front vs exhaustive enumeration
    cases = []
    for n in range(2, 13):
        for m in (2, 4):
            if (2 * n) % m:
                continue
            npr = 2 * n // m
            for k in range(1, npr // 2 + 1):
                cases.append(ProblemInstance.mojzj(n, m, k))
    ok = True
    detail = ""
    for inst in cases:
        closed = pareto_front(inst)
        brute = brute_force_front(inst, budget)
        expect = (inst.nprime - 2 * inst.k + 3) ** (inst.m // 2)
        if closed.points != brute.points or closed.size != expect:
            ok, detail = False, f"front mismatch on {inst}"
            break
    results.append(("closed-form front vs brute force", ok, detail or f"{len(cases)} instances"))

    # pareto membership characterization vs brute force
    ok, detail = True, ""
    for inst in (ProblemInstance.mojzj(8, 4, 2), ProblemInstance.mojzj(10, 2, 3)):
        for mask in range(1 << inst.n):
            a = is_pareto_optimal(BitString(inst.n, mask), inst)
            b = brute_force_pareto_optimal(mask, inst, budget)
            if a != b:
                ok, detail = False, f"membership mismatch at mask={mask} on {inst}"
                break
        if not ok:
            break
    results.append(("block membership vs brute-force non-dominance", ok, detail))

    # hypervolume engine vs inclusion-exclusion
    ok, detail = True, ""
    for trial in range(200):
        m = int(rng.integers(2, 7))
        pts = random_antichain(rng, int(rng.integers(1, 11)), m)
        r = selection.default_reference_point(m)
        a = selection.hypervolume(pts, r)
        b = hv_inclusion_exclusion(pts, r)
        if a != b:
            ok, detail = False, f"HV mismatch on trial {trial}: {a} vs {b}"
            break
    results.append(("dimension-sweep HV vs inclusion-exclusion", ok, detail or "200 antichains"))

    # inclusion-exclusion vs Monte-Carlo
    ok, detail = True, ""
    for trial in range(5):
        m = int(rng.integers(2, 5))
        pts = random_antichain(rng, 8, m)
        r = selection.default_reference_point(m)
        exact = hv_inclusion_exclusion(pts, r)
        est, se = hv_monte_carlo(pts, r, budget.mc_samples, rng)
        if abs(est - exact) > 4 * max(se, 1e-9):
            ok, detail = False, f"MC estimate {est}+-{se} far from exact {exact}"
            break
    results.append(("inclusion-exclusion vs Monte-Carlo", ok, detail or "5 antichains"))

    # incomparable-family construction
    fam = incomparable_family(8, 3)
    inst = incomparable_family_instance(8)
    vecs = [inst.evaluate(x) for x in fam]
    ok = verify_antichain(vecs) and vecs == [(5, 1, 3, 7), (6, 2, 2, 6), (7, 3, 1, 5)]
    results.append(("incomparable family antichain", ok, f"f values {vecs}"))

    return results
