"""Seeded sweep drivers behind the CLI: classical verification, the
quadratic-amplitude ratio sweep, double-large-sieve spot checks, and the
Lemma-4-style pair-count table.

Every driver is deterministic given its configuration: randomness comes
from numpy's PCG64 generator seeded per row through SeedSequence spawn
keys, rows are emitted in grid order, and parallel execution (capped by
SIEVELAB_THREADS) preserves that order.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from . import bounds, dls
from .expsum import CoeffSeq, LinearAmplitude, QuadraticAmplitude, ls_lhs
from .farey import farey_sequence, min_gap_mod1

RNG_ID = "numpy-pcg64"


def thread_count():
    """Worker count for row-parallel drivers, capped by SIEVELAB_THREADS."""
    cap = os.environ.get("SIEVELAB_THREADS")
    if cap is None:
        return 1
    return max(1, int(cap))


def _map_rows(fn, specs):
    workers = thread_count()
    if workers == 1:
        return [fn(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, specs))


def _row_rng(seed, index):
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def random_sequence(dist, M, N, rng, density=0.1):
    """A random coefficient sequence of the named distribution.

    unit: unit-modulus random phases; gaussian: complex standard normal;
    sparse: gaussian values kept with the given density (density 0 gives
    the all-zero sequence).
    """
    if dist == "unit":
        phases = rng.uniform(0.0, 1.0, N)
        values = np.exp(2j * np.pi * phases)
    elif dist == "gaussian":
        values = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    elif dist == "sparse":
        values = rng.standard_normal(N) + 1j * rng.standard_normal(N)
        values *= rng.uniform(0.0, 1.0, N) < density
    else:
        raise ValueError("unknown distribution %r" % (dist,))
    return CoeffSeq(M=M, N=N, values=tuple(values))


# ---------------------------------------------------------------------------
# verify-classical


def verify_classical(
    instances=200,
    q_max=32,
    n_max=256,
    seed=0,
    dist="gaussian",
    density=0.1,
    rhs_scale=1.0,
):
    """Hard check of the sharp and additive large sieve bounds, f(n) = n.

    rhs_scale shrinks both right sides and exists only to let the harness
    prove it can fail.  Returns (rows, all_ok).
    """
    f = LinearAmplitude(1, 0)
    rows = []
    all_ok = True
    for i in range(instances):
        rng = _row_rng(seed, i)
        Q = int(rng.integers(2, q_max + 1))
        N = int(rng.integers(1, n_max + 1))
        M = int(rng.integers(-32, 33))
        seq = random_sequence(dist, M, N, rng, density)
        Z = seq.power()
        points = farey_sequence(Q)
        delta = Fraction(1, Q * (Q - 1))
        t0 = time.perf_counter()
        lhs = ls_lhs(seq, f, points)
        dt = (time.perf_counter() - t0) * 1e3
        rhs_sharp = bounds.sharp_rhs(delta, N, Z) * rhs_scale
        rhs_add = bounds.additive_rhs(Q, N, Z) * rhs_scale
        slack = 1.0 + 1e-9
        ok = lhs <= rhs_sharp * slack and lhs <= rhs_add * slack
        all_ok = all_ok and ok
        rows.append(
            {
                "row": i,
                "seed": seed,
                "rng": RNG_ID,
                "version": __version__,
                "dist": dist,
                "Q": Q,
                "M": M,
                "N": N,
                "Z": Z,
                "delta": str(delta),
                "lhs": lhs,
                "rhs_sharp": rhs_sharp,
                "rhs_additive": rhs_add,
                "holds": ok,
            }
        )
    return rows, all_ok


# ---------------------------------------------------------------------------
# theorem2-sweep


@dataclass(frozen=True)
class SweepConfig:
    """Grid for the quadratic-amplitude ratio sweep."""

    q_values: tuple = (4, 8, 16, 32)
    n_values: tuple = (16, 64, 256)
    m_values: tuple = (0,)
    alpha_values: tuple = (Fraction(1, 3), Fraction(1, 2), Fraction(1))
    ratios: tuple = (Fraction(0), Fraction(1, 2))
    eps_values: tuple = (0.05, 0.1, 0.25, 0.5)
    dist: str = "gaussian"
    density: float = 0.1
    seed: int = 0


THEOREM2_COLUMNS = [
    "row",
    "seed",
    "rng",
    "version",
    "dist",
    "Q",
    "M",
    "N",
    "alpha",
    "a",
    "b",
    "eps",
    "Z",
    "delta_exact",
    "y_paper",
    "y_exact",
    "lhs",
    "rhs_classical",
    "rhs_sharp",
    "rhs_additive",
    "rhs_trivial",
    "rhs_theorem2",
    "rhs_conjecture",
    "ratio_classical",
    "ratio_sharp",
    "ratio_additive",
    "ratio_trivial",
    "ratio_theorem2",
    "ratio_conjecture",
    "status",
]


def _sweep_row(spec):
    index, Q, M, N, alpha, ab, eps, dist, density, seed = spec
    rng = _row_rng(seed, index)
    a, b = ab.numerator, ab.denominator
    beta = alpha * ab
    f = QuadraticAmplitude(alpha=alpha, beta=beta, gamma=Fraction(0))
    seq = random_sequence(dist, M, N, rng, density)
    Z = seq.power()
    points = farey_sequence(Q)
    delta = min_gap_mod1(points.points) if len(points) > 1 else Fraction(1)
    t0 = time.perf_counter()
    lhs = ls_lhs(seq, f, points)
    runtime_ms = (time.perf_counter() - t0) * 1e3
    status = "ok"
    try:
        rhs_t2 = bounds.theorem2_rhs(Q, alpha, a, b, M, N, eps, Z)
    except ValueError:
        rhs_t2 = None
        status = "domain_error"
    report = bounds.BoundReport(
        params=bounds.BoundParams(
            Q=Q, M=M, N=N, alpha=alpha, a=a, b=b, eps=eps, delta=delta, Z=Z
        ),
        lhs=lhs,
        rhs_classical=bounds.classical_rhs(delta, N, Z),
        rhs_sharp=bounds.sharp_rhs(delta, N, Z),
        rhs_additive=bounds.additive_rhs(Q, N, Z),
        rhs_trivial=bounds.trivial_rhs(delta, alpha, M, N, Z),
        rhs_theorem2=rhs_t2,
        rhs_conjecture=bounds.conjecture_rhs(Q, N, Z),
        seed=seed,
        runtime_ms=runtime_ms,
        status=status,
    )
    ratios = report.compute_ratios()
    y_paper = 2 * abs(M) * N + N * N + N * ab
    y_exact = 2 * dls.max_abs_g(M, N, a, b)
    row = {
        "row": index,
        "seed": seed,
        "rng": RNG_ID,
        "version": __version__,
        "dist": dist,
        "Q": Q,
        "M": M,
        "N": N,
        "alpha": str(alpha),
        "a": a,
        "b": b,
        "eps": eps,
        "Z": Z,
        "delta_exact": str(delta),
        "y_paper": float(y_paper),
        "y_exact": float(y_exact),
        "lhs": lhs,
        "status": status,
    }
    for name in ("classical", "sharp", "additive", "trivial", "theorem2", "conjecture"):
        row["rhs_" + name] = getattr(report, "rhs_" + name)
        row["ratio_" + name] = ratios[name]
    return report, row


def theorem2_sweep(config):
    """Ratio sweep over the grid; never asserts the quadratic bound.

    Returns (reports, rows): BoundReport objects and serializable dicts,
    in grid order (Q, M, N, alpha, ratio, eps).
    """
    specs = []
    index = 0
    for Q in config.q_values:
        for M in config.m_values:
            for N in config.n_values:
                for alpha in config.alpha_values:
                    for ab in config.ratios:
                        for eps in config.eps_values:
                            specs.append(
                                (
                                    index,
                                    Q,
                                    M,
                                    N,
                                    alpha,
                                    ab,
                                    eps,
                                    config.dist,
                                    config.density,
                                    config.seed,
                                )
                            )
                            index += 1
    results = _map_rows(_sweep_row, specs)
    reports = [r for r, _ in results]
    rows = [row for _, row in results]
    return reports, rows


# ---------------------------------------------------------------------------
# dls-check


def _dls_instance(rng, size_max, scale_min, scale_max):
    X = float(rng.uniform(scale_min, scale_max))
    Y = float(rng.uniform(scale_min, scale_max))
    m = int(rng.integers(1, size_max + 1))
    n = int(rng.integers(1, size_max + 1))
    xs = rng.uniform(-X / 2, X / 2, m)
    ys = rng.uniform(-Y / 2, Y / 2, n)
    aw = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    bw = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return dls.DLSInstance(
        xs=tuple(xs), ys=tuple(ys), aw=tuple(aw), bw=tuple(bw), X=X, Y=Y
    )


def dls_random_sweep(instances=500, size_max=50, scale_min=0.25, scale_max=100.0, seed=0):
    """dls_check over seeded random instances.  Returns (rows, all_hold)."""

    def one(i):
        rng = _row_rng(seed, i)
        inst = _dls_instance(rng, size_max, scale_min, scale_max)
        check = dls.dls_check(inst)
        return {
            "row": i,
            "seed": seed,
            "rng": RNG_ID,
            "version": __version__,
            "m_points": len(inst.xs),
            "n_points": len(inst.ys),
            "X": inst.X,
            "Y": inst.Y,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "holds": check.holds,
            "anomaly": check.anomaly,
        }

    rows = _map_rows(one, range(instances))
    all_hold = all(r["holds"] and not r["anomaly"] for r in rows)
    return rows, all_hold


# ---------------------------------------------------------------------------
# lemma4 table


def lemma4_table(M, N, alpha, a, b, eps=0.1):
    """T for every (m, n) in S^2 by both counters, with both bound forms.

    Returns (rows, counters_agree).
    """
    bound_stmt = dls.lemma4_bound(alpha, a, b, M, N, eps)
    bound_proof = dls.lemma4_bound_proof_form(alpha, a, b, M, N, eps)
    rows = []
    agree = True
    for m in range(M + 1, M + N + 1):
        for n in range(M + 1, M + N + 1):
            inst = dls.Lemma4Instance(M=M, N=N, alpha=alpha, a=a, b=b, m=m, n=n)
            t_brute = dls.lemma4_count_bruteforce(inst)
            t_div = dls.lemma4_count_divisor(inst)
            same = t_brute == t_div
            agree = agree and same
            rows.append(
                {
                    "m": m,
                    "n": n,
                    "T_bruteforce": t_brute,
                    "T_divisor": t_div,
                    "agree": same,
                    "bound_statement": bound_stmt,
                    "bound_proof_form": bound_proof,
                    "alpha": str(Fraction(alpha)),
                    "a": a,
                    "b": b,
                    "M": M,
                    "N": N,
                    "eps": eps,
                    "version": __version__,
                }
            )
    return rows, agree
