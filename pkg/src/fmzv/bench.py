"""Timing harness for the tree-DP kernels.

Compares the compiled and pure-Python backends on identical sweeps and
reports how wall time scales with the prime, which should be roughly
linear (the sweep is Theta(p * #nodes)).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _kernels
from .harmonic import INVERSE_TABLE_BUDGET
from .indices import bounded_weight_tree
from .modarith import Prime

# Wall-time ratio window considered consistent with linear scaling when
# the prime doubles.
SCALING_WINDOW = (1.4, 2.8)


@dataclass
class BenchReport:
    weight: int
    primes: tuple
    node_count: int
    repeat: int
    # backend -> {prime: best seconds}
    timings: dict = field(default_factory=dict)

    def ratio(self, backend: str) -> float:
        """Wall-time ratio of the largest prime to the smallest."""
        times = self.timings[backend]
        lo, hi = min(times), max(times)
        return times[hi] / times[lo]

    def in_window(self, backend: str) -> bool:
        lo, hi = SCALING_WINDOW
        return lo <= self.ratio(backend) <= hi


def _time_backend(module, p: int, edges, node_count: int, repeat: int) -> float:
    src, dst, lab = edges
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        module.tree_dp(p, src, dst, lab, node_count, table_budget=INVERSE_TABLE_BUDGET)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def run_bench(weight: int = 10, primes=(10007, 20011), repeat: int = 3,
              backends=None) -> BenchReport:
    """Best-of-`repeat` tree-DP timings per backend per prime."""
    ps = tuple(Prime(p) for p in primes)
    if len(ps) < 2:
        raise ValueError("need at least two primes to measure scaling")
    tree = bounded_weight_tree(weight)
    edges = tree.edges_postorder()
    available = _kernels.available_backends()
    if backends is None:
        chosen = available
    else:
        missing = set(backends) - set(available)
        if missing:
            raise ValueError(f"backend(s) not available: {sorted(missing)}")
        chosen = {name: available[name] for name in backends}
    report = BenchReport(weight, ps, tree.node_count, repeat)
    for name, module in chosen.items():
        report.timings[name] = {
            int(p): _time_backend(module, int(p), edges, tree.node_count, repeat)
            for p in ps
        }
    return report


def format_report(report: BenchReport) -> str:
    lines = [
        f"tree DP over bounded_weight_tree({report.weight}) "
        f"({report.node_count} nodes), best of {report.repeat}",
    ]
    for name in sorted(report.timings):
        times = report.timings[name]
        for p in sorted(times):
            lines.append(f"  {name:<9s} p={p:<8d} {times[p] * 1e3:10.2f} ms")
        lo, hi = SCALING_WINDOW
        verdict = "within" if report.in_window(name) else "OUTSIDE"
        lines.append(
            f"  {name:<9s} scaling ratio {report.ratio(name):.2f} "
            f"({verdict} the soft window [{lo}, {hi}])"
        )
    if "compiled" in report.timings and "pure" in report.timings:
        speedups = []
        for p in report.timings["compiled"]:
            speedups.append(report.timings["pure"][p] / report.timings["compiled"][p])
        lines.append(f"  compiled speedup over pure: {min(speedups):.1f}x or better")
    return "\n".join(lines)
