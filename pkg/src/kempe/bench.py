"""Benchmark the coloring-extension kernel backends.

Runs the same instance batches through the compiled kernel and its
pure-Python twin, checks they agree, and prints per-batch timings::

    python3 -m kempe.bench
    python3 -m kempe.bench --repeat 5

The batches mirror how the library actually uses the kernel: the
edge-deletion recoloring loop of a criticality check, plain
3-colorability decisions over an enumeration level, and a class-2 graph
where the search must exhaust every branch before answering no.
"""

from __future__ import annotations

import argparse
import time

from ._kernel import BACKEND, pure
from .families import enumerate_subcubic, petersen, woodall_j

try:
    from ._kernel import _fast
except ImportError:  # extension was not built
    _fast = None


def _kernel_args(g, k=3, fixed=None):
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    if fixed is None:
        fixed = [-1] * g.edge_count
    return (k, g.vertex_count, eu, ev, fixed)


def build_batches():
    """Return [(label, [instance, ...]), ...] of kernel call tuples."""
    j2 = woodall_j(2)
    deletions = []
    for e in range(j2.edge_count):
        fixed = [-1] * j2.edge_count
        fixed[e] = -2
        deletions.append(_kernel_args(j2, fixed=fixed))

    decisions = [_kernel_args(g) for g in enumerate_subcubic(7)]

    return [
        ("edge-deletion recoloring, J_2", deletions),
        ("3-colorability decisions, all connected subcubic n=7", decisions),
        ("class-2 exhaustion, Petersen graph", [_kernel_args(petersen())]),
    ]


def time_batch(func, batch, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        for args in batch:
            func(*args)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="kempe.bench", description="compare kernel backends")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions per batch (best is kept)")
    args = parser.parse_args(argv)
    if args.repeat < 1:
        parser.error("--repeat must be at least 1")

    print("coloring-extension kernel benchmark")
    print("  selected backend: %s (set KEMPE_PURE=1 to force pure)" % BACKEND)
    if _fast is None:
        print("  compiled backend: not built; timing the pure twin only")
    print()

    batches = build_batches()
    width = max(len(label) for label, _ in batches)
    header = "%-*s  %5s  %9s" % (width, "batch", "calls", "pure")
    if _fast is not None:
        header += "  %9s  %7s" % ("fast", "speedup")
    print(header)

    agree = True
    for label, batch in batches:
        t_pure = time_batch(pure.extend_colors, batch, args.repeat)
        line = "%-*s  %5d  %7.1fms" % (width, label, len(batch), t_pure * 1e3)
        if _fast is not None:
            t_fast = time_batch(_fast.extend_colors, batch, args.repeat)
            line += "  %7.1fms  %6.1fx" % (t_fast * 1e3, t_pure / t_fast)
            for call in batch:
                if pure.extend_colors(*call) != _fast.extend_colors(*call):
                    agree = False
        print(line)

    if _fast is not None:
        print()
        print("backends agree on every instance: %s" % ("yes" if agree else "NO"))
        return 0 if agree else 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
