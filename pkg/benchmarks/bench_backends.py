"""Compare the jitted and pure-numpy kernel paths.

Times the two hot kernels on representative inputs: canonical-form
minimization on a 480-flag hypermap, and the spherical-triple scan over all
fixed-point-free involution triples on 8 points. Run directly:

    python3 benchmarks/bench_backends.py

The dispatch honors HYPERMAPS_BACKEND, but this script reaches past it and
times both implementations in one process (after a jit warmup), so the env
var does not matter here.
"""

from __future__ import annotations

import time

import numpy as np

from hypermaps import _kernels, walsh
from hypermaps.catalog import build_named
from hypermaps.catalog.oracle import fixed_point_free_involutions


def _time(fn, *args, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    if not _kernels.HAS_NUMBA:
        print("numba not importable; only the numpy path is available")

    big = walsh(walsh(build_named("pin(dual01(D))")))  # 960 flags
    hs = big.generator_matrix()
    invs = fixed_point_free_involutions(8)
    pair_data = _kernels._pair_orbit_data(invs)

    rows = []
    rows.append(("canonical_code, 960 flags", "numpy",
                 _time(_kernels._canonical_code_numpy, hs)))
    if _kernels.HAS_NUMBA:
        _kernels._canonical_code_numba(hs)  # warm the jit
        rows.append(("canonical_code, 960 flags", "numba",
                     _time(_kernels._canonical_code_numba, hs)))

    rows.append(("spherical_triples, n=8", "numpy",
                 _time(_kernels._spherical_triples_numpy, invs, repeats=1)))
    if _kernels.HAS_NUMBA:
        _kernels._spherical_triples_numba(invs, *pair_data)  # warm the jit
        rows.append(("spherical_triples, n=8", "numba",
                     _time(lambda: _kernels._spherical_triples_numba(invs, *pair_data),
                           repeats=1)))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  backend  best (s)")
    baseline: dict[str, float] = {}
    for name, backend, secs in rows:
        speedup = ""
        if backend == "numpy":
            baseline[name] = secs
        elif name in baseline:
            speedup = f"  ({baseline[name] / secs:.1f}x)"
        print(f"{name:<{width}}  {backend:<7}  {secs:8.4f}{speedup}")


if __name__ == "__main__":
    main()
