"""Compare the compiled path-tracking kernel with the numpy fallback.

Run with ``python3 benchmarks/bench_tracking.py``.
"""
import argparse
import time

from ratsemi import poly
from ratsemi.monodromy import HAVE_COMPILED, Chain, fiber_components, monodromy_system

CASES = {
    "z^3-3z": lambda: [poly(0, -3, 0, 1)],
    "(z^2+1)^2 iterate and z^3+z": lambda: [Chain.iterate(poly(1, 0, 1), 2), poly(0, 1, 0, 1)],
    "(z^2+1)^4 iterate": lambda: [Chain.iterate(poly(1, 0, 1), 4)],
}


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    kernels = ["python"] + (["compiled"] if HAVE_COMPILED else [])
    if not HAVE_COMPILED:
        print("compiled kernel not built; timing the numpy fallback only")
    print(f"{'case':40s}" + "".join(f"{k:>12s}" for k in kernels) + f"{'speedup':>10s}")
    for name, make in CASES.items():
        times, perms = [], []
        for k in kernels:
            t, system = timed(lambda: monodromy_system(make(), kernel=k, mode="double"), args.repeat)
            times.append(t)
            perms.append([c.perms for c in system.coverings])
        assert all(p == perms[0] for p in perms), "kernels disagree"
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{name:40s}" + "".join(f"{t:11.3f}s" for t in times) + f"{speed:>10s}")
    A = Chain.iterate(poly(1, 0, 1), 2)
    B = Chain.iterate(poly(0, 1, 0, 1), 2)
    for k in kernels:
        t, comps = timed(lambda: fiber_components(A, B, kernel=k), 1)
        print(f"fiber_components 4x9 sheets [{k}]: {t:.3f}s, genera {[c.genus for c in comps]}")


if __name__ == "__main__":
    main()
