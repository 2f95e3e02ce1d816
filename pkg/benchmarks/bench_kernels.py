"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call both modules directly; the end-to-end timing runs a
verification in a subprocess per backend, since the backend is fixed at import.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from taftquiver import _pykernels
from taftquiver.scalars import _field

try:
    from taftquiver import _ckernels
except ImportError:
    _ckernels = None

E2E = (
    "import time; from taftquiver.catalog import spec_s3; from taftquiver.action import verify_action;"
    "s = spec_s3(); t = time.perf_counter(); verify_action(s, 8); print(time.perf_counter() - t)"
)


def _mulmod_args(L: int, rng: random.Random):
    f = _field(L)
    a = [rng.randint(-50, 50) for _ in range(f.phi)]
    b = [rng.randint(-50, 50) for _ in range(f.phi)]
    return a, b, f.fold


def _word(n: int, length: int, rng: random.Random) -> list[int]:
    return [rng.randrange(2 * n) for _ in range(length)]


def _time(fn, args_list, repeat: int) -> float:
    def body():
        for args in args_list:
            fn(*args)

    return min(timeit.repeat(body, number=1, repeat=repeat)) / len(args_list)


def _e2e(pure: bool) -> float:
    env = dict(os.environ, TAFTQUIVER_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    cases = [
        ("mulmod L=12", _pykernels.mulmod, [_mulmod_args(12, rng) for _ in range(2000)]),
        ("mulmod L=60", _pykernels.mulmod, [_mulmod_args(60, rng) for _ in range(500)]),
        ("rewrite n=3 len=12", _pykernels.rewrite_normal, [(_word(3, 12, rng), 3) for _ in range(2000)]),
        ("rewrite n=6 len=40", _pykernels.rewrite_normal, [(_word(6, 40, rng), 6) for _ in range(500)]),
    ]
    print(f"{'kernel':<22}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name, py_fn, data in cases:
        t_py = _time(py_fn, data, args.repeat) * 1e6
        if _ckernels is None:
            print(f"{name:<22}{t_py:>14.2f}{'n/a':>14}{'':>10}")
            continue
        c_fn = getattr(_ckernels, py_fn.__name__)
        assert all(list(c_fn(*a)) == list(py_fn(*a)) for a in data[:50])
        t_c = _time(c_fn, data, args.repeat) * 1e6
        print(f"{name:<22}{t_py:>14.2f}{t_c:>14.2f}{t_py / t_c:>9.1f}x")
    if _ckernels is not None:
        t_py, t_c = _e2e(True), _e2e(False)
        print(f"{'verify S3 at D=8':<22}{t_py * 1e3:>12.0f}ms{t_c * 1e3:>12.0f}ms{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
