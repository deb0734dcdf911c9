"""Compare the compiled kernels with the pure-Python (numpy) fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--json out.json]

Each kernel is timed on identical inputs with both backends; the table
reports the best wall time per call and the speedup of the compiled path.
"""

from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from tensorspectra import _kernels_py
from tensorspectra.spectral import SolveConfig, candidate_size, planted_instance, solve_spectral3
from tensorspectra.tensor import as_array

try:
    from tensorspectra import _kernels as compiled
except ImportError:
    compiled = None


def _cases(rng):
    cases = []
    for side in (2, 4, 8, 16):
        A, B, C = (rng.normal(size=(side,) * 3) + 1j * rng.normal(size=(side,) * 3) for _ in range(3))
        cases.append((f"ternary_product side={side}", "ternary_product", (A, B, C)))
    for l in (2, 3):
        A, _ = planted_instance(l, rng)
        a = np.ascontiguousarray(as_array(A).real)
        x = rng.uniform(0, 1, size=candidate_size(l))
        cases.append((f"spectral_residual_vec l={l}", "spectral_residual_vec", (x, a, l)))
        cases.append((f"spectral_jacobian_fd l={l}", "spectral_jacobian_fd", (x, a, l, 1e-7)))
    return cases


def _best(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def _solve_time(repeat):
    # end-to-end solve of one planted instance with whichever backend is active
    A, _ = planted_instance(2, np.random.default_rng(0))
    return _best(lambda: solve_spectral3(A, SolveConfig(seed=0)), (), repeat)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--json", help="also write the rows to this file")
    args = parser.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for label, name, inputs in _cases(np.random.default_rng(2024)):
        t_py = _best(getattr(_kernels_py, name), inputs, args.repeat)
        t_c = _best(getattr(compiled, name), inputs, args.repeat)
        rows.append({"case": label, "python_s": t_py, "compiled_s": t_c, "speedup": t_py / t_c})
    width = max(len(r["case"]) for r in rows)
    print(f"{'case':<{width}}  {'python':>11}  {'compiled':>11}  {'speedup':>7}")
    for r in rows:
        print(f"{r['case']:<{width}}  {r['python_s'] * 1e6:>9.1f}us  {r['compiled_s'] * 1e6:>9.1f}us  {r['speedup']:>6.1f}x")
    print(f"planted l=2 solve (active backend): {_solve_time(args.repeat) * 1e3:.1f} ms")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
