"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from gstower.cyclo_class import maillet_matrix
from gstower.kernels import backends

PRIME = 2**31 - 1


def cases():
    rng = np.random.default_rng(1)
    exps = rng.integers(-1, 64, size=200_001).astype(np.int64)
    mat = np.asarray(maillet_matrix(199), dtype=np.int64)
    return {
        "power_table(3, 3^8, 4374)": lambda m: m.power_table(3, 3**8, 4374),
        "power_table(7, 2^31-1, 10^5)": lambda m: m.power_table(7, PRIME, 100_000),
        "bucket_sums(2*10^5, 64)": lambda m: m.bucket_sums(exps, 200_000, 64),
        "det_mod(Maillet 199)": lambda m: m.det_mod(mat, PRIME),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    mods = backends()
    for fn in cases().values():  # warm up, triggers numba compilation
        for m in mods.values():
            fn(m)
    names = list(mods)
    print(f"{'case':32s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, fn in cases().items():
        times = {n: min(timeit.repeat(lambda: fn(mods[n]), number=1, repeat=args.repeat)) for n in names}
        ratio = times["numpy"] / times["numba"] if "numba" in times else float("nan")
        print(f"{label:32s}" + "".join(f"{times[n] * 1e3:10.3f}ms" for n in names) + f"{ratio:9.1f}x")


if __name__ == "__main__":
    main()
