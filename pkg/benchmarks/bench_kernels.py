"""Compare the compiled and pure-Python kernels, then time a full sweep under each.

    python benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import timeit

from mseqcorr import kernels
from mseqcorr.gf2poly import parse_poly
from mseqcorr.msequence import expand, mseq_trace


def best(fn, repeat=5, number=1):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled kernels unavailable; only the Python fallback is importable")
    g1, g2 = parse_poly("x^6+x+1"), parse_poly("x^7+x+1")
    a0, b0 = mseq_trace(g1), mseq_trace(g2)
    n = a0.period * b0.period
    a, b = expand(a0, n).bits, expand(b0, n).bits

    cases = {
        "run_tables (N=8001)": lambda k: k.run_tables(a, b, 13),
        "census t=8 (N=8001)": lambda k: k.census(a, 8),
        "max_zero_run (N=8001)": lambda k: k.max_zero_run(a),
        "v_sign_sum nbits=14": lambda k: k.v_sign_sum(14, g2.mask),
        "u_sign_sum nbits=14": lambda k: k.u_sign_sum(14, g1.mask, g2.mask),
    }
    print(f"{'kernel':<26}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, call in cases.items():
        times = {name: best(lambda k=k: call(k)) for name, k in backends.items()}
        row = f"{label:<26}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values())
        if len(times) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)

    print("\nfull verify sweep, n1=6 n2=7 (108 pairs):")
    for flag, name in (("0", "default"), ("1", "python")):
        env = dict(os.environ, MSEQCORR_PURE_PYTHON=flag)
        code = "import time; from mseqcorr.verify import run_sweep; t=time.perf_counter(); run_sweep(6, 7); print(time.perf_counter()-t)"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print(f"  {name:<8} {float(out.stdout):.2f}s")


if __name__ == "__main__":
    main()
