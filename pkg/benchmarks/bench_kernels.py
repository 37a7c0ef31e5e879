"""Compare the compiled and pure-Python finite-group kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel on one group with both backends and checks that
the outputs agree.
"""

import argparse
import time

from rinfty import kernels
from rinfty.finite import encode, generate_group, identity_automorphism, preset_generators, _twist_pairs

CASES = [("sl2", 5), ("omega4", 3), ("sp4", 2)]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, p, repeat):
    gens = preset_generators(name, p)
    g = generate_group(gens, p)
    n = g.n
    codes = [encode(m, p) for m in gens]
    # acting by every element is the heavy path of the brute-force checks
    pairs = _twist_pairs(g, identity_automorphism(g), range(len(g)))
    rows = []
    for label, call in (
        ("closure", lambda k: k.closure(codes, n, p, 100_000)),
        ("action_perms", lambda k: k.action_perms(g.codes, g.index, pairs, n, p)),
    ):
        t_py, out_py = best_of(lambda: call(kernels.pure), repeat)
        t_c, out_c = best_of(lambda: call(kernels.compiled), repeat)
        same = sorted(map(tuple, out_py)) == sorted(map(tuple, out_c))
        rows.append((f"{name}(F_{p})", len(g), label, t_py, t_c, same))
    perms = kernels.pure.action_perms(g.codes, g.index, pairs, n, p)
    t_py, a = best_of(lambda: kernels.pure.orbit_labels(perms, len(g)), repeat)
    t_c, b = best_of(lambda: kernels.compiled.orbit_labels([list(q) for q in perms], len(g)), repeat)
    rows.append((f"{name}(F_{p})", len(g), "orbit_labels", t_py, t_c, list(a) == list(b)))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'group':<14}{'order':>7}  {'kernel':<14}{'python s':>10}{'cython s':>10}{'speedup':>9}  agree")
    for name, p in CASES:
        for grp, order, label, t_py, t_c, same in bench(name, p, args.repeat):
            print(f"{grp:<14}{order:>7}  {label:<14}{t_py:>10.4f}{t_c:>10.4f}{t_py / t_c:>8.1f}x  {same}")


if __name__ == "__main__":
    main()
