"""Time the compiled polynomial kernels against the pure-Python fallback.

Run: python benchmarks/bench_kernels.py [--terms 40] [--repeat 5]
"""

import argparse
import random
import timeit

from cyclohecke._kernels import _pykernels

try:
    from cyclohecke._kernels import _ckernels
except ImportError:
    _ckernels = None

NFIELDS = 3


def random_poly(rng, terms):
    out = {}
    while len(out) < terms:
        exps = [rng.randint(-6, 6) for _ in range(NFIELDS)]
        key = 0
        for e in exps:
            key = key * _pykernels.FIELD + e
        out[key] = rng.randint(-9, 9) or 1
    return out


def cases(rng, terms):
    a, b, c = (random_poly(rng, terms) for _ in range(3))
    prod = _pykernels.mul(a, b)
    return {
        "mul": lambda k: k.mul(a, b),
        "add": lambda k: k.add(prod, c),
        "divexact": lambda k: k.divexact(prod, b, NFIELDS),
        "divexact-miss": lambda k: k.divexact(_pykernels.add(prod, c), b, NFIELDS),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args(argv)
    rng = random.Random(1)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python fallback only")
    print(f"{'kernel':<14}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for name, fn in cases(rng, args.terms).items():
        times = []
        for _, mod in backends:
            t = min(timeit.repeat(lambda: fn(mod), number=args.number, repeat=args.repeat))
            times.append(t / args.number * 1e3)
        speed = f"{times[0] / times[1]:9.2f}x" if len(times) == 2 else ""
        print(f"{name:<14}" + "".join(f"{t:10.3f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
