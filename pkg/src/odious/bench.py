"""Throughput comparison between the compiled kernels and the pure-Python fallback.

Run with `python -m odious.bench`. Reports best-of-three wall times for each
kernel on both implementations, plus the speedup when both are available.
"""

import argparse
import time

from . import _kernels_py


def _load_impls():
    impls = []
    try:
        from . import _kernels

        impls.append(("compiled", _kernels))
    except ImportError:
        pass
    impls.append(("pure-python", _kernels_py))
    return impls


def _time(fn, repeats=3):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best


def _cases(letters, terms, scalars):
    return (
        (f"prefix_letters(2, {letters})", lambda m: m.prefix_letters(2, letters)),
        (f"prefix_letters(6, {letters})", lambda m: m.prefix_letters(6, letters)),
        (f"term_range(1, 2, 0, {terms})", lambda m: m.term_range(1, 2, 0, terms)),
        (
            f"t(n, 2) for n < {scalars}",
            lambda m: [m.t(n, 2) for n in range(scalars)],
        ),
    )


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--letters", type=int, default=2_000_000)
    parser.add_argument("--terms", type=int, default=500_000)
    parser.add_argument("--scalars", type=int, default=200_000)
    args = parser.parse_args(argv)

    impls = _load_impls()
    names = [name for name, _ in impls]
    print(f"kernels: {', '.join(names)}")
    header = f"{'case':<34}" + "".join(f"{name:>14}" for name in names)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, call in _cases(args.letters, args.terms, args.scalars):
        times = [_time(lambda m=mod: call(m)) for _, mod in impls]
        row = f"{label:<34}" + "".join(f"{t:>13.4f}s" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
