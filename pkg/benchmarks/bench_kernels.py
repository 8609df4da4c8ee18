"""Compare the numba and pure-python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Numba compile time is paid in a warm-up call and excluded from the timings.
"""

from __future__ import annotations

import argparse
import timeit

from turan._kernels import numba_kernels, python_kernels
from turan.constructions import extremal_construction
from turan.graph import HostSpec, complete_multipartite
from turan.oracle import extremal_number


def _cases():
    dense = complete_multipartite((5, 5, 5, 5, 5))
    near = extremal_construction(HostSpec((5, 5, 5, 5, 5), 5)).graph
    tight = extremal_construction(HostSpec((4, 4, 4, 4), 4)).graph
    return [
        ("count K5 in K_{5,5,5,5,5}", lambda kn: kn.count_cliques(dense.adj, 5)),
        ("list K5 in K_{5,5,5,5,5}", lambda kn: kn.list_cliques(dense.adj, 5)),
        ("no 5K5 in extremal (5^5, k=5)", _packing_case(near, 5)),
        ("no 4K4 in extremal (4^4, k=4)", _packing_case(tight, 4)),
        ("oracle (2,3,3) k=2", _oracle_case(HostSpec((2, 3, 3), 2))),
        ("oracle (2,2,2,2) r=3 k=1", _oracle_case(HostSpec((2, 2, 2, 2), 1, 3))),
    ]


def _packing_case(g, k):
    def run(kn):
        cliques = kn.list_cliques(g.adj, g.n_parts)
        return kn.find_packing(cliques, g.part_of, g.n_parts, k, True)

    return run


def _oracle_case(spec):
    return lambda kn: extremal_number(spec, backend=kn.name, seed=False).max_edges


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = [python_kernels] + ([numba_kernels] if numba_kernels is not None else [])
    print(f"{'case':34} " + " ".join(f"{kn.name + ' ms':>12}" for kn in backends) + f" {'speedup':>9}")
    for label, fn in _cases():
        times = []
        for kn in backends:
            fn(kn)  # warm-up (and numba compilation)
            best = min(timeit.repeat(lambda: fn(kn), number=1, repeat=args.repeat))
            times.append(best * 1e3)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:34} " + " ".join(f"{t:12.3f}" for t in times) + f" {speed:>9}")


if __name__ == "__main__":
    main()
