#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two workloads, matching the package's hot loops:

* coloring enumeration: all top assignments of a braid word over a
  medium-sized quandle, closure-filtered;
* coset enumeration: Coxeter groups of a few thousand elements and the
  finite enveloping group of a dihedral quandle.

Both backends must return identical results; timings are printed side by
side.  Run from the repository root:  python benchmarks/bench_kernels.py
"""

import sys
import time

from quandleforge._kernels import available_backends
from quandleforge.constructions import alexander_quandle, dihedral_quandle
from quandleforge.envgroup import enveloping_presentation

BACKENDS = available_backends()


def flat(q):
    return [v for row in q.table for v in row]


def to_columns(word):
    return tuple(2 * (g - 1) if g > 0 else 2 * (-g - 1) + 1 for g in word)


def coxeter(*ms):
    """Relators of the linear Coxeter group with Coxeter matrix entries ms
    between consecutive generators."""
    n = len(ms) + 1
    rels = [(2 * i, 2 * i) for i in range(n)]
    for i, m in enumerate(ms):
        rels.append((2 * i, 2 * (i + 1)) * m)
    for i in range(n):
        for j in range(i + 2, n):
            rels.append((2 * i, 2 * j) * 2)
    return n, rels


def bench(label, fn):
    times = {}
    results = {}
    for name, backend in sorted(BACKENDS.items()):
        t0 = time.perf_counter()
        results[name] = fn(backend)
        times[name] = time.perf_counter() - t0
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    cols = "  ".join(f"{name}: {t:8.3f}s" for name, t in sorted(times.items()))
    if "compiled" in times and "pure" in times and times["compiled"] > 0:
        cols += f"  speedup: {times['pure'] / times['compiled']:6.1f}x"
    print(f"{label:<44} {cols}  agree={agree}")
    if not agree:
        sys.exit(f"backend disagreement on {label}")


def main():
    print(f"backends available: {', '.join(sorted(BACKENDS))}\n")

    d13 = dihedral_quandle(13)
    a16 = alexander_quandle(16, 3)
    stevedore5 = [1, 1, 2, -1, -3, 2, -3, 4]   # 6_1 stabilized to 5 strands
    coloring_jobs = [
        ("colorings: dihedral(13), 4 strands", d13, 4,
         [1, 1, 2, -1, -3, 2, -3]),
        ("colorings: dihedral(13), 5 strands", d13, 5, stevedore5),
        ("colorings: alexander(16,3), 5 strands", a16, 5, stevedore5),
    ]
    for label, q, s, w in coloring_jobs:
        bench(label, lambda b, q=q, s=s, w=w:
              b.braid_closure_colorings(flat(q), q.n, s, w))

    coset_jobs = [("cosets: B4 Coxeter group (384)", coxeter(3, 3, 4)),
                  ("cosets: B5 Coxeter group (3840)", coxeter(3, 3, 3, 4)),
                  ("cosets: A6 Coxeter group (5040)", coxeter(3, 3, 3, 3, 3))]
    for label, (ng, rels) in coset_jobs:
        bench(label, lambda b, ng=ng, rels=rels:
              b.coset_enumeration(ng, rels, 10 ** 6))

    p = enveloping_presentation(dihedral_quandle(27), finite=True)
    rels = [to_columns(r) for r in p.relators]
    bench("cosets: enveloping group of dihedral(27)",
          lambda b: b.coset_enumeration(p.ngens, rels, 10 ** 6))


if __name__ == "__main__":
    main()
