#!/usr/bin/env python3
"""Compare the compiled checking kernel against the numpy fallback.

Two workload shapes dominate real use: one huge enumeration (millions of
assignments for a single identity) and large batches of tiny exhaustive
checks (where per-call overhead matters).

Usage: python benchmarks/bench_kernels.py
"""

import itertools
import time

import numpy as np

from brandtkit import _check_py
from brandtkit.constructions import brandt, cyclic_group, group_product, \
    symmetric_group_3
from brandtkit.words import Identity, Word, ln_identity

try:
    from brandtkit import _check_c
except ImportError:
    _check_c = None


def kernel_args(S, ident):
    variables = sorted(ident.variables())
    position = {v: i for i, v in enumerate(variables)}
    lhs = np.array([position[s] for s in ident.lhs.symbols], dtype=np.int64)
    rhs = np.array([position[s] for s in ident.rhs.symbols], dtype=np.int64)
    k = len(variables)
    return (S.flat, S.size, lhs, rhs, k, 0, S.size ** k)


def big_enumeration():
    G = group_product(cyclic_group(2), symmetric_group_3())
    S, _ = brandt(G, 2)
    args = kernel_args(S, ln_identity(3))  # 49^4 assignments, 14-symbol sides
    return [args]


def small_batch():
    S, _ = brandt(symmetric_group_3(), 2)
    words = []
    for length in range(1, 5):
        words.extend(Word(t) for t in itertools.product(("x", "y"), repeat=length))
    return [kernel_args(S, Identity(lhs, rhs))
            for lhs in words for rhs in words]


def run(kernel, batch):
    t0 = time.perf_counter()
    holds = sum(kernel.check_words_equal(*args) < 0 for args in batch)
    return time.perf_counter() - t0, holds


def main():
    workloads = [
        ("one 5.76M-assignment check (L3 over a 49-element semigroup)",
         big_enumeration()),
        ("900 small exhaustive checks (25-element semigroup)", small_batch()),
    ]
    for name, batch in workloads:
        py_time, py_holds = run(_check_py, batch)
        line = f"{name}\n  numpy fallback: {py_time:8.3f}s"
        if _check_c is not None:
            c_time, c_holds = run(_check_c, batch)
            assert c_holds == py_holds, "kernels disagree"
            line += f"\n  compiled:       {c_time:8.3f}s   ({py_time / c_time:.1f}x faster)"
        else:
            line += "\n  compiled:       not built"
        print(line)


if __name__ == "__main__":
    main()
