"""Time the compiled search kernel against the pure-Python one.

    python3 benchmarks/bench_kernel.py [--cells 16] [--repeat 3]

Each workload is run through both backends on identical inputs; results are
checked for agreement before timings are reported.
"""

import argparse
import time

from quasitruth import kernel
from quasitruth.expansion import UNLIMITED, SearchBudget, count_a_normal, find_a_normal
from quasitruth.formula import Signature
from quasitruth.parser import parse_formula
from quasitruth.structures import KnowledgeBase, PartialRelation, PartialStructure


def unary_kb(cells, primary):
    domain = tuple(f"e{i}" for i in range(cells))
    names = tuple(f"c{i}" for i in range(cells))
    sig = Signature({"P": 1}, names)
    rel = PartialRelation(1, frozenset(), frozenset(), frozenset((e,) for e in domain))
    structure = PartialStructure(domain, {"P": rel}, dict(zip(names, domain)))
    sentences = tuple(parse_formula(t, sig).formula for t in primary)
    return KnowledgeBase(sig, structure, sentences, (), tuple(primary))


WORKLOADS = {
    # nothing can be pruned before the last cell: a full walk of the tree
    "count, late check": (lambda n: unary_kb(n, ["exists x. P(x)"]), "count"),
    # the unique model is the last leaf in canonical order
    "find, last witness": (lambda n: unary_kb(n, ["forall x. P(x)"]), "find"),
    # one small rule per neighbouring pair, each checked as soon as it can be
    "count, pairwise rules": (
        lambda n: unary_kb(n, [f"P(c{i}) | P(c{i + 1})" for i in range(n - 1)]), "count"),
}


def run(kb, mode, backend):
    budget = SearchBudget(UNLIMITED)
    start = time.perf_counter()
    if mode == "count":
        result = count_a_normal(kb, budget, backend=backend)
    else:
        result = find_a_normal(kb, None, budget, backend=backend)
    return time.perf_counter() - start, result, budget.used


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cells", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = sorted(kernel.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not available; timing the Python backend only")
    print(f"{'workload':<24}{'backend':<9}{'best s':>10}{'nodes':>10}  result")
    for name, (build, mode) in WORKLOADS.items():
        kb = build(args.cells)
        seen = {}
        for backend in backends:
            timings = []
            for _ in range(args.repeat):
                elapsed, result, used = run(kb, mode, backend)
                timings.append(elapsed)
            seen[backend] = (result, used)
            shown = result if mode == "count" else type(result).__name__
            print(f"{name:<24}{backend:<9}{min(timings):>10.4f}{used:>10}  {shown}")
        assert len(set(map(repr, seen.values()))) == 1, f"backends disagree on {name}"


if __name__ == "__main__":
    main()
