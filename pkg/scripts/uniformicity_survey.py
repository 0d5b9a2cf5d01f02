#!/usr/bin/env python3
"""Survey the uniformicity of small catalog graphs (k searched up to 3).

Also reports, for each graph, whether deleting some vertex preserves the
value exactly: deletion can never increase it, and the survey shows equality
does occur.
"""

import sys

from wqograph.graphs import build, delete_vertices
from wqograph.uniform import uniformicity

SPECS = [
    "K5",
    "5P1",
    "2K2",
    "P3",
    "P4",
    "P5",
    "C4",
    "C5",
    "C6",
    "K1,3",
    "K2,3",
    "2P1+P2",
    "co(2P1+P2)",
    "P2+P3",
    "S1,1,2",
]


def main() -> int:
    print(f"{'graph':<12} {'uniformicity':<13} preserved-by-some-deletion")
    for spec in SPECS:
        g = build(spec)
        res = uniformicity(g, 3)
        if res is None:
            print(f"{spec:<12} {'> 3':<13} -")
            continue
        k, _ = res
        preserved = []
        for v in range(g.n):
            sub = uniformicity(delete_vertices(g, [v]), 3)
            if sub is not None and sub[0] == k:
                preserved.append(v)
        print(f"{spec:<12} {k:<13} {preserved if preserved else 'no'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
