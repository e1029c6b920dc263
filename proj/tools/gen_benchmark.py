#!/usr/bin/env python3
"""Generator for the bundled benchmark network data/coauthor_379.net.

Builds a connected unit-weight network of exactly 379 nodes and 914 edges:
two internally well-mixed sides of four dense sub-communities each, two
bridge edges between the sides, and ten tree-like peripheral branches. The
parameters below were chosen so that the normalized spectral gap lands near
3.0e-3, the second-eigenvector sweep cut is well balanced, and the branches
give degree-1 periphery nodes far from the maximum-degree node.

Deterministic: data/coauthor_379.net is the frozen output of
    python3 tools/gen_benchmark.py --out data/coauthor_379.net

Requires numpy + scipy (generation only; the library itself does not).
"""
import argparse

import numpy as np
import scipy.sparse.csgraph as csgraph

TARGET_N = 379
TARGET_M = 914
COMMS_PER_SIDE = 4
COMM_SIZE = 42
COUPLING = 12          # edges between each pair of same-side communities
BRIDGES = 2
WHISKERS_A = [7, 5, 4, 3, 3]
WHISKERS_B = [6, 5, 4, 3, 3]
RNG_SEED = 0


def build(seed=RNG_SEED):
    rng = np.random.default_rng(seed)
    edges = set()
    comm_nodes = []
    o = 0
    for _side in range(2):
        for _c in range(COMMS_PER_SIDE):
            nodes = list(range(o, o + COMM_SIZE))
            comm_nodes.append(nodes)
            for i in range(COMM_SIZE):
                a, b = nodes[i], nodes[(i + 1) % COMM_SIZE]
                edges.add((min(a, b), max(a, b)))
            o += COMM_SIZE
    na = COMMS_PER_SIDE * COMM_SIZE
    for side in range(2):
        base = side * COMMS_PER_SIDE
        for c1 in range(COMMS_PER_SIDE):
            for c2 in range(c1 + 1, COMMS_PER_SIDE):
                placed = 0
                while placed < COUPLING:
                    a = int(rng.choice(comm_nodes[base + c1]))
                    b = int(rng.choice(comm_nodes[base + c2]))
                    e = (min(a, b), max(a, b))
                    if e not in edges:
                        edges.add(e)
                        placed += 1
    placed = 0
    while placed < BRIDGES:
        a = int(rng.integers(0, na))
        b = int(rng.integers(na, 2 * na))
        e = (min(a, b), max(a, b))
        if e not in edges:
            edges.add(e)
            placed += 1
    n = 2 * na
    for specs, lo, hi in ((WHISKERS_A, 0, na), (WHISKERS_B, na, 2 * na)):
        for ln in specs:
            prev = int(rng.integers(lo, hi))
            for _ in range(ln):
                edges.add((min(prev, n), max(prev, n)))
                prev = n
                n += 1
    assert n == TARGET_N, n
    # random intra-community fill up to the target edge count
    tries = 0
    while len(edges) < TARGET_M and tries < 300000:
        c = int(rng.integers(0, len(comm_nodes)))
        a, b = rng.choice(comm_nodes[c], 2, replace=False)
        e = (min(a, b), max(a, b))
        tries += 1
        if e not in edges:
            edges.add(e)
    assert len(edges) == TARGET_M
    return sorted(edges), n


def spectral_gap(edges, n):
    A = np.zeros((n, n))
    for u, v in edges:
        A[u, v] = A[v, u] = 1.0
    d = A.sum(1)
    assert (d > 0).all()
    assert csgraph.connected_components(A)[0] == 1
    dh = np.sqrt(d)
    N = (np.diag(d) - A) / np.outer(dh, dh)
    lam = np.linalg.eigvalsh(N)
    return lam[1], lam[2]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/coauthor_379.net")
    args = ap.parse_args()
    edges, n = build()
    l2, l3 = spectral_gap(edges, n)
    print(f"n={n} m={len(edges)} lambda2={l2:.12f} lambda3={l3:.6f}")
    lines = [f"*Vertices {n}"]
    for i in range(1, n + 1):
        lines.append(f'{i} "a{i}"')
    lines.append("*Edges")
    for u, v in edges:
        lines.append(f"{u + 1} {v + 1}")
    with open(args.out, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote", args.out)


if __name__ == "__main__":
    main()
