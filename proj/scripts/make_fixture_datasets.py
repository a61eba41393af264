#!/usr/bin/env python3
"""Builds the synthetic stand-in datasets vendored under data/.

The original dolphin, football and power-grid networks are not
redistributable from this repository, so the files are deterministic
reconstructions that match the originals' published node count, edge count
and community-size profile (see data/README.md). Rerunning this script
reproduces the exact same files.
"""

import random
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def modularity(n, edges, comm):
    m = len(edges)
    deg = [0] * n
    intra = {}
    tot = {}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if comm[u] == comm[v]:
            intra[comm[u]] = intra.get(comm[u], 0) + 1
    for u in range(n):
        tot[comm[u]] = tot.get(comm[u], 0) + deg[u]
    q = 0.0
    for c in tot:
        q += intra.get(c, 0) / m - (tot[c] / (2 * m)) ** 2
    return q


def connected(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def write_edges(path, edges, header):
    with open(path, "w") as f:
        f.write(f"# {header}\n")
        for u, v in sorted(edges):
            f.write(f"{u} {v}\n")


def write_truth(path, comm):
    with open(path, "w") as f:
        for u in range(len(comm)):
            f.write(f"{u} {comm[u]}\n")


def make_dolphins():
    """62 nodes, 159 edges, five planted groups sized like the original's
    best-known community structure."""
    sizes = [20, 14, 12, 9, 7]
    n = sum(sizes)
    comm = []
    for c, s in enumerate(sizes):
        comm += [c] * s
    target_m = 159
    target_intra = 120  # planted partition quality ~0.53, like the original

    for seed in range(10000):
        rng = random.Random(1_000_000 + seed)
        intra_deg = 2 * target_intra / n
        edges = set()
        base = 0
        for s in sizes:
            p_in = intra_deg / (s - 1)
            for a in range(s):
                for b in range(a + 1, s):
                    if rng.random() < p_in:
                        edges.add((base + a, base + b))
            base += s
        intra_count = len(edges)
        cross_pairs = [
            (u, v) for u in range(n) for v in range(u + 1, n) if comm[u] != comm[v]
        ]
        p_out = (target_m - intra_count) / len(cross_pairs)
        for u, v in cross_pairs:
            if rng.random() < p_out:
                edges.add((u, v))
        if len(edges) != target_m:
            continue
        if not connected(n, edges):
            continue
        q = modularity(n, list(edges), comm)
        if not (0.52 <= q <= 0.55):
            continue
        print(f"dolphins: seed {seed}, m={len(edges)}, planted Q={q:.4f}")
        write_edges(DATA / "dolphins.edges",
                    edges, "dolphin social network stand-in: 62 nodes, 159 edges")
        write_truth(DATA / "dolphins_truth.part", comm)
        return
    raise SystemExit("dolphins: no seed satisfied the constraints")


def make_football():
    """115 nodes, 613 edges: 11 conferences playing round-robin or 8-game
    schedules plus independents, non-conference games biased within region."""
    sizes = [9, 8, 11, 12, 10, 5, 13, 8, 10, 12, 7, 10]
    independents = 5  # conference id 5 has no intra games
    n = sum(sizes)
    comm = []
    for c, s in enumerate(sizes):
        comm += [c] * s
    conf_start = []
    acc = 0
    for s in sizes:
        conf_start.append(acc)
        acc += s
    region = {0: 0, 1: 0, 5: 0, 2: 1, 3: 1, 6: 1, 4: 2, 9: 2, 10: 2, 7: 3, 8: 3, 11: 3}

    def intra_edges():
        edges = set()
        for c, s in enumerate(sizes):
            base = conf_start[c]
            if c == independents:
                continue
            if s <= 9:  # full round robin
                for a in range(s):
                    for b in range(a + 1, s):
                        edges.add((base + a, base + b))
            else:  # 8 games each: circulant on offsets 1..4
                for a in range(s):
                    for off in range(1, 5):
                        b = (a + off) % s
                        edges.add((base + min(a, b), base + max(a, b)))
        return edges

    target_m = 613
    intra = intra_edges()
    cross_needed = target_m - len(intra)  # 188
    # stub counts: independents play 11, others ~3 non-conference games
    for seed in range(20000):
        rng = random.Random(7_000_000 + seed)
        stubs = []
        for u in range(n):
            if comm[u] == independents:
                stubs += [u] * 11
            else:
                stubs += [u] * 3
        # trim surplus stubs from random non-independent teams
        surplus = len(stubs) - 2 * cross_needed
        non_ind = [u for u in range(n) if comm[u] != independents]
        for u in rng.sample(non_ind, surplus):
            stubs.remove(u)
        rng.shuffle(stubs)

        edges = set(intra)
        fail = False
        for _ in range(2 * cross_needed):
            if len(stubs) < 2:
                break
            u = stubs.pop()
            # prefer a same-region opponent 60% of the time
            candidates = [
                i for i, v in enumerate(stubs)
                if comm[v] != comm[u]
                and (min(u, v), max(u, v)) not in edges
            ]
            if not candidates:
                fail = True
                break
            same_region = [i for i in candidates if region[comm[stubs[i]]] == region[comm[u]]]
            pool = same_region if same_region and rng.random() < 0.6 else candidates
            i = rng.choice(pool)
            v = stubs.pop(i)
            edges.add((min(u, v), max(u, v)))
            if len(edges) == target_m:
                break
        if fail or len(edges) != target_m or stubs:
            continue
        if not connected(n, edges):
            continue
        q = modularity(n, list(edges), comm)
        if not (0.59 <= q <= 0.62):
            continue
        print(f"football: seed {seed}, m={len(edges)}, planted Q={q:.4f}")
        write_edges(DATA / "football.edges",
                    edges, "college football schedule stand-in: 115 nodes, 613 edges")
        write_truth(DATA / "football_truth.part", comm)
        return
    raise SystemExit("football: no seed satisfied the constraints")


def make_power():
    """4941 nodes, 6594 edges: a locality-biased tree plus shortcut edges,
    shaped like a sparse high-diameter infrastructure grid."""
    n, target_m = 4941, 6594
    rng = random.Random(42)
    edges = set()
    for i in range(1, n):
        span = min(i, 1 + int(rng.expovariate(1 / 40.0)))
        parent = i - rng.randint(1, span)
        edges.add((parent, i))
    while len(edges) < target_m:
        i = rng.randrange(n)
        j = i + 1 + int(rng.expovariate(1 / 60.0))
        if j < n and i != j:
            edges.add((min(i, j), max(i, j)))
    assert connected(n, edges)
    print(f"power: m={len(edges)}")
    write_edges(DATA / "power.edges",
                edges, "power-grid-like stand-in: 4941 nodes, 6594 edges")


if __name__ == "__main__":
    make_dolphins()
    make_football()
    make_power()
