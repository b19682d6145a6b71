#!/usr/bin/env python3
"""Regenerate tests/fixtures/cubic: every cubic graph on at most 10 vertices,
one file per isomorphism class (connected and disconnected).

Needs networkx and pynauty."""
import pathlib
import sys

import networkx as nx
import pynauty


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def cubic_graphs(n):
    # Exhaustive backtracking: always extend the lowest vertex still short of
    # degree 3. Vertex 0 adjacent to 1, 2, 3 loses no isomorphism class.
    found = {}
    deg = [0] * n
    edges = []

    def rec(v):
        while v < n and deg[v] == 3:
            v += 1
        if v == n:
            cert = certificate(n, edges)
            if cert not in found:
                found[cert] = nx.Graph(edges)
            return
        for u in range(v + 1, n):
            if deg[u] < 3 and (v, u) not in edges:
                edges.append((v, u))
                deg[v] += 1
                deg[u] += 1
                rec(v)
                deg[v] -= 1
                deg[u] -= 1
                edges.pop()

    for u in (1, 2, 3):
        edges.append((0, u))
        deg[0] += 1
        deg[u] += 1
    rec(1)
    return list(found.values())


def main(out):
    out = pathlib.Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for n in (4, 6, 8, 10):
        graphs = cubic_graphs(n)
        graphs.sort(key=lambda g: (nx.number_connected_components(g), sorted(g.edges())))
        for idx, g in enumerate(graphs):
            comps = nx.number_connected_components(g)
            name = f"cubic{n:02d}_{idx:02d}.txt"
            with open(out / name, "w") as f:
                f.write(f"# cubic graph on {n} vertices, {comps} component(s)\n")
                f.write(f"{n} {g.number_of_edges()}\n")
                for u, v in sorted(g.edges()):
                    f.write(f"{u} {v}\n")
        print(n, len(graphs), file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/cubic")
