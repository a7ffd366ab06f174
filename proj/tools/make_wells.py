#!/usr/bin/env python3
"""Rebuild data/wells.g6.

The Wells graph is the antipodal double cover of the Clebsch graph.  Take the
Clebsch graph as the Cayley graph of F_2^4 with generators 1, 2, 4, 8, 15, pick
a sign (0/1) for every edge so that each 4-cycle has even total sign (a linear
system over GF(2)), and lift: vertex v becomes v and v+16, edge uv with sign s
becomes {u+16t, v+16(t+s)} for t = 0, 1.  The result is checked with networkx
before it is written.

Requires networkx and numpy; run from the repository root.
"""
import networkx as nx
import numpy as np

V = list(range(16))
GENS = [1, 2, 4, 8, 15]
E = sorted({(min(v, v ^ g), max(v, v ^ g)) for v in V for g in GENS})
assert len(E) == 40
eid = {e: i for i, e in enumerate(E)}
G = nx.Graph(E)


def key(x, y):
    return eid[(min(x, y), max(x, y))]


cycles = set()
for a in V:
    for b in G[a]:
        for c in G[b]:
            if c == a:
                continue
            for d in G[c]:
                if d in (a, b) or a not in G[d]:
                    continue
                cycles.add(frozenset(key(x, y) for x, y in [(a, b), (b, c), (c, d), (d, a)]))

# Each 4-cycle must lift to two 4-cycles, so its sign sum is 0; ask for 1 instead
# to force every 4-cycle to lift to an 8-cycle (which is what gives c_2 = 1).
M = np.zeros((len(cycles), 41), dtype=np.uint8)
for r, cyc in enumerate(cycles):
    for i in cyc:
        M[r, i] = 1
    M[r, 40] = 1

pivots, r = [], 0
for c in range(40):
    p = next((i for i in range(r, len(M)) if M[i, c]), None)
    if p is None:
        continue
    M[[r, p]] = M[[p, r]]
    for i in range(len(M)):
        if i != r and M[i, c]:
            M[i] ^= M[r]
    pivots.append(c)
    r += 1
assert not any(M[i, 40] for i in range(r, len(M))), "sign system is inconsistent"

sign = [0] * 40
for i, c in enumerate(pivots):
    sign[c] = int(M[i, 40])

W = nx.Graph()
for (u, v), i in eid.items():
    for t in (0, 1):
        W.add_edge(u + 16 * t, v + 16 * ((t + sign[i]) % 2))
W = nx.convert_node_labels_to_integers(W, ordering="sorted")

assert W.number_of_nodes() == 32 and W.number_of_edges() == 80
assert nx.is_distance_regular(W)
assert nx.intersection_array(W) == ([5, 4, 1, 1], [1, 1, 4, 5])

g6 = nx.to_graph6_bytes(W, header=False).decode().strip()
with open("data/wells.g6", "w") as f:
    f.write(g6 + "\n")
print(g6)
