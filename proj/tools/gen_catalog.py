#!/usr/bin/env python3
"""Regenerate data/named/{catalog.g6,index.txt} for graphs without a C++ constructor.

Each construction is checked against a known invariant before it is written.
Needs networkx.
"""
import itertools
import pathlib
import sys

import networkx as nx


def lcf(n, shifts, rep):
    return nx.LCF_graph(n, shifts, rep)


def gosset():
    pairs = list(itertools.combinations(range(8), 2))
    vs = [(c, p) for c in (0, 1) for p in pairs]
    g = nx.Graph()
    g.add_nodes_from(vs)
    for (c1, p1), (c2, p2) in itertools.combinations(vs, 2):
        k = len(set(p1) & set(p2))
        if (c1 == c2 and k == 1) or (c1 != c2 and k == 0):
            g.add_edge((c1, p1), (c2, p2))
    return g


def schlafli():
    # complement of the collinearity graph of the 27 lines on a cubic surface
    vs = [("a", i) for i in range(6)] + [("b", i) for i in range(6)]
    vs += [("c", p) for p in itertools.combinations(range(6), 2)]

    def meet(x, y):
        if {x[0], y[0]} == {"a", "b"}:
            return x[1] != y[1]
        if x[0] in "ab" and y[0] == "c":
            return x[1] in y[1]
        if y[0] in "ab" and x[0] == "c":
            return y[1] in x[1]
        if x[0] == "c" and y[0] == "c":
            return not set(x[1]) & set(y[1])
        return False

    g = nx.Graph()
    g.add_nodes_from(vs)
    g.add_edges_from((x, y) for x, y in itertools.combinations(vs, 2) if not meet(x, y))
    return g


def clebsch():
    # folded 5-cube
    g = nx.Graph()
    for v in range(16):
        for b in range(4):
            g.add_edge(v, v ^ (1 << b))
        g.add_edge(v, v ^ 15)
    return g


def shrikhande():
    g = nx.Graph()
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in [(1, 0), (0, 1), (1, 1)]:
            g.add_edge((a, b), ((a + da) % 4, (b + db) % 4))
    return g


def moser():
    return nx.Graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)])


def flower(k=5):
    g = nx.Graph()
    for i in range(k):
        for x in "bcd":
            g.add_edge(("a", i), (x, i))
        g.add_edge(("b", i), ("b", (i + 1) % k))
    cyc = [("c", i) for i in range(k)] + [("d", i) for i in range(k)]
    for i in range(2 * k):
        g.add_edge(cyc[i], cyc[(i + 1) % (2 * k)])
    return g


def tietze():
    g = nx.petersen_graph()
    nb = list(g[0])
    g.remove_node(0)
    for i, v in enumerate(nb):
        g.add_edge(("t", i), v)
    g.add_edges_from([(("t", 0), ("t", 1)), (("t", 1), ("t", 2)), (("t", 0), ("t", 2))])
    return g


def hexads():
    # S(3,6,22) from the extended binary Golay code: octads through two fixed points
    gen = sum(b << i for i, b in enumerate([1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]))
    rows = [gen << i for i in range(12)]
    octads = []
    for m in range(1 << 12):
        w = 0
        for i in range(12):
            if m >> i & 1:
                w ^= rows[i]
        w |= (bin(w).count("1") & 1) << 23
        if bin(w).count("1") == 8:
            octads.append(w)
    assert len(octads) == 759
    blocks = [frozenset(i for i in range(22) if w >> i & 1) for w in octads if w >> 22 & 1 and w >> 23 & 1]
    assert len(blocks) == 77
    return blocks


def disjointness(blocks):
    g = nx.Graph()
    g.add_nodes_from(blocks)
    g.add_edges_from((a, b) for a, b in itertools.combinations(blocks, 2) if not a & b)
    return g


def m22():
    return disjointness(hexads())


def sims_gewirtz():
    return disjointness([b for b in hexads() if 0 not in b])


def higman_sims():
    blocks = hexads()
    g = disjointness(blocks)
    for b in blocks:
        for p in b:
            g.add_edge(b, ("p", p))
    for p in range(22):
        g.add_edge("inf", ("p", p))
    return g


def sylvester():
    g = nx.hoffman_singleton_graph()
    u, v = next(iter(g.edges()))
    g.remove_nodes_from(set(g[u]) | set(g[v]))
    return g


def dejter():
    # 7-cube minus the Hamming code
    def codeword(x):
        s = 0
        for i in range(7):
            if x >> i & 1:
                s ^= i + 1
        return s == 0

    g = nx.hypercube_graph(7)
    g = nx.relabel_nodes(g, {v: sum(b << i for i, b in enumerate(v)) for v in g})
    g.remove_nodes_from([x for x in range(128) if codeword(x)])
    return g


def truncated_icosahedron():
    ico = nx.icosahedral_graph()
    g = nx.Graph()
    for u, v in ico.edges():
        g.add_edge((u, v), (v, u))
    for u in ico:
        for v, w in itertools.combinations(ico[u], 2):
            if ico.has_edge(v, w):
                g.add_edge((u, v), (u, w))
    return g


def brouwer_haemers():
    # GF(81) = GF(3)[x]/(x^4 + x + 2); x ~ y iff x - y is a nonzero fourth power
    def mul(a, b):
        prod = [0] * 7
        for i in range(4):
            for j in range(4):
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % 3
        for k in range(6, 3, -1):
            c = prod[k]
            prod[k] = 0
            prod[k - 3] = (prod[k - 3] + 2 * c) % 3  # x^4 = -x - 2 = 2x + 1
            prod[k - 4] = (prod[k - 4] + c) % 3
        return tuple(prod[:4])

    elems = list(itertools.product(range(3), repeat=4))
    fourth = set()
    for a in elems:
        if any(a):
            a2 = mul(a, a)
            fourth.add(mul(a2, a2))
    assert len(fourth) == 20
    g = nx.Graph()
    g.add_nodes_from(elems)
    for a, b in itertools.combinations(elems, 2):
        if tuple((x - y) % 3 for x, y in zip(a, b)) in fourth:
            g.add_edge(a, b)
    return g


def srg(n, k, lam, mu):
    def check(g):
        if g.number_of_nodes() != n or any(d != k for _, d in g.degree()):
            return False
        for u, v in itertools.combinations(g, 2):
            c = len(set(g[u]) & set(g[v]))
            if c != (lam if g.has_edge(u, v) else mu):
                return False
        return True

    return check


def cubic(n, girth):
    return lambda g: g.number_of_nodes() == n and all(d == 3 for _, d in g.degree()) and nx.girth(g) == girth


def order_degree(n, k):
    return lambda g: g.number_of_nodes() == n and all(d == k for _, d in g.degree())


GRAPHS = [
    ("gosset", gosset, lambda g: order_degree(56, 27)(g) and nx.diameter(g) == 3),
    ("schlafli", schlafli, srg(27, 16, 10, 8)),
    ("clebsch", clebsch, srg(16, 5, 0, 2)),
    ("shrikhande", shrikhande, srg(16, 6, 2, 2)),
    ("grotzsch", lambda: nx.mycielski_graph(4), lambda g: g.number_of_nodes() == 11 and g.number_of_edges() == 20),
    ("moser_spindle", moser, lambda g: g.number_of_nodes() == 7 and g.number_of_edges() == 11),
    ("flower_snark", flower, cubic(20, 5)),
    ("tietze", tietze, lambda g: g.number_of_nodes() == 12 and all(d == 3 for _, d in g.degree())),
    ("krackhardt_kite", nx.krackhardt_kite_graph, lambda g: g.number_of_nodes() == 10),
    ("chvatal", nx.chvatal_graph, order_degree(12, 4)),
    ("hoffman_singleton", nx.hoffman_singleton_graph, srg(50, 7, 0, 1)),
    ("m22", m22, srg(77, 16, 0, 4)),
    ("sims_gewirtz", sims_gewirtz, srg(56, 10, 0, 2)),
    ("higman_sims", higman_sims, srg(100, 22, 0, 6)),
    ("sylvester", sylvester, order_degree(36, 5)),
    ("dejter", dejter, order_degree(112, 6)),
    ("bucky_ball", truncated_icosahedron, cubic(60, 5)),
    ("brouwer_haemers", brouwer_haemers, srg(81, 20, 1, 6)),
    ("harries", lambda: lcf(70, [-29, -19, -13, 13, 21, -27, 27, 33, -13, 13, 19, -21, -33, 29], 5), cubic(70, 10)),
    ("tutte_12_cage",
     lambda: lcf(126, [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17], 7),
     cubic(126, 12)),
]


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "named")
    out.mkdir(parents=True, exist_ok=True)
    lines, index = [], []
    for name, build, check in GRAPHS:
        g = nx.convert_node_labels_to_integers(build())
        if not nx.is_connected(g) or not check(g):
            sys.exit(f"{name}: construction failed its check")
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
        index.append(f"{name} {len(lines)}")
    (out / "catalog.g6").write_text("\n".join(lines) + "\n")
    (out / "index.txt").write_text("# name line-in-catalog.g6\n" + "\n".join(index) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main()
