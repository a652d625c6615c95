#!/usr/bin/env python3
"""Writes the curated instances in corpus/ as `pg 1` files.

Small instances come from straight-line drawings; the two large exercisers
are truncations of cubic-ish plane graphs (every vertex of degree d becomes a
d-face, every face of degree k becomes a 2k-face), taken with a 10-face as
the outer face.

usage: make_curated.py <corpus-dir>
"""

import math
import pathlib
import sys

import networkx as nx


def rotation_from_points(n, edges, pts):
    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = []
    for v in range(n):
        x0, y0 = pts[v]
        # clockwise: decreasing angle
        rot.append(sorted(nbrs[v], key=lambda w: -math.atan2(pts[w][1] - y0, pts[w][0] - x0)))
    return rot


def trace_face(rot, u, v):
    """Face walk starting with dart u->v; successor of (u,v) is (v,w), w just before u in rot[v]."""
    walk = []
    a, b = u, v
    while True:
        walk.append(a)
        r = rot[b]
        w = r[(r.index(a) - 1) % len(r)]
        a, b = b, w
        if (a, b) == (u, v):
            return walk


def write_pg(path, rot, outer):
    lines = ["pg 1", str(len(rot))]
    lines += [" ".join(map(str, [len(r)] + r)) for r in rot]
    lines.append(" ".join(map(str, ["outer", len(outer)] + outer)))
    path.write_text("\n".join(lines) + "\n")


def circle(k, radius=10.0):
    return [(radius * math.cos(-2 * math.pi * i / k), radius * math.sin(-2 * math.pi * i / k)) for i in range(k)]


def scaled_mid(p, q, s):
    return ((p[0] + q[0]) / 2 * s, (p[1] + q[1]) / 2 * s)


def cycle(k):
    edges = [(i, (i + 1) % k) for i in range(k)]
    return rotation_from_points(k, edges, circle(k)), list(range(k))


def c9_ear():
    pts = circle(9, 1.0)
    edges = [(i, (i + 1) % 9) for i in range(9)]
    t = -math.pi / 9
    pts.append((2 * math.cos(t), 2 * math.sin(t)))
    edges += [(0, 9), (1, 9)]
    return rotation_from_points(10, edges, pts), [0, 9, 1, 2, 3, 4, 5, 6, 7, 8]


def triangle_pendant():
    # triangle 0,1,2 with the tree 2-3, 3-4, 3-5 hanging outside
    pts = [(0, 0), (2, 0), (1, 1.5), (1, 3), (0, 4), (2, 4)]
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 5)]
    rot = rotation_from_points(6, edges, pts)
    return rot, trace_face(rot, 0, 1) if len(trace_face(rot, 0, 1)) > 3 else trace_face(rot, 1, 0)


def path5():
    pts = [(i, 0) for i in range(5)]
    edges = [(i, i + 1) for i in range(4)]
    rot = rotation_from_points(5, edges, pts)
    return rot, trace_face(rot, 0, 1)


def special2():
    # C0 = c0..c11; internal 5-face c0 c1 c2 b a with c1 a special 2-vertex;
    # triangles c11 c0 p and c2 c3 q make c0 and c2 4-vertices
    pts = circle(12)
    a, b, p, q = 12, 13, 14, 15
    pts += [tuple(0.75 * x for x in pts[0]), tuple(0.75 * x for x in pts[2]),
            scaled_mid(pts[11], pts[0], 0.8), scaled_mid(pts[2], pts[3], 0.8)]
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(0, a), (a, b), (b, 2), (11, p), (0, p), (2, q), (3, q)]
    return rotation_from_points(16, edges, pts), list(range(12))


def nine_face():
    # C0 = c0..c11; triangles c0 c1 x and c5 c6 y; path x p q y; the face
    # x c1 c2 c3 c4 c5 y q p is a 9-face adjacent to both triangles
    pts = circle(12)
    x, y, p, q = 12, 13, 14, 15
    px, py = scaled_mid(pts[0], pts[1], 0.8), scaled_mid(pts[5], pts[6], 0.8)
    pts += [px, py,
            (px[0] + (py[0] - px[0]) / 3, px[1] + (py[1] - px[1]) / 3),
            (px[0] + 2 * (py[0] - px[0]) / 3, px[1] + 2 * (py[1] - px[1]) / 3)]
    edges = [(i, (i + 1) % 12) for i in range(12)]
    edges += [(0, x), (1, x), (5, y), (6, y), (x, p), (p, q), (q, y)]
    return rotation_from_points(16, edges, pts), list(range(12))


def truncate(base):
    ok, emb = nx.check_planarity(base)
    assert ok
    idx = {}
    for v in sorted(base.nodes()):
        for w in emb.neighbors_cw_order(v):
            idx[(v, w)] = len(idx)
    rot = [None] * len(idx)
    for v in base.nodes():
        ring = list(emb.neighbors_cw_order(v))
        d = len(ring)
        for j, w in enumerate(ring):
            rot[idx[(v, w)]] = [idx[(w, v)], idx[(v, ring[(j + 1) % d])], idx[(v, ring[(j - 1) % d])]]
    # pick the first 10-face in dart order as the outer face
    for u in range(len(rot)):
        for v in rot[u]:
            f = trace_face(rot, u, v)
            if len(f) == 10:
                return rot, f
    raise RuntimeError("no 10-face")


def tetrad_exerciser():
    return truncate(nx.dodecahedral_graph())


def l4_exerciser():
    # 5-valent c and z, everything else cubic, all faces pentagons, no 6-cycles
    g = nx.Graph()
    for i in range(5):
        j = (i + 1) % 5
        g.add_edges_from([("c", f"x{i}"), (f"x{i}", f"a{i}"), (f"x{i}", f"b{i}"), (f"b{i}", f"a{j}"),
                          (f"a{i}", f"s{i}"), (f"b{i}", f"t{i}"), (f"s{i}", f"t{i}"), (f"t{i}", f"g{i}"),
                          (f"g{i}", f"s{j}"), (f"g{i}", "z")])
    return truncate(nx.convert_node_labels_to_integers(g, ordering="sorted"))


INSTANCES = {
    "c5": lambda: cycle(5),
    "c9-bare": lambda: cycle(9),
    "c9-ear": c9_ear,
    "triangle-pendant": triangle_pendant,
    "path5": path5,
    "special2-exerciser": special2,
    "nine-face-exerciser": nine_face,
    "tetrad-exerciser": tetrad_exerciser,
    "l4-exerciser": l4_exerciser,
}


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    out.mkdir(parents=True, exist_ok=True)
    for name, make in INSTANCES.items():
        rot, outer = make()
        write_pg(out / f"{name}.pg", rot, outer)


if __name__ == "__main__":
    main()
