#!/usr/bin/env python3
"""Writes data/polytopes.json: canonical coordinates plus the edge list
(all vertex pairs at the minimum distance)."""
import itertools
import json
import math
import sys

PHI = (1 + math.sqrt(5)) / 2


def signs(*vals):
    return [tuple(s * v for s, v in zip(sg, vals)) for sg in itertools.product((1, -1), repeat=len(vals))]


def cyclic(p):
    x, y, z = p
    return [(x, y, z), (z, x, y), (y, z, x)]


def unique(pts):
    out = []
    for p in pts:
        if p not in out:
            out.append(p)
    return out


def solids():
    yield "tetrahedron", [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    yield "cube", unique(signs(1, 1, 1))
    yield "octahedron", unique([q for p in signs(1, 0, 0) for q in cyclic(p)])
    yield "dodecahedron", unique(signs(1, 1, 1) + [q for p in signs(0, 1 / PHI, PHI) for q in cyclic(p)])
    yield "icosahedron", unique([q for p in signs(0, 1, PHI) for q in cyclic(p)])
    yield "cuboctahedron", unique([q for p in signs(1, 1, 0) for q in cyclic(p)])


def entry(name, pts):
    pts = sorted(unique([tuple(float(c) + 0.0 for c in p) for p in pts]), reverse=True)
    d = {(i, j): math.dist(pts[i], pts[j]) for i, j in itertools.combinations(range(len(pts)), 2)}
    m = min(d.values())
    edges = sorted([list(k) for k, v in d.items() if abs(v - m) < 1e-9])
    return {"name": name, "graph": {"order": len(pts), "edges": edges}, "coords": [list(p) for p in pts]}


json.dump({"version": 1, "polytopes": [entry(n, p) for n, p in solids()]}, sys.stdout, indent=1)
sys.stdout.write("\n")
