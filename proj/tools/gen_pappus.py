#!/usr/bin/env python3
"""Writes data/pappus.json: the Levi graph of the Pappus configuration, with
the nine lines found as collinear triples of an explicit point set."""
import itertools
import json
import sys


def meet(p, q, r, s):
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / cr
    return (p[0] + t * d1[0], p[1] + t * d1[1])


def collinear(a, b, c):
    return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) < 1e-9


def main():
    a = [(0.0, 0.0), (2.0, 0.0), (5.0, 0.0)]
    b = [(1.0 + t, 3.0 + 0.2 * t) for t in (0.0, 1.5, 4.0)]
    pts = a + b + [meet(a[i], b[j], a[j], b[i]) for i, j in ((0, 1), (0, 2), (1, 2))]
    lines = [t for t in itertools.combinations(range(9), 3) if collinear(*(pts[i] for i in t))]
    assert len(lines) == 9, lines
    edges = sorted((p, 9 + k) for k, line in enumerate(lines) for p in line)
    labels = [f"p{i}" for i in range(9)] + [f"b{k}" for k in range(9)]
    doc = {"order": 18, "edges": [list(e) for e in edges], "labels": labels}
    out = sys.argv[1] if len(sys.argv) > 1 else "data/pappus.json"
    with open(out, "w") as f:
        json.dump(doc, f)
        f.write("\n")


if __name__ == "__main__":
    main()
