#!/usr/bin/env python3
"""Regenerate data/corpus.txt and data/templates.txt.

Knot and link PD codes come from spherogram's Rolfsen tables; components and
determinants are computed here with plain rational arithmetic, independently
of the C++ library, and the knot determinants are cross-checked against the
published table values below.

    python3 tools/make_corpus.py [--out data]
"""

import argparse
import pathlib
import warnings
from fractions import Fraction

TABLE_DETS = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23, "8_7": 23,
    "8_8": 25, "8_9": 25, "8_10": 27, "8_11": 27, "8_12": 29, "8_13": 29,
    "8_14": 31, "8_15": 33, "8_16": 35, "8_17": 37, "8_18": 45, "8_19": 3,
    "8_20": 9, "8_21": 15,
}

LINKS = {"L2a1": "hopf_table", "L4a1": "solomon", "L5a1": "whitehead", "L6a4": "borromean"}

TEMPLATES = [
    ("closure", "T[1,2,1,2]"),
    ("numerator", "T[1,1,2,2]"),
    ("trefoil_cut", "X[3,6,4,1] X[5,2,6,3] T[5,2,1,4]"),
    ("figure_eight_cut", "X[8,6,1,5] X[6,3,7,4] X[2,7,3,8] T[1,5,4,2]"),
    ("sum_xy", "T[1,2,3,4] T[2,1,4,3]"),
    ("sum_x2y", "T[1,2,3,4] X[4,6,5,2] X[6,8,7,5] T[7,1,8,3]"),
]


class Diagram:
    def __init__(self, crossings, loops=0):
        self.crossings = [tuple(c) for c in crossings]
        self.loops = loops

    def arcs(self):
        return sorted({a for c in self.crossings for a in c})

    def pd(self):
        parts = ["X[%d,%d,%d,%d]" % c for c in self.crossings]
        if self.loops:
            parts.append("U[%d]" % self.loops)
        return " ".join(parts)


def relabel(d, offset=0):
    order = {}
    for c in d.crossings:
        for a in c:
            order.setdefault(a, len(order) + 1 + offset)
    return Diagram([tuple(order[a] for a in c) for c in d.crossings], d.loops)


def components(d):
    # Each arc joins two crossing positions; strands pass straight through
    # (0<->2, 1<->3). Count cycles of the resulting graph on positions.
    where = {}
    for i, c in enumerate(d.crossings):
        for k, a in enumerate(c):
            where.setdefault(a, []).append((i, k))
    seen = set()
    count = 0
    for start in where:
        if start in seen:
            continue
        count += 1
        stack = [start]
        while stack:
            a = stack.pop()
            if a in seen:
                continue
            seen.add(a)
            for i, k in where[a]:
                stack.append(d.crossings[i][(k + 2) % 4])
    return count + d.loops


def determinant(d):
    n = len(d.crossings)
    if n == 0:
        return 1 if d.loops == 1 else 0
    if d.loops:
        return 0
    parent = {a: a for a in d.arcs()}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in d.crossings:
        x, y = find(c[1]), find(c[3])
        if x != y:
            parent[max(x, y)] = min(x, y)
    cols = sorted({find(a) for a in parent})
    if len(cols) != n:
        return 0
    col = {a: j for j, a in enumerate(cols)}
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, c in enumerate(d.crossings):
        m[i][col[find(c[1])]] += 2
        m[i][col[find(c[0])]] -= 1
        m[i][col[find(c[2])]] -= 1
    m = [row[:-1] for row in m[:-1]]
    det = Fraction(1)
    size = n - 1
    for k in range(size):
        pivot = next((r for r in range(k, size) if m[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            det = -det
        det *= m[k][k]
        for r in range(k + 1, size):
            f = m[r][k] / m[k][k]
            for j in range(k, size):
                m[r][j] -= f * m[k][j]
    assert det.denominator == 1
    return abs(det.numerator)


def mirror(d):
    return Diagram([(c[1], c[2], c[3], c[0]) for c in d.crossings], d.loops)


def disjoint_union(d1, d2):
    top = max(d1.arcs(), default=0)
    d2 = relabel(d2, top)
    return Diagram(d1.crossings + d2.crossings, d1.loops + d2.loops)


def heads(d):
    # Occurrence (crossing, position) where each arc ends, following the
    # strand direction fixed by the incoming under-strand at position 0.
    where = {}
    for i, c in enumerate(d.crossings):
        for k, a in enumerate(c):
            where.setdefault(a, []).append((i, k))
    head = {}
    for i, c in enumerate(d.crossings):
        node = (i, 0)
        while c[node[1]] not in head:
            arc = d.crossings[node[0]][node[1]]
            head[arc] = node
            out = (node[0], (node[1] + 2) % 4)
            nxt = d.crossings[out[0]][out[1]]
            ends = where[nxt]
            node = ends[0] if ends[1] == out else ends[1]
            c = d.crossings[node[0]]
    return head


def connected_sum(d1, d2):
    # Cut the lowest arc of each diagram and reconnect crosswise by handing
    # the head end of each cut arc to the other diagram.
    top = max(d1.arcs())
    d2 = relabel(d2, top)
    a1, a2 = min(d1.arcs()), min(d2.arcs())

    def swap_head(d, old, new):
        i, k = heads(d)[old]
        out = [list(c) for c in d.crossings]
        out[i][k] = new
        return [tuple(c) for c in out]

    return Diagram(swap_head(d1, a1, a2) + swap_head(d2, a2, a1))


def from_table(name):
    import spherogram

    link = spherogram.Link(name)
    return Diagram([tuple(a + 1 for a in c) for c in link.PD_code()])


def build():
    entries = [
        ("unknot", Diagram([], 1)),
        ("unknot_kink", Diagram([(1, 2, 2, 1)])),
        ("unlink_2", Diagram([], 2)),
        ("unlink_3", Diagram([], 3)),
        ("hopf", Diagram([(1, 4, 2, 3), (3, 2, 4, 1)])),
    ]
    knots = {}
    for name, expected in TABLE_DETS.items():
        d = from_table(name)
        got = determinant(d)
        if got != expected or components(d) != 1:
            raise SystemExit("%s: determinant %d, table says %d" % (name, got, expected))
        knots[name] = d
        entries.append((name, d))
    for name, label in LINKS.items():
        entries.append((label, from_table(name)))
    trefoil, fig8, hopf = knots["3_1"], knots["4_1"], entries[4][1]
    entries += [
        ("mirror_3_1", mirror(trefoil)),
        ("mirror_5_2", mirror(knots["5_2"])),
        ("granny", connected_sum(trefoil, trefoil)),
        ("square", connected_sum(trefoil, mirror(trefoil))),
        ("3_1#4_1", connected_sum(trefoil, fig8)),
        ("4_1#5_2", connected_sum(fig8, knots["5_2"])),
        ("hopf#3_1", connected_sum(hopf, trefoil)),
        ("hopf#hopf", connected_sum(hopf, hopf)),
        ("3_1+unknot", disjoint_union(trefoil, Diagram([], 1))),
        ("hopf+3_1", disjoint_union(hopf, trefoil)),
        ("3_1+4_1", disjoint_union(trefoil, fig8)),
    ]
    return entries


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data")
    args = parser.parse_args()
    warnings.simplefilter("ignore")
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    lines = ["# name | pd | components | determinant"]
    for name, d in build():
        lines.append("%s | %s | %d | %d" % (name, d.pd(), components(d), determinant(d)))
    (out / "corpus.txt").write_text("\n".join(lines) + "\n")
    tlines = ["# name | pd"] + ["%s | %s" % t for t in TEMPLATES]
    (out / "templates.txt").write_text("\n".join(tlines) + "\n")


if __name__ == "__main__":
    main()
