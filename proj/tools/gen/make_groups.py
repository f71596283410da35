#!/usr/bin/env python3
# Copyright 2026 The psplit Authors
# SPDX-License-Identifier: Apache-2.0
"""Writes the bundled group tables under data/groups."""

import itertools
import json
import pathlib


def cyclic(n):
    return list(range(n)), lambda a, b: (a + b) % n, 0


def product(*groups):
    elems = list(itertools.product(*[g[0] for g in groups]))
    def mul(a, b):
        return tuple(g[1](x, y) for g, x, y in zip(groups, a, b))
    return elems, mul, tuple(g[2] for g in groups)


def dihedral(n):
    # order 2n: (k, f) = r^k s^f
    elems = [(k, f) for f in range(2) for k in range(n)]
    def mul(a, b):
        k, f = a
        m, g = b
        return ((k + (m if f == 0 else -m)) % n, f ^ g)
    return elems, mul, (0, 0)


def dicyclic(n):
    # order 4n: a^k x^j with a^(2n) = 1, x^2 = a^n, x a = a^-1 x
    elems = [(k, j) for j in range(2) for k in range(2 * n)]
    def mul(a, b):
        k, j = a
        m, l = b
        if j == 0:
            return ((k + m) % (2 * n), l)
        if l == 0:
            return ((k - m) % (2 * n), 1)
        return ((k - m + n) % (2 * n), 0)
    return elems, mul, (0, 0)


def table(group):
    elems, mul, e = group
    elems = [e] + [x for x in elems if x != e]
    index = {x: i for i, x in enumerate(elems)}
    return [[index[mul(a, b)] for b in elems] for a in elems]


GROUPS = {
    "z2": (cyclic(2), 1),
    "z4": (cyclic(4), 1),
    "z8": (cyclic(8), 1),
    "z16": (cyclic(16), 1),
    "z3": (cyclic(3), 1),
    "z9": (cyclic(9), 1),
    "z5": (cyclic(5), 1),
    "z2x2": (product(cyclic(2), cyclic(2)), 2),
    "z2x2x2": (product(cyclic(2), cyclic(2), cyclic(2)), 3),
    "z2x2x2x2": (product(*[cyclic(2)] * 4), 4),
    "z2x4": (product(cyclic(2), cyclic(4)), 2),
    "z4x4": (product(cyclic(4), cyclic(4)), 2),
    "z2x8": (product(cyclic(2), cyclic(8)), 2),
    "z3x3": (product(cyclic(3), cyclic(3)), 2),
    "z3x3x3": (product(cyclic(3), cyclic(3), cyclic(3)), 3),
    "d4": (dihedral(4), 2),
    "q8": (dicyclic(2), 2),
    "d8": (dihedral(8), 2),
    "q16": (dicyclic(4), 2),
    "z2xd4": (product(cyclic(2), dihedral(4)), 3),
    "z2xq8": (product(cyclic(2), dicyclic(2)), 3),
    "z2x2xd4": (product(cyclic(2), cyclic(2), dihedral(4)), 4),
    "z2^6": (product(*[cyclic(2)] * 6), 6),
}


def main():
    out = pathlib.Path(__file__).resolve().parents[2] / "data" / "groups"
    out.mkdir(parents=True, exist_ok=True)
    for name, (group, rank) in GROUPS.items():
        t = table(group)
        doc = {"name": name, "order": len(t), "expected_rank": rank, "table": t}
        (out / f"{name.replace('^', '_')}.json").write_text(json.dumps(doc, separators=(",", ":")) + "\n")
    z6 = table(cyclic(6))
    (out / "z6_not_p_group.json").write_text(json.dumps({"name": "z6", "order": 6, "table": z6}) + "\n")


if __name__ == "__main__":
    main()
