#!/usr/bin/env python3
"""Regenerates the algebra and morphism fixtures in fixtures/."""

import itertools
import json
import pathlib
import sys


def write(path, obj):
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def algebra(field, basis, product, unit_index=0):
    n = len(basis)
    mult = [[[str(c) for c in product(i, j)] for j in range(n)] for i in range(n)]
    unit = ["1" if k == unit_index else "0" for k in range(n)]
    return {"field": field, "dim": n, "basis": basis, "mult": mult, "unit": unit}


def truncated_poly(field, n):
    basis = ["1", "x"] + ["x^%d" % k for k in range(2, n)]
    basis = basis[:n]

    def product(i, j):
        return [1 if k == i + j else 0 for k in range(n)]

    return algebra(field, basis, product)


def group(table):
    n = len(table)
    basis = ["1"] + ["g%d" % a for a in range(1, n)]

    def product(i, j):
        return [1 if k == table[i][j] else 0 for k in range(n)]

    out = algebra("Q", basis, product)
    # group-like basis: delta(g) = g (x) g, eps(g) = 1
    out["comult"] = [[["1" if (p == i and q == i) else "0" for q in range(n)] for p in range(n)] for i in range(n)]
    out["counit"] = ["1"] * n
    return out


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3():
    perms = sorted(itertools.permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}
    return [[index[tuple(a[b[x]] for x in range(3))] for b in perms] for a in perms]


def matrix_algebra(k):
    basis = ["E%d%d" % (a + 1, b + 1) for a in range(k) for b in range(k)]
    n = k * k

    def product(i, j):
        a, b = divmod(i, k)
        c, d = divmod(j, k)
        return [1 if (b == c and m == a * k + d) else 0 for m in range(n)]

    unit = [1 if a == b else 0 for a in range(k) for b in range(k)]
    out = algebra("Q", basis, product)
    out["unit"] = [str(u) for u in unit]
    return out


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "fixtures")
    root.mkdir(exist_ok=True)
    write(root / "q.json", truncated_poly("Q", 1))
    write(root / "qx2.json", truncated_poly("Q", 2))
    write(root / "qx3.json", truncated_poly("Q", 3))
    write(root / "qx4.json", truncated_poly("Q", 4))
    write(root / "f2x2.json", truncated_poly({"Fp": 2}, 2))
    write(root / "f3x3.json", truncated_poly({"Fp": 3}, 3))
    write(root / "qz2.json", group(cyclic(2)))
    write(root / "qz3.json", group(cyclic(3)))
    write(root / "qs3.json", group(s3()))
    write(root / "m2q.json", matrix_algebra(2))
    # y -> x^2
    write(root / "square_map.json", {
        "source": "qx2.json",
        "target": "qx4.json",
        "matrix": [["1", "0"], ["0", "0"], ["0", "1"], ["0", "0"]],
    })


if __name__ == "__main__":
    main()
