#!/usr/bin/env python3
"""Regenerate the algebra corpus under corpus/.

Hand-written tables are emitted directly; the tensor/quotient/assemble
pipeline is run through the torusforge binary so that the stored files are
exactly what the tool produces.
"""
import argparse
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path


def coef(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def algfile(name, even, brackets, odd=(), kind=None):
    """brackets: list of (left, right, {target: coefficient}) in any orientation."""
    basis = list(even) + list(odd)
    pos = {b: i for i, b in enumerate(basis)}
    parity = {b: (0 if i < len(even) else 1) for i, b in enumerate(basis)}
    table = {}
    for left, right, value in brackets:
        i, j = pos[left], pos[right]
        sign = 1
        if i > j:
            i, j = j, i
            sign = 1 if (parity[left] and parity[right]) else -1
        key = (i, j)
        acc = table.setdefault(key, {})
        for target, c in value.items():
            acc[pos[target]] = acc.get(pos[target], Fraction(0)) + sign * Fraction(c)
    entries = []
    for (i, j) in sorted(table):
        terms = [[coef(c), basis[k]] for k, c in sorted(table[(i, j)].items()) if c != 0]
        if terms:
            entries.append({"left": basis[i], "right": basis[j], "value": terms})
    return {
        "name": name,
        "kind": kind or ("lie-super" if odd else "lie"),
        "even_basis": list(even),
        "odd_basis": list(odd),
        "brackets": entries,
    }


def dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def matrix(rows):
    return [[coef(x) for x in row] for row in rows]


def diag(values):
    n = len(values)
    return [[values[r] if r == c else 0 for c in range(n)] for r in range(n)]


def unit(n, pairs):
    """pairs: {(row, col): value} with 1-based indices, E_{row,col} maps e_col to e_row."""
    m = [[0] * n for _ in range(n)]
    for (r, c), v in pairs.items():
        m[r - 1][c - 1] += v
    return m


def heisenberg3():
    return algfile("heisenberg3", ["e1", "e2", "e3"], [("e1", "e2", {"e3": 1})])


def abelian(n):
    return algfile(f"abelian_{n}", [f"e{i}" for i in range(1, n + 1)], [])


def filiform(n):
    e = [f"e{i}" for i in range(1, n + 1)]
    return algfile(f"filiform_model_{n}", e, [("e1", f"e{i}", {f"e{i + 1}": 1}) for i in range(2, n)])


def n9():
    e = [f"e{i}" for i in range(1, 10)]
    table = [
        ("e1", "e2", {"e3": 1}), ("e1", "e3", {"e4": 1}), ("e1", "e4", {"e5": 1}),
        ("e1", "e6", {"e7": 1}), ("e1", "e8", {"e9": 1}), ("e2", "e3", {"e8": 1}),
        ("e2", "e4", {"e9": 1}), ("e2", "e5", {"e9": 1}), ("e4", "e3", {"e9": 1}),
    ]
    return algfile("n9", e, table)


def n9_matrices():
    t_alpha = diag([0, 1, 1, 1, 1, 0, 0, 2, 2])
    t_beta = diag([0, 0, 0, 0, 0, 1, 1, 0, 0])
    # d(e2) = 2e3 - e4, d(e3) = 2e4 - e5, d(e4) = 2e5
    d = unit(9, {(3, 2): 2, (4, 2): -1, (4, 3): 2, (5, 3): -1, (5, 4): 2})
    plus = [[t_alpha[r][c] + d[r][c] for c in range(9)] for r in range(9)]
    return t_alpha, t_beta, d, plus


def n1():
    x = [f"x{i}" for i in range(1, 9)]
    table = [("x1", f"x{i}", {f"x{i + 1}": 1}) for i in range(2, 8)]
    table += [("x2", "x3", {"x7": 1}), ("x2", "x4", {"x8": 1}), ("x2", "x5", {"x8": 1}), ("x4", "x3", {"x8": 1})]
    return algfile("n1", x, table)


def n2():
    return {
        "name": "n2",
        "kind": "comm-assoc",
        "basis": ["y1", "y2", "y3"],
        "products": [{"left": "y1", "right": "y2", "value": [["1", "y3"]]}],
    }


def n1n2_ideal():
    return {"vectors": [[["1", "x1*y3"]], [["1", "x2*y3"]], [["1", "x8*y1"]], [["1", "x8*y2"]]]}


def n4():
    z = [f"z{i}" for i in range(1, 9)]
    return algfile("n4", z, [("z2", "z1", {"z6": 1}), ("z3", "z2", {"z7": 1})])


def n3_n4_action():
    entries = [
        ("z1", "x2*y1", "z5"), ("z1", "x3*y1", "z5"),
        ("z2", "x1*y1", "z6"), ("z2", "x1*y2", "z6"), ("z2", "x3*y1", "z6"),
        ("x2*y2", "z3", "z7"), ("z3", "x3*y2", "z7"),
        ("z4", "x4*y2", "z8"), ("z4", "x7*y1", "z8"),
    ]
    return {"action": [{"left": l, "right": r, "value": [["1", v]]} for l, r, v in entries]}


def n3_example_d():
    """d1..d5 as printed, 1-based indices over a 20-element basis whose order the source leaves open."""
    i1, i2 = {3, 4, 11, 12, 15, 19}, {1, 11, 12, 13, 14}
    j1, j2 = {9, 10, 18}, {4, 6, 8, 10, 12, 14, 19, 20}
    i3 = j1 | {5, 6, 11, 12, 13, 14, 16, 19, 20}
    i4 = j1 | {7, 8, 13, 14, 17, 20}
    i5 = j2 | {2, 15, 16, 17, 18}

    def build(plus, minus=(), extra=None):
        pairs = {(i, i): 1 for i in plus}
        for i in minus:
            pairs[(i, i)] = pairs.get((i, i), 0) - 1
        pairs.update(extra or {})
        return matrix(unit(20, pairs))

    return [
        build(i1, j1, {(17, 18): -1, (7, 9): -1, (8, 10): -1}),
        build(i3, (), {(7, 9): 1, (8, 10): 1, (17, 18): 1}),
        build(i2, j2),
        build(i4),
        build(i5),
    ]


def r46(n):
    e = [f"e{i}" for i in range(1, n + 1)]
    table = [("e1", f"e{i}", {f"e{i + 1}": 1}) for i in range(2, n)]
    table += [("e2", f"e{i}", {f"e{i + 2}": 1}) for i in range(3, n - 1)]
    table += [(f"e{i}", "x", {f"e{i}": i}) for i in range(1, n + 1)]
    return algfile(f"r46_n{n}", e + ["x"], table)


def super_small():
    return algfile("super_small", ["e1", "e2", "e3"], [("e1", "e2", {"e3": 1}), ("f1", "f2", {"e3": 1})],
                   odd=["f1", "f2"])


def super_false():
    return algfile("super_false", ["e1"], [("f1", "f1", {"e1": 1})], odd=["f1"])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tool", required=True, help="path to the torusforge binary")
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def write(name, obj):
        (out / name).write_text(dump(obj))

    write("heisenberg3.alg", heisenberg3())
    for n in (2, 3, 4):
        write(f"abelian_{n}.alg", abelian(n))
    for n in range(6, 11):
        write(f"filiform_model_{n}.alg", filiform(n))
    write("n9.alg", n9())
    t_alpha, t_beta, d, plus = n9_matrices()
    write("n9_d.json", matrix(d))
    write("n9_torus.json", [matrix(t_alpha), matrix(t_beta)])
    write("n9_torus_tilde.json", [matrix(plus), matrix(t_beta)])
    write("n1.alg", n1())
    write("n2.json", n2())
    write("n1n2_ideal.json", n1n2_ideal())
    write("n4.alg", n4())
    write("n3_n4_action.json", n3_n4_action())
    write("n3_example_d.json", n3_example_d())
    write("r46_n8.alg", r46(8))
    write("super_small.alg", super_small())
    write("super_false.alg", super_false())

    def tool(*argv, dest):
        res = subprocess.run([args.tool, *argv, "--output", str(out / dest)], capture_output=True, text=True)
        sys.stderr.write(res.stderr)
        if res.returncode != 0:
            sys.exit(f"torusforge {' '.join(argv)} failed with exit {res.returncode}")

    tool("construct", "tensor", str(out / "n1.alg"), str(out / "n2.json"), "--name", "n1n2", dest="n1n2.alg")
    tool("construct", "quotient", str(out / "n1n2.alg"), "--ideal", str(out / "n1n2_ideal.json"), "--name", "n3",
         dest="n3.alg")
    tool("construct", "assemble", str(out / "n3.alg"), str(out / "n4.alg"), "--action", str(out / "n3_n4_action.json"),
         "--name", "n28", dest="n28.alg")


if __name__ == "__main__":
    main()
