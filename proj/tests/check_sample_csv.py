#!/usr/bin/env python3
"""Independent checker for `jgate sample --emit-h` output.

Recomputes every gate column from lambda and the h entries with plain Python
complex arithmetic and reports rows that disagree by more than 1e-9.

usage: check_sample_csv.py FILE.csv
"""
import csv
import math
import sys

TOL = 1e-9


def near(x, y):
    return abs(x - y) <= TOL * max(1.0, abs(y))


def flag_ok(flag, lhs, bound, strict=False):
    if abs(lhs - bound) <= TOL:
        return True
    expected = lhs < bound if strict else lhs <= bound
    return (flag == "1") == expected


def check_row(r):
    lam = complex(float(r["lambda_re"]), float(r["lambda_im"]))
    a = complex(float(r["a_re"]), float(r["a_im"]))
    b = complex(float(r["b_re"]), float(r["b_im"]))
    c = complex(float(r["c_re"]), float(r["c_im"]))
    d = complex(float(r["d_re"]), float(r["d_im"]))
    mg = abs(lam - 1) + abs(1 / lam - 1)
    bound = (1 - mg) / mg ** 2
    bc = b * c
    abcd = math.sqrt(abs(a * b * c * d))
    x = math.sqrt(abs(bc))
    y = math.sqrt(abs(1 + bc))
    total = abs(1 + bc) + abs(bc)
    # |tr^2 g - 4| + |tr[g,h] - 2| with tr[g,h] - 2 = -(lam - 1/lam)^2 bc
    gap2 = (lam - 1 / lam) ** 2
    jorg = abs(gap2) + abs(gap2 * bc)
    k = (1 - mg) / mg
    axis = max(abs(b), abs(c)) <= 1e-9 or max(abs(a), abs(d)) <= 1e-9
    problems = []
    for name, want in [("mg", mg), ("bound", bound), ("abcd_sqrt", abcd), ("bc_sqrt", x),
                       ("onePlusBc_sqrt", y), ("sumBcOnePlusBc", total), ("jorgensenLhs", jorg)]:
        if not near(float(r[name]), want):
            problems.append(name)
    for name, lhs, bnd, strict in [("wjcFired", abcd, bound, False), ("cor1Fired", x, k, False),
                                   ("cor2Fired", y, k, False), ("cor3Fired", total, 2 * bound, False),
                                   ("classicalFired", jorg, 1.0, True)]:
        if not flag_ok(r[name], lhs, bnd, strict):
            problems.append(name)
    if (r["axisPreserving"] == "1") != axis:
        problems.append("axisPreserving")
    if r["wjcFired"] == "1" and float(r["abcd_sqrt"]) > float(r["bound"]) + 1e-12:
        problems.append("wjcFired beyond bound")
    return problems


def check_file(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    bad = 0
    for r in rows:
        problems = check_row(r)
        if problems:
            bad += 1
            print(f"row {r['seedIndex']}: {', '.join(problems)}", file=sys.stderr)
    return len(rows), bad


if __name__ == "__main__":
    n, bad = check_file(sys.argv[1])
    print(f"{n} rows checked, {bad} mismatches")
    sys.exit(1 if bad else 0)
