#!/usr/bin/env python3
"""Recompute the frozen expected values used in the C++ tests.

Only plain 2x2 matrix products and adjugates are used here; none of the
closed forms from the library are reused.
"""
import cmath


def mul(x, y):
    return [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]


def inv(x):
    return [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]


def tr(x):
    return x[0][0] + x[1][1]


def comm(x, y):
    return mul(mul(mul(x, y), inv(x)), inv(y))


lam = 1.2
g = [[lam, 0], [0, 1 / lam]]
h = [[1, 1], [1, 2]]
mg = abs(lam - 1) + abs(1 / lam - 1)
bound = (1 - mg) / mg ** 2
a, b, c, d = h[0][0], h[0][1], h[1][0], h[1][1]
print("mg", repr(mg))
print("bound", repr(bound))
print("abcd_sqrt", repr(abs(a * b * c * d) ** 0.5))
print("trace diag(1.2,1/1.2)", repr(tr(g)))
print("trace^2", repr(tr(g) ** 2))
h1 = mul(mul(h, g), inv(h))
print("h1", h1)
a1, b1, c1, d1 = h1[0][0], h1[0][1], h1[1][0], h1[1][1]
print("|a1d1|", repr(abs(a1 * d1)), "sqrt", repr(abs(a1 * d1) ** 0.5))
print("|b1c1|", repr(abs(b1 * c1)), "sqrt", repr(abs(b1 * c1) ** 0.5))
print("ineq11 rhs", repr(1 / mg))
print("ineq12 rhs", repr((1 - mg) / mg))
print("ineq3 lhs", repr(mg * (1 + abs(b1 * c1) ** 0.5)))
print("offDiag h", abs(b) + abs(c), "offDiag h1", repr(abs(b1) + abs(c1)))
print("cor1 lhs", abs(b * c) ** 0.5, "bound", repr((1 - mg) / mg))
print("cor3 lhs", abs(1 + b * c) + abs(b * c), "bound", repr(2 * (1 - mg) / mg ** 2))
T = [[1, 1], [0, 1]]
S = [[0, -1], [1, 0]]
print("T*S", mul(T, S))
print("[T,S]", comm(T, S))
print("classical T,S", abs(tr(T) ** 2 - 4) + abs(tr(comm(T, S)) - 2))
print("classical g,g", repr(abs(tr(g) ** 2 - 4) + abs(tr(comm(g, g)) - 2)))
print("S h1", mul(mul(S, g), inv(S)))
# [[2,1],[0,0.5]] eigenvalues and the two lift values of M_g
A = [[2, 1], [0, 0.5]]
disc = cmath.sqrt(tr(A) ** 2 - 4)
ev = [(tr(A) + disc) / 2, (tr(A) - disc) / 2]
print("eig", ev)
for s in (1, -1):
    lam_s = max((s * e for e in ev), key=abs)
    print("lift", s, "lambda", lam_s, "mg", abs(lam_s - 1) + abs(1 / lam_s - 1))
print("mg(1/1.2)", repr(abs(1/1.2 - 1) + abs(1.2 - 1)))
h2 = [[5, 2], [12, 5]]
print("abcd_sqrt 600", repr(abs(5 * 2 * 12 * 5) ** 0.5))
