#!/usr/bin/env python3
"""Symbolic expansion of the even-Clifford transport map over a generic
3x3 bilinear form.

Prints the structure constants c[i][j][k] of the algebra on (1, f1, f2, f3)
as polynomials in b11..b33, then solves for the b_ij.  The output of this
script is what src/azumaya.cpp::recover_bilinear hard-codes.

    python3 tools/derive_recover.py
"""
import itertools
import sympy as sp

B = sp.Matrix(3, 3, lambda i, j: sp.Symbol(f"b{i+1}{j+1}"))
a = [B[i, i] for i in range(3)]
u = {(i, j): B[i, j] + B[j, i] for i in range(3) for j in range(3) if i < j}


def reduce_word(word):
    """Normal form of a generator word in C(q_B): dict frozenset-ordered tuple -> coeff."""
    for pos in range(len(word) - 1):
        i, j = word[pos], word[pos + 1]
        if i == j:
            rest = word[:pos] + word[pos + 2:]
            return {k: a[i] * v for k, v in reduce_word(rest).items()}
        if i > j:
            # e_i e_j = u_ji - e_j e_i
            out = {}
            for k, v in reduce_word(word[:pos] + word[pos + 2:]).items():
                out[k] = out.get(k, 0) + u[(j, i)] * v
            swapped = word[:pos] + (j, i) + word[pos + 2:]
            for k, v in reduce_word(swapped).items():
                out[k] = out.get(k, 0) - v
            return out
    return {word: sp.Integer(1)}


def mul(x, y):
    out = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            for w, c in reduce_word(wx + wy).items():
                out[w] = sp.expand(out.get(w, 0) + cx * cy * c)
    return {k: v for k, v in out.items() if v != 0}


# lambda-side basis pulled back to the Clifford side:
#   1, f1 = e2e3 - b23, f2 = -(e1e3 - b13), f3 = e1e2 - b12
one = {(): sp.Integer(1)}
f = [
    one,
    {(1, 2): sp.Integer(1), (): -B[1, 2]},
    {(0, 2): sp.Integer(-1), (): B[0, 2]},
    {(0, 1): sp.Integer(1), (): -B[0, 1]},
]


def to_lambda(x):
    """Express an even Clifford element in (1, f1, f2, f3)."""
    c1 = x.get((1, 2), 0)
    c2 = -x.get((0, 2), 0)
    c3 = x.get((0, 1), 0)
    c0 = x.get((), 0) + c1 * B[1, 2] - c2 * B[0, 2] + c3 * B[0, 1]
    return [sp.expand(c) for c in (c0, c1, c2, c3)]


C = [[to_lambda(mul(f[i], f[j])) for j in range(4)] for i in range(4)]
for i, j in itertools.product(range(1, 4), repeat=2):
    print(f"f{i}*f{j} =", C[i][j])

# Every b_ij occurs linearly in some f_k-coefficient of a product f_i * f_j.
# Read the inverse off those entries and confirm it on the generic table.
inverse = {
    (0, 0): (+1, 3, 2, 1),
    (0, 1): (-1, 3, 1, 1),
    (0, 2): (+1, 3, 2, 3),
    (1, 0): (+1, 1, 3, 1),
    (1, 1): (+1, 1, 3, 2),
    (1, 2): (-1, 3, 1, 3),
    (2, 0): (-1, 1, 2, 1),
    (2, 1): (+1, 1, 3, 3),
    (2, 2): (+1, 2, 1, 3),
}
print()
for (i, j), (sign, x, y, z) in sorted(inverse.items()):
    assert sp.expand(sign * C[x][y][z] - B[i, j]) == 0
    print(f"b{i+1}{j+1} = {'-' if sign < 0 else ' '}c[{x}][{y}][{z}]")
print("inverse verified on the generic table")
