#!/usr/bin/env python3
"""Prints the (order, element-order profile) fingerprint table used by
src/group_names.cpp. Each named group is built as a permutation group."""
from collections import Counter
from itertools import product
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import (
    CyclicGroup, DihedralGroup, SymmetricGroup, AlternatingGroup, AbelianGroup)
from sympy.combinatorics.group_constructs import DirectProduct


def affine(p, mults, frob_exps=(0,), modulus=None):
    """x -> a*x^(p^f) + b over GF(q), q = p or p^2 (modulus gives GF(p^2))."""
    if modulus is None:
        q = p
        elems = list(range(p))
        mul = lambda a, b: a * b % p
        add = lambda a, b: (a + b) % p
        powp = lambda a, f: a
    else:
        q = p * p
        elems = [(a, b) for a in range(p) for b in range(p)]
        c0, c1 = modulus  # x^2 = -c1 x - c0

        def mul(u, v):
            a0, a1 = u
            b0, b1 = v
            r0 = a0 * b0
            r1 = a0 * b1 + a1 * b0
            r2 = a1 * b1
            return ((r0 - c0 * r2) % p, (r1 - c1 * r2) % p)

        add = lambda u, v: ((u[0] + v[0]) % p, (u[1] + v[1]) % p)

        def powp(a, f):
            r = a
            for _ in range(f):
                x = (1, 0)
                for _ in range(p):
                    x = mul(x, r)
                r = x
            return r
    idx = {e: i for i, e in enumerate(elems)}
    gens = []
    for a in mults:
        for f in frob_exps:
            for b in elems:
                gens.append(Permutation([idx[add(mul(a, powp(x, f)), b)] for x in elems]))
    return PermutationGroup(gens)


def gf_mults(p, modulus=None):
    if modulus is None:
        return [a for a in range(1, p)]
    return [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]


def profile(G):
    return tuple(sorted(Counter(g.order() for g in G.elements).items()))


def psl32():
    # PSL(3,2) acting on the 7 points of the Fano plane.
    pts = [v for v in product(range(2), repeat=3) if any(v)]
    idx = {v: i for i, v in enumerate(pts)}
    mats = []
    for m in product(range(2), repeat=9):
        M = [m[0:3], m[3:6], m[6:9]]
        det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
               - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
               + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])) % 2
        if det:
            img = [idx[tuple(sum(M[r][c] * v[c] for c in range(3)) % 2 for r in range(3))] for v in pts]
            mats.append(Permutation(img))
    return PermutationGroup(mats)


def agammal_1_8():
    # x -> a x^(2^f) + b over GF(8) = GF(2)[w], w^3 = w + 1
    def mul(a, b):
        r = 0
        for i in range(3):
            if b >> i & 1:
                r ^= a << i
        for i in (4, 3):
            if r >> i & 1:
                r ^= 0b1011 << (i - 3)
        return r
    gens = [Permutation([mul(2, x) for x in range(8)]),
            Permutation([mul(x, x) for x in range(8)]),
            Permutation([x ^ 1 for x in range(8)])]
    return PermutationGroup(gens)


def z4sq_z3_z2():
    # v -> A v + b on (Z4)^2 with A in <R, I + 2R>, R = [[0, -1], [1, -1]]
    elems = [(a, b) for a in range(4) for b in range(4)]
    idx = {e: i for i, e in enumerate(elems)}

    def lin(m):
        return Permutation([idx[((m[0] * a + m[1] * b) % 4, (m[2] * a + m[3] * b) % 4)] for a, b in elems])
    shift = Permutation([idx[((a + 1) % 4, b)] for a, b in elems])
    return PermutationGroup([lin((0, 3, 1, 3)), lin((1, 2, 2, 3)), shift])


Z = CyclicGroup
groups = [
    ("Z1", PermutationGroup([Permutation([0])])),
    ("Z2", Z(2)), ("Z3", Z(3)), ("Z4", Z(4)), ("Z6", Z(6)), ("Z12", Z(12)),
    ("Z2^2", AbelianGroup(2, 2)), ("Z3^2", AbelianGroup(3, 3)),
    ("Z2 x Z4", AbelianGroup(2, 4)), ("Z4 x Z4", AbelianGroup(4, 4)),
    ("S3", SymmetricGroup(3)), ("D4", DihedralGroup(4)), ("D6", DihedralGroup(6)),
    ("D8", DihedralGroup(8)), ("D4 x Z2", DirectProduct(DihedralGroup(4), Z(2))),
    ("S3 x Z3", DirectProduct(SymmetricGroup(3), Z(3))),
    ("S3 x Z4", DirectProduct(SymmetricGroup(3), Z(4))),
    ("Z6 x S3", DirectProduct(Z(6), SymmetricGroup(3))),
    ("D8 x S3", DirectProduct(DihedralGroup(8), SymmetricGroup(3))),
    ("Z2^3", AbelianGroup(2, 2, 2)), ("A4", AlternatingGroup(4)),
    ("S4", SymmetricGroup(4)), ("A4 x Z2", DirectProduct(AlternatingGroup(4), Z(2))),
    ("D4 x Z3", DirectProduct(DihedralGroup(4), Z(3))),
    ("Z2 x S4", DirectProduct(Z(2), SymmetricGroup(4))),
    ("PSL(3,2) x Z2", DirectProduct(psl32(), Z(2))),
    ("Z2^3 : (Z7 : Z3)", agammal_1_8()),
    ("((Z4 x Z4) : Z3) : Z2", z4sq_z3_z2()),
    ("Z5 : Z4", affine(5, gf_mults(5))),
    ("(Z7 : Z3) : Z2", affine(7, gf_mults(7))),
    ("(Z11 : Z5) : Z2", affine(11, gf_mults(11))),
    ("(Z13 : Z4) : Z3", affine(13, gf_mults(13))),
    # GF(9) = GF(3)[w], w^2 + w + 2 = 0
    ("((Z3 x Z3) : Z8) : Z2", affine(3, gf_mults(3, (2, 1)), (0, 1), (2, 1))),
]

seen = {}
for name, G in groups:
    key = (G.order(), profile(G))
    seen.setdefault(key, []).append(name)
for (order, prof), names in sorted(seen.items()):
    body = ", ".join("{%d, %d}" % kv for kv in prof)
    pretty = [n.replace(" : ", " ⋊ ").replace(" x ", " × ") for n in names]
    label = pretty[0] if len(pretty) == 1 else ""
    print('    {%d, {%s}, "%s"},  // %s' % (order, body, label, " / ".join(pretty)))
