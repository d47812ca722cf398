"""Built-in algebra families: truncated polynomial rings and restricted sl2."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional

from .exactla import Field, Matrix, QQ, GF
from .galg import AntiInvolution, GradedAlgebra, TriangularData


@dataclass
class VariableSpec:
    name: str
    degree: int
    bound: int  # x^bound = 0

    def __post_init__(self):
        if self.degree == 0:
            raise ValueError("variables must have nonzero degree")
        if self.bound < 2:
            raise ValueError("exponent bound must be at least 2")


def build_truncated_poly(variables: list[VariableSpec], field: Field = QQ):
    """K[x_1..x_m]/(x_i^{n_i}) with the additive monomial grading.

    Returns (algebra, triangular data, tau-or-None); tau is the canonical
    degree-negating involution swapping sign-paired variables, present
    exactly when the multiset of (|degree|, bound) is sign-symmetric.
    """
    m = len(variables)
    monos = list(itertools.product(*[range(v.bound) for v in variables]))
    index = {mo: i for i, mo in enumerate(monos)}
    n = len(monos)
    degrees = [sum(e * v.degree for e, v in zip(mo, variables)) for mo in monos]
    z, one = field.zero, field.one

    def vec(mo):
        v = [z] * n
        v[index[mo]] = one
        return v

    table = []
    for mo1 in monos:
        row = []
        for mo2 in monos:
            s = tuple(a + b for a, b in zip(mo1, mo2))
            if all(e < v.bound for e, v in zip(s, variables)):
                row.append(vec(s))
            else:
                row.append([z] * n)
        table.append(row)
    names = []
    for mo in monos:
        parts = [f"{v.name}^{e}" if e > 1 else v.name
                 for e, v in zip(mo, variables) if e]
        names.append("*".join(parts) if parts else "1")
    gens = [index[mo] for mo in monos if sum(mo) == 1]
    A = GradedAlgebra(field, degrees, table, vec(tuple([0] * m)),
                      generators=gens, names=names)

    def part(sign):
        sel = [i for i, v in enumerate(variables) if v.degree * sign > 0]
        return [vec(mo) for mo in monos
                if all(e == 0 for i, e in enumerate(mo) if i not in sel)]

    tri = TriangularData(A, part(-1), [vec(tuple([0] * m))], part(+1))

    tau = _canonical_truncated_tau(A, variables, monos, index)
    return A, tri, tau


def _canonical_truncated_tau(A, variables, monos, index) -> Optional[AntiInvolution]:
    neg = sorted([i for i, v in enumerate(variables) if v.degree < 0],
                 key=lambda i: (-variables[i].degree, variables[i].bound, i))
    pos = sorted([i for i, v in enumerate(variables) if v.degree > 0],
                 key=lambda i: (variables[i].degree, variables[i].bound, i))
    if len(neg) != len(pos):
        return None
    pairing = {}
    for i, j in zip(neg, pos):
        if (-variables[i].degree, variables[i].bound) != (variables[j].degree, variables[j].bound):
            return None
        pairing[i], pairing[j] = j, i
    f = A.field
    n = len(monos)
    cols = []
    for mo in monos:
        img = [0] * len(variables)
        for i, e in enumerate(mo):
            img[pairing[i]] = e
        w = [f.zero] * n
        w[index[tuple(img)]] = f.one
        cols.append(w)
    return AntiInvolution(Matrix(f, cols, cols=n).transpose())


def build_restricted_sl2(p: int, max_p: int = 7):
    """Restricted enveloping algebra of sl2 in characteristic p.

    PBW basis F^a H^b E^c with E^p = F^p = 0, H^p = H; grading
    deg F = -1, deg H = 0, deg E = 1; T is spanned by the H-powers.
    Returns (algebra, triangular data, omega) where omega = 4FE + (H+1)^2.
    """
    if p == 2:
        raise ValueError("p = 2 is not supported")
    if p > max_p:
        raise ValueError(f"p = {p} exceeds the cap {max_p}")
    field = GF(p)
    monos = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {mo: i for i, mo in enumerate(monos)}
    n = p ** 3

    # elements as dict mono -> int coefficient mod p
    def madd(d1, d2, coef=1):
        for mo, c in d2.items():
            d1[mo] = (d1.get(mo, 0) + coef * c) % p
        return d1

    def h_reduce(b):
        # H^b with H^p = H: exponents >= p wrap to (b - p + 1)
        while b >= p:
            b = b - p + 1
        return b

    def right_by_E(d):
        out = {}
        for (a, b, c), coef in d.items():
            if c + 1 < p:
                out[(a, b, c + 1)] = (out.get((a, b, c + 1), 0) + coef) % p
        return out

    def right_by_H(d):
        out = {}
        for (a, b, c), coef in d.items():
            # E^c H = (H - 2c) E^c
            madd(out, {(a, h_reduce(b + 1), c): 1}, coef)
            madd(out, {(a, b, c): -2 * c}, coef)
        return {k: v % p for k, v in out.items() if v % p}

    def right_by_F(d):
        out = {}
        for (a, b, c), coef in d.items():
            if c == 0:
                # H^b F = F (H-2)^b
                if a + 1 < p:
                    for k in range(b + 1):
                        mo = (a + 1, h_reduce(k), 0)
                        madd(out, {mo: comb(b, k) * (-2) ** (b - k)}, coef)
            else:
                # X E^c F = (X E^{c-1} F) E + (X E^{c-1}) H
                base = {(a, b, c - 1): coef}
                madd(out, right_by_E(right_by_F(base)))
                madd(out, right_by_H(base))
        return {k: v % p for k, v in out.items() if v % p}

    def mult(mo1, mo2):
        d = {mo1: 1}
        a, b, c = mo2
        for _ in range(a):
            d = right_by_F(d)
        for _ in range(b):
            d = right_by_H(d)
        for _ in range(c):
            d = right_by_E(d)
        return d

    z, one = field.zero, field.one

    def to_vec(d):
        v = [z] * n
        for mo, c in d.items():
            v[index[mo]] = c % p
        return v

    table = [[to_vec(mult(mo1, mo2)) for mo2 in monos] for mo1 in monos]
    degrees = [c - a for (a, b, c) in monos]
    names = []
    for (a, b, c) in monos:
        parts = ([f"F^{a}" if a > 1 else "F"] if a else []) + \
                ([f"H^{b}" if b > 1 else "H"] if b else []) + \
                ([f"E^{c}" if c > 1 else "E"] if c else [])
        names.append("*".join(parts) if parts else "1")
    gens = [index[(1, 0, 0)], index[(0, 1, 0)], index[(0, 0, 1)]]
    A = GradedAlgebra(field, degrees, table, to_vec({(0, 0, 0): 1}),
                      generators=gens, names=names)

    def unit_vecs(sel):
        return [to_vec({mo: 1}) for mo in monos if sel(mo)]

    tri = TriangularData(A,
                         unit_vecs(lambda mo: mo[1] == mo[2] == 0),
                         unit_vecs(lambda mo: mo[0] == mo[2] == 0),
                         unit_vecs(lambda mo: mo[0] == mo[1] == 0))
    omega = to_vec({(1, 0, 1): 4, (0, 2, 0): 1, (0, 1, 0): 2, (0, 0, 0): 1})
    return A, tri, omega
