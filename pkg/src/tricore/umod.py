"""Ungraded module machinery over structure-constant algebras.

Used for modules over the degree-zero subalgebra, the truncated
endomorphism algebras and the cover endomorphism algebras: Homs,
radicals, projective covers, minimal resolutions and Ext groups.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .exactla import Matrix, Subspace
from .galg import BasicAlgebraView, SimpleModule, jacobson_radical
from .gmod import intertwiner_basis


class UModule:
    """Left module over a BasicAlgebraView: one action matrix per basis element."""

    def __init__(self, view: BasicAlgebraView, acts: Sequence[Matrix]):
        self.view = view
        self.field = view.field
        self.acts = list(acts)
        self.dim = acts[0].rows if acts else 0

    def act_vec(self, x: Sequence) -> Matrix:
        f = self.field
        m = Matrix.zero(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                m = m.add(self.acts[i].scale(xi))
        return m

    def __repr__(self):
        return f"UModule(dim {self.dim})"


def regular_umodule(view: BasicAlgebraView) -> UModule:
    return UModule(view, [view.left_mult_basis(i) for i in range(view.dim)])


def direct_sum_u(modules: Sequence[UModule]) -> UModule:
    view = modules[0].view
    f = view.field
    n = sum(M.dim for M in modules)
    acts = []
    for i in range(view.dim):
        m = Matrix.zero(f, n, n)
        off = 0
        for M in modules:
            for r in range(M.dim):
                for c in range(M.dim):
                    m.data[off + r][off + c] = M.acts[i].data[r][c]
            off += M.dim
        acts.append(m)
    return UModule(view, acts)


def _pivots(sub: Subspace) -> list[int]:
    return [next(j for j in range(sub.ambient) if sub.basis.data[i][j])
            for i in range(sub.dim)]


def sub_umodule(M: UModule, sub: Subspace, check: bool = True) -> tuple[UModule, Matrix]:
    f = M.field
    piv = _pivots(sub)
    inc = sub.basis.transpose()
    acts = []
    for m in M.acts:
        img = m.mul(inc)
        coords = Matrix(f, [img.data[p] for p in piv], cols=sub.dim)
        if check and inc.mul(coords) != img:
            raise ValueError("subspace not action-invariant")
        acts.append(coords)
    return UModule(M.view, acts), inc


def quotient_umodule(M: UModule, sub: Subspace,
                     check: bool = True) -> tuple[UModule, Matrix]:
    f = M.field
    piv = _pivots(sub)
    pivset = set(piv)
    keep = [j for j in range(M.dim) if j not in pivset]
    proj = Matrix.zero(f, len(keep), M.dim)
    for r, j in enumerate(keep):
        proj.data[r][j] = f.one
        for k, p in enumerate(piv):
            proj.data[r][p] = f.sub(proj.data[r][p], sub.basis.data[k][j])
    inc = Matrix(f, [[f.one if i == j else f.zero for j in keep]
                     for i in range(M.dim)], cols=len(keep))
    acts = []
    for m in M.acts:
        if check and not proj.mul(m.mul(sub.basis.transpose())).is_zero():
            raise ValueError("subspace not action-invariant")
        acts.append(proj.mul(m.mul(inc)))
    return UModule(M.view, acts), proj


def hom_u(M: UModule, N: UModule) -> list[Matrix]:
    """Basis of module morphisms M -> N as dim N x dim M matrices."""
    pairs = [(M.acts[i], N.acts[i], 0) for i in range(M.view.dim)]
    return intertwiner_basis(M.field, pairs, src_dim=M.dim, tgt_dim=N.dim)


class ResolutionContext:
    """Radical, simples and projective covers for one basic algebra.

    ``idempotents`` is a complete orthogonal primitive idempotent list
    tagged by simple labels; simples are given by their action matrices.
    """

    def __init__(self, view: BasicAlgebraView,
                 simples: list[SimpleModule],
                 idempotents: list[tuple[object, list]]):
        self.view = view
        self.field = view.field
        self.simples = simples
        self.idempotents = idempotents
        self.rad = jacobson_radical(view, [sm.acts for sm in simples])
        self._proj: dict[int, tuple[UModule, Matrix]] = {}

    def projective(self, k: int) -> tuple[UModule, Matrix]:
        """Indecomposable projective for idempotent k, with inclusion into the regular module."""
        if k not in self._proj:
            e = self.idempotents[k][1]
            rm = self.view.right_mult(e)
            span = Subspace.from_spanning(
                self.field, self.view.dim,
                [rm.apply(self.view.basis_vector(j)) for j in range(self.view.dim)])
            self._proj[k] = sub_umodule(regular_umodule(self.view), span)
        return self._proj[k]

    def radical_submodule(self, M: UModule) -> Subspace:
        vecs = []
        for x in self.rad.vectors():
            vecs.extend(M.act_vec(x).transpose().data)
        return Subspace.from_spanning(self.field, M.dim, vecs)

    def head_multiplicities(self, M: UModule) -> list[int]:
        """Multiplicity of each simple (idempotent slots collapsed) in M/rad M."""
        radm = self.radical_submodule(M)
        head, _ = quotient_umodule(M, radm)
        out = []
        for lab, e in self.idempotents:
            out.append(head.act_vec(e).rank())
        # one entry per idempotent slot; each counts copies of its simple
        return out

    def cover(self, M: UModule) -> tuple[UModule, Matrix, list[int]]:
        """Projective cover: (P, surjection P -> M, slot multiplicities)."""
        f = self.field
        radm = self.radical_submodule(M)
        head, proj = quotient_umodule(M, radm)
        summands: list[UModule] = []
        maps: list[Matrix] = []
        mults = []
        # one idempotent slot per simple label: dim e*head then equals the
        # head multiplicity and one summand Ce per copy is the minimal cover
        seen: set = set()
        slots = []
        for k, (lab, e) in enumerate(self.idempotents):
            key = lab if not isinstance(lab, list) else tuple(lab)
            if key in seen:
                continue
            seen.add(key)
            slots.append((k, lab, e))
        for k, lab, e in slots:
            # generators of the e-part of the head, lifted to e*M
            em = M.act_vec(e)
            im_head = proj.mul(em)  # head coords of e*M vectors
            chosen: list[list] = []
            span = Subspace.zero(f, head.dim)
            for j in range(M.dim):
                v = em.apply([f.one if t == j else f.zero for t in range(M.dim)])
                hv = proj.apply(v)
                if any(hv) and not span.contains(hv):
                    span = span.add(Subspace.from_spanning(f, head.dim, [hv]))
                    chosen.append(v)
            mults.append(len(chosen))
            P, _ = self.projective(k)
            inc = self._proj[k][1]
            for v in chosen:
                summands.append(P)
                # map P -> M: (c in P coords) -> act(inc c) v
                cols = []
                for t in range(P.dim):
                    c_amb = inc.apply([f.one if u == t else f.zero for u in range(P.dim)])
                    cols.append(M.act_vec(c_amb).apply(v))
                maps.append(Matrix(f, cols, cols=M.dim).transpose())
        if not summands:
            return UModule(self.view, [Matrix.zero(f, 0, 0)] * self.view.dim), \
                Matrix.zero(f, M.dim, 0), mults
        P = direct_sum_u(summands)
        sur = maps[0]
        for m in maps[1:]:
            sur = sur.hstack(m)
        return P, sur, mults

    def resolution(self, M: UModule, length: int) -> list[tuple[UModule, Matrix]]:
        """Minimal projective resolution: [(P_0, d_0: P_0 -> M), (P_1, d_1: P_1 -> ker d_0 in P_0 coords), ...].

        d_i for i >= 1 is a matrix P_i -> P_{i-1}.
        """
        out = []
        current = M
        lift = None  # inclusion of current into previous P
        for step in range(length + 1):
            P, sur, _ = self.cover(current)
            d = sur if lift is None else lift.mul(sur)
            out.append((P, d))
            if P.dim == 0:
                break
            ker = sur.kernel()
            if ker.dim == 0:
                break
            current, inc = sub_umodule(P, ker)
            lift = inc
        return out

    def ext_dims(self, M: UModule, N: UModule, max_i: int) -> list[int]:
        """dim Ext^i(M, N) for 0 <= i <= max_i via Hom(P_*, N)."""
        f = self.field
        res = self.resolution(M, max_i + 1)
        homdims = []
        diffs = []  # matrices Hom(P_{i}, N) -> Hom(P_{i+1}, N)
        hombases = []
        for i, (P, d) in enumerate(res):
            basis = hom_u(P, N)
            hombases.append(basis)
            homdims.append(len(basis))
        for i in range(len(res) - 1):
            d_next = res[i + 1][1]  # P_{i+1} -> P_i
            rows = []
            src = hombases[i]
            tgt = hombases[i + 1]
            tgt_flat = Matrix(f, [[m.data[r][c] for r in range(m.rows)
                                   for c in range(m.cols)] for m in tgt],
                              cols=(tgt[0].rows * tgt[0].cols) if tgt else 0)
            cols = []
            for phi in src:
                comp = phi.mul(d_next)
                flat = [comp.data[r][c] for r in range(comp.rows)
                        for c in range(comp.cols)]
                sol = tgt_flat.transpose().solve(flat) if tgt else []
                if sol is None:
                    raise ValueError("Hom complex expansion failed")
                cols.append(sol)
            diffs.append(Matrix(f, cols, cols=len(tgt)).transpose()
                         if src else Matrix.zero(f, len(tgt), 0))
        out = []
        for i in range(min(max_i, len(res) - 1) + 1):
            if i >= len(res):
                out.append(0)
                continue
            dim_hom = homdims[i]
            # kernel of d_i^* : Hom(P_i,N) -> Hom(P_{i+1},N)
            if i < len(diffs):
                k = diffs[i].kernel().dim
            else:
                k = dim_hom
            if i == 0:
                img = 0
            else:
                img = diffs[i - 1].rank() if i - 1 < len(diffs) else 0
            out.append(k - img)
        while len(out) < max_i + 1:
            out.append(0)
        return out
