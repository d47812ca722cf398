"""Graded modules: standard/costandard/simple/projective modules, Homs,
multiplicities, characters, socles/heads and the head/socle permutations.

Modules are flat: one degree per basis vector plus one action matrix per
algebra basis element.  Shifts relabel degrees; submodules and quotients
ride on the RREF canonical form (pivot coordinates give coordinates for
free).  ``ModuleCategory`` owns the per-algebra caches.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactla import LaurentPoly, Matrix, Subspace
from .galg import (BasicAlgebraView, CheckReport, GradedAlgebra, SimpleModule,
                   TriangularData, ValidationReport, basic_from_subspace,
                   jacobson_radical, lift_idempotents, split_semisimple_simples)


@dataclass(frozen=True, order=True)
class SimpleLabel:
    """Label (tblock, shift) for a graded simple; tblock indexes Irr of T."""
    tblock: int
    shift: int

    @property
    def deg(self) -> int:
        return self.shift

    def shifted(self, n: int) -> "SimpleLabel":
        return SimpleLabel(self.tblock, self.shift + n)

    def __str__(self):
        return f"({self.tblock},{self.shift:+d})"


class GradedModule:
    """Graded left module over a GradedAlgebra.

    ``degrees[j]`` is the degree of the j-th basis vector; ``acts[i]`` is
    the matrix of the i-th algebra basis element, which must shift degree
    by that element's degree.
    """

    def __init__(self, algebra: GradedAlgebra, degrees: Sequence[int],
                 acts: Sequence[Matrix]):
        self.algebra = algebra
        self.field = algebra.field
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        self.acts = list(acts)

    def degree_indices(self, d: int) -> list[int]:
        return [j for j in range(self.dim) if self.degrees[j] == d]

    def support(self) -> list[int]:
        return sorted(set(self.degrees))

    def dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly.from_dict(self.dims())

    def act_vec(self, x: Sequence) -> Matrix:
        """Action matrix of the algebra element with coordinates x."""
        f = self.field
        m = Matrix.zero(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                m = m.add(self.acts[i].scale(xi))
        return m

    def shift(self, n: int) -> "GradedModule":
        """M[n]: same action, all degrees raised by n."""
        if n == 0:
            return self
        return GradedModule(self.algebra, [d + n for d in self.degrees], self.acts)

    def dual_over(self, op_algebra: GradedAlgebra) -> "GradedModule":
        """Dual as a module over the opposite algebra (same basis indexing).

        Degrees are kept: the opposite algebra carries the negated grading,
        which absorbs the usual flip.
        """
        return GradedModule(op_algebra, self.degrees,
                            [m.transpose() for m in self.acts])

    def __repr__(self):
        return f"GradedModule(dim {self.dim}, supp {self.support()})"


def validate_module(M: GradedModule) -> ValidationReport:
    A = M.algebra
    checks = []
    checks.append(CheckReport("unit acts as identity",
                              M.act_vec(A.unit) == Matrix.identity(M.field, M.dim)))
    bad = None
    for i in range(A.dim):
        for r in range(M.dim):
            for c in range(M.dim):
                if M.acts[i].data[r][c] and M.degrees[r] != M.degrees[c] + A.degrees[i]:
                    bad = (i, r, c)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(CheckReport("action degree-homogeneous", bad is None, bad))
    bad = None
    for g in A.generators:
        mg = M.acts[g]
        for j in range(A.dim):
            if M.act_vec(A.table[g][j]) != mg.mul(M.acts[j]):
                bad = (g, j)
                break
        if bad:
            break
    checks.append(CheckReport("action multiplicative", bad is None, bad))
    return ValidationReport(checks)


def regular_module(A: GradedAlgebra) -> GradedModule:
    return GradedModule(A, A.degrees, [A.left_mult_basis(i) for i in range(A.dim)])


def direct_sum(modules: Sequence[GradedModule]) -> GradedModule:
    A = modules[0].algebra
    f = A.field
    degrees: list[int] = []
    for M in modules:
        degrees.extend(M.degrees)
    n = len(degrees)
    acts = []
    for i in range(A.dim):
        m = Matrix.zero(f, n, n)
        off = 0
        for M in modules:
            for r in range(M.dim):
                for c in range(M.dim):
                    m.data[off + r][off + c] = M.acts[i].data[r][c]
            off += M.dim
        acts.append(m)
    return GradedModule(A, degrees, acts)


def _pivots(sub: Subspace) -> list[int]:
    out = []
    for i in range(sub.dim):
        out.append(next(j for j in range(sub.ambient) if sub.basis.data[i][j]))
    return out


def sub_module(M: GradedModule, sub: Subspace,
               check: bool = True) -> tuple[GradedModule, Matrix]:
    """Module structure on an action-invariant graded subspace.

    Returns (module on the RREF basis of ``sub``, inclusion matrix
    ambient x dim).  RREF rows of a graded subspace are homogeneous, so
    degrees read off the pivot coordinates.
    """
    f = M.field
    piv = _pivots(sub)
    for i in range(sub.dim):
        degs = {M.degrees[j] for j, x in enumerate(sub.basis.data[i]) if x}
        if len(degs) != 1:
            raise ValueError("subspace is not graded")
    degrees = [M.degrees[p] for p in piv]
    inc = sub.basis.transpose()  # ambient x k
    acts = []
    for m in M.acts:
        img = m.mul(inc)  # ambient x k
        coords = Matrix(f, [img.data[p] for p in piv], cols=sub.dim)
        if check and inc.mul(coords) != img:
            raise ValueError("subspace not action-invariant")
        acts.append(coords)
    return GradedModule(M.algebra, degrees, acts), inc


def quotient_module(M: GradedModule, sub: Subspace,
                    check: bool = True) -> tuple[GradedModule, Matrix]:
    """Quotient by an action-invariant graded subspace.

    Returns (quotient on the non-pivot coordinates, projection matrix
    dim x ambient).
    """
    f = M.field
    piv = _pivots(sub)
    pivset = set(piv)
    keep = [j for j in range(M.dim) if j not in pivset]
    degrees = [M.degrees[j] for j in keep]
    # v  ->  (v - basis^T * v[pivots]) restricted to non-pivot coordinates
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
    return GradedModule(M.algebra, degrees, acts), proj


# ---------------------------------------------------------------------
# intertwiners
# ---------------------------------------------------------------------

def intertwiner_basis(field, gen_pairs, src_degrees=None, tgt_degrees=None,
                      src_dim=None, tgt_dim=None) -> list[Matrix]:
    """Basis of {X : X s_g = t_g X} for generating action pairs.

    ``gen_pairs`` is a list of (src_act, tgt_act, degree) triples; in the
    graded case (degrees given) only degree-compatible unknowns and
    equations are emitted, which is what keeps large Hom systems viable.
    """
    f = field
    nm = src_dim if src_degrees is None else len(src_degrees)
    nn = tgt_dim if tgt_degrees is None else len(tgt_degrees)
    graded = src_degrees is not None
    if graded:
        allowed = [(r, c) for r in range(nn) for c in range(nm)
                   if tgt_degrees[r] == src_degrees[c]]
    else:
        allowed = [(r, c) for r in range(nn) for c in range(nm)]
    index = {rc: k for k, rc in enumerate(allowed)}
    rows = []
    for sm, tm, d in gen_pairs:
        for r in range(nn):
            for c in range(nm):
                if graded and tgt_degrees[r] != src_degrees[c] + d:
                    continue
                row = [f.zero] * len(allowed)
                hit = False
                for k in range(nm):
                    x = sm.data[k][c]
                    if x and (r, k) in index:
                        ki = index[(r, k)]
                        row[ki] = f.add(row[ki], x)
                        hit = True
                for k in range(nn):
                    x = tm.data[r][k]
                    if x and (k, c) in index:
                        ki = index[(k, c)]
                        row[ki] = f.sub(row[ki], x)
                        hit = True
                if hit:
                    rows.append(row)
    ker = Matrix(f, rows, cols=len(allowed)).kernel()
    out = []
    for v in ker.vectors():
        m = Matrix.zero(f, nn, nm)
        for k, (r, c) in enumerate(allowed):
            m.data[r][c] = v[k]
        out.append(m)
    return out


def hom_graded(M: GradedModule, N: GradedModule) -> list[Matrix]:
    """Basis of graded module morphisms M -> N as dim N x dim M matrices."""
    A = M.algebra
    pairs = [(M.acts[g], N.acts[g], A.degrees[g]) for g in A.generators]
    return intertwiner_basis(A.field, pairs, M.degrees, N.degrees)


# ---------------------------------------------------------------------
# the module category of a triangular graded algebra
# ---------------------------------------------------------------------

class ModuleCategory:
    """Per-algebra construction cache for graded module theory.

    Built from validated (algebra, triangular data).  Simple T-modules are
    enumerated once; all label arithmetic refers to that enumeration.
    """

    def __init__(self, A: GradedAlgebra, tri: TriangularData, seed: int = 0):
        self.A = A
        self.tri = tri
        self.field = A.field
        self.seed = seed
        self.t_view = basic_from_subspace(A, tri.tpart)
        self.t_simples = split_semisimple_simples(self.t_view, seed=seed)
        self._op: Optional[ModuleCategory] = None
        self._delta: dict[int, GradedModule] = {}
        self._nabla: dict[int, GradedModule] = {}
        self._simple: dict[int, GradedModule] = {}
        self._simple_char: dict[int, dict[int, LaurentPoly]] = {}
        self._projective: dict[int, GradedModule] = {}
        self._a0 = None
        self._a0_simples = None
        self._a0_idempotents = None
        self._rad = None

    # -- T data -------------------------------------------------------
    @property
    def n_tblocks(self) -> int:
        return len(self.t_simples)

    def irr_T(self) -> list[SimpleModule]:
        return self.t_simples

    def _embed_t(self, vec: Sequence) -> list:
        """T-view coordinates -> ambient algebra coordinates."""
        f = self.field
        out = [f.zero] * self.A.dim
        for c, b in zip(vec, self.t_view.embedding):
            if c:
                for k in range(self.A.dim):
                    out[k] = f.add(out[k], f.mul(c, b[k]))
        return out

    def t_central_idempotent(self, s: int) -> list:
        return self._embed_t(self.t_simples[s].central_idempotent)

    # -- opposite side ------------------------------------------------
    @property
    def op_category(self) -> "ModuleCategory":
        if self._op is None:
            Aop = self.A.op()
            tri_op = TriangularData(Aop,
                                    [v for _, v in self.tri.plus_basis],
                                    self.tri.tpart.vectors(),
                                    [v for _, v in self.tri.minus_basis])
            self._op = ModuleCategory(Aop, tri_op, seed=self.seed)
            if self._op.n_tblocks != self.n_tblocks:
                raise ValueError("opposite T has a different simple count")
            # tblock alignment: the center is shared, so central idempotents
            # must match index-by-index
            for s in range(self.n_tblocks):
                if self._op.t_central_idempotent(s) != self.t_central_idempotent(s):
                    raise ValueError("opposite T-simples misaligned")
        return self._op

    # -- standard / costandard / simple -------------------------------
    def standard_module(self, lab: SimpleLabel) -> GradedModule:
        """Induced module with head concentrated in degree lab.shift."""
        if lab.tblock not in self._delta:
            self._delta[lab.tblock] = self._build_delta(lab.tblock)
        return self._delta[lab.tblock].shift(lab.shift)

    def _build_delta(self, s: int) -> GradedModule:
        A, tri, f = self.A, self.tri, self.field
        nm, nt, npl = (len(tri.minus_basis), len(tri.t_basis), len(tri.plus_basis))
        c0 = tri.plus_degrees.index(0)
        rho = self.t_simples[s].acts
        dlam = self.t_simples[s].dim
        tri.straighten(A.unit)  # force the cached inverse
        smat = tri._straighten
        fmat = Matrix(f, [v for _, v in tri.minus_basis], cols=A.dim).transpose()
        degrees = [tri.minus_basis[a][0] for a in range(nm) for _ in range(dlam)]
        acts = []
        for i in range(A.dim):
            st = smat.mul(A.left_mult_basis(i).mul(fmat))  # triple coords x nm
            m = Matrix.zero(f, nm * dlam, nm * dlam)
            for a2 in range(nm):
                for b in range(nt):
                    ridx = (a2 * nt + b) * npl + c0
                    rb = rho[b]
                    for a in range(nm):
                        gamma = st.data[ridx][a]
                        if not gamma:
                            continue
                        for s2 in range(dlam):
                            for s1 in range(dlam):
                                x = rb.data[s2][s1]
                                if x:
                                    r, c = a2 * dlam + s2, a * dlam + s1
                                    m.data[r][c] = f.add(m.data[r][c], f.mul(gamma, x))
            acts.append(m)
        return GradedModule(A, degrees, acts)

    def costandard_module(self, lab: SimpleLabel) -> GradedModule:
        """Dual of the standard module over the opposite algebra."""
        if lab.tblock not in self._nabla:
            op = self.op_category
            Mop = op.standard_module(SimpleLabel(lab.tblock, 0))
            self._nabla[lab.tblock] = Mop.dual_over(self.A)
        return self._nabla[lab.tblock].shift(lab.shift)

    def simple_module(self, lab: SimpleLabel) -> GradedModule:
        """Head of the standard module: quotient by the maximal submodule."""
        if lab.tblock not in self._simple:
            delta = self.standard_module(SimpleLabel(lab.tblock, 0))
            nmax = self._max_submodule(delta, top=0)
            L, _ = quotient_module(delta, nmax)
            self._simple[lab.tblock] = L
        return self._simple[lab.tblock].shift(lab.shift)

    def _max_submodule(self, M: GradedModule, top: int) -> Subspace:
        """{v : (A v)_top = 0} for a module generated in its top degree."""
        f = self.field
        rows = []
        top_rows = M.degree_indices(top)
        for i in range(self.A.dim):
            for r in top_rows:
                row = M.acts[i].data[r]
                if any(row):
                    rows.append(row)
        return Matrix(f, rows, cols=M.dim).kernel()

    def r_offset(self, s: int) -> int:
        """Support width of the simple: Supp L(s,0) = [-r, 0]."""
        return -min(self.simple_module(SimpleLabel(s, 0)).support())

    # -- degree-zero subalgebra and projectives ------------------------
    def a0_view(self) -> BasicAlgebraView:
        if self._a0 is None:
            idx0 = self.A.degree_indices(0)
            sub = Subspace.from_spanning(self.field, self.A.dim,
                                         [self.A.basis_vector(i) for i in idx0])
            self._a0 = basic_from_subspace(self.A, sub,
                                           names=[self.A.names[i] for i in idx0])
            self._a0.degree_zero_indices = idx0
        return self._a0

    def a0_simples(self) -> list[SimpleModule]:
        """Simple modules of A_0: degree components of the graded simples.

        The component of L(s,0) in degree -n (0 <= n <= r_s) is the simple
        A_0-module matching the graded simple L(s,n).
        """
        if self._a0_simples is None:
            view = self.a0_view()
            idx0 = view.degree_zero_indices
            out = []
            for s in range(self.n_tblocks):
                L = self.simple_module(SimpleLabel(s, 0))
                for n in range(self.r_offset(s) + 1):
                    comp = L.degree_indices(-n)
                    acts = [L.acts[i].submatrix(comp, comp) for i in idx0]
                    out.append(SimpleModule(SimpleLabel(s, n), acts))
            self._a0_simples = out
        return self._a0_simples

    def a0_idempotents(self) -> dict[SimpleLabel, list[list]]:
        """Primitive idempotents of A_0 embedded in A, grouped by label.

        Each label (s,n) carries dim L(s,n)_0 idempotents; Ae for any of
        them is the projective cover of L(s,n).
        """
        if self._a0_idempotents is None:
            view = self.a0_view()
            simples = self.a0_simples()
            rad0 = jacobson_radical(view, [sm.acts for sm in simples])
            lifted = lift_idempotents(view, rad0, simples)
            grouped: dict[SimpleLabel, list[list]] = {}
            for lab, vec in lifted:
                grouped.setdefault(lab, []).append(self._embed_a0(vec))
            self._a0_idempotents = grouped
        return self._a0_idempotents

    def _embed_a0(self, vec: Sequence) -> list:
        f = self.field
        view = self.a0_view()
        out = [f.zero] * self.A.dim
        for c, i in zip(vec, view.degree_zero_indices):
            out[i] = c
        return out

    def projective_module(self, lab: SimpleLabel) -> GradedModule:
        """Projective cover P(lab) = A e for a lifted idempotent of A_0."""
        if lab.tblock not in self._projective:
            e = self.a0_idempotents()[SimpleLabel(lab.tblock, 0)][0]
            reg = regular_module(self.A)
            rm = self.A.right_mult(e)
            span = Subspace.from_spanning(
                self.field, self.A.dim,
                [rm.apply(self.A.basis_vector(j)) for j in range(self.A.dim)])
            P, _ = sub_module(reg, span)
            self._projective[lab.tblock] = P
        return self._projective[lab.tblock].shift(lab.shift)

    def regular_decomposition(self) -> list[tuple[SimpleLabel, GradedModule]]:
        """A = + P(lab), one summand per lifted primitive idempotent."""
        reg = regular_module(self.A)
        out = []
        for lab in sorted(self.a0_idempotents()):
            for e in self.a0_idempotents()[lab]:
                rm = self.A.right_mult(e)
                span = Subspace.from_spanning(
                    self.field, self.A.dim,
                    [rm.apply(self.A.basis_vector(j)) for j in range(self.A.dim)])
                P, _ = sub_module(reg, span)
                out.append((lab, P))
        return out

    # -- radical, head, socle -----------------------------------------
    def graded_radical(self) -> Subspace:
        """Graded Jacobson radical of A: joint annihilator of the simples."""
        if self._rad is None:
            rows = []
            for s in range(self.n_tblocks):
                L = self.simple_module(SimpleLabel(s, 0))
                for r in range(L.dim):
                    for c in range(L.dim):
                        rows.append([L.acts[i].data[r][c] for i in range(self.A.dim)])
            self._rad = Matrix(self.field, rows, cols=self.A.dim).kernel()
        return self._rad

    def radical_submodule(self, M: GradedModule) -> Subspace:
        vecs = []
        for x in self.graded_radical().vectors():
            act = M.act_vec(x)
            vecs.extend(act.transpose().data)  # columns of act
        return Subspace.from_spanning(self.field, M.dim, vecs)

    def head(self, M: GradedModule) -> GradedModule:
        return quotient_module(M, self.radical_submodule(M))[0]

    def socle(self, M: GradedModule) -> GradedModule:
        rows = []
        for x in self.graded_radical().vectors():
            rows.extend(M.act_vec(x).data)
        ker = Matrix(self.field, rows, cols=M.dim).kernel()
        return sub_module(M, ker)[0]

    def radical_series(self, M: GradedModule) -> list[GradedModule]:
        """Successive semisimple layers M / rad M, rad M / rad^2 M, ..."""
        layers = []
        current = M
        while current.dim:
            r = self.radical_submodule(current)
            layers.append(quotient_module(current, r)[0])
            if r.dim == current.dim:
                raise ValueError("radical series does not terminate")
            if r.dim == 0:
                break
            current = sub_module(current, r)[0]
        return layers

    # -- multiplicities ------------------------------------------------
    def t_character(self, M: GradedModule) -> dict[int, LaurentPoly]:
        """Per-tblock graded T-multiplicity of the components of M."""
        out: dict[int, dict[int, int]] = {s: {} for s in range(self.n_tblocks)}
        eps = [M.act_vec(self.t_central_idempotent(s)) for s in range(self.n_tblocks)]
        for d in M.support():
            comp = M.degree_indices(d)
            for s in range(self.n_tblocks):
                rk = eps[s].submatrix(comp, comp).rank()
                if rk:
                    q, rem = divmod(rk, self.t_simples[s].dim)
                    if rem:
                        raise ValueError("component is not a T-module multiple")
                    out[s][d] = q
        return {s: LaurentPoly.from_dict(d) for s, d in out.items()}

    def simple_character(self, s: int) -> dict[int, LaurentPoly]:
        if s not in self._simple_char:
            self._simple_char[s] = self.t_character(self.simple_module(SimpleLabel(s, 0)))
        return self._simple_char[s]

    def composition_multiplicities(self, M: GradedModule) -> dict[int, LaurentPoly]:
        """Graded [M : L(s, -)] for every tblock s, by character peeling.

        Simple characters are unitriangular in the degree order, so the
        top remaining degree always reads off exact multiplicities.
        """
        remaining = {s: dict(ch.as_dict())
                     for s, ch in self.t_character(M).items()}
        result: dict[int, dict[int, int]] = {s: {} for s in remaining}
        while True:
            tops = [max(d.keys()) for d in remaining.values() if d]
            if not tops:
                break
            dmax = max(tops)
            for s in range(self.n_tblocks):
                c = remaining[s].get(dmax, 0)
                if c < 0:
                    raise ValueError("negative multiplicity during peeling")
                if not c:
                    continue
                result[s][dmax] = c
                for s2, ch in self.simple_character(s).items():
                    tgt = remaining[s2]
                    for e, k in ch.coeffs:
                        tgt[e + dmax] = tgt.get(e + dmax, 0) - c * k
                        if not tgt[e + dmax]:
                            del tgt[e + dmax]
        for d in remaining.values():
            if d:
                raise ValueError("character system inconsistent")
        return {s: LaurentPoly.from_dict(d) for s, d in result.items()}

    def multiplicity(self, M: GradedModule, lab_or_tblock) -> LaurentPoly:
        """Graded composition multiplicity; int coefficient per shift."""
        s = lab_or_tblock.tblock if isinstance(lab_or_tblock, SimpleLabel) \
            else lab_or_tblock
        return self.composition_multiplicities(M)[s]

    def multiplicities_via_hom(self, M: GradedModule) -> dict[int, LaurentPoly]:
        """Independent route: [M : L(s,n)] = dim (e_{(s,0)} M)_n."""
        out = {}
        for s in range(self.n_tblocks):
            e = self.a0_idempotents()[SimpleLabel(s, 0)][0]
            act = M.act_vec(e)
            d: dict[int, int] = {}
            for n in M.support():
                comp = M.degree_indices(n)
                rk = act.submatrix(comp, comp).rank()
                if rk:
                    d[n] = rk
            out[s] = LaurentPoly.from_dict(d)
        return out

    def label_multiset(self, M: GradedModule) -> dict[SimpleLabel, int]:
        """Composition factors as a label -> multiplicity dict."""
        out = {}
        for s, poly in self.multiplicities_via_hom(M).items():
            for n, c in poly.coeffs:
                out[SimpleLabel(s, n)] = c
        return out

    def delta_multiplicities(self, M: GradedModule) -> dict[SimpleLabel, int]:
        """dim Hom(M, costandard(lab)); the standard-filtration multiplicities."""
        out = {}
        lo, hi = min(M.support()), max(M.support()) + self.tri.N
        for s in range(self.n_tblocks):
            for n in range(lo, hi + 1):
                k = len(hom_graded(M, self.costandard_module(SimpleLabel(s, n))))
                if k:
                    out[SimpleLabel(s, n)] = k
        return out

    # -- permutations and self-injectivity ----------------------------
    def _unique_label(self, M: GradedModule, what: str) -> SimpleLabel:
        labs = self.label_multiset(M)
        if len(labs) != 1 or set(labs.values()) != {1}:
            raise ValueError(f"{what} is not simple: {labs}")
        return next(iter(labs))

    def is_self_injective(self) -> bool:
        """Socle of every projective simple, with socle labels a bijection."""
        try:
            perm = self.nakayama_permutation()
        except ValueError:
            return False
        return len({lab.tblock for lab in perm.values()}) == self.n_tblocks

    def nakayama_permutation(self) -> dict[int, SimpleLabel]:
        """s -> label of soc P(s,0)."""
        out = {}
        for s in range(self.n_tblocks):
            soc = self.socle(self.projective_module(SimpleLabel(s, 0)))
            out[s] = self._unique_label(soc, f"soc P({s},0)")
        return out

    def tilting_permutation_h(self) -> dict[int, SimpleLabel]:
        """s -> label of head of costandard(s,0); the inverse of h on labels."""
        out = {}
        for s in range(self.n_tblocks):
            hd = self.head(self.costandard_module(SimpleLabel(s, 0)))
            out[s] = self._unique_label(hd, f"head costandard({s},0)")
        return out
