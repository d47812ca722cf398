"""Graded algebras, triangular decompositions, radicals, idempotents, blocks.

An algebra is given by structure constants on a homogeneous basis.  The
triangular data consists of three graded subalgebras (negative part,
degree-zero part T, positive part) whose product basis straightens every
element; the straightening table is the hot kernel used by module
constructions downstream.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dfield
from typing import Optional, Sequence

import sympy

from .exactla import Field, Matrix, Subspace

DIM_CAP = 4096


@dataclass
class CheckReport:
    name: str
    ok: bool
    witness: object = None

    def __str__(self):
        tag = "pass" if self.ok else "FAIL"
        w = f" ({self.witness})" if (not self.ok and self.witness is not None) else ""
        return f"{self.name}: {tag}{w}"


@dataclass
class ValidationReport:
    checks: list[CheckReport]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


class GradedAlgebra:
    """Finite-dimensional graded algebra by structure constants.

    ``table[i][j]`` is the coordinate vector of e_i * e_j.  ``degrees[i]``
    is the degree of basis element e_i.  ``generators`` (basis indices) is
    an optional hint used to shrink intertwiner systems; it must generate
    A as a unital algebra.
    """

    def __init__(self, field: Field, degrees: Sequence[int],
                 table: Sequence[Sequence[Sequence]], unit: Sequence,
                 generators: Optional[Sequence[int]] = None,
                 names: Optional[Sequence[str]] = None,
                 dim_cap: int = DIM_CAP):
        self.field = field
        self.degrees = tuple(degrees)
        self.dim = len(self.degrees)
        if self.dim > dim_cap:
            raise ValueError(f"algebra dimension {self.dim} exceeds cap {dim_cap}")
        self.table = [[[field.coerce(x) for x in table[i][j]] for j in range(self.dim)]
                      for i in range(self.dim)]
        self.unit = [field.coerce(x) for x in unit]
        self.generators = list(generators) if generators is not None else list(range(self.dim))
        self.names = list(names) if names is not None else [f"e{i}" for i in range(self.dim)]
        self._left = {}
        self._right = {}

    # -- multiplication ----------------------------------------------
    def left_mult_basis(self, i: int) -> Matrix:
        """Matrix of left multiplication by basis element e_i."""
        if i not in self._left:
            self._left[i] = Matrix(
                self.field,
                [[self.table[i][j][k] for j in range(self.dim)] for k in range(self.dim)],
                cols=self.dim)
        return self._left[i]

    def right_mult_basis(self, j: int) -> Matrix:
        if j not in self._right:
            self._right[j] = Matrix(
                self.field,
                [[self.table[i][j][k] for i in range(self.dim)] for k in range(self.dim)],
                cols=self.dim)
        return self._right[j]

    def left_mult(self, x: Sequence) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                m = m.add(self.left_mult_basis(i).scale(xi))
        return m

    def right_mult(self, x: Sequence) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for j, xj in enumerate(x):
            if xj:
                m = m.add(self.right_mult_basis(j).scale(xj))
        return m

    def mul_vec(self, x: Sequence, y: Sequence) -> list:
        return self.left_mult(x).apply(y)

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    # -- grading ------------------------------------------------------
    def degree_indices(self, d: int) -> list[int]:
        return [i for i in range(self.dim) if self.degrees[i] == d]

    def support(self) -> list[int]:
        return sorted(set(self.degrees))

    def component_projection(self, v: Sequence, d: int) -> list:
        z = self.field.zero
        return [x if self.degrees[i] == d else z for i, x in enumerate(v)]

    def op(self) -> "GradedAlgebra":
        """Opposite algebra with reversed grading."""
        table = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return GradedAlgebra(self.field, [-d for d in self.degrees], table,
                             self.unit, generators=self.generators, names=self.names)


def validate_algebra(A: GradedAlgebra) -> ValidationReport:
    checks = []
    f = A.field
    # unit two-sided
    lu, ru = A.left_mult(A.unit), A.right_mult(A.unit)
    ident = Matrix.identity(f, A.dim)
    checks.append(CheckReport("unit", lu == ident and ru == ident))
    # grading of structure constants
    bad = None
    for i in range(A.dim):
        for j in range(A.dim):
            d = A.degrees[i] + A.degrees[j]
            for k, c in enumerate(A.table[i][j]):
                if c and A.degrees[k] != d:
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    checks.append(CheckReport("graded multiplication", bad is None, bad))
    # generator hint actually generates (products of generators + unit span A)
    span = Subspace.from_spanning(f, A.dim, [A.unit] + [A.basis_vector(g) for g in A.generators])
    while True:
        vecs = span.vectors()
        new = list(vecs)
        for g in A.generators:
            lm = A.left_mult_basis(g)
            new.extend(lm.apply(v) for v in vecs)
        grown = Subspace.from_spanning(f, A.dim, new)
        if grown.dim == span.dim:
            break
        span = grown
    gens_span = span.dim == A.dim
    checks.append(CheckReport("generators span", gens_span, span.dim))
    # associativity: L_{g e_j} = L_g L_{e_j} for generators g suffices once
    # products of generators span A; fall back to all pairs otherwise
    bad = None
    first = A.generators if gens_span else range(A.dim)
    for i in first:
        li = A.left_mult_basis(i)
        for j in range(A.dim):
            if A.left_mult(A.table[i][j]) != li.mul(A.left_mult_basis(j)):
                bad = (i, j)
                break
        if bad:
            break
    checks.append(CheckReport("associativity", bad is None, bad))
    return ValidationReport(checks)


class TriangularData:
    """Triangular decomposition data: subspaces for A^-, T, A^+.

    Bases are normalized to be homogeneous, in degree order, with the
    degree-zero basis vector of A^- and A^+ replaced by the unit.
    """

    def __init__(self, A: GradedAlgebra, aminus: Sequence[Sequence],
                 tpart: Sequence[Sequence], aplus: Sequence[Sequence]):
        self.A = A
        f = A.field
        self.aminus = Subspace.from_spanning(f, A.dim, aminus)
        self.tpart = Subspace.from_spanning(f, A.dim, tpart)
        self.aplus = Subspace.from_spanning(f, A.dim, aplus)
        self.minus_basis = self._homogeneous_basis(self.aminus, unit_degree_zero=True)
        self.t_basis = self._homogeneous_basis(self.tpart, unit_degree_zero=False)
        self.plus_basis = self._homogeneous_basis(self.aplus, unit_degree_zero=True)
        self.minus_degrees = [d for d, _ in self.minus_basis]
        self.plus_degrees = [d for d, _ in self.plus_basis]
        self.N = max([d for d in self.plus_degrees], default=0)
        self.Nminus = min([d for d in self.minus_degrees], default=0)
        self._product_matrix = None
        self._straighten = None

    def _homogeneous_basis(self, sub: Subspace, unit_degree_zero: bool):
        """Split an RREF basis by degree; returns [(degree, vector)] sorted."""
        A, f = self.A, self.A.field
        out = []
        for v in sub.vectors():
            degs = {A.degrees[i] for i, x in enumerate(v) if x}
            if len(degs) != 1:
                raise ValueError("subspace basis vector not homogeneous")
            out.append((degs.pop(), v))
        out.sort(key=lambda t: t[0])
        if unit_degree_zero:
            zeros = [i for i, (d, _) in enumerate(out) if d == 0]
            if len(zeros) != 1:
                raise ValueError("degree-zero part of A^+/- is not one-dimensional")
            out[zeros[0]] = (0, list(self.A.unit))
        return out

    # index triples in the order (minus, t, plus)
    def triple_index(self):
        return list(itertools.product(range(len(self.minus_basis)),
                                      range(len(self.t_basis)),
                                      range(len(self.plus_basis))))

    def product_matrix(self, reverse: bool = False) -> Matrix:
        """Columns are products f_a * t_b * e_c (or e_c * t_b * f_a if reversed)."""
        A = self.A
        cols = []
        for a, b, c in self.triple_index():
            fm, tb, ep = self.minus_basis[a][1], self.t_basis[b][1], self.plus_basis[c][1]
            if reverse:
                v = A.mul_vec(ep, A.mul_vec(tb, fm))
            else:
                v = A.mul_vec(fm, A.mul_vec(tb, ep))
            cols.append(v)
        return Matrix(A.field, cols, cols=A.dim).transpose()

    def straighten(self, v: Sequence) -> list:
        """Coordinates of v in the product basis (triple order)."""
        if self._straighten is None:
            pm = self.product_matrix()
            self._product_matrix = pm
            self._straighten = pm.inverse()
        return self._straighten.apply(list(v))


def _closed_under_mult(A: GradedAlgebra, sub: Subspace) -> bool:
    vecs = sub.vectors()
    return all(sub.contains(A.mul_vec(u, v)) for u in vecs for v in vecs)


def _product_span(A: GradedAlgebra, u: Subspace, v: Subspace) -> Subspace:
    vecs = [A.mul_vec(x, y) for x in u.vectors() for y in v.vectors()]
    return Subspace.from_spanning(A.field, A.dim, vecs)


def validate_triangular(A: GradedAlgebra, T: TriangularData,
                        seed: int = 0) -> ValidationReport:
    f = A.field
    checks = []
    # (a) multiplication map is a linear isomorphism
    dims_ok = (len(T.minus_basis) * len(T.t_basis) * len(T.plus_basis) == A.dim)
    rank_ok = dims_ok and T.product_matrix().rank() == A.dim
    checks.append(CheckReport("product map bijective", rank_ok,
                              (len(T.minus_basis), len(T.t_basis), len(T.plus_basis))))
    # (b) supports
    checks.append(CheckReport("Supp A+ nonnegative", all(d >= 0 for d in T.plus_degrees)))
    checks.append(CheckReport("Supp A- nonpositive", all(d <= 0 for d in T.minus_degrees)))
    checks.append(CheckReport("T in degree 0", all(d == 0 for d, _ in T.t_basis)))
    # (c) degree-zero parts of A^+/- are K (normalization raises otherwise)
    checks.append(CheckReport("A+_0 = K = A-_0",
                              T.plus_degrees.count(0) == 1 and T.minus_degrees.count(0) == 1))
    # subalgebras closed, contain unit
    for nm, sub in (("A-", T.aminus), ("T", T.tpart), ("A+", T.aplus)):
        checks.append(CheckReport(f"{nm} closed subalgebra with unit",
                                  sub.contains(A.unit) and _closed_under_mult(A, sub)))
    # (d) A^{+/-} T = T A^{+/-}
    for nm, sub in (("A+", T.aplus), ("A-", T.aminus)):
        lhs = _product_span(A, sub, T.tpart)
        rhs = _product_span(A, T.tpart, sub)
        checks.append(CheckReport(f"{nm}T = T{nm}", lhs == rhs))
    # (e) T split semisimple
    try:
        tview = basic_from_subspace(A, T.tpart)
        simples = split_semisimple_simples(tview, seed=seed)
        ss = sum(s.dim * s.dim for s in simples) == tview.dim
        checks.append(CheckReport("T split semisimple", ss, len(simples)))
    except NotSplitError as exc:
        checks.append(CheckReport("T split semisimple", False, str(exc)))
    return ValidationReport(checks)


def check_ambidextrous(A: GradedAlgebra, T: TriangularData) -> bool:
    return T.product_matrix(reverse=True).rank() == A.dim


def check_well_generated(A: GradedAlgebra, T: TriangularData) -> bool:
    f = A.field
    for basis, sign in ((T.plus_basis, 1), (T.minus_basis, -1)):
        target = Subspace.from_spanning(f, A.dim, [v for _, v in basis])
        deg1 = [v for d, v in basis if d == sign]
        span = Subspace.from_spanning(f, A.dim, [A.unit] + deg1)
        while True:
            new = span.vectors() + [A.mul_vec(v, g) for v in span.vectors() for g in deg1]
            grown = Subspace.from_spanning(f, A.dim, new)
            if grown.dim == span.dim:
                break
            span = grown
        if span != target:
            return False
    return True


@dataclass
class TraceForm:
    phi: list  # covector coordinates
    symmetric: bool
    nondegenerate: bool
    degree_zero: bool

    def value(self, A: GradedAlgebra, v: Sequence):
        f = A.field
        s = f.zero
        for c, x in zip(self.phi, v):
            s = f.add(s, f.mul(c, x))
        return s


def check_graded_symmetric(A: GradedAlgebra, tau: Optional["AntiInvolution"] = None,
                           seed: int = 0, trials: int = 8) -> Optional[TraceForm]:
    """Search for a nondegenerate symmetric trace form supported in degree 0.

    When ``tau`` is given, tau-invariance is imposed as an extra linear
    condition (needed by the cell-datum construction).
    """
    f = A.field
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            d = [f.sub(a, b) for a, b in zip(A.table[i][j], A.table[j][i])]
            if any(d):
                rows.append(d)
    for k in range(n):
        if A.degrees[k] != 0:
            r = [f.zero] * n
            r[k] = f.one
            rows.append(r)
    if tau is not None:
        tt = tau.matrix.transpose()
        for i in range(n):
            r = tt.row(i)
            r[i] = f.sub(r[i], f.one)
            rows.append(r)
    sol = Matrix(f, rows, cols=n).kernel() if rows else Subspace.full(f, n)
    candidates = sol.vectors()
    import random
    rng = random.Random(seed)
    for _ in range(trials):
        if sol.dim:
            coeffs = [f.coerce(rng.randrange(1, 7)) for _ in range(sol.dim)]
            v = [f.zero] * n
            for c, b in zip(coeffs, sol.vectors()):
                for k in range(n):
                    v[k] = f.add(v[k], f.mul(c, b[k]))
            candidates.append(v)
    for phi in candidates:
        gram = Matrix(f, [[_apply_cov(f, phi, A.table[i][j]) for j in range(n)]
                          for i in range(n)], cols=n)
        if gram.rank() == n:
            return TraceForm(phi, True, True, True)
    return None


def _apply_cov(f: Field, phi: Sequence, v: Sequence):
    s = f.zero
    for c, x in zip(phi, v):
        s = f.add(s, f.mul(c, x))
    return s


def socle_support_check(A: GradedAlgebra, T: TriangularData, side: str) -> bool:
    """Socle of A^{side} as a module over itself equals its extreme piece."""
    basis = T.plus_basis if side == "+" else T.minus_basis
    f = A.field
    nz = [v for d, v in basis if d != 0]
    sub = Subspace.from_spanning(f, A.dim, [v for _, v in basis])
    socle = sub
    for g in nz:
        lm = A.left_mult(g)
        rows = [lm.apply(v) for v in sub.vectors()]
        ker_coeffs = Matrix(f, rows, cols=A.dim).transpose().kernel()
        vecs = []
        for kv in ker_coeffs.vectors():
            w = [f.zero] * A.dim
            for c, bvec in zip(kv, sub.vectors()):
                for k in range(A.dim):
                    w[k] = f.add(w[k], f.mul(c, bvec[k]))
            vecs.append(w)
        socle = socle.intersect(Subspace.from_spanning(f, A.dim, vecs))
    ext = max(d for d, _ in basis) if side == "+" else min(d for d, _ in basis)
    top = Subspace.from_spanning(f, A.dim, [v for d, v in basis if d == ext])
    return socle == top


@dataclass
class AntiInvolution:
    matrix: Matrix

    def apply(self, v: Sequence) -> list:
        return self.matrix.apply(list(v))


def validate_anti_involution(A: GradedAlgebra, T: TriangularData,
                             tau: AntiInvolution) -> ValidationReport:
    f = A.field
    checks = []
    m = tau.matrix
    checks.append(CheckReport("tau involutive", m.mul(m) == Matrix.identity(f, A.dim)))
    bad = None
    for i in range(A.dim):
        ti = tau.apply(A.basis_vector(i))
        for j in range(A.dim):
            lhs = tau.apply(A.table[i][j])
            rhs = A.mul_vec(tau.apply(A.basis_vector(j)), ti)
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    checks.append(CheckReport("tau anti-multiplicative", bad is None, bad))
    deg_ok = all(
        not c or A.degrees[k] == -A.degrees[j]
        for j in range(A.dim) for k, c in enumerate(m.col(j)))
    checks.append(CheckReport("tau degree-negating", deg_ok))
    tplus = Subspace.from_spanning(f, A.dim, [tau.apply(v) for v in T.aplus.vectors()])
    tminus = Subspace.from_spanning(f, A.dim, [tau.apply(v) for v in T.aminus.vectors()])
    tt = Subspace.from_spanning(f, A.dim, [tau.apply(v) for v in T.tpart.vectors()])
    checks.append(CheckReport("tau swaps A+ and A-", tplus == T.aminus and tminus == T.aplus))
    checks.append(CheckReport("tau fixes T", tt == T.tpart))
    return ValidationReport(checks)


# ---------------------------------------------------------------------
# ungraded basic-algebra layer (A_0, T, C_d, B_l)
# ---------------------------------------------------------------------

class NotSplitError(Exception):
    pass


class BasicAlgebraView:
    """Ungraded finite-dimensional algebra by structure constants.

    ``idempotents`` optionally records a distinguished complete orthogonal
    idempotent list (label, coordinate vector).
    """

    def __init__(self, field: Field, table, unit,
                 idempotents: Optional[list[tuple[object, list]]] = None,
                 names: Optional[Sequence[str]] = None):
        self.field = field
        self.dim = len(unit)
        self.table = table
        self.unit = list(unit)
        self.idempotents = idempotents
        self.names = list(names) if names is not None else [f"b{i}" for i in range(self.dim)]
        self._left = {}
        self._right = {}

    def left_mult_basis(self, i: int) -> Matrix:
        if i not in self._left:
            self._left[i] = Matrix(
                self.field,
                [[self.table[i][j][k] for j in range(self.dim)] for k in range(self.dim)],
                cols=self.dim)
        return self._left[i]

    def right_mult_basis(self, j: int) -> Matrix:
        if j not in self._right:
            self._right[j] = Matrix(
                self.field,
                [[self.table[i][j][k] for i in range(self.dim)] for k in range(self.dim)],
                cols=self.dim)
        return self._right[j]

    def left_mult(self, x: Sequence) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                m = m.add(self.left_mult_basis(i).scale(xi))
        return m

    def right_mult(self, x: Sequence) -> Matrix:
        m = Matrix.zero(self.field, self.dim, self.dim)
        for j, xj in enumerate(x):
            if xj:
                m = m.add(self.right_mult_basis(j).scale(xj))
        return m

    def mul_vec(self, x, y) -> list:
        return self.left_mult(x).apply(y)

    def basis_vector(self, i: int) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def op(self) -> "BasicAlgebraView":
        table = [[self.table[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return BasicAlgebraView(self.field, table, self.unit, names=self.names)

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(i + 1, self.dim))


def basic_from_subspace(A, sub: Subspace, names=None) -> BasicAlgebraView:
    """Subalgebra of A (GradedAlgebra or BasicAlgebraView) on an RREF basis."""
    f = A.field
    vecs = sub.vectors()
    n = len(vecs)
    table = []
    for u in vecs:
        row = []
        for v in vecs:
            c = sub.coords(A.mul_vec(u, v))
            if c is None:
                raise ValueError("subspace not closed under multiplication")
            row.append(c)
        table.append(row)
    unit = sub.coords(A.unit if isinstance(A, GradedAlgebra) else A.unit)
    if unit is None:
        raise ValueError("unit not in subspace")
    view = BasicAlgebraView(f, table, unit, names=names)
    view.embedding = vecs  # coordinates in the ambient algebra
    return view


def jacobson_radical(B: BasicAlgebraView,
                     simples: Optional[list[list[Matrix]]] = None,
                     cross_check: bool = True) -> Subspace:
    """Jacobson radical of B.

    With a complete simple-module list (action matrices per basis element)
    the radical is the kernel of the action map.  Otherwise the trace-form
    kernel is used, which is valid over Q and over F_p with p > dim B.
    """
    f = B.field
    via_simples = None
    if simples is not None:
        rows = []
        for acts in simples:
            d = acts[0].rows
            for r in range(d):
                for c in range(d):
                    rows.append([acts[i].data[r][c] for i in range(B.dim)])
        via_simples = Matrix(f, rows, cols=B.dim).kernel()
    via_trace = None
    if not f.is_prime_field or f.p > B.dim:
        lm = [B.left_mult_basis(i) for i in range(B.dim)]
        gram = []
        for i in range(B.dim):
            gram.append([_trace(lm[i].mul(lm[j])) for j in range(B.dim)])
        via_trace = Matrix(f, gram, cols=B.dim).kernel()
    if via_simples is not None and via_trace is not None and cross_check:
        if via_simples != via_trace:
            raise ValueError("radical cross-check failed (simples vs trace form)")
    rad = via_simples if via_simples is not None else via_trace
    if rad is None:
        raise ValueError("radical over small F_p requires the simple-module list")
    return rad


def _trace(m: Matrix):
    f = m.field
    s = f.zero
    for i in range(m.rows):
        s = f.add(s, m.data[i][i])
    return s


@dataclass
class SimpleModule:
    """Simple module over a BasicAlgebraView with explicit action."""
    label: object
    acts: list[Matrix]  # one per algebra basis element
    central_idempotent: Optional[list] = None  # when cut out of the center

    @property
    def dim(self) -> int:
        return self.acts[0].rows


def _min_poly(f: Field, action: Matrix) -> list:
    """Monic minimal polynomial coefficients (low to high) of a matrix."""
    n = action.rows
    powers = [Matrix.identity(f, n)]
    while True:
        flat = Matrix(f, [[m.data[i][j] for i in range(n) for j in range(n)]
                          for m in powers], cols=n * n)
        # solve c_0 I + ... + c_{k-1} M^{k-1} = M^k
        target = powers[-1].mul(action)
        tvec = [target.data[i][j] for i in range(n) for j in range(n)]
        sol = flat.transpose().solve(tvec)
        if sol is not None:
            return [f.neg(c) for c in sol] + [f.one]
        powers.append(target)


def _factor_roots(f: Field, coeffs: list) -> Optional[list]:
    """Roots of a squarefree split polynomial; None when it does not split."""
    x = sympy.Symbol("x")
    if f.is_prime_field:
        poly = sympy.Poly([int(c) for c in reversed(coeffs)], x, modulus=f.p)
    else:
        poly = sympy.Poly([sympy.Rational(c) for c in reversed(coeffs)], x)
    roots = []
    for fac, mult in poly.factor_list()[1]:
        if fac.degree() != 1:
            return None
        a, b = fac.all_coeffs() if len(fac.all_coeffs()) == 2 else (fac.all_coeffs()[0], 0)
        root = -sympy.Rational(b, a) if not f.is_prime_field else \
            (-int(b) * pow(int(a), -1, f.p)) % f.p
        for _ in range(mult):
            roots.append(f.coerce(root if not f.is_prime_field else int(root)))
    return roots


def split_semisimple_simples(B: BasicAlgebraView, seed: int = 0) -> list[SimpleModule]:
    """Complete simple-module list of a split semisimple algebra.

    Splits the center into eigenspaces of its elements (minimal polynomials
    must factor linearly — otherwise NotSplitError), then extracts one
    minimal left ideal per central block.
    """
    f = B.field
    n = B.dim
    center = Matrix(f, list(_stack_diffs(B)), cols=n).kernel()
    # split the center simultaneously by its basis elements
    components = [center]
    for z in center.vectors():
        lz = B.left_mult(z)
        new_components = []
        for comp in components:
            cv = comp.vectors()
            if len(cv) == 1:
                new_components.append(comp)
                continue
            basis_m = Matrix(f, cv, cols=n).transpose()
            act = _restrict(lz, comp)
            mp = _min_poly(f, act)
            roots = _factor_roots(f, mp)
            if roots is None:
                raise NotSplitError("central element with non-split minimal polynomial")
            for r in sorted(set(roots), key=lambda t: str(t)):
                shifted = act.sub(Matrix.identity(f, act.rows).scale(r))
                eig = shifted.kernel()
                vecs = [basis_m.apply(u) for u in eig.vectors()]
                if vecs:
                    new_components.append(Subspace.from_spanning(f, n, vecs))
        components = new_components
    # each component is spanned by one central primitive idempotent
    simples = []
    for k, comp in enumerate(components):
        if comp.dim != 1:
            raise NotSplitError("center did not split into lines")
        z = comp.vectors()[0]
        # normalize to an idempotent: z^2 = c z
        z2 = B.mul_vec(z, z)
        cc = comp.coords(z2)
        if cc is None or not cc[0]:
            raise NotSplitError("central component not semisimple")
        e = [f.div(x, cc[0]) for x in z]
        block = B.left_mult(e).image()
        ideal = _minimal_left_ideal(B, block)
        acts = [_restrict(B.left_mult_basis(i), ideal) for i in range(n)]
        sm = SimpleModule(k, acts, central_idempotent=e)
        # splitness: End = K
        if _endo_dim(f, acts) != 1:
            raise NotSplitError("simple with non-trivial endomorphism algebra")
        simples.append(sm)
    return simples


def _stack_diffs(B: BasicAlgebraView):
    n = B.dim
    for i in range(n):
        d = B.left_mult_basis(i).sub(B.right_mult_basis(i))
        for r in range(n):
            yield d.data[r]


def _restrict(m: Matrix, sub: Subspace) -> Matrix:
    """Matrix of m restricted to an invariant subspace, in its basis coords."""
    f = m.field
    basis_m = Matrix(f, sub.vectors(), cols=sub.ambient).transpose()
    cols = []
    for v in sub.vectors():
        w = m.apply(v)
        c = sub.coords(w)
        if c is None:
            raise ValueError("subspace not invariant")
        cols.append(c)
    return Matrix(f, cols, cols=sub.dim).transpose() if sub.dim else Matrix.zero(f, 0, 0)


def _minimal_left_ideal(B: BasicAlgebraView, block: Subspace) -> Subspace:
    current = block
    improved = True
    while improved:
        improved = False
        for v in current.vectors():
            ideal = Subspace.from_spanning(
                B.field, B.dim, [B.mul_vec(B.basis_vector(i), v) for i in range(B.dim)])
            if 0 < ideal.dim < current.dim:
                current = ideal
                improved = True
                break
    return current


def _endo_dim(f: Field, acts: list[Matrix]) -> int:
    d = acts[0].rows
    rows = []
    for m in acts:
        # X m - m X = 0, unknowns X (d x d)
        for i in range(d):
            for j in range(d):
                row = [f.zero] * (d * d)
                for k in range(d):
                    row[i * d + k] = f.add(row[i * d + k], m.data[k][j])
                    row[k * d + j] = f.sub(row[k * d + j], m.data[i][k])
                rows.append(row)
    return Matrix(f, rows, cols=d * d).kernel().dim


def lift_idempotents(B: BasicAlgebraView,
                     rad: Subspace,
                     simples: list[SimpleModule]) -> list[tuple[object, list]]:
    """Complete orthogonal primitive idempotent list lifting B/rad = + End(S).

    One idempotent per (simple, diagonal slot); each is tagged with the
    simple's label.
    """
    f = B.field
    n = B.dim
    rows = []
    for sm in simples:
        d = sm.dim
        for r in range(d):
            for c in range(d):
                rows.append([sm.acts[i].data[r][c] for i in range(n)])
    phi = Matrix(f, rows, cols=n)
    if phi.rank() != n - rad.dim:
        raise ValueError("simple list does not match the semisimple quotient")
    out: list[tuple[object, list]] = []
    total = [f.zero] * n
    offset = 0
    for sm in simples:
        d = sm.dim
        for slot in range(d):
            target = [f.zero] * phi.rows
            target[offset + slot * d + slot] = f.one
            e = phi.solve(target)
            if e is None:
                raise ValueError("semisimple quotient not split as expected")
            # orthogonalize against the accepted sum, then Newton to idempotency
            e = _orthogonalize(B, e, total)
            e = _newton_idempotent(B, e)
            e = _orthogonalize(B, e, total)
            e = _newton_idempotent(B, e)
            total = [f.add(a, b) for a, b in zip(total, e)]
            out.append((sm.label, e))
        offset += d * d
    if total != B.unit:
        raise ValueError("idempotents do not sum to the unit")
    return out


def _newton_idempotent(B: BasicAlgebraView, e: list) -> list:
    f = B.field
    for _ in range(64):
        e2 = B.mul_vec(e, e)
        if e2 == e:
            return e
        e3 = B.mul_vec(e2, e)
        e = [f.sub(f.mul(f.coerce(3), a), f.mul(f.coerce(2), b)) for a, b in zip(e2, e3)]
    raise ValueError("idempotent iteration did not converge")


def _orthogonalize(B: BasicAlgebraView, e: list, accepted_sum: list) -> list:
    f = B.field
    one_minus = [f.sub(u, s) for u, s in zip(B.unit, accepted_sum)]
    return B.mul_vec(one_minus, B.mul_vec(e, one_minus))


@dataclass
class Block:
    labels: list  # labels of member idempotents
    members: list[int]  # indices into the idempotent list
    central_idempotent: list
    subspace: Subspace


def block_decomposition(B: BasicAlgebraView,
                        idems: list[tuple[object, list]]) -> list[Block]:
    f = B.field
    k = len(idems)
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for i in range(k):
        for j in range(i + 1, k):
            ei, ej = idems[i][1], idems[j][1]
            li = B.left_mult(ei)
            rj = B.right_mult(ej)
            if any(any(li.apply(rj.apply(B.basis_vector(b)))) for b in range(B.dim)) or \
               any(any(B.left_mult(ej).apply(B.right_mult(ei).apply(B.basis_vector(b))))
                   for b in range(B.dim)):
                union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    blocks = []
    for members in groups.values():
        c = [f.zero] * B.dim
        for m in members:
            c = [f.add(a, b) for a, b in zip(c, idems[m][1])]
        proj = B.left_mult(c).mul(B.right_mult(c))
        sub = Subspace.from_spanning(f, B.dim,
                                     [proj.apply(B.basis_vector(b)) for b in range(B.dim)])
        blocks.append(Block([idems[m][0] for m in members], members, c, sub))
    blocks.sort(key=lambda b: sorted(map(str, b.labels)))
    return blocks
