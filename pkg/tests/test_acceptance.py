"""Acceptance gate: nine end-to-end criteria, one pass/fail line each.

Each test prints ``CRITERION k: PASS`` (or FAIL) and asserts the full set of
facts behind that line.  Golden values are frozen from independent hand
computation on the worked examples.
"""
import random
import time
from fractions import Fraction

import pytest

from tricore import core as core_mod
from tricore import cover as cover_mod
from tricore.exactla import QQ
from tricore.families import VariableSpec, build_truncated_poly
from tricore.galg import block_decomposition, check_graded_symmetric, \
    jacobson_radical
from tricore.gmod import ModuleCategory, SimpleLabel, hom_graded, \
    quotient_module, regular_module
from tricore.umod import UModule


def _line(k: int, ok: bool) -> None:
    print(f"CRITERION {k}: {'PASS' if ok else 'FAIL'}")
    assert ok


# ---------------------------------------------------------------------
# 1. golden dimensions for K[x,y]/(x^2,y^2)
# ---------------------------------------------------------------------

def test_criterion_1(xy):
    _, _, _, ctx = xy
    ok = ctx.a0_view().dim == 2
    C = cover_mod.CoverAlgebra(ctx, 1)
    ok &= C.dim == 5
    qp = cover_mod.quiver_presentation(C)
    ok &= len(qp.arrows) == 2
    ok &= {(a.src, a.tgt) for a in qp.arrows} == {(0, 1), (1, 0)}
    # single relation: the loop at vertex 0 (composite through vertex 1)
    ok &= len(qp.relations) == 1
    nz = [p for c, p in zip(qp.relations[0], qp.paths) if c]
    ok &= len(nz) == 1 and len(nz[0]) == 2
    # B_0 = degree-zero endomorphisms of A identifies with the opposite core
    bij, _, anti = cover_mod.b0_identification(ctx)
    ok &= bij and anti
    for ell in range(4):
        ok &= cover_mod.BellAlgebra(ctx, ell).dim == 4 * ell + 2
    _line(1, ok)


# ---------------------------------------------------------------------
# 2. golden dimensions for K[x,y]/(x^3,y^3), d = 2
# ---------------------------------------------------------------------

def test_criterion_2(x3y3):
    _, _, _, ctx = x3y3
    C = cover_mod.CoverAlgebra(ctx, 2)
    ok = C.dim == 14
    qp = cover_mod.quiver_presentation(C)
    # vertices in degree order 0,1,2; find the two-step loops
    def loops_at(v):
        out = []
        for ip, p in enumerate(qp.paths):
            if len(p) != 2:
                continue
            a1, a2 = qp.arrows[p[0]], qp.arrows[p[1]]
            if a1.src == v and a2.tgt == v:
                out.append(ip)
        return out
    idx = {lab: i for i, lab in enumerate(qp.vertices)}
    top = idx[SimpleLabel(0, 2)]
    mid = idx[SimpleLabel(0, 1)]
    loop_top = loops_at(top)
    loop_mid = loops_at(mid)
    ok &= len(loop_top) == 1 and len(loop_mid) == 2
    npaths = len(qp.paths)
    one, zero = QQ.one, QQ.zero
    cand_pure = [zero] * npaths
    cand_pure[loop_top[0]] = one
    cand_eq = [zero] * npaths
    cand_eq[loop_mid[0]] = one
    cand_eq[loop_mid[1]] = QQ.neg(one)
    # the pure loop at the top vertex vanishes; the two loops at the middle
    # vertex agree -- checked by two-way ideal membership
    ok &= cover_mod.relations_equivalent(qp, C, [cand_pure, cand_eq])
    _line(2, ok)


# ---------------------------------------------------------------------
# 3. Ext tables for C_1 and C_2
# ---------------------------------------------------------------------

def test_criterion_3(xy, x3y3):
    _, _, _, ctx = xy
    C1 = cover_mod.CoverAlgebra(ctx, 1)
    expected = {
        (0, 0): [1, 0, 0],
        (0, 1): [1, 1, 0],
        (1, 0): [0, 1, 0],
        (1, 1): [0, 0, 1],
    }
    ok = True
    for (j, k), want in expected.items():
        L = C1.simple_umodule(SimpleLabel(0, j))
        D = C1.quotient_module(ctx.standard_module(SimpleLabel(0, k)))
        ok &= C1.rc.ext_dims(L, D, 2) == want
    # five nonzero one-dimensional groups in total, everything else zero
    total = sum(sum(C1.rc.ext_dims(C1.simple_umodule(SimpleLabel(0, j)),
                                   C1.quotient_module(
                                       ctx.standard_module(SimpleLabel(0, k))),
                                   2))
                for j in range(2) for k in range(2))
    ok &= total == 5

    _, _, _, ctx2 = x3y3
    C2 = cover_mod.CoverAlgebra(ctx2, 2)
    F = cover_mod.cover_functor(ctx2, 2, cover=C2)
    killed = F.killed_labels()
    ok &= len(killed) == 2
    for lab in killed:
        L = C2.simple_umodule(lab)
        for k, _idem in enumerate(C2.idempotents):
            P, _ = C2.rc.projective(k)
            ok &= C2.rc.ext_dims(L, P, 1) == [0, 0]
    _line(3, ok)


# ---------------------------------------------------------------------
# 4. cover verdicts for K[x,y]/(x^2,y^2) at d = 1
# ---------------------------------------------------------------------

def test_criterion_4(xy):
    _, _, _, ctx = xy
    ok = cover_mod.double_centralizer_check(ctx, 1)
    rep = cover_mod.faithfulness_report(ctx, 1)
    ok &= rep.minus_one_faithful and rep.cover_property and not rep.zero_faithful
    _line(4, ok)


# ---------------------------------------------------------------------
# 5. core of the restricted enveloping algebra of sl2 at p = 3
# ---------------------------------------------------------------------

def test_criterion_5(sl2):
    t0 = time.time()
    _, _, _, ctx = sl2
    view = ctx.a0_view()
    ok = view.dim == 9
    idem = ctx.a0_idempotents()
    flat = [(lab, [e[i] for i in view.degree_zero_indices])
            for lab, es in sorted(idem.items()) for e in es]
    blocks = block_decomposition(view, flat)
    # K^3 x (K[t]/t^2)^3: three one-dimensional and three local two-dimensional
    # block algebras (total 9 = dim of the core)
    ok &= sorted(b.subspace.dim for b in blocks) == [1, 1, 1, 2, 2, 2]
    pack = core_mod.matrices(ctx)
    ok &= pack.rank_one
    ok &= any(len(b) >= 2 for b in pack.blocks)
    ok &= pack.verdict == "NOT cellular"
    ok &= time.time() - t0 < 60
    _line(5, ok)


# ---------------------------------------------------------------------
# 6. the three-variable example without a graded symmetric form
# ---------------------------------------------------------------------

def test_criterion_6(xyz):
    A, tri, _, ctx = xyz
    ok = check_graded_symmetric(A, seed=0, trials=32) is None
    view = ctx.a0_view()
    ok &= view.dim == 3
    names = [A.names[i] for i in view.degree_zero_indices]
    rad = jacobson_radical(view, [sm.acts for sm in ctx.a0_simples()])
    ok &= rad.dim == 2
    spanned = {names[j] for v in rad.vectors() for j, x in enumerate(v) if x}
    ok &= spanned == {"x*y", "x*z"}
    # socle of the regular core module = annihilator of the radical
    from tricore.exactla import Matrix
    rows = []
    for r in rad.vectors():
        rows.extend(view.left_mult(r).data)
    soc = Matrix(view.field, rows, cols=view.dim).kernel()
    ok &= soc.dim == 2  # non-simple: the local core is not self-injective
    _line(6, ok)


# ---------------------------------------------------------------------
# 7 + 8. randomized formula suite and oracle equivalence
# ---------------------------------------------------------------------

def _random_algebras():
    """>= 10 graded symmetric truncated polynomial algebras, mirrored
    variable pairs so the socle sits in degree zero."""
    out = []
    for seed in range(10):
        rng = random.Random(100 + seed)
        while True:
            npairs = rng.choice([1, 1, 2])
            specs = []
            dim = 1
            for i in range(npairs):
                a = rng.choice([1, 2])
                b = rng.choice([2, 3])
                specs.append(VariableSpec(f"x{i}", -a, b))
                specs.append(VariableSpec(f"y{i}", a, b))
                dim *= b * b
            if dim <= 40:
                break
        A, tri, tau = build_truncated_poly(specs)
        out.append((specs, A, tri, tau, ModuleCategory(A, tri)))
    return out


SUITE = None


def _suite():
    global SUITE
    if SUITE is None:
        SUITE = _random_algebras()
    return SUITE


def _random_quotients(ctx, seed, count=2):
    """Small random graded quotient modules of the regular module."""
    from tricore.exactla import Subspace
    rng = random.Random(seed)
    f = ctx.field
    reg = regular_module(ctx.A)
    out = []
    for _ in range(count):
        v = [f.coerce(rng.randrange(-2, 3)) for _ in range(reg.dim)]
        vecs = [reg.acts[i].apply(v) for i in range(ctx.A.dim)]
        sub = Subspace.from_spanning(f, reg.dim, vecs)
        if 0 < sub.dim < reg.dim:
            Q, _ = quotient_module(reg, sub, check=False)
            out.append(Q)
    return out


def _radical_series_multiset(ctx, M):
    """Composition factors by brute force: decompose every semisimple
    radical layer through graded Hom spaces from the simples."""
    out = {}
    for layer in ctx.radical_series(M):
        if layer.dim == 0:
            continue
        supp = layer.support()
        for s in range(ctx.n_tblocks):
            r = ctx.r_offset(s)
            for n in range(min(supp), max(supp) + r + 1):
                L = ctx.simple_module(SimpleLabel(s, n))
                k = len(hom_graded(L, layer))
                if k:
                    lab = SimpleLabel(s, n)
                    out[lab] = out.get(lab, 0) + k
    return out


def test_criterion_7():
    ok = True
    for specs, A, tri, tau, ctx in _suite():
        width = min(tri.N, -tri.Nminus) + 1
        sd = core_mod.standard_datum(ctx)
        ok &= len(sd.poset) == ctx.n_tblocks * width
        for lab in sd.poset:
            dim_lam = ctx.t_simples[lab.tblock].dim
            ok &= sd.f_dims[lab] == dim_lam * sum(
                1 for d in tri.plus_degrees if d == lab.shift)
            ok &= sd.g_dims[lab] == dim_lam * sum(
                1 for d in tri.minus_degrees if d == -lab.shift)
            ok &= ctx.standard_module(lab).dim == dim_lam * len(tri.minus_basis)
        ok &= sum(sd.f_dims[l] * sd.g_dims[l] for l in sd.poset) == \
            ctx.a0_view().dim
        # costandard multiplicity in A = standard multiplicity in the
        # opposite algebra, at the label twisted by the socle degree
        op = ctx.op_category
        regA = regular_module(A)
        regO = regular_module(op.A)
        w = tri.N + tri.Nminus
        for s in range(ctx.n_tblocks):
            for n in range(tri.Nminus - 1, tri.N + 2):
                lhs = len(hom_graded(ctx.standard_module(SimpleLabel(s, n)),
                                     regA))
                rhs = len(hom_graded(regO,
                                     op.costandard_module(SimpleLabel(s, n - w))))
                ok &= lhs == rhs
        pack = core_mod.matrices(ctx)
        if pack.bgg:
            ok &= pack.factorization
        for c in core_mod.cell_modules(ctx, sd):
            rank = c.gram.rank() if c.gram is not None else 0
            ok &= rank == core_mod.regular_tilting_multiplicity(ctx, c.label)
        ok &= core_mod.core_is_semisimple(ctx) == \
            core_mod.algebra_is_semisimple(ctx)
        for seed in (1, 2):
            rd = core_mod.standard_datum(ctx, seed=seed, randomize=True)
            ok &= core_mod.verify_standard_datum(ctx, rd).ok
    _line(7, ok)


def test_criterion_8():
    ok = True
    for i, (specs, A, tri, tau, ctx) in enumerate(_suite()):
        mods = [regular_module(A)]
        mods += [ctx.standard_module(l) for l in core_mod.datum_poset(ctx)]
        mods += _random_quotients(ctx, seed=7 * i + 1)
        for M in mods:
            if M.dim > 20:
                continue
            peel = ctx.label_multiset(M)
            peel2 = {}
            for s, poly in ctx.composition_multiplicities(M).items():
                for n, c in poly.coeffs:
                    peel2[SimpleLabel(s, n)] = c
            brute = _radical_series_multiset(ctx, M)
            ok &= peel == brute == peel2
            # graded bridge: the coefficient at each shift equals the
            # degree-component multiplicity over the core
            idem = ctx.a0_idempotents()
            for lab, mult in peel.items():
                s = lab.tblock
                for k in range(ctx.r_offset(s) + 1):
                    d = lab.shift - k
                    comp = M.degree_indices(d)
                    if not comp:
                        ok &= mult == 0
                        continue
                    e = idem[SimpleLabel(s, k)][0]
                    got = M.act_vec(e).submatrix(comp, comp).rank()
                    # every graded simple contributing this core simple in
                    # degree d is L(s, d + k) = lab itself
                    ok &= got == mult
    _line(8, ok)


# ---------------------------------------------------------------------
# 9. structural property tests
# ---------------------------------------------------------------------

def test_criterion_9(xy, x3y3):
    ok = True
    total = 0
    for _, _, _, ctx in (xy, x3y3):
        for side in ("minus", "plus"):
            rep = cover_mod.socle_support_property_test(ctx, side, k=2,
                                                        trials=50, seed=11)
            total += rep.trials
            ok &= rep.failures == 0
    ok &= total == 200
    for _, _, _, ctx in (xy, x3y3):
        cache = {}
        for d in range(0, 4):
            for t in range(0, d + 1):
                ok &= cover_mod.corner_check(ctx, d, t, cache=cache)
    for _, _, _, ctx in (xy, x3y3):
        for d in (ctx.tri.N, ctx.tri.N + 1):
            rep = cover_mod.basic_sets(ctx, d)
            ok &= rep.complete and rep.pairwise_noniso and rep.unitriangular
    _line(9, ok)
