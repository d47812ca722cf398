"""Ungraded module machinery: homs, covers, resolutions, Ext groups."""
from tricore.exactla import Matrix, QQ
from tricore.galg import BasicAlgebraView, SimpleModule
from tricore.umod import (ResolutionContext, UModule, direct_sum_u, hom_u,
                          regular_umodule)


def dual_numbers():
    f = QQ
    z, o = f.zero, f.one
    table = [[[o, z], [z, o]], [[z, o], [z, z]]]
    return BasicAlgebraView(f, table, [o, z])


def dual_numbers_context():
    B = dual_numbers()
    f = B.field
    simple = SimpleModule(0, [Matrix.identity(f, 1), Matrix.zero(f, 1, 1)])
    return ResolutionContext(B, [simple], [(0, list(B.unit))])


def test_hom_endomorphisms_of_regular():
    B = dual_numbers()
    reg = regular_umodule(B)
    assert len(hom_u(reg, reg)) == B.dim


def test_projective_cover_of_simple():
    rc = dual_numbers_context()
    S = UModule(rc.view, rc.simples[0].acts)
    P, sur, mults = rc.cover(S)
    assert P.dim == 2 and sur.rank() == 1
    assert mults == [1]


def test_periodic_resolution_and_ext():
    # over K[eps]/(eps^2) the simple has the periodic resolution
    # ... -> A -> A -> K, so Ext^i(K, K) = K for all i
    rc = dual_numbers_context()
    S = UModule(rc.view, rc.simples[0].acts)
    assert rc.ext_dims(S, S, 3) == [1, 1, 1, 1]


def test_ext_of_projective_vanishes():
    rc = dual_numbers_context()
    reg = regular_umodule(rc.view)
    S = UModule(rc.view, rc.simples[0].acts)
    assert rc.ext_dims(reg, S, 2) == [1, 0, 0]


def test_direct_sum_dims_and_homs():
    B = dual_numbers()
    reg = regular_umodule(B)
    two = direct_sum_u([reg, reg])
    assert two.dim == 4
    assert len(hom_u(reg, two)) == 2 * len(hom_u(reg, reg))


def test_head_multiplicities_of_regular():
    rc = dual_numbers_context()
    reg = regular_umodule(rc.view)
    assert rc.head_multiplicities(reg) == [1]
