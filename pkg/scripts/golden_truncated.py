#!/usr/bin/env python3
"""Full pipeline on the two truncated-polynomial golden algebras.

Prints the core, the standard/cell datum, the decomposition matrices, the
truncated endomorphism algebra with its quiver, and the cover verdicts.
"""
import argparse

from tricore import core as core_mod
from tricore import cover as cover_mod
from tricore.families import VariableSpec, build_truncated_poly
from tricore.gmod import ModuleCategory


def report(name: str, bound: int, d: int) -> None:
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, bound), VariableSpec("y", 1, bound)])
    ctx = ModuleCategory(A, tri)
    print(f"=== {name} (dim {A.dim}), d = {d} ===")
    print(f"core dim {ctx.a0_view().dim}, self-injective {ctx.is_self_injective()}")

    sd = core_mod.cell_datum(ctx, tau)
    print(f"cell datum: {len(sd.order)} elements over poset "
          f"{[str(l) for l in sd.poset]}, cellular={sd.cellular}")
    under = [str(c.label) for c in core_mod.cell_modules(ctx, sd) if c.underlined]
    print(f"underlined labels: {under}")

    pack = core_mod.matrices(ctx)
    print(f"decomposition {pack.d_ungraded}, cartan {pack.cartan}, "
          f"verdict: {pack.verdict}")

    C = cover_mod.CoverAlgebra(ctx, d)
    qp = cover_mod.quiver_presentation(C)
    arrows = [f"{a.name}:{C.labels[a.src]}->{C.labels[a.tgt]}" for a in qp.arrows]
    print(f"C_{d}: dim {C.dim}, arrows {arrows}")
    print(f"relations: {qp.relation_strs()}")

    print(f"double centralizer: {cover_mod.double_centralizer_check(ctx, d, cover=C)}")
    fr = cover_mod.faithfulness_report(ctx, d, cover=C)
    print(f"faithfulness: (-1)={fr.minus_one_faithful} cover={fr.cover_property} "
          f"0={fr.zero_faithful}; killed {[str(l) for l in fr.killed]}")
    bs = cover_mod.basic_sets(ctx, d)
    print(f"basic set {[str(l) for l in bs.basic_set]}, "
          f"unitriangular={bs.unitriangular}, dec={bs.decomposition}")
    print()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=None,
                    help="also run covers up to this truncation bound")
    args = ap.parse_args()
    report("K[x,y]/(x^2,y^2)", 2, 1)
    report("K[x,y]/(x^3,y^3)", 3, 2)
    if args.dmax is not None:
        A, tri, _ = build_truncated_poly(
            [VariableSpec("x", -1, 3), VariableSpec("y", 1, 3)])
        ctx = ModuleCategory(A, tri)
        cache = {}
        for d in range(ctx.tri.N, args.dmax + 1):
            checks = [cover_mod.corner_check(ctx, d, t, cache=cache)
                      for t in range(d + 1)]
            print(f"d={d}: corner checks {checks}")


if __name__ == "__main__":
    main()
