#!/usr/bin/env python3
"""Core analysis of the restricted enveloping algebra of sl2 in small
characteristic: block profile, decomposition matrices, cellularity verdict.
"""
import argparse
import time

from tricore import core as core_mod
from tricore.families import build_restricted_sl2
from tricore.galg import block_decomposition, jacobson_radical
from tricore.gmod import ModuleCategory


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3, choices=[3, 5, 7])
    args = ap.parse_args()
    t0 = time.time()
    A, tri, _ = build_restricted_sl2(args.p)
    ctx = ModuleCategory(A, tri)
    view = ctx.a0_view()
    print(f"p = {args.p}: dim A = {A.dim}, dim core = {view.dim}")
    from tricore.gmod import SimpleLabel
    dims = [ctx.simple_module(SimpleLabel(s, 0)).dim for s in range(ctx.n_tblocks)]
    print(f"graded simple dims {sorted(dims)}, "
          f"support widths {sorted(ctx.r_offset(s) for s in range(ctx.n_tblocks))}")

    rad = jacobson_radical(view, [sm.acts for sm in ctx.a0_simples()])
    idem = ctx.a0_idempotents()
    flat = [(lab, [e[i] for i in view.degree_zero_indices])
            for lab, es in sorted(idem.items()) for e in es]
    blocks = block_decomposition(view, flat)
    print(f"core radical dim {rad.dim}, "
          f"block profile {sorted(b.subspace.dim for b in blocks)}")

    pack = core_mod.matrices(ctx)
    print(f"decomposition matrix {pack.d_ungraded}")
    print(f"cartan matrix {pack.cartan}")
    print(f"linkage blocks {pack.blocks}, ranks {pack.block_ranks}, "
          f"dets {pack.block_dets}")
    print(f"rank-one {pack.rank_one}; verdict: {pack.verdict}")
    print(f"elapsed {time.time() - t0:.2f}s")


if __name__ == "__main__":
    main()
