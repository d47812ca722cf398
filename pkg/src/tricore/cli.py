"""Command-line interface: algebra input format, built-in families, and
machine-readable reports.

Spec file grammar (line oriented, ``#`` comments, versioned header)::

    tricore-spec 1
    field rational            | field prime <p>
    basis  <label> <label> ...
    degrees <int per label>
    unit   <label>            | unit coords <scalar per label>
    mul    <label> <label> <label> <scalar>    # e_i * e_j += c * e_k
    minus  <label> ...        # homogeneous spanning labels of the three parts
    tpart  <label> ...
    plus   <label> ...
    tau    <row-label> <col-label> <scalar>    # optional anti-involution matrix
    trace  <label> <scalar>                    # optional trace form

Omitted ``mul`` triples are zero.  Unknown keys are rejected with their
line number.  Scalars are integers or fractions ``p/q``.

Reports are JSON with a stable schema: the library version, a SHA-256
hash of the input description, the seed, and the payload.  Matrices are
emitted row-major in the documented label order; graded dimensions
(Laurent polynomials) as sorted ``[exponent, coefficient]`` pairs.
Identical inputs yield byte-identical reports.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

from . import __version__
from .exactla import GF, LaurentPoly, Matrix, QQ, Subspace
from .galg import (AntiInvolution, GradedAlgebra, TraceForm, TriangularData,
                   block_decomposition, check_ambidextrous,
                   check_graded_symmetric, check_well_generated,
                   jacobson_radical, validate_algebra, validate_triangular)
from .gmod import ModuleCategory, SimpleLabel
from . import core as core_mod
from . import cover as cover_mod
from .families import VariableSpec, build_restricted_sl2, build_truncated_poly


# ---------------------------------------------------------------------
# spec files
# ---------------------------------------------------------------------

class SpecError(ValueError):
    pass


def _scalar(tok: str, line: int):
    try:
        if "/" in tok:
            return Fraction(tok)
        return int(tok)
    except ValueError:
        raise SpecError(f"line {line}: bad scalar {tok!r}")


def parse_spec(text: str):
    """Parse an AlgebraSpecFile into (algebra, triangular, tau, trace)."""
    lines = text.splitlines()
    if not lines or lines[0].split() != ["tricore-spec", "1"]:
        raise SpecError("line 1: missing 'tricore-spec 1' header")
    field = None
    labels: list[str] = []
    degrees = None
    unit_label = None
    unit_coords = None
    muls = []
    spans = {"minus": None, "tpart": None, "plus": None}
    tau_entries = []
    trace_entries = []
    for ln, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        key = toks[0]
        if key == "field":
            if toks[1:] == ["rational"]:
                field = QQ
            elif len(toks) == 3 and toks[1] == "prime":
                field = GF(int(toks[2]))
            else:
                raise SpecError(f"line {ln}: bad field declaration")
        elif key == "basis":
            labels = toks[1:]
            if len(set(labels)) != len(labels):
                raise SpecError(f"line {ln}: duplicate basis labels")
        elif key == "degrees":
            degrees = [int(t) for t in toks[1:]]
        elif key == "unit":
            if len(toks) == 2:
                unit_label = toks[1]
            elif toks[1] == "coords":
                unit_coords = [_scalar(t, ln) for t in toks[2:]]
            else:
                raise SpecError(f"line {ln}: bad unit declaration")
        elif key == "mul":
            if len(toks) != 5:
                raise SpecError(f"line {ln}: mul needs 'mul i j k c'")
            muls.append((toks[1], toks[2], toks[3], _scalar(toks[4], ln), ln))
        elif key in spans:
            spans[key] = (toks[1:], ln)
        elif key == "tau":
            if len(toks) != 4:
                raise SpecError(f"line {ln}: tau needs 'tau row col c'")
            tau_entries.append((toks[1], toks[2], _scalar(toks[3], ln), ln))
        elif key == "trace":
            if len(toks) != 3:
                raise SpecError(f"line {ln}: trace needs 'trace label c'")
            trace_entries.append((toks[1], _scalar(toks[2], ln), ln))
        else:
            raise SpecError(f"line {ln}: unknown key {key!r}")
    if field is None:
        raise SpecError("missing 'field' declaration")
    if not labels:
        raise SpecError("missing 'basis' declaration")
    n = len(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    if degrees is None or len(degrees) != n:
        raise SpecError("'degrees' must list one integer per basis label")
    z = field.zero

    def look(lab, ln):
        if lab not in index:
            raise SpecError(f"line {ln}: unknown basis label {lab!r}")
        return index[lab]

    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for a, b, c, coef, ln in muls:
        table[look(a, ln)][look(b, ln)][look(c, ln)] = field.coerce(coef)
    if unit_label is not None:
        unit = [z] * n
        unit[look(unit_label, 2)] = field.one
    elif unit_coords is not None:
        if len(unit_coords) != n:
            raise SpecError("'unit coords' must list one scalar per label")
        unit = [field.coerce(c) for c in unit_coords]
    else:
        raise SpecError("missing 'unit' declaration")
    A = GradedAlgebra(field, degrees, table, unit, names=labels)
    tri = None
    if all(spans[k] is not None for k in spans):
        def part(key):
            labs, ln = spans[key]
            vecs = []
            for lab in labs:
                v = [z] * n
                v[look(lab, ln)] = field.one
                vecs.append(v)
            return vecs
        tri = TriangularData(A, part("minus"), part("tpart"), part("plus"))
    elif any(spans[k] is not None for k in spans):
        raise SpecError("triangular data needs all of minus/tpart/plus")
    tau = None
    if tau_entries:
        m = Matrix.zero(field, n, n)
        for r, c, coef, ln in tau_entries:
            m.data[look(r, ln)][look(c, ln)] = field.coerce(coef)
        tau = AntiInvolution(m)
    trace = None
    if trace_entries:
        vec = [z] * n
        for lab, coef, ln in trace_entries:
            vec[look(lab, ln)] = field.coerce(coef)
        trace = TraceForm(vec, True, True, True)
    return A, tri, tau, trace


def render_spec(A: GradedAlgebra, tri: TriangularData,
                tau=None, trace=None) -> str:
    """Render a spec file that parse_spec round-trips."""
    f = A.field
    lines = ["tricore-spec 1"]
    lines.append("field rational" if not f.is_prime_field else f"field prime {f.p}")
    names = A.names
    lines.append("basis " + " ".join(names))
    lines.append("degrees " + " ".join(str(d) for d in A.degrees))
    unit_hits = [i for i, c in enumerate(A.unit) if c]
    if len(unit_hits) == 1 and A.unit[unit_hits[0]] == f.one:
        lines.append(f"unit {names[unit_hits[0]]}")
    else:
        lines.append("unit coords " + " ".join(f.fmt(c) for c in A.unit))
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in enumerate(A.table[i][j]):
                if c:
                    lines.append(f"mul {names[i]} {names[j]} {names[k]} {f.fmt(c)}")

    def span_labels(basis):
        out = []
        for _, v in basis:
            hits = [k for k, c in enumerate(v) if c]
            if len(hits) != 1 or v[hits[0]] != f.one:
                raise SpecError("only coordinate spans can be rendered")
            out.append(names[hits[0]])
        return out

    lines.append("minus " + " ".join(span_labels(tri.minus_basis)))
    lines.append("tpart " + " ".join(span_labels(tri.t_basis)))
    lines.append("plus " + " ".join(span_labels(tri.plus_basis)))
    if tau is not None:
        for r in range(A.dim):
            for c in range(A.dim):
                v = tau.matrix.data[r][c]
                if v:
                    lines.append(f"tau {names[r]} {names[c]} {f.fmt(v)}")
    if trace is not None:
        for i, c in enumerate(trace.phi):
            if c:
                lines.append(f"trace {names[i]} {f.fmt(c)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------
# families and input resolution
# ---------------------------------------------------------------------

def parse_family(desc: str, field=QQ):
    """'trunc:x:-1:2,y:1:2' or 'sl2:3'."""
    if desc.startswith("sl2:"):
        p = int(desc.split(":", 1)[1])
        A, tri, _ = build_restricted_sl2(p)
        return A, tri, None
    if desc.startswith("trunc:"):
        body = desc[len("trunc:"):]
        specs = []
        for part in body.split(","):
            toks = part.split(":")
            if len(toks) != 3:
                raise SpecError(f"bad variable spec {part!r} (need name:deg:bound)")
            specs.append(VariableSpec(toks[0], int(toks[1]), int(toks[2])))
        A, tri, tau = build_truncated_poly(specs, field=field)
        return A, tri, tau
    raise SpecError(f"unknown family {desc!r} (expected trunc:... or sl2:p)")


def load_input(args):
    """Resolve --family/--spec into (algebra, tri, tau, description)."""
    if args.family and args.spec:
        raise SpecError("give either --family or --spec, not both")
    if args.family:
        field = QQ if args.field in (None, "rational") else GF(int(args.field))
        A, tri, tau = parse_family(args.family, field=field)
        desc = f"family {args.family} field {args.field or 'rational'}"
        return A, tri, tau, desc
    if args.spec:
        with open(args.spec) as fh:
            text = fh.read()
        A, tri, tau, _ = parse_spec(text)
        return A, tri, tau, text
    raise SpecError("one of --family or --spec is required")


# ---------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------

def fmt_scalar(x) -> str:
    return str(x)


def laurent_pairs(p: LaurentPoly) -> list:
    return [[e, c] for e, c in p.coeffs]


def make_report(command: str, desc: str, seed: int, payload: dict) -> dict:
    return {
        "tool": "tricore",
        "version": __version__,
        "command": command,
        "input_sha256": hashlib.sha256(desc.encode()).hexdigest(),
        "seed": seed,
        "data": payload,
    }


def emit(report: dict, args) -> None:
    if args.format == "text":
        out = _render_text(report)
    else:
        out = json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _render_text(report: dict, indent: int = 0) -> str:
    lines = [f"{report['tool']} {report['version']} :: {report['command']}"]

    def walk(obj, pad):
        if isinstance(obj, dict):
            for k in sorted(obj):
                v = obj[k]
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    lines.append(" " * pad + f"{k}:")
                    walk(v, pad + 2)
                else:
                    lines.append(" " * pad + f"{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                lines.append(" " * pad + f"- {v}")

    def _is_flat(v):
        if isinstance(v, list):
            return all(not isinstance(x, (dict, list)) for x in v)
        return False

    walk(report["data"], 2)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------
# command payloads
# ---------------------------------------------------------------------

def payload_validate(A, tri, tau, seed):
    rep_a = validate_algebra(A)
    rep_t = validate_triangular(A, tri, seed=seed)
    ok = rep_a.ok and rep_t.ok
    gsym = check_graded_symmetric(A, tau=tau, seed=seed) is not None
    return {
        "algebra_checks": [{"name": c.name, "ok": c.ok} for c in rep_a.checks],
        "triangular_checks": [{"name": c.name, "ok": c.ok} for c in rep_t.checks],
        "ambidextrous": check_ambidextrous(A, tri),
        "well_generated": check_well_generated(A, tri),
        "graded_symmetric": gsym,
        "ok": ok,
    }, ok


def payload_core(ctx: ModuleCategory):
    view = ctx.a0_view()
    idem = ctx.a0_idempotents()
    flat = [(str(k), v) for k, vs in sorted(idem.items()) for v in vs]
    view_coords = [[e[i] for i in view.degree_zero_indices] for _, e in flat]
    blocks = block_decomposition(
        view, [(lab, vc) for (lab, _), vc in zip(flat, view_coords)])
    rad = jacobson_radical(view, [sm.acts for sm in ctx.a0_simples()])
    return {
        "dim_core": view.dim,
        "n_tblocks": ctx.n_tblocks,
        "simple_r_offsets": [ctx.r_offset(s) for s in range(ctx.n_tblocks)],
        "idempotents_per_label": {str(k): len(v) for k, v in sorted(idem.items())},
        "radical_dim": rad.dim,
        "block_dims": sorted(b.subspace.dim for b in blocks),
        "self_injective": ctx.is_self_injective(),
    }, True


def payload_celldatum(ctx: ModuleCategory, tau, seed):
    sd = core_mod.standard_datum(ctx, seed=seed)
    rep = core_mod.verify_standard_datum(ctx, sd)
    out = {
        "poset": [str(l) for l in sd.poset],
        "f_dims": {str(l): sd.f_dims[l] for l in sd.poset},
        "g_dims": {str(l): sd.g_dims[l] for l in sd.poset},
        "n_elements": len(sd.order),
        "verified": rep.ok,
    }
    cellular = False
    if tau is not None:
        try:
            core_mod.cell_datum(ctx, tau, seed=seed)
            cellular = True
        except ValueError as exc:
            out["cell_error"] = str(exc)
    out["cellular_datum"] = cellular
    cms = core_mod.cell_modules(ctx, sd)
    out["underlined"] = [str(c.label) for c in cms if c.underlined]
    return out, rep.ok


def payload_matrices(ctx: ModuleCategory):
    pack = core_mod.matrices(ctx)
    return {
        "labels": pack.labels,
        "decomposition_graded": [[laurent_pairs(p) for p in row]
                                 for row in pack.d_graded],
        "decomposition": pack.d_ungraded,
        "cartan": pack.cartan,
        "blocks": pack.blocks,
        "block_ranks": pack.block_ranks,
        "block_dets": [fmt_scalar(d) for d in pack.block_dets],
        "bgg": pack.bgg,
        "factorization_C_eq_DtD": pack.factorization,
        "rank_one": pack.rank_one,
        "verdict": pack.verdict,
    }, True


def payload_cover(ctx: ModuleCategory, d: int):
    if d < ctx.tri.N:
        raise SpecError(
            f"d = {d} is below the top positive degree N = {ctx.tri.N}; "
            "no cover functor exists there")
    C = cover_mod.CoverAlgebra(ctx, d)
    qp = cover_mod.quiver_presentation(C)
    dc = cover_mod.double_centralizer_check(ctx, d, cover=C)
    fr = cover_mod.faithfulness_report(ctx, d, cover=C)
    bell = cover_mod.BellAlgebra(ctx, d - ctx.tri.N)
    return {
        "d": d,
        "ell": d - ctx.tri.N,
        "dim_C": C.dim,
        "labels": [str(l) for l in C.labels],
        "q_dims": {str(l): C.q[l].dim for l in C.labels},
        "arrows": [{"name": a.name, "src": str(C.labels[a.src]),
                    "tgt": str(C.labels[a.tgt])} for a in qp.arrows],
        "relations": qp.relation_strs(),
        "dim_B": bell.dim,
        "block_profile_ok": bell.block_profile_check(),
        "double_centralizer": dc,
        "killed": [str(l) for l in fr.killed],
        "minus_one_faithful": fr.minus_one_faithful,
        "cover_property": fr.cover_property,
        "zero_faithful": fr.zero_faithful,
    }, dc


def payload_extable(ctx: ModuleCategory, d: int):
    C = cover_mod.CoverAlgebra(ctx, d)
    table = {}
    for lab in C.labels:
        L = C.simple_umodule(lab)
        for mu in C.labels:
            D = C.quotient_module(ctx.standard_module(mu))
            dims = C.rc.ext_dims(L, D, 2)
            table[f"L{lab}-Delta{mu}"] = dims
    return {"d": d, "ext_le2_simple_vs_standard": table}, True


# ---------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tricore",
        description="graded algebras with triangular decomposition: "
                    "core, cell data, decomposition matrices and covers")
    p.add_argument("command", choices=[
        "validate", "core", "celldatum", "matrices", "cover", "extable",
        "report-all"])
    p.add_argument("--field", help="rational (default) or a prime p")
    p.add_argument("--family",
                   help="trunc:name:deg:bound[,name:deg:bound...] or sl2:p")
    p.add_argument("--spec", help="path to an algebra spec file")
    p.add_argument("--d", type=int, help="truncation bound for cover/extable")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report to this path")
    p.add_argument("--format", choices=["json", "text"], default="json")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        A, tri, tau, desc = load_input(args)
    except (SpecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        ok = True
        if args.command == "validate":
            payload, ok = payload_validate(A, tri, tau, args.seed)
        else:
            ctx = ModuleCategory(A, tri, seed=args.seed)
            if args.command == "core":
                payload, ok = payload_core(ctx)
            elif args.command == "celldatum":
                payload, ok = payload_celldatum(ctx, tau, args.seed)
            elif args.command == "matrices":
                payload, ok = payload_matrices(ctx)
            elif args.command == "cover":
                d = args.d if args.d is not None else ctx.tri.N
                payload, ok = payload_cover(ctx, d)
            elif args.command == "extable":
                d = args.d if args.d is not None else ctx.tri.N
                payload, ok = payload_extable(ctx, d)
            else:  # report-all
                payload = {}
                pv, okv = payload_validate(A, tri, tau, args.seed)
                payload["validate"] = pv
                pc, _ = payload_core(ctx)
                payload["core"] = pc
                pd, okd = payload_celldatum(ctx, tau, args.seed)
                payload["celldatum"] = pd
                pm, _ = payload_matrices(ctx)
                payload["matrices"] = pm
                d = args.d if args.d is not None else ctx.tri.N
                pcv, okc = payload_cover(ctx, d)
                payload["cover"] = pcv
                ok = okv and okd and okc
    except (SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(make_report(args.command, desc, args.seed, payload), args)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
