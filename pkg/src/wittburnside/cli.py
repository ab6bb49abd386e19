"""Command-line front end: inspection, vector-file arithmetic, table emission,
and the verification suites.

Vector files are JSON documents::

    {"schema_version": 1,
     "group": "S3"  |  {"cyclic_trunc": [1, 2, 3, 6]},
     "flavor": "Witt" | "Necklace" | "Aperiodic" | "Ghost",
     "ring": "Z" | "Q" | "Z/8" | "ZPoly(x,y)" | ...,
     "components": ["3", "-1/2", ...],
     "labels": ["G", "2a", ...]  |  [1, 2, 3, 6],
     "coord_form": true}            # optional, coordinate-backed transports

All output is JSON with sorted keys; byte-for-byte deterministic given the
inputs, flags and seed.  Exit codes: 0 success, 1 verification failures,
2 schema/input errors, 3 domain errors (the message names the error class).
"""
import argparse
import json
import math
import sys

from .burnside import (
    APERIODIC,
    GHOST,
    NECKLACE,
    WITT,
    IndexedVector,
    ap_ghost,
    ap_op,
    derive_universal,
    ghost_F,
    ghost_nu,
    ind_ap,
    ind_nr,
    nr_ghost,
    nr_op,
    res_ap,
    res_nr,
    teichmuller,
    teichmuller_inv,
    theta,
    theta_inv,
    wg_ghost,
    wg_op,
    witt_f,
    witt_v,
)
from .cyclic import (
    CyclicVector,
    TruncationSet,
    cyc_ap_op,
    cyc_frobenius,
    cyc_ghost,
    cyc_nr_op,
    cyc_theta,
    cyc_theta_inv,
    cyc_verschiebung,
    cyc_witt_ghost,
    cyc_witt_op,
)
from .errors import DomainError, SchemaError
from .groups import build_group, marks_matrix, subgroup_classes, subgroup_group
from .qdeform import (
    QContext,
    TruncatedCurve,
    artin_hasse,
    artin_hasse_inv,
    p_poly,
    q_ap_op,
    q_frobenius,
    q_ghost,
    q_nr_op,
    q_teichmuller,
    q_teichmuller_inv,
    q_universal,
    q_verschiebung,
    q_witt_ghost,
    q_witt_op,
    tau_q,
    theta_q,
    theta_q_inv,
    try_one,
)
from .rings import RingValue, divisors, parse_ring
from .verify import SUITES, run_suite

_OPWORD = {"add": "sum", "mul": "prod", "neg": "neg"}
_FAMILY = {"witt": WITT, "necklace": NECKLACE, "aperiodic": APERIODIC}


def _emit(doc):
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


# --- vector file I/O ---------------------------------------------------------


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e}")
    except ValueError as e:
        raise SchemaError(f"{path} is not valid JSON: {e}")
    if not isinstance(doc, dict) or doc.get("schema_version") != 1:
        raise SchemaError(f"{path}: expected a schema_version 1 document")
    return doc


def _parse_components(doc, ring, path):
    comps = doc.get("components")
    if not isinstance(comps, list):
        raise SchemaError(f"{path}: components must be a list of strings")
    out = []
    for c in comps:
        try:
            out.append(RingValue.parse(ring, str(c)))
        except (ValueError, KeyError, SchemaError) as e:
            raise SchemaError(f"{path}: component {c!r} does not parse in {ring.name}: {e}")
    return out


def _check_ring(doc, ring_flag, path):
    name = doc.get("ring")
    if not isinstance(name, str):
        raise SchemaError(f"{path}: missing ring name")
    if ring_flag is not None and ring_flag != name:
        raise SchemaError(
            f"{path}: --ring {ring_flag} disagrees with the file's ring {name}"
        )
    return parse_ring(name)


def _check_flavor(doc, path, allowed):
    flavor = doc.get("flavor")
    if flavor not in (WITT, NECKLACE, APERIODIC, GHOST):
        raise SchemaError(f"{path}: unknown flavor {flavor!r}")
    if allowed is not None and flavor not in allowed:
        raise SchemaError(
            f"{path}: flavor {flavor} not usable here (expected {'/'.join(allowed)})"
        )
    return flavor


def _read_group_vector(path, ring_flag=None, allowed=None, group=None):
    doc = _load(path)
    gf = doc.get("group")
    if isinstance(gf, dict):
        raise SchemaError(f"{path}: expected a group vector, found a cyclic one")
    if not isinstance(gf, str):
        raise SchemaError(f"{path}: group must be a descriptor string")
    if group is None:
        group = build_group(gf)
    elif gf != group.name:
        raise SchemaError(f"{path}: group {gf!r} does not match expected {group.name}")
    flavor = _check_flavor(doc, path, allowed)
    ring = _check_ring(doc, ring_flag, path)
    labels = list(subgroup_classes(group).labels())
    if doc.get("labels") != labels:
        raise SchemaError(f"{path}: labels do not match the class order {labels}")
    comps = _parse_components(doc, ring, path)
    if len(comps) != len(labels):
        raise SchemaError(f"{path}: expected {len(labels)} components")
    return IndexedVector(group, flavor, ring, comps, bool(doc.get("coord_form")))


def _read_cyclic_vector(path, ring_flag=None, allowed=None):
    doc = _load(path)
    gf = doc.get("group")
    if not (isinstance(gf, dict) and "cyclic_trunc" in gf):
        raise SchemaError(f"{path}: expected a cyclic vector with a cyclic_trunc group")
    T = TruncationSet(gf["cyclic_trunc"])
    flavor = _check_flavor(doc, path, allowed)
    ring = _check_ring(doc, ring_flag, path)
    if doc.get("labels") != list(T.members):
        raise SchemaError(f"{path}: labels do not match the truncation set {list(T.members)}")
    comps = _parse_components(doc, ring, path)
    if len(comps) != len(T.members):
        raise SchemaError(f"{path}: expected {len(T.members)} components")
    return CyclicVector(T, flavor, ring, comps, bool(doc.get("coord_form")))


def _group_doc(vec):
    doc = {
        "schema_version": 1,
        "group": vec.group.name,
        "flavor": vec.flavor,
        "ring": vec.ring.name,
        "components": [c.format() for c in vec.components],
        "labels": list(subgroup_classes(vec.group).labels()),
    }
    if vec.coord_form:
        doc["coord_form"] = True
    return doc


def _cyclic_doc(vec):
    doc = {
        "schema_version": 1,
        "group": {"cyclic_trunc": list(vec.truncation.members)},
        "flavor": vec.flavor,
        "ring": vec.ring.name,
        "components": [c.format() for c in vec.components],
        "labels": list(vec.truncation.members),
    }
    if vec.coord_form:
        doc["coord_form"] = True
    return doc


def _curve_doc(curve, q):
    return {
        "schema_version": 1,
        "kind": "curve",
        "q": "q" if q is None else q,
        "ring": curve.ring.name,
        "degree": curve.degree,
        "coefficients": [c.format() for c in curve.components],
    }


def _read_curve(path, ring_flag=None):
    doc = _load(path)
    if doc.get("kind") != "curve":
        raise SchemaError(f"{path}: expected a curve document")
    ring = _check_ring(doc, ring_flag, path)
    coeffs = doc.get("coefficients")
    if not isinstance(coeffs, list) or not coeffs:
        raise SchemaError(f"{path}: coefficients must be a non-empty list")
    vals = []
    for c in coeffs:
        try:
            vals.append(RingValue.parse(ring, str(c)))
        except (ValueError, KeyError, SchemaError) as e:
            raise SchemaError(f"{path}: coefficient {c!r} does not parse: {e}")
    return TruncatedCurve(ring, vals)


def _qcontext(args):
    raw = getattr(args, "q", None)
    if raw is None or raw == "q":
        return QContext(None)
    try:
        return QContext(int(raw))
    except ValueError:
        raise SchemaError(f"--q must be an integer or the symbol q, got {raw!r}")


def _truncation(args, default=None):
    if getattr(args, "trunc_set", None):
        try:
            members = [int(p) for p in args.trunc_set.split(",")]
        except ValueError:
            raise SchemaError(f"--trunc-set must be a comma list of integers")
        return TruncationSet(members)
    if getattr(args, "trunc", None):
        return TruncationSet.div(args.trunc)
    if default is not None:
        return default
    raise SchemaError("a truncation set is required (--trunc N or --trunc-set a,b,c)")


# --- command handlers --------------------------------------------------------


def cmd_group_info(args):
    G = build_group(args.group)
    mm = marks_matrix(G)
    ct = mm.table
    k = len(ct.classes)
    _emit(
        {
            "group": G.name,
            "order": G.order,
            "abelian": G.is_abelian(),
            "classes": [
                {
                    "label": c.label,
                    "order": c.order,
                    "index": c.index,
                    "normalizer_index": c.normalizer_index,
                    "conjugates": len(c.conjugates),
                }
                for c in ct.classes
            ],
            "marks": [[mm.zeta.entry(i, j) for j in range(k)] for i in range(k)],
            "mobius": [
                [str(mm.mobius.entry(i, j)) for j in range(k)] for i in range(k)
            ],
        }
    )
    return 0


def cmd_flavor_op(args):
    flavor = _FAMILY[args.family]
    op = _OPWORD[args.op]
    x = _read_group_vector(args.input, args.ring, (flavor,))
    y = None
    if op != "neg":
        if args.other is None:
            raise SchemaError(f"{args.family} {args.op} needs two input files")
        y = _read_group_vector(args.other, args.ring, (flavor,), group=x.group)
        if y.ring != x.ring:
            raise SchemaError("input files use different rings")
        if y.coord_form != x.coord_form:
            raise SchemaError("cannot mix coordinate-backed and plain vectors")
    fn = {WITT: wg_op, NECKLACE: nr_op, APERIODIC: ap_op}[flavor]
    out = fn(op, x) if y is None else fn(op, x, y)
    _emit(_group_doc(out))
    return 0


def cmd_ghost(args):
    allowed = (args.flavor,) if args.flavor else (WITT, NECKLACE, APERIODIC)
    x = _read_group_vector(args.input, args.ring, allowed)
    fn = {WITT: wg_ghost, NECKLACE: nr_ghost, APERIODIC: ap_ghost}[x.flavor]
    _emit(_group_doc(fn(x)))
    return 0


def cmd_teichmuller(args):
    if args.inverse:
        x = _read_group_vector(args.input, args.ring, (NECKLACE,))
        out = teichmuller_inv(x)
    else:
        x = _read_group_vector(args.input, args.ring, (WITT,))
        out = teichmuller(x)
    _emit(_group_doc(out))
    return 0


def cmd_theta(args):
    if args.inverse:
        x = _read_group_vector(args.input, args.ring, (APERIODIC,))
        out = theta_inv(x)
    else:
        x = _read_group_vector(args.input, args.ring, (NECKLACE,))
        out = theta(x)
    _emit(_group_doc(out))
    return 0


def _class_index(G, label):
    return subgroup_classes(G).index_of_label(label)


def cmd_ind(args):
    G = build_group(args.group)
    ci = _class_index(G, args.cls)
    U = subgroup_group(G, ci)
    x = _read_group_vector(args.input, args.ring, None, group=U)
    fn = {WITT: witt_v, NECKLACE: ind_nr, APERIODIC: ind_ap, GHOST: ghost_nu}[x.flavor]
    _emit(_group_doc(fn(G, ci, x)))
    return 0


def cmd_res(args):
    G = build_group(args.group)
    ci = _class_index(G, args.cls)
    x = _read_group_vector(args.input, args.ring, None, group=G)
    fn = {WITT: witt_f, NECKLACE: res_nr, APERIODIC: res_ap, GHOST: ghost_F}[x.flavor]
    _emit(_group_doc(fn(G, ci, x)))
    return 0


def cmd_universal(args):
    G = build_group(args.group)
    uni = derive_universal(G, args.op)
    labels = list(subgroup_classes(G).labels())
    _emit(
        {
            "group": G.name,
            "op": uni.op,
            "vars": list(uni.vars),
            "polys": {lab: p.format() for lab, p in zip(labels, uni.polys)},
        }
    )
    return 0


def cmd_cyclic_op(args):
    flavor = _FAMILY[args.family]
    op = _OPWORD[args.op]
    x = _read_cyclic_vector(args.input, args.ring, (flavor,))
    y = None
    if op != "neg":
        if args.other is None:
            raise SchemaError(f"cyclic {args.family} {args.op} needs two input files")
        y = _read_cyclic_vector(args.other, args.ring, (flavor,))
        if y.truncation.members != x.truncation.members:
            raise SchemaError("input files use different truncation sets")
        if y.ring != x.ring:
            raise SchemaError("input files use different rings")
        if y.coord_form != x.coord_form:
            raise SchemaError("cannot mix coordinate-backed and plain vectors")
    fn = {WITT: cyc_witt_op, NECKLACE: cyc_nr_op, APERIODIC: cyc_ap_op}[flavor]
    out = fn(op, x) if y is None else fn(op, x, y)
    _emit(_cyclic_doc(out))
    return 0


def cmd_cyclic_ghost(args):
    allowed = (args.flavor,) if args.flavor else (WITT, NECKLACE, APERIODIC)
    x = _read_cyclic_vector(args.input, args.ring, allowed)
    out = cyc_witt_ghost(x) if x.flavor == WITT else cyc_ghost(x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_cyclic_theta(args):
    if args.inverse:
        x = _read_cyclic_vector(args.input, args.ring, (APERIODIC,))
        out = cyc_theta_inv(x)
    else:
        x = _read_cyclic_vector(args.input, args.ring, (NECKLACE,))
        out = cyc_theta(x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_cyclic_operator(args):
    x = _read_cyclic_vector(args.input, args.ring)
    fn = cyc_frobenius if args.operator == "frobenius" else cyc_verschiebung
    _emit(_cyclic_doc(fn(args.r, x)))
    return 0


def cmd_qpoly(args):
    n = args.n
    if n < 1:
        raise SchemaError("--n must be a positive integer")
    if args.kind == "P":
        polys = {}
        for i in divisors(n):
            for j in divisors(n):
                if n % math.lcm(i, j) == 0:
                    polys[f"({i},{j})"] = p_poly(n, i, j).format()
        _emit({"kind": "P", "n": n, "polys": polys})
    else:
        _emit(
            {
                "kind": "tau",
                "n": n,
                "polys": {str(i): tau_q(i, n).format() for i in divisors(n)},
            }
        )
    return 0


def cmd_quniversal(args):
    T = _truncation(args)
    uni = q_universal(T, args.op)
    _emit(
        {
            "op": uni.op,
            "trunc": list(T.members),
            "vars": list(uni.vars),
            "polys": {str(n): p.format() for n, p in zip(T.members, uni.polys)},
        }
    )
    return 0


def cmd_qwitt_op(args):
    ctx = _qcontext(args)
    op = _OPWORD[args.op]
    x = _read_cyclic_vector(args.input, args.ring, (WITT, NECKLACE, APERIODIC))
    y = None
    if op != "neg":
        if args.other is None:
            raise SchemaError(f"qwitt {args.op} needs two input files")
        y = _read_cyclic_vector(args.other, args.ring, (x.flavor,))
        if y.truncation.members != x.truncation.members:
            raise SchemaError("input files use different truncation sets")
        if y.ring != x.ring:
            raise SchemaError("input files use different rings")
        if y.coord_form != x.coord_form:
            raise SchemaError("cannot mix coordinate-backed and plain vectors")
    fn = {WITT: q_witt_op, NECKLACE: q_nr_op, APERIODIC: q_ap_op}[x.flavor]
    out = fn(ctx, op, x) if y is None else fn(ctx, op, x, y)
    _emit(_cyclic_doc(out))
    return 0


def cmd_qwitt_ghost(args):
    ctx = _qcontext(args)
    x = _read_cyclic_vector(args.input, args.ring, (WITT, NECKLACE, APERIODIC))
    out = q_witt_ghost(ctx, x) if x.flavor == WITT and not x.coord_form else q_ghost(ctx, x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_qwitt_teichmuller(args):
    ctx = _qcontext(args)
    if args.inverse:
        x = _read_cyclic_vector(args.input, args.ring, (NECKLACE,))
        out = q_teichmuller_inv(ctx, x)
    else:
        x = _read_cyclic_vector(args.input, args.ring, (WITT,))
        out = q_teichmuller(ctx, x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_qwitt_theta(args):
    if args.inverse:
        x = _read_cyclic_vector(args.input, args.ring, (APERIODIC,))
        out = theta_q_inv(x)
    else:
        x = _read_cyclic_vector(args.input, args.ring, (NECKLACE,))
        out = theta_q(x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_qwitt_operator(args):
    x = _read_cyclic_vector(args.input, args.ring)
    if args.operator == "frobenius":
        out = q_frobenius(_qcontext(args), args.r, x)
    else:
        out = q_verschiebung(args.r, x)
    _emit(_cyclic_doc(out))
    return 0


def cmd_qwitt_tryone(args):
    ctx = _qcontext(args)
    T = _truncation(args)
    R = parse_ring(args.ring or "Z")
    one = try_one(ctx, T, R)
    if one is None:
        _emit({"exists": False, "trunc": list(T.members), "ring": R.name})
    else:
        doc = _cyclic_doc(one)
        doc["exists"] = True
        _emit(doc)
    return 0


def cmd_artinhasse(args):
    ctx = _qcontext(args)
    if args.inverse:
        curve = _read_curve(args.input, args.ring)
        T = _truncation(args, TruncationSet(range(1, curve.degree + 1)))
        _emit(_cyclic_doc(artin_hasse_inv(ctx, curve, T)))
    else:
        x = _read_cyclic_vector(args.input, args.ring, (WITT,))
        _emit(_curve_doc(artin_hasse(ctx, x), ctx.q))
    return 0


def cmd_verify(args):
    report = run_suite(args.suite, args.seed, args.size, args.inject_fault)
    _emit(report)
    return 1 if report["failures"] else 0


# --- parser ------------------------------------------------------------------


def _add_ring_flag(p):
    p.add_argument("--ring", help="ring name; must agree with the input files")


def _add_vector_io(p, binary):
    p.add_argument("input", help="input vector file (JSON)")
    if binary:
        p.add_argument("other", nargs="?", help="second input file for binary ops")
    _add_ring_flag(p)


def _parser():
    ap = argparse.ArgumentParser(
        prog="wittburnside",
        description="Exact Witt-Burnside / necklace / aperiodic ring arithmetic.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("group", help="group inspection")
    gsub = g.add_subparsers(dest="groupverb", required=True)
    gi = gsub.add_parser("info", help="classes, marks and Moebius matrix")
    gi.add_argument("--group", required=True)
    gi.set_defaults(fn=cmd_group_info)

    for family in ("witt", "necklace", "aperiodic"):
        fp = sub.add_parser(family, help=f"{family} ring ops on group vector files")
        fsub = fp.add_subparsers(dest="op", required=True)
        for op in ("add", "mul", "neg"):
            op_p = fsub.add_parser(op)
            _add_vector_io(op_p, op != "neg")
            op_p.set_defaults(fn=cmd_flavor_op, family=family, op=op)

    gh = sub.add_parser("ghost", help="ghost map of a group vector file")
    _add_vector_io(gh, False)
    gh.add_argument("--flavor", choices=(WITT, NECKLACE, APERIODIC))
    gh.set_defaults(fn=cmd_ghost)

    tm = sub.add_parser("teichmuller", help="Witt -> necklace transport")
    _add_vector_io(tm, False)
    tm.add_argument("--inverse", action="store_true")
    tm.set_defaults(fn=cmd_teichmuller)

    th = sub.add_parser("theta", help="necklace -> aperiodic rescaling")
    _add_vector_io(th, False)
    th.add_argument("--inverse", action="store_true")
    th.set_defaults(fn=cmd_theta)

    for name, fn in (("ind", cmd_ind), ("res", cmd_res)):
        ir = sub.add_parser(name, help=f"{name}uction along a subgroup class")
        ir.add_argument("--group", required=True, help="ambient group")
        ir.add_argument("--class", dest="cls", required=True, help="subgroup class label")
        _add_vector_io(ir, False)
        ir.set_defaults(fn=fn)

    un = sub.add_parser("universal", help="universal operation polynomials")
    un.add_argument("--group", required=True)
    un.add_argument("--op", required=True, choices=("sum", "prod", "neg"))
    un.set_defaults(fn=cmd_universal)

    cy = sub.add_parser("cyclic", help="truncation-set model")
    csub = cy.add_subparsers(dest="cyclicverb", required=True)
    for family in ("witt", "necklace", "aperiodic"):
        fp = csub.add_parser(family)
        fsub = fp.add_subparsers(dest="op", required=True)
        for op in ("add", "mul", "neg"):
            op_p = fsub.add_parser(op)
            _add_vector_io(op_p, op != "neg")
            op_p.set_defaults(fn=cmd_cyclic_op, family=family, op=op)
    cgh = csub.add_parser("ghost")
    _add_vector_io(cgh, False)
    cgh.add_argument("--flavor", choices=(WITT, NECKLACE, APERIODIC))
    cgh.set_defaults(fn=cmd_cyclic_ghost)
    cth = csub.add_parser("theta")
    _add_vector_io(cth, False)
    cth.add_argument("--inverse", action="store_true")
    cth.set_defaults(fn=cmd_cyclic_theta)
    for op_name in ("frobenius", "verschiebung"):
        cop = csub.add_parser(op_name)
        cop.add_argument("--r", type=int, required=True)
        _add_vector_io(cop, False)
        cop.set_defaults(fn=cmd_cyclic_operator, operator=op_name)

    qp = sub.add_parser("qpoly", help="q-weighted lattice polynomials")
    qp.add_argument("kind", choices=("P", "tau"))
    qp.add_argument("--n", type=int, required=True)
    qp.set_defaults(fn=cmd_qpoly)

    qu = sub.add_parser("quniversal", help="q-deformed universal polynomials")
    qu.add_argument("--op", required=True, choices=("sum", "prod", "neg"))
    qu.add_argument("--trunc", type=int)
    qu.add_argument("--trunc-set")
    qu.set_defaults(fn=cmd_quniversal)

    qw = sub.add_parser("qwitt", help="q-deformed cyclic model")
    qsub = qw.add_subparsers(dest="qverb", required=True)
    for op in ("add", "mul", "neg"):
        op_p = qsub.add_parser(op)
        op_p.add_argument("--q", required=True, help="integer or the symbol q")
        _add_vector_io(op_p, op != "neg")
        op_p.set_defaults(fn=cmd_qwitt_op, op=op)
    qgh = qsub.add_parser("ghost")
    qgh.add_argument("--q", required=True)
    _add_vector_io(qgh, False)
    qgh.set_defaults(fn=cmd_qwitt_ghost)
    qtm = qsub.add_parser("teichmuller")
    qtm.add_argument("--q", required=True)
    qtm.add_argument("--inverse", action="store_true")
    _add_vector_io(qtm, False)
    qtm.set_defaults(fn=cmd_qwitt_teichmuller)
    qth = qsub.add_parser("theta")
    qth.add_argument("--inverse", action="store_true")
    _add_vector_io(qth, False)
    qth.set_defaults(fn=cmd_qwitt_theta)
    qfr = qsub.add_parser("frobenius")
    qfr.add_argument("--q", required=True)
    qfr.add_argument("--r", type=int, required=True)
    _add_vector_io(qfr, False)
    qfr.set_defaults(fn=cmd_qwitt_operator, operator="frobenius")
    qvs = qsub.add_parser("verschiebung")
    qvs.add_argument("--r", type=int, required=True)
    _add_vector_io(qvs, False)
    qvs.set_defaults(fn=cmd_qwitt_operator, operator="verschiebung")
    qon = qsub.add_parser("tryone")
    qon.add_argument("--q", required=True)
    qon.add_argument("--trunc", type=int)
    qon.add_argument("--trunc-set")
    qon.add_argument("--ring", default="Z")
    qon.set_defaults(fn=cmd_qwitt_tryone)

    ah = sub.add_parser("artinhasse", help="Artin-Hasse-type curve of a Witt vector")
    ah.add_argument("--q", required=True)
    ah.add_argument("--inverse", action="store_true")
    ah.add_argument("--trunc", type=int)
    ah.add_argument("--trunc-set")
    _add_vector_io(ah, False)
    ah.set_defaults(fn=cmd_artinhasse)

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", default="all", choices=SUITES + ("all",))
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--size", type=int, default=1)
    vf.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    vf.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
