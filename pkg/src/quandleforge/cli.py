"""forge: the command-line interface.

Every subcommand writes line-oriented JSON records to stdout and a short
human summary to stderr.  Exit codes: 0 ok, 1 bad input or data error,
2 a mechanically checked theorem failed (implementation bug).
"""

import argparse
import json
import os
import sys

from . import io as qio
from .cohomology import second_cohomology
from .constructions import (abelian_extension, alexander_quandle,
                            conjugation_quandle, cyclic_group,
                            dihedral_quandle, generalized_alexander_quandle,
                            GroupAutomorphism, symmetric_group,
                            trivial_quandle, conjugation_automorphism)
from .core import inn_image, inner_group, is_connected, is_faithful
from .envgroup import (DEFAULT_MAX_COSETS, enveloping_presentation,
                       generator_collision, is_conjugation_quandle,
                       todd_coxeter)
from .errors import AxiomViolation, QuandleError, TheoremViolation
from .knotdata import bundled_knots
from .knots import Tangle, is_constant, state_sum, tangle_colorings
from .pipeline import (constancy_pipeline, inn_sequence,
                       nonconstancy_certificates, power_coefficient_check,
                       recover_index2_cocycle)


def emit(record):
    print(json.dumps(record, sort_keys=True))


def note(msg):
    print(msg, file=sys.stderr)


def _load_knots(args):
    if getattr(args, "knots", None):
        return qio.read_knots(args.knots)
    return bundled_knots()


def _write_quandle(q, args, summary):
    text = qio.quandle_to_text(q, comment=summary)
    if args.output:
        qio.write_text(args.output, text)
        note(f"{summary} -> {args.output}")
    else:
        sys.stdout.write(text)
        note(summary)


def cmd_validate(args):
    try:
        q = qio.read_quandle(args.quandle)
    except AxiomViolation as exc:
        emit({"record": "validate", "ok": False, "kind": exc.kind,
              "witness": exc.witness})
        note(f"axiom violation: {exc}")
        return 1
    emit({"record": "validate", "ok": True, "order": q.n})
    note(f"valid quandle of order {q.n}")
    return 0


def cmd_props(args):
    q = qio.read_quandle(args.quandle)
    inn = inner_group(q)
    img, _ = inn_image(q)
    rec = {
        "record": "props",
        "order": q.n,
        "connected": is_connected(q),
        "faithful": is_faithful(q),
        "inner_group_order": inn.order,
        "inn_image_order": img.n,
    }
    emit(rec)
    note(f"order {q.n}: connected={rec['connected']} "
         f"faithful={rec['faithful']} |Inn|={inn.order} |inn(Q)|={img.n}")
    return 0


def cmd_inn_seq(args):
    q = qio.read_quandle(args.quandle)
    seq = inn_sequence(q)
    orders = [x.n for x in seq.quandles]
    emit({"record": "inn_sequence", "orders": orders,
          "terminal_faithful": seq.terminal_faithful})
    note(" -> ".join(str(o) for o in orders) + "  (terminal faithful)")
    return 0


def cmd_h2(args):
    q = qio.read_quandle(args.quandle)
    h = second_cohomology(q, args.mod)
    emit({"record": "h2", "mod": args.mod,
          "invariant_factors": list(h.invariant_factors),
          "order": h.order})
    if args.emit_reps:
        os.makedirs(args.emit_reps, exist_ok=True)
        for i, rep in enumerate(h.representatives):
            path = os.path.join(args.emit_reps, f"rep{i}.cocycle")
            qio.write_text(path, qio.cocycle_to_text(
                rep, comment=f"H2 representative {i}, factor "
                f"{h.invariant_factors[i]}"))
            emit({"record": "h2_rep", "index": i, "path": path,
                  "factor": h.invariant_factors[i]})
    factors = " x ".join(f"Z{d}" for d in h.invariant_factors) or "trivial"
    note(f"H2(Q, Z{args.mod}) = {factors}")
    return 0


def cmd_extend(args):
    q = qio.read_quandle(args.quandle)
    phi = qio.read_cocycle(args.cocycle)
    e, proj = abelian_extension(q, phi.m, phi)
    emit({"record": "extend", "base_order": q.n, "mod": phi.m,
          "extension_order": e.n,
          "connected": is_connected(e), "faithful": is_faithful(e)})
    _write_quandle(e, args, f"extension of order {e.n}")
    return 0


def cmd_invariant(args):
    q = qio.read_quandle(args.quandle)
    phi = qio.read_cocycle(args.cocycle)
    if phi.n != q.n:
        raise QuandleError("cocycle size does not match the quandle")
    knots = _load_knots(args)
    for k in knots:
        if args.tangle:
            cols = tangle_colorings(q, Tangle(k))
            mono = all(c.y0 == c.y1 for c in cols)
            emit({"record": "tangle", "knot": k.name,
                  "colorings": len(cols), "end_monochromatic": mono})
        else:
            inv = state_sum(q, phi, k)
            emit({"record": "invariant", "knot": k.name, "mod": phi.m,
                  "coefficients": list(inv.coeffs),
                  "constant": is_constant(inv)})
    note(f"{len(knots)} knots processed")
    return 0


def cmd_vendramin(args):
    q = qio.read_quandle(args.quandle)
    verdict = is_conjugation_quandle(q, max_cosets=args.max_cosets)
    rec = {"record": "vendramin", "verdict": verdict}
    if verdict != "not_applicable":
        table = todd_coxeter(enveloping_presentation(q, finite=True),
                             args.max_cosets)
        rec["finite_enveloping_order"] = table.size
        if verdict == "no":
            rec["collision"] = list(generator_collision(q, args.max_cosets))
    emit(rec)
    note(f"conjugation quandle: {verdict}")
    return 0


def cmd_recover_ext(args):
    q = qio.read_quandle(args.quandle)
    img, f = inn_image(q)
    if q.n != 2 * img.n:
        note(f"inner representation has index {q.n}/{img.n}, not 2")
        return 1
    phi = recover_index2_cocycle(f)
    emit({"record": "recover_ext", "base_order": img.n,
          "cocycle": [list(r) for r in phi.values]})
    if args.output:
        qio.write_text(args.output, qio.cocycle_to_text(
            phi, comment="recovered from the inner representation"))
        note(f"cocycle -> {args.output}")
    else:
        note("recovered index-2 cocycle")
    return 0


def cmd_thm31(args):
    q = qio.read_quandle(args.quandle)
    phi = qio.read_cocycle(args.cocycle)
    verdict = constancy_pipeline(q, phi.m, phi, knots=_load_knots(args),
                                 max_cosets=args.max_cosets)
    emit({"record": "constancy",
          "extension_order": verdict.extension.n,
          "is_conjugation": verdict.is_conjugation,
          "inn_preimage_found": verdict.inn_preimage_found,
          "all_constant": verdict.invariant_constant_on_corpus,
          "invariants": {k: list(v.coeffs)
                         for k, v in verdict.invariants.items()}})
    note(f"conjugation={verdict.is_conjugation} "
         f"all_constant={verdict.invariant_constant_on_corpus}")
    return 0


def cmd_thm35(args):
    q = qio.read_quandle(args.quandle)
    psi = qio.read_cocycle(args.cocycle)
    report = power_coefficient_check(q, psi.m, psi, args.d,
                                     knots=_load_knots(args),
                                     max_cosets=args.max_cosets)
    emit({"record": "power_check", "n": report.n, "d": report.d,
          "m": report.m, "hypothesis_held": report.hypothesis_held,
          "vanishing_ok": report.vanishing_ok,
          "coefficients": {k: list(v)
                           for k, v in report.coefficients.items()}})
    note(f"m={report.m} hypothesis={report.hypothesis_held} "
         f"vanishing={report.vanishing_ok}")
    return 0


def cmd_certify(args):
    q = qio.read_quandle(args.quandle)
    phi = qio.read_cocycle(args.cocycle)
    cert = nonconstancy_certificates(q, phi.m, phi, knots=_load_knots(args),
                                     max_cosets=args.max_cosets)
    if cert is None:
        emit({"record": "certificate", "emitted": False})
        note("all invariants constant; no certificate")
    else:
        emit({"record": "certificate", "emitted": True,
              "extension_order": cert.extension.n,
              "witness_knots": cert.witness_knots,
              "conjugation_verdict": cert.conjugation_verdict})
        note(cert.text())
    return 0


def cmd_make(args):
    if args.family == "dihedral":
        q = dihedral_quandle(args.n)
        summary = f"dihedral quandle of order {args.n}"
    elif args.family == "trivial":
        q = trivial_quandle(args.n)
        summary = f"trivial quandle of order {args.n}"
    elif args.family == "alexander":
        q = alexander_quandle(args.n, args.t)
        summary = f"alexander quandle mod {args.n}, t={args.t}"
    elif args.family == "conj":
        g = qio.read_group(args.group)
        q, labels = conjugation_quandle(g, args.elem - 1)
        summary = f"conjugacy class of element {args.elem}, order {q.n}"
        emit({"record": "conj_labels",
              "labels": [v + 1 for v in labels]})
    elif args.family == "galex":
        g = qio.read_group(args.group)
        if args.conj_by is not None:
            f = conjugation_automorphism(g, args.conj_by - 1)
        else:
            images = tuple(int(v) - 1 for v in args.images.split(","))
            f = GroupAutomorphism(g, images)
        q = generalized_alexander_quandle(g, f)
        summary = f"generalized Alexander quandle of order {q.n}"
    elif args.family == "cyclic-group":
        g = cyclic_group(args.n)
        text = qio.group_to_text(g, comment=f"cyclic group of order {args.n}")
        if args.output:
            qio.write_text(args.output, text)
            note(f"cyclic group -> {args.output}")
        else:
            sys.stdout.write(text)
        return 0
    elif args.family == "sym-group":
        g, _ = symmetric_group(args.n)
        text = qio.group_to_text(
            g, comment=f"symmetric group on {args.n} points")
        if args.output:
            qio.write_text(args.output, text)
            note(f"symmetric group -> {args.output}")
        else:
            sys.stdout.write(text)
        return 0
    else:
        raise QuandleError(f"unknown family {args.family}")
    _write_quandle(q, args, summary)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="forge",
        description="finite quandles: extensions, cohomology, cocycle knot "
                    "invariants, enveloping groups")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check the quandle axioms")
    p.add_argument("--quandle", required=True)

    p = add("props", cmd_props, help="structural properties")
    p.add_argument("--quandle", required=True)

    p = add("inn-seq", cmd_inn_seq,
            help="iterate the inner representation to a faithful quandle")
    p.add_argument("--quandle", required=True)

    p = add("h2", cmd_h2, help="second cohomology with Z_m coefficients")
    p.add_argument("--quandle", required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--emit-reps", metavar="DIR")

    p = add("extend", cmd_extend, help="build an abelian extension")
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("-o", "--output")

    p = add("invariant", cmd_invariant,
            help="cocycle state-sum invariants over a knot table")
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--knots")
    p.add_argument("--tangle", action="store_true",
                   help="report 1-tangle colorings instead")

    p = add("vendramin", cmd_vendramin,
            help="decide the conjugation-quandle criterion")
    p.add_argument("--quandle", required=True)
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = add("recover-ext", cmd_recover_ext,
            help="recover the Z_2 cocycle of an index-2 inner representation")
    p.add_argument("--quandle", required=True)
    p.add_argument("-o", "--output")

    p = add("thm31", cmd_thm31,
            help="extension constancy pipeline over the knot corpus")
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--knots")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = add("thm35", cmd_thm35,
            help="power-cocycle coefficient vanishing check")
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--knots")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = add("certify", cmd_certify,
            help="emit no-inner-preimage certificates from non-constant "
                 "invariants")
    p.add_argument("--quandle", required=True)
    p.add_argument("--cocycle", required=True)
    p.add_argument("--knots")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = add("make", cmd_make, help="construct quandles and groups")
    p.add_argument("family",
                   choices=["dihedral", "trivial", "alexander", "conj",
                            "galex", "cyclic-group", "sym-group"])
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--group")
    p.add_argument("--elem", type=int,
                   help="1-based group element, matching the file format")
    p.add_argument("--conj-by", type=int,
                   help="1-based group element to conjugate by")
    p.add_argument("--images", help="comma-separated 1-based images")
    p.add_argument("-o", "--output")

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except TheoremViolation as exc:
        note(f"THEOREM VIOLATION: {exc}")
        return 2
    except (QuandleError, ValueError, OSError) as exc:
        note(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
