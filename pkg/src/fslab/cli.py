"""Command-line entry point ``fslab``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import catalog, endo, invariants, rings
from .corpus import CorpusConfig, generate_corpus, load_instance
from .errors import FslabError, ParseError
from .modules import submodule_lattice
from .report import legend, render
from .results import CheckResult

EXIT_THEOREM = 5


def _checks_payload(results: list[CheckResult]) -> list[dict]:
    return [r.as_dict() for r in results]


def _load_ring(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", location=f"{path}:{exc.lineno}:{exc.colno}") from None
    from .corpus import parse_ring

    if "ring" in data:
        return data.get("label", os.path.basename(path)), parse_ring(data["ring"])
    return os.path.basename(path), parse_ring(data, where="$")


def ring_report(label, R) -> tuple[dict, list[CheckResult]]:
    checks = [
        rings.theorem0_check(R, "right"),
        rings.theorem0_check(R, "left"),
        rings.jacobson_cross_check(R),
        rings.brauer_check(R),
        rings.local_us_ring_check(R, "right"),
    ]
    if rings.is_semiprime(R):
        checks.append(rings.semiprime_equivalence_check(R))
    J = rings.jacobson_radical(R)
    us, smalls = rings.is_us_ring(R, "right")
    payload = {
        "label": label,
        "ring": {"presentation": rings.describe_presentation(R.presentation), "order": R.order,
                 "commutative": R.commutative},
        "ideals": {side: [list(I.elements) for I in rings.ideals(R, side)] for side in ("right", "left", "two-sided")},
        "jacobson_radical": list(J.elements),
        "units": sorted(R.units),
        "idempotents": list(R.idempotents),
        "flags": {
            "us_ring": us,
            "local": rings.is_local_ring(R),
            "semiprime": rings.is_semiprime(R),
            "division_ring": rings.is_division_ring(R),
        },
        "small_right_ideals": [list(s.elements) for s in smalls],
        "checks": _checks_payload(checks),
        "legend": {str(i): list(lab) for i, lab in enumerate(R.labels)},
    }
    return payload, checks


def invariant_payload(rep: invariants.InvariantReport) -> dict:
    subs = lambda xs: [list(x.elements) for x in xs]  # noqa: E731
    return {
        "radical": list(rep.radical.elements),
        "socle": list(rep.socle.elements),
        "soc_of_rad": list(rep.soc_of_rad.elements),
        "small_submodules": subs(rep.small_submodules),
        "essential_submodules": subs(rep.essential_submodules),
        "minimal_submodules": subs(rep.minimal_submodules),
        "maximal_submodules": subs(rep.maximal_submodules),
        "goldie_dim": rep.goldie_dim,
        "hollow_dim": rep.hollow_dim,
        "length": rep.length,
        "krull_dim": rep.krull_dim,
        "noeth_dim": rep.noeth_dim,
        "flags": {
            "fs": rep.fs,
            "fsm": rep.fsm,
            "us": rep.us,
            "usm": rep.usm,
            "local": rep.local,
            "dual_local": rep.dual_local,
            "ue": rep.ue,
            "homogeneous": rep.homogeneous,
            "homogeneous_in_module": rep.homogeneous_in_module,
            "finitely_embedded": rep.finitely_embedded,
            "semisimple": rep.semisimple,
        },
        "fs_small_count": rep.fs_small_count,
        "fsm_small_minimal_count": rep.fsm_small_minimal_count,
        "goldie_family": subs(rep.goldie_family),
        "hollow_family": subs(rep.hollow_family),
    }


def _module_header(inst) -> dict:
    M = inst.module
    return {
        "label": inst.label,
        "ring": {"presentation": rings.describe_presentation(inst.ring.presentation), "order": inst.ring.order},
        "module_order": M.order,
        "lattice_nodes": len(submodule_lattice(M)),
    }


def _hasse(inst, figures, suffix="lattice"):
    if not figures:
        return None
    from .plotting import plot_hasse

    lat = submodule_lattice(inst.module)
    rad = invariants.lattice_radical(lat)
    soc = invariants.lattice_socle(lat)
    path = os.path.join(figures, f"{_slug(inst.label)}_{suffix}.png")
    return plot_hasse(
        lat, path, title=inst.label,
        highlight={"Rad": {rad}, "Soc": {soc}, "small": set(invariants.small_nodes(lat))},
        labels=lambda i: str(lat.sizes[i]),
    )


def _slug(label: str) -> str:
    keep = [c if c.isalnum() else "_" for c in label]
    return "".join(keep).strip("_") or "instance"


def cmd_ring_analyze(args):
    label, R = _load_ring(args.file)
    payload, checks = ring_report(label, R)
    if args.figures:
        from .plotting import plot_hasse

        lat = rings.ideal_lattice(R, "right")
        payload["figures"] = [plot_hasse(lat, os.path.join(args.figures, f"{_slug(label)}_right_ideals.png"),
                                         title=f"{label}: right ideals", labels=lambda i: str(lat.sizes[i]))]
    return "ring_analysis", payload, all(c.passed for c in checks)


def cmd_module_analyze(args):
    inst = load_instance(args.file)
    M = inst.module
    rep = invariants.classify(M)
    checks = [c(M) for c in invariants.MODULE_CHECKS]
    payload = _module_header(inst)
    payload["invariants"] = invariant_payload(rep)
    payload["checks"] = _checks_payload(checks)
    payload["legend"] = legend(M)
    fig = _hasse(inst, args.figures)
    if fig:
        payload["figures"] = [fig]
    return "module_analysis", payload, all(c.passed for c in checks)


def cmd_module_decompose(args):
    inst = load_instance(args.file)
    d = invariants.decompose(inst.module)
    check = invariants.theorem_3_18_check(inst.module)
    payload = _module_header(inst)
    payload["decomposition"] = {
        "semisimple_part": [list(p.elements) for p in d.semisimple_part],
        "semisimple_sum": list(d.semisimple_sum.elements),
        "complement": list(d.complement.elements),
        "certificates": d.certificates,
    }
    payload["check"] = check.as_dict()
    payload["legend"] = legend(inst.module)
    fig = _hasse(inst, args.figures)
    if fig:
        payload["figures"] = [fig]
    return "decomposition", payload, check.passed


def cmd_symmetry_check(args):
    inst = load_instance(args.file)
    M = inst.module
    rep = endo.lattices_coincide(M)
    checks = [c(M) for c in endo.SYMMETRY_CHECKS] if M.ring.commutative else []
    payload = _module_header(inst)
    mult, mult_witness = endo.is_multiplication(M) if M.ring.commutative else (None, None)
    selfgen, sg_witness = endo.is_self_generator(M)
    payload["symmetry"] = rep.as_dict()
    payload["end_ring_order"] = M._end.ring.order
    payload["end_ring_commutative"] = M._end.ring.commutative
    payload["multiplication"] = {"value": mult, "witness": list(mult_witness.elements) if mult_witness else None}
    payload["self_generator"] = {"value": selfgen, "witness": list(sg_witness.elements) if sg_witness else None}
    payload["s_lattice"] = [list(rep.s_lattice.ids(i)) for i in rep.s_lattice]
    payload["checks"] = _checks_payload(checks)
    payload["legend"] = legend(M)
    if args.figures:
        from .plotting import plot_hasse

        base = os.path.join(args.figures, _slug(inst.label))
        payload["figures"] = [
            plot_hasse(rep.r_lattice, f"{base}_r_lattice.png", title=f"{inst.label}: R-submodules",
                       labels=lambda i: str(rep.r_lattice.sizes[i])),
            plot_hasse(rep.s_lattice, f"{base}_s_lattice.png", title=f"{inst.label}: S-submodules",
                       labels=lambda i: str(rep.s_lattice.sizes[i])),
        ]
    return "symmetry", payload, all(c.passed for c in checks)


def cmd_suite_run(args):
    from .suite import run_suite

    config = CorpusConfig(args.max_ring_order, args.max_module_size, args.direct_sum_ring_order, args.seed)
    if args.corpus:
        with open(args.corpus) as fh:
            corpus = json.load(fh)
    else:
        corpus = generate_corpus(config)
    result = run_suite(corpus, jobs=args.jobs, config=config)
    payload = result.as_dict()
    if args.figures:
        from .plotting import plot_invariant_scatter, plot_suite_summary

        payload["figures"] = [
            plot_suite_summary(result.summary, os.path.join(args.figures, "suite_summary.png")),
            plot_invariant_scatter(result.instances, os.path.join(args.figures, "suite_invariants.png")),
        ]
    return "suite", payload, result.passed


def cmd_catalog_show(args):
    m = catalog.parse_name(args.name)
    payload = catalog.show(m)
    ok = True
    if args.checks:
        checks = [catalog.essential_extension_remark_check(), catalog.example_0123_check()]
        payload["checks"] = _checks_payload(checks)
        ok = all(c.passed for c in checks)
    return "catalog_entry", payload, ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--figures", metavar="DIR", help="also render figures into DIR")
    common.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="fslab", description="Finite module lattice laboratory.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="group", required=True)

    ring = sub.add_parser("ring").add_subparsers(dest="command", required=True)
    p = ring.add_parser("analyze", parents=[common], help="ideals, radical and ring-level checks")
    p.add_argument("file")
    p.set_defaults(func=cmd_ring_analyze)

    module = sub.add_parser("module").add_subparsers(dest="command", required=True)
    p = module.add_parser("analyze", parents=[common], help="full invariant report")
    p.add_argument("file")
    p.set_defaults(func=cmd_module_analyze)
    p = module.add_parser("decompose", parents=[common], help="semisimple plus small-socle splitting")
    p.add_argument("file")
    p.set_defaults(func=cmd_module_decompose)

    sym = sub.add_parser("symmetry").add_subparsers(dest="command", required=True)
    p = sym.add_parser("check", parents=[common], help="compare R- and End(M)-submodule lattices")
    p.add_argument("file")
    p.set_defaults(func=cmd_symmetry_check)

    suite = sub.add_parser("suite").add_subparsers(dest="command", required=True)
    p = suite.add_parser("run", parents=[common], help="run every verifier over a corpus")
    p.add_argument("--max-ring-order", type=int, default=64)
    p.add_argument("--max-module-size", type=int, default=256)
    p.add_argument("--direct-sum-ring-order", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--corpus", metavar="FILE", help="JSON list of instance descriptors instead of the generated corpus")
    p.set_defaults(func=cmd_suite_run)

    cat = sub.add_parser("catalog").add_subparsers(dest="command", required=True)
    p = cat.add_parser("show", parents=[common], help="symbolic Z-module entry: Z, Q, Prufer:p, FgAb:r,d1,...")
    p.add_argument("name")
    p.add_argument("--checks", action="store_true", help="also run the catalog-level checks")
    p.set_defaults(func=cmd_catalog_show)
    return parser


def _error_doc(exc: FslabError) -> dict:
    doc = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
    for attr in ("location", "witness", "ceiling", "found"):
        v = getattr(exc, attr, None)
        if v is not None:
            doc[attr] = v if not isinstance(v, tuple) else list(v)
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        kind, payload, ok = args.func(args)
    except FslabError as exc:
        print(json.dumps(_error_doc(exc), default=str), file=sys.stderr)
        return exc.exit_code
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "ParseError", "message": str(exc), "exit_code": 2}), file=sys.stderr)
        return 2
    text = render(kind, payload, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        status = "ok" if ok else "theorem failures"
        print(f"{kind}: {status}; report written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0 if ok else EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
