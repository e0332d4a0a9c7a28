"""
``synla`` command-line interface.

Every subcommand reads a matrix file (``--input``), builds a structured report
and prints it as JSON or as text rendered from that same report.

Exit codes: 0 success, 1 NotVectorLattice, 2 HypothesesNotMet (``certify``),
64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import genlattice, proj_effect, synaptic_ops
from .commutant import Subspace, bicommutant, commutant, extend_to_cblock, is_cblock
from .errors import SynlaError
from .instance_gen import KINDS, GenSpec, generate
from .symmat import DEFAULT_TOL, MatrixFileError, TolerancePolicy, matrix_document, read_matrix_file
from .vlcert import (
    HYPOTHESES_NOT_MET,
    NOT_VECTOR_LATTICE,
    CertReport,
    certify_vector_lattice,
    render_text,
)

EXIT_OK = 0
EXIT_NOT_VL = 1
EXIT_HYPOTHESES = 2
EXIT_USAGE = 64
EXIT_DATA = 65

OPS = ("abs", "sqrt", "pos", "neg", "carrier", "inverse", "resolution", "spectral-proj")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _named(name, m):
    return {"name": name, "rows": np.asarray(m, dtype=float).tolist()}


def _common(p, needs_input=True):
    if needs_input:
        p.add_argument("--input", required=True, help="matrix file (JSON)")
    p.add_argument("--tol", type=float, default=None, help="override eq/psd/comm tolerances")
    p.add_argument("--rank-tol", type=float, default=None, help="override the rank cutoff factor")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="synla", description="Synaptic-algebra calculus on symmetric matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ops", help="spectral operations on each input matrix")
    _common(p)
    p.add_argument("--op", choices=OPS, required=True)
    p.add_argument("--lam", type=float, default=0.0, help="level for spectral-proj")

    p = sub.add_parser("lattice", help="generalized infimum/supremum of two matrices")
    _common(p)
    p.add_argument("--a", default=None, help="name of the first operand (default: first matrix)")
    p.add_argument("--b", default=None, help="name of the second operand (default: second matrix)")
    p.add_argument("--trials", type=int, default=100, help="maximality perturbation trials")

    p = sub.add_parser("classify", help="classify a family of projections or effects")
    _common(p)
    p.add_argument("--kind", choices=("proj", "effect"), required=True)

    p = sub.add_parser("commutant", help="commutant of the input family")
    _common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--bi", action="store_true", help="bicommutant")
    mode.add_argument("--cblock-check", action="store_true", help="is the family a C-block?")
    mode.add_argument("--extend", action="store_true", help="extend a commuting family to a C-block")

    p = sub.add_parser("certify", help="decide whether span(input) is a vector lattice")
    _common(p)
    p.add_argument("--budget", type=int, default=500)

    p = sub.add_parser("gen", help="write seeded random instances as a matrix file")
    _common(p, needs_input=False)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--spectrum", type=float, nargs=2, default=(-1.0, 1.0), metavar=("LO", "HI"))
    p.add_argument("--output", default=None, help="path to write (default: stdout)")

    p = sub.add_parser("selftest", help="run the built-in invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _tolerance(args) -> TolerancePolicy:
    kw = {}
    if getattr(args, "tol", None) is not None:
        kw.update(eq=args.tol, psd=args.tol, comm=args.tol)
    if getattr(args, "rank_tol", None) is not None:
        kw["rank"] = args.rank_tol
    try:
        return DEFAULT_TOL.with_overrides(**kw) if kw else DEFAULT_TOL
    except ValueError as exc:
        raise UsageError(f"invalid tolerance: {exc}") from exc


def _config(args, tol):
    cfg = {k: v for k, v in vars(args).items() if k not in ("tol", "rank_tol")}
    cfg["tol"] = {"eq": tol.eq, "psd": tol.psd, "comm": tol.comm, "rank": tol.rank}
    if isinstance(cfg.get("spectrum"), (list, tuple)):
        cfg["spectrum"] = list(cfg["spectrum"])
    return cfg


def _report(verdict=None, conditions=None, witnesses=(), residuals=None, config=None, **extra):
    doc = {
        "verdict": verdict,
        "conditions": conditions or {},
        "witnesses": list(witnesses),
        "residuals": residuals or {},
        "config": config or {},
    }
    doc.update(extra)
    return doc


# -- subcommands ------------------------------------------------------------


def _run_ops(args, tol, named):
    results = []
    for name, m in named:
        if args.op == "resolution":
            res = synaptic_ops.spectral_resolution(m, tol)
            for k, (lam, p) in enumerate(res.breakpoints):
                results.append(_named(f"{name}.p[{k}]@{lam:.12g}", p))
            continue
        if args.op == "abs":
            out = synaptic_ops.absolute(m)
        elif args.op == "sqrt":
            out = synaptic_ops.sqrt(m, tol)
        elif args.op == "pos":
            out = synaptic_ops.pos_part(m)
        elif args.op == "neg":
            out = synaptic_ops.neg_part(m)
        elif args.op == "carrier":
            out = synaptic_ops.carrier(m, tol)
        elif args.op == "inverse":
            out = synaptic_ops.invert(m, tol)
        else:
            out = synaptic_ops.spectral_proj(m, args.lam, tol)
        results.append(_named(f"{args.op}({name})", out))
    return _report(witnesses=results), EXIT_OK


def _pick(named, key, default_index):
    if key is None:
        if len(named) <= default_index:
            raise MatrixFileError("lattice needs at least two matrices")
        return named[default_index]
    for name, m in named:
        if name == key:
            return name, m
    raise MatrixFileError(f"no matrix named {key!r}")


def _run_lattice(args, tol, named):
    (na, a), (nb, b) = _pick(named, args.a, 0), _pick(named, args.b, 1)
    lo, hi = genlattice.ginf(a, b), genlattice.gsup(a, b)
    disj = genlattice.check_disjoint(a, b, tol)
    maxi = genlattice.check_maximal_lower_bound(a, b, trials=args.trials, seed=args.seed, tol=tol)
    conditions = {
        "disjoint": {"status": disj.disjoint, "consistent": disj.consistent, "values": disj.values},
        "maximal-lower-bound": {
            "status": maxi.ok,
            "checked": maxi.checked,
            "violations": len(maxi.violations),
        },
    }
    witnesses = [_named(f"ginf({na},{nb})", lo), _named(f"gsup({na},{nb})", hi)]
    residuals = {"ginf_min_eig": genlattice.ginf_min_eigenvalue(a, b)}
    return _report(None, conditions, witnesses, residuals), EXIT_OK


def _run_classify(args, tol, named):
    family = [m for _, m in named]
    if args.kind == "proj":
        verdict = proj_effect.classify_projection_set(family, tol)
    else:
        verdict = proj_effect.classify_commutative_effect_set(family, tol)
    d = verdict.to_dict()
    witnesses = []
    for w in d["witnesses"]:
        i, j = w["pair"]
        witnesses.append(_named(named[i][0], named[i][1]))
        witnesses.append(_named(named[j][0], named[j][1]))
    return (
        _report(d["structure"], {"checks": d["witnesses"]}, witnesses, notes=d.get("notes", [])),
        EXIT_OK,
    )


def _run_commutant(args, tol, named):
    mats = [m for _, m in named]
    n = mats[0].shape[0]
    if args.cblock_check:
        ok = is_cblock(mats, tol)
        c = commutant(mats, tol)
        span = Subspace.from_spanning(mats, n, tol)
        return (
            _report(
                "C-block" if ok else "not-C-block",
                residuals={"span_dim": span.dim, "commutant_dim": c.dim},
            ),
            EXIT_OK,
        )
    if args.bi:
        space, label = bicommutant(mats, tol), "bicommutant"
    elif args.extend:
        space, label = extend_to_cblock(mats, n, args.seed, tol), "cblock"
    else:
        space, label = commutant(mats, tol), "commutant"
    basis = [_named(f"{label}[{k}]", m) for k, m in enumerate(space.basis)]
    return _report(label, witnesses=basis, residuals={"dim": space.dim, "n": n}), EXIT_OK


def _run_certify(args, tol, named):
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    n = named[0][1].shape[0] if named else None
    if n is None:
        raise MatrixFileError("certify needs at least one matrix")
    V = Subspace.from_spanning([m for _, m in named], n, tol)
    if V.dim == 0:
        raise MatrixFileError("the input matrices span the zero subspace")
    report = certify_vector_lattice(V, budget=args.budget, seed=args.seed, tol=tol)
    doc = report.to_dict()
    doc["witnesses"] = [_named(name, m) for name, m in report.witnesses]
    cl = report.closure
    doc["residuals"] = {
        "abs": cl.abs_residual,
        "carrier": cl.carrier_residual,
        **{f"derived.{k}": v for k, v in cl.derived_residuals.items()},
    }
    doc["config"] = {**doc["config"], **_config(args, tol)}
    code = {HYPOTHESES_NOT_MET: EXIT_HYPOTHESES, NOT_VECTOR_LATTICE: EXIT_NOT_VL}.get(
        report.verdict, EXIT_OK
    )
    return doc, code


def _run_gen(args, tol):
    try:
        spec = GenSpec(args.kind, args.n, args.count, args.seed, tuple(args.spectrum))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    items = generate(spec)
    named = []
    if args.kind == "commuting-family" or args.kind in ("sym", "psd", "projection"):
        named = [(f"m{k}", m) for k, m in enumerate(items)]
    elif args.kind in ("ordered-pair", "zero-product-pair"):
        for k, (a, b) in enumerate(items):
            named += [(f"a{k}", a), (f"b{k}", b)]
    else:
        for k, space in enumerate(items):
            prefix = f"s{k}." if len(items) > 1 else ""
            named += [(f"{prefix}v{i}", m) for i, m in enumerate(space.basis)]
    doc = matrix_document(named, args.n)
    text = json.dumps(doc, indent=1)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text)
    return EXIT_OK


def _render(doc) -> str:
    if "checks" in doc:
        lines = [
            f"{'PASS' if c['passed'] else 'FAIL'}  {c['check']}" + (f"  ({c['error']})" if c["error"] else "")
            for c in doc["checks"]
        ]
        lines.append(f"{doc['passed']} passed, {doc['failed']} failed")
        return "\n".join(lines)
    if "closure" in doc:
        return render_text(CertReport.from_dict(doc))
    lines = []
    if doc.get("verdict") is not None:
        lines.append(f"verdict: {doc['verdict']}")
    for k, v in doc.get("residuals", {}).items():
        lines.append(f"{k}: {v}")
    for k, v in doc.get("conditions", {}).items():
        lines.append(f"{k}: {json.dumps(v)}")
    for note in doc.get("notes", []):
        lines.append(f"note: {note}")
    with np.printoptions(precision=6, suppress=True):
        for w in doc.get("witnesses", []):
            lines.append(f"{w['name']} =\n{np.array(w['rows'])}")
    return "\n".join(lines)


def _emit(doc, fmt):
    if fmt == "json":
        print(json.dumps(doc, indent=1, default=float))
    else:
        print(_render(doc))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        tol = _tolerance(args)
        if args.command == "selftest":
            from .selftest import run_selftest

            result = run_selftest(seed=args.seed)
            _emit(result, args.format)
            return EXIT_OK if result["failed"] == 0 else 1
        if args.command == "gen":
            return _run_gen(args, tol)
        _, named = read_matrix_file(args.input, tol)
        if not named:
            raise MatrixFileError("the input file holds no matrices")
        runner = {
            "ops": _run_ops,
            "lattice": _run_lattice,
            "classify": _run_classify,
            "commutant": _run_commutant,
            "certify": _run_certify,
        }[args.command]
        doc, code = runner(args, tol, named)
        if args.command != "certify":
            doc["config"] = _config(args, tol)
        _emit(doc, args.format)
        return code
    except UsageError as exc:
        print(f"synla: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MatrixFileError, SynlaError) as exc:
        print(f"synla: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
