"""Command-line entry point.

Exit status: 0 when every check passes, 1 when some check fails, 2 when a
fixture does not match its schema or the command line is malformed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable

from . import __version__, schemas, suite
from .errors import PrerigidError, SchemaError
from .report import FAIL, PASS, Report, Tally, merge

Job = Callable[[], Report]


# verbs


def _finrel(args) -> list[Job]:
    from .instances import FINREL
    from .laws import check_braiding, check_category_laws

    sets = FINREL.sets_up_to(args.max_size)
    opt = suite.Options(max_size=args.max_size)
    pairs = [(X, Y) for X in sets[:3] for Y in sets[:3]]
    return [lambda: suite.rel_predual(args.seed, opt),
            lambda: check_category_laws(FINREL, sets[:3], random.Random(args.seed)),
            lambda: check_braiding(FINREL, pairs, random.Random(args.seed), symmetric=True)]


def _finvect(args) -> list[Job]:
    from .instances import FINVECT
    from .laws import check_braiding, check_category_laws, check_opposite_involution

    dims = args.max_dim if args.max_dim is not None else 4
    opt = suite.Options(max_dim=dims)
    small = list(range(min(dims, 3) + 1))
    pairs = [(X, Y) for X in small[1:] for Y in small[1:]]
    braid = schemas.load_braiding(args.file) if args.file else None
    return [lambda: suite.finvect_predual(args.seed, opt),
            lambda: check_category_laws(FINVECT, small, random.Random(args.seed)),
            lambda: check_braiding(FINVECT, pairs, random.Random(args.seed), braid=braid, symmetric=True),
            lambda: check_opposite_involution(FINVECT, pairs)]


def _fam(args) -> list[Job]:
    if not args.file:
        return [lambda: suite.fam_prerigid(args.seed, suite.Options()),
                lambda: suite.fam_closed(args.seed, suite.Options())]
    from .constructions.fam import FamObject, fam_category, fam_predual, fam_predual_converse_check, fam_structure
    from .engine import finvect_structure, verify_predual
    from .instances import FINVECT

    families = schemas.load_families(args.file)

    def run() -> Report:
        base = finvect_structure()
        cat = fam_category(FINVECT)
        S = fam_structure(cat, base)
        rng = random.Random(args.seed)
        tests = [F for F in families if len(F) <= 3] + [FamObject.of({})]
        reps = []
        for Y in families:
            d = fam_predual(cat, Y, base)
            reps.append(verify_predual(Y, d, tests, solver=S.solver, rng=rng, claim=f"family {Y.to_json()}"))
            reps.append(fam_predual_converse_check(cat, Y, d, base))
        return merge("fixture families have product pre-duals", reps, "pre-duals in family categories")

    return [run]


def _diagram(args) -> list[Job]:
    if not args.file:
        return [lambda: suite.functor_predual(args.seed, suite.Options())]
    from .constructions.functorcat import FunctorCategory, check_functorcat_predual, constant

    index, F = schemas.load_diagram(args.file)

    def run() -> Report:
        cat = FunctorCategory(index)
        tests = [cat.unit, constant(index, 0), constant(index, 2), F]
        return check_functorcat_predual(cat, F, tests)

    return [run]


def _graded(args) -> list[Job]:
    if not args.file:
        return [lambda: suite.graded_prerigid(args.seed, suite.Options())]
    from .constructions.graded_dual import graded_predual, graded_tests
    from .engine import verify_predual

    cat, objects = schemas.load_graded(args.file)

    def run() -> Report:
        tests = graded_tests(cat, max_dim=1, max_degree=3) + objects
        reps = [verify_predual(X, graded_predual(cat, X), tests, claim=f"{cat.key} pre-dual of {X.to_json()}")
                for X in objects]
        return merge("fixture graded objects have formula pre-duals", reps, "graded pre-duals")

    return [run]


def _pomonoid(args) -> list[Job]:
    from .grammar import check_derived_laws, classify, validate_pomonoid
    from .grammar.oracle import brute_force_flags

    if args.action == "laws":
        doc = schemas.load_document(args.file)
        if doc["kind"] == "proto_inverses":
            p, rs, ls = schemas.load_proto_inverses(args.file)
            c = classify(p)
            c.right_star, c.left_star = rs, ls
            return [lambda: check_derived_laws(p, c)]
    p = schemas.load_pomonoid(args.file)
    if args.action == "validate":
        return [lambda: validate_pomonoid(p)]

    def prerequisite() -> Report | None:
        rep = validate_pomonoid(p)
        return None if rep.passed else rep

    if args.action == "classify":
        def run() -> Report:
            bad = prerequisite()
            if bad:
                return bad
            c = classify(p)
            t = Tally("classification agrees with direct evaluation of the definitions", "pomonoid classes")
            oracle = brute_force_flags(p)
            t.check(oracle == c.flags, "oracle", {"classify": c.flags, "oracle": oracle})
            t.check(suite._chain_ok(c.flags), "inclusion chain", c.flags)
            t.details["classification"] = c.to_json()
            t.details["elements"] = list(p.elements)
            return t.report()

        return [run]

    def laws() -> Report:
        return prerequisite() or check_derived_laws(p, classify(p))

    return [laws]


def _sentence_report(claim: str, examples, verdict_of, words) -> Report:
    t = Tally(claim, "sentence checking")
    if words:
        v = verdict_of(tuple(words))
        t.check(v.accepted, " ".join(words), v.to_json())
        t.details["verdict"] = v.to_json()
    else:
        for ws, expected in examples:
            v = verdict_of(ws)
            t.check(v.accepted == expected, " ".join(ws) or "<empty>", {"expected": expected, **v.to_json()})
    return t.report()


def _parse(args) -> list[Job]:
    from .grammar import classify, finite_sentence_check, free_pregroup_reduce

    if args.mode == "free":
        lex = schemas.load_lexicon(args.file)
        def reduce(ws):
            return free_pregroup_reduce(lex.types(ws), lex.sentence, lex.window)

        claim = "sentences reduce to the sentence type in the free pregroup"
        return [lambda: _sentence_report(claim, lex.examples, reduce, args.words)]
    lex = schemas.load_finite_lexicon(args.file)
    c = classify(lex.pomonoid)

    def verdict(ws):
        for w in ws:
            if w not in lex.words:
                raise PrerigidError(f"word {w!r} is not in the lexicon")
        return finite_sentence_check(lex.pomonoid, c, [lex.words[w] for w in ws], lex.sentence)

    claim = "sentences evaluate below the sentence type in the pomonoid"
    return [lambda: _sentence_report(claim, lex.examples, verdict, args.words)]


def _lift(args) -> list[Job]:
    from .engine import finvect_structure

    if args.mode == "tambara":
        return _tambara(args)
    if args.mode == "lax":
        from .lifting import check_dual_functor

        n = args.max_dim if args.max_dim is not None else 3
        return [lambda: check_dual_functor(finvect_structure(), list(range(n + 1)), random.Random(args.seed))]
    jobs: list[Job] = [lambda: suite.dual_functor(args.seed, suite.Options())]
    if args.file:
        from .lifting import check_barop_identity, check_bialgebra

        B = schemas.load_bialgebra(args.file)
        jobs += [lambda: check_bialgebra(B),
                 lambda: check_barop_identity(finvect_structure(), [B.coalgebra])]
    return jobs


def _tambara(args) -> list[Job]:
    from .lifting import check_tambara

    d = args.degree if args.degree is not None else 12
    return [lambda: check_tambara(d)]


def _witness(args) -> list[Job]:
    if args.kind == "not-closed":
        from .constructions.graded_dual import not_closed_witness_gradedf

        d = args.degree if args.degree is not None else 10
        return [lambda: not_closed_witness_gradedf(d)]
    from .grammar import decimals_counterexample_check

    d = args.degree if args.degree is not None else 3
    return [lambda: decimals_counterexample_check(d)]


def _simple(fn) -> Callable:
    return lambda args: [lambda: fn(args.seed, suite.Options())]


VERBS = {
    "finrel": _finrel,
    "finvect": _finvect,
    "fam": _fam,
    "maf": _simple(suite.maf_obstruction),
    "famrel": _simple(suite.famrel_prerigid),
    "diagram": _diagram,
    "graded": _graded,
    "pomonoid": _pomonoid,
    "parse": _parse,
    "lift": _lift,
    "witness": _witness,
    "tambara": _tambara,
}


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled morphisms (default 0)")
    common.add_argument("--max-size", type=int, default=2, help="largest set size for Rel checks")
    common.add_argument("--max-dim", type=int, default=None, help="largest dimension for FinVect checks")
    common.add_argument("--degree", type=int, default=None, help="degree or digit bound")
    common.add_argument("--out", type=Path, default=None, help="also write the JSON report here")
    common.add_argument("--format", choices=("json", "text"), default="text")

    p = argparse.ArgumentParser(prog="prerigid", description="Verify pre-rigid structures on small instances.")
    p.add_argument("--version", action="version", version=f"prerigid {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("finrel", parents=[common], help="Rel pre-duals and braiding")
    s = sub.add_parser("finvect", parents=[common], help="FinVect pre-duals and laws")
    s.add_argument("file", nargs="?", help="braiding fixture to check instead of the twist")
    s = sub.add_parser("fam", parents=[common], help="family categories")
    s.add_argument("file", nargs="?", help="families fixture")
    sub.add_parser("maf", parents=[common], help="Maf obstruction witness")
    sub.add_parser("famrel", parents=[common], help="FamRel over the point")
    s = sub.add_parser("diagram", parents=[common], help="functor-category pre-duals")
    s.add_argument("file", nargs="?", help="diagram fixture")
    s = sub.add_parser("graded", parents=[common], help="graded pre-duals")
    s.add_argument("file", nargs="?", help="graded fixture")
    s = sub.add_parser("pomonoid", parents=[common], help="pomonoid validation and classification")
    s.add_argument("action", choices=("validate", "classify", "laws"))
    s.add_argument("file")
    s = sub.add_parser("parse", parents=[common], help="check sentences against a lexicon")
    s.add_argument("mode", choices=("finite", "free"))
    s.add_argument("file")
    s.add_argument("words", nargs="*", help="sentence to check; the fixture examples when omitted")
    s = sub.add_parser("lift", parents=[common], help="lifting along the dual adjunction")
    s.add_argument("mode", choices=("lax", "barop", "tambara"))
    s.add_argument("file", nargs="?", help="bialgebra fixture (barop)")
    s = sub.add_parser("witness", parents=[common], help="bounded counterexamples")
    s.add_argument("kind", choices=("not-closed", "decimals"))
    sub.add_parser("tambara", parents=[common], help="alias of 'lift tambara'")
    s = sub.add_parser("all", parents=[common], help="the full acceptance matrix")
    s.add_argument("--only", type=int, nargs="+", help="criterion numbers to run")
    return p


def _command_echo(args) -> dict:
    skip = {"out", "format"}
    return {k: (str(v) if isinstance(v, Path) else v) for k, v in sorted(vars(args).items()) if k not in skip}


def _run_jobs(jobs: list[Job]) -> list[tuple[Report, float]]:
    def timed(job: Job):
        start = time.perf_counter()
        try:
            rep = job()
        except SchemaError:
            raise
        except PrerigidError as exc:
            rep = Report("check raised an error", FAIL, anchor="execution", witness={"error": type(exc).__name__, "message": str(exc)})
        return rep, time.perf_counter() - start

    with ThreadPoolExecutor(max_workers=4) as pool:
        return list(pool.map(timed, jobs))


def execute(args) -> tuple[dict, list[float]]:
    """Run a parsed command; returns the JSON report and per-check timings."""
    checks, times = [], []
    if args.verb == "all":
        schemas.scan()
        root = schemas.fixture_root()
        base = suite.Options()
        opt = suite.Options(max_size=args.max_size,
                            max_dim=base.max_dim if args.max_dim is None else args.max_dim,
                            degree=base.degree if args.degree is None else args.degree,
                            fixtures=root)
        for o in suite.run_criteria(args.seed, opt, set(args.only) if args.only else None):
            entry = {"criterion": o.criterion.number, "name": o.criterion.name, **o.report}
            checks.append(entry)
            times.append(o.elapsed)
    else:
        for rep, dt in _run_jobs(VERBS[args.verb](args)):
            checks.append(rep.to_json())
            times.append(dt)
    status = PASS if all(c["status"] == PASS for c in checks) else FAIL
    report = {"schema_version": schemas.SCHEMA_VERSION, "command": _command_echo(args), "seed": args.seed,
              "version": __version__, "checks": checks, "status": status}
    return report, times


def render_text(report: dict, times: list[float]) -> str:
    lines = []
    for c, dt in zip(report["checks"], times):
        tag = f"[{c['criterion']:2d}] " if "criterion" in c else ""
        lines.append(f"{c['status'].upper():4s}  {tag}{c['anchor']}: {c['claim']}  ({dt:.2f}s)")
        if c["status"] != PASS and "witness" in c:
            lines.append("      witness: " + json.dumps(c["witness"], sort_keys=True)[:400])
    lines.append(f"{report['status'].upper()}  {len(report['checks'])} checks, seed {report['seed']}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, times = execute(args)
    except SchemaError as exc:
        print(f"schema error at {exc.location}: {exc.message}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        args.out.write_text(text + "\n")
    print(text if args.format == "json" else render_text(report, times))
    return 0 if report["status"] == PASS else 1


if __name__ == "__main__":
    sys.exit(main())
