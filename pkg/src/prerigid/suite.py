"""The acceptance matrix: fourteen bounded verification runs.

Each criterion is a function ``(seed, options) -> Report``. The suite runner
evaluates them concurrently and assembles results in criterion order, so
reports depend only on the seed and the options.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .constructions.fam import (
    FamObject,
    check_fam_closed,
    fam_category,
    fam_predual,
    fam_predual_converse_check,
    fam_structure,
    maf_obstruction_witness,
)
from .constructions.famrel import check_famrel_inverse, check_rel_agreement, famrel_category, famrel_structure
from .constructions.functorcat import FunctorCategory, check_functorcat_predual, named_index, random_functor
from .constructions.graded_dual import graded_predual, graded_tests, not_closed_witness_gradedf
from .engine import (
    closed_to_prerigid,
    finrel_structure,
    finvect_structure,
    forward,
    terminal_unit_prerigid,
    transfer_predual,
    uniqueness_iso,
    verify_predual,
)
from .errors import PrerigidError, TransferBlocked
from .grammar import check_derived_laws, classify, crosscheck_reducers, decimals_counterexample_check
from .grammar import free_pregroup_reduce, validate_pomonoid
from .grammar.oracle import all_pomonoids, brute_force_flags
from .instances import FINREL, FINVECT, NATURALS, TERMINAL, cyclic_group, graded_category
from .instances.graded import degree_zero_adjunction, total_space_adjunction
from .lifting import check_barop_identity, check_dual_functor, dual_adjunction
from .lifting.algebra import check_adjunction
from .lifting.dual import check_units_symmetric
from .lifting.examples import group_coalgebra, seeded_coalgebras, unit_coalgebra
from .lifting.tambara import check_tambara
from .report import Report, Tally, merge
from . import schemas


@dataclass(frozen=True)
class Options:
    max_size: int = 2
    max_dim: int = 4
    degree: int = 12
    fixtures: object = None  # directory; None means the configured root


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    budget: float  # seconds
    run: Callable[[int, Options], Report]


# 1-2: the two basic compact closed instances


def rel_predual(seed: int, opt: Options) -> Report:
    S = finrel_structure()
    sets = FINREL.sets_up_to(min(opt.max_size, 2))
    reps = [verify_predual(X, S.predual(X), sets, claim=f"Rel pre-dual of a {len(X)}-element set")
            for X in sets]
    t = Tally("the dagger of the diagonal evaluation round-trips", "Rel is compact closed")
    for X in sets:
        d = S.predual(X)
        for T in sets:
            for u in FINREL.hom(T, X).elements:
                t.check(S.dagger(T, X, forward(d, X, u)) == u, f"|T|={len(T)}, |X|={len(X)}", {"u": u})
    reps.append(t.report())
    return merge("Rel is pre-rigid with X* = X", reps, "Rel is compact closed")


def finvect_predual(seed: int, opt: Options) -> Report:
    S = finvect_structure()
    rng = random.Random(seed)
    dims = range(opt.max_dim + 1)
    reps = [verify_predual(X, S.predual(X), dims, claim=f"FinVect pre-dual of dimension {X}") for X in dims]
    t = Tally("the closed-form dagger round-trips", "finite-dimensional vector spaces")
    for X in dims:
        d = S.predual(X)
        for T in dims:
            u = FINVECT.random_morphism(T, X, rng)
            t.check(S.dagger(T, X, forward(d, X, u)) == u, f"T={T}, X={X}", {"u": u})
            s = FINVECT.random_morphism(T * X, 1, rng)
            t.check(forward(d, X, S.dagger(T, X, s)) == s, f"T={T}, X={X} reverse", {"t": s})
    reps.append(t.report())
    return merge("FinVect is pre-rigid with the standard pairing", reps, "finite-dimensional vector spaces")


# 3-6: family constructions


def _random_family(rng: random.Random, size: int, max_dim: int = 2) -> FamObject:
    return FamObject.of({f"j{k}": rng.randint(0, max_dim) for k in range(size)})


def fam_prerigid(seed: int, opt: Options) -> Report:
    rng = random.Random(seed)
    base = finvect_structure()
    cat = fam_category(FINVECT)
    S = fam_structure(cat, base)
    tests = [FamObject.of({}), FamObject.of({"i": 1}), FamObject.of({"i": 0, "k": 2}),
             FamObject.of({"i": 1, "k": 1, "l": 2})]
    reps = []
    for n in range(20):
        Y = _random_family(rng, rng.randint(0, 3))
        d = fam_predual(cat, Y, base)
        reps.append(verify_predual(Y, d, tests, solver=S.solver, rng=rng, samples=2,
                                   claim=f"family #{n} {Y.to_json()}"))
        reps.append(fam_predual_converse_check(cat, Y, d, base))
    return merge("Fam(FinVect) pre-duals are products of fiber pre-duals over a point", reps,
                 "pre-duals in family categories")


def fam_closed(seed: int, opt: Options) -> Report:
    rng = random.Random(seed)
    cat = fam_category(FINVECT)
    fams = [FamObject.of({}), FamObject.of({"a": 1}), FamObject.of({"a": 1, "b": 2}),
            FamObject.of({"a": 2, "b": 0, "c": 1})]
    triples = [(X, Y, Z) for X in fams[1:] for Y in fams for Z in fams[1:]]
    rng.shuffle(triples)
    return check_fam_closed(cat, triples, rng, samples=50)


def maf_obstruction(seed: int, opt: Options) -> Report:
    reps = [maf_obstruction_witness(base) for base in (FINVECT, FINREL, TERMINAL)]
    return merge("Maf has no pre-duals over FinVect, Rel and the point", reps, "Maf obstruction")


def famrel_prerigid(seed: int, opt: Options) -> Report:
    rng = random.Random(seed)
    cat = famrel_category(TERMINAL)
    S = famrel_structure(cat, terminal_unit_prerigid(TERMINAL, [()]).structure)
    u0 = TERMINAL.unit
    sizes = range(4)
    fams = [FamObject.make([((f"x{i}",), u0) for i in range(n)], 1) for n in sizes]
    pairs = [(T, Y) for T in fams for Y in fams]
    return merge("FamRel over the point is pre-rigid and is Rel",
                 [check_famrel_inverse(cat, S, pairs, rng), check_rel_agreement(cat, S, sizes)],
                 "FamRel pre-duals")


# 7-9: functor categories and gradings


def _diagram_fixture(name: str, root):
    path = (root / f"diagram_{name}.json") if root is not None else f"diagram_{name}.json"
    return schemas.load_diagram(path)[1]


def functor_predual(seed: int, opt: Options) -> Report:
    rng = random.Random(seed)
    reps = []
    for name in ("point", "arrow", "square"):
        index = named_index(name)
        cat = FunctorCategory(index)
        F0 = _diagram_fixture(name, opt.fixtures)
        fixture = type(F0)(index, F0.dims, F0.maps)
        objs = [fixture] + [random_functor(index, rng, 2) for _ in range(2)]
        tests = [cat.unit] + [random_functor(index, rng, 2) for _ in range(2)]
        for F in objs:
            reps.append(check_functorcat_predual(cat, F, tests))
    return merge("functor categories into FinVect have pointwise pre-duals", reps, "functor category pre-duals")


def graded_prerigid(seed: int, opt: Options) -> Report:
    reps = []
    tally = Tally("the graded pre-dual agrees with the internal-hom pre-dual", "graded pre-duals")
    for monoid, degree in ((NATURALS, 3), (cyclic_group(2), 1)):
        cat = graded_category(FINVECT, monoid)
        objs = graded_tests(cat, max_dim=1, max_degree=degree)
        tests = graded_tests(cat, max_dim=1, max_degree=degree)
        closed = closed_to_prerigid(cat)
        for X in objs:
            d = graded_predual(cat, X)
            reps.append(verify_predual(X, d, tests, claim=f"{cat.key} pre-dual of {X.to_json()}"))
            try:
                uniqueness_iso(d, closed.predual(X), X)
                tally.check(True, f"{cat.key} {X.to_json()}")
            except PrerigidError as exc:
                tally.fail(f"{cat.key} {X.to_json()}", str(exc))
    reps.append(tally.report())

    cat = graded_category(FINVECT, NATURALS)
    t = Tally("pre-duals transfer along the degree-0 adjunction", "transfer of pre-duals")
    adj = degree_zero_adjunction(cat)
    S = finvect_structure()
    for X in graded_tests(cat, max_dim=1, max_degree=2):
        d = transfer_predual(adj, X, S)
        rep = verify_predual(X, d, graded_tests(cat, max_dim=1, max_degree=2))
        t.check(rep.passed, f"transferred pre-dual of {X.to_json()}", rep.witness)
    z2 = graded_category(FINVECT, cyclic_group(2))
    try:
        transfer_predual(total_space_adjunction(z2), z2.unit, S)
        t.fail("total-space adjunction refused", "transfer was not blocked")
    except TransferBlocked:
        t.check(True, "total-space adjunction refused")
    reps.append(t.report())
    return merge("graded vector spaces are pre-rigid", reps, "graded pre-duals")


def not_closed(seed: int, opt: Options) -> Report:
    return not_closed_witness_gradedf(10)


# 10-11, 14: lifting


def tambara(seed: int, opt: Options) -> Report:
    return check_tambara(opt.degree)


def dual_functor(seed: int, opt: Options) -> Report:
    rng = random.Random(seed)
    S = finvect_structure()
    coalgebras = [group_coalgebra(2), unit_coalgebra()] + seeded_coalgebras(rng, 2)
    return merge("the pre-dual functor lifts algebras as the opposite of coalgebras",
                 [check_dual_functor(S, [0, 1, 2, 3], rng), check_barop_identity(S, coalgebras)],
                 "lifts of the dual pair")


def units(seed: int, opt: Options) -> Report:
    S = finvect_structure()
    D = dual_adjunction(S)
    objs = [0, 1, 2, 3]
    return merge("η = j for the twist and the dual adjunction is an adjunction",
                 [check_units_symmetric(S, objs), check_adjunction(D.adjunction, objs, objs)],
                 "units of the pre-dual adjunction")


# 12-13: grammars


POMONOID_FIXTURES = ("trivial", "z2", "z3", "klein4", "idempotent_below", "idempotent_above",
                     "chain4_meet", "m3_meet", "vee_nil")
GROUP_FIXTURES = ("trivial", "z2", "z3", "klein4")


def _chain_ok(flags: dict) -> bool:
    return ((not flags["is_pregroup"] or flags["is_residuated"])
            and (not flags["is_residuated"] or flags["is_contractive"])
            and (not flags["is_contractive"] or flags["is_protogroup"]))


def pomonoids(seed: int, opt: Options) -> Report:
    t = Tally("classifier matches the brute-force oracle and the inclusion chain", "pomonoid classes")
    reps = []
    root = opt.fixtures
    for name in POMONOID_FIXTURES:
        p = schemas.load_pomonoid((root / f"{name}.json") if root is not None else f"{name}.json")
        if not validate_pomonoid(p).passed:
            t.fail(f"{name} validates")
            continue
        c = classify(p)
        t.check(_chain_ok(c.flags), f"{name} inclusion chain", c.flags)
        oracle = brute_force_flags(p)
        t.check(oracle == c.flags, f"{name} oracle", {"classify": c.flags, "oracle": oracle})
        if name in GROUP_FIXTURES:
            t.check(c.is_pregroup, f"{name} is a pregroup")
        if c.is_contractive:
            reps.append(check_derived_laws(p, c))
    count = 0
    for size in range(1, 4):
        for p in all_pomonoids(size):
            count += 1
            c = classify(p)
            if not (_chain_ok(c.flags) and brute_force_flags(p) == c.flags):
                t.fail(f"all pomonoids of size {size}", p.to_json())
                break
        t.note(f"all pomonoids of size {size}")
    t.details["enumerated"] = count
    reps.insert(0, t.report())
    reps.append(decimals_counterexample_check(3))
    return merge("pomonoid classification is sound", reps, "pomonoid classes")


def pregroup_parser(seed: int, opt: Options) -> Report:
    t = Tally("n . n^r s reduces to s in one contraction", "free pregroup contractions")
    v = free_pregroup_reduce([[("n", 0)], [("n", 1), ("s", 0)]], ("s", 0))
    t.check(v.accepted and v.trace == [(0, 1)], "[n, n^r s]", v.to_json())
    return merge("pregroup parsing is exact on short strings",
                 [crosscheck_reducers(6, 3, (-1, 1)), t.report()], "free pregroup contractions")


CRITERIA: tuple[Criterion, ...] = (
    Criterion(1, "Rel pre-rigidity", 1.0, rel_predual),
    Criterion(2, "FinVect pre-rigidity", 1.0, finvect_predual),
    Criterion(3, "Fam pre-dual formula", 5.0, fam_prerigid),
    Criterion(4, "Fam closedness", 5.0, fam_closed),
    Criterion(5, "Maf obstruction", 1.0, maf_obstruction),
    Criterion(6, "FamRel pre-dual", 2.0, famrel_prerigid),
    Criterion(7, "functor-category pre-dual", 10.0, functor_predual),
    Criterion(8, "graded pre-dual", 5.0, graded_prerigid),
    Criterion(9, "not-right-closed witness", 1.0, not_closed),
    Criterion(10, "Tambara witness", 2.0, tambara),
    Criterion(11, "dual functor and lifted algebras", 3.0, dual_functor),
    Criterion(12, "pomonoid classifier", 5.0, pomonoids),
    Criterion(13, "pregroup parser", 10.0, pregroup_parser),
    Criterion(14, "units of the dual adjunction", 1.0, units),
)


@dataclass
class Outcome:
    criterion: Criterion
    report: dict  # Report.to_json()
    elapsed: float = field(compare=False, default=0.0)

    @property
    def passed(self) -> bool:
        return self.report["status"] == "pass"


def evaluate(number: int, seed: int, opt: Options) -> tuple[dict, float]:
    """Run one criterion; the result is plain JSON so it can cross process boundaries."""
    c = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        rep = c.run(seed, opt)
    except schemas.SchemaError:
        raise
    except PrerigidError as exc:
        rep = Report(c.name, "fail", witness={"error": type(exc).__name__, "message": str(exc)},
                     anchor="execution")
    return rep.to_json(), time.perf_counter() - start


def available_cpus() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def run_criteria(seed: int = 0, opt: Options | None = None, only=None, workers: int | None = None) -> list[Outcome]:
    """Criteria run in separate processes when more than one CPU is available;
    results come back in criterion order."""
    opt = opt or Options()
    workers = min(4, available_cpus()) if workers is None else workers
    chosen = [c for c in CRITERIA if only is None or c.number in only]
    args = [(c.number, seed, opt) for c in chosen]
    if workers > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, *zip(*args)))
    else:
        results = [evaluate(*a) for a in args]
    return [Outcome(c, rep, dt) for c, (rep, dt) in zip(chosen, results)]
