import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prerigid import schemas
from prerigid.errors import ValidationError
from prerigid.grammar import (
    Pomonoid,
    check_derived_laws,
    classify,
    decimals_counterexample_check,
    finite_sentence_check,
    validate_pomonoid,
)
from prerigid.grammar.oracle import all_pomonoids, brute_force_flags

FIXTURES = ["trivial", "z2", "z3", "klein4", "idempotent_below", "idempotent_above",
            "chain4_meet", "m3_meet", "vee_nil"]


def load(name):
    return schemas.load_pomonoid(f"{name}.json")


def chain_holds(f):
    return ((not f["is_pregroup"] or f["is_residuated"])
            and (not f["is_residuated"] or f["is_contractive"])
            and (not f["is_contractive"] or f["is_protogroup"]))


# validation

def test_trivial_and_idempotent_validate():
    assert validate_pomonoid(load("trivial")).passed
    assert validate_pomonoid(load("idempotent_below")).passed


def test_nonassociative_table_reports_triple():
    rep = validate_pomonoid(schemas.load_pomonoid("negative/pomonoid_nonassoc.json"))
    assert not rep.passed
    kind, *triple = rep.witness["detail"][0]
    assert kind == "associativity" and len(triple) == 3


def test_nonmonotone_order_rejected():
    rep = validate_pomonoid(schemas.load_pomonoid("negative/pomonoid_nonmonotone.json"))
    assert not rep.passed


def test_build_checks_table_shape():
    with pytest.raises(ValidationError):
        Pomonoid.build(["1", "a"], [[1, 0]], [[0, 1], [1, 1]], 0)


# classification

@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_matches_oracle(name):
    p = load(name)
    c = classify(p)
    assert c.flags == brute_force_flags(p)
    assert chain_holds(c.flags)


@pytest.mark.parametrize("name", ["trivial", "z2", "z3", "klein4"])
def test_groups_are_pregroups_with_inverse_stars(name):
    p = load(name)
    c = classify(p)
    assert c.is_pregroup
    for t in range(p.size):
        assert p.mul(t, c.right_star[t]) == p.unit == p.mul(c.left_star[t], t)
    assert check_derived_laws(p, c).passed


@given(st.integers(1, 7))
def test_cyclic_groups_are_pregroups(n):
    p = Pomonoid.cyclic(n)
    c = classify(p)
    assert c.is_pregroup
    assert all((t + c.right_star[t]) % n == 0 for t in range(n))


def test_unit_maximum_is_contractive_with_trivial_stars():
    p = load("idempotent_below")
    c = classify(p)
    assert c.is_contractive and c.is_residuated and not c.is_pregroup
    assert set(c.right_star) == {p.unit} == set(c.left_star)
    assert check_derived_laws(p, c).passed


def test_distinct_separating_fixtures():
    flags = {n: classify(load(n)).flags for n in ("idempotent_above", "m3_meet", "vee_nil")}
    assert not flags["idempotent_above"]["is_protogroup"]
    for name in ("m3_meet", "vee_nil"):
        assert flags[name]["is_contractive"] and not flags[name]["is_residuated"]


def test_corrupted_star_table_fails_specific_law():
    p, rs, ls = schemas.load_proto_inverses("negative/proto_inverses_corrupt.json")
    c = classify(p)
    c.right_star, c.left_star = rs, ls
    rep = check_derived_laws(p, c)
    assert not rep.passed
    assert rep.witness["case"] in {"t <= *(t*)", "t <= (*t)*", "b*.a* <= (a.b)*", "a <= b* iff b <= *a"}


def test_derived_laws_refuse_non_contractive():
    p = load("idempotent_above")
    assert not check_derived_laws(p, classify(p)).passed


@pytest.mark.parametrize("size", [1, 2, 3])
def test_classifier_matches_oracle_exhaustively(size):
    for p in all_pomonoids(size):
        c = classify(p)
        assert c.flags == brute_force_flags(p), p.to_json()
        assert chain_holds(c.flags)


def test_enumeration_counts_small_sizes():
    # monoids up to isomorphism with all compatible partial orders
    counts = [sum(1 for _ in all_pomonoids(n)) for n in (1, 2)]
    assert counts[0] == 1
    assert counts[1] >= 2


@pytest.mark.slow
def test_classifier_matches_oracle_size_four():
    seen = 0
    for p in all_pomonoids(4):
        seen += 1
        assert classify(p).flags == brute_force_flags(p), p.to_json()
    assert seen == 3132


# sentence checking in finite pomonoids

def test_single_sentence_word_accepted():
    p = load("z3")
    c = classify(p)
    s = p.index("g")
    assert finite_sentence_check(p, c, [s], s).accepted


def test_group_inverse_pair_then_sentence():
    p = load("z3")
    c = classify(p)
    g, g2 = p.index("g"), p.index("g2")
    assert finite_sentence_check(p, c, [g, g2, g], g).accepted
    assert not finite_sentence_check(p, c, [g, g], g).accepted


def test_empty_sentence_is_the_unit():
    p = load("chain4_meet")
    v = finite_sentence_check(p, classify(p), [], p.index("1"))
    assert v.value == p.elements[p.unit] and not v.accepted


def test_rejected_when_product_above_sentence():
    p = load("idempotent_below")
    c = classify(p)
    one, a = p.unit, p.index("a")
    assert not finite_sentence_check(p, c, [one, one], a).accepted
    assert finite_sentence_check(p, c, [a, one], a).accepted


def test_sentence_check_needs_protogroup():
    p = load("idempotent_above")
    with pytest.raises(ValidationError):
        finite_sentence_check(p, classify(p), [0], 0)


def test_finite_lexicon_fixture():
    lex = schemas.load_finite_lexicon("finite_chain.json")
    c = classify(lex.pomonoid)
    for words, expected in lex.examples:
        v = finite_sentence_check(lex.pomonoid, c, [lex.words[w] for w in words], lex.sentence)
        assert v.accepted == expected, words


# decimals

def test_decimals_bound_two_and_three():
    chain = decimals_counterexample_check(3).details["chain"]
    assert chain[1] == {"candidate": "1.34", "beaten_by": "1.334"}
    assert chain[2] == {"candidate": "1.334", "beaten_by": "1.3334"}
    assert decimals_counterexample_check(2).passed


def test_decimals_bound_one_inconclusive():
    rep = decimals_counterexample_check(1)
    assert not rep.passed and rep.details["inconclusive"]


# brute-force oracle self-check on an explicit product order

def test_oracle_on_product_of_two_chains():
    # {0,1}^2 under meet with unit (1,1): a lattice, contractive, residuated (Heyting)
    els = list(itertools.product([0, 1], repeat=2))
    names = ["".join(map(str, e)) for e in els]
    leq = [[int(a[0] <= b[0] and a[1] <= b[1]) for b in els] for a in els]
    mult = [[els.index((min(a[0], b[0]), min(a[1], b[1]))) for b in els] for a in els]
    p = Pomonoid.build(names, leq, mult, els.index((1, 1)))
    f = brute_force_flags(p)
    assert f["is_contractive"] and f["is_residuated"] and not f["is_pregroup"]
    assert classify(p).flags == f
