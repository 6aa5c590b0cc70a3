import itertools

from hypothesis import given
from hypothesis import strategies as st

from prerigid import schemas
from prerigid.grammar import brute_force_reduce, crosscheck_reducers, free_pregroup_reduce
from prerigid.grammar.pregroup import dp_outcomes

N, S = ("n", 0), ("s", 0)


def test_one_contraction_trace():
    v = free_pregroup_reduce([[N], [("n", 1), S]], S)
    assert v.accepted and v.trace == [(0, 1)]


def test_single_sentence_type():
    v = free_pregroup_reduce([[S]], S)
    assert v.accepted and v.trace == []


def test_no_contraction_rejected():
    assert not free_pregroup_reduce([[N], [N]], S).accepted


def test_left_adjoint_contraction():
    assert free_pregroup_reduce([[S, ("n", -1)], [N]], S).accepted


def test_english_lexicon():
    lex = schemas.load_lexicon("lexicon_english.json")
    for words, expected in lex.examples:
        assert free_pregroup_reduce(lex.types(words), lex.sentence, lex.window).accepted == expected


def test_transitive_sentence_trace_is_well_nested():
    lex = schemas.load_lexicon("lexicon_english.json")
    v = free_pregroup_reduce(lex.types(["John", "likes", "Mary"]), lex.sentence, lex.window)
    assert sorted(v.trace) == [(0, 1), (3, 4)]


def test_crosscheck_short_strings():
    rep = crosscheck_reducers(4, 2, (-1, 1))
    assert rep.passed and rep.details["strings_checked"] > 0


terms = st.lists(st.tuples(st.integers(0, 2), st.integers(-2, 2)), max_size=8).map(tuple)


@given(terms)
def test_dp_agrees_with_brute_force(ts):
    assert dp_outcomes(ts) == brute_force_reduce(ts)


# Interpret atoms in S3; a term (a, e) is g_a or its inverse by parity of e.
S3 = list(itertools.permutations(range(3)))


def _mul(p, q):
    return tuple(p[q[i]] for i in range(3))


def _inv(p):
    out = [0] * 3
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _value(ts, assign):
    v = (0, 1, 2)
    for a, e in ts:
        g = assign[a]
        v = _mul(v, g if e % 2 == 0 else _inv(g))
    return v


@given(terms, st.tuples(*[st.sampled_from(S3)] * 3), st.integers(0, 2), st.integers(-2, 2))
def test_accepted_strings_hold_in_a_group(ts, assign, atom, exp):
    target = (atom, exp)
    if free_pregroup_reduce([list(ts)], target).accepted:
        assert _value(ts, assign) == _value([target], assign)
