import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mackext.errors import ContextMismatch, ParseError
from mackext.group import Line, make_context
from mackext.rewrite import random_word
from mackext.words import (
    Element,
    concat,
    degree,
    element_from_json,
    element_to_json,
    format_element,
    gamma,
    mul_raw,
    parse_element,
    parse_word,
    relation_instances,
    tau,
)

CTX = make_context(3, 2)


def random_element(ctx, seed, terms=3, max_degree=5):
    rng = random.Random(seed)
    e = Element.zero(ctx)
    for _ in range(terms):
        e = e + Element.from_word(ctx, random_word(ctx, rng, max_degree), rng.randrange(1, ctx.p))
    return e


def test_concat_degree():
    w = concat((tau(1),), (gamma(Line((0, 1))),))
    assert w == (tau(1), gamma(Line((0, 1))))
    assert degree(w) == 3


def test_unit_and_cancellation(ctx32):
    e = parse_element(ctx32, "t1.g[0,1] + 2*t2")
    assert mul_raw(Element.one(ctx32), e) == e
    assert mul_raw(e, Element.one(ctx32)) == e
    w = parse_word(ctx32, "t1.t2")
    assert Element.from_word(ctx32, w, 2) + Element.from_word(ctx32, w, 1) == Element.zero(ctx32)


def test_parse_examples():
    e = parse_element(CTX, "2*t1.g[0,1] + t2")
    assert len(e) == 2
    assert e.terms[parse_word(CTX, "t1.g[0,1]")] == 2
    assert parse_element(CTX, "1") == Element.one(CTX)
    ctx5 = make_context(5, 2)
    assert parse_element(ctx5, "t1.t1.t1").support() == [(tau(1),) * 3]


def test_parse_canonicalises_lines():
    assert parse_element(CTX, "g[2,2]") == parse_element(CTX, "g[1,1]")


@pytest.mark.parametrize(
    "text",
    ["t1.x", "t3", "g[0,0]", "g[1,1,1]", "2*", "t1 + + t2", "", "g[1,0"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError) as info:
        parse_element(CTX, text)
    assert 0 <= info.value.position <= len(text)


def test_format_signs():
    e = parse_element(CTX, "2*t2.t1 + t1.t2")
    assert format_element(e) == "t1.t2 - t2.t1"
    assert format_element(Element.zero(CTX)) == "0"
    assert format_element(-Element.one(CTX)) == "- 1"


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        Element.one(CTX) + Element.one(make_context(5, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_text_and_json_round_trip(seed):
    e = random_element(CTX, seed)
    assert parse_element(CTX, format_element(e)) == e
    assert element_from_json(element_to_json(e)) == e


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_mul_raw_associative_bilinear(seed):
    a, b, c = (random_element(CTX, seed + k, terms=2, max_degree=3) for k in range(3))
    assert mul_raw(mul_raw(a, b), c) == mul_raw(a, mul_raw(b, c))
    assert mul_raw(a + b, c) == mul_raw(a, c) + mul_raw(b, c)
    assert mul_raw(a, b.scale(2)) == mul_raw(a, b).scale(2)


def test_relation_examples():
    ctx5 = make_context(5, 2)
    by_label = {i.label(): i.element for i in relation_instances(ctx5)}
    assert by_label["R2(i=2, j=1)"] == parse_element(ctx5, "t2.t1 + t1.t2")

    by_label = {i.label(): i.element for i in relation_instances(CTX)}
    assert by_label["R1(i=1)"] == parse_element(CTX, "t1.t1 + g[1,0] + g[1,1] + g[2,1]")
    r5 = by_label["R5(Q=<[1,0],[0,1]>, X=[1,0])"]
    total = parse_element(CTX, "g[1,0] + g[0,1] + g[1,1] + g[2,1]")
    g = parse_element(CTX, "g[1,0]")
    assert r5 == mul_raw(g, total) - mul_raw(total, g)


@pytest.mark.parametrize("p,r", [(3, 1), (3, 2), (5, 2), (3, 3)])
def test_relation_instances_homogeneous(p, r):
    for inst in relation_instances(make_context(p, r)):
        assert inst.element.is_homogeneous()
        if inst.element:
            assert inst.element.degree == inst.expected_degree


def test_homogeneous_components():
    e = parse_element(CTX, "t1 + g[1,0] + t1.t2 + 1")
    comps = e.homogeneous_components()
    assert sorted(comps) == [0, 1, 2]
    assert comps[2] == parse_element(CTX, "g[1,0] + t1.t2")
    assert not e.is_homogeneous()
