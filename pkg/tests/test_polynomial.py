from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cgsiter.algebra import RingSpec, pp_multiply
from cgsiter.errors import ParseError, UsageError
from cgsiter.polynomial import (
    Polynomial, add, divide_exact, evaluate_params, leading, leading_x, multiply,
    parse, partial_derivative, render, scale,
)

R = RingSpec(("x", "y"), ("c", "r"), "lex", "lex")
RAB = RingSpec(("x", "y"), ("a", "b"), "lex", "lex")
RINGS = [R, RingSpec(("x", "y"), ("c", "r"), "degrevlex", "degrevlex"),
         RingSpec(("x", "y"), ("c", "r"), "lex", "degrevlex")]


def p(text, ring=R):
    return parse(text, ring)


def polys(ring, max_terms=5):
    term = st.tuples(st.tuples(*[st.integers(0, 3)] * ring.nvars),
                     st.fractions(min_value=-5, max_value=5, max_denominator=4))
    return st.lists(term, max_size=max_terms).map(lambda ts: Polynomial(ring, ts))


points = st.tuples(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                   st.fractions(min_value=-4, max_value=4, max_denominator=3))


def test_arithmetic_examples():
    assert add(p("x^2 + y^2 - 1"), p("1 - y^2")) == p("x^2")
    assert multiply(p("x - c"), p("x - c")) == p("x^2 - 2*c*x + c^2")
    assert scale(p("2*x"), 0).terms == ()
    assert (p("x") - p("x")).is_zero()


def test_terms_sorted_and_nonzero():
    f = p("y + c + x^2 + 0*x")
    assert [pp for pp, _ in f.terms] == [(2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
    assert Polynomial(R, f.terms).terms == f.terms


def test_ring_mismatch():
    with pytest.raises(UsageError):
        p("x") + parse("x", RAB)


def test_evaluate_examples():
    f = parse("3*a*x*y^2 - b*x*y^2 + a*x^2 + b", RAB)
    assert evaluate_params(f, (1, 3)) == parse("x^2 + 3", RAB)
    assert evaluate_params(Polynomial.zero(RAB), (1, 3)).is_zero()
    assert evaluate_params(p("(x - c)^2 + y^2 - r"), (0, 1)) == p("x^2 + y^2 - 1")
    with pytest.raises(UsageError):
        evaluate_params(f, (1,))


def test_leading_examples():
    f = parse("(a^2 - b)*x^3*y + 3*a*b*x*y^2", RAB)
    assert leading(f) == ((3, 1, 2, 0), 1)
    assert leading(p("5")) == ((0, 0, 0, 0), 5)
    assert leading(p("-x + y")) == ((1, 0, 0, 0), -1)
    with pytest.raises(UsageError):
        leading(Polynomial.zero(R))


def test_leading_x_examples():
    f = parse("(a^2 - b)*x^3*y + 3*a*b*x*y^2", RAB)
    assert leading_x(f) == ((3, 1, 0, 0), parse("a^2 - b", RAB))
    g = p("c^2*y^2 + 1/4*c^4 - 1/2*r*c^2 + 1/4*r^2 - 1/2*c^2 - 1/2*r + 1/4")
    assert leading_x(g) == ((0, 2, 0, 0), p("c^2"))
    assert leading_x(p("c")) == ((0, 0, 0, 0), p("c"))
    with pytest.raises(UsageError):
        leading_x(Polynomial.zero(R))


def test_partial_derivative_examples():
    assert partial_derivative(p("c^2*r"), "c") == p("2*c*r")
    assert partial_derivative(p("r"), "c").is_zero()
    assert partial_derivative(p("c^3 - c"), "c") == p("3*c^2 - 1")
    with pytest.raises(UsageError):
        partial_derivative(p("c"), "z")


def test_parse_examples():
    x, y = Polynomial.var(R, "x"), Polynomial.var(R, "y")
    assert p("x^2 + y^2 - 1") == x * x + y * y - 1
    assert p("0").is_zero()
    assert p("(x - c)^2 + y^2 - r") == p("x^2 - 2*c*x + c^2 + y^2 - r")
    assert p("-1/2*c + 3/4") == Polynomial(R, {(0, 0, 1, 0): Fraction(-1, 2), (0, 0, 0, 0): Fraction(3, 4)})


@pytest.mark.parametrize("text,pos", [
    ("x +", 3), ("x ^ y", 4), ("2x", 1), ("z + 1", 0), ("(x + 1", 6), ("x $ y", 2), ("1/0", 2),
])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        p(text)
    assert exc.value.pos == pos


def test_render():
    assert render(Polynomial.zero(R)) == "0"
    assert render(p("c*x - 1/2*c^2 + 1/2*r - 1/2")) == "c*x - 1/2*c^2 + 1/2*r - 1/2"
    assert render(p("-x^2*y + 3")) == "-x^2*y + 3"


def test_divide_exact():
    assert divide_exact(p("c^2 - r^2"), p("c + r")) == p("c - r")
    with pytest.raises(UsageError):
        divide_exact(p("c^2 + 1"), p("c + r"))


@pytest.mark.parametrize("ring", RINGS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_evaluation_is_homomorphism(ring, data):
    f, g = data.draw(polys(ring)), data.draw(polys(ring))
    P = data.draw(points)
    assert evaluate_params(f * g, P) == evaluate_params(f, P) * evaluate_params(g, P)
    assert evaluate_params(f + g, P) == evaluate_params(f, P) + evaluate_params(g, P)
    assert all(not any(pp[ring.n_x:]) for pp, _ in evaluate_params(f, P).terms)


@pytest.mark.parametrize("ring", RINGS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_leading_x_consistency(ring, data):
    f = data.draw(polys(ring))
    if f.is_zero():
        return
    tx, lcx = leading_x(f)
    assert leading(f)[0] == pp_multiply(tx, leading(lcx)[0])
    assert leading(f)[1] == leading(lcx)[1]
    rest = f - lcx.mul_term(tx, 1)
    if not rest.is_zero() and not rest.is_pure_a():
        assert ring.ordering.key(leading_x(rest)[0]) < ring.ordering.key(tx)


@pytest.mark.parametrize("ring", RINGS)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_parse_render_roundtrip(ring, data):
    f = data.draw(polys(ring, max_terms=7))
    assert parse(render(f), ring) == f
