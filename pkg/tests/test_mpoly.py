import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from diophrec.errors import InvalidInputError
from diophrec.mpoly import (
    MultiPoly,
    PolyMatrix,
    determinant,
    parse,
    poly_eval,
    resultant,
    substitute,
)

V = ("x", "y", "z")
P_T_TEXT = "x^3 + 2*x^2*y + x^2*z + 2*x*y^2 - 2*x*y*z - x*z^2 + 2*y^3 - 2*y*z^2 + z^3"

exps = st.tuples(*[st.integers(0, 3)] * 3)
mpolys = st.dictionaries(exps, st.integers(-9, 9), max_size=6).map(lambda d: MultiPoly(V, d))
points = st.tuples(*[st.integers(-6, 6)] * 3)


def P_T():
    return parse(P_T_TEXT, V)


def to_sym(p: MultiPoly):
    syms = sympy.symbols(p.vars)
    return sum(c * sympy.Mul(*[s ** k for s, k in zip(syms, e)]) for e, c in p.items())


def test_render_canonical_order():
    x, y, z = MultiPoly.gens(V)
    p = z ** 3 - x * z ** 2 + 2 * x ** 2 * y + x ** 3
    assert p.render() == "x^3 + 2*x^2*y - x*z^2 + z^3"
    assert MultiPoly(V).render() == "0"


@pytest.mark.parametrize("point,value", [((0, 0, 1), 1), ((1, 2, 4), 1), ((0, 0, 0), 0)])
def test_eval_P_T(point, value):
    assert poly_eval(P_T(), point) == value


def test_eval_length_mismatch():
    with pytest.raises(InvalidInputError):
        poly_eval(P_T(), (1, 2))


def test_no_rational_coefficients():
    x, _, _ = MultiPoly.gens(V)
    with pytest.raises(InvalidInputError):
        x / 2


def test_substitute_tribonacci_shift():
    x, y, z = MultiPoly.gens(V)
    assert substitute(P_T(), {"x": y, "y": z, "z": x + y + z}) == P_T()


def test_substitute_identity():
    x = MultiPoly.var(("x",), "x")
    assert substitute(x ** 2, {"x": x}) == x ** 2


def test_substitute_backward_shift_23():
    p = parse("x^3 + 6*x^2*y + 2*x^2*z + 11*x*y^2 + 3*x*y*z - 3*x*z^2 + 7*y^3 + y^2*z - 4*y*z^2 + z^3", V)
    x, y, z = MultiPoly.gens(V)
    assert substitute(p, {"x": z - 3 * x - 2 * y, "y": x, "z": y}) == p


def test_substitute_unbound_variable():
    x, y, _ = MultiPoly.gens(V)
    with pytest.raises(InvalidInputError):
        substitute(P_T(), {"x": y, "y": x})


@settings(max_examples=50, deadline=None)
@given(mpolys, mpolys, mpolys, st.lists(points, min_size=20, max_size=20))
def test_ring_laws(p, q, r, pts):
    lhs, rhs = (p + q) * r, p * r + q * r
    assert lhs == rhs
    for v in pts:
        assert poly_eval(lhs, v) == (poly_eval(p, v) + poly_eval(q, v)) * poly_eval(r, v)


@settings(max_examples=30, deadline=None)
@given(mpolys, mpolys)
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sym(p * q) - to_sym(p) * to_sym(q)) == 0


@settings(max_examples=50, deadline=None)
@given(mpolys, mpolys, mpolys, mpolys, points)
def test_substitute_respects_evaluation(p, s1, s2, s3, v):
    sigma = {"x": s1, "y": s2, "z": s3}
    inner = tuple(poly_eval(s, v) for s in (s1, s2, s3))
    assert poly_eval(substitute(p, sigma), v) == poly_eval(p, inner)


@given(mpolys)
def test_render_parse_round_trip(p):
    text = p.render()
    assert parse(text, V) == p
    assert parse(text, V).render() == text


def test_determinant_examples():
    one, zero = MultiPoly.const(V, 1), MultiPoly(V)
    ident = PolyMatrix.from_rows([[one if i == j else zero for j in range(3)] for i in range(3)])
    assert determinant(ident) == 1

    x, y = MultiPoly.gens(("x", "y"))
    for b in range(1, 6):
        d = determinant(PolyMatrix.from_rows([[x, y], [y, b * y - x]]))
        assert d == -(x ** 2 - b * x * y + y ** 2)

    x, y, z = MultiPoly.gens(V)
    w = PolyMatrix.from_rows([[x, y, z], [y, z, x + y + z], [z, x + y + z, x + 2 * y + 2 * z]])
    assert determinant(w) == -P_T()


def test_determinant_non_square():
    x, y = MultiPoly.gens(("x", "y"))
    with pytest.raises(InvalidInputError):
        determinant(PolyMatrix.from_rows([[x, y]]))


@settings(max_examples=25, deadline=None)
@given(st.lists(mpolys, min_size=9, max_size=9))
def test_determinant_alternating(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    m = PolyMatrix.from_rows(rows)
    d = determinant(m)
    assert determinant(m.swap_rows(0, 2)) == -d
    assert determinant(PolyMatrix.from_rows([rows[0], rows[1], rows[0]])).is_zero()
    expected = sympy.Matrix([[to_sym(e) for e in r] for r in rows]).det()
    assert sympy.expand(to_sym(d) - expected) == 0


def test_resultant_against_sympy():
    t, s = MultiPoly.gens(("t", "s"))
    p = t ** 2 + s * t - 3 * s ** 2 + 1
    q = 2 * t ** 2 - s + t
    r = resultant(p, q, "t")
    T, S = sympy.symbols("t s")
    expected = sympy.resultant(to_sym(p), to_sym(q), T)
    assert sympy.expand(to_sym(r) - expected) == 0
    assert r.degree("t") == 0
