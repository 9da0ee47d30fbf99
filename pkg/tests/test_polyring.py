import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rqff.errors import BothZero, DivisionByZero, PolyParseError
from rqff.ffield import make_field
from rqff.polyring import (
    Poly,
    divrem,
    evaluate,
    format_poly,
    gcd,
    irreducibles,
    is_irreducible,
    is_squarefree,
    parse_poly,
    poly_sqrt,
    powmod,
    random_irreducible,
    random_poly,
    residue_symbol,
    xgcd,
)

F3, F5 = make_field(3), make_field(5)


def P(ctx, s):
    return parse_poly(ctx, s)


def test_ring_examples():
    T = Poly.T(F5)
    assert (T + 1) * (T - 1) == P(F5, "T^2+4")
    assert (3 * T**2 + 1) + (2 * T**2 + 4) == Poly.zero(F5)
    assert (Poly.T(F3) + 1) ** 3 == P(F3, "T^3+1")


def test_divrem_examples():
    T = Poly.T(F5)
    assert divrem(2 * T, Poly.constant(F5, 2)) == (T, Poly.zero(F5))
    assert divrem(T**2 + 1, T) == (T, Poly.one(F5))
    assert divrem(Poly.one(F5), T) == (Poly.zero(F5), Poly.one(F5))
    with pytest.raises(DivisionByZero):
        divrem(T, Poly.zero(F5))


def test_gcd_examples():
    T = Poly.T(F5)
    assert gcd(T**2 - 1, T - 1) == P(F5, "T+4")
    assert gcd(2 * T, Poly.constant(F5, 2)) == Poly.one(F5)
    assert gcd(T * (T**2 + 1), T**2 + 1) == T**2 + 1
    with pytest.raises(BothZero):
        gcd(Poly.zero(F5), Poly.zero(F5))


def test_squarefree_and_irreducible():
    assert is_squarefree(P(F5, "T^2+1"))
    assert not is_squarefree(P(F5, "T^2+2*T+1"))
    assert is_squarefree(P(F5, "T^6+2*T^4+2*T^2+1"))
    assert is_irreducible(Poly.T(F5))
    assert not is_irreducible(P(F5, "T^2+1"))
    assert is_irreducible(P(F5, "T^2+2"))


def test_irreducible_counts():
    # number of monic irreducibles of degree d: (1/d) sum mu(d/k) q^k
    assert len(list(irreducibles(F3, 2))) == 3
    assert len(list(irreducibles(F3, 3))) == 8
    assert len(list(irreducibles(F5, 2))) == 10
    assert len(list(irreducibles(make_field(3, 2), 2))) == 36


def test_poly_sqrt_examples():
    assert poly_sqrt(P(F5, "T^2+2*T+1")) == P(F5, "T+1")
    assert poly_sqrt(P(F5, "T^2+2")) is None
    assert poly_sqrt(P(F5, "T^4+2*T^2+1")) == P(F5, "T^2+1")


def test_residue_symbol_examples():
    T = Poly.T(F5)
    assert residue_symbol(Poly.one(F5), T) == 1
    assert residue_symbol(T**2 + 1, T) == 1
    assert residue_symbol(Poly.constant(F5, 2), T) == -1
    assert residue_symbol(T, T) == 0


def test_evaluate():
    assert evaluate(P(F5, "T^2+1"), 2).value == 0
    F25 = make_field(5, 2)
    x = F25.element(F25.gen())
    assert evaluate(P(F5, "T^2+2"), x).value == 0
    assert evaluate(Poly.one(F5), x).value == 1


def test_random_irreducible():
    assert random_irreducible(F5, 1, 7).degree == 1
    quads = {P(F3, s) for s in ("T^2+1", "T^2+T+2", "T^2+2*T+2")}
    for seed in range(10):
        assert random_irreducible(F3, 2, seed) in quads
        assert is_irreducible(random_irreducible(F5, 2, seed))
    assert random_irreducible(F5, 3, 4) == random_irreducible(F5, 3, 4)


def test_text_format_round_trip():
    for s in ("T^6+2*T^4+2*T^2+1", "T", "0", "4", "3*T^5+T+2"):
        assert format_poly(P(F5, s)) == s
    assert P(F5, "T^2-1") == P(F5, "T^2+4")
    F9 = make_field(3, 2)
    f = P(F9, "(2*x+1)*T^2+(x)*T+2")
    assert format_poly(P(F9, format_poly(f))) == format_poly(f) == "(2*x+1)*T^2+(x)*T+2"
    with pytest.raises(PolyParseError):
        P(F5, "T^^2")
    with pytest.raises(PolyParseError):
        P(F5, "")


def test_json_round_trip():
    F9 = make_field(3, 2)
    rng = random.Random(3)
    for ctx in (F5, F9):
        for _ in range(20):
            f = random_poly(ctx, rng.randrange(6), rng, monic=False)
            assert Poly(ctx, f.to_json()) == f


def test_scale_uses_encoded_elements():
    F9 = make_field(3, 2)
    x = F9.gen()
    f = Poly(F9, [0, x])
    assert f.scale(F9.inv(x)) == Poly.T(F9)
    assert f.monic() == Poly.T(F9)


def test_large_products_match_schoolbook():
    import rqff.polyring as pr

    rng = random.Random(11)
    for ctx in (F3, make_field(3, 2), make_field(7, 3)):
        for _ in range(10):
            a = random_poly(ctx, rng.randrange(30, 60), rng, monic=False)
            b = random_poly(ctx, rng.randrange(30, 60), rng, monic=False)
            fast = a * b
            ref = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
            for i, x in enumerate(a.coeffs):
                for j, y in enumerate(b.coeffs):
                    ref[i + j] = ctx.add(ref[i + j], ctx.mul(x, y))
            assert fast == pr.Poly(ctx, ref)


FIELDS = [make_field(3), make_field(5), make_field(7), make_field(3, 2)]


def polys(max_deg=6):
    return st.builds(
        lambda k, d, seed: random_poly(FIELDS[k], d, random.Random(seed), monic=False),
        st.integers(0, len(FIELDS) - 1),
        st.integers(0, max_deg),
        st.integers(0, 10**9),
    )


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 3), st.integers(0, 8), st.integers(0, 6), st.integers(0, 10**9))
def test_divrem_round_trip(k, df, dg, seed):
    ctx = FIELDS[k]
    rng = random.Random(seed)
    f = random_poly(ctx, df, rng, monic=False)
    g = random_poly(ctx, dg, rng, monic=False)
    q, r = divrem(f, g)
    assert q * g + r == f and r.degree < g.degree


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.integers(0, 6), st.integers(0, 6), st.integers(0, 10**9))
def test_xgcd_bezout(k, df, dg, seed):
    ctx = FIELDS[k]
    rng = random.Random(seed)
    f = random_poly(ctx, df, rng, monic=False)
    g = random_poly(ctx, dg, rng, monic=False)
    d, s, t = xgcd(f, g)
    assert s * f + t * g == d == gcd(f, g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 3), st.integers(1, 3), st.integers(0, 10**9))
def test_residue_symbol_multiplicative(k, dP, seed):
    ctx = FIELDS[k]
    rng = random.Random(seed)
    Pm = random_irreducible(ctx, dP, seed)
    F = random_poly(ctx, rng.randrange(6), rng, monic=False)
    G = random_poly(ctx, rng.randrange(6), rng, monic=False)
    if (F % Pm).is_zero() or (G % Pm).is_zero():
        return
    assert residue_symbol(F * G, Pm) == residue_symbol(F, Pm) * residue_symbol(G, Pm)


def test_euler_criterion_exhaustive():
    for ctx, d in ((F3, 1), (F3, 2), (F3, 3), (F5, 1), (F5, 2), (make_field(7), 1), (make_field(3, 2), 1)):
        if ctx.q**d > 125:
            continue
        for Pm in irreducibles(ctx, d):
            squares = {(x * x) % Pm for x in _residues(ctx, d)}
            for F in _residues(ctx, d):
                if F.is_zero():
                    continue
                assert (residue_symbol(F, Pm) == 1) == (F in squares)


def _residues(ctx, d):
    from itertools import product

    for cs in product(range(ctx.q), repeat=d):
        yield Poly(ctx, list(cs))


@settings(max_examples=60, deadline=None)
@given(polys())
def test_poly_sqrt_properties(f):
    r = poly_sqrt(f * f)
    assert r is not None and r * r == f * f
    s = poly_sqrt(f)
    if s is not None:
        assert s * s == f


def test_powmod():
    T = Poly.T(F5)
    M = P(F5, "T^3+T+1")
    assert powmod(T, 125, M) == (T**125) % M
