import pytest

from rqff.errors import DegreeTooLarge, ZeroInput
from rqff.ffield import make_field
from rqff.pell import EXACT, UP_TO_SQUARE, brute_force, solve
from rqff.polyring import Poly, gcd, parse_poly
from rqff.quadext import make_discriminant, norm

F5 = make_field(5)
DISC = make_discriminant(parse_poly(F5, "T^2+2"))


def P(s):
    return parse_poly(F5, s)


def test_solve_examples():
    s = solve(DISC, P("3"), EXACT)
    assert (s.X, s.Y, s.index) == (P("T"), P("1"), 1)
    s = solve(DISC, P("1"), EXACT)
    assert (s.X, s.Y, s.index) == (P("T^2+1"), P("T"), 2)
    s = solve(DISC, P("2"), UP_TO_SQUARE)
    assert (s.X, s.Y, s.c_scale) == (P("2*T"), P("2"), 2)
    assert solve(DISC, P("2"), EXACT) is None


def test_minus_one_is_a_square_class_here():
    # -1 = 2^2 in F_5, so G = -1 is solvable with (2, 0)
    s = solve(DISC, P("4"), UP_TO_SQUARE)
    assert s is not None and norm(s.X, s.Y, DISC) == P("4")
    assert any(b.X == P("2") and b.Y.is_zero() for b in brute_force(DISC, P("4"), 3))


def test_brute_force_examples():
    assert any(b.X == P("T") and b.Y == P("1") for b in brute_force(DISC, P("3"), 1))
    assert any(b.X == P("1") and b.Y.is_zero() for b in brute_force(DISC, P("1"), 0))


def test_solve_rejects():
    with pytest.raises(ZeroInput):
        solve(DISC, Poly.zero(F5))
    with pytest.raises(DegreeTooLarge):
        solve(DISC, P("T"))


def test_agreement_over_f5_quartics():
    from rqff.contfrac import expand

    G_list = [P(s) for s in ("1", "2", "3", "4", "T", "2*T+1", "3*T+4")]
    for Dtxt in ("T^4+T", "T^4+T^2+2", "T^4+3*T^3+T+3", "T^4+2*T^2+T+2"):
        disc = make_discriminant(P(Dtxt))
        e = expand(disc)
        for G in G_list:
            sol = solve(disc, G, UP_TO_SQUARE, e)
            brute = brute_force(disc, G, e.regulator)
            assert (sol is None) == (not brute), (Dtxt, str(G))
            for s in brute + ([sol] if sol else []):
                assert norm(s.X, s.Y, disc) == G and gcd(s.X, s.Y).degree == 0
