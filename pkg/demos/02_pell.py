"""X^2 - D Y^2 = G: complete denominators versus exhaustive search."""

from rqff.contfrac import expand
from rqff.ffield import make_field
from rqff.pell import EXACT, UP_TO_SQUARE, brute_force, solve
from rqff.polyring import parse_poly
from rqff.quadext import make_discriminant

F5 = make_field(5)
disc = make_discriminant(parse_poly(F5, "T^2+2"))
e = expand(disc)
print("D = T^2+2, complete denominators:", [str(q) for q in e.Q[: e.ell + 1]])

for G in ("1", "2", "3", "4"):
    g = parse_poly(F5, G)
    exact = solve(disc, g, EXACT, e)
    loose = solve(disc, g, UP_TO_SQUARE, e)
    hits = brute_force(disc, g, max_deg_Y=2)
    print(f"G = {G}:")
    print(f"  exact      -> {(str(exact.X), str(exact.Y)) if exact else None}")
    print(f"  up to c^2  -> {(str(loose.X), str(loose.Y), loose.c_scale) if loose else None}")
    print(f"  brute force, deg Y <= 2: {[(str(s.X), str(s.Y)) for s in hits]}")

# G = 2 has no exact match: 2 is not +-Q_i, but 2 * 2^2 = 3 = -Q_1.
