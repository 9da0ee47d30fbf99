"""Continued fraction of sqrt(D) over F_5 and what the period tells us."""

from rqff.contfrac import check_invariants, check_symmetry, expand
from rqff.ffield import make_field
from rqff.polyring import parse_poly
from rqff.quadext import make_discriminant

F5 = make_field(5)

for text in ("T^2+2", "T^4+T", "T^6+2*T^4+2*T^2+1", "T^6+T+1"):
    e = expand(make_discriminant(parse_poly(F5, text)))
    print(f"D = {text}")
    print(f"  ell = {e.ell}, v = {e.v}, regulator = {e.regulator}")
    print(f"  partial quotients: {[str(a) for a in e.a]}")
    print(f"  Q_0..Q_v: {[str(q) for q in e.Q[: e.v + 1]]}")
    U, V = e.unit
    print(f"  fundamental unit: ({U}) + ({V}) sqrt(D)")
    print(f"  palindromic: {check_symmetry(e).exact}")
    failed = [k for k, ok in check_invariants(e).items() if not ok]
    print(f"  invariant failures: {failed or 'none'}")

# Over F_9 the same engine runs on encoded extension elements.
F9 = make_field(3, 2)
e = expand(make_discriminant(parse_poly(F9, "T^4+(x)*T+1")))
print(f"\nF_9, D = T^4+(x)*T+1: ell = {e.ell}, v = {e.v}, regulator = {e.regulator}")
