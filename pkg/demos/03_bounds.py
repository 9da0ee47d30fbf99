"""Class number lower bounds from a split prime, on the closed-form families."""

from rqff.bounds import FamilySpec, lower_bound, make_family
from rqff.ffield import make_field
from rqff.polyring import parse_poly
from rqff.quadext import find_splitting_primes
from rqff.zeta import class_numbers

F5 = make_field(5)
P = lambda s: parse_poly(F5, s)  # noqa: E731

specs = [
    FamilySpec("example", m=2),
    FamilySpec("example", m=3),
    FamilySpec("thm2_F2c", F=P("T^3+T"), c=4, P=P("T")),
    FamilySpec("cor1", P=P("T"), G=P("T^2+1"), c=4),
    FamilySpec("cor2", S=P("T^2+2"), H=P("1"), P=P("T+1"), c=2),
    FamilySpec("cor3", S=P("T^2+2"), P=P("T"), m=1),
    FamilySpec("thm3_plus_plus", a=P("3*T"), m=2),
]
for spec in specs:
    inst = make_family(spec, F5)
    Pr = inst.suggested_P
    rep = lower_bound(inst.disc, Pr)
    h = class_numbers(inst.disc)
    print(f"{spec.kind:15s} D = {inst.disc.D}")
    print(f"    P = {Pr}: predicted {inst.predicted_bound(Pr)}, engine {rep.bound}, true h = {h.h_O}")

# Every split prime gives a bound; the best one is not always the family's P.
disc = make_family(FamilySpec("example", m=2), F5).disc
for Pr in find_splitting_primes(disc, 2):
    print(f"  P = {Pr}: bound {lower_bound(disc, Pr).bound}")
