"""Exact class numbers by point counting, and the regulator cross-check."""

import random

from rqff.errors import ValidationError
from rqff.ffield import make_field
from rqff.polyring import random_poly
from rqff.quadext import make_discriminant
from rqff.zeta import class_numbers, count_points

F5 = make_field(5)
rng = random.Random(0)
shown = 0
while shown < 8:
    try:
        disc = make_discriminant(random_poly(F5, rng.choice([4, 6, 8]), rng))
    except ValidationError:
        continue
    shown += 1
    r = class_numbers(disc)
    # the L-polynomial from N_1..N_g predicts N_{g+1}; recount to confirm
    ok = r.L.predicted_count(r.g + 1) == count_points(disc, r.g + 1)
    print(f"D = {disc.D}: g={r.g} N={r.point_counts} L={list(r.L.coeffs)} hX={r.h_X} R={r.R} hO={r.h_O} recount ok={ok}")
