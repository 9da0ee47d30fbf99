"""Audit of the printed P_n, Q_n, a_n tables for (A^m +- ...)^2 +- A."""

from rqff.ffield import make_field
from rqff.polyring import parse_poly
from rqff.tables import SECOND, compare

F5 = make_field(5)
a = parse_poly(F5, "3*T")  # A = 2a + 1 = T + 1

print(compare(1, 5, a).render())

for variant in (1, 2, 3, 4):
    for m in range(2, 8):
        rep = compare(variant, m, a)
        mm = rep.interior_mismatches(SECOND)
        print(
            f"variant {variant} m={m}: engine v={rep.engine_v} printed v={rep.claimed_v} "
            f"{rep.summary()} interior second-section mismatches={len(mm)} "
            f"min deg Q={rep.min_qdeg} (n={rep.min_witness})"
        )

# The one interior mismatch at m = 3: a_4 = (f + P_4) / Q_4 picks up a constant.
(mm,) = compare(1, 3, a).interior_mismatches(SECOND)
print(f"\nm=3 row {mm.n} {mm.field}: printed {mm.expected}, engine {mm.actual}")
