"""Scanning for discriminants with provably nontrivial class groups."""

from rqff.cli import search
from rqff.ffield import make_field

hits, exhausted = search(make_field(5), max_deg=8, min_bound=3, budget=150, seed=1)
print(f"{len(hits)} hits (budget exhausted: {exhausted})")
for h in hits[:15]:
    print(f"  [{h.source}] D = {h.D}, P = {h.P}: h >= {h.bound}, exact h = {h.h_O}")
