"""
Indices of the q(a,b) and r(a,b) families
=========================================

q(a,b) is (gl_a + gl_b) acting on two copies of the a x b matrices; r(a,b)
replaces one copy by gl_a^ab and a bracket into the other.  Their indices
follow gcd formulas, which the loop below checks on a small grid.
"""

import random
from math import gcd

from contactlie import coadjoint as co
from contactlie import families as F

rng = random.Random(2)

print(" a  b | ind q  gcd(2a,a+b) | ind r  gcd(2a,b)")
for a in range(0, 4):
    for b in range(0, 4):
        if a == b == 0:
            continue
        q, _ = F.q_ab(a, b)
        r, _ = F.r_ab(a, b)
        iq = co.index(q, rng=rng).index
        ir = co.index(r, rng=rng).index
        print(f"{a:2d} {b:2d} | {iq:5d}  {gcd(2 * a, a + b):11d} | {ir:5d}  {gcd(2 * a, b):8d}")

# Passing to total trace zero lowers the index by one, because the identity
# (1_a, 1_b) spans the centre.  When the result has index 1 the algebra may
# or may not be contact:
for a, b in [(2, 4), (1, 3)]:
    qb, _ = F.qbar_ab(a, b)
    v = co.is_contact_algebra(qb, rng=rng)
    tag = "certified" if v.certified else f"failure bound {v.failure_bound:.1e}"
    print(f"{qb.name}: dim {qb.dim}, index {co.index(qb, rng=rng).index}, contact {v.contact} ({tag})")
