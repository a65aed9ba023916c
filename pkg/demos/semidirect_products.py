"""
Contact semi-direct products
============================

For q = l + V with V an Abelian ideal, the contact question can be moved to
the stabiliser l_gamma of a generic gamma in V*.  The smallest interesting
case is a line k s acting on k^2 by two characters.
"""

import random

from contactlie import families as F
from contactlie.semidirect import analyze_semidirect, principal_element, rais_check

rng = random.Random(3)

for lam, mu in [(1, 2), (3, 3)]:
    q, decs = F.k_two_characters(lam, mu)
    for name, d in sorted(decs.items()):
        res = analyze_semidirect(d, rng=rng)
        print(f"{q.name} split '{name}': case {res.case}, {res.verdict}")
        for step in res.chain:
            print("   ", step)

# The index of a semi-direct product is ind l_gamma + dim V - dim(L gamma).
q, decs = F.sl2_m_copies(4)
lhs, rhs, ok = rais_check(decs["levi"], rng=rng)
print(f"{q.name}: ind q = {lhs}, formula gives {rhs}")

# A principal element of a Frobenius algebra h at beta is the s with
# ad*(s) beta = beta.  In the two-dimensional algebra [a, x] = x, at x*:
h = F.frobenius_2d()
print("principal element:", [str(c) for c in principal_element(h, (0, 1))], "i.e. s = -a")
