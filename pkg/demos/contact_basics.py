"""
Contact forms on small Lie algebras
===================================

A Lie algebra of odd dimension 2n+1 is contact when some linear form alpha
satisfies (d alpha)^n ^ alpha != 0.  This walk-through builds a few small
algebras and asks the library about them.
"""

import random

from contactlie import coadjoint as co
from contactlie import families as F

rng = random.Random(1)

# The three-dimensional Heisenberg algebra: [x, y] = z.
heis = F.heisenberg(1)
print(heis, "basis", heis.basis)

# Its index is 1: a generic coadjoint stabiliser is the line through z.
print("index:", co.index(heis, rng=rng).index)

# A random form is a contact form as soon as it is non-zero on z.
v = co.is_contact_algebra(heis, rng=rng)
print("contact:", v.contact, "certificate:", [str(a) for a in v.witness])

# The contact semi-invariant f vanishes exactly off the contact forms.  For
# Heisenberg it is a power of z, and so is the fundamental semi-invariant p.
print("p =", co.fundamental_semi_invariant(heis).to_string(heis.basis))
print("f =", co.contact_semi_invariant(heis).to_string(heis.basis))

# sl_2 is contact too; here p = 1, so its singular set has codimension 2.
rep = co.analyze(F.sl(2), rng=rng)
print("sl2: contact", rep.contact, "codim2", rep.codim2, "f =", rep.f.to_string(F.sl(2).basis))

# Not every index-1 algebra is contact.  For the trace-zero version of q(1,1)
# the form f is identically zero and the generic stabiliser is ad-nilpotent.
qbar, _ = F.qbar_ab(1, 1)
rep = co.analyze(qbar, rng=rng)
print(qbar.name, "index", rep.index, "contact", rep.contact, "certified by", rep.contact_method)
print("generic stabiliser:", rep.stabiliser_class, "stable point:", rep.stable)
