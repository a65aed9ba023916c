"""
Semi-invariants of the Borel subalgebra of sl_3
===============================================

In the basis h, h1, x, y, z the Borel of sl_3 has two semi-invariants of
degree at most 2, no invariants, and one rational invariant built from them.
"""

import random

from contactlie import coadjoint as co
from contactlie import families as F
from contactlie.lie import subalgebra
from contactlie.semiinv import canonical_truncation, semi_invariants_up_to_degree, weight_relation_and_generator

b = F.borel_sl3()
sis = semi_invariants_up_to_degree(b, 2)
for s in sis:
    print(f"{s.to_string(b.basis):<14} weight {[str(w) for w in s.weight]}")

rel = weight_relation_and_generator(sis)
print(f"rational invariant: ({rel.numerator.to_string(b.basis)}) / ({rel.denominator.to_string(b.basis)})")

# The contact semi-invariant is the product of the two generators.
print("f =", co.contact_semi_invariant(b).to_string(b.basis))

# Every semi-invariant becomes an invariant of the canonical truncation, the
# common kernel of the weights.  Its Takiff algebras have index k * 2.
tr = canonical_truncation(b, 2)
qtr = subalgebra(b, tr.subalgebra, name="b_tr")
rng = random.Random(4)
print("q_tr basis:", tr.subalgebra.labels(), "index", co.index(qtr, rng=rng).index)
for k in (1, 2, 3):
    print(f"takiff(q_tr, {k}) index", co.index(F.takiff(qtr, k), rng=rng).index)
