"""Tour of the group constructors and structural invariants.

Run:  python demos/01_building_groups.py
"""

from centauts import (
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    invariants,
)
from centauts.corpus import dicyclic_group, heisenberg_group

# ---------------------------------------------------------------------------
# Three ways to build a group: a raw multiplication table, permutation
# generators, and the built-in catalog constructors.
# ---------------------------------------------------------------------------

c2 = from_cayley_table([[0, 1], [1, 0]], name="C2")
print(f"{c2.name}: order {c2.n}, identity at index {c2.identity}")

# the symmetries of a square, generated by a 4-cycle and a reflection
d8 = from_permutation_generators(4, [[1, 2, 3, 0], [2, 1, 0, 3]], name="D8")
print(f"{d8.name}: order {d8.n}, element orders {d8.element_orders()}")

q8 = dicyclic_group(2, "Q8")
print(f"{q8.name}: order {q8.n}, "
      f"{sum(1 for o in q8.element_orders() if o == 2)} element of order 2")

# ---------------------------------------------------------------------------
# Center, commutator subgroup, Frattini subgroup, and the quotient machinery.
# ---------------------------------------------------------------------------

for g in (d8, q8, heisenberg_group(3)):
    z = g.center()
    gamma2 = g.commutator_subgroup()
    print(f"\n{g.name}:")
    print(f"  |Z| = {len(z)}, |[G,G]| = {len(gamma2)}, "
          f"Frattini order {len(g.frattini_subgroup())}")
    print(f"  nilpotency class {g.nilpotency_class()}, exponent {g.exponent()}")
    quotient = g.quotient(z)
    print(f"  G/Z has order {quotient.target.n} "
          f"and exponent {quotient.target.exponent()}")

# ---------------------------------------------------------------------------
# Abelian quotients carry invariant-factor types, extracted from the order
# census: the count of solutions of x^(p^i) = 1 pins the type down uniquely.
# ---------------------------------------------------------------------------

d8xq8 = direct_product(d8, q8)
print(f"\n{d8xq8.name}: order {d8xq8.n}")
print(f"  type of G/[G,G]: {invariants(d8xq8.abelianization().target, 2)}")
print(f"  type of Z(G):    {invariants(d8xq8.center().as_group(), 2)}")

# ---------------------------------------------------------------------------
# The subgroup lattice is enumerated exhaustively (closure-by-extension).
# ---------------------------------------------------------------------------

subs = d8.all_subgroups()
normals = d8.normal_subgroups()
print(f"\n{d8.name} has {len(subs)} subgroups, {len(normals)} of them normal:")
for s in subs:
    print(f"  order {len(s):>2}  members {s.members}"
          f"{'  (normal)' if s.is_normal() else ''}")
