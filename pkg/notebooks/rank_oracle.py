"""
Counting conditions with linear algebra
=======================================

Build the linear conditions on the coefficients of a degree-d form
explicitly and compare their rank over a prime field with the closed-form
counts.
"""

from hypercodim.exactmath import FieldMatrix, field_rank
from hypercodim.oracle import (
    ConditionSystem,
    investigate_prop21,
    monomials,
    singular_point_rows,
    verify_lemma21,
    verify_prop11,
    verify_prop22,
)

# coefficient space of plane cubics
print(monomials(3, 2))

# singularity at a coordinate point touches only a handful of coefficients
sys = ConditionSystem(4, 3)
for row in singular_point_rows((1, 0, 0, 0), 4, sys=sys):
    sys.add(row, tag="p0")
print("rank at one point:", sys.ranks())

# a small rank computation straight from a list of rows
print(field_rank(FieldMatrix.from_rows([[1, 2], [2, 4]], 101)))

# m independent singular points impose m(N+1) conditions
for m in range(1, 5):
    r = verify_lemma21(3, 3, m, seed=0)
    print("points", m, "rank", r.rank, "expected", r.expected, "ranks", r.ranks)

# singular along a coordinate plane
print(verify_prop11(5, 4, 2).rank)

# singular along a family of linear subspaces
r = verify_prop22(5, 3, 1, 2, seed=7)
print(r.rank, r.expected, r.match)

# two ways of reading the subspace count, side by side
print(investigate_prop21(5, 4, 2, seed=0))
