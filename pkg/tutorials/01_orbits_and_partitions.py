# %% [markdown]
# # Orbits of matrix arcs and their partitions
#
# An arc of r x s matrices is a matrix of power series.  Row and column
# operations over power series bring it to a diagonal form diag(t^λ_1, ...,
# t^λ_r), so orbits are indexed by non-increasing sequences λ whose terms may
# be infinite (a zero entry has infinite order).

# %%
from detarcs import INF, PrePartition, codominates, covers_via_moves, enumerate_prepartitions
from detarcs.orbits import MatrixShape, Orbit, orbit_closure_contains, orbit_in_determinantal

shape = MatrixShape(3, 3)
lam = PrePartition.of([INF, 2, 1], r=3)
print("orbit index", lam, "tail sums", lam.tail_sums())

# %% [markdown]
# The orbit of λ sits inside the arcs of rank <= k matrices exactly when at
# least r - k of its terms are infinite.

# %%
for k in range(4):
    print(f"rank <= {k}:", orbit_in_determinantal(Orbit(shape, lam), k))

# %% [markdown]
# Closure of orbits is governed by comparing tail sums.  `codominates(a, b)`
# says every tail sum of `a` is at most the matching tail sum of `b`; the
# closure of the orbit of `a` then contains the orbit of `b`.  The order is
# reversed: more degenerate arcs have larger tail sums.

# %%
sq = MatrixShape(2, 2)
a, b = PrePartition((2, 0)), PrePartition((1, 1))
print(codominates(a, b), orbit_closure_contains(Orbit.of(sq, a), Orbit.of(sq, b)))
print(codominates(b, a), orbit_closure_contains(Orbit.of(sq, b), Orbit.of(sq, a)))

# %% [markdown]
# Four elementary moves generate the order: removing a box, replacing an
# infinite row by a finite one, and two ways of sliding a box upwards.

# %%
for mu in [PrePartition((2, 2)), PrePartition((INF, 0)), PrePartition((3, 2, 2))]:
    print(mu, "->", [str(x) for x in covers_via_moves(mu, bound=2)])

# %%
print(len(enumerate_prepartitions(3, 4)), "orbits with finite terms at most 4 in the 3x3 case")
