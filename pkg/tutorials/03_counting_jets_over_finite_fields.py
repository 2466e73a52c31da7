# %% [markdown]
# # Counting jet matrices over finite fields
#
# Over F_q[t]/(t^(n+1)) every matrix has a Smith form.  Counting all
# matrices by Smith type gives the number of points of each jet orbit, which
# must agree with the Grothendieck class of the orbit evaluated at L = q.

# %%
from detarcs import MatrixShape, jet_orbit_class, orbit_codimension
from detarcs.oracle import count_jet_orbits

r, n, q = 2, 1, 3
counts = count_jet_orbits(r, r, n, q)
print("total", sum(counts.values()), "=", q ** ((n + 1) * r * r))
for lam, c in sorted(counts.items(), key=lambda kv: kv[0].sort_key(), reverse=True):
    if lam.colength <= n:
        cls = jet_orbit_class(lam, r, n)
        print(lam, c, cls(q), "class", cls)
    else:
        print(lam, c, "(deeper stratum)")

# %% [markdown]
# The degree of each class is the jet-space dimension minus the orbit
# codimension.

# %%
for lam in counts:
    if lam.colength <= n:
        print(lam, jet_orbit_class(lam, r, n).degree, (n + 1) * r * r - orbit_codimension(lam, MatrixShape(r, r)))

# %% [markdown]
# For rectangular matrices counting by the rank of the constant term keeps
# larger fields in reach.

# %%
rect = count_jet_orbits(2, 3, 1, 5, method="stratified")
for lam, c in sorted(rect.items(), key=lambda kv: kv[0].sort_key(), reverse=True):
    print(lam, c)
