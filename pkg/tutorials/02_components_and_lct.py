# %% [markdown]
# # Irreducible components of contact loci and the log canonical threshold
#
# The arcs meeting the rank <= k locus with order at least p form a closed
# union of orbits.  Its irreducible components correspond to the minimal
# orbits it contains.

# %%
from detarcs import ContactSpec, MatrixShape, count_contact_components, count_jet_components, minimal_contact_orbits
from detarcs.oracle import brute_force_contact_components

spec = ContactSpec(MatrixShape(8, 8), k=6, p=5)
for lam in minimal_contact_orbits(spec):
    print(lam.compact())
print("components:", count_contact_components(spec))

# %% [markdown]
# The brute-force search enumerates every partition and keeps the minimal
# ones.  It knows nothing about the closed form.

# %%
print(sorted(x.compact() for x in brute_force_contact_components(8, 8, 6, 5)))

# %% [markdown]
# Jet schemes: the n-th jet scheme of the rank <= k locus has as many
# components as the contact locus of order n + 1.

# %%
shape = MatrixShape(5, 5)
print([count_jet_components(shape, 2, n) for n in range(10)])

# %% [markdown]
# The log canonical threshold minimizes codimension over contact order.  The
# minimum is attained at a vertex of a simplex, giving a closed form.

# %%
from detarcs import lct, lct_bruteforce, lct_vertex_values

for r, s, k in [(2, 2, 1), (3, 3, 1), (3, 5, 0), (4, 4, 2)]:
    sh = MatrixShape(r, s)
    print((r, s, k), lct(sh, k), [str(v) for v in lct_vertex_values(sh, k)], lct_bruteforce(sh, k))
