# %% [markdown]
# # Motivic and topological zeta functions
#
# For square matrices the motivic zeta function of the rank <= k locus is a
# finite sum over subsets of {1, ..., r-1}.  Each term is a product of
# Grassmannian and general linear group classes times geometric-series
# factors in L^(-s).

# %%
from fractions import Fraction

from detarcs import evaluate_motivic_zeta, motivic_zeta_terms, series_zeta_oracle

r, k = 3, 1
terms = motivic_zeta_terms(r, k)
for t in terms:
    print(t.subset, t.eta, [str(d) for d in t.denominators])

# %% [markdown]
# Evaluated at L = q, s = s0 the sum is an exact rational.  Summing orbit
# volumes directly gives an independent enclosure.

# %%
value = evaluate_motivic_zeta(terms, 4, 1)
lo, hi = series_zeta_oracle(r, k, 4, 1, head_bound=8)
print(value, float(lo), float(value), float(hi))

# %% [markdown]
# Letting L tend to 1 gives the topological zeta function, a product of
# simple factors whose poles are -(r-j)^2/(k+1-j).

# %%
from detarcs import specialize_to_topological, topological_zeta, zeta_poles

z = topological_zeta(r, k)
print(z, [str(p) for p in zeta_poles(r, k)])
print([specialize_to_topological(terms, s0) == z(s0) for s0 in range(4)])
print(z(Fraction(1, 2)))
