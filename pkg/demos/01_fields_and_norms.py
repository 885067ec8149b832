# %% [markdown]
# # Fields, twists and norms
#
# Two kinds of coefficient field are supported. A Frobenius context is a finite
# field GF(q^r) twisted by x -> x^q. A derivation context is GF(p)(t) with d/dt.

# %%
from rsg import DerivationContext, FrobeniusContext

gf9 = FrobeniusContext(3, 2, modulus_ext=[1, 0, 1])   # GF(9) = GF(3)[x]/(x^2+1)
k3 = DerivationContext(3)                            # GF(3)(t)
x, t = gf9.gen, k3.t

# %%
print("theta(x) =", gf9.theta(x))
print("d/dt (t^2 + 1/t) =", k3.partial(t**2 + 1 / t))

# %% [markdown]
# Every element has coordinates over the fixed field F. For GF(3)(t) that field
# is GF(3)(t^3) and the basis is 1, t, t^2.

# %%
a = (t**4 + 1) / (t + 2)
coords = k3.coords_over_F(a)
print(coords)
assert k3.from_basis(coords) == a

# %% [markdown]
# The norm N(c) decides when two twists c1, c2 give the same operator family.
# Shifting c by a logarithmic derivative never changes the class.

# %%
c = t + 1
shifted = k3.pseudo_linear(c, t**2) / t**2
print("N(c) =", k3.norm_value(c), " N(shifted) =", k3.norm_value(shifted))
print("equivalent:", k3.equivalent(c, shifted))
print("t ~ t^2 ?", k3.equivalent(t, t**2))

# %%
classes = {gf9.norm_value(c) for c in gf9.elements() if c}
print("GF(9) splits into", len(classes), "classes")
