# %% [markdown]
# # Ore polynomials
#
# In K[X; theta, d] the variable does not commute with scalars:
# X a = theta(a) X + d(a).

# %%
from rsg import DerivationContext, OrePoly, evaluate, lclm, left_divmod, operator_apply, right_divmod
from rsg.ore_algebra import centre_generator, kernel_generator, rgcd_extended

k3 = DerivationContext(3)
t = k3.t
X = OrePoly.x(k3)
print("X * t   =", X * t)
print("t * X   =", t * X)

# %% [markdown]
# Division works from either side.

# %%
A = OrePoly(k3, [1, t, t**2, 1])
B = OrePoly(k3, [t, 1])
Q, R = right_divmod(A, B)
assert Q * B + R == A
Q2, S = left_divmod(A, B)
assert B * Q2 + S == A
print("right:", Q, "|", R)
print("left: ", Q2, "|", S)

# %% [markdown]
# Extended Euclid returns left cofactors with U A + V B = gcd.

# %%
g = rgcd_extended(A, B)
assert g.u * A + g.v * B == g.r
print("rgcd =", g.r)
print("lclm =", lclm(A, B))

# %% [markdown]
# Evaluation at a point a with twist c is remainder-based; applying the
# operator d + c*theta term by term gives the same value.

# %%
P = OrePoly(k3, [1, t**2, 2])
for c in (k3.zero, k3.one, t):
    assert evaluate(c, P, t**2 + 1) == operator_apply(c, P, t**2 + 1)
    print(f"c={c}:", evaluate(c, P, t**2 + 1))

# %% [markdown]
# X^3 is central and X^3 - N(c) kills everything under the twist c.

# %%
Z = centre_generator(k3)
assert Z * P == P * Z
print(evaluate(t, kernel_generator(k3, t), 1 / (t + 1)))
