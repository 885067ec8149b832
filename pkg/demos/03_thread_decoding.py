# %% [markdown]
# # Encoding and decoding over GF(3)(t)
#
# Two blocks with twists 0 and 1, each evaluated at 1, t, t^2. Length 6,
# dimension 2, so up to 2 rank errors are correctable.

# %%
from rsg import (DerivationContext, ErrorProfile, OrePoly, RsgParams, decode, encode, generator_matrix,
                 interpolate, rank_hamming_weight, sample_error)
from rsg.ore_algebra import extended_right_euclid_partial

k3 = DerivationContext(3)
t = k3.t
params = RsgParams(k3, 2, [0, 1], [[1, t, t**2], [1, t, t**2]])
print("n =", params.n, "k =", params.k, "radius =", params.radius)
for row in generator_matrix(params, 2):
    print(" ", [str(x) for x in row])
print("annihilator:", params.annihilator)

# %%
codeword = encode(params, [1, t**2])
error = params.vector([[1, t**3, 2 * t**3], [t + 1, 0, t**4 + t**3]])
received = codeword + error
print("error weight:", rank_hamming_weight(params, error))

# %% [markdown]
# The decoder interpolates, runs a partial Euclid against the annihilator and
# divides the remainder by the cofactor.

# %%
P_tilde = interpolate(params, received)
step = extended_right_euclid_partial(P_tilde, params.annihilator, params.radius + params.k)
print("U =", step.u)
print("R =", step.r)
result = decode(params, received)
print("decoded:", result.message)

# %% [markdown]
# Random errors of weight up to the radius are always corrected.

# %%
import random

rng = random.Random(1)
for weights in ([0, 0], [1, 0], [0, 2], [1, 1]):
    msg = [k3.random_element(rng) for _ in range(2)]
    e = sample_error(params, ErrorProfile(weights, seed=rng.getrandbits(32)))
    ok = decode(params, encode(params, msg) + e).message == OrePoly(k3, msg)
    print(weights, "->", "recovered" if ok else "lost")

# %%
heavy = sample_error(params, ErrorProfile([2, 2], seed=5))
print("weight 4:", decode(params, codeword + heavy).reason)
