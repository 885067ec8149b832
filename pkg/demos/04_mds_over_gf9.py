# %% [markdown]
# # A small MDS code over GF(9)
#
# Two blocks of length 2 over GF(9), twists 1 and a primitive element.
# Enumerating all 81 codewords shows minimum weight n - k + 1 = 3.

# %%
import itertools
from collections import Counter

from rsg import FrobeniusContext, RsgParams, encode, rank_hamming_weight, validate_params

gf9 = FrobeniusContext(3, 2, modulus_ext=[1, 0, 1])
g = gf9.primitive_element()
params = RsgParams(gf9, 2, [gf9.one, g], [[1, gf9.gen]] * 2)
print("problems:", validate_params(params) or "none")
print("annihilator:", params.annihilator)

# %%
dist = Counter(
    rank_hamming_weight(params, encode(params, list(m)))
    for m in itertools.product(gf9.elements(), repeat=2)
)
print(sorted(dist.items()))

# %% [markdown]
# Twists with equal norms are rejected: they would collapse the two blocks.

# %%
bad = RsgParams(gf9, 2, [gf9.one, gf9.gen**4], [[1, gf9.gen]] * 2)
print(validate_params(bad))
