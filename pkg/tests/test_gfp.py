import itertools

import pytest

from rsg import gfp
from rsg.gfp import PrimeField

F3 = PrimeField(3)
F5 = PrimeField(5)


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(9)


def test_divmod_reconstructs():
    f = (1, 2, 0, 4, 3)
    g = (2, 0, 1)
    q, r = gfp.divmod_(F5, f, g)
    assert gfp.add(F5, gfp.mul(F5, q, g), r) == f
    assert len(r) < len(g)


def test_gcd_is_monic_common_factor():
    a = gfp.mul(F3, (1, 1), (1, 0, 1))
    b = gfp.mul(F3, (1, 1), (1, 2))
    assert gfp.gcd(F3, a, b) == (1, 1)


def test_derivative_kills_pth_powers():
    assert gfp.derivative(F3, (0, 0, 0, 1)) == ()
    assert gfp.derivative(F3, (5 % 3, 1, 1)) == (1, 2)


def _has_root(field, f):
    return any(not gfp.rem(field, f, (field.neg(a), 1)) for a in field.elements())


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducible_quadratics_match_root_search(p):
    # a quadratic is irreducible iff it has no root
    F = PrimeField(p)
    for c0, c1 in itertools.product(range(p), repeat=2):
        f = (c0, c1, 1)
        assert gfp.is_irreducible(F, f) == (not _has_root(F, f))


def test_irreducible_count_degree_3_over_gf2():
    # x^3+x+1 and x^3+x^2+1
    F2 = PrimeField(2)
    found = [f for f in gfp.monic_polys(F2, 3) if gfp.is_irreducible(F2, f)]
    assert sorted(found) == [(1, 0, 1, 1), (1, 1, 0, 1)]


def test_first_irreducible_gf3_quadratic():
    assert gfp.first_irreducible(F3, 2) == (1, 0, 1)
