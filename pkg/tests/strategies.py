"""Hypothesis strategies for field elements and Ore polynomials."""

from hypothesis import strategies as st

from rsg import OrePoly


def elements(ctx, max_degree=3):
    if ctx.setting.value == "frobenius":
        coeff = st.integers(0, ctx.p - 1) if ctx.e == 1 else st.lists(
            st.integers(0, ctx.p - 1), min_size=ctx.e, max_size=ctx.e)
        return st.lists(coeff, min_size=ctx.r, max_size=ctx.r).map(ctx.element)
    poly = st.lists(st.integers(0, ctx.p - 1), min_size=1, max_size=max_degree + 1)
    den = poly.filter(any)
    return st.tuples(poly, den).map(lambda nd: ctx.element(nd[0], nd[1]))


def nonzero_elements(ctx, max_degree=3):
    return elements(ctx, max_degree).filter(bool)


def ore_polys(ctx, max_degree=4, coeff_degree=2):
    return st.lists(elements(ctx, coeff_degree), max_size=max_degree + 1).map(
        lambda cs: OrePoly(ctx, cs))
