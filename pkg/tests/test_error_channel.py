import pytest

from rsg import ErrorProfile, rank_hamming_weight, sample_error


def test_zero_profile(thread_params):
    assert sample_error(thread_params, ErrorProfile([0, 0], 5)) == thread_params.zero_vector()


@pytest.mark.parametrize("weights", [(1, 1), (2, 0), (0, 3), (3, 3), (1, 2)])
def test_exact_weight_derivation(thread_params, weights):
    for seed in range(5):
        e = sample_error(thread_params, ErrorProfile(weights, seed))
        assert rank_hamming_weight(thread_params, e) == sum(weights)
        for wi, block in zip(weights, e.blocks):
            single = thread_params.vector([block, [0] * 3])
            assert rank_hamming_weight(thread_params, single) == wi


@pytest.mark.parametrize("weights", [(1, 0), (1, 1), (2, 2), (0, 2)])
def test_exact_weight_frobenius(gf9_params, weights):
    for seed in range(10):
        e = sample_error(gf9_params, ErrorProfile(weights, seed))
        assert rank_hamming_weight(gf9_params, e) == sum(weights)


def test_deterministic(thread_params, gf9_params):
    for params in (thread_params, gf9_params):
        a = sample_error(params, ErrorProfile([1, 1], 1234))
        b = sample_error(params, ErrorProfile([1, 1], 1234))
        assert a == b


def test_seeds_differ(thread_params):
    errors = {sample_error(thread_params, ErrorProfile([1, 1], seed)) for seed in range(10)}
    assert len(errors) > 1


def test_degree_bound(thread_params):
    e = sample_error(thread_params, ErrorProfile([2, 2], 3), degree_bound=1)
    assert rank_hamming_weight(thread_params, e) == 4


@pytest.mark.parametrize("weights", [(4, 0), (-1, 0), (1,), (1, 1, 1)])
def test_invalid_profiles(thread_params, weights):
    with pytest.raises(ValueError):
        sample_error(thread_params, ErrorProfile(weights, 0))


def test_total(thread_params):
    assert ErrorProfile([1, 2], 0).total == 3
