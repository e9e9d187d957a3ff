import numpy as np

from nullmodels.lib.sampling.seeds import SeedSpec, Stream, row_uniforms


def test_same_key_same_draws():
    a = SeedSpec(master_seed=7, stream_id=3).rng(Stream.DEGREES).random(5)
    b = SeedSpec(master_seed=7, stream_id=3).rng(Stream.DEGREES).random(5)
    assert np.array_equal(a, b)


def test_streams_are_independent():
    seed = SeedSpec(master_seed=7)
    degrees = seed.rng(Stream.DEGREES).random(5)
    assert not np.array_equal(degrees, seed.rng(Stream.MATCHING).random(5))
    assert not np.array_equal(degrees, seed.for_stream(1).rng(Stream.DEGREES).random(5))
    assert not np.array_equal(degrees, SeedSpec(master_seed=8).rng(Stream.DEGREES).random(5))


def test_for_stream_keeps_master_seed():
    seed = SeedSpec(master_seed=11).for_stream(4)
    assert (seed.master_seed, seed.stream_id) == (11, 4)


def test_realization_does_not_depend_on_earlier_draws():
    seed = SeedSpec(master_seed=1, stream_id=2)
    fresh = seed.rng(Stream.RADII).random(3)
    seed.rng(Stream.ANGLES).random(1000)
    assert np.array_equal(fresh, seed.rng(Stream.RADII).random(3))


def test_row_uniforms():
    seed = SeedSpec(master_seed=5)
    row = row_uniforms(seed, 2, 10)
    assert row.shape == (7,)
    assert np.array_equal(row, row_uniforms(seed, 2, 10))
    assert not np.array_equal(row[:5], row_uniforms(seed, 4, 10)[:5])
    assert ((row >= 0) & (row < 1)).all()
