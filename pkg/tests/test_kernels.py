import pytest
from hypothesis import given, settings, strategies as st

from mseqcorr import kernels
from mseqcorr.gf2poly import list_primitive

BACKENDS = kernels.backends()
needs_c = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")

bitbytes = st.lists(st.integers(0, 1), min_size=1, max_size=200).map(bytes)


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


@needs_c
@settings(max_examples=300)
@given(bitbytes, st.integers(1, 8))
def test_census_parity(bits, t):
    assert BACKENDS["cython"].census(bits, t) == BACKENDS["python"].census(bits, t)


@needs_c
@given(bitbytes)
def test_max_zero_run_parity(bits):
    assert BACKENDS["cython"].max_zero_run(bits) == BACKENDS["python"].max_zero_run(bits)


@needs_c
@settings(max_examples=300)
@given(st.integers(1, 120).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 1), min_size=n, max_size=n).map(bytes),
    st.lists(st.integers(0, 1), min_size=n, max_size=n).map(bytes),
)), st.integers(1, 12))
def test_run_tables_parity(ab, depth):
    a, b = ab
    assert BACKENDS["cython"].run_tables(a, b, depth) == BACKENDS["python"].run_tables(a, b, depth)


@needs_c
@pytest.mark.parametrize("g1", list_primitive(3) + list_primitive(4), ids=str)
@pytest.mark.parametrize("g2", list_primitive(5), ids=str)
def test_sign_sum_parity(g1, g2):
    c, p = BACKENDS["cython"], BACKENDS["python"]
    for nbits in range(2, 11):
        assert c.v_sign_sum(nbits, g2.mask) == p.v_sign_sum(nbits, g2.mask)
        assert c.u_sign_sum(nbits, g1.mask, g2.mask) == p.u_sign_sum(nbits, g1.mask, g2.mask)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_max_zero_run_cases(name):
    k = BACKENDS[name]
    assert k.max_zero_run(bytes([0, 0, 0])) == 3
    assert k.max_zero_run(bytes([0, 1, 0, 0, 1, 0])) == 2
    assert k.max_zero_run(bytes([0, 0, 1, 0, 1, 0])) == 3


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_run_tables_single_disagreement(name):
    k = BACKENDS[name]
    assert k.run_tables(bytes([1, 0, 0]), bytes([0, 0, 0]), 3) == ([0, 0, 0], [0, 0, 1], 0)
    assert k.run_tables(bytes([1, 0, 0]), bytes([1, 0, 0]), 3) == ([0, 0, 0], [0, 0, 0], 0)
