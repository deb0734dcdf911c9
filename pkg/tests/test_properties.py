import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tensorspectra import algebra as alg
from tensorspectra.scalar import conj_p
from tensorspectra.tensor import adjoint_k, as_array, max_abs, transpose_k

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


def cube(side):
    return st.builds(
        lambda re, im: re + 1j * im,
        arrays(np.float64, (side,) * 3, elements=finite),
        arrays(np.float64, (side,) * 3, elements=finite),
    )


@given(complexes, st.integers(2, 8))
def test_conjugate_product_law(z, p):
    prod = 1 + 0j
    for j in range(p):
        prod *= conj_p(z, p, j)
    assert abs(prod - abs(z) ** p) <= 1e-12 * max(1.0, abs(z) ** p)


@given(complexes, st.integers(2, 8), st.integers(0, 20))
def test_conjugate_periodic_in_j(z, p, j):
    a, b = conj_p(z, p, j), conj_p(z, p, j + p)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


@settings(max_examples=50)
@given(st.integers(2, 3).flatmap(cube))
def test_transpose_and_adjoint_towers(A):
    assert transpose_k(A, 3).equals(A)
    assert transpose_k(transpose_k(A, 1), 2).equals(A)
    assert adjoint_k(A, 3).equals(A)


@settings(max_examples=50)
@given(st.integers(2, 3).flatmap(lambda s: st.tuples(cube(s), cube(s), cube(s))))
def test_transpose_of_product(triple):
    A, B, C = triple
    D = alg.ternary_product(A, B, C)
    rhs = alg.ternary_product(transpose_k(B, 1), transpose_k(C, 1), transpose_k(A, 1))
    scale = max(1.0, max_abs(as_array(D)))
    assert transpose_k(D, 1).max_abs_diff(rhs) <= 1e-12 * scale


@settings(max_examples=50)
@given(st.integers(2, 3).flatmap(lambda s: st.tuples(cube(s), cube(s), cube(s), cube(s))))
def test_weak_distributivity(quad):
    A, B, C, D = quad
    lhs = as_array(alg.ternary_product(A, B, C + D))
    rhs = as_array(alg.ternary_product(A, B, C)) + as_array(alg.ternary_product(A, B, D))
    assert max_abs(lhs - rhs) <= 1e-12 * max(1.0, max_abs(lhs))


@settings(max_examples=50)
@given(st.integers(2, 3).flatmap(cube), st.integers(2, 5))
def test_norm_is_nonnegative_and_homogeneous(A, p):
    n = alg.lp_norm(A, p)
    assert n >= 0
    assert abs(alg.lp_norm(2 * A, p) - 2 * n) <= 1e-10 * max(1.0, n)
