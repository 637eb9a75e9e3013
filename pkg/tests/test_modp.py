import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from wordlab import modp

PRIMES = [2, 3, 7, 13, 31, 61]


def matrices(max_n=6):
    return st.tuples(st.sampled_from(PRIMES), st.integers(1, max_n), st.integers(1, max_n), st.integers(0, 2**32 - 1))


def _rand(p, r, c, seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(0, p, size=(r, c))
    # plant some dependent rows so rank deficiency actually occurs
    if r > 1:
        M[-1] = (M[0] * 2 + M[-1] * (seed % 2)) % p
    return M


def _rank(M, p):
    dm = DomainMatrix([[GF(p)(int(x)) for x in row] for row in M], M.shape, GF(p))
    return dm.rank()


@pytest.mark.parametrize("n", range(1, 60))
def test_is_prime_matches_sympy(n):
    assert modp.is_prime(n) == sympy.isprime(n)


@pytest.mark.parametrize("p", [p for p in range(2, 400) if sympy.isprime(p)])
def test_primitive_root(p):
    g = modp.smallest_primitive_root(p)
    if p > 2:
        assert g == sympy.primitive_root(p)
        assert sympy.n_order(g, p) == p - 1


def test_prime_factors():
    assert modp.prime_factors(60) == [2, 3, 5]
    assert modp.prime_factors(97) == [97]
    assert modp.prime_factors(1) == []


@settings(max_examples=150)
@given(matrices())
def test_rref_properties(args):
    p, r, c, seed = args
    M = _rand(p, r, c, seed)
    R, piv = modp.rref(M, p)
    assert len(piv) == R.shape[0] == _rank(M, p)
    for i, pc in enumerate(piv):
        assert R[i, pc] == 1
        assert np.count_nonzero(R[:, pc]) == 1
        assert not R[i, :pc].any()
    # row space is preserved: stacking adds no rank
    assert _rank(np.vstack([R, M]), p) == len(piv)


@settings(max_examples=150)
@given(matrices())
def test_nullspace_properties(args):
    p, r, c, seed = args
    M = _rand(p, r, c, seed)
    N = modp.nullspace(M, p)
    assert N.shape == (c - _rank(M, p), c)
    assert not ((M @ N.T) % p).any()
    if len(N):
        assert _rank(N, p) == len(N)


@settings(max_examples=150)
@given(matrices())
def test_charpoly_matches_sympy(args):
    p, n, _, seed = args
    M = _rand(p, n, n, seed)
    expected = [int(c) % p for c in sympy.Matrix(M.tolist()).charpoly().all_coeffs()]
    assert modp.charpoly(M, p) == expected


def test_charpoly_needs_pivoting():
    # zero subdiagonal entry forces a row swap in the Hessenberg step
    M = np.array([[1, 2, 3], [0, 4, 5], [6, 0, 7]])
    expected = [int(c) % 7 for c in sympy.Matrix(M.tolist()).charpoly().all_coeffs()]
    assert modp.charpoly(M, 7) == expected


def test_roots():
    # (x - 1)(x - 3)(x^2 + 1) over F_7; x^2 + 1 has no roots since 7 = 3 mod 4
    poly = sympy.Poly((sympy.Symbol("x") - 1) * (sympy.Symbol("x") - 3) * (sympy.Symbol("x") ** 2 + 1))
    coeffs = [int(c) % 7 for c in poly.all_coeffs()]
    assert modp.roots(coeffs, 7) == [1, 3]
    assert modp.roots([1, 0, 12], 13) == [1, 12]
