import math
import random

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from binodiv.arith import (
    DigitExpansion,
    Factorization,
    PrimePower,
    digit_sum,
    digits,
    factorize,
    is_prime,
    is_prime_power,
    largest_prime_power_below,
    largest_prime_power_divisor,
    primes_upto,
)


def test_primes_upto_small():
    assert primes_upto(1).tolist() == []
    assert primes_upto(2).tolist() == [2]
    assert primes_upto(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    # limit itself is included when prime
    assert primes_upto(29)[-1] == 29
    assert primes_upto(10**5).size == 9592


def test_primes_upto_matches_sympy():
    got = primes_upto(3000).tolist()
    assert got == list(sympy.primerange(2, 3001))


def test_is_prime_small_range():
    for n in range(20000):
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_rejects_negative():
    with pytest.raises(ValueError):
        is_prime(-7)


def test_is_prime_large_random():
    rng = random.Random(0xA11CE)
    for _ in range(200):
        n = rng.randrange(2, 2**63)
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_mersenne_and_carmichael():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**67 - 1)
    for n in (561, 41041, 825265, 321197185):
        assert not is_prime(n)


def test_factorize_basics():
    assert factorize(1).factors == ()
    assert factorize(2).factors == ((2, 1),)
    assert factorize(46800).factors == ((2, 4), (3, 2), (5, 2), (13, 1))
    assert factorize(31416).factors == ((2, 3), (3, 1), (7, 1), (11, 1), (17, 1))
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_round_trip_dense():
    for n in range(1, 5000):
        f = factorize(n)
        assert f.reconstruct() == n
        assert list(f.factors) == sorted(f.factors)
        for p, e in f.factors:
            assert e >= 1 and is_prime(p)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**12))
def test_factorize_round_trip_random(n):
    f = factorize(n)
    assert f.reconstruct() == n
    assert all(is_prime(p) for p in f.primes())


def test_factorize_semiprime_of_big_primes():
    p, q = 1000003, 1000033
    assert factorize(p * q).factors == ((p, 1), (q, 1))
    assert factorize(p * p).factors == ((p, 2),)


def test_divisors():
    assert factorize(1).divisors() == [1]
    assert factorize(12).divisors() == [1, 2, 3, 4, 6, 12]
    f = factorize(46800)
    divs = f.divisors()
    assert len(divs) == math.prod(e + 1 for _, e in f.factors)
    assert divs == sorted(divs)
    assert all(46800 % d == 0 for d in divs)


def test_digits_round_trip():
    assert digits(0, 10).digits == ()
    assert digits(46800, 10).digits == (0, 0, 8, 6, 4)
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randrange(0, 10**12)
        b = rng.randrange(2, 40)
        exp = digits(n, b)
        assert exp.value() == n
        assert all(0 <= d < b for d in exp.digits)
        assert not exp.digits or exp.digits[-1] != 0
        assert digit_sum(n, b) == sum(exp.digits)


def test_digit_sum_rejects_bad_args():
    with pytest.raises(ValueError):
        digit_sum(-1, 10)
    with pytest.raises(ValueError):
        digit_sum(5, 1)


def test_prime_power_of():
    pp = PrimePower.of(3, 4)
    assert (pp.prime, pp.exponent, pp.value) == (3, 4, 81)


def test_is_prime_power_dense():
    # brute force: n is a prime power iff its factorization has one prime
    for n in range(2, 20000):
        f = factorize(n)
        pp = is_prime_power(n)
        if len(f.factors) == 1:
            p, e = f.factors[0]
            assert pp == PrimePower(p, e, n)
        else:
            assert pp is None
    assert is_prime_power(1) is None
    assert is_prime_power(0) is None


def test_is_prime_power_large():
    assert is_prime_power(2**62) == PrimePower(2, 62, 2**62)
    assert is_prime_power(3**37) == PrimePower(3, 37, 3**37)
    assert is_prime_power(2**61 - 1) == PrimePower(2**61 - 1, 1, 2**61 - 1)
    assert is_prime_power(2**62 - 1) is None


def test_largest_prime_power_divisor_dense():
    for n in range(2, 5000):
        got = largest_prime_power_divisor(n)
        best = max(p**e for p, e in factorize(n).factors)
        assert got.value == best
        assert got.value == got.prime**got.exponent
        assert n % got.value == 0
    with pytest.raises(ValueError):
        largest_prime_power_divisor(1)


def test_largest_prime_power_divisor_examples():
    assert largest_prime_power_divisor(46800).value == 25
    assert largest_prime_power_divisor(31416).value == 17
    assert largest_prime_power_divisor(5504490).value == 37


def test_largest_prime_power_below_dense():
    pps = [m for m in range(2, 4100) if is_prime_power(m) is not None]
    arr = np.asarray(pps)
    for n in range(3, 4096):
        expect = int(arr[np.searchsorted(arr, n) - 1])
        got = largest_prime_power_below(n)
        assert got.value == expect and got.value < n
    with pytest.raises(ValueError):
        largest_prime_power_below(2)


def test_largest_prime_power_below_at_powers():
    assert largest_prime_power_below(9).value == 8
    assert largest_prime_power_below(10).value == 9
    assert largest_prime_power_below(128).value == 127


def test_digit_expansion_is_frozen():
    exp = digits(10, 2)
    with pytest.raises(Exception):
        exp.base = 3
    assert isinstance(exp, DigitExpansion)
    assert isinstance(factorize(6), Factorization)
