"""Integer arithmetic helpers: primality, factorization, digits, prime powers.

Everything here is exact.  Primality is deterministic Miller-Rabin with a
witness set that covers the full unsigned 64-bit range, factorization is
trial division by small primes followed by Brent's cycle-finding variant of
Pollard rho for the hard cofactors.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "DigitExpansion",
    "Factorization",
    "PrimePower",
    "digit_sum",
    "digits",
    "factorize",
    "is_prime",
    "is_prime_power",
    "largest_prime_power_below",
    "largest_prime_power_divisor",
    "primes_upto",
]

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1 << 20


@dataclass(frozen=True)
class PrimePower:
    """A value p**e with p prime and e >= 1."""

    prime: int
    exponent: int
    value: int

    @classmethod
    def of(cls, prime: int, exponent: int) -> "PrimePower":
        return cls(prime, exponent, prime**exponent)


@dataclass(frozen=True)
class Factorization:
    """Sorted prime factorization n = prod(p**e)."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        divs.sort()
        return divs


@dataclass(frozen=True)
class DigitExpansion:
    """Little-endian digit expansion, no trailing zero digits."""

    base: int
    digits: tuple[int, ...]

    def value(self) -> int:
        out = 0
        for d in reversed(self.digits):
            out = out * self.base + d
        return out


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all 0 <= n < 2**64."""
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=1)
def _small_primes() -> np.ndarray:
    return primes_upto(_TRIAL_LIMIT)


def primes_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (simple Eratosthenes sieve)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def _brent_rho(n: int, rng: random.Random) -> int:
    """One nontrivial factor of composite n (not necessarily prime)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@lru_cache(maxsize=1024)
def factorize(n: int) -> Factorization:
    """Exact prime factorization for 1 <= n < 2**64.

    Output is deterministic: the rho stage is seeded from n itself.
    Cached: batch scans ask about the same n from several code paths.
    """
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    residue = n
    counts: dict[int, int] = {}
    for p in _small_primes():
        p = int(p)
        if p * p > residue:
            break
        if residue % p == 0:
            e = 0
            while residue % p == 0:
                residue //= p
                e += 1
            counts[p] = e
    if residue > 1:
        if is_prime(residue):
            counts[residue] = counts.get(residue, 0) + 1
        else:
            rng = random.Random(n)
            stack = [residue]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    counts[m] = counts.get(m, 0) + 1
                    continue
                d = _brent_rho(m, rng)
                stack.append(d)
                stack.append(m // d)
    return Factorization(n, tuple(sorted(counts.items())))


def digits(n: int, base: int) -> DigitExpansion:
    """Little-endian base expansion of n >= 0 (empty for n = 0)."""
    if n < 0:
        raise ValueError("digits expects a nonnegative integer")
    if base < 2:
        raise ValueError("base must be at least 2")
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    return DigitExpansion(base, tuple(out))


def digit_sum(n: int, base: int) -> int:
    """Sum of base-b digits of n >= 0."""
    if n < 0:
        raise ValueError("digit_sum expects a nonnegative integer")
    if base < 2:
        raise ValueError("base must be at least 2")
    s = 0
    while n:
        s += n % base
        n //= base
    return s


def largest_prime_power_divisor(n: int) -> PrimePower:
    """The maximal prime-power divisor p**v_p(n) of greatest value, n >= 2."""
    if n < 2:
        raise ValueError("largest_prime_power_divisor expects n >= 2")
    best = None
    for p, e in factorize(n).factors:
        v = p**e
        if best is None or v > best.value:
            best = PrimePower(p, e, v)
    assert best is not None
    return best


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r > 1 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_prime_power(n: int) -> PrimePower | None:
    """PrimePower for n = p**e (e >= 1), else None."""
    if n < 2:
        return None
    if is_prime(n):
        return PrimePower(n, 1, n)
    for e in range(2, n.bit_length()):
        r = _iroot(n, e)
        if r < 2:
            break
        if r**e == n and is_prime(r):
            return PrimePower(r, e, n)
    return None


def largest_prime_power_below(n: int) -> PrimePower:
    """The largest prime power strictly less than n, for n >= 3.

    Downward search; prime gaps keep this short for any 64-bit n.
    """
    if n < 3:
        raise ValueError("largest_prime_power_below expects n >= 3")
    for m in range(n - 1, 1, -1):
        pp = is_prime_power(m)
        if pp is not None:
            return pp
    raise AssertionError("unreachable: 2 is a prime power")
