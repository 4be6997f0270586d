"""Integer kernel: factorization, discriminants, the Kronecker character,
splitting types and multiplicative-function evaluation.

Everything here is pure and cached; values are plain ints and tuples.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from typing import Callable

DEFAULT_BOUND = 10**7

# ((p, e), ...) with p strictly increasing and e >= 1
Factorization = tuple[tuple[int, int], ...]


class BoundError(ValueError):
    """An argument lies outside the configured enumeration bound."""


class InvalidFieldError(ValueError):
    """Not a squarefree d / fundamental discriminant."""


class SplittingType(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=1 << 16)
def factorize(n: int, bound: int = DEFAULT_BOUND) -> Factorization:
    """Factor ``n`` by trial division over a sieve of primes up to sqrt(bound).

    >>> factorize(12)
    ((2, 2), (3, 1))
    >>> factorize(1)
    ()
    """
    if not isinstance(n, int) or n < 1 or n > bound:
        raise BoundError(f"factorize: n={n!r} outside [1, {bound}]")
    out = []
    rest = n
    for p in _small_primes(math.isqrt(bound) + 1):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


def valuation(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n`` (n >= 1)."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def primes_up_to(n: int) -> tuple[int, ...]:
    return _small_primes(n) if n >= 2 else ()


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(abs(n))) if abs(n) > 1 else True


def discriminant(d: int) -> int:
    """Discriminant of Q(sqrt d) for squarefree d not in {0, 1}."""
    if d in (0, 1) or not is_squarefree(d):
        raise InvalidFieldError(f"d={d} must be squarefree and not 0 or 1")
    return d if d % 4 == 1 else 4 * d


def is_fundamental(D: int) -> bool:
    """True for fundamental discriminants (D = 1 counts, as the trivial character)."""
    if D == 1:
        return True
    if D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def require_fundamental(D: int) -> int:
    if not is_fundamental(D):
        raise InvalidFieldError(f"D={D} is not a fundamental discriminant")
    return D


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1, via Jacobi reciprocity.

    The factor 2 of ``n`` is handled by the explicit 2-adic rule
    (D/2) = 0 for D even, +1 for D = +-1 mod 8, -1 for D = +-3 mod 8.
    """
    if n < 1:
        raise ValueError("kronecker: n must be positive")
    if n == 1:
        return 1
    if D % 2 == 0 and n % 2 == 0:
        return 0
    acc = 1
    while n % 2 == 0:
        n //= 2
        if D % 8 in (3, 5):
            acc = -acc
    if n == 1:
        return acc
    # n odd > 1: Jacobi symbol (D mod n / n)
    a, m = D % n, n
    while True:
        a %= m
        if a == 0:
            return 0
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                acc = -acc
        if a == 1:
            return acc
        if a % 4 == 3 and m % 4 == 3:
            acc = -acc
        a, m = m, a


def splitting_type(D: int, p: int) -> SplittingType:
    """Splitting type of the rational prime ``p`` in the field of discriminant ``D``."""
    c = kronecker(D, p)
    if c == 0:
        return SplittingType.RAMIFIED
    return SplittingType.SPLIT if c == 1 else SplittingType.INERT


def multiplicative_eval(local_rule: Callable[[int, int], int], n: int, bound: int = DEFAULT_BOUND) -> int:
    """Product of ``local_rule(p, e)`` over the factorization of ``n``."""
    out = 1
    for p, e in factorize(n, bound):
        out *= local_rule(p, e)
    return out
