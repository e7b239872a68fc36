from __future__ import annotations

from sympy import isprime, primerange


class NotPrimeError(ValueError):
    pass


def require_prime(q: int, *, odd: bool = False) -> int:
    q = int(q)
    if not isprime(q):
        raise NotPrimeError(f"{q} is not prime")
    if odd and q == 2:
        raise NotPrimeError("an odd prime is required, got 2")
    return q


def odd_primes_upto(limit: int) -> list[int]:
    """Odd primes ``q <= limit`` in increasing order."""
    return [int(p) for p in primerange(3, limit + 1)]


__all__ = ["NotPrimeError", "isprime", "odd_primes_upto", "require_prime"]
