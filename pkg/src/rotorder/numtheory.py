"""Integer helpers: factorization, divisors, Euler's totient and Moebius."""

from __future__ import annotations

from math import isqrt, prod


def _check(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> list[tuple[int, int]]:
    """Return ``[(p, e), ...]`` with ascending primes and ``prod(p**e) == n``.

    Plain trial division; inputs here are small denominators.

    >>> factorize(360)
    [(2, 3), (3, 2), (5, 1)]
    """
    _check(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def totient(n: int) -> int:
    _check(n)
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def moebius(n: int) -> int:
    _check(n)
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    _check(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Split ``n = f*f*s`` with ``s`` squarefree; returns ``(f, s)``."""
    _check(n)
    f = s = 1
    for p, e in factorize(n):
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return f, s
