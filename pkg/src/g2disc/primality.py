"""Primality testing: deterministic Miller-Rabin below the published bound,
Baillie-PSW above it with the verdict downgraded to "probable".
"""

from __future__ import annotations

from math import gcd

# Sorenson-Webster: the first 13 primes are a deterministic witness set below this.
DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)

DETERMINISTIC = "deterministic"
PROBABLE = "probable"


def _miller_rabin_round(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _is_mr_prime(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        if a % n == 0:
            continue
        if not _miller_rabin_round(n, a, d, r):
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # compute U_k, V_k mod n by binary expansion of k
    u, v, qk = 1, p, q % n
    bits = bin(k)[3:]
    for bit in bits:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = (u // 2) % n, (v // 2) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def primality(n: int) -> tuple[bool, str]:
    """(is_prime, certainty).  Negative inputs are tested by absolute value.

    Below DETERMINISTIC_BOUND the fixed Miller-Rabin base set is a proof, so
    certainty is "deterministic"; above it a Baillie-PSW verdict of "prime"
    is only "probable" (composite verdicts are always deterministic).
    """
    n = abs(int(n))
    if n < 2:
        return False, DETERMINISTIC
    for p in _SMALL_PRIMES:
        if n == p:
            return True, DETERMINISTIC
        if n % p == 0:
            return False, DETERMINISTIC
    if n < DETERMINISTIC_BOUND:
        return _is_mr_prime(n, _MR_BASES), DETERMINISTIC
    if not _is_mr_prime(n, (2,)):
        return False, DETERMINISTIC
    return _strong_lucas_prp(n), PROBABLE


def is_prime(n: int) -> bool:
    return primality(n)[0]
