import pytest


def oracle_is_prime(n: int) -> bool:
    """Naive trial division, independent of the library under test."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_factorize(n: int) -> dict[int, int]:
    assert n >= 2
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@pytest.fixture(scope="session")
def oracle_primes_1000():
    return [n for n in range(2, 1001) if oracle_is_prime(n)]
