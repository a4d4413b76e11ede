"""Signed integers with prime factorization and square-free detection."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class FactoredInteger:
    """A signed integer, its prime factorization, and the square-free flag.

    Zero is defined not square-free and carries the warning flag.  The dot
    notation joins prime factors (with multiplicity) by dots, e.g. -2.5.13.
    """

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), ascending primes
    squarefree: bool
    zero_warning: bool = False

    def dot_string(self) -> str:
        if self.value == 0:
            return "0"
        body = ".".join(
            ".".join([str(p)] * e) for p, e in self.factors
        ) or "1"
        return ("-" if self.sign < 0 else "") + body

    def to_record(self) -> dict:
        return {
            "value": self.value,
            "factors": [[p, e] for p, e in self.factors],
            "squarefree": self.squarefree,
            "dot": self.dot_string(),
        }


def factor(k: int) -> FactoredInteger:
    """Trial-division factorization; exact for the desk-scale values in use."""
    if k == 0:
        return FactoredInteger(0, 0, (), False, zero_warning=True)
    sign = -1 if k < 0 else 1
    n = abs(k)
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    squarefree = all(e == 1 for _, e in factors)
    return FactoredInteger(k, sign, tuple(factors), squarefree)


def is_squarefree(k: int) -> bool:
    """No prime divides k twice; 0 is defined not square-free."""
    return factor(k).squarefree
