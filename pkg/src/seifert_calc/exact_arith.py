"""Hirzebruch-Jung continued fractions and modular inverses.

Rationals throughout the package are :class:`fractions.Fraction`, which
keeps arbitrary-precision numerator/denominator in lowest terms with a
positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ValidationError(ValueError):
    """Input violates a stated constraint."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagree.  Indicates a bug."""


def _check_coprime_pair(n: int, q: int) -> None:
    if q <= 0:
        raise ValidationError(f"q must be positive (got q={q})")
    if q >= n:
        raise ValidationError(f"q must be smaller than n (got n={n}, q={q})")
    if gcd(n, q) != 1:
        raise ValidationError(f"n and q must be coprime (got gcd({n}, {q}) = {gcd(n, q)})")


def hj_expand(n: int, q: int) -> tuple[int, ...]:
    """Return ``(b_1, ..., b_s)`` with ``n/q = b_1 - 1/(b_2 - 1/(... - 1/b_s))``.

    Every ``b_i >= 2``; such an expansion is unique.

    >>> hj_expand(7, 3)
    (3, 2, 2)
    """
    _check_coprime_pair(n, q)
    entries = []
    while True:
        b = -(-n // q)
        entries.append(b)
        if n % q == 0:
            break
        n, q = q, b * q - n
    return tuple(entries)


def hj_eval(entries) -> Fraction:
    """Evaluate a Hirzebruch-Jung expansion back to ``n/q``."""
    entries = tuple(entries)
    if not entries:
        raise ValidationError("expansion must have at least one entry")
    if any(b <= 1 for b in entries):
        raise ValidationError(f"every entry must be >= 2 (got {list(entries)})")
    value = Fraction(entries[-1])
    for b in reversed(entries[:-1]):
        value = b - 1 / value
    return value


def mod_inverse(q: int, n: int) -> int:
    """Return ``q'`` in ``(0, n]`` with ``q*q' = 1 (mod n)``."""
    if n <= 0 or q <= 0:
        raise ValidationError(f"q and n must be positive (got q={q}, n={n})")
    if gcd(q, n) != 1:
        raise ValidationError(f"q={q} is not invertible modulo n={n}")
    return pow(q, -1, n) or n
