"""Graded pieces of the ring of a weighted homogeneous surface singularity.

The ring is ``A = sum_k H^0(C, O(floor(kE))) T^k`` with the Q-divisor
``E = D - sum (q_i/n_i) P_i`` on the central curve, and the dualizing module
has pieces ``H^0(C, Xi + kE)`` with ``Xi = K_C + sum (1 - 1/n_i) P_i``.

Only a rational central curve is handled: there a divisor is determined
up to linear equivalence by its degree, so ``h^0 = max(0, deg + 1)`` and the
positions of the points ``P_i`` never matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .exact_arith import ValidationError
from .graph import StarGraph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class DemazureData:
    d: int
    arms: tuple[tuple[int, int], ...]
    genus: int = 0

    @classmethod
    def from_star(cls, sg: StarGraph) -> "DemazureData":
        sg.check_arms()
        return cls(sg.d, sg.arms, sg.genus)

    @property
    def degree(self) -> Fraction:
        return self.d - sum((Fraction(q, n) for n, q in self.arms), Fraction(0))


@dataclass(frozen=True)
class XiData:
    arms: tuple[tuple[int, int], ...]
    genus: int = 0

    @classmethod
    def from_star(cls, sg: StarGraph) -> "XiData":
        sg.check_arms()
        return cls(sg.arms, sg.genus)

    @property
    def degree(self) -> Fraction:
        return 2 * self.genus - 2 + sum((1 - Fraction(1, n) for n, _ in self.arms), Fraction(0))


GENUS_REFUSAL = "genus > 0: dimensions need divisor class (out of scope)"


def _require_rational(dd) -> None:
    if dd.genus != 0:
        raise ValidationError(GENUS_REFUSAL)


def deg_floor_kE(dd: DemazureData, k: int) -> int:
    """Degree of ``floor(kE)``."""
    return k * dd.d - sum(_ceil_div(k * q, n) for n, q in dd.arms)


def deg_floor_xi_kE(dd: DemazureData, k: int) -> int:
    """Degree of ``floor(Xi + kE)`` at genus 0."""
    return -2 + k * dd.d + sum((n - 1 - k * q) // n for n, q in dd.arms)


def graded_dim(dd: DemazureData, k: int) -> int:
    _require_rational(dd)
    return max(0, deg_floor_kE(dd, k) + 1)


def poincare_series(dd: DemazureData, k_max: int) -> list[int]:
    """``[dim A_0, ..., dim A_k_max]``."""
    if k_max < 0:
        raise ValidationError(f"k_max must be nonnegative (got {k_max})")
    _require_rational(dd)
    return [graded_dim(dd, k) for k in range(k_max + 1)]


def dualizing_dims(dd: DemazureData, k_min: int, k_max: int) -> list[int]:
    _require_rational(dd)
    return [max(0, deg_floor_xi_kE(dd, k) + 1) for k in range(k_min, k_max + 1)]


def _require_positive(dd: DemazureData) -> Fraction:
    e = dd.degree
    if e <= 0:
        raise ValidationError(f"e = {e}: not negative definite")
    return e


def gorenstein_test(dd: DemazureData, xi: XiData | None = None) -> int | None:
    """Return ``t`` with ``Xi`` linearly equivalent to ``tE``, or ``None``.

    That needs ``t q_i = 1 (mod n_i)`` for every arm and ``floor(tE)`` of
    canonical degree ``-2``; ``t`` is forced to be ``chi/e``.
    """
    _require_rational(dd)
    xi = xi or XiData(dd.arms, dd.genus)
    ratio = xi.degree / _require_positive(dd)
    if ratio.denominator != 1:
        return None
    t = ratio.numerator
    if any((t * q - 1) % n for n, q in dd.arms):
        return None
    if deg_floor_kE(dd, t) != -2:
        return None
    return t


@dataclass(frozen=True)
class QGorensteinReport:
    """Numeric data for a positive-genus center.

    ``s`` is the least multiple for which the degree and fractional-part
    conditions hold; whether ``s Xi - t E`` is actually principal depends on
    the divisor classes and is left undecided.
    """

    s: int
    t: int
    torsion: str = "not decided: requires Jacobian arithmetic (out of scope)"


def _least_multiple(dd: DemazureData) -> tuple[int, int]:
    e = _require_positive(dd)
    ratio = XiData(dd.arms, dd.genus).degree / e
    # s must be a multiple of den(chi/e); s = den(chi/e) * lcm(n_i) always qualifies
    step = ratio.denominator
    for s in range(step, step * lcm(*(n for n, _ in dd.arms)) + 1, step):
        t = (s * ratio).numerator
        if all((t * q - s) % n == 0 for n, q in dd.arms):
            return s, t
    raise AssertionError("search bound exceeded")  # pragma: no cover


def q_gorenstein_order(dd: DemazureData) -> int | QGorensteinReport:
    """Order of ``K_X`` in the divisor class group (genus 0), i.e. the least
    ``s >= 1`` with ``s Xi`` equivalent to ``tE`` for an integer ``t``."""
    s, t = _least_multiple(dd)
    if dd.genus == 0:
        return s
    return QGorensteinReport(s, t)
