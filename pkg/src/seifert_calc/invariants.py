"""Seifert invariants, graded discrepancy and the closed-form canonical cycle.

For a star graph with central curve ``C`` and arms ``n_i/q_i``::

    e    = d - sum q_i/n_i
    chi  = 2g - 2 + sum (1 - 1/n_i)
    beta = chi/e
    alpha = -1 - beta

``Z = -(K + E)`` is ``beta*C`` plus, on each string, ``beta*e_1 - e_s`` where
``e_1, e_s`` are the dual cycles of the two string ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm

from .exact_arith import ConsistencyError, ValidationError, hj_expand, mod_inverse
from .graph import CENTER, StarGraph, expand, require_valid, string_label
from .lattice import CanonicalCycle, canonical_cycle_oracle, solve_exact


class CyclicQuotientExcluded(ValidationError):
    def __init__(self, sg: StarGraph | None = None):
        detail = f" (g = 0, t = {sg.t})" if sg is not None else ""
        super().__init__(
            f"excluded: cyclic quotient{detail}; star formulas need g >= 1 or at least three arms"
        )


def euler_e(sg: StarGraph) -> Fraction:
    sg.check_arms()
    return sg.e


def chi(sg: StarGraph) -> Fraction:
    sg.check_arms()
    return 2 * sg.genus - 2 + sum((1 - Fraction(1, n) for n, _ in sg.arms), Fraction(0))


def _require_star_formula(sg: StarGraph) -> Fraction:
    e = require_valid(sg)
    if sg.cyclic_quotient_range:
        raise CyclicQuotientExcluded(sg)
    return e


@dataclass(frozen=True)
class SeifertInvariants:
    e: Fraction
    chi: Fraction
    beta: Fraction
    alpha: Fraction
    # set for g >= 1: alpha presumes K_X is Q-Cartier, which the graph alone does not decide
    caveat: str | None = None


Q_CARTIER_CAVEAT = "g >= 1: alpha assumes K_X is Q-Cartier (not determined by the graph)"


def seifert_invariants(sg: StarGraph) -> SeifertInvariants:
    e = _require_star_formula(sg)
    x = chi(sg)
    beta = x / e
    return SeifertInvariants(e, x, beta, -1 - beta, Q_CARTIER_CAVEAT if sg.genus >= 1 else None)


def graded_discrepancy(sg: StarGraph) -> Fraction:
    """``alpha(X) = -1 - chi/e``."""
    return seifert_invariants(sg).alpha


def string_matrix(n: int, q: int) -> list[list[int]]:
    bs = hj_expand(n, q)
    s = len(bs)
    m = [[0] * s for _ in range(s)]
    for i, b in enumerate(bs):
        m[i][i] = -b
        if i + 1 < s:
            m[i][i + 1] = m[i + 1][i] = 1
    return m


def string_end_duals(n: int, q: int) -> tuple[list[Fraction], list[Fraction]]:
    """Dual cycles ``e_1, e_s`` of a string with ``e_i . E_j = -delta_ij``,
    listed node-outward."""
    m = string_matrix(n, q)
    s = len(m)
    first = solve_exact(m, [-1] + [0] * (s - 1))
    last = solve_exact(m, [0] * (s - 1) + [-1])
    return first, last


def k_cycle_closed_form(sg: StarGraph) -> CanonicalCycle:
    """Canonical cycle from the star formulas, with endpoint closed forms checked."""
    inv = seifert_invariants(sg)
    beta = inv.beta
    labels = [CENTER]
    k = [-1 - beta]
    for i, (n, q) in enumerate(sg.arms, 1):
        first, last = string_end_duals(n, q)
        y = [beta * a - b for a, b in zip(first, last)]
        qp = mod_inverse(q, n)
        if y[0] != (beta * q - 1) / n or y[-1] != (beta - qp) / n:
            raise ConsistencyError(f"arm {i} ({n}/{q}): string endpoint coefficients disagree with closed form")
        for j, z in enumerate(y, 1):
            labels.append(string_label(i, j))
            k.append(-z - 1)
    return CanonicalCycle(tuple(labels), tuple(k))


def end_terms(sg: StarGraph) -> list[Fraction]:
    """``(chi/e - q'_k)/n_k`` for every arm: the pairing of ``Z`` with the end-curve duals."""
    beta = seifert_invariants(sg).beta
    return [(beta - mod_inverse(q, n)) / n for n, q in sg.arms]


def _lcd(values) -> int:
    return reduce(lcm, (v.denominator for v in values), 1)


def k_order_numerical(sg: StarGraph) -> int:
    """Order of the class of ``K`` in the discriminant group.

    With ``t >= 2`` arms this is the common denominator of any ``t - 1`` of
    the end terms; every subset is computed and must agree.  With fewer
    arms the end duals do not generate the group, so the order is read off
    the canonical cycle directly.  Either way the result is checked against
    the lattice oracle.
    """
    _require_star_formula(sg)
    oracle_order = canonical_cycle_oracle(expand(sg)).order
    if sg.t < 2:
        return oracle_order
    terms = end_terms(sg)
    orders = {_lcd(sub) for sub in combinations(terms, sg.t - 1)}
    if len(orders) != 1:
        raise ConsistencyError(f"(t-1)-subsets give different orders: {sorted(orders)}")
    (order,) = orders
    if order != oracle_order:
        raise ConsistencyError(f"closed-form order {order} != lattice order {oracle_order}")
    return order


# -- discrepancy calculus --------------------------------------------------

def discrepancy_shift(alpha_sub: Fraction, d: int) -> Fraction:
    """Discrepancy of the total space from that of a weight-``d`` hypersurface section."""
    if d <= 0:
        raise ValidationError(f"section weight must be positive (got d={d})")
    return Fraction(alpha_sub) + d


def cone_discrepancy(m: int, n: int) -> Fraction:
    """``alpha`` of the cone over ``(Y, L)`` with ``K_Y^n = L^m``."""
    if n == 0:
        raise ValidationError("n must be nonzero")
    return -1 - Fraction(m, n)


SQUARE = "m2"


def prop11_check(weights, section) -> bool:
    """Arithmetic sufficient condition for the hypersurface section ``f`` to meet
    the exceptional divisor away from the singular locus of the weighted blow-up.

    ``section`` is either the 0-based index ``j`` of a coordinate (``f = z_j``),
    in which case the remaining weights must be coprime, or :data:`SQUARE`
    for ``f`` in the square of the maximal ideal, which always qualifies.
    """
    weights = [int(w) for w in weights]
    if not weights or any(w <= 0 for w in weights):
        raise ValidationError("weights must be positive integers")
    if reduce(gcd, weights) != 1:
        raise ValidationError(f"weights {weights} must have gcd 1")
    if section == SQUARE:
        return True
    if not isinstance(section, int) or not 0 <= section < len(weights):
        raise ValidationError(f"section must be a coordinate index or {SQUARE!r} (got {section!r})")
    rest = weights[:section] + weights[section + 1:]
    return reduce(gcd, rest, 0) == 1
