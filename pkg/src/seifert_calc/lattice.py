"""Exact linear algebra on the intersection lattice.

Determinants and solves use fraction-free (Bareiss) elimination over the
integers; the Smith normal form is computed by unimodular row and column
operations with the smallest available pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .exact_arith import ConsistencyError, ValidationError
from .graph import IntersectionMatrix, PlumbingGraph, intersection_matrix, is_negative_definite


class SingularMatrixError(ValidationError):
    pass


def _rows(m) -> list[list]:
    if isinstance(m, IntersectionMatrix):
        m = m.rows
    return [list(r) for r in m]


def determinant(m) -> int:
    """Exact integer determinant by Bareiss elimination with row pivoting."""
    a = _rows(m)
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[-1][-1]


def solve_exact(m, b) -> list[Fraction]:
    """Solve ``m x = b`` exactly for integer ``m`` and rational ``b``.

    The right-hand side is cleared of denominators, the augmented integer
    system is reduced fraction-free, then back-substituted in rationals.
    """
    a = _rows(m)
    size = len(a)
    b = [Fraction(x) for x in b]
    if len(b) != size or any(len(r) != size for r in a):
        raise ValidationError("solve_exact needs a square matrix and a matching right-hand side")
    scale = lcm(*(x.denominator for x in b)) if b else 1
    for r, x in zip(a, b):
        r.append(int(x * scale))
    prev = 1
    for k in range(size):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size + 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    x = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = Fraction(a[i][size]) - sum((a[i][j] * x[j] for j in range(i + 1, size)), Fraction(0))
        x[i] = acc / a[i][i]
    x = [xi / scale for xi in x]
    rows = _rows(m)
    for r, bi in zip(rows, b):
        if sum((c * xi for c, xi in zip(r, x)), Fraction(0)) != bi:
            raise ConsistencyError("back-substitution check failed in solve_exact")
    return x


def smith_diagonal(m) -> list[int]:
    """Full Smith normal form diagonal (nonnegative, each entry divides the next).

    Unit entries are kept; zeros appear for singular input.
    """
    a = _rows(m)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    top = 0
    while top < min(nrows, ncols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(top, nrows) for j in range(top, ncols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[top], a[pi] = a[pi], a[top]
        for r in a:
            r[top], r[pj] = r[pj], r[top]
        while True:
            pivot = a[top][top]
            dirty = False
            for i in range(top + 1, nrows):
                qt = a[i][top] // pivot
                if qt:
                    for j in range(top, ncols):
                        a[i][j] -= qt * a[top][j]
                if a[i][top]:
                    dirty = True
            for j in range(top + 1, ncols):
                qt = a[top][j] // pivot
                if qt:
                    for i in range(top, nrows):
                        a[i][j] -= qt * a[i][top]
                if a[top][j]:
                    dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot survived; move it into the pivot slot
            _, pi, pj = min(
                [(abs(a[i][top]), i, top) for i in range(top + 1, nrows) if a[i][top]]
                + [(abs(a[top][j]), top, j) for j in range(top + 1, ncols) if a[top][j]]
            )
            a[top], a[pi] = a[pi], a[top]
            for r in a:
                r[top], r[pj] = r[pj], r[top]
        diag.append(abs(a[top][top]))
        top += 1
    diag.extend([0] * (min(nrows, ncols) - len(diag)))
    # diag(x, y) is equivalent to diag(gcd, lcm); repeat until the chain divides
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            x, y = diag[i], diag[j]
            g = gcd(x, y)
            diag[i], diag[j] = g, (x * y // g if g else 0)
    return diag


def smith_normal_form(m) -> list[int]:
    """Invariant factors of ``coker m`` greater than one."""
    return [x for x in smith_diagonal(m) if x != 1]


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self):
        if self.trivial:
            return "trivial"
        return " + ".join(f"Z/{f}" for f in self.invariant_factors)


def discriminant_group(pg: PlumbingGraph) -> DiscriminantGroup:
    m = intersection_matrix(pg)
    if not is_negative_definite(m):
        raise ValidationError("intersection matrix is not negative definite")
    factors = smith_diagonal(m)
    if 0 in factors:
        raise SingularMatrixError("intersection matrix is singular")
    group = DiscriminantGroup(tuple(x for x in factors if x != 1))
    if group.order != abs(determinant(m)):
        raise ConsistencyError("Smith normal form order disagrees with |det|")
    return group


@dataclass(frozen=True)
class CanonicalCycle:
    """Coefficients ``k_v`` with ``K = sum k_v E_v`` numerically."""

    labels: tuple[str, ...]
    coefficients: tuple[Fraction, ...]

    def __getitem__(self, label: str) -> Fraction:
        return self.coefficients[self.labels.index(label)]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.labels, self.coefficients))

    def z_coefficients(self) -> dict[str, Fraction]:
        """Coefficients of ``Z = -(K + E)``."""
        return {lab: -k - 1 for lab, k in zip(self.labels, self.coefficients)}

    @property
    def order(self) -> int:
        """Smallest ``r >= 1`` with ``rK`` integral."""
        return lcm(*(k.denominator for k in self.coefficients))


def adjunction_rhs(pg: PlumbingGraph) -> list[int]:
    """``K . E_v = 2 g_v - 2 + d_v`` where ``d_v = -E_v . E_v``."""
    return [2 * g - 2 - w for g, w in zip(pg.genera, pg.self_intersections)]


def adjunction_residual(pg: PlumbingGraph, cycle: CanonicalCycle) -> list[Fraction]:
    m = intersection_matrix(pg).rows
    k = [cycle[lab] for lab in pg.labels]
    return [sum((c * x for c, x in zip(row, k)), Fraction(0)) - r
            for row, r in zip(m, adjunction_rhs(pg))]


def canonical_cycle_oracle(pg: PlumbingGraph) -> CanonicalCycle:
    """Solve the adjunction system for ``K`` directly on the whole graph."""
    m = intersection_matrix(pg)
    if not is_negative_definite(m):
        raise ValidationError("intersection matrix is not negative definite")
    k = solve_exact(m, adjunction_rhs(pg))
    return CanonicalCycle(pg.labels, tuple(k))
