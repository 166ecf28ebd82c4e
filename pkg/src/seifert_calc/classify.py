"""Log-terminal / log-canonical classification and the smoothing certificate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import ConsistencyError, ValidationError
from .graph import StarGraph, require_valid
from .invariants import chi, seifert_invariants

LOG_TERMINAL = "log_terminal_quotient"
LOG_CANONICAL = "log_canonical_strict"
NOT_LOG_CANONICAL = "not_log_canonical"

# Lemma cases, in the order they are tried
T3_D_GE_4 = "t3_d_ge_4"
T3_D3_Q1 = "t3_d3_q1"
T3_D2_Q1Q1 = "t3_d2_q1q1"
T4_D_GE_3_THREE_Q1 = "t4_d_ge_3_three_q1"


@dataclass(frozen=True)
class SingularityClass:
    tag: str
    chi: Fraction
    alpha: Fraction


def classify(sg: StarGraph) -> SingularityClass:
    inv = seifert_invariants(sg)
    if inv.chi < 0:
        tag = LOG_TERMINAL
    elif inv.chi == 0:
        tag = LOG_CANONICAL
    else:
        tag = NOT_LOG_CANONICAL
    return SingularityClass(tag, inv.chi, inv.alpha)


def tag_from_alpha(alpha: Fraction) -> str:
    if alpha > -1:
        return LOG_TERMINAL
    if alpha == -1:
        return LOG_CANONICAL
    return NOT_LOG_CANONICAL


@dataclass(frozen=True)
class Lemma24Report:
    applies: bool
    matched_case: str | None
    chi_over_e: Fraction


def _require_rational_center(sg: StarGraph) -> Fraction:
    if sg.genus != 0:
        raise ValidationError(f"requires a rational central curve (got g={sg.genus})")
    return require_valid(sg)


def chi_over_e(sg: StarGraph) -> Fraction:
    e = require_valid(sg)
    return chi(sg) / e


def chi_e_lt_one(sg: StarGraph) -> bool:
    return chi_over_e(sg) < 1


def lemma24_case(t: int, d: int, qs) -> str | None:
    """Which listed case (if any) a rational-center graph falls into.

    Conditions on ``q_i = 1`` are counted, so arm order does not matter.
    """
    ones = sum(1 for q in qs if q == 1)
    if t == 3:
        if d >= 4:
            return T3_D_GE_4
        if d == 3 and ones >= 1:
            return T3_D3_Q1
        if d == 2 and ones >= 2:
            return T3_D2_Q1Q1
    elif t == 4 and d >= 3 and ones >= 3:
        return T4_D_GE_3_THREE_Q1
    return None


def lemma24(sg: StarGraph) -> Lemma24Report:
    """Sufficient conditions for ``chi/e < 1`` on a rational-center graph."""
    e = _require_rational_center(sg)
    ratio = chi(sg) / e
    case = lemma24_case(sg.t, sg.d, [q for _, q in sg.arms])
    if case is not None and not ratio < 1:
        raise ConsistencyError(f"lemma case {case} matched but chi/e = {ratio}")
    return Lemma24Report(case is not None, case, ratio)


@dataclass(frozen=True)
class Step:
    claim: str
    value: str
    verdict: bool


@dataclass(frozen=True)
class QHDCertificate:
    steps: tuple[Step, ...]

    @property
    def overall(self) -> bool:
        return all(step.verdict for step in self.steps)


CONCLUSION = (
    "the total space of any negative-weight smoothing with K Q-Cartier is log-terminal, "
    "so such a smoothing is Q-Gorenstein (necessary-condition report; existence of a "
    "rational homology disk smoothing is not asserted)"
)


def qhd_certificate(sg: StarGraph) -> QHDCertificate:
    """Check the chain: graph in a listed case => chi/e < 1 => alpha > -2 => log-terminal total space."""
    report = lemma24(sg)
    ratio = report.chi_over_e
    alpha = -1 - ratio
    steps = [
        Step("graph matches a listed case (t=3 or t=4 restrictions)", report.matched_case or "none", report.applies),
        Step("chi/e < 1", str(ratio), ratio < 1),
        Step("alpha = -1 - chi/e > -2", str(alpha), alpha > -2),
    ]
    steps.append(Step(CONCLUSION, "follows" if all(s.verdict for s in steps) else "not established",
                      all(s.verdict for s in steps)))
    return QHDCertificate(tuple(steps))
