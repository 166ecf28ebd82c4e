"""Star-shaped resolution graphs, their plumbing expansion and intersection matrices."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_arith import ValidationError, _check_coprime_pair, hj_expand

CENTER = "C"


@dataclass(frozen=True)
class StarGraph:
    """Central curve of genus ``genus`` and self-intersection ``-d`` with
    arms of type ``n_i/q_i``.

    Construction only normalizes types; use :func:`validate_star` or
    :meth:`check_arms` to test the constraints.
    """

    genus: int
    d: int
    arms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "genus", int(self.genus))
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "arms", tuple((int(n), int(q)) for n, q in self.arms))

    @property
    def t(self) -> int:
        return len(self.arms)

    @property
    def e(self) -> Fraction:
        return self.d - sum((Fraction(q, n) for n, q in self.arms), Fraction(0))

    @property
    def cyclic_quotient_range(self) -> bool:
        """True where the star formulas do not apply (rational center, at most two arms)."""
        return self.genus == 0 and self.t <= 2

    def check_arms(self) -> None:
        if self.genus < 0:
            raise ValidationError(f"genus must be nonnegative (got g={self.genus})")
        for i, (n, q) in enumerate(self.arms, 1):
            if n < 2:
                raise ValidationError(f"arm {i}: n must be >= 2 (got {n}/{q})")
            try:
                _check_coprime_pair(n, q)
            except ValidationError as exc:
                raise ValidationError(f"arm {i}: {exc}") from None


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree of curves.  ``labels[0]`` is the central curve ``C`` for
    expanded star graphs; string curves are labelled ``E<arm>.<position>``
    with position 1 adjacent to the center."""

    self_intersections: tuple[int, ...]
    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.self_intersections)

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class IntersectionMatrix:
    rows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __len__(self):
        return len(self.rows)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def string_label(arm: int, position: int) -> str:
    return f"E{arm}.{position}"


def expand(sg: StarGraph) -> PlumbingGraph:
    """Replace every arm ``n/q`` by the string ``-b_1, ..., -b_s`` hanging off
    the central curve at its ``b_1`` end."""
    sg.check_arms()
    selfint = [-sg.d]
    genera = [sg.genus]
    labels = [CENTER]
    edges = []
    for i, (n, q) in enumerate(sg.arms, 1):
        prev = 0
        for j, b in enumerate(hj_expand(n, q), 1):
            idx = len(selfint)
            selfint.append(-b)
            genera.append(0)
            labels.append(string_label(i, j))
            edges.append((prev, idx))
            prev = idx
    return PlumbingGraph(tuple(selfint), tuple(genera), tuple(edges), tuple(labels))


def intersection_matrix(pg: PlumbingGraph) -> IntersectionMatrix:
    size = len(pg)
    rows = [[0] * size for _ in range(size)]
    for i, w in enumerate(pg.self_intersections):
        rows[i][i] = w
    for a, b in pg.edges:
        rows[a][b] = rows[b][a] = 1
    return IntersectionMatrix(tuple(map(tuple, rows)), pg.labels)


def leading_minors(m) -> list[int]:
    """Leading principal minors via Bareiss elimination without pivoting.

    Stops early (the remaining entries are omitted) once a minor vanishes,
    since elimination cannot continue without row exchanges.
    """
    a = [list(r) for r in (m.rows if isinstance(m, IntersectionMatrix) else m)]
    size = len(a)
    minors = []
    prev = 1
    for k in range(size):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(m) -> bool:
    """Sylvester's criterion for ``-M``: the k-th leading minor has sign ``(-1)^k``."""
    minors = leading_minors(m)
    size = len(m.rows if isinstance(m, IntersectionMatrix) else m)
    if len(minors) < size:
        return False
    return all((-1) ** k * mk > 0 for k, mk in enumerate(minors, 1))


@dataclass(frozen=True)
class ValidationReport:
    status: str  # "ok", "warning" or "error"
    messages: tuple[str, ...] = ()
    e: Fraction | None = None

    @property
    def ok(self) -> bool:
        return self.status != "error"


def validate_star(sg: StarGraph) -> ValidationReport:
    try:
        sg.check_arms()
    except ValidationError as exc:
        return ValidationReport("error", (str(exc),))
    e = sg.e
    if e <= 0:
        return ValidationReport("error", (f"e = {e}: not negative definite (not a singularity graph)",), e)
    if sg.cyclic_quotient_range:
        return ValidationReport(
            "warning",
            (f"g = 0 with t = {sg.t} <= 2: cyclic quotient or non-minimal graph; "
             "star formulas do not apply",),
            e,
        )
    return ValidationReport("ok", (), e)


def require_valid(sg: StarGraph) -> Fraction:
    """Raise unless the arms are well formed and ``e > 0``; return ``e``."""
    report = validate_star(sg)
    if report.status == "error":
        raise ValidationError(report.messages[0])
    return report.e


# -- text / JSON formats ---------------------------------------------------

_TEXT_RE = re.compile(r"^\s*star\s+g=(-?\d+)\s+d=(-?\d+)\s+arms=(\S*)\s*$")
_ARM_RE = re.compile(r"^(-?\d+)/(-?\d+)$")


def parse_star(raw: str) -> StarGraph:
    """Parse ``star g=<int> d=<int> arms=n/q,...`` or the JSON object form."""
    text = raw.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON graph spec: {exc}") from None
        if not isinstance(obj, dict) or set(obj) != {"genus", "d", "arms"}:
            raise ValidationError('JSON graph spec must have exactly the keys "genus", "d", "arms"')
        genus, d, arms = obj["genus"], obj["d"], obj["arms"]
        if not (isinstance(genus, int) and isinstance(d, int) and isinstance(arms, list)):
            raise ValidationError("JSON graph spec: genus and d must be integers, arms a list")
        pairs = []
        for arm in arms:
            if not (isinstance(arm, list) and len(arm) == 2 and all(isinstance(x, int) for x in arm)):
                raise ValidationError(f"JSON graph spec: arm {arm!r} is not a pair of integers")
            pairs.append(tuple(arm))
        return StarGraph(genus, d, tuple(pairs))
    match = _TEXT_RE.match(text)
    if not match:
        raise ValidationError(f"cannot parse graph spec {raw!r}; expected 'star g=<int> d=<int> arms=n/q,...'")
    genus, d, arms_text = int(match[1]), int(match[2]), match[3]
    pairs = []
    if arms_text:
        for item in arms_text.split(","):
            arm = _ARM_RE.match(item)
            if not arm:
                raise ValidationError(f"cannot parse arm {item!r}; expected n/q")
            pairs.append((int(arm[1]), int(arm[2])))
    return StarGraph(genus, d, tuple(pairs))


def format_star(sg: StarGraph) -> str:
    arms = ",".join(f"{n}/{q}" for n, q in sg.arms)
    return f"star g={sg.genus} d={sg.d} arms={arms}"


def star_to_json(sg: StarGraph) -> str:
    return json.dumps({"genus": sg.genus, "d": sg.d, "arms": [[n, q] for n, q in sg.arms]})
