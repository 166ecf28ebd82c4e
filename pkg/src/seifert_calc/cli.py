"""Command-line front end.

Exit codes: 0 success, 1 internal consistency failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, prod

from .classify import classify, lemma24, lemma24_case, qhd_certificate
from .exact_arith import ConsistencyError, ValidationError, hj_expand
from .graph import (
    StarGraph,
    expand,
    format_star,
    intersection_matrix,
    parse_star,
    require_valid,
)
from .invariants import (
    CyclicQuotientExcluded,
    chi,
    k_cycle_closed_form,
    k_order_numerical,
    seifert_invariants,
)
from .lattice import adjunction_residual, canonical_cycle_oracle, determinant, discriminant_group
from .pinkham import (
    DemazureData,
    QGorensteinReport,
    dualizing_dims,
    gorenstein_test,
    graded_dim,
    poincare_series,
    q_gorenstein_order,
)

FILTERS = ("lemma24", "chi_e_lt_1", "alpha_gt_minus2", "log_canonical")


def rat(x: Fraction) -> str:
    return str(Fraction(x))


def verify_cycle(sg: StarGraph) -> None:
    """Closed-form cycle against the lattice oracle, plus the determinant identity."""
    pg = expand(sg)
    oracle = canonical_cycle_oracle(pg)
    if any(adjunction_residual(pg, oracle)):
        raise ConsistencyError("oracle cycle fails adjunction")
    if not sg.cyclic_quotient_range and k_cycle_closed_form(sg) != oracle:
        raise ConsistencyError("closed-form canonical cycle disagrees with lattice oracle")
    if abs(determinant(intersection_matrix(pg))) != sg.e * prod(n for n, _ in sg.arms):
        raise ConsistencyError("|det M| != e * prod(n_i)")


# -- commands: each returns a JSON-ready dict ---------------------------------

def cmd_invariants(sg: StarGraph, verify: bool = False) -> dict:
    e = require_valid(sg)
    x = chi(sg)
    pg = expand(sg)
    group = discriminant_group(pg)
    doc = {"graph": format_star(sg), "e": rat(e), "chi": rat(x), "chi_over_e": rat(x / e)}
    if sg.cyclic_quotient_range:
        doc["alpha"] = None
        doc["order_of_K"] = canonical_cycle_oracle(pg).order
        doc["note"] = str(CyclicQuotientExcluded(sg))
    else:
        inv = seifert_invariants(sg)
        doc["alpha"] = rat(inv.alpha)
        if inv.caveat:
            doc["alpha_caveat"] = inv.caveat
        doc["order_of_K"] = k_order_numerical(sg)
    doc["discriminant_group"] = list(group.invariant_factors)
    doc["det"] = group.order
    if verify:
        verify_cycle(sg)
        doc["verified"] = True
    return doc


def cmd_canonical_cycle(sg: StarGraph, verify: bool = False) -> dict:
    require_valid(sg)
    cycle = k_cycle_closed_form(sg)
    oracle = canonical_cycle_oracle(expand(sg))
    if cycle != oracle:
        raise ConsistencyError("closed-form canonical cycle disagrees with lattice oracle")
    if verify:
        verify_cycle(sg)
    return {
        "graph": format_star(sg),
        "coefficients": {lab: rat(k) for lab, k in cycle.as_dict().items()},
        "verified-against-oracle": True,
    }


def cmd_classify(sg: StarGraph, verify: bool = False) -> dict:
    cls = classify(sg)
    doc = {"graph": format_star(sg), "class": cls.tag, "chi": rat(cls.chi), "alpha": rat(cls.alpha)}
    if sg.genus == 0:
        report = lemma24(sg)
        doc["lemma24"] = {
            "applies": report.applies,
            "case": report.matched_case,
            "chi_over_e": rat(report.chi_over_e),
        }
        cert = qhd_certificate(sg)
        doc["qhd_certificate"] = {
            "overall": cert.overall,
            "steps": [{"claim": s.claim, "value": s.value, "verdict": s.verdict} for s in cert.steps],
        }
    else:
        doc["lemma24"] = None
        doc["note"] = "lemma and certificate need a rational central curve"
    if verify:
        verify_cycle(sg)
        doc["verified"] = True
    return doc


def cmd_poincare(sg: StarGraph, k_max: int = 20, verify: bool = False) -> dict:
    require_valid(sg)
    dd = DemazureData.from_star(sg)
    return {"graph": format_star(sg), "k_max": k_max, "series": poincare_series(dd, k_max)}


def cmd_gorenstein(sg: StarGraph, verify: bool = False) -> dict:
    require_valid(sg)
    dd = DemazureData.from_star(sg)
    order = q_gorenstein_order(dd)
    doc = {"graph": format_star(sg)}
    if isinstance(order, QGorensteinReport):
        doc["gorenstein"] = None
        doc["q_gorenstein"] = {"s": order.s, "t": order.t, "torsion": order.torsion}
        return doc
    t = gorenstein_test(dd)
    doc["gorenstein"] = t is not None
    doc["t"] = t
    doc["q_gorenstein_order"] = order
    if verify:
        if (t is not None) != (order == 1):
            raise ConsistencyError("Gorenstein test disagrees with order of K")
        if t is not None:
            dual = dualizing_dims(dd, -5, 40)
            if dual != [graded_dim(dd, k + t) for k in range(-5, 41)]:
                raise ConsistencyError("dualizing module is not the shifted ring")
        doc["verified"] = True
    return doc


def cmd_cf(value: str) -> dict:
    try:
        n_text, q_text = value.split("/")
        n, q = int(n_text), int(q_text)
    except ValueError:
        raise ValidationError(f"cannot parse {value!r}; expected n/q") from None
    return {"n": n, "q": q, "expansion": list(hj_expand(n, q))}


# -- enumeration -------------------------------------------------------------

def parse_t_range(text: str) -> list[int]:
    span = re.fullmatch(r"\s*(-?\d+)\s*-\s*(-?\d+)\s*", text)
    try:
        if span:
            lo, hi = int(span[1]), int(span[2])
            bounds, values = [lo, hi], list(range(lo, hi + 1))
        else:
            values = sorted({int(x) for x in text.split(",")})
            bounds = values
    except ValueError:
        raise ValidationError(f"cannot parse --t {text!r}; use e.g. 3, 3-4 or 3,4") from None
    if any(v < 0 for v in bounds):
        raise ValidationError(f"t must be nonnegative (got {text})")
    return values


def arm_types(n_max: int) -> list[tuple[int, int]]:
    return [(n, q) for n in range(2, n_max + 1) for q in range(1, n) if gcd(n, q) == 1]


def _matches(sg: StarGraph, flt: str) -> dict | None:
    e = sg.e
    if e <= 0:
        return None
    x = chi(sg)
    ratio = x / e
    if flt == "lemma24":
        case = lemma24_case(sg.t, sg.d, [q for _, q in sg.arms])
        if case is None:
            return None
        if not ratio < 1:
            raise ConsistencyError(f"{format_star(sg)} matches {case} but chi/e = {ratio}")
        extra = {"case": case}
    elif flt == "chi_e_lt_1":
        if not ratio < 1:
            return None
        extra = {}
    elif flt == "alpha_gt_minus2":
        if sg.cyclic_quotient_range or not -1 - ratio > -2:
            return None
        extra = {}
    elif flt == "log_canonical":
        if x > 0:
            return None
        extra = {}
    else:
        raise ValidationError(f"unknown filter {flt!r}")
    doc = {"graph": format_star(sg), "e": rat(e), "chi": rat(x), "chi_over_e": rat(ratio)}
    if not sg.cyclic_quotient_range:
        doc["alpha"] = rat(-1 - ratio)
    doc.update(extra)
    return doc


def _enumerate_chunk(args) -> list[dict]:
    t, d, n_max, flt = args
    out = []
    for arms in combinations_with_replacement(arm_types(n_max), t):
        doc = _matches(StarGraph(0, d, arms), flt)
        if doc is not None:
            out.append(doc)
    return out


def cmd_enumerate(t_values, d_max: int, n_max: int, flt: str, jobs: int = 1):
    """Yield matching genus-0 graphs ordered by ``(t, d, arms)`` with arms sorted ascending."""
    if n_max < 2:
        raise ValidationError(f"--nmax must be at least 2 (got {n_max})")
    if flt not in FILTERS:
        raise ValidationError(f"unknown filter {flt!r}; choose from {', '.join(FILTERS)}")
    chunks = [(t, d, n_max, flt) for t in t_values for d in range(1, d_max + 1)]
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for docs in pool.map(_enumerate_chunk, chunks):
                yield from docs
    else:
        for chunk in chunks:
            yield from _enumerate_chunk(chunk)


# -- rendering ---------------------------------------------------------------

def _compact(value) -> str:
    if isinstance(value, (list, dict)) or value is None or isinstance(value, bool):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render_text(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if key == "discriminant_group":
            value = " + ".join(f"Z/{f}" for f in value) or "trivial"
            lines.append(f"{key}: {value}")
        elif key == "coefficients":
            lines.append("coefficients:")
            lines.extend(f"  {lab}: {k}" for lab, k in value.items())
        elif key == "qhd_certificate":
            lines.append(f"qhd_certificate: overall={_compact(value['overall'])}")
            for step in value["steps"]:
                mark = "ok" if step["verdict"] else "FAIL"
                lines.append(f"  [{mark}] {step['claim']}: {step['value']}")
        elif isinstance(value, dict):
            lines.append(f"{key}: " + " ".join(f"{k}={_compact(v)}" for k, v in value.items()))
        else:
            lines.append(f"{key}: {_compact(value)}")
    return "\n".join(lines)


def emit(doc: dict, as_json: bool, out) -> None:
    print(json.dumps(doc) if as_json else render_text(doc), file=out)


# -- argument handling ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verify", action="store_true",
                        help="force oracle cross-checks (also SEIFERT_CALC_VERIFY=1)")

    parser = argparse.ArgumentParser(
        prog="seifert-calc",
        description="Exact invariants of weighted homogeneous surface singularities from star-shaped graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "graph spec ('star g=0 d=2 arms=2/1,3/2,5/4' or JSON); read from stdin if omitted"
    for name, help_text in [
        ("invariants", "e, chi, chi/e, alpha, order of K, discriminant group"),
        ("canonical-cycle", "coefficients of K on every curve"),
        ("classify", "log-terminal class, lemma cases and smoothing certificate"),
        ("poincare", "dimensions of the graded pieces (rational center)"),
        ("gorenstein", "Gorenstein test and order of K in the class group"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("graph", nargs="?", help=graph_help)
        if name == "poincare":
            p.add_argument("--kmax", type=int, default=20)

    p = sub.add_parser("enumerate", parents=[common], help="sweep genus-0 star graphs")
    p.add_argument("--t", default="3", help="number of arms: 3, 3-4 or 3,4")
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--filter", default="lemma24", choices=FILTERS)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("cf", parents=[common], help="Hirzebruch-Jung expansion of n/q")
    p.add_argument("fraction")
    return parser


def _read_graph(arg: str | None, stdin) -> StarGraph:
    raw = arg if arg not in (None, "-") else stdin.read()
    return parse_star(raw)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    verify = args.verify or os.environ.get("SEIFERT_CALC_VERIFY") == "1"
    try:
        if args.command == "cf":
            doc = cmd_cf(args.fraction)
            if args.json:
                emit(doc, True, stdout)
            else:
                print(json.dumps(doc["expansion"], separators=(",", ":")), file=stdout)
            return 0
        if args.command == "enumerate":
            count = 0
            for doc in cmd_enumerate(parse_t_range(args.t), args.dmax, args.nmax, args.filter, args.jobs):
                count += 1
                if args.json:
                    print(json.dumps(doc), file=stdout)
                else:
                    print("  ".join([doc["graph"]] + [f"{k}={v}" for k, v in doc.items() if k != "graph"]),
                          file=stdout)
            emit({"count": count}, args.json, stdout)
            return 0
        sg = _read_graph(args.graph, stdin)
        if args.command == "invariants":
            doc = cmd_invariants(sg, verify)
        elif args.command == "canonical-cycle":
            doc = cmd_canonical_cycle(sg, verify)
        elif args.command == "classify":
            doc = cmd_classify(sg, verify)
        elif args.command == "poincare":
            doc = cmd_poincare(sg, args.kmax, verify)
        else:
            doc = cmd_gorenstein(sg, verify)
        emit(doc, args.json, stdout)
        return 0
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
