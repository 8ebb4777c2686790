"""Command-line front end.  Every structured result is printed as one compact JSON object per line.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Sequence

from .arcs import ArcError, crossing_report, enumerate_arcs, hom_arcs, is_tau_rigid_arc, is_weak_pair_arcs, parse_arc
from .classify import ClassifyError, conjecture_report, semibricks, sweep_verify, verify_hereditary
from .diagrams import enumerate_noncrossing, iter_weak, longest_weak_length, non_extendable_lengths
from .jsonio import diagram_from_json, diagram_to_json, dumps, rep_to_json, witness_to_json
from .render import render_svg
from .reps import (
    AlgebraSpec,
    RepError,
    algebra,
    brick_from_arc,
    ext1,
    gentle_algebra,
    hereditary_algebra,
    hom_dim,
    is_tau_rigid_oracle,
    relation_failures,
)
from .witness import WitnessError, ext_basis, verify_ses

DEFAULT_MAX_N = 6


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("ARCBRICK_MAX_N", "")
    try:
        return int(raw) if raw.strip() else DEFAULT_MAX_N
    except ValueError:
        raise UsageError(f"ARCBRICK_MAX_N must be an integer, got {raw!r}") from None


def _guard(n: int) -> None:
    if n < 1:
        raise UsageError("-n must be at least 1")
    if n > max_n():
        raise UsageError(f"n={n} exceeds ARCBRICK_MAX_N={max_n()}; raise the limit to run this sweep")


def parse_algebra(text: str | None, n: int) -> AlgebraSpec:
    """``preproj`` | ``gentle`` | ``S=2,3`` | ``eps=uou``."""
    if text is None or text == "preproj":
        return algebra(n)
    if text == "gentle":
        return gentle_algebra(n)
    if text.startswith("S="):
        body = text[2:].strip().strip("{}")
        try:
            S = [int(x) for x in body.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"bad subset in --algebra {text!r}") from None
        return algebra(n, S)
    if text.startswith("eps="):
        return hereditary_algebra(n, text[4:])
    raise UsageError(f"unknown --algebra {text!r}")


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


# ----------------------------------------------------------------------------
# commands


def cmd_arcs_list(a) -> int:
    _guard(a.n)
    for g in enumerate_arcs(a.n):
        _emit({"n": g.n, "left": g.left, "pattern": g.pattern})
    return 0


def cmd_bricks_list(a) -> int:
    _guard(a.n)
    A = parse_algebra(a.algebra, a.n)
    for g in enumerate_arcs(a.n):
        M = brick_from_arc(g)
        if relation_failures(M, A):
            continue
        _emit({"arc": str(g), **rep_to_json(M)})
    return 0


def cmd_hom(a) -> int:
    src, dst = parse_arc(a.src, a.n), parse_arc(a.dst, a.n)
    basis = hom_arcs(src, dst)
    out = {"dim": len(basis), "basis": [str(g) for g in basis]}
    if a.algebra is not None:
        A = parse_algebra(a.algebra, a.n)
        out["oracle"] = hom_dim(brick_from_arc(src), brick_from_arc(dst), A)
    _emit(out)
    return 0


def cmd_ext(a) -> int:
    x, y = parse_arc(a.x, a.n), parse_arc(a.y, a.n)
    A = parse_algebra(a.algebra, a.n)
    res = ext1(brick_from_arc(x), brick_from_arc(y), A)
    _emit({"dim": res.dim, "cocycle_dim": res.cocycle_dim, "coboundary_dim": res.coboundary_dim,
           "algebra": A.label()})
    return 0


def cmd_witness(a) -> int:
    x, y = parse_arc(a.x, a.n), parse_arc(a.y, a.n)
    A = parse_algebra(a.algebra, a.n)
    for w in ext_basis(brick_from_arc(x), brick_from_arc(y), A):
        check = verify_ses(w, A)
        _emit({**witness_to_json(w), "verified": check.ok, "reason": check.reason})
    return 0


def cmd_pair(a) -> int:
    second, first = parse_arc(a.second, a.n), parse_arc(a.first, a.n)
    r = crossing_report(second, first)
    _emit({
        "weak": is_weak_pair_arcs(second, first),
        "shared_left": r.shared_left,
        "shared_right": r.shared_right,
        "contested": r.contested,
        "nontrivial_1to2": r.nontrivial_1to2,
        "nontrivial_2to1": r.nontrivial_2to1,
        "shared_directed_1to2": r.shared_directed_1to2,
        "shared_directed_2to1": r.shared_directed_2to1,
    })
    return 0


def cmd_weak_enumerate(a) -> int:
    _guard(a.n)
    for d in iter_weak(a.n, a.k):
        _emit(diagram_to_json(d))
    return 0


def cmd_weak_maxlen(a) -> int:
    _guard(a.n)
    length, wit = longest_weak_length(a.n, use_bound=not a.exhaustive)
    out = {"max": length}
    if a.witness:
        out["witness"] = diagram_to_json(wit)
    _emit(out)
    return 0


def cmd_semibricks_count(a) -> int:
    _guard(a.n)
    count = len(enumerate_noncrossing(a.n))
    out = {"count": count}
    if a.oracle:
        out["oracle"] = len(semibricks(parse_algebra(a.algebra, a.n)))
    _emit(out)
    return 0


def cmd_tau_rigid(a) -> int:
    g = parse_arc(a.arc, a.n)
    A = parse_algebra(a.algebra, a.n)
    _emit({"arc": str(g), "tau_rigid_arc": is_tau_rigid_arc(g),
           "oracle": is_tau_rigid_oracle(brick_from_arc(g), A), "algebra": A.label()})
    return 0


def cmd_verify(a) -> int:
    _guard(a.n)
    if a.algebra is not None and a.algebra.startswith("eps="):
        A = parse_algebra(a.algebra, a.n)
        stat = verify_hereditary(a.n, A.eps)
        _emit({"n": a.n, "algebras": [A.label()], "ok": stat.failed == 0, "mismatches": stat.failed,
               "checks": {"hereditary": {"passed": stat.passed, "failed": stat.failed,
                                         "first_counterexample": stat.first_counterexample}}})
        return 0 if stat.failed == 0 else 1
    modes = None if a.algebra is None else [parse_algebra(a.algebra, a.n)]
    report = sweep_verify(a.n, modes, a.convention)
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_conjectures(a) -> int:
    """Data only: nothing here is a proven statement, so the exit code ignores the counts."""
    _guard(a.n)
    for row in conjecture_report(a.n):
        _emit({"n": a.n, **row})
    _emit({"n": a.n, "non_extendable_weak_lengths": non_extendable_lengths(a.n)})
    return 0


def cmd_render(a) -> int:
    try:
        with open(a.diagram) as fh:
            d = diagram_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read diagram: {exc}") from None
    svg = render_svg(d)
    if a.out == "-":
        sys.stdout.write(svg)
    else:
        with open(a.out, "w") as fh:
            fh.write(svg)
        _emit({"out": a.out, "arcs": len(d)})
    return 0


# ----------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arcbrick", description="Arc model for bricks over type A preprojective algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_n(sp, required=True):
        sp.add_argument("-n", type=int, required=required, help="number of vertices (arcs live on nodes 0..n)")
        return sp

    def with_alg(sp):
        sp.add_argument("--algebra", default=None, help="preproj | gentle | S=2,3 | eps=uou")
        return sp

    arcs = sub.add_parser("arcs").add_subparsers(dest="action", required=True)
    with_n(arcs.add_parser("list")).set_defaults(func=cmd_arcs_list)

    bricks = sub.add_parser("bricks").add_subparsers(dest="action", required=True)
    with_alg(with_n(bricks.add_parser("list"))).set_defaults(func=cmd_bricks_list)

    sp = with_alg(with_n(sub.add_parser("hom")))
    sp.add_argument("--src", required=True)
    sp.add_argument("--dst", required=True)
    sp.set_defaults(func=cmd_hom)

    for name, func in (("ext", cmd_ext), ("witness", cmd_witness)):
        sp = with_alg(with_n(sub.add_parser(name)))
        sp.add_argument("--x", required=True)
        sp.add_argument("--y", required=True)
        sp.set_defaults(func=func)

    sp = with_n(sub.add_parser("pair"))
    sp.add_argument("--second", required=True)
    sp.add_argument("--first", required=True)
    sp.set_defaults(func=cmd_pair)

    weak = sub.add_parser("weak").add_subparsers(dest="action", required=True)
    sp = with_n(weak.add_parser("enumerate"))
    sp.add_argument("-k", type=int, default=None, help="sequence length (all lengths if omitted)")
    sp.set_defaults(func=cmd_weak_enumerate)
    sp = with_n(weak.add_parser("maxlen"))
    sp.add_argument("--exhaustive", action="store_true", help="do not stop early at the 2n-2 bound")
    sp.add_argument("--witness", action="store_true", help="also print a longest diagram")
    sp.set_defaults(func=cmd_weak_maxlen)

    semi = sub.add_parser("semibricks").add_subparsers(dest="action", required=True)
    sp = with_alg(with_n(semi.add_parser("count")))
    sp.add_argument("--oracle", action="store_true", help="also count with the Hom oracle")
    sp.set_defaults(func=cmd_semibricks_count)

    sp = with_alg(with_n(sub.add_parser("tau-rigid")))
    sp.add_argument("--arc", required=True)
    sp.set_defaults(func=cmd_tau_rigid)

    sp = with_alg(with_n(sub.add_parser("verify")))
    sp.add_argument("--convention", choices=["adopted", "printed"], default="adopted",
                    help="letter rule turning arcs into modules (printed is a mutation check)")
    sp.set_defaults(func=cmd_verify)

    with_n(sub.add_parser("conjectures", help="data for statements open at intermediate S")).set_defaults(
        func=cmd_conjectures)

    sp = sub.add_parser("render")
    sp.add_argument("--diagram", required=True, help="diagram JSON file")
    sp.add_argument("--out", required=True, help="SVG path, or - for stdout")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ArcError, RepError, WitnessError, ClassifyError) as exc:
        sys.stderr.write(f"arcbrick: error: {exc}\n")
        return 2


def run(argv: Sequence[str] | None = None) -> int:
    """Like :func:`main` but converts argparse exits into a status code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
