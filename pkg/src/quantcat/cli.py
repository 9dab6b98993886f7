"""Command line entry point.

Exit codes: 0 success, 2 parse or validation failure, 3 law failure,
4 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .doctrine import SubDoctrine
from .hausdorff import (
    ALL,
    CAUCHY,
    CONICAL,
    REPRESENTABLE,
    directed_hausdorff,
    generators,
    hausdorff_category,
    hausdorff_on_dist,
    subset,
    symmetrized_hausdorff,
)
from .lattice import LatticeError
from .laws import SUITES, run_suite
from .presheaf import DEFAULT_BUDGET, BudgetExceeded, enumerate_presheaves
from .qcat import InvalidCategory, QCategory, validate_category
from .quantaloid import LAWVERE, QuantaloidError, validate_quantaloid

EXIT_OK, EXIT_INVALID, EXIT_LAWS, EXIT_BUDGET = 0, 2, 3, 4

DOCTRINES = {"hausdorff": CONICAL, "cauchy": CAUCHY, "free": ALL, "identity": REPRESENTABLE}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _category(path: str) -> QCategory:
    return io.category_from_json(io.read_json(path))


def _table(rows: Sequence[Sequence[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _presheaf_category_json(C: QCategory, A: QCategory) -> tuple[dict, dict]:
    names = io.presheaf_names(A, C.objects)
    doc = io.category_to_json(C, names)
    doc["presheaves"] = {names[phi]: {"type": phi.q_type,
                                      "values": {str(a): A.Q.render(v) for a, v in phi.items()}}
                         for phi in C.objects}
    return doc, names


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    kind, value = io.load_any(io.read_json(args.file))
    problems: list[str] = []
    if kind == "quantaloid":
        problems = validate_quantaloid(value)
    elif kind in ("category", "metric"):
        problems = validate_category(value)
    if args.json:
        _emit(io.dumps({"kind": kind, "valid": not problems, "problems": problems}))
    elif problems:
        _emit("".join(f"violation: {p}\n" for p in problems))
    else:
        _emit(f"ok: valid {kind}\n")
    return EXIT_INVALID if problems else EXIT_OK


def _members(A: QCategory, raw: str) -> list[str]:
    names = [s.strip() for s in raw.split(",") if s.strip()]
    for n in names:
        if n not in A.types:
            raise UsageError(f"unknown point {n!r}")
    return names


def cmd_hausdorff(args) -> int:
    A = _category(args.space)
    if A.Q is not LAWVERE:
        raise UsageError("hausdorff needs a metric space")
    S, T = subset(A, _members(A, args.source)), subset(A, _members(A, args.target))
    vals = {
        "source_to_target": directed_hausdorff(S, T),
        "target_to_source": directed_hausdorff(T, S),
        "symmetrized": symmetrized_hausdorff(S, T),
    }
    if args.json:
        _emit(io.dumps({k: LAWVERE.render(v) for k, v in vals.items()}))
    else:
        _emit(_table([(k.replace("_", " "), LAWVERE.render(v)) for k, v in vals.items()]))
    return EXIT_OK


def cmd_hcat(args) -> int:
    A = _category(args.space)
    H = hausdorff_category(A)
    doc, names = _presheaf_category_json(H, A)
    doc["generators"] = {names[phi]: [str(a) for a in generators(phi)] for phi in H.objects}
    if args.json or args.out:
        _emit(io.dumps(doc), args.out)
    else:
        rows = [("object", "generators")] + [(names[phi], ",".join(doc["generators"][names[phi]]))
                                             for phi in H.objects]
        _emit(_table(rows))
    return EXIT_OK


def cmd_complete(args) -> int:
    A = _category(args.input)
    sl = SubDoctrine(DOCTRINES[args.doctrine], args.budget).slice(A)
    doc, names = _presheaf_category_json(sl.category, A)
    unit = {str(a): names[sl.unit(a)] for a in A.objects}
    if args.json:
        _emit(io.dumps({"category": doc, "unit": unit}))
    else:
        out = f"{len(sl.category)} objects\n" + _table([(names[phi], phi.q_type) for phi in sl.category.objects])
        out += "unit\n" + _table([(a, u) for a, u in unit.items()])
        _emit(out)
    return EXIT_OK


def cmd_extend(args) -> int:
    Phi = io.distributor_from_json(io.read_json(args.dist))
    E = hausdorff_on_dist(Phi)
    dn = io.presheaf_names(Phi.dom, E.dom.objects)
    cn = io.presheaf_names(Phi.cod, E.cod.objects)
    if args.json:
        _emit(io.dumps(io.distributor_to_json(E, dn, cn)))
    else:
        Q = Phi.Q
        rows = [("",) + tuple(dn[s] for s in E.dom.objects)]
        rows += [(cn[t],) + tuple(Q.render(E(t, s)) for s in E.dom.objects) for t in E.cod.objects]
        _emit(_table(rows))
    return EXIT_OK


def cmd_laws(args) -> int:
    report = run_suite(args.suite, args.budget, args.seed)
    if args.json:
        _emit(io.dumps(report.to_json()))
    else:
        rows = [("law", "fixture", "status", "counterexample")]
        rows += [(e.law, e.fixture, e.status, e.counterexample or "") for e in report.entries]
        fails = len(report.failures)
        _emit(_table(rows) + f"{len(report.entries)} checks, {fails} failed\n")
    return EXIT_LAWS if report.failures else EXIT_OK


def cmd_enumerate(args) -> int:
    A = _category(args.input)
    ps = enumerate_presheaves(A, args.budget)
    names = [str(a) for a in A.objects]
    if args.json:
        _emit(io.dumps([{"type": p.q_type, "values": dict(zip(names, (A.Q.render(v) for v in p.values)))}
                        for p in ps]))
    else:
        rows = [("type",) + tuple(names)] + [(p.q_type,) + tuple(A.Q.render(v) for v in p.values) for p in ps]
        _emit(_table(rows) + f"{len(ps)} presheaves\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quantcat", description="Exact computations with quantaloid-enriched categories.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, "check a lattice, quantaloid, category, distributor or presheaf file")
    sp.add_argument("file")

    sp = add("hausdorff", cmd_hausdorff, "directed and symmetrized Hausdorff distances between point sets")
    sp.add_argument("--space", required=True)
    sp.add_argument("--source", required=True, help="comma-separated points")
    sp.add_argument("--target", required=True, help="comma-separated points")

    sp = add("hcat", cmd_hcat, "the category of conical presheaves with its generator index")
    sp.add_argument("--space", required=True)
    sp.add_argument("--out")

    sp = add("complete", cmd_complete, "completion of a category under a doctrine, with its unit")
    sp.add_argument("--doctrine", choices=sorted(DOCTRINES), required=True)
    sp.add_argument("--input", required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = add("extend", cmd_extend, "extend a distributor to conical presheaf categories")
    sp.add_argument("--dist", required=True)
    sp.add_argument("--doctrine", choices=["hausdorff"], default="hausdorff")

    sp = add("laws", cmd_laws, "run a law suite")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--budget", type=int, default=200)
    sp.add_argument("--seed", type=int, default=7)

    sp = add("enumerate", cmd_enumerate, "list all presheaves on a category")
    sp.add_argument("--what", choices=["presheaves"], default="presheaves")
    sp.add_argument("--input", required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidCategory as e:
        for v in getattr(e, "violations", [str(e)]):
            print(f"violation: {v}", file=sys.stderr)
        return EXIT_INVALID
    except (io.ParseError, UsageError, LatticeError, QuantaloidError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
