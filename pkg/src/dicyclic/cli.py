"""Command line interface: ``dicyclic {elements,multable,autos,spaces,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
import warnings

from . import automorphism as aut
from . import dc2, oracle, serialize
from . import symmetric as sym
from .group import GroupParams, ParameterError, cayley_table, center, element_order, enumerate_group
from .verify import FAULTS, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _set(elements) -> str:
    return "{" + ", ".join(str(g) for g in elements) + "}"


def _render_rows(rows: list[list[str]], sep: str = "  ") -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [sep.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _params(n: int) -> GroupParams:
    try:
        return GroupParams(n)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def inventory(n: int) -> list[tuple[str | None, aut.Automorphism]]:
    """Every automorphism of Dc_n, labelled for n = 2, in a fixed order."""
    if n == 2:
        return [(label, phi) for label, phi in dc2.summary_automorphisms()]
    return [(None, phi) for phi in aut.enumerate_rs_automorphisms(n)]


def _class_representatives(n: int, autos: list) -> list:
    """Least member of each automorphism's isomorphy class."""
    if n == 2:
        classes = oracle.aut_conjugacy_classes(autos)
        rep = {}
        for cls in classes:
            for i in cls:
                rep[i] = autos[min(cls)]
        return [rep[i] for i in range(len(autos))]
    rep = {}
    for cls in aut.isomorphy_classes(n):
        for phi in cls:
            rep[phi] = cls[0]
    return [rep[phi] for phi in autos]


# -- elements ---------------------------------------------------------------


def cmd_elements(n: int, fmt: str = "text") -> str:
    _params(n)
    z = set(center(n))
    entries = [
        {"element": str(g), "order": element_order(g), "center": g in z}
        for g in enumerate_group(n)
    ]
    if fmt == "json":
        return serialize.dumps(serialize.document("elements", n, entries))
    rows = [["element", "order", "center"]] + [
        [e["element"], str(e["order"]), "*" if e["center"] else ""] for e in entries
    ]
    if fmt == "csv":
        return _csv([["element", "order", "center"]] + [[e["element"], e["order"], int(e["center"])] for e in entries])
    return _render_rows(rows)


# -- multable ---------------------------------------------------------------


def cmd_multable(n: int, fmt: str = "text") -> str:
    _params(n)
    table = cayley_table(n)
    entries = serialize.multable_entries(table)
    if fmt == "json":
        return serialize.dumps(serialize.document("multable", n, entries))
    header = [""] + [e["row"] for e in entries]
    rows = [header] + [[e["row"]] + e["products"] for e in entries]
    if fmt == "csv":
        return _csv(rows)
    return _render_rows(rows)


# -- autos ------------------------------------------------------------------


def cmd_autos(
    n: int,
    fmt: str = "text",
    order: int | None = None,
    inner: bool | None = None,
    involutions: bool = False,
) -> str:
    """Automorphism inventory; ``inner`` True/False keeps inner/outer only."""
    _params(n)
    inv = inventory(n)
    autos = [phi for _, phi in inv]
    reps = _class_representatives(n, autos)
    labels = {phi.to_table().images: label for label, phi in inv}
    entries = []
    for (label, phi), rep in zip(inv, reps):
        k = aut.exact_order(phi)
        is_in = aut.is_inner(phi)
        if order is not None and k != order:
            continue
        if inner is not None and is_in != inner:
            continue
        if involutions and not aut.is_involution(phi):
            continue
        entries.append(
            {
                "automorphism": serialize.automorphism_to_json(phi, label),
                "order": k,
                "inner": is_in,
                "involution": aut.is_involution(phi),
                "class_representative": serialize.automorphism_to_json(
                    rep, labels.get(rep.to_table().images) if n == 2 else None
                ),
            }
        )
    if fmt == "json":
        return serialize.dumps(serialize.document("autos", n, entries))

    def name(a):
        if a.get("label"):
            return a["label"]
        if a["kind"] == "rs":
            return f"({a['r']},{a['s']})"
        return f"[x->{a['images']['x']}, y->{a['images']['y']}]"

    header = ["automorphism", "x->", "y->", "order", "inner", "class"]
    body = [
        [
            name(e["automorphism"]),
            e["automorphism"]["images"]["x"],
            e["automorphism"]["images"]["y"],
            str(e["order"]),
            "inner" if e["inner"] else "outer",
            name(e["class_representative"]),
        ]
        for e in entries
    ]
    if fmt == "csv":
        return _csv([header] + body)
    return _render_rows([header] + body)


# -- spaces -----------------------------------------------------------------


def _select(n: int, rs: tuple[int, int] | None, index: int | None, name: str | None, all_: bool):
    inv = inventory(n)
    if all_:
        return inv
    if name is not None:
        if n != 2:
            raise UsageError("--name is only available for n = 2")
        try:
            phi = dc2.named_automorphism(name)
        except KeyError:
            raise UsageError(f"unknown automorphism name {name!r}") from None
        return [(dc2.label_of(phi), phi)]
    if index is not None:
        if not 0 <= index < len(inv):
            raise UsageError(f"--index must be in [0, {len(inv)})")
        return [inv[index]]
    if rs is not None:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", aut.IncompleteFamilyWarning)
                phi = aut.make_rs(rs[0], rs[1], n)
        except ParameterError as exc:
            raise UsageError(f"--rs {rs[0]},{rs[1]} is not an automorphism: {exc}") from None
        if n == 2:
            return [(dc2.label_of(phi.to_table()), phi.to_table())]
        return [(None, phi)]
    raise UsageError("choose an automorphism with --rs, --index, --name or --all")


def cmd_spaces(
    n: int,
    fmt: str = "text",
    rs: tuple[int, int] | None = None,
    index: int | None = None,
    name: str | None = None,
    all_: bool = False,
) -> str:
    _params(n)
    chosen = _select(n, rs, index, name, all_)
    reports = [(label, sym.build_space_report(phi)) for label, phi in chosen]
    entries = [serialize.space_report_to_json(rep, label) for label, rep in reports]
    if fmt == "json":
        return serialize.dumps(serialize.document("spaces", n, entries))
    if fmt == "csv":
        rows = [["automorphism", "set", "element"]]
        for (label, rep), e in zip(reports, entries):
            who = label or str(rep.phi)
            for kind in ("H", "Q", "R", "R_minus_Q"):
                rows += [[who, kind, g] for g in e[kind]]
            for kind in ("h_orbits", "g_orbits"):
                for i, orbit in enumerate(e[kind]):
                    rows += [[who, f"{kind}[{i}]", g] for g in orbit]
        return _csv(rows)
    header = ["automorphism", "order", "H", "Q", "R", "H\\Q", "G\\Q"]
    body = []
    for label, rep in reports:
        r_cell = _set(rep.R) + (" *" if rep.r_beyond_paper else "")
        body.append(
            [
                label or str(rep.phi),
                str(rep.order),
                _set(rep.H),
                _set(rep.Q),
                r_cell,
                " ".join(_set(o) for o in rep.h_orbits),
                " ".join(_set(o) for o in rep.g_orbits),
            ]
        )
    text = _render_rows([header] + body, sep=" | ")
    if any(rep.r_beyond_paper for _, rep in reports):
        text += "* R for an automorphism that is not an involution (beyond paper)\n"
    return text


# -- verify -----------------------------------------------------------------


def cmd_verify(n_min: int, n_max: int, jobs: int = 1, fault: str | None = None, out=None) -> int:
    out = out or sys.stdout
    if not 2 <= n_min <= n_max:
        raise UsageError("need 2 <= n_min <= n_max")
    start = time.perf_counter()
    results = run_verification(n_min, n_max, jobs=jobs, fault=fault)
    elapsed = time.perf_counter() - start
    failed = False
    for r in results:
        status = "PASS" if not r.failures else "FAIL"
        print(f"{status}  {r.name:<30} passed={r.passed} failed={len(r.failures)}", file=out)
        if r.failures:
            failed = True
            print(f"      first counterexample: {r.failures[0]}", file=out)
    print(f"n = {n_min}..{n_max}: {'FAILED' if failed else 'all checks passed'} in {elapsed:.1f}s", file=out)
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing -------------------------------------------------------


def _rs_pair(text: str) -> tuple[int, int]:
    try:
        r, s = text.split(",")
        return int(r), int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,S but got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicyclic",
        description="Dicyclic groups Dc_n: automorphisms, symmetric spaces and twisted orbits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(p, formats=("text", "json", "csv")):
        p.add_argument("--n", type=int, required=True, help="Dc_n has order 4n; n >= 2")
        p.add_argument("--format", choices=formats, default="text")
        return p

    with_n(sub.add_parser("elements", help="list elements with orders, marking the centre"))
    with_n(sub.add_parser("multable", help="Cayley table"))

    p = with_n(sub.add_parser("autos", help="automorphism inventory"))
    p.add_argument("--order", type=int, help="keep automorphisms of this exact order")
    side = p.add_mutually_exclusive_group()
    side.add_argument("--inner", action="store_const", const=True, dest="inner")
    side.add_argument("--outer", action="store_const", const=False, dest="inner")
    p.add_argument("--involutions", action="store_true")

    p = with_n(sub.add_parser("spaces", help="H, Q, R and orbit partitions"))
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("--rs", type=_rs_pair, metavar="R,S")
    sel.add_argument("--index", type=int, help="position in the 'autos' inventory")
    sel.add_argument("--name", help="Dc_2 only, e.g. 'phi_4 o Inn(x)'")
    sel.add_argument("--all", action="store_true", dest="all_")

    p = sub.add_parser("verify", help="run the property sweeps for a range of n")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--inject-fault", choices=sorted(FAULTS), help="check that the sweep catches a bug")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.n_min, args.n_max, args.jobs, args.inject_fault)
        if args.command == "elements":
            text = cmd_elements(args.n, args.format)
        elif args.command == "multable":
            text = cmd_multable(args.n, args.format)
        elif args.command == "autos":
            text = cmd_autos(args.n, args.format, args.order, args.inner, args.involutions)
        else:
            text = cmd_spaces(args.n, args.format, args.rs, args.index, args.name, args.all_)
    except UsageError as exc:
        print(f"dicyclic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
