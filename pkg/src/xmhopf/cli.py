"""Command-line surface: batch validation and computation with exit codes.

Exit status: 0 when every check passes, 1 when at least one axiom or
identity is violated (a report is still printed), 2 on input errors.
Reports are deterministic: identical input bytes give identical output
bytes, with or without --json.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .crossed import kernel_image_cokernel, validate_components, validate_crossed_module
from .docio import DocumentError, StructureDocument, parse
from .errors import XmhopfError
from .groups import validate_group
from .hopf import enumerate_grouplikes, grouplike_report, is_grouplike
from .hopfmod import (
    coinvariants,
    distinguished_grouplike,
    dual_hopf_module,
    integral_report,
    integral_space,
    structure_iso,
    validate_hopf_xi_module,
)
from .linalg import Field
from .repcat import hom_space, validate_module
from .report import Report
from .xihopf import (
    dualize,
    dualize_algebra,
    full_validation_report,
    grouplike_pairing,
    is_xi_grouplike,
    validate_hopf_xi_algebra,
)


def _read_document(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _show_family(f: Field, fam) -> list:
    return [[f.show(v) for v in comp] for comp in fam]


class CommandResult:
    def __init__(self, command: str, digest: str, target: str):
        self.payload = {
            "command": command,
            "digest": digest,
            "object": target,
            "checks": [],
            "outputs": {},
        }

    def add_report(self, rep: Report) -> None:
        for c in rep.checks:
            self.payload["checks"].append(
                {
                    "name": f"{rep.title}: {c.name}",
                    "status": "pass" if c.ok else "fail",
                    "violations": c.violations,
                    "witnesses": list(c.witnesses),
                }
            )

    def output(self, key: str, value) -> None:
        self.payload["outputs"][key] = value

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.payload["checks"])

    def render(self, as_json: bool) -> str:
        self.payload["ok"] = self.ok
        if as_json:
            return json.dumps(self.payload, indent=2, sort_keys=True) + "\n"
        lines = [
            f"command: {self.payload['command']}",
            f"document-sha256: {self.payload['digest']}",
            f"object: {self.payload['object']}",
        ]
        for c in self.payload["checks"]:
            status = "pass" if c["status"] == "pass" else f"FAIL ({c['violations']} violations)"
            lines.append(f"check {c['name']}: {status}")
            for w in c["witnesses"]:
                lines.append(f"  witness: {w}")
        for key in sorted(self.payload["outputs"]):
            lines.append(f"output {key}: {json.dumps(self.payload['outputs'][key], sort_keys=True)}")
        lines.append(f"result: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _verify_object(doc: StructureDocument, name: str, res: CommandResult) -> None:
    section, obj = doc.lookup(name)
    if section == "groups":
        res.add_report(validate_group(obj))
    elif section == "crossed_modules":
        res.add_report(validate_components(obj))
        res.add_report(validate_crossed_module(obj))
        kic = kernel_image_cokernel(obj)
        res.add_report(kic.report)
        res.output("kernel", list(kic.kernel))
        res.output("image", list(kic.image))
        res.output("cokernel_order", kic.cokernel.order)
    elif section == "hopf":
        res.add_report(full_validation_report(obj))
        res.output("dims", [obj.dim(x) for x in obj.H.elements()])
    elif section == "modules":
        over, mod = obj
        res.add_report(validate_module(doc.hopf[over], mod))
        res.output("dims", list(mod.dims))
    elif section == "hopf_modules":
        over, mod = obj
        res.add_report(validate_hopf_xi_module(doc.hopf[over], mod))
        res.output("dims", list(mod.dims))
    elif section == "grouplikes":
        over, fam = obj
        a = doc.hopf[over]
        res.add_report(grouplike_report(a.base, fam))
        if is_grouplike(a.base, fam):
            pairing = grouplike_pairing(a, fam)
            res.output(
                "pairing", {str(e): a.field.show(v) for e, v in sorted(pairing.items())}
            )
            res.output("xi_grouplike", is_xi_grouplike(a, fam))
    else:  # integrals
        over, side, fam = obj
        a = doc.hopf[over]
        res.add_report(integral_report(a, fam, side))


def cmd_verify(doc: StructureDocument, args, res: CommandResult) -> None:
    _verify_object(doc, args.name, res)


def cmd_integrals(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)
    sides = ("left", "right") if args.side == "both" else (args.side,)
    for side in sides:
        basis = integral_space(a, side)
        res.output(f"{side}_dimension", len(basis))
        res.output(f"{side}_basis", [_show_family(a.field, fam) for fam in basis])
        chk = Report(f"{side} integrals")
        chk.settle(
            "dimension is 1 (finite type over a field)",
            len(basis) == 1,
            f"dimension = {len(basis)}",
        )
        nonzero = all(
            any(v != a.field.zero for v in fam[x])
            for fam in basis
            for x in a.H.elements()
        )
        chk.settle("basis integrals are nonzero on every component", nonzero)
        res.add_report(chk)


def cmd_grouplikes(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)
    fams = enumerate_grouplikes(a.base)
    out = []
    for fam in fams:
        pairing = grouplike_pairing(a, fam)
        out.append(
            {
                "family": _show_family(a.field, fam),
                "pairing": {str(e): a.field.show(v) for e, v in sorted(pairing.items())},
                "xi_grouplike": is_xi_grouplike(a, fam),
            }
        )
    res.output("count", len(fams))
    res.output("families", out)
    chk = Report("grouplike enumeration")
    chk.settle("unit family is grouplike", any(
        fam == tuple(a.component(x).unit for x in a.H.elements()) for fam in fams
    ))
    res.add_report(chk)


def cmd_dual(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)
    b = dualize(a)
    res.add_report(validate_hopf_xi_algebra(b))
    back = dualize_algebra(b)
    chk = Report("duality")
    same = (
        all(
            back.delta(x, y) == a.delta(x, y)
            for x in a.H.elements()
            for y in a.H.elements()
        )
        and all(
            back.component(x).mul == a.component(x).mul
            and back.component(x).unit == a.component(x).unit
            for x in a.H.elements()
        )
        and back.counit == a.counit
        and all(back.S(x) == a.S(x) for x in a.H.elements())
        and all(
            back.phi(x, e) == a.phi(x, e)
            for x in a.H.elements()
            for e in a.E.elements()
        )
    )
    chk.settle("double dual equals the original structure constants", same)
    res.add_report(chk)
    res.output("dims", [b.dim(x) for x in b.H.elements()])


def cmd_structure_theorem(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)
    section, obj = doc.lookup(args.module)
    if section != "hopf_modules":
        raise DocumentError(f"{args.module!r} is not a Hopf module")
    over, mod = obj
    if doc.hopf[over] is not a:
        raise DocumentError(f"{args.module!r} is not a module over {args.name!r}")
    res.add_report(validate_hopf_xi_module(a, mod))
    chk = Report("structure theorem")
    coinv = coinvariants(a, mod)
    res.output("coinvariants_dimension", len(coinv))
    res.output("coinvariants_basis", [_show_family(a.field, c) for c in coinv])
    try:
        structure_iso(a, mod)
        chk.settle("trivialization maps are exact two-sided inverses", True)
    except XmhopfError as exc:
        chk.settle("trivialization maps are exact two-sided inverses", False, str(exc))
    res.add_report(chk)


def cmd_hom(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)

    def module_arg(name):
        section, obj = doc.lookup(name)
        if section != "modules":
            raise DocumentError(f"{name!r} is not a graded module")
        over, mod = obj
        if doc.hopf[over] is not a:
            raise DocumentError(f"{name!r} is not a module over {args.name!r}")
        return mod

    m = module_arg(args.source)
    n = module_arg(args.target)
    if args.degree is None:
        degrees = list(a.E.elements())
    else:
        try:
            degrees = [int(args.degree)]
        except ValueError:
            degrees = [doc.element_index(a.E, args.degree)]
    for e in degrees:
        if not 0 <= e < a.E.order:
            raise DocumentError(f"degree {e} out of range")
        basis = hom_space(a, m, n, e)
        res.output(f"degree_{e}_dimension", len(basis))
        res.output(
            f"degree_{e}_basis",
            [
                [
                    [[a.field.show(v) for v in row] for row in blk.data]
                    for blk in h.blocks
                ]
                for h in basis
            ],
        )
    chk = Report("hom computation")
    chk.settle("hom spaces computed", True)
    res.add_report(chk)


def cmd_report(doc: StructureDocument, args, res: CommandResult) -> None:
    a = _hopf_arg(doc, args.name)
    res.add_report(full_validation_report(a))
    for side in ("left", "right"):
        basis = integral_space(a, side)
        res.output(f"{side}_integral_dimension", len(basis))
        res.output(f"{side}_integral_basis", [_show_family(a.field, fam) for fam in basis])
    fams = enumerate_grouplikes(a.base)
    res.output("grouplike_count", len(fams))
    res.output(
        "xi_grouplikes",
        [_show_family(a.field, fam) for fam in fams if is_xi_grouplike(a, fam)],
    )
    chk = Report("derived structure")
    try:
        g = distinguished_grouplike(a)
        res.output("distinguished_grouplike", _show_family(a.field, g))
        chk.settle("distinguished grouplike verified", True)
    except XmhopfError as exc:
        chk.settle("distinguished grouplike verified", False, str(exc))
    try:
        m = dual_hopf_module(a)
        chk.settle("dual Hopf module passes its gates", True)
        res.output("dual_hopf_module_dims", list(m.dims))
    except XmhopfError as exc:
        chk.settle("dual Hopf module passes its gates", False, str(exc))
    res.add_report(chk)


def _hopf_arg(doc: StructureDocument, name: str):
    section, obj = doc.lookup(name)
    if section != "hopf":
        raise DocumentError(f"{name!r} is not a Hopf structure")
    return obj


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xmhopf",
        description="Validate and compute with crossed-module-graded Hopf structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("document", help="path to a structure document, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(fn=fn)
        return p

    p = add("verify", cmd_verify, "run the validator stack on a named object")
    p.add_argument("name")

    p = add("integrals", cmd_integrals, "compute the integral space of a Hopf structure")
    p.add_argument("name")
    p.add_argument("--side", choices=["left", "right", "both"], default="both")

    p = add("grouplikes", cmd_grouplikes, "enumerate basis-supported grouplike families")
    p.add_argument("name")

    p = add("dual", cmd_dual, "dualize and validate the dual structure")
    p.add_argument("name")

    p = add("structure-theorem", cmd_structure_theorem, "check the Hopf module trivialization")
    p.add_argument("name")
    p.add_argument("module")

    p = add("hom", cmd_hom, "compute graded hom spaces between named modules")
    p.add_argument("name")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--degree", default=None, help="element index or declared element label")

    p = add("report", cmd_report, "full report: validation, integrals, grouplikes, duals")
    p.add_argument("name")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        data = _read_document(args.document)
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    digest = hashlib.sha256(data).hexdigest()
    try:
        doc = parse(data)
        res = CommandResult(args.command, digest, getattr(args, "name", ""))
        args.fn(doc, args, res)
    except DocumentError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except XmhopfError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(res.render(args.json))
    return 0 if res.ok else 1


if __name__ == "__main__":
    sys.exit(main())
