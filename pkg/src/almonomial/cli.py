"""Command-line front end.

Group specs are either builtin names (S5, A6, C12, D4, Q8, V4, SL2(8),
GL2(3), products like S3xC2) or a path to a JSON group file with fields

    {"degree": 4, "generators": [[2, 1, 4, 3], [2, 3, 4, 1]], "name": "..."}

where generators are 1-based image arrays.  Reports are deterministic for a
fixed input except for the trailing elapsed-time line.  Exit status for
`check`: 0 almost monomial, 1 not, 2 error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass

from . import __version__
from .amcore import is_almost_monomial
from .chartab import character_table
from .corpus import DEFAULT_CORPUS, load_corpus_file, run_corpus
from .families import builtin
from .groups import DEFAULT_CAP, PermGroup, direct_product
from .lfun import (
    DEFAULT_BOUND,
    DEFAULT_BUDGET,
    build_constraints,
    find_pole_pattern,
)
from .perm import Permutation
from .subgroups import subgroup_classes
from .symcert import certify_symmetric_group, partitions

_FAMILY_RE = re.compile(r"^([SACD])(\d+)$")
_LINEAR_RE = re.compile(r"^(SL2|GL2)[(_:]?(\d+)\)?$")
_PRESETS = {"Q8": "quaternion", "V4": "klein", "TRIVIAL": "trivial"}
_FAMILY_CODES = {"S": "symmetric", "A": "alternating", "C": "cyclic", "D": "dihedral"}


def _parse_single_spec(spec: str, cap: int) -> PermGroup:
    m = _FAMILY_RE.match(spec)
    if m:
        return builtin(_FAMILY_CODES[m.group(1)], int(m.group(2)), cap=cap)
    m = _LINEAR_RE.match(spec)
    if m:
        return builtin(m.group(1), int(m.group(2)), cap=cap)
    if spec.upper() in _PRESETS:
        return builtin(_PRESETS[spec.upper()], cap=cap)
    raise ValueError(f"unrecognized builtin spec {spec!r}")


def _load_group_file(path: str, cap: int) -> PermGroup:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    degree = int(doc["degree"])
    gens = []
    for arr in doc["generators"]:
        images = [int(x) - 1 for x in arr]
        if sorted(images) != list(range(degree)):
            raise ValueError(f"{path}: generator is not a 1-based image array: {arr}")
        gens.append(Permutation(images))
    name = doc.get("name") or path
    return PermGroup(degree, gens, name=name, cap=cap)


def parse_group_spec(spec: str, cap: int = DEFAULT_CAP) -> PermGroup:
    """Resolve a spec string to a group; see the module docstring."""
    spec = spec.strip()
    if spec.endswith(".json") or "/" in spec or spec.startswith("@"):
        return _load_group_file(spec.lstrip("@"), cap)
    if "x" in spec:
        parts = spec.split("x")
        group = _parse_single_spec(parts[0], cap)
        for part in parts[1:]:
            group = direct_product(group, _parse_single_spec(part, cap))
        return group
    return _parse_single_spec(spec, cap)


@dataclass
class Report:
    command: str
    group: dict | None
    payload: dict
    elapsed_seconds: float

    def to_json(self) -> str:
        doc = {"command": self.command}
        if self.group is not None:
            doc["group"] = self.group
        doc["payload"] = self.payload
        doc["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return json.dumps(doc, indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.group is not None:
            g = self.group
            lines.append(
                f"group: {g['name']} (order {g['order']}, degree {g['degree']})"
            )
        lines.extend(_render_payload(self.payload))
        lines.append(f"elapsed: {self.elapsed_seconds:.3f}s")
        return "\n".join(lines)


def _render_payload(payload: dict, indent: str = "") -> list[str]:
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_payload(value, indent + "  "))
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], str):
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  {v}" for v in value)
        else:
            lines.append(f"{indent}{key}: {_render_value(value)}")
    return lines


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    return str(value)


def _group_info(group: PermGroup) -> dict:
    return {
        "name": group.name or "unnamed",
        "order": group.order,
        "degree": group.degree,
    }


def _emit(report: Report, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_text())


def _cmd_check(args) -> int:
    start = time.perf_counter()
    group = parse_group_spec(args.spec, cap=args.cap)
    verdict = is_almost_monomial(group, fast=args.fast, threads=args.threads)
    payload = {
        "irreducibles": verdict.matrix.size,
        "almost_monomial": verdict.almost_monomial,
        "monomial": verdict.monomial,
        "failing_pairs": [list(p) for p in verdict.failing_pairs],
        "witness_count": len(verdict.matrix.witnesses),
    }
    if args.witnesses:
        payload["witnesses"] = [
            f"pair ({j}, {k}) <- subgroup class {h} (order "
            f"{subgroup_classes(group)[h].order}), character {l}"
            for (j, k), (h, l) in sorted(verdict.matrix.witnesses.items())
        ]
    report = Report("check", _group_info(group), payload, time.perf_counter() - start)
    _emit(report, args.json)
    return 0 if verdict.almost_monomial else 1


def _cmd_table(args) -> int:
    start = time.perf_counter()
    group = parse_group_spec(args.spec, cap=args.cap)
    table = character_table(group)
    classes = group.conjugacy_classes()
    payload = {
        "irreducibles": table.size,
        "conductor": table.conductor,
        "modular_prime": table.prime,
        "degrees": list(table.degrees),
        "class_sizes": [c.size for c in classes],
        "class_orders": [c.element_order for c in classes],
        "class_representatives": [
            c.representative.cycle_string(one_based=True) for c in classes
        ],
        "rows": [
            " | ".join(v.render() for v in chi.values) for chi in table.irreducibles
        ],
    }
    report = Report("table", _group_info(group), payload, time.perf_counter() - start)
    _emit(report, args.json)
    return 0


def _cmd_subgroups(args) -> int:
    start = time.perf_counter()
    group = parse_group_spec(args.spec, cap=args.cap)
    classes = subgroup_classes(group)
    payload = {
        "class_count": len(classes),
        "total_subgroups": sum(c.class_length for c in classes),
        "census": [
            f"class {c.index}: order {c.order}, length {c.class_length}, "
            f"abelianization {list(c.abelianization) or '[1]'}"
            for c in classes
        ],
    }
    report = Report(
        "subgroups", _group_info(group), payload, time.perf_counter() - start
    )
    _emit(report, args.json)
    return 0


def _cmd_sn_certify(args) -> int:
    start = time.perf_counter()
    cert = certify_symmetric_group(args.n)
    payload = {
        "n": cert.n,
        "partitions": len(partitions(cert.n)),
        "witnessed_pairs": cert.pair_count,
        "trivial_branch": cert.branch_counts["trivial"],
        "sign_branch": cert.branch_counts["sign"],
    }
    if args.witnesses:
        payload["witnesses"] = [
            f"{w.alpha} vs {w.beta}: {w.branch} branch, "
            f"K{list(w.vanishing_shape), list(w.vanishing_content)} = 0"
            for w in cert.witnesses
        ]
    report = Report("sn-certify", None, payload, time.perf_counter() - start)
    _emit(report, args.json)
    return 0


def _cmd_holomorphy(args) -> int:
    start = time.perf_counter()
    group = parse_group_spec(args.spec, cap=args.cap)
    system = build_constraints(group)
    found = find_pole_pattern(system, bound=args.bound, budget=args.budget)
    payload = {
        "irreducibles": system.irreducible_count,
        "constraint_rows": len(system.rows),
        "degree_row": list(system.rows[system.degree_row_index]),
        "bound": args.bound,
        "pole_pattern": list(found) if found is not None else None,
        "poles_force_two_zeros": found is None,
    }
    report = Report(
        "holomorphy", _group_info(group), payload, time.perf_counter() - start
    )
    _emit(report, args.json)
    return 0


def _cmd_corpus(args) -> int:
    start = time.perf_counter()
    entries = DEFAULT_CORPUS if args.file is None else load_corpus_file(args.file)
    lines: list[str] = []

    def progress(row):
        status = "ok" if row.ok else "MISMATCH"
        lines.append(
            f"{row.spec:<10} order {row.order:<6} r {row.irreducibles:<3} "
            f"am {str(row.got_am).lower():<5} monomial {str(row.got_monomial).lower():<5} {status}"
        )

    result = run_corpus(
        entries, cap=args.cap, fast=args.fast, threads=args.threads, progress=progress
    )
    payload = {
        "entries": len(result.rows),
        "mismatches": [row.spec for row in result.mismatches()],
        "table": lines,
    }
    if result.warnings:
        payload["warnings"] = list(result.warnings)
    report = Report("corpus", None, payload, time.perf_counter() - start)
    _emit(report, args.json)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almonomial",
        description="Exact almost-monomiality analysis of finite groups",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_spec=True):
        if with_spec:
            p.add_argument("spec", help="group spec (builtin name or JSON file)")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="order cap")
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("check", help="decide almost monomiality and monomiality")
    common(p)
    p.add_argument("--fast", action="store_true", help="stop once all pairs covered")
    p.add_argument("--witnesses", action="store_true", help="dump the witness list")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("table", help="print the exact character table")
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("subgroups", help="print the subgroup-class census")
    common(p)
    p.set_defaults(func=_cmd_subgroups)

    p = sub.add_parser("sn-certify", help="combinatorial certificate for S_n")
    p.add_argument("n", type=int)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sn_certify)

    p = sub.add_parser(
        "holomorphy", help="order-of-vanishing constraint search at one point"
    )
    common(p)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_holomorphy)

    p = sub.add_parser("corpus", help="run the regression corpus")
    p.add_argument("--file", default=None, help="custom corpus table")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")
    p.add_argument("--fast", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
