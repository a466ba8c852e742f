"""Command-line front end.

Subcommands: idempotents, codes, equivalence, dihedral, chainring, verify.
Group specs look like C9xC3 or D9; rings like Z4.  Output formats: md
(default), csv, json.  Exit codes: 0 success, 1 verification or invariant
failure, 2 parse errors, 3 budget errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .chainring import (
    annihilator,
    chain_ring_from_spec,
    codeword_count,
    dual_code,
    enumerate_ring_codes,
    ideal_elements,
    is_minimal,
    minimal_ring_codes,
)
from .codes import DEFAULT_WEIGHT_BUDGET, code_from_idempotent, minimum_weight
from .dihedral import dihedral_code_table, dihedral_from_spec, dihedral_idempotents
from .equiv import equivalence_census
from .errors import BudgetError, ConsistencyError
from .ffield import make_extension
from .galg import GroupAlgebra
from .groups import group_from_spec
from .idem import primitive_idempotents
from .tables import compact_distribution, csv_table, json_payload, markdown_table

GOLDEN_SUITE = "reference-tables"


def _is_dihedral_spec(spec: str) -> bool:
    s = spec.strip()
    return len(s) >= 2 and s[0] in "dD" and s[1:].isdigit()


def _abelian_algebra(spec: str, q: int) -> GroupAlgebra:
    return GroupAlgebra(group_from_spec(spec), make_extension(q, 1))


def _emit(headers, rows, fmt: str, payload: dict, footer_lines: list[str]) -> str:
    if fmt == "json":
        return json_payload(payload) + "\n"
    if fmt == "csv":
        return csv_table(headers, rows)
    body = markdown_table(headers, rows)
    lines = [payload["title"], "", body]
    if footer_lines:
        lines.append("")
        lines.extend(footer_lines)
    return "\n".join(lines) + "\n"


def cmd_idempotents(args) -> str:
    if _is_dihedral_spec(args.group):
        G = dihedral_from_spec(args.group)
        system = dihedral_idempotents(G.n, args.q)
    else:
        system = primitive_idempotents(_abelian_algebra(args.group, args.q))
    headers = ["label", "weight", "idempotent"]
    rows = [
        [label, e.weight(), e.render()]
        for label, e in zip(system.labels, system.members)
    ]
    payload = {
        "title": f"# idempotents: {system.algebra.name}",
        "command": "idempotents",
        "group": system.algebra.group.name,
        "q": args.q,
        "members": [
            {"label": label, "weight": e.weight(), "idempotent": e.render(),
             "coeffs": [int(c) for c in e.coeffs]}
            for label, e in zip(system.labels, system.members)
        ],
    }
    return _emit(headers, rows, args.format, payload, [f"members: {len(system)}"])


def cmd_codes(args) -> str:
    if _is_dihedral_spec(args.group):
        return _dihedral_table_output(args)
    algebra = _abelian_algebra(args.group, args.q)
    system = primitive_idempotents(algebra)
    headers = ["label", "idempotent", "dimension", "min_weight"]
    rows = []
    dim_sum = 0
    for label, e in zip(system.labels, system.members):
        code = code_from_idempotent(e)
        w = minimum_weight(code, budget=args.budget)
        rows.append([label, e.render(), code.dimension, w])
        dim_sum += code.dimension
    payload = {
        "title": f"# minimal codes: {algebra.name}",
        "command": "codes",
        "group": algebra.group.name,
        "q": args.q,
        "rows": [
            {"label": r[0], "idempotent": r[1], "dimension": r[2], "min_weight": r[3]}
            for r in rows
        ],
        "dimension_sum": dim_sum,
    }
    return _emit(headers, rows, args.format, payload, [f"dimension sum: {dim_sum}"])


def cmd_equivalence(args) -> str:
    algebra = _abelian_algebra(args.group, args.q)
    census = equivalence_census(algebra, budget=args.budget)
    headers = [
        "class", "representative", "size", "dimension", "min_weight",
        "image_subgroup", "weight_distribution",
    ]
    rows = []
    for k, cls in enumerate(census.report.classes):
        rows.append(
            [
                k,
                cls.representative_label,
                cls.size,
                cls.dimension,
                cls.min_weight,
                cls.image_subgroup,
                compact_distribution(cls.weight_distribution),
            ]
        )
    footer = [
        f"classes: {census.class_count}",
        f"divisor-count prediction tau(exp): {census.divisor_count_prediction}",
        f"matches prediction: {str(census.matches_prediction).lower()}",
        f"equal-distribution inequivalent pairs: {census.collision_pairs}",
    ]
    for f in census.report.findings:
        footer.append(f"finding: {f}")
    payload = {
        "title": f"# equivalence classes: {algebra.name}",
        "command": "equivalence",
        "group": algebra.group.name,
        "q": args.q,
        "classes": [
            {
                "representative": c.representative_label,
                "members": c.member_indices,
                "dimension": c.dimension,
                "min_weight": c.min_weight,
                "image_subgroup": c.image_subgroup,
                "weight_distribution": c.weight_distribution,
            }
            for c in census.report.classes
        ],
        "class_count": census.class_count,
        "divisor_count_prediction": census.divisor_count_prediction,
        "matches_prediction": census.matches_prediction,
        "collision_pairs": [list(p) for p in census.collision_pairs],
        "findings": census.report.findings,
    }
    return _emit(headers, rows, args.format, payload, footer)


def _dihedral_table_output(args) -> str:
    G = dihedral_from_spec(args.group)
    table = dihedral_code_table(G.n, args.q, budget=args.budget)
    headers = [
        "label", "divisor", "dimension", "min_weight",
        "expected_dimension", "expected_min_weight", "match", "note",
    ]
    rows = [
        [
            r.label, r.divisor, r.dimension, r.min_weight,
            r.expected_dimension, r.expected_min_weight,
            "yes" if r.matches else "NO", r.note,
        ]
        for r in table.rows
    ]
    footer = [
        f"condition: {table.condition['case']}",
        f"dimension sum: {table.dimension_sum}",
    ]
    for f in table.findings:
        footer.append(f"finding: {f}")
    payload = {
        "title": f"# dihedral codes: F{args.q}[D{G.n}]",
        "command": "dihedral",
        "group": f"D{G.n}",
        "q": args.q,
        "condition": table.condition,
        "rows": [
            {
                "label": r.label,
                "divisor": r.divisor,
                "dimension": r.dimension,
                "min_weight": r.min_weight,
                "expected_dimension": r.expected_dimension,
                "expected_min_weight": r.expected_min_weight,
                "matches": r.matches,
                "note": r.note,
            }
            for r in table.rows
        ],
        "dimension_sum": table.dimension_sum,
        "findings": table.findings,
    }
    return _emit(headers, rows, args.format, payload, footer)


def cmd_dihedral(args) -> str:
    return _dihedral_table_output(args)


def cmd_chainring(args) -> str:
    ring = chain_ring_from_spec(args.ring)
    group = group_from_spec(args.group)
    if group.rank != 1:
        raise ValueError("chain-ring codes are defined for cyclic groups")
    n = group.order
    codes, count = enumerate_ring_codes(ring, n)
    headers = ["exponents", "code", "words", "dual_exponents", "dual_matches_annihilator"]
    rows = []
    all_ok = True
    for code in codes:
        dual, perm = dual_code(code)
        ok = ideal_elements(dual) == annihilator(code)
        all_ok = all_ok and ok
        rows.append(
            [
                ",".join(map(str, code.exponents)),
                code.label,
                codeword_count(code),
                ",".join(map(str, dual.exponents)),
                "yes" if ok else "NO",
            ]
        )
    _, perm = dual_code(codes[0])
    minimal = minimal_ring_codes(ring, n)
    min_lines = [
        f"minimal: {c.label} words={codeword_count(c)} "
        f"verified={'yes' if is_minimal(c) else 'NO'}"
        for c in minimal
    ]
    footer = [
        f"codes: {count}",
        f"involution permutation: {perm}",
        f"all duals match annihilators: {str(all_ok).lower()}",
        *min_lines,
    ]
    payload = {
        "title": f"# chain-ring codes: {ring.name}[{group.name}]",
        "command": "chainring",
        "ring": ring.name,
        "group": group.name,
        "count": count,
        "rows": [
            {
                "exponents": list(code.exponents),
                "label": code.label,
                "words": codeword_count(code),
            }
            for code in codes
        ],
        "involution_permutation": perm,
        "all_duals_match_annihilators": all_ok,
    }
    return _emit(headers, rows, args.format, payload, footer)


# ---------------------------------------------------------------------------
# golden files


def golden_dir() -> Path:
    return Path(__file__).parent / "goldens"


def load_goldens(suite: str = GOLDEN_SUITE, directory: Optional[Path] = None):
    """The bundled (command, expected output) pairs for a suite."""
    if suite != GOLDEN_SUITE:
        raise ValueError(f"unknown golden suite {suite!r}")
    directory = Path(directory) if directory else golden_dir()
    cases = []
    for path in sorted(directory.glob("*.golden")):
        lines = path.read_text().splitlines()
        # fixed two-line header: description, then the command to replay
        if len(lines) < 2 or not lines[0].startswith("# golden:") or not lines[1].startswith("# command:"):
            raise ValueError(f"golden file {path.name} is missing its two-line header")
        command = lines[1].split(":", 1)[1].strip()
        expected = "\n".join(lines[2:]) + "\n"
        cases.append((path.name, command.split(), expected))
    if not cases:
        raise ValueError(f"no golden files found in {directory}")
    return cases


def cmd_verify(args) -> tuple[str, int]:
    cases = load_goldens(args.suite, args.golden_dir)
    out_lines = []
    failures = 0
    for name, argv, expected in cases:
        actual = run_for_output(argv)
        if actual == expected:
            out_lines.append(f"PASS {name}")
        else:
            failures += 1
            out_lines.append(f"FAIL {name}")
            exp_lines = expected.splitlines()
            act_lines = actual.splitlines()
            for i in range(max(len(exp_lines), len(act_lines))):
                e = exp_lines[i] if i < len(exp_lines) else "<missing>"
                a = act_lines[i] if i < len(act_lines) else "<missing>"
                if e != a:
                    out_lines.append(f"  first difference at line {i + 1}:")
                    out_lines.append(f"  expected: {e}")
                    out_lines.append(f"  actual:   {a}")
                    break
    out_lines.append(f"{len(cases) - failures}/{len(cases)} golden files match")
    return "\n".join(out_lines) + "\n", (1 if failures else 0)


def run_for_output(argv: Sequence[str]) -> str:
    """Run a non-verify subcommand and return its output string."""
    parser = build_parser()
    args = parser.parse_args(list(argv))
    return _HANDLERS[args.command](args)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gacodes",
        description="exact workbench for group-algebra codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True, ring=False):
        if group:
            p.add_argument("--group", required=True, help="group spec, e.g. C9xC3 or D9")
        if ring:
            p.add_argument("--ring", required=True, help="chain ring spec, e.g. Z4")
        else:
            p.add_argument("--q", type=int, required=True, help="field size (prime)")
        p.add_argument("--format", choices=["md", "csv", "json"], default="md")
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_WEIGHT_BUDGET,
            help="enumeration budget for weight computations",
        )
        p.add_argument("--seed", type=int, default=0,
                       help="reserved; all computations are deterministic")
        p.add_argument("--out", type=Path, default=None, help="write output to a file")

    common(sub.add_parser("idempotents", help="primitive idempotent system"))
    common(sub.add_parser("codes", help="dimension and minimum weight per minimal code"))
    common(sub.add_parser("equivalence", help="automorphism equivalence classes"))
    common(sub.add_parser("dihedral", help="dihedral minimal-code table"))
    chain = sub.add_parser("chainring", help="cyclic codes over a chain ring")
    chain.add_argument("--group", required=True, help="cyclic group spec, e.g. C7")
    chain.add_argument("--ring", required=True, help="chain ring spec, e.g. Z4")
    chain.add_argument("--format", choices=["md", "csv", "json"], default="md")
    chain.add_argument("--budget", type=int, default=DEFAULT_WEIGHT_BUDGET)
    chain.add_argument("--seed", type=int, default=0)
    chain.add_argument("--out", type=Path, default=None)

    verify = sub.add_parser("verify", help="recompute bundled golden outputs and diff")
    verify.add_argument("--suite", default=GOLDEN_SUITE)
    verify.add_argument("--golden-dir", type=Path, default=None)
    verify.add_argument("--out", type=Path, default=None)
    return parser


_HANDLERS = {
    "idempotents": cmd_idempotents,
    "codes": cmd_codes,
    "equivalence": cmd_equivalence,
    "dihedral": cmd_dihedral,
    "chainring": cmd_chainring,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            output, status = cmd_verify(args)
        else:
            output = _HANDLERS[args.command](args)
            status = 0
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        args.out.write_text(output)
    else:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
