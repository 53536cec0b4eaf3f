"""Command-line front end.

Subcommands::

    idempotents P            list nontrivial idempotents and their ideals
    ideal P SIDE E00 E01 E10 E11   emit an ideal as a code file
    rankcode-info FILE       measure a rank code file
    lift FILE                lift a code file into the Grassmannian
    verify P                 run the full theorem suite (nonzero exit on failure)
    distribution Q           rank distribution (A0, A1, A2) of M2(F_q)
    gaussian N K Q           q-ary Gaussian coefficient
    weights-report P         egalitarian / homogeneous analysis of the rank weight

Every reporting subcommand takes ``--format table`` (default, aligned
text) or ``--format json`` (stable key order). Exit codes: 0 success,
1 verification failure or theorem violation, 2 bad input, 3 enumeration
budget exceeded (budget overridable via IDEALIFT_ENUM_BUDGET).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import lifting, rank_code, ring, subspace, verify, weights
from .algebra import PrimeField
from .errors import BudgetExceeded, TheoremViolation


def _render_table(rows: list[tuple], headers: tuple | None = None) -> str:
    table = [tuple(str(cell) for cell in row) for row in rows]
    if headers:
        table.insert(0, tuple(str(h) for h in headers))
    if not table:
        return ""
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    if headers:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _load_code(path: str) -> rank_code.RankMetricCode:
    """Read a rankcode or ideal code file into a measured code."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("rankcode"):
        return rank_code.parse_rank_code(text)
    if stripped.startswith("ideal"):
        ideal = ring.parse_ideal(text)
        return rank_code.code_from_matrix_set(ideal.elements)
    raise ValueError(f"{path}: expected a 'rankcode' or 'ideal' file")


def _cmd_idempotents(args) -> int:
    field = PrimeField(args.p)
    descriptor = ring.MatrixRing(field)
    idempotents = ring.enumerate_nontrivial_idempotents(descriptor)
    ideal_index: dict[str, dict[frozenset, int]] = {"left": {}, "right": {}}
    rows = []
    for idem in idempotents:
        indices = {}
        for side in ring.SIDES:
            ideal = ring.principal_ideal(idem, side)
            key = frozenset(m.entries() for m in ideal)
            indices[side] = ideal_index[side].setdefault(key, len(ideal_index[side]))
        rows.append((idem, indices["left"], indices["right"]))
    if args.format == "json":
        payload = {
            "p": args.p,
            "idempotent_count": len(idempotents),
            "distinct_left_ideals": len(ideal_index["left"]),
            "distinct_right_ideals": len(ideal_index["right"]),
            "idempotents": [
                {
                    "entries": list(idem.entries()),
                    "left_ideal": left,
                    "right_ideal": right,
                }
                for idem, left, right in rows
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(
        _render_table(
            [
                (" ".join(str(v) for v in idem.entries()), left, right)
                for idem, left, right in rows
            ],
            headers=("idempotent (row-major)", "left ideal", "right ideal"),
        )
    )
    print(f"nontrivial idempotents: {len(idempotents)}")
    print(f"distinct left ideals:   {len(ideal_index['left'])}")
    print(f"distinct right ideals:  {len(ideal_index['right'])}")
    return 0


def _cmd_ideal(args) -> int:
    field = PrimeField(args.p)
    generator = field.matrix([args.entries[:2], args.entries[2:]])
    ideal = ring.principal_ideal(generator, args.side)
    _emit(ring.format_ideal(ideal), args.output)
    return 0


def _cmd_rankcode_info(args) -> int:
    code = _load_code(args.file)
    report = rank_code.code_report(code)
    report = {"k": code.k, "l": code.l, "p": code.field.p, "M": code.size, **report}
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return 0
    rows = [(key, json.dumps(value)) for key, value in report.items() if key != "witnesses"]
    for name, value in report["witnesses"].items():
        rows.append((name, json.dumps(value)))
    print(_render_table(rows))
    return 0


def _cmd_lift(args) -> int:
    code = _load_code(args.file)
    lifted = lifting.lift_code(code)
    _emit(subspace.format_subspace_code(lifted.code), args.output)
    report = lifting.lift_report(lifted)
    histogram = subspace.distance_histogram(lifted.code)
    report["distance_histogram"] = {str(k): v for k, v in sorted(histogram.items())}
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return 0
    lifted_params = report["lifted"]
    print(
        "lifted code: ({n}, {M}, {d}, {k})_{q}".format(**lifted_params)
        + ("" if lifted.theorem_ok is None else "  [parameters verified]")
    )
    source = report["source"]
    print(
        f"source: [{source['k']}x{source['l']}, rho={source['rho']}, "
        f"delta={source['delta']}]"
    )
    if histogram:
        print(_render_table(sorted(histogram.items()), headers=("d_S", "pairs")))
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suite(
        args.p,
        seed=args.seed,
        subcode_trials=args.trials,
        transport_samples=args.samples,
    )
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        payload = {
            "p": args.p,
            "seed": args.seed,
            "ok": not failed,
            "checks": [
                {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
            ],
        }
        print(json.dumps(payload, indent=2))
        return 1 if failed else 0
    rows = [("PASS" if r.ok else "FAIL", r.name, r.detail) for r in results]
    print(_render_table(rows, headers=("status", "check", "detail")))
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _cmd_distribution(args) -> int:
    dist = rank_code.rank_distribution(args.q)
    if args.format == "json":
        print(
            json.dumps(
                {"q": args.q, "a0": dist.a0, "a1": dist.a1, "a2": dist.a2}, indent=2
            )
        )
    else:
        print(f"{dist.a0} {dist.a1} {dist.a2}")
    return 0


def _cmd_gaussian(args) -> int:
    value = subspace.gaussian_coefficient(args.n, args.k, args.q)
    if args.format == "json":
        print(json.dumps({"n": args.n, "k": args.k, "q": args.q, "value": value}))
    else:
        print(value)
    return 0


def _cmd_weights_report(args) -> int:
    report = weights.weights_report(args.p, side=args.side)
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return 0
    rows = [
        ("weight", report["weight_name"]),
        ("ring", report["ring"]),
        ("side", report["side"]),
        ("is weight", report["is_weight"]),
        ("egalitarian (E)", report["E"]),
        ("value condition (H)", report["H"]),
        ("homogeneous", report["homogeneous"]),
    ]
    for entry in report["gamma_values"]:
        rows.append(
            (
                "Gamma for " + " ".join(str(v) for v in entry["generator"]),
                f"{entry['gamma_num']}/{entry['gamma_den']}",
            )
        )
    print(_render_table(rows))
    if report["witnesses"]:
        print("witnesses: " + json.dumps(report["witnesses"]))
    return 0


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("table", "json"),
        default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealift",
        description="Grassmannian codes from idempotent-generated ideals of M2(F_p)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_idem = sub.add_parser("idempotents", help="list nontrivial idempotents and their ideals")
    p_idem.add_argument("p", type=int, help="prime modulus")
    _add_format(p_idem)
    p_idem.set_defaults(handler=_cmd_idempotents)

    p_ideal = sub.add_parser("ideal", help="emit a one-sided principal ideal as a code file")
    p_ideal.add_argument("p", type=int, help="prime modulus")
    p_ideal.add_argument("side", choices=ring.SIDES)
    p_ideal.add_argument(
        "entries", type=int, nargs=4, metavar="E",
        help="generator entries, row-major",
    )
    p_ideal.add_argument("-o", "--output", help="write the code file here instead of stdout")
    p_ideal.set_defaults(handler=_cmd_ideal)

    p_info = sub.add_parser("rankcode-info", help="measure a rank code file")
    p_info.add_argument("file", help="rankcode or ideal file")
    _add_format(p_info)
    p_info.set_defaults(handler=_cmd_rankcode_info)

    p_lift = sub.add_parser("lift", help="lift a code file into the Grassmannian")
    p_lift.add_argument("file", help="rankcode or ideal file")
    p_lift.add_argument(
        "-o", "--output",
        help="write the lifted subspace code file here instead of stdout",
    )
    _add_format(p_lift)
    p_lift.set_defaults(handler=_cmd_lift)

    p_verify = sub.add_parser("verify", help="run the full theorem suite")
    p_verify.add_argument("p", type=int, help="prime modulus")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    p_verify.add_argument(
        "--trials", type=int, default=200,
        help="random linear subcodes for the delta = omega sweep",
    )
    p_verify.add_argument(
        "--samples", type=int, default=10 ** 4,
        help="random pairs for the distance-doubling check (p > 2)",
    )
    _add_format(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_dist = sub.add_parser("distribution", help="rank distribution of M2(F_q)")
    p_dist.add_argument("q", type=int, help="prime power")
    _add_format(p_dist)
    p_dist.set_defaults(handler=_cmd_distribution)

    p_gauss = sub.add_parser("gaussian", help="q-ary Gaussian coefficient")
    p_gauss.add_argument("n", type=int)
    p_gauss.add_argument("k", type=int)
    p_gauss.add_argument("q", type=int, help="prime power")
    _add_format(p_gauss)
    p_gauss.set_defaults(handler=_cmd_gaussian)

    p_weights = sub.add_parser(
        "weights-report", help="egalitarian / homogeneous analysis of the rank weight"
    )
    p_weights.add_argument("p", type=int, help="prime modulus")
    p_weights.add_argument("--side", choices=ring.SIDES, default="left")
    _add_format(p_weights)
    p_weights.set_defaults(handler=_cmd_weights_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
