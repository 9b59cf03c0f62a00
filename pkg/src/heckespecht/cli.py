"""Command-line front end.

Every invocation resolves the coefficient field first and echoes the
derived pair (e, p) alongside the result, in the selected output format
(text, json or csv).  Inputs are validated strictly; malformed
partitions, out-of-range indices and unknown flags exit with status 2,
unexpected internal failures with status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .carter_payne import (
    CPInstance,
    OutsideProvenScope,
    adjacent_map,
    cp_eligible,
    one_node_map,
    trivial_hom_exists,
    verify_cp,
)
from .homs import HomSpec, compose_psi_theta, hom_space_dim
from .partitions import parse_partition
from .qfield import parse_field, qbinom, quantum_char, vanish_run
from .reducibility import classify_range
from .tableaux import Tableau

DEFAULT_SEED = 20240801
BRUTE_FORCE_LIMIT = 9
WORKERS_ENV = "HECKESPECHT_WORKERS"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckespecht",
        description="Exact Specht module homomorphisms for Hecke algebras",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed echoed into machine output, reserved for sampling")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_field(p):
        p.add_argument("--field", required=True,
                       help='coefficient field, e.g. "p=7,q=2", "cyclotomic:e=3", "ext:p=2,e=3"')

    p = sub.add_parser("qbinom", help="Gaussian binomial")
    add_field(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)

    p = sub.add_parser("vanish-run", help="does a full run of Gaussian binomials vanish")
    add_field(p)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)

    p = sub.add_parser("trivial-sub", help="does the Specht module contain the trivial module")
    add_field(p)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("cp-eligible", help="node-moving eligibility criterion")
    add_field(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--gamma", type=int, default=1)

    p = sub.add_parser("cp-map", help="construct an explicit node-moving homomorphism")
    add_field(p)
    p.add_argument("--xi", help="target partition for a one-node map")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, help="source row for the one-node map")
    p.add_argument("--mu", help="target partition for an adjacent-rows map")
    p.add_argument("--gamma", type=int, help="node count for the adjacent-rows map")

    p = sub.add_parser("cp-verify", help="verify a homomorphism lands in the Specht module")
    add_field(p)
    p.add_argument("--xi")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--mu")
    p.add_argument("--gamma", type=int)
    p.add_argument("--hom-json", help="path to a homomorphism JSON file (- for stdin)")
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("hom-dim", help="dimension of the hom space between Specht modules")
    add_field(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("compose", help="merge map composed with a basis homomorphism, symbolically")
    add_field(p)
    p.add_argument("--tableau", required=True, help='row-standard tableau as JSON, e.g. "[[1,1,2],[3]]"')
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("classify", help="reducibility reports for all partitions of n")
    add_field(p)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("tables", help="table of Gaussian binomials")
    add_field(p)
    p.add_argument("--max", type=int, default=8)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        field = parse_field(args.field)
        profile = quantum_char(field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        result, rows = _dispatch(args, field)
    except OutsideProvenScope as exc:
        result, rows = "outside proven scope", [("verdict", "outside proven scope")]
        return _emit(args, profile, result, rows, note=str(exc))
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - internal failures
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    return _emit(args, profile, result, rows)


def _dispatch(args, field):
    """Returns (json result object, csv/text rows)."""
    cmd = args.command
    if cmd == "qbinom":
        value = str(qbinom(field, args.alpha, args.beta))
        return (
            {"alpha": args.alpha, "beta": args.beta, "value": value},
            [("alpha", args.alpha), ("beta", args.beta), ("value", value)],
        )
    if cmd == "vanish-run":
        verdict = vanish_run(field.profile(), args.alpha, args.beta)
        return (
            {"alpha": args.alpha, "beta": args.beta, "vanishes": verdict},
            [("alpha", args.alpha), ("beta", args.beta), ("vanishes", _b(verdict))],
        )
    if cmd == "trivial-sub":
        mu = parse_partition(args.mu)
        verdict = trivial_hom_exists(mu, field.profile())
        return (
            {"mu": list(mu), "trivial_submodule": verdict},
            [("mu", args.mu), ("trivial_submodule", _b(verdict))],
        )
    if cmd == "cp-eligible":
        inst = CPInstance(parse_partition(args.mu), args.a, args.b, args.gamma)
        verdict = cp_eligible(inst, field.profile())
        return (
            {"mu": list(inst.mu), "lambda": list(inst.lam), "a": args.a, "b": args.b,
             "gamma": args.gamma, "eligible": verdict},
            [("mu", args.mu), ("a", args.a), ("b", args.b), ("gamma", args.gamma),
             ("eligible", _b(verdict))],
        )
    if cmd == "cp-map":
        hom = _build_map(args, field)
        return hom.to_json(), _hom_rows(hom)
    if cmd == "cp-verify":
        hom = _load_or_build_map(args, field)
        _guard(sum(hom.source), args.force)
        verdict = verify_cp(hom)
        return (
            verdict.to_json(),
            [("nonzero", _b(verdict.nonzero)),
             ("lands_in_specht", _b(verdict.lands_in_specht))],
        )
    if cmd == "hom-dim":
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        _guard(sum(lam), args.force)
        dim = hom_space_dim(field, lam, mu)
        return (
            {"lambda": list(lam), "mu": list(mu), "dimension": dim},
            [("lambda", args.lam), ("mu", args.mu), ("dimension", dim)],
        )
    if cmd == "compose":
        tab = Tableau(json.loads(args.tableau))
        hom = compose_psi_theta(field, tab, args.d, args.t)
        return hom.to_json(), _hom_rows(hom)
    if cmd == "classify":
        reports = _classify(args.n, field.profile())
        rows = [
            (",".join(str(x) for x in r.partition), r.e, r.p, r.verdict,
             _witness_text(r.witness), r.caveat or "")
            for r in reports
        ]
        return [r.to_json() for r in reports], rows
    if cmd == "tables":
        if args.max < 0:
            raise ValueError("--max must be nonnegative")
        table = [
            [str(qbinom(field, a, b)) for b in range(a + 1)]
            for a in range(args.max + 1)
        ]
        return {"max": args.max, "qbinom": table}, table
    raise ValueError(f"unknown command {cmd}")


def _build_map(args, field) -> HomSpec:
    if args.xi is not None:
        if args.b is None:
            raise ValueError("--xi needs --b")
        return one_node_map(field, parse_partition(args.xi), args.a, args.b)
    if args.mu is not None and args.gamma is not None:
        return adjacent_map(field, parse_partition(args.mu), args.a, args.gamma)
    raise ValueError("give --xi/--a/--b for a one-node map or --mu/--a/--gamma for adjacent rows")


def _load_or_build_map(args, field) -> HomSpec:
    if args.hom_json:
        if args.hom_json == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.hom_json, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        stored = data.get("fieldSpec")
        if stored is not None and stored != field.name:
            raise ValueError(
                f"homomorphism JSON was written over {stored!r}, not {field.name!r}"
            )
        return HomSpec.from_json(data, field)
    if args.a is None:
        raise ValueError("give --hom-json or map construction flags")
    return _build_map(args, field)


def _classify(n, profile):
    workers = 1
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            workers = max(1, int(raw))
        except ValueError:
            workers = 1
    if workers > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor
            from .partitions import partitions_of
            from .reducibility import is_ep_reducible

            parts = list(partitions_of(n))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(is_ep_reducible, lam, profile) for lam in parts]
                return [f.result() for f in futures]
        except Exception:
            pass
    return classify_range(n, profile)


def _guard(n: int, force: bool):
    if n > BRUTE_FORCE_LIMIT and not force:
        raise ValueError(
            f"n={n} exceeds the brute-force guard ({BRUTE_FORCE_LIMIT}); pass --force to override"
        )


def _hom_rows(hom: HomSpec):
    return [
        (str(tab), hom.field.format_rep(rep))
        for tab, rep in sorted(hom.coeffs.items(), key=lambda item: item[0].reading_word())
    ]


def _witness_text(witness):
    if not witness:
        return ""
    return ";".join(f"{i},{j}" for i, j in witness)


def _b(value: bool) -> str:
    return "true" if value else "false"


def _emit(args, profile, result, rows, note=None) -> int:
    field_name = args.field
    e = None if profile is None else profile.e
    p = None if profile is None else profile.p
    if args.format == "json":
        payload = {
            "field": field_name,
            "e": e,
            "p": p,
            "seed": args.seed,
            "command": args.command,
            "result": result,
        }
        if note:
            payload["note"] = note
        print(json.dumps(payload, indent=2))
        return 0
    if args.format == "csv":
        print(f"# field={field_name},e={e},p={p}")
        _emit_csv(args.command, rows)
        return 0
    print(f"field {field_name} (e={e}, p={p})")
    if note:
        print(note)
    _emit_text(args.command, rows)
    return 0


def _emit_csv(command, rows):
    if command == "classify":
        print("partition,e,p,verdict,witness,note")
        for row in rows:
            print(",".join(f'"{cell}"' if "," in str(cell) else str(cell) for cell in row))
    elif command == "tables":
        width = len(rows) - 1 if rows else 0
        print("alpha\\beta," + ",".join(str(b) for b in range(width + 1)))
        for a, row in enumerate(rows):
            print(f"{a}," + ",".join(row))
    elif command in ("cp-map", "compose"):
        print("tableau,scalar")
        for tab, scalar in rows:
            print(f'"{tab}","{scalar}"')
    else:
        print(",".join(str(k) for k, _ in rows))
        print(",".join(str(v) for _, v in rows))


def _emit_text(command, rows):
    if command == "classify":
        for partition, _e, _p, verdict, witness, caveat in rows:
            tail = f"  witness {witness}" if witness else ""
            note = f"  [{caveat}]" if caveat else ""
            print(f"{partition}: {verdict}{tail}{note}")
    elif command == "tables":
        for a, row in enumerate(rows):
            print(f"[{a}] " + "  ".join(row))
    elif command in ("cp-map", "compose"):
        for tab, scalar in rows:
            print(f"{tab} -> {scalar}")
    else:
        for key, value in rows:
            print(f"{key}: {value}")


if __name__ == "__main__":
    sys.exit(main())
