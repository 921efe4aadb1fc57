"""Command-line surface: validate / analyze / decompose / extend / zoo /
enumerate / verify over .sgt and .phm files.

Exit codes: 0 success, 1 property or validation failure, 2 usage error,
3 I/O error.  All randomness flows through --seed (fixed default), so every
command is deterministic given its inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import decompose as dc
from . import properties, render, zoo
from .core import format_sgt, is_weakly_reductive, load_sgt
from .green import (
    ccr_witness,
    green,
    idempotents,
    is_clifford,
    is_completely_simple,
    is_conditionally_completely_regular,
    is_e_dense,
    is_eventually_regular,
    is_group_bound,
    is_periodic,
    regular_elements,
)
from .stratify import classify, stratify
from .errors import (
    NotConditionallyCompletelyRegular,
    SemigroupError,
    SgtParseError,
)
from .extend import build_extension, format_phm, parse_phm

SCHEMA_VERSION = 1
DEFAULT_SEED = 0

_ZOO_TABLE = {
    "monogenic": (zoo.monogenic, 2),
    "cyclic": (zoo.cyclic_group, 1),
    "zero": (zoo.zero_semigroup, 1),
    "chain": (zoo.chain_semilattice, 1),
    "rectangular_band": (zoo.rectangular_band, 2),
    "brandt_b2": (zoo.brandt_b2, 0),
    "powerset_nil": (zoo.powerset_nilsemigroup, 1),
    "free_nilpotent": (zoo.free_nilpotent, 2),
    "full_transformations": (zoo.full_transformations, 1),
    "trivial": (zoo.trivial, 0),
}


def _zoo_build(name, params):
    if name == "partial_map":
        if len(params) < 3:
            raise SemigroupError("partial_map needs n m and n group orders")
        n, m, orders = params[0], params[1], params[2:]
        if len(orders) != n:
            raise SemigroupError(f"partial_map expects {n} group orders")
        groups = [zoo.cyclic_group(r) for r in orders]
        return zoo.partial_map_extension(n, m, groups).sigma
    if name not in _ZOO_TABLE:
        known = ", ".join(sorted(_ZOO_TABLE) + ["partial_map"])
        raise SemigroupError(f"unknown zoo fixture {name!r} (known: {known})")
    fn, arity = _ZOO_TABLE[name]
    if len(params) != arity:
        raise SemigroupError(f"zoo fixture {name} takes {arity} parameter(s)")
    return fn(*params)


def _resolve_ref(ref, base_dir):
    """A .phm reference: either a path to a .sgt file or a zoo:... tag."""
    if ref.startswith("zoo:"):
        parts = ref.split(":")
        return _zoo_build(parts[1], [int(p) for p in parts[2:]])
    path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
    return load_sgt(path)


def analysis_bundle(S):
    g = green(S)
    strat = stratify(S)
    cls = classify(S)
    ccr = is_conditionally_completely_regular(S)
    bundle = {
        "schema_version": SCHEMA_VERSION,
        "order": S.order,
        "zero": S.zero,
        "identity": S.identity,
        "labels": list(S.labels) if S.labels else None,
        "green": {name: getattr(g, name).as_lists()
                  for name in ("R", "L", "H", "D", "J")},
        "idempotents": sorted(idempotents(S)),
        "regular": sorted(regular_elements(S)),
        "flags": {
            "e_dense": is_e_dense(S),
            "periodic": is_periodic(S),
            "eventually_regular": is_eventually_regular(S),
            "group_bound": is_group_bound(S),
            "conditionally_completely_regular": ccr,
            "completely_simple": is_completely_simple(S),
            "clifford": is_clifford(S),
            "weakly_reductive": is_weakly_reductive(S),
        },
        "stratification": strat.to_json(),
        "classification": cls.to_json(),
        "decomposition": dc.verify_rho(S).to_json() if ccr else None,
    }
    return bundle


def cmd_validate(args):
    try:
        S = load_sgt(args.path)
    except SemigroupError as e:
        print(f"invalid: {e}")
        return 1
    tags = []
    if S.zero is not None:
        tags.append(f"zero={S.zero}")
    if S.identity is not None:
        tags.append(f"identity={S.identity}")
    print(f"valid semigroup of order {S.order}"
          + (" (" + ", ".join(tags) + ")" if tags else ""))
    return 0


def cmd_analyze(args):
    S = load_sgt(args.path)
    if args.json:
        print(json.dumps(analysis_bundle(S), indent=2))
    else:
        ccr = is_conditionally_completely_regular(S)
        print(render.render_analysis(S))
        print(f"\nconditionally completely regular: {ccr}")
        if not ccr:
            w = ccr_witness(S)
            print(f"  witness H-class without idempotent: {sorted(w)}")
    return 0


def cmd_decompose(args):
    S = load_sgt(args.path)
    try:
        report = dc.verify_rho(S)
    except NotConditionallyCompletelyRegular as e:
        print(f"not conditionally completely regular; witness H-class "
              f"{sorted(e.h_class)}")
        return 1
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION}
        payload.update(report.to_json())
        print(json.dumps(payload, indent=2))
    else:
        print(render.render_decomposition(S, report))
    return 0


def cmd_extend(args):
    with open(args.path, "r", encoding="utf-8") as fh:
        text = fh.read()
    base_dir = os.path.dirname(os.path.abspath(args.path))
    phi = parse_phm(text, lambda ref: _resolve_ref(ref, base_dir))
    witness = build_extension(phi)
    out = format_sgt(witness.sigma)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
        print(f"wrote order-{witness.sigma.order} extension to {args.output}")
    else:
        sys.stdout.write(out)
    return 0


def cmd_zoo(args):
    S = _zoo_build(args.name, args.params)
    out = format_sgt(S)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
        print(f"wrote {args.name} (order {S.order}) to {args.output}")
    else:
        sys.stdout.write(out)
    return 0


def cmd_enumerate(args):
    count = 0
    for S in zoo.enumerate_associative(args.order, dedup=args.dedup):
        count += 1
        if not args.count_only:
            sys.stdout.write(format_sgt(S) + "\n")
    print(f"# {count} associative table(s) of order {args.order}"
          + (f" up to {args.dedup}" if args.dedup else ""))
    return 0


def cmd_verify(args):
    failures = []
    checked = 0

    def run(S, origin):
        nonlocal checked
        checked += 1
        bad = properties.check_semigroup(S)
        if bad:
            failures.append((origin, S, bad))

    for k, S in enumerate(zoo.enumerate_associative(args.order)):
        run(S, f"enumerated order-{args.order} table #{k}")
    reps = list(zoo.enumerate_associative(args.order, dedup="iso+anti"))
    pair_checks = 0
    for i, A in enumerate(reps):
        for j, B in enumerate(reps):
            pair_checks += 1
            for msg in properties.check_product_pair(A, B):
                failures.append((f"product of representatives #{i} x #{j}",
                                 A, [msg, "right factor:\n" + format_sgt(B)]))
    survivors = zoo.sample_associative(5, args.samples, seed=args.seed)
    for k, S in enumerate(survivors):
        run(S, f"uniform order-5 sample #{k}")
    deep = zoo.random_associative(5, min(args.samples, 10), seed=args.seed)
    for k, S in enumerate(deep):
        run(S, f"randomized-backtracking order-5 sample #{k}")

    print(f"checked {checked} semigroup(s) "
          f"({pair_checks} product pairs, {len(survivors)} of {args.samples} "
          f"uniform order-5 samples associative, {len(deep)} backtracking samples)")
    if failures:
        for origin, S, bad in failures:
            print(f"\nFAIL [{origin}]")
            sys.stdout.write(format_sgt(S))
            for msg in bad:
                print(f"  - {msg}")
        print(f"\n{len(failures)} failing semigroup(s)")
        return 1
    print("all property suites passed")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="finsemi",
        description="Analyze finite semigroups given as Cayley tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an .sgt file")
    p.add_argument("path")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="Green structure + stratification")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(fn=cmd_analyze, json=False)

    p = sub.add_parser("decompose", help="semilattice decomposition (CCR input)")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(fn=cmd_decompose, json=False)

    p = sub.add_parser("extend", help="build the extension defined by a .phm file")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("zoo", help="emit a fixture as .sgt")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_zoo)

    p = sub.add_parser("enumerate", help="all associative tables of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dedup", choices=["iso", "iso+anti"], default=None)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SgtParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 3
    except SemigroupError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
