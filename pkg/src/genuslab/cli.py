"""Command-line front end.

Subcommands: per-field reports, reproduction of the twelve-row reference
table of q / rs fields, census runs by discriminant bound, the Euler-product
constant, squarefree prime-factor counts, and the density report.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import census as census_mod
from .biquadratic import field_record, from_radicands
from .brauer import class_number_biquadratic, unit_index
from .errors import GenusLabError, InternalInconsistency
from .euclid import euclidean_verdict
from .quadratic import ClassNumberCache, class_number, discriminant, set_cache

# Reference table of q / rs fields K = Q(sqrt(q), sqrt(rs)) with
# (h_{Q(q)}, h_{Q(rs)}, h_{Q(qrs)}, h_K) = (1, 1, 4, 2) in every row.
REFERENCE_TABLE = (
    (5, 11, 19),
    (5, 19, 11),
    (5, 19, 31),
    (5, 31, 19),
    (13, 3, 23),
    (13, 23, 3),
    (37, 3, 7),
    (37, 3, 11),
    (37, 7, 3),
    (37, 7, 11),
    (37, 11, 3),
    (37, 11, 7),
)
REFERENCE_ROW = (1, 1, 4, 2)


@dataclass
class Config:
    """Runtime knobs; flags beat environment variables beat these defaults."""

    cache_dir: str = None
    threads: int = 1
    oracle_bound: int = 10**6
    verdict_bound: int = 10**6
    precision_bits: int = 128


def _config_from(args):
    cfg = Config()
    env_cache = os.environ.get("GENUSLAB_CACHE")
    env_threads = os.environ.get("GENUSLAB_THREADS")
    if env_cache:
        cfg.cache_dir = env_cache
    if env_threads:
        cfg.threads = max(1, int(env_threads))
    if getattr(args, "cache", None):
        cfg.cache_dir = args.cache
    if getattr(args, "threads", None):
        cfg.threads = max(1, args.threads)
    if cfg.cache_dir is not None:
        path = os.path.join(cfg.cache_dir, "class_numbers.tsv")
        try:
            os.makedirs(cfg.cache_dir, exist_ok=True)
            set_cache(ClassNumberCache(path))
        except OSError as exc:
            print(f"warning: cache dir unusable ({exc}); running without cache",
                  file=sys.stderr)
    return cfg


def _field_report(d1, d2):
    K = from_radicands(d1, d2)
    rec = field_record(K)
    rec["subfield_class_numbers"] = [
        class_number(discriminant(n)) for n in K.subfield_radicands
    ]
    rec["unit_index"] = unit_index(K).Q
    rec["h_K"] = class_number_biquadratic(K)
    rec["verdict"] = euclidean_verdict(K).to_json()
    return rec


def _print_field_human(rec):
    print(f"K = Q(sqrt({rec['d1']}), sqrt({rec['d2']}))")
    print(f"  triple (m1, m2, m3) = {tuple(rec['triple'])}, c = {rec['c']}")
    print(f"  discriminant = {rec['discriminant']}")
    print(f"  quadratic subfield radicands = {tuple(rec['subfields'])}")
    print(f"  genus field generators = {rec['genus_generators']}")
    print(f"  genus number = {rec['genus_number']}")
    print(f"  L (real genus subfield) generators = {tuple(rec['L_generators'])}")
    print(f"  form = {rec['form']}")
    print(f"  subfield class numbers = {tuple(rec['subfield_class_numbers'])}")
    print(f"  unit index Q = {rec['unit_index']}")
    print(f"  h_K = {rec['h_K']}")
    v = rec["verdict"]
    print(f"  verdict = {v['status']} (reasons: {', '.join(v['reasons']) or 'none'})")
    print(f"    omega(Delta) = {v['omega']}, hilbert_abelian = {v['hilbert_abelian']}, "
          f"exceptional_pattern = {v['exceptional_pattern']}")


def cmd_field(args):
    rec = _field_report(args.d1, args.d2)
    if args.json:
        print(json.dumps(rec, indent=2))
    else:
        _print_field_human(rec)
    return 0


def cmd_table(args):
    mismatches = 0
    print(f"{'q':>3} {'r':>3} {'s':>3} {'h1':>3} {'h2':>3} {'h3':>3} {'h_K':>4}  ok")
    for q, r, s in REFERENCE_TABLE:
        K = from_radicands(q, r * s)
        h1 = class_number(discriminant(q))
        h2 = class_number(discriminant(r * s))
        h3 = class_number(discriminant(q * r * s))
        h_K = class_number_biquadratic(K)
        got = (h1, h2, h3, h_K)
        ok = got == REFERENCE_ROW
        mismatches += not ok
        print(f"{q:>3} {r:>3} {s:>3} {h1:>3} {h2:>3} {h3:>3} {h_K:>4}  {'yes' if ok else 'NO'}")
    n = len(REFERENCE_TABLE)
    print(f"{n - mismatches}/{n} rows match")
    if mismatches:
        raise InternalInconsistency(f"{mismatches} reference table rows disagree")
    return 0


def cmd_census(args):
    report = census_mod.count_S(args.max_disc, checkpoint_path=args.checkpoint)
    payload = report.to_json()
    print(json.dumps(payload, indent=2))
    if args.csv:
        omegas = sorted(report.by_omega)
        header = ["X", "total"] + [f"omega_{w}" for w in omegas] + ["eligible_fraction"]
        row = [report.X, report.total] + [report.by_omega[w] for w in omegas]
        row.append(report.eligible_fraction)
        with open(args.csv, "w") as fh:
            fh.write(",".join(header) + "\n")
            fh.write(",".join(str(v) for v in row) + "\n")
    return 0


def cmd_constants(args):
    print(census_mod.euler_constant(args.prime_bound))
    return 0


def cmd_selberg(args):
    exact, main, ratio = census_mod.sathe_selberg_count(args.limit, args.n)
    print(f"squarefree m <= {args.limit} with omega(m) = {args.n}: {exact}")
    print(f"main term N/log N (loglog N)^(n-1)/(n-1)! = {main:.2f}")
    print(f"ratio = {ratio:.4f}")
    return 0


def cmd_density(args):
    rep = census_mod.density_report(args.max_disc)
    print(f"fields with discriminant <= {rep['X']}")
    print(f"overall omega <= 4 fraction: {rep['overall_eligible_fraction']:.4f}")
    for row in rep["decades"]:
        lo = 10 ** row["decade"]
        print(f"  decade [{lo}, {lo * 10}): total {row['total']:>8}, "
              f"omega<=4 fraction {row['eligible_fraction']:.4f}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genuslab",
        description="genus fields, class numbers, and Euclidean-ideal verdicts "
                    "for odd real biquadratic fields",
    )
    parser.add_argument("--cache", help="cache directory (env: GENUSLAB_CACHE)")
    parser.add_argument("--threads", type=int, help="worker count (env: GENUSLAB_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="full report for one field")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("table", help="reproduce the twelve-row reference table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("census", help="count fields by discriminant bound")
    p.add_argument("--max-disc", type=int, required=True)
    p.add_argument("--csv", help="write a one-row CSV summary here")
    p.add_argument("--checkpoint", help="resume file for long runs")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("constants", help="truncated Euler-product constant")
    p.add_argument("--prime-bound", type=int, default=10**6)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("selberg", help="count squarefree m with omega(m) = n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_selberg)

    p = sub.add_parser("density", help="per-decade omega <= 4 fractions")
    p.add_argument("--max-disc", type=int, required=True)
    p.set_defaults(func=cmd_density)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    _config_from(args)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except (GenusLabError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
