"""Command-line front end: mine | generate | bench.

Exit codes: 0 ok, 2 input format error, 3 parameter error, 4 resource
limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import apriori, bench, datagen, mfif, oracle, rules
from .txdb import (FormatError, MiningError, MiningParams, ParameterError,
                   ResourceLimitError, item_label, itemset_labels,
                   parse_item_lists, parse_matrix)

EXIT_OK = 0
EXIT_FORMAT = 2
EXIT_PARAMETER = 3
EXIT_RESOURCE = 4


def _parse_min_support(raw: str, n_transactions: int,
                       min_confidence=None) -> MiningParams:
    raw = raw.strip()
    try:
        if raw.endswith("%"):
            return MiningParams.from_percent(raw[:-1], n_transactions,
                                             min_confidence=min_confidence)
        return MiningParams(min_support_count=int(raw),
                            min_confidence=min_confidence)
    except ValueError:
        raise ParameterError(f"invalid --min-support value {raw!r}")


def _read_input(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}")


def _load_db(args):
    text = _read_input(args.input)
    if args.format == "matrix":
        return parse_matrix(text)
    if args.universe is None:
        raise ParameterError("--format items requires --universe")
    return parse_item_lists(text, args.universe)


def _binary_row(universe_size: int, itemset) -> str:
    row = ["0"] * universe_size
    for i in itemset:
        row[i] = "1"
    return " ".join(row)


def cmd_mine(args) -> int:
    db = _load_db(args)
    min_conf = Fraction(str(args.min_confidence)) \
        if args.min_confidence is not None else None
    params = _parse_min_support(args.min_support, db.n_transactions,
                                min_confidence=min_conf)

    counters = {}
    if args.algorithm == "mfif":
        res = mfif.mfif_mine(db, params, pool_cap=args.pool_cap)
        level, found = res.level, res.itemsets
        counters = {"levels_descended": res.levels_descended,
                    "subset_expansions": res.subset_expansions}
    elif args.algorithm == "mfif-all":
        found = mfif.mfif_mine_all_maximal(db, params, pool_cap=args.pool_cap)
        level = max((len(s.itemset) for s in found), default=0)
    elif args.algorithm == "apriori":
        res = apriori.apriori_mine(db, params)
        found = res.levels[-1].itemsets if res.levels else []
        level = res.max_level
        counters = {"scans": res.scan_count}
    elif args.algorithm == "brute":
        family = oracle.brute_force_frequent(db, params)
        level = max((len(s.itemset) for s in family), default=0)
        found = [s for s in family if len(s.itemset) == level]
    else:
        raise ParameterError(f"unknown algorithm {args.algorithm!r}")

    strong = None
    if args.rules:
        if args.algorithm == "apriori":
            base = [s for lvl in res.levels for s in lvl.itemsets
                    if len(s.itemset) >= 2]
        elif args.algorithm == "brute":
            base = [s for s in family if len(s.itemset) >= 2]
        else:
            base = rules.expand_frequent(db, found, params)
        strong = rules.generate_rules(db, base, params,
                                      single_consequent=args.single_consequent)

    if args.output == "json":
        _emit_json(args, db, params, level, found, counters, strong)
    elif args.output == "csv":
        _emit_csv(db, level, found, strong)
    else:
        _emit_text(args, db, params, level, found, strong)
    return EXIT_OK


def _emit_text(args, db, params, level, found, strong):
    print(f"ALGORITHM: {args.algorithm}")
    print(f"MIN SUPPORT COUNT: {params.min_support_count}")
    if not found:
        print("NO FREQUENT ITEM SET")
    else:
        print("THE FREQUENT ITEM SET IS:")
        for s in found:
            print(f"{_binary_row(db.universe_size, s.itemset)}  "
                  f"{itemset_labels(s.itemset)}  support={s.support}")
    if strong is not None:
        print("STRONG RULES:")
        for r in strong:
            print(f"{itemset_labels(r.antecedent)} => "
                  f"{itemset_labels(r.consequent)}  support={r.support} "
                  f"confidence={rules.format_confidence(r.confidence)}")


def _emit_json(args, db, params, level, found, counters, strong):
    doc = {
        "algorithm": args.algorithm,
        "min_support_count": params.min_support_count,
        "level": level,
        "itemsets": [{"items": [i + 1 for i in s.itemset],
                      "support": s.support} for s in found],
        "counters": counters,
    }
    if strong is not None:
        doc["rules"] = [{"antecedent": [i + 1 for i in r.antecedent],
                         "consequent": [i + 1 for i in r.consequent],
                         "support": r.support,
                         "confidence": rules.format_confidence(r.confidence)}
                        for r in strong]
    print(json.dumps(doc, indent=2))


def _emit_csv(db, level, found, strong):
    import csv as _csv
    w = _csv.writer(sys.stdout)
    w.writerow(["kind", "items", "antecedent", "consequent",
                "support", "confidence"])
    for s in found:
        w.writerow(["itemset", " ".join(str(i + 1) for i in s.itemset),
                    "", "", s.support, ""])
    for r in (strong or []):
        w.writerow(["rule", "",
                    " ".join(str(i + 1) for i in r.antecedent),
                    " ".join(str(i + 1) for i in r.consequent),
                    r.support, rules.format_confidence(r.confidence)])


def cmd_generate(args) -> int:
    spec = datagen.GeneratorSpec(
        n_transactions=args.transactions,
        universe_size=args.items,
        planted_itemset_size=args.planted_size,
        planted_copies=args.copies,
        noise_density=args.noise,
        seed=args.seed)
    datagen.generate_to_file(spec, args.out)
    print(f"wrote {args.transactions}x{args.items} matrix to {args.out}")
    return EXIT_OK


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in bench.ALGORITHMS:
            raise ParameterError(f"unknown algorithm {a!r}")
    corpora = []
    if args.input:
        for path in args.input:
            corpora.append(parse_matrix(_read_input(path)))
    else:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        if not sizes:
            raise ParameterError("no corpus sizes given")
        for i, n in enumerate(sizes):
            spec = datagen.GeneratorSpec(
                n_transactions=n, universe_size=args.items,
                planted_itemset_size=args.planted_size,
                planted_copies=args.copies, noise_density=args.noise,
                seed=args.seed + i)
            corpora.append(datagen.generate(spec))

    def params_for(db):
        return _parse_min_support(args.min_support, db.n_transactions)

    rows = bench.run_bench(corpora, algorithms, params_for, reps=args.reps,
                           pool_cap=args.pool_cap)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(rows, fh)
    else:
        bench.write_csv(rows, sys.stdout)
    if args.plot_data:
        with open(args.plot_data, "w", encoding="utf-8", newline="") as fh:
            bench.write_plot_data(rows, fh)
    if rows and all(r.error for r in rows):
        print("all bench rows failed", file=sys.stderr)
        return EXIT_PARAMETER
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxminer",
                                description="Frequent-itemset mining toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mine", help="mine a transaction database")
    m.add_argument("--input", required=True, help="input file path")
    m.add_argument("--format", choices=["matrix", "items"], default="matrix")
    m.add_argument("--universe", type=int,
                   help="universe size (items format only)")
    m.add_argument("--algorithm",
                   choices=["mfif", "mfif-all", "apriori", "brute"],
                   default="mfif")
    m.add_argument("--min-support", required=True,
                   help="absolute count N or percentage P%%")
    m.add_argument("--min-confidence", type=str, default=None)
    m.add_argument("--rules", action="store_true",
                   help="also emit strong association rules")
    m.add_argument("--single-consequent", action="store_true",
                   help="restrict rules to one-item consequents")
    m.add_argument("--output", choices=["text", "json", "csv"], default="text")
    m.add_argument("--pool-cap", type=int, default=mfif.DEFAULT_POOL_CAP)
    m.set_defaults(func=cmd_mine)

    g = sub.add_parser("generate", help="write a synthetic corpus")
    g.add_argument("--transactions", type=int, required=True)
    g.add_argument("--items", type=int, required=True)
    g.add_argument("--planted-size", type=int, default=0)
    g.add_argument("--copies", type=int, default=0)
    g.add_argument("--noise", type=float, default=0.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="output file path")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="timed algorithm comparison")
    b.add_argument("--input", action="append",
                   help="matrix corpus file; repeatable")
    b.add_argument("--sizes", default="100,500",
                   help="comma-separated corpus sizes to generate")
    b.add_argument("--items", type=int, default=20)
    b.add_argument("--planted-size", type=int, default=12)
    b.add_argument("--copies", type=int, default=2)
    b.add_argument("--noise", type=float, default=0.15)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algorithms", default="mfif,apriori")
    b.add_argument("--min-support", default="2")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--pool-cap", type=int, default=mfif.DEFAULT_POOL_CAP)
    b.add_argument("--report", help="write report CSV here (default stdout)")
    b.add_argument("--plot-data", help="write per-algorithm time series here")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParameterError, MiningError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
