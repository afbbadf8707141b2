"""Command-line interface: ``analyze``, ``classify`` and ``family``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 undecided verdicts
(the search budget ran out somewhere).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cache import (
    UNDECIDED,
    CacheFormatError,
    ChordalityCache,
    VerdictCache,
    default_cache_dir,
    dump_caches,
    load_caches,
)
from .core import (
    Clutter,
    ClutterError,
    LabeledGround,
    alexander_dual,
    d_complement,
    independence_complex,
)
from .decomposability import (
    BudgetExceeded,
    fh_triangle,
    is_k_decomposable,
    is_shellable_search,
    min_decomposability,
)
from .enumeration import Caches, ClassificationRecord, PipelineSummary, classify, covers_ground, enumerate_clutters
from .families import FAMILIES, FamilySpec, make_family
from .homology import is_cohen_macaulay, reduced_homology, top_skeleton
from .notation import ParseError, format_clutter, format_complex, format_set, parse_clutter
from .reference import catalog_line
from .structure import (
    graph_neighborhood_simplicial,
    has_free_vertex_property,
    is_matroid_circuit_clutter,
    minimal_nonchordal_minor,
    simplicial_vertices,
)

log = logging.getLogger("clutterkit")

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# analyze


def _witness(c: Clutter, labels: LabeledGround, cache: ChordalityCache) -> dict | None:
    found = minimal_nonchordal_minor(c, cache)
    if found is None:
        return None
    minor, ops = found
    cur = labels
    steps = []
    for name, v in ops:
        steps.append(f"{name} {cur.labels[v]}")
        cur = cur.without(v)
    return {"minor": format_clutter(minor, cur), "operations": steps, "vertices": list(cur.labels)}


def analyze(
    c: Clutter,
    labels: LabeledGround,
    *,
    coefficients: str = "rational",
    audit: bool = False,
    budget: int | None = None,
    certificates: bool = False,
    dual: bool = False,
    complements: tuple[int, ...] = (),
) -> dict:
    caches = Caches(audit=audit, budget=budget, coefficients=coefficients)
    rec = classify(c, caches)
    cx = independence_complex(c)
    out: dict = {
        "clutter": format_clutter(c, labels),
        "vertices": list(labels.labels),
        "record": rec.to_json(),
        "simplicial_vertices": [labels.labels[v] for v in simplicial_vertices(c)],
        "free_vertex_property": has_free_vertex_property(c),
        "matroid_circuit_clutter": is_matroid_circuit_clutter(c),
        "independence_complex": format_complex(cx, labels),
        "homology": reduced_homology(cx, coefficients).to_json(),
        "cohen_macaulay": is_cohen_macaulay(cx, coefficients),
        "h_triangle": [list(r) for r in fh_triangle(cx).h],
        "top_skeleton_homology": reduced_homology(top_skeleton(cx), coefficients).to_json(),
        "catalog_line": catalog_line(c),
    }
    if c.circuits and c.is_uniform(2):
        out["neighborhood_simplicial_graph"] = graph_neighborhood_simplicial(c)
    if not rec.chordal:
        out["nonchordal_witness"] = _witness(c, labels, caches.chordal)
    if rec.shellable:
        try:
            out["min_decomposability"] = min_decomposability(cx)
        except BudgetExceeded:
            out["min_decomposability"] = None
    if certificates and rec.shellable:
        try:
            ok, order = is_shellable_search(cx, budget)
            out["shelling_order"] = [format_set(f, labels) for f in order] if ok else None
        except BudgetExceeded:
            out["shelling_order"] = None
        _, cert = is_k_decomposable(cx, max(cx.dim, 0))
        out["shedding_certificate"] = cert.to_json() if cert else None
    if dual:
        dd = alexander_dual(cx)
        out["alexander_dual"] = format_complex(dd, labels)
        out["alexander_dual_homology"] = reduced_homology(dd, coefficients).to_json()
    for d in complements:
        out.setdefault("complements", {})[str(d)] = format_clutter(d_complement(c, d), labels)
    return out


def _print_report(rep: dict, stream) -> None:
    rec = rep["record"]
    lines = [
        f"clutter            {rep['clutter'] or '(no circuits)'}",
        f"vertices           {' '.join(rep['vertices'])}",
        f"chordal            {rec['chordal']}",
        f"simplicial         {' '.join(rep['simplicial_vertices']) or '-'}",
        f"forbidden minor    {rec['forbidden_minor_to_chordality']}",
        f"forbidden induced  {rec['forbidden_subclutter']}",
        f"free vertex prop.  {rep['free_vertex_property']}",
        f"matroid circuits   {rep['matroid_circuit_clutter']}",
        f"independence cx    {rep['independence_complex'] or '(void)'}",
        f"shellable          {'undecided' if rec['shellable'] is None else rec['shellable']}",
        f"seq. Cohen-Mac.    {rec['sequentially_cm']}",
        f"Cohen-Macaulay     {rep['cohen_macaulay']}",
        f"obstruction        {','.join(rec['obstruction_class']) or '-'}",
        f"homology           {rep['homology'] or 'acyclic'}",
        f"top skeleton       {rec['top_skeleton_profile']}",
        f"h-triangle         {rep['h_triangle']}",
    ]
    if rep.get("catalog_line"):
        lines.append(f"catalog line       {rep['catalog_line']}")
    if "min_decomposability" in rep:
        lines.append(f"least k-decomp.    {rep['min_decomposability']}")
    w = rep.get("nonchordal_witness")
    if w:
        lines.append(f"witness minor      {w['minor']}  via {', '.join(w['operations']) or '(itself)'}")
    if "shelling_order" in rep:
        lines.append(f"shelling order     {rep['shelling_order']}")
    if "alexander_dual" in rep:
        lines.append(f"Alexander dual     {rep['alexander_dual'] or '(void)'}")
    for d, text in rep.get("complements", {}).items():
        lines.append(f"c_{d} complement     {text or '(no circuits)'}")
    stream.write("\n".join(lines) + "\n")


def cmd_analyze(args) -> int:
    c, labels = parse_clutter(args.clutter, args.vertices)
    rep = analyze(
        c,
        labels,
        coefficients=args.coefficients,
        audit=args.audit,
        budget=args.budget,
        certificates=args.certificates,
        dual=args.dual,
        complements=tuple(args.complement or ()),
    )
    if args.json:
        json.dump(rep, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _print_report(rep, sys.stdout)
    return EXIT_UNDECIDED if rep["record"]["shellable"] is None else EXIT_OK


# ---------------------------------------------------------------------------
# classify


def _record_line(rec: ClassificationRecord) -> str:
    d = rec.to_json()
    c = Clutter(rec.n, tuple(rec.circuits))
    d["clutter_text"] = format_clutter(c)
    d["complex_text"] = format_complex(independence_complex(c))
    return json.dumps(d, sort_keys=True)


def _classify_chunk(job: tuple) -> tuple[list[dict], dict[str, dict]]:
    n, chunk, audit, budget, coefficients, seed = job
    caches = _fresh_caches(audit, budget, coefficients, seed)
    recs = [classify(Clutter(n, tuple(masks)), caches).to_json() for masks in chunk]
    return recs, {"chordal": dict(caches.chordal.items()), "shellable": dict(caches.shellable.items())}


def _fresh_caches(audit, budget, coefficients, seed: dict | None) -> Caches:
    caches = Caches(audit=audit, budget=budget, coefficients=coefficients)
    if seed:
        for k, v in seed.get("chordal", {}).items():
            caches.chordal.put(k, v)
        for k, v in seed.get("shellable", {}).items():
            if v != UNDECIDED:
                caches.shellable.put(k, v)
    return caches


def _load_seed(paths: list[Path]) -> dict:
    seed: dict[str, dict] = {"chordal": {}, "shellable": {}}
    for p in paths:
        if p.exists():
            try:
                loaded = load_caches(p)
            except CacheFormatError as exc:
                log.warning("ignoring cache %s: %s", p, exc)
                continue
            for name in seed:
                if name in loaded:
                    seed[name].update(dict(loaded[name].items()))
            log.info("resumed %d cached verdicts from %s", sum(len(v) for v in seed.values()), p)
    return seed


def classify_to_dir(
    n: int,
    out_dir: Path,
    *,
    jobs: int = 1,
    audit: bool = False,
    budget: int | None = None,
    coefficients: str = "rational",
    universe: str = "all",
    resume: bool = False,
) -> PipelineSummary:
    """Classify all clutters on ``n`` vertices and write the output files."""
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    cache_path = out_dir / "cache.bin"
    seed = None
    if resume:
        paths = [cache_path]
        env_dir = default_cache_dir()
        if env_dir is not None:
            paths.append(env_dir / f"cache-{n}.bin")
        seed = _load_seed(paths)
    reps = enumerate_clutters(n)
    log.info("enumerated %d classes in %.1fs", len(reps), time.perf_counter() - t0)
    masks = [c.circuits for c in reps]
    if jobs <= 1:
        parts = [_classify_chunk((n, masks, audit, budget, coefficients, seed))]
    else:
        size = -(-len(masks) // (jobs * 4))
        chunks = [masks[i : i + size] for i in range(0, len(masks), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_classify_chunk, [(n, ch, audit, budget, coefficients, seed) for ch in chunks]))
    log.info("classified in %.1fs", time.perf_counter() - t0)

    summary = PipelineSummary(n)
    chordal, shellable = ChordalityCache(), VerdictCache("shellable")
    records = []
    for recs, caches in parts:
        for k, v in caches["chordal"].items():
            chordal.put(k, v)
        for k, v in caches["shellable"].items():
            shellable.put(k, v)
        records.extend(ClassificationRecord(**r) for r in recs)

    table_rows = []
    with open(out_dir / "records.jsonl", "w", encoding="utf-8") as fh:
        for rec in records:
            c = Clutter(rec.n, tuple(rec.circuits))
            cov = covers_ground(c)
            if universe == "covering" and not cov:
                continue
            summary.add(rec, cov)
            fh.write(_record_line(rec) + "\n")
            if "dc" in rec.obstruction_class:
                table_rows.append(rec)

    with open(out_dir / "summary.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["metric", "value"])
        w.writerows(summary.rows())

    with open(out_dir / "table.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["row", "clutter", "independence_complex", "top_skeleton", "catalog_line"])
        for i, rec in enumerate(table_rows, 1):
            c = Clutter(rec.n, tuple(rec.circuits))
            w.writerow(
                [
                    i,
                    format_clutter(c),
                    format_complex(independence_complex(c)),
                    rec.top_skeleton_profile,
                    catalog_line(c) or "",
                ]
            )

    dump_caches(cache_path, {"chordal": chordal, "shellable": shellable})
    env_dir = default_cache_dir()
    if env_dir is not None:
        env_dir.mkdir(parents=True, exist_ok=True)
        dump_caches(env_dir / f"cache-{n}.bin", {"chordal": chordal, "shellable": shellable})
    summary.seconds = time.perf_counter() - t0
    log.info("wrote %s in %.1fs", out_dir, summary.seconds)
    return summary


def cmd_classify(args) -> int:
    if not 0 <= args.n <= 6:
        raise UsageError("classify supports 0 <= n <= 6")
    summary = classify_to_dir(
        args.n,
        Path(args.out),
        jobs=args.jobs,
        audit=args.audit,
        budget=args.budget,
        coefficients=args.coefficients,
        universe=args.universe,
        resume=args.resume,
    )
    for name, value in summary.rows():
        print(f"{name},{value}")
    return EXIT_UNDECIDED if summary.undecided else EXIT_OK


# ---------------------------------------------------------------------------
# family


def cmd_family(args) -> int:
    spec = FamilySpec(args.family, tuple(args.params))
    c, labels = make_family(spec)
    if not args.analyze:
        if args.json:
            print(json.dumps({"clutter": format_clutter(c, labels), "vertices": list(labels.labels)}))
        else:
            print(format_clutter(c, labels))
        return EXIT_OK
    rep = analyze(c, labels, coefficients=args.coefficients, audit=args.audit, budget=args.budget)
    if args.json:
        json.dump(rep, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        _print_report(rep, sys.stdout)
    return EXIT_UNDECIDED if rep["record"]["shellable"] is None else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="clutterkit", description="Chordal clutters, shellability and obstructions.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--coefficients", choices=("rational", "gf2"), default="rational")
        sp.add_argument("--audit", action="store_true", help="cross-check shellability with a shelling search")
        sp.add_argument("--budget", type=int, default=None, help="search node cap; exceeding it is 'undecided'")

    a = sub.add_parser("analyze", help="analyze one clutter")
    a.add_argument("clutter", help='circuits, e.g. "12, 13, 145" or "{1 10}, {2 3}"')
    a.add_argument("--vertices", type=int, default=None, help="ground set size (default: largest label)")
    a.add_argument("--json", action="store_true")
    a.add_argument("--certificates", action="store_true", help="emit shelling order and shedding tree")
    a.add_argument("--dual", action="store_true", help="emit the Alexander dual of the independence complex")
    a.add_argument("--complement", type=int, action="append", metavar="D", help="emit c_D complement (repeatable)")
    common(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", help="classify all clutters on n vertices")
    c.add_argument("n", type=int)
    c.add_argument("--out", required=True, help="output directory")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--resume", action="store_true", help="reuse cache.bin verdicts")
    c.add_argument("--universe", choices=("all", "covering"), default="all")
    common(c)
    c.set_defaults(func=cmd_classify)

    f = sub.add_parser("family", help="generate a named family member")
    f.add_argument("family", choices=FAMILIES)
    f.add_argument("params", type=int, nargs="+")
    f.add_argument("--analyze", action="store_true")
    f.add_argument("--json", action="store_true")
    common(f)
    f.set_defaults(func=cmd_family)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, ClutterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
