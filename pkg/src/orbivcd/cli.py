"""Command-line front end.

Reports go to stdout; the summary line and log messages go to stderr.
Exit codes: 0 all checks pass, 1 a fail certificate or oracle mismatch,
2 usage or configuration error, 3 cache corruption.
"""

import argparse
import io
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import pyarrow as pa
import pyarrow.csv as pacsv

from .cache import CacheCorruptionError, SignatureCache, default_cache_dir
from .db.database import get_db_connection, record_run
from .enumeration.covers import enumerate_covers
from .enumeration.dag import SubgroupDag, build_subgroup_dag
from .enumeration.signatures import enumerate_signatures
from .models.options import EnumOptions
from .models.signature import Signature
from .models.vcd import harer_vcd
from .oracle import crosscheck_dag, crosscheck_fiber
from .verification import checks
from .verification.report import FORMATS, certificate_summary, format_certificates, recheck

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CACHE = 3

CHECKS = ("gendec", "prop4", "claim-uno", "prop5", "eq5", "dichot")
EDGE_CHECKS = {
    "gendec": checks.check_gendec,
    "prop4": checks.check_prop4,
    "dichot": checks.check_dichotomy,
}
NODE_CHECKS = {
    "claim-uno": checks.verify_claim_uno,
    "prop5": checks.verify_prop5,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    format: str = "text"
    cache_dir: Path | None = None
    options: EnumOptions = EnumOptions()
    oracle_crosscheck: bool = False
    workers: int = 1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cache_dir = getattr(args, "cache_dir", None)
        return cls(
            command=args.command,
            format=getattr(args, "format", "text"),
            cache_dir=Path(cache_dir) if cache_dir else default_cache_dir(),
            options=EnumOptions(
                periods_divide_order=not getattr(args, "no_divisor_constraint", False),
                max_order=getattr(args, "max_order", None),
                max_exception_r=getattr(args, "max_exception_r", 16),
            ),
            oracle_crosscheck=getattr(args, "oracle", False),
            workers=getattr(args, "workers", 1),
        )


def _write_rows(rows: list[dict[str, any]], fmt: str, text_key: str):
    if fmt == "text":
        sys.stdout.write("".join(f"{r[text_key]}\n" for r in rows))
    elif fmt == "json":
        sys.stdout.write(json.dumps(rows, ensure_ascii=False) + "\n")
    else:
        sink = io.BytesIO()
        pacsv.write_csv(pa.Table.from_pylist(rows), sink)
        sys.stdout.write(sink.getvalue().decode("utf-8"))


def cmd_vcd(config: RunConfig, args: argparse.Namespace) -> int:
    value = harer_vcd(args.genus, args.punctures)
    if config.format == "text":
        print(value)
    else:
        _write_rows([{"g": args.genus, "n": args.punctures, "vcd": value}], config.format, "vcd")
    return EXIT_OK


def cmd_signatures(config: RunConfig, args: argparse.Namespace) -> int:
    g, order = args.genus, args.order
    if config.cache_dir:
        signatures = SignatureCache(config.cache_dir).signatures(g, order, config.options)
    else:
        signatures = enumerate_signatures(g, order, config.options)
    rows = [{"signature": str(s), "genus": s.genus, "k": s.k} for s in signatures]
    if config.format == "json":
        sys.stdout.write(json.dumps([r["signature"] for r in rows]) + "\n")
    elif rows or config.format == "text":
        _write_rows(rows, config.format, "signature")

    if config.oracle_crosscheck:
        problem = crosscheck_fiber(g, order, signatures, config.options.periods_divide_order)
        if problem:
            logger.error("oracle: %s", problem)
            return EXIT_FAIL
    return EXIT_OK


def cmd_covers(config: RunConfig, args: argparse.Namespace) -> int:
    base = Signature.from_string(args.base)
    covers = enumerate_covers(base, args.order)
    if config.format == "json":
        sys.stdout.write("".join(json.dumps(c.as_dict(), ensure_ascii=False) + "\n" for c in covers))
    else:
        _write_rows([{"cover": str(c), "total": str(c.total)} for c in covers], config.format, "cover")
    return EXIT_OK


def _exception_lines(pairs, fmt: str) -> str:
    if fmt == "json":
        return "".join(
            json.dumps({"record": "exception", **p.as_dict()}, ensure_ascii=False) + "\n" for p in pairs
        )
    if fmt == "text":
        return "".join(
            f"# exception-{p.family} {p.upper} over {p.lower}: {p.witness}\n" for p in pairs
        )
    return ""


def cmd_check(config: RunConfig, args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    claim = args.claim
    started = time.perf_counter()
    opts = config.options
    dags: dict[int, SubgroupDag] = {}
    exceptions = []

    if claim == "eq5":
        g_max = args.genus_max if args.genus_max is not None else 10
        certs = checks.check_eq5_consistency(range(0, g_max + 1), range(0, args.k_max + 1))
        params = {"genus_max": g_max, "k_max": args.k_max}
    elif claim in NODE_CHECKS:
        if args.genus is None:
            parser.error(f"check {claim} requires -g/--genus")
        if args.genus < 3:
            parser.error(f"check {claim}: the inequality vcd(WT) + λ(T) ≤ vcd(Γ_g) assumes g ≥ 3")
        dags[args.genus] = build_subgroup_dag(args.genus, opts, workers=config.workers)
        certs = NODE_CHECKS[claim](args.genus, opts, dag=dags[args.genus])
        params = {"genus": args.genus}
    else:
        g_max = args.genus_max if args.genus_max is not None else args.genus
        if g_max is None:
            parser.error(f"check {claim} requires --genus-max or -g/--genus")
        if g_max < 2:
            parser.error(f"check {claim}: ambient genus must be >= 2, got {g_max}")
        for g in range(2, g_max + 1):
            dags[g] = build_subgroup_dag(g, opts, workers=config.workers)
        certs = EDGE_CHECKS[claim](g_max, opts, dags=dags)
        if claim == "prop4":
            exceptions = checks.find_vcd_exceptions(g_max, opts, dags=dags)
        params = {"genus_max": g_max}

    sys.stdout.write(format_certificates(certs, config.format))
    sys.stdout.write(_exception_lines(exceptions, config.format))

    mismatches = []
    if config.oracle_crosscheck:
        for dag in dags.values():
            mismatches.extend(crosscheck_dag(dag))
        for message in mismatches:
            logger.error("oracle: %s", message)

    if args.db_url:
        run_id = record_run(get_db_connection(args.db_url), claim, params, opts, certs)
        logger.info("stored run %s", run_id)

    verdicts: dict[str, int] = {}
    for _, verdict, n in certificate_summary(certs):
        verdicts[verdict] = verdicts.get(verdict, 0) + n
    fails = verdicts.get("fail", 0)
    n_exceptions = verdicts.get("exception", 0)
    summary = f"{claim}: {len(certs)} certificates, {fails} fails, {n_exceptions} exceptions"
    if dags:
        nodes = sum(len(d) for d in dags.values())
        edges = sum(d.graph.number_of_edges() for d in dags.values())
        bounds = ",".join(f"g={g}:{d.options.max_order}" for g, d in sorted(dags.items()))
        summary += f"; {nodes} nodes, {edges} edges, max_order {bounds}"
    if config.oracle_crosscheck:
        summary += f"; {len(mismatches)} oracle mismatches"
    print(f"{summary}; {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_FAIL if fails or mismatches else EXIT_OK


def cmd_cache(config: RunConfig, args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if config.cache_dir is None:
        parser.error("cache commands need --cache-dir or ORBIVCD_CACHE_DIR")
    cache = SignatureCache(config.cache_dir)
    if args.action == "info":
        info = cache.info()
        print(f"{info['records']} records ({info['bytes']} bytes) in {info['path']}")
    elif args.action == "clear":
        print(f"cleared {cache.clear()} records")
    else:
        checked, invalid = cache.verify(sample=args.sample, seed=args.seed)
        print(f"{checked - len(invalid)}/{checked} records valid")
        if invalid:
            for record in invalid:
                print(f"stale record {record}", file=sys.stderr)
            return EXIT_CACHE
    return EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--no-divisor-constraint", action="store_true", help="allow periods not dividing the order")
    common.add_argument("--max-order", type=int, default=None, help="subgroup order bound (default 84(g-1))")
    common.add_argument("--max-exception-r", type=int, default=16)
    common.add_argument("--cache-dir", default=None)
    common.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")
    common.add_argument("--workers", type=int, default=1)
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbivcd", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    vcd = sub.add_parser("vcd", parents=[common], help="vcd of the mapping class group Γ_{g,n}")
    vcd.add_argument("-g", "--genus", type=int, required=True)
    vcd.add_argument("-n", "--punctures", type=int, default=0)

    sigs = sub.add_parser("signatures", parents=[common], help="admissible quotient signatures")
    sigs.add_argument("-g", "--genus", type=int, required=True)
    sigs.add_argument("-d", "--order", type=int, required=True)

    covers = sub.add_parser("covers", parents=[common], help="covers of a base signature")
    covers.add_argument("--base", required=True, help="signature 'g;p1,p2,...'")
    covers.add_argument("-d", "--order", type=int, required=True, help="cover degree")

    check = sub.add_parser("check", parents=[common], help="run a verification and emit certificates")
    check.add_argument("claim", choices=CHECKS)
    check.add_argument("-g", "--genus", type=int, default=None)
    check.add_argument("--genus-max", type=int, default=None)
    check.add_argument("--k-max", type=int, default=20)
    check.add_argument("--db-url", default=None, help="SQLAlchemy URL to store the run in")

    cache = sub.add_parser("cache", parents=[common], help="inspect the signature cache")
    cache.add_argument("action", choices=("info", "clear", "verify"))
    cache.add_argument("--sample", type=int, default=None)
    cache.add_argument("--seed", type=int, default=0)

    rc = sub.add_parser("recheck", help="recompute verdicts of certificate records")
    rc.add_argument("files", nargs="*")
    return parser


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser):
    if getattr(args, "workers", 1) < 1:
        parser.error(f"--workers must be >= 1, got {args.workers}")
    if args.command == "vcd" and (args.genus < 0 or args.punctures < 0):
        parser.error("genus and punctures must be non-negative")
    if args.command == "signatures" and (args.genus < 2 or args.order < 1):
        parser.error(f"signatures need genus >= 2 and order >= 1, got g={args.genus} d={args.order}")
    if args.command == "covers" and args.order < 2:
        parser.error(f"cover degree must be >= 2, got {args.order}")


def _recheck_files(files: list[str]) -> int:
    lines = []
    if not files:
        lines = sys.stdin.read().splitlines()
    for name in files:
        lines.extend(Path(name).read_text(encoding="utf-8").splitlines())
    checked, disagreements = recheck(lines)
    for message in disagreements:
        print(message, file=sys.stderr)
    print(f"{checked} certificates rechecked, {len(disagreements)} disagreements", file=sys.stderr)
    return EXIT_FAIL if disagreements else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    _validate(args, parser)
    if args.command == "recheck":
        return _recheck_files(args.files)

    try:
        config = RunConfig.from_args(args)
        if args.command == "vcd":
            return cmd_vcd(config, args)
        if args.command == "signatures":
            return cmd_signatures(config, args)
        if args.command == "covers":
            return cmd_covers(config, args)
        if args.command == "check":
            return cmd_check(config, args, parser)
        return cmd_cache(config, args, parser)
    except CacheCorruptionError as exc:
        print(f"cache corrupt: {exc}", file=sys.stderr)
        return EXIT_CACHE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def recheck_main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="orbivcd-recheck", description="Recompute certificate verdicts")
    parser.add_argument("files", nargs="*", help="certificate files (default: stdin)")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, force=True)
    return _recheck_files(args.files)
