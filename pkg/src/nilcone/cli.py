"""Command-line front end: query any of the polynomial invariants, keep a
persistent cache of Kostka tables, and run the verification suites.

Exit codes: 0 on success, 1 on a usage error (malformed partition,
unsupported Weyl type, negative truncation, ...), 2 on a failed
verification.

Output formats: text (ascending exponents, explicit signs), json (the
schema below), latex.  JSON coefficients are decimal strings so arbitrary
precision survives any consumer:

    {"query": {...},
     "result": {"variables": ["x", "y"],
                "terms": [{"x": 0, "y": 0, "coeff": "1"}, ...]},
     "meta": {"version": ..., "convention": ..., "ms": ..., "cache_hit": ...}}
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
import warnings
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .kostka import (
    CONVENTION_TAG,
    KostkaTable,
    compute_kostka_table,
    fake_degree_qhook,
    kostka_foulkes,
)
from .laurent import BiLaurentPoly, LaurentPoly, TruncatedSeries
from .partitions import Partition
from .springer import (
    hp0_slice_series,
    hp0_walg_full_series,
    ih_orbit_closure,
    ih_s3_variety,
    kostka_g,
    pn_series,
    proudfoot_check,
    springer_fiber_series,
)
from .verify import SUITES, VerificationReport, run_suite
from .weyl import fake_degree_molien, pn_series_molien, sn_character_values, weyl_type

ENV_CACHE_DIR = "NILCONE_CACHE_DIR"


class UsageError(Exception):
    """Bad command line; reported with a one-line diagnostic and exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract is exit 1
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Parsing and rendering helpers.
# ---------------------------------------------------------------------------


def parse_partition(text: str) -> Partition:
    """Comma-separated, weakly decreasing, positive.  Out-of-order input is
    rejected rather than sorted: silent normalization hides user errors."""
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(
            f"malformed partition {text!r}: expected comma-separated integers"
        ) from None
    if any(p <= 0 for p in parts):
        raise UsageError(f"malformed partition {text!r}: parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise UsageError(
            f"malformed partition {text!r}: parts must be weakly decreasing"
        )
    return Partition(parts)


def _terms_of(obj) -> tuple[tuple[str, ...], list[tuple[tuple[int, ...], int]]]:
    if isinstance(obj, LaurentPoly):
        return (obj.var,), [((e,), c) for e, c in sorted(obj.terms.items())]
    if isinstance(obj, BiLaurentPoly):
        return (obj.xvar, obj.yvar), [(k, c) for k, c in sorted(obj.terms.items())]
    if isinstance(obj, TruncatedSeries):
        return (obj.var,), [
            ((e,), c) for e, c in enumerate(obj.coefficients) if c != 0
        ]
    raise TypeError(f"cannot render {type(obj).__name__}")


def encode_poly(obj) -> dict:
    variables, terms = _terms_of(obj)
    encoded = [
        {**{v: e for v, e in zip(variables, exps)}, "coeff": str(c)}
        for exps, c in terms
    ]
    out = {"variables": list(variables), "terms": encoded}
    if isinstance(obj, TruncatedSeries):
        out["truncation_order"] = obj.order
    return out


def latex_poly(obj) -> str:
    variables, terms = _terms_of(obj)
    if not terms:
        body = "0"
    else:
        pieces = []
        for exps, coeff in terms:
            mono = "".join(
                v if e == 1 else f"{v}^{{{e}}}"
                for v, e in zip(variables, exps)
                if e != 0
            )
            mag = abs(coeff)
            body_term = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not pieces:
                pieces.append(body_term if coeff > 0 else f"-{body_term}")
            else:
                pieces.append(f"+ {body_term}" if coeff > 0 else f"- {body_term}")
        body = " ".join(pieces)
    if isinstance(obj, TruncatedSeries):
        body += f" + O({obj.var}^{{{obj.order + 1}}})"
    return body


@dataclass
class QueryResult:
    """One successful query, in the exact shape it is serialized."""

    query: dict
    result: dict
    meta: dict

    def to_json(self) -> str:
        return json.dumps(
            {"query": self.query, "result": self.result, "meta": self.meta},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "QueryResult":
        payload = json.loads(text)
        return cls(
            query=payload["query"], result=payload["result"], meta=payload["meta"]
        )


# ---------------------------------------------------------------------------
# Kostka table cache.
# ---------------------------------------------------------------------------


def cache_load_store(
    n: int, cache_dir: str | os.PathLike | None = None
) -> tuple[KostkaTable, bool]:
    """Load the full Kostka table for n from the cache directory (argument,
    else the NILCONE_CACHE_DIR environment variable), computing and storing
    on a miss.  Files with a wrong version or convention, or corrupted ones,
    are recomputed and overwritten, never trusted.  An unwritable directory
    degrades to in-memory computation with a warning.  Writes are atomic
    (temp file plus rename)."""
    directory = cache_dir if cache_dir is not None else os.environ.get(ENV_CACHE_DIR)
    if directory is None:
        return compute_kostka_table(n), False
    path = Path(directory) / f"kostka-n{n}.json"
    if path.is_file():
        try:
            table = KostkaTable.from_payload(json.loads(path.read_text()))
            if table.n == n:
                return table, True
            warnings.warn(f"cache file {path} holds n={table.n}, not {n}; recomputing")
        except (ValueError, KeyError, TypeError, AttributeError, json.JSONDecodeError) as exc:
            warnings.warn(f"ignoring unusable cache file {path}: {exc}")
    table = compute_kostka_table(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as handle:
            handle.write(json.dumps(table.to_payload(), sort_keys=True))
        os.replace(tmp, path)
    except OSError as exc:
        warnings.warn(
            f"cache directory {directory} is not writable ({exc}); staying in memory"
        )
    return table, False


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def _emit(args, query: dict, payload, started: float, cache_hit: bool = False) -> int:
    meta = {
        "version": __version__,
        "convention": CONVENTION_TAG,
        "ms": int((time.perf_counter() - started) * 1000),
        "cache_hit": cache_hit,
    }
    if args.format == "json":
        if isinstance(payload, dict):
            result = payload
        else:
            result = encode_poly(payload)
        print(QueryResult(query=query, result=result, meta=meta).to_json())
    elif args.format == "latex":
        print(payload if isinstance(payload, str) else latex_poly(payload))
    else:
        print(payload if isinstance(payload, str) else str(payload))
    return 0


def _cmd_kostka(args) -> int:
    started = time.perf_counter()
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if lam.size != mu.size:
        raise UsageError(f"|lambda| = {lam.size} and |mu| = {mu.size} differ")
    directory = args.cache_dir or os.environ.get(ENV_CACHE_DIR)
    if directory is not None:
        table, hit = cache_load_store(lam.size, directory)
        poly = table.lookup(lam, mu)
    else:
        poly, hit = kostka_foulkes(lam, mu), False
    query = {"command": "kostka", "lambda": list(lam.parts), "mu": list(mu.parts)}
    return _emit(args, query, poly, started, cache_hit=hit)


def _cmd_fake_degree(args) -> int:
    started = time.perf_counter()
    lam = parse_partition(args.lam)
    n = lam.size
    top = n * (n - 1) // 2
    routes: dict[str, LaurentPoly] = {}
    wanted = (
        ["charge", "qhook", "molien"] if args.algorithm == "all" else [args.algorithm]
    )
    if "charge" in wanted:
        routes["charge"] = (
            kostka_g(lam).substitute_power(-1).shift(top).with_var("q")
        )
    if "qhook" in wanted:
        routes["qhook"] = fake_degree_qhook(lam)
    if "molien" in wanted:
        if n >= 2:
            routes["molien"] = fake_degree_molien(
                weyl_type("A", n - 1), sn_character_values(lam)
            )
        else:
            routes["molien"] = LaurentPoly.one("q")
    values = list(routes.values())
    if any(v != values[0] for v in values[1:]):
        print(
            f"error: fake-degree cross-check failed for {lam}: "
            + "; ".join(f"{k}: {v}" for k, v in routes.items()),
            file=sys.stderr,
        )
        return 2
    query = {
        "command": "fake-degree",
        "lambda": list(lam.parts),
        "algorithm": args.algorithm,
    }
    return _emit(args, query, values[0], started)


def _cmd_pn(args) -> int:
    started = time.perf_counter()
    if args.n is not None and args.family is not None:
        raise UsageError("give either --n (type A, per-partition) or --type/--rank")
    if args.n is not None:
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        poly = pn_series(args.n).poly
        query = {"command": "pn", "n": args.n}
    elif args.family is not None:
        family = args.family
        default_rank = {"G2": 2, "F4": 4, "E6": 6}.get(family)
        rank = args.rank if args.rank is not None else default_rank
        if rank is None:
            raise UsageError(f"--rank is required for type {family}")
        poly = pn_series_molien(weyl_type(family, rank), budget=args.budget)
        query = {"command": "pn", "type": family, "rank": rank}
    else:
        raise UsageError("give --n or --type")
    return _emit(args, query, poly, started)


def _cmd_hp0(args) -> int:
    started = time.perf_counter()
    phi = parse_partition(args.phi)
    return _emit(
        args,
        {"command": "hp0", "phi": list(phi.parts)},
        hp0_slice_series(phi),
        started,
    )


def _cmd_walg(args) -> int:
    started = time.perf_counter()
    phi = parse_partition(args.phi)
    if args.truncate < 0:
        raise UsageError("--truncate must be nonnegative")
    series = hp0_walg_full_series(phi, args.truncate)
    query = {"command": "walg", "phi": list(phi.parts), "truncate": args.truncate}
    return _emit(args, query, series, started)


def _cmd_ih(args) -> int:
    started = time.perf_counter()
    lam = parse_partition(args.lam)
    return _emit(
        args,
        {"command": "ih", "lambda": list(lam.parts)},
        ih_orbit_closure(lam),
        started,
    )


def _cmd_s3(args) -> int:
    started = time.perf_counter()
    nu = parse_partition(args.nu)
    phi = parse_partition(args.phi)
    poly = ih_s3_variety(nu, phi)
    query = {"command": "s3", "nu": list(nu.parts), "phi": list(phi.parts)}
    return _emit(args, query, poly, started)


def _cmd_springer_fiber(args) -> int:
    started = time.perf_counter()
    phi = parse_partition(args.phi)
    return _emit(
        args,
        {"command": "springer-fiber", "phi": list(phi.parts)},
        springer_fiber_series(phi).poly,
        started,
    )


def _cmd_proudfoot(args) -> int:
    started = time.perf_counter()
    lam = parse_partition(args.lam)
    report = proudfoot_check(lam)
    query = {"command": "proudfoot", "lambda": list(lam.parts)}
    verdict = "equal" if report.equal else "NOT EQUAL"
    if args.format == "json":
        result = {
            "equal": report.equal,
            "hp0_slice": encode_poly(report.hp0_series),
            "ih_dual_orbit": encode_poly(report.ih_dual_series),
        }
        return _emit(args, query, result, started)
    if args.format == "latex":
        text = (
            f"hp0(slice {lam}): {latex_poly(report.hp0_series)}\n"
            f"ih(closure {lam.conjugate()}): {latex_poly(report.ih_dual_series)}\n"
            f"verdict: {verdict}"
        )
    else:
        text = (
            f"hp0(slice {lam}): {report.hp0_series}\n"
            f"ih(closure {lam.conjugate()}): {report.ih_dual_series}\n"
            f"verdict: {verdict}"
        )
    return _emit(args, query, text, started)


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.max_n is not None and args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    report: VerificationReport = run_suite(args.suite, args.max_n)
    query = {"command": "verify", "suite": args.suite, "max_n": args.max_n}
    if args.format == "json":
        result = {
            "overall": "pass" if report.passed else "fail",
            "checks": [
                {
                    "name": c.name,
                    "params": c.params,
                    "passed": c.passed,
                    "counterexample": c.counterexample,
                }
                for c in report.checks
            ],
        }
        _emit(args, query, result, started)
    else:
        _emit(args, query, "\n".join(report.lines()), started)
    return 0 if report.passed else 2


# ---------------------------------------------------------------------------
# Parser assembly and entry point.
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="nilcone",
        description="Exact Kostka polynomials and bigraded nilpotent-cone series",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kostka", parents=[shared], help="Kostka-Foulkes polynomial")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--mu", required=True, metavar="PARTS")
    p.add_argument("--cache-dir", default=None, help=f"table cache (or ${ENV_CACHE_DIR})")
    p.set_defaults(handler=_cmd_kostka)

    p = sub.add_parser(
        "fake-degree", parents=[shared], help="graded coinvariant multiplicity"
    )
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument(
        "--algorithm", choices=("charge", "qhook", "molien", "all"), default="all"
    )
    p.set_defaults(handler=_cmd_fake_degree)

    p = sub.add_parser("pn", parents=[shared], help="bigraded nilpotent-cone series")
    p.add_argument("--n", type=int, default=None, help="type A, per-partition sum")
    p.add_argument(
        "--type",
        dest="family",
        choices=("A", "B", "C", "D", "G2", "F4", "E6"),
        default=None,
        help="class-average route",
    )
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="enumeration budget override")
    p.set_defaults(handler=_cmd_pn)

    p = sub.add_parser("hp0", parents=[shared], help="slice Poisson-homology series")
    p.add_argument("--phi", required=True, metavar="PARTS")
    p.set_defaults(handler=_cmd_hp0)

    p = sub.add_parser("walg", parents=[shared], help="full W-algebra series, truncated")
    p.add_argument("--phi", required=True, metavar="PARTS")
    p.add_argument("--truncate", type=int, required=True)
    p.set_defaults(handler=_cmd_walg)

    p = sub.add_parser("ih", parents=[shared], help="orbit-closure IH series")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.set_defaults(handler=_cmd_ih)

    p = sub.add_parser("s3", parents=[shared], help="orbit-closure slice IH series")
    p.add_argument("--nu", required=True, metavar="PARTS")
    p.add_argument("--phi", required=True, metavar="PARTS")
    p.set_defaults(handler=_cmd_s3)

    p = sub.add_parser(
        "springer-fiber", parents=[shared], help="bigraded Springer-fiber series"
    )
    p.add_argument("--phi", required=True, metavar="PARTS")
    p.set_defaults(handler=_cmd_springer_fiber)

    p = sub.add_parser("proudfoot", parents=[shared], help="slice/orbit duality check")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.set_defaults(handler=_cmd_proudfoot)

    p = sub.add_parser("verify", parents=[shared], help="identity verification suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
