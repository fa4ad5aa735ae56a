"""Command-line front end.

    bspoisson --type A2 --word 1,2,1 --gamma 100
    bspoisson --type G2 --word 1,2,1,2,1,2 --gamma full --checks jacobi,cgl
    bspoisson --type A1 --word 1,1,1,1,1 --gamma all --format json

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bracket import BracketTable, bracket_table, sigma_closed, sigma_recursive
from .poly import _fmt, reduce_mod
from .rootsys import RootSystemError, build_root_system, check_word
from .verify import CHECKS, all_gammas, check_reference, reference_for, run_checks, structure_for, worker_count

ENGINES = {"closed": sigma_closed, "recursive": sigma_recursive}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class JobSpec:
    type_label: str
    word: tuple[int, ...]
    gammas: tuple[tuple[bool, ...], ...]
    many: bool
    fmt: str = "text"
    checks: tuple[str, ...] = ()
    mod: int | None = None
    engine: str = "closed"
    reference: bool = False


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def parse_job(args: argparse.Namespace) -> JobSpec:
    try:
        rs = build_root_system(args.type)
        word = check_word(rs, [int(x) for x in args.word.split(",") if x.strip()])
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if not word:
        raise UsageError("empty word")
    g = args.gamma.strip().lower()
    many = g == "all"
    if g == "full":
        gammas = ((True,) * len(word),)
    elif g == "trivial":
        gammas = ((False,) * len(word),)
    elif many:
        gammas = tuple(all_gammas(len(word)))
    else:
        if set(g) - {"0", "1"} or len(g) != len(word):
            raise UsageError(f"gamma {args.gamma!r} must be {len(word)} bits or full/trivial/all")
        gammas = (tuple(c == "1" for c in g),)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else ()
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(unknown)}")
    if args.mod is not None and not _is_prime(args.mod):
        raise UsageError(f"--mod needs a prime, got {args.mod}")
    return JobSpec(rs.name, word, gammas, many, args.format, checks, args.mod, args.engine, args.reference)


def _reports(st, t: BracketTable, job: JobSpec) -> list:
    reports = run_checks(st, t, job.checks)
    if job.reference:
        ref = reference_for(t)
        if ref is not None:
            reports.append(check_reference(t, ref))
    return reports


def chart_payload(job: JobSpec, gamma: tuple[bool, ...]) -> dict:
    st = structure_for(job.type_label)
    t = bracket_table(st, job.word, gamma, ENGINES[job.engine])
    out = {
        "type": job.type_label,
        "word": list(job.word),
        "gamma": t.gamma_bits(),
        "normalization": "short_root_norm_2",
        "weights": [list(w) for w in t.weights],
        "h": [[_fmt(Fraction(x)) for x in h] for h in t.h],
        "brackets": [
            {"i": i, "k": k, "c_quadratic": t.c[(i, k)], "terms": f.to_json()} for (i, k), f in t
        ],
    }
    if job.mod is not None:
        out["mod"] = job.mod
        out["brackets_mod"] = [
            {"i": i, "k": k, "terms": reduce_mod(f, job.mod).to_json()} for (i, k), f in t
        ]
    out["checks"] = {
        r.check: {k: v for k, v in r.to_json().items() if k != "case"} for r in _reports(st, t, job)
    }
    out["_text"] = _chart_text(t, job, out["checks"])
    return out


def _chart_text(t: BracketTable, job: JobSpec, checks: dict) -> str:
    word = ",".join(map(str, t.word))
    lines = [f"# {t.rs.name} word={word} gamma={t.gamma_bits()}"]
    for (i, k), f in t:
        lines.append(f"{{z_{i},z_{k}}} = {f.to_text()}")
    if job.mod is not None:
        lines.append(f"# mod {job.mod}")
        for (i, k), f in t:
            lines.append(f"{{z_{i},z_{k}}} = {reduce_mod(f, job.mod).to_text()}")
    for name, r in checks.items():
        line = f"check {name}: {r['status']}"
        if "counterexample" in r:
            line += " " + json.dumps(r["counterexample"], sort_keys=True)
        lines.append(line)
        for m in r.get("detail", {}).get("printed_divergences", []):
            lines.append(
                f"note: printed {{z_{m['pair'][0]},z_{m['pair'][1]}}} = {m['reference']}"
                f" differs from computed {m['computed']}"
                f" (printed homogeneous: {str(m['reference_homogeneous']).lower()})"
            )
    return "\n".join(lines)


def _payload_job(args) -> dict:
    return chart_payload(*args)


def run(job: JobSpec, workers: int | None = None) -> tuple[int, str]:
    """Compute every chart of ``job``; return (exit code, rendered output)."""
    workers = workers or worker_count()
    jobs = [(job, g) for g in job.gammas]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            payloads = list(pool.map(_payload_job, jobs))
    else:
        payloads = [_payload_job(j) for j in jobs]
    failed = any(r["status"] == "fail" for p in payloads for r in p["checks"].values())
    texts = [p.pop("_text") for p in payloads]
    if job.fmt == "json":
        body = payloads if job.many else payloads[0]
        rendered = json.dumps(body, indent=2)
    else:
        rendered = "\n\n".join(texts)
    return (1 if failed else 0), rendered + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bspoisson",
        description="Poisson bracket tables on the affine charts of a Bott-Samelson variety.",
    )
    p.add_argument("--type", required=True, help="simple type, e.g. A2, B3, G2")
    p.add_argument("--word", required=True, help="comma-separated simple indices, e.g. 1,2,1")
    p.add_argument("--gamma", default="full", help="bit string ('1' keeps s_i), or full, trivial, all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--checks", default="", help=f"comma list from: {', '.join(CHECKS)}")
    p.add_argument("--mod", type=int, help="also print the brackets reduced mod this prime")
    p.add_argument("--engine", choices=sorted(ENGINES), default="closed")
    p.add_argument("--reference", action="store_true", help="compare with a bundled reference table")
    p.add_argument("--golden", type=Path, help="compare the output byte-for-byte with this file")
    p.add_argument("--workers", type=int, help="processes for --gamma all (default: BSPOISSON_WORKERS or 1)")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        job = parse_job(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"bspoisson: error: {exc}", file=sys.stderr)
        return 2
    code, out = run(job, args.workers)
    sys.stdout.write(out)
    if args.golden is not None:
        try:
            want = args.golden.read_text()
        except OSError as exc:
            print(f"bspoisson: error: {exc}", file=sys.stderr)
            return 2
        if want != out:
            print(f"golden mismatch: {args.golden}", file=sys.stderr)
            return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
