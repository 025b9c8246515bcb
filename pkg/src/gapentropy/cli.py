"""Command-line front end.

Exit codes: 0 success, 1 domain/computation error, 2 usage error (argparse),
3 verification finished with an unexplained DIVERGENT claim.  Numeric output
carries >= 10 significant digits in csv/json and 6 in table form, and every
output header states the natural-log convention.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bounds_mod
from . import randgaps, report, sieve, thresholds
from .entropy import empirical_gap_entropy, h_real, h_uniform_gaps
from .errors import BracketError, ConvergenceError, DomainError
from .version import __version__

LOG_NOTE = "all logarithms natural (nats)"


@dataclass
class RunConfig:
    command: str
    limit: int = 0
    x_max: int = 0
    seed: int = 1
    tol: float = 1e-3
    format: str = "table"
    output_path: str | None = None
    exclude_gap_one: bool = False
    delta: float = 1e-6
    trials: int = 100
    segment_size: int = sieve.DEFAULT_SEGMENT_SIZE
    eval_id: str | None = None
    at: float | None = None
    at2: float | None = None
    out_dir: str = "."
    points: int = 25


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapentropy",
        description=(
            "Entropy measures of prime-gap distributions: sieve statistics, "
            "bound catalogue, threshold verification, Monte Carlo comparison. "
            f"({LOG_NOTE})"
        ),
    )
    parser.add_argument("--version", action="version", version=f"gapentropy {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def _common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("csv", "json", "table"), default="table",
            help="output format (default: table)",
        )
        p.add_argument("--output", dest="output_path", default=None, help="write to file")

    p = sub.add_parser("primes", help="list primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--segment-size", type=int, default=sieve.DEFAULT_SEGMENT_SIZE)
    _common(p)

    p = sub.add_parser("gaps", help="gap histogram and maximal gap up to a limit")
    p.add_argument("--limit", type=int, required=True)
    _common(p)

    p = sub.add_parser("entropy", help="empirical gap entropy vs the uniform baselines")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--exclude-gap-one", action="store_true")
    _common(p)

    p = sub.add_parser("bounds", help="evaluate a bound formula, or dump the registry")
    p.add_argument("--eval", dest="eval_id", choices=bounds_mod.evaluable_ids())
    p.add_argument("--at", type=float, help="first input")
    p.add_argument("--at2", type=float, help="second input (two-argument bounds)")
    _common(p)

    p = sub.add_parser("verify", help="re-derive and grade every threshold claim")
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--delta", type=float, default=1e-6, help="quadrature lower cutoff")
    _common(p)

    p = sub.add_parser("compare", help="three-way entropy comparison at one x_max")
    p.add_argument("--x-max", dest="x_max", type=int, required=True)
    p.add_argument("--exclude-gap-one", action="store_true")
    _common(p)

    p = sub.add_parser("montecarlo", help="prime gaps vs seeded uniform random gaps")
    p.add_argument("--x-max", dest="x_max", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    _common(p)

    p = sub.add_parser("report", help="write plot-series CSVs and rendered figures")
    p.add_argument("--out-dir", dest="out_dir", default="gapentropy-report")
    p.add_argument("--x-max", dest="x_max", type=int, default=1_000_000)
    p.add_argument("--points", type=int, default=25)
    _common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in vars(cfg):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


def _emit(text: str, output_path: str | None) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _num(value: float, fmt: str) -> str:
    return f"{value:.12g}" if fmt in ("csv", "json") else f"{value:.6g}"


def _histogram_with_cache(limit: int) -> sieve.GapHistogram:
    cache_dir = os.environ.get("GAPENTROPY_CACHE_DIR")
    if not cache_dir:
        return sieve.gap_histogram(limit)
    os.makedirs(cache_dir, exist_ok=True)
    path = sieve.cache_path(limit, cache_dir)
    if os.path.exists(path):
        return sieve.load_histogram(path)
    hist = sieve.gap_histogram(limit)
    sieve.save_histogram(hist, path)
    return hist


# --- command implementations -------------------------------------------------


def _cmd_primes(cfg: RunConfig) -> str:
    primes = sieve.primes_up_to(sieve.PrimeRange(cfg.limit, cfg.segment_size))
    if cfg.format == "json":
        return json.dumps(
            {
                "command": "primes",
                "log_convention": "natural (nats)",
                "limit": cfg.limit,
                "count": int(primes.size),
                "primes": [int(p) for p in primes],
            },
            indent=2,
        )
    if cfg.format == "csv":
        lines = [f"# gapentropy primes limit={cfg.limit} count={primes.size} ({LOG_NOTE})"]
        lines.append("prime")
        lines.extend(str(int(p)) for p in primes)
        return "\n".join(lines)
    lines = [f"primes up to {cfg.limit}: {primes.size} found ({LOG_NOTE})"]
    lines.extend(str(int(p)) for p in primes)
    return "\n".join(lines)


def _cmd_gaps(cfg: RunConfig) -> str:
    hist = _histogram_with_cache(cfg.limit)
    gap, lower = sieve.max_gap(sieve.PrimeRange(cfg.limit))
    if cfg.format == "json":
        return json.dumps(
            {
                "command": "gaps",
                "log_convention": "natural (nats)",
                "limit": hist.limit,
                "total_gaps": hist.total_gaps,
                "max_gap": gap,
                "max_gap_lower_prime": lower,
                "counts": {str(k): hist.counts[k] for k in sorted(hist.counts)},
            },
            indent=2,
        )
    header = (
        f"# gapentropy gaps limit={hist.limit} total_gaps={hist.total_gaps} "
        f"max_gap={gap}@{lower} ({LOG_NOTE})"
    )
    if cfg.format == "csv":
        lines = [header, "gap,count"]
        lines.extend(f"{k},{hist.counts[k]}" for k in sorted(hist.counts))
        return "\n".join(lines)
    lines = [header.lstrip("# "), f"{'gap':>6} {'count':>10}"]
    lines.extend(f"{k:>6} {hist.counts[k]:>10}" for k in sorted(hist.counts))
    return "\n".join(lines)


def _cmd_entropy(cfg: RunConfig) -> str:
    hist = _histogram_with_cache(cfg.limit)
    h_emp = empirical_gap_entropy(hist, exclude_gap_one=cfg.exclude_gap_one)
    G = max(hist.counts)
    try:
        h_uni = h_uniform_gaps(float(G)).value
    except DomainError:
        h_uni = None  # max gap <= 2: degenerate uniform support
    h_re = h_real(float(cfg.limit)).value
    rows = [
        ("empirical_gap_entropy", h_emp.value),
        ("uniform_gap_entropy_ln_G_minus_2", h_uni),
        ("uniform_reals_entropy", h_re),
    ]
    if cfg.format == "json":
        return json.dumps(
            {
                "command": "entropy",
                "log_convention": "natural (nats)",
                "limit": cfg.limit,
                "exclude_gap_one": cfg.exclude_gap_one,
                "max_gap": G,
                "empirical_gap_entropy": h_emp.value,
                "uniform_gap_entropy_ln_G_minus_2": h_uni,
                "uniform_reals_entropy": h_re,
            },
            indent=2,
        )
    header = (
        f"# gapentropy entropy limit={cfg.limit} exclude_gap_one={cfg.exclude_gap_one} "
        f"max_gap={G} ({LOG_NOTE})"
    )
    if cfg.format == "csv":
        lines = [header, "measure,value"]
        for name, value in rows:
            lines.append(f"{name},{'' if value is None else _num(value, 'csv')}")
        return "\n".join(lines)
    lines = [header.lstrip("# ")]
    for name, value in rows:
        lines.append(f"{name:<36} {'n/a' if value is None else _num(value, 'table')}")
    return "\n".join(lines)


def _cmd_bounds(cfg: RunConfig) -> str:
    if cfg.eval_id is None:
        registry = bounds_mod.export_registry()
        if cfg.format == "json":
            return json.dumps(
                {"command": "bounds", "log_convention": "natural (nats)", "registry": registry},
                indent=2,
            )
        if cfg.format == "csv":
            lines = [f"# gapentropy bounds registry ({LOG_NOTE})"]
            lines.append("id,arity,domain_lower,formula,validity_notes")
            for row in registry:
                lines.append(
                    f"{row['id']},{row['arity']},{row['domain_lower']:.12g},"
                    f"\"{row['formula']}\",\"{row['validity_notes']}\""
                )
            return "\n".join(lines)
        lines = [f"bound registry ({LOG_NOTE})"]
        for row in registry:
            lines.append(f"{row['id']:<20} {row['formula']}")
        return "\n".join(lines)

    inputs = [v for v in (cfg.at, cfg.at2) if v is not None]
    ev = bounds_mod.evaluate(cfg.eval_id, *inputs)
    exact = str(ev.value) if isinstance(ev.value, Fraction) else None
    value_float = None if ev.value is None else float(ev.value)
    if cfg.format == "json":
        return json.dumps(
            {
                "command": "bounds",
                "log_convention": "natural (nats)",
                "id": ev.id,
                "inputs": list(ev.inputs),
                "value": value_float,
                "value_exact": exact,
                "in_domain": ev.in_domain,
                "note": ev.note,
            },
            indent=2,
        )
    shown = exact if exact is not None else (
        "" if value_float is None else _num(value_float, cfg.format)
    )
    if cfg.format == "csv":
        lines = [f"# gapentropy bounds eval ({LOG_NOTE})"]
        lines.append("id,inputs,value,in_domain,note")
        lines.append(
            f"{ev.id},\"{' '.join(_num(v, 'csv') for v in ev.inputs)}\","
            f"{shown},{ev.in_domain},\"{ev.note}\""
        )
        return "\n".join(lines)
    at = ", ".join(_num(v, "table") for v in ev.inputs)
    state = "" if ev.in_domain else "  [out of domain]"
    note = f"  ({ev.note})" if ev.note else ""
    return f"{ev.id}({at}) = {shown if shown else 'n/a'}{state}{note}  ({LOG_NOTE})"


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    rep = thresholds.verify_all(tol=cfg.tol, envelope_delta=cfg.delta)
    exit_code = 3 if rep.unexplained_divergent() else 0
    if cfg.format == "json":
        return rep.to_json(), exit_code
    if cfg.format == "csv":
        lines = [
            f"# gapentropy verify tol={cfg.tol:.12g} delta={cfg.delta:.12g} "
            f"version={rep.tool_version} ({LOG_NOTE})"
        ]
        lines.append("claim_id,kind,computed,published,relative_error,status,annotated_inconsistency")
        for r in rep.results:
            computed = _num(r.computed, "csv") if isinstance(r.computed, float) else (r.computed or "")
            published = _num(r.published, "csv") if isinstance(r.published, float) else r.published
            rel = "" if r.relative_error is None else f"{r.relative_error:.12g}"
            lines.append(
                f"{r.claim_id},{r.kind},\"{computed}\",\"{published}\",{rel},"
                f"{r.status.value},{r.annotated_inconsistency}"
            )
        return "\n".join(lines), exit_code
    return rep.to_table(), exit_code


def _cmd_compare(cfg: RunConfig) -> str:
    comp = thresholds.compare_entropies(cfg.x_max, exclude_gap_one=cfg.exclude_gap_one)
    if cfg.format == "json":
        return json.dumps(
            {
                "command": "compare",
                "log_convention": "natural (nats)",
                "x_max": comp.x_max,
                "h_prime_gaps": comp.h_prime_gaps.value,
                "h_uniform_gaps": comp.h_uniform_gaps.value,
                "h_reals": comp.h_reals.value,
                "gaps_below_uniform": comp.gaps_below_uniform,
                "uniform_below_reals": comp.uniform_below_reals,
            },
            indent=2,
        )
    header = f"# gapentropy compare x_max={cfg.x_max} ({LOG_NOTE})"
    rows = [
        ("h_prime_gaps", comp.h_prime_gaps.value),
        ("h_uniform_gaps", comp.h_uniform_gaps.value),
        ("h_reals", comp.h_reals.value),
    ]
    if cfg.format == "csv":
        lines = [header, "measure,value"]
        lines.extend(f"{name},{_num(v, 'csv')}" for name, v in rows)
        lines.append(f"gaps_below_uniform,{comp.gaps_below_uniform}")
        lines.append(f"uniform_below_reals,{comp.uniform_below_reals}")
        return "\n".join(lines)
    lines = [header.lstrip("# ")]
    lines.extend(f"{name:<20} {_num(v, 'table')}" for name, v in rows)
    lines.append(f"gaps_below_uniform   {comp.gaps_below_uniform}")
    lines.append(f"uniform_below_reals  {comp.uniform_below_reals}")
    return "\n".join(lines)


def _cmd_montecarlo(cfg: RunConfig) -> str:
    summary = randgaps.monte_carlo_theorem_check(cfg.x_max, cfg.trials, cfg.seed)
    if cfg.format == "json":
        return summary.to_json()
    d = summary.to_dict()
    if cfg.format == "csv":
        lines = [
            f"# gapentropy montecarlo x_max={cfg.x_max} trials={cfg.trials} "
            f"seed={cfg.seed} ({LOG_NOTE})"
        ]
        lines.append("field,value")
        for key, value in d.items():
            if key == "log_convention":
                continue
            lines.append(f"{key},{_num(value, 'csv') if isinstance(value, float) else value}")
        return "\n".join(lines)
    lines = [f"monte carlo x_max={cfg.x_max} trials={cfg.trials} seed={cfg.seed} ({LOG_NOTE})"]
    for key, value in d.items():
        if key == "log_convention":
            continue
        lines.append(f"{key:<28} {_num(value, 'table') if isinstance(value, float) else value}")
    return "\n".join(lines)


def _cmd_report(cfg: RunConfig) -> str:
    written = report.render_report(cfg.out_dir, x_max=cfg.x_max, points=cfg.points)
    if cfg.format == "json":
        return json.dumps(
            {"command": "report", "log_convention": "natural (nats)", "written": written},
            indent=2,
        )
    lines = [f"report written to {cfg.out_dir} ({LOG_NOTE})"]
    lines.extend(written)
    return "\n".join(lines)


def run(cfg: RunConfig) -> int:
    """Dispatch one configured command; returns the process exit code."""
    try:
        if cfg.command == "verify":
            text, code = _cmd_verify(cfg)
            _emit(text, cfg.output_path)
            return code
        handlers = {
            "primes": _cmd_primes,
            "gaps": _cmd_gaps,
            "entropy": _cmd_entropy,
            "bounds": _cmd_bounds,
            "compare": _cmd_compare,
            "montecarlo": _cmd_montecarlo,
            "report": _cmd_report,
        }
        text = handlers[cfg.command](cfg)
        _emit(text, cfg.output_path)
        return 0
    except (DomainError, BracketError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bounds" and args.eval_id is not None:
        needed = 0 if args.eval_id == "zhang_constant" else (
            2 if args.eval_id == "sinha_firoozbakht" else 1
        )
        given = sum(v is not None for v in (args.at, args.at2))
        if given < needed:
            parser.error(f"--eval {args.eval_id} requires {needed} input(s) via --at/--at2")
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
