"""Command-line front end: ``zetaspan {table,verify,fidelity}``.

Exit codes: 0 pass, 1 normative divergence (verify only), 2 usage or config error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import InvalidFieldError, discriminant, kronecker, require_fundamental
from .field import QuadField, ideal_count
from .incidence import convolve_reduced, zeta_reduced
from .theorems import SUITES, FidelityRecord, Variant, fidelity_report, kronecker_fn, run_suite

FORMATS = ("json", "csv", "md")
DEFAULT_BOUND = 200


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    D: int
    N: int = DEFAULT_BOUND
    variant: Variant = Variant.NORMATIVE_PARITY
    fmt: str = "json"
    out: str | None = None
    jobs: int = 1
    header: bool = True

    def __post_init__(self):
        if self.N < 1:
            raise ConfigError("--bound must be >= 1")
        if self.fmt not in FORMATS:
            raise ConfigError(f"--format must be one of {FORMATS}")
        if self.D == 1:
            raise ConfigError("D = 1 is not a quadratic field")
        try:
            require_fundamental(self.D)
        except InvalidFieldError as e:
            raise ConfigError(str(e)) from None

    def field(self) -> QuadField:
        return QuadField.from_disc(self.D, self.N)


def _resolve_jobs(arg: int | None) -> int:
    if arg is not None:
        jobs = arg
    else:
        raw = os.environ.get("ZETASPAN_JOBS", "1")
        try:
            jobs = int(raw)
        except ValueError:
            raise ConfigError(f"ZETASPAN_JOBS={raw!r} is not an integer") from None
    if jobs < 1:
        raise ConfigError("jobs must be >= 1")
    return jobs


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.disc is not None:
        D = args.disc
    else:
        try:
            D = discriminant(args.d)
        except InvalidFieldError as e:
            raise ConfigError(str(e)) from None
    try:
        variant = Variant(args.variant)
    except ValueError:
        raise ConfigError(f"unknown variant {args.variant!r}") from None
    return RunConfig(D, args.bound, variant, args.format, args.out, _resolve_jobs(args.jobs), not args.no_header)


# -- rendering ---------------------------------------------------------------


def _header(cfg: RunConfig, cmd: str) -> str:
    stamp = _dt.datetime.now(_dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return f"# zetaspan {cmd} D={cfg.D} N={cfg.N} generated {stamp}\n"


def _tabular(cfg: RunConfig, cmd: str, columns: list[str], rows: list[list[str]]) -> str:
    head = _header(cfg, cmd) if cfg.header else ""
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return head + buf.getvalue()
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return head + "\n".join(lines) + "\n"


def render_table(cfg: RunConfig) -> str:
    K = cfg.field()
    N = cfg.N
    chi = kronecker_fn(cfg.D, N)
    conv = convolve_reduced(zeta_reduced(N), chi)
    rows = [[str(n), str(ideal_count(K, n)), str(kronecker(cfg.D, n)), str(conv[n])] for n in range(1, N + 1)]
    columns = ["n", "a_K", "chi", "zeta_chi"]
    if cfg.fmt == "json":
        payload = {"disc": str(cfg.D), "bound": str(N), "rows": [dict(zip(columns, r)) for r in rows]}
        return json.dumps(payload, indent=1) + "\n"
    return _tabular(cfg, "table", columns, rows)


def render_records(cfg: RunConfig, cmd: str, records: list[FidelityRecord]) -> str:
    if cfg.fmt == "json":
        payload = {
            "disc": str(cfg.D),
            "bound": str(cfg.N),
            "records": [r.to_json() for r in records],
        }
        return json.dumps(payload, indent=1) + "\n"
    columns = ["construction", "variant", "verdict", "label", "left_card", "right_card"]
    rows = []
    for r in records:
        ce = r.counterexample
        rows.append(
            [
                r.construction,
                r.variant,
                r.verdict.value,
                ce.label if ce else "",
                "+".join(map(str, ce.left_card)) if ce else "",
                "+".join(map(str, ce.right_card)) if ce else "",
            ]
        )
    return _tabular(cfg, cmd, columns, rows)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------


def _suite_job(args: tuple[str, int, int, str]) -> list[FidelityRecord]:
    suite, D, N, variant = args
    return run_suite(suite, QuadField.from_disc(D, N), N, Variant(variant))


def parse_suites(raw: str) -> list[str]:
    names = [s.strip() for s in raw.split(",") if s.strip()]
    if not names:
        raise ConfigError("empty suite selection")
    out: list[str] = []
    for s in names:
        if s == "all":
            out += [x for x in SUITES if x not in out]
        elif s in SUITES:
            if s not in out:
                out.append(s)
        else:
            raise ConfigError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}, all")
    return out


def collect(cfg: RunConfig, suites: list[str]) -> list[FidelityRecord]:
    jobs = [(s, cfg.D, cfg.N, cfg.variant.value) for s in suites]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            parts = list(ex.map(_suite_job, jobs))
    else:
        parts = [_suite_job(j) for j in jobs]
    return [r for part in parts for r in part]


def cmd_table(cfg: RunConfig) -> int:
    _emit(cfg, render_table(cfg))
    return 0


def cmd_verify(cfg: RunConfig, suites: list[str]) -> int:
    records = collect(cfg, suites)
    _emit(cfg, render_records(cfg, "verify", records))
    return 0 if all(r.confirmed for r in records) else 1


def cmd_fidelity(cfg: RunConfig, suites: list[str] | None = None) -> int:
    records = fidelity_report(cfg.field(), cfg.N)
    if suites is not None:
        # the printed full-level fixtures travel with the full-numerical family
        keep = set(suites) | ({"full-local", "full-global"} if "full-numerical" in suites else set())
        records = [r for r in records if r.construction in keep]
    _emit(cfg, render_records(cfg, "fidelity", records))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    field = common.add_mutually_exclusive_group(required=True)
    field.add_argument("--disc", type=int, help="fundamental discriminant D")
    field.add_argument("--d", type=int, help="squarefree d; the field is Q(sqrt d)")
    common.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="enumeration bound N")
    common.add_argument("--variant", default=Variant.NORMATIVE_PARITY.value, help="character-set variant")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, help="worker processes (default: $ZETASPAN_JOBS or 1)")
    common.add_argument("--no-header", action="store_true", help="omit the timestamp line in csv/md output")

    p = argparse.ArgumentParser(prog="zetaspan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    sub.add_parser("table", parents=[common], help="coefficient table n, a_K(n), chi(n), (zeta*chi)(n)")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", default="all", help=f"comma list of {', '.join(SUITES)} or all")
    f = sub.add_parser("fidelity", parents=[common], help="report on every construction and variant")
    f.add_argument("--suite", default=None, help="restrict the report to these construction families")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = config_from_args(args)
        if args.cmd == "table":
            return cmd_table(cfg)
        if args.cmd == "verify":
            return cmd_verify(cfg, parse_suites(args.suite))
        suites = parse_suites(args.suite) if args.suite is not None else None
        return cmd_fidelity(cfg, suites)
    except ConfigError as e:
        print(f"zetaspan: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
