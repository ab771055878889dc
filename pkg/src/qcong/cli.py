"""Command-line driver.

Commands::

    qcong verify --target thm1,qgw --n 3:25:2 --d 1,2
    qcong verify --target all --primes 5,7,11 --r 1,2
    qcong list-targets

``verify`` streams one JSON object per cell.  Field order is fixed::

    schema, target, kind, n, d, p, r, N, T, modulus, status, strategy,
    margin, required, points_used, points_skipped, elapsed_ms,
    failure, witness, message

Fields that do not apply to a cell are omitted.  Exit status is 0 when every
cell verified, 1 when any cell was refuted or inapplicable and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .engine import INAPPLICABLE, VERIFIED, Strategy, Verdict
from .errors import QCongError
from .powerseries import JACKSON_POINTS, RAHMAN_POINTS, verify_jackson, verify_rahman, verify_rahman_specialized
from .registry import REGISTRY, TargetId, verify_target
from .supercong import CLASSICAL, ClassicalTarget, check_supercongruence

SCHEMA = 1
JACKSON_N = tuple(range(9))

SERIES_TARGETS = {
    "jackson": "terminating 6phi5 summation, exact at 10 rational points (a, b, c), N = 0..8",
    "rahman": "quadratic transformation sum (a;q)_k(1-aq^3k)(d;q)_k(q/d;q)_k(b;q^2)_k a^k q^C(k+1,2)/b^k / (...)"
    " == infinite product form, through q^T at 5 rational points (a, d, b)",
    "rahman-special": "the transformation after q -> q^2, a = q, d = aq, b -> q^2/b, through q^T",
}

_FIELDS = (
    "schema", "target", "kind", "n", "d", "p", "r", "N", "T", "modulus", "status", "strategy",
    "margin", "required", "points_used", "points_skipped", "elapsed_ms", "failure", "witness", "message",
)


@dataclass(frozen=True)
class Cell:
    target: str
    n: Optional[int] = None
    d: Optional[int] = None
    p: Optional[int] = None
    r: Optional[int] = None
    N: Optional[int] = None
    T: Optional[int] = None


@dataclass
class RunConfig:
    targets: list[str]
    n_values: list[int]
    d_values: Optional[list[int]] = None
    primes: list[int] = field(default_factory=lambda: [5, 7, 11, 13])
    r_values: list[int] = field(default_factory=lambda: [1])
    strategy: Strategy = field(default_factory=Strategy)
    truncation: int = 40
    report_path: Optional[str] = None
    jobs: int = 1


def all_target_names() -> list[str]:
    return list(REGISTRY) + list(CLASSICAL) + list(SERIES_TARGETS)


def target_kind(name: str) -> str:
    if name in REGISTRY:
        return REGISTRY[name].kind
    if name in CLASSICAL:
        return CLASSICAL[name].kind
    return "identity"


def expand_cells(cfg: RunConfig) -> list[Cell]:
    """All (target, parameter) cells in deterministic order."""
    cells: list[Cell] = []
    for name in cfg.targets:
        if name in REGISTRY:
            t = REGISTRY[name]
            ds: list[Optional[int]] = [None]
            if t.d_values:
                ds = [d for d in (cfg.d_values or t.d_values) if d in t.d_values]
            for n in cfg.n_values:
                if n < t.min_n:
                    continue
                for d in ds:
                    cells.append(Cell(name, n=n, d=d))
        elif name in CLASSICAL:
            st = CLASSICAL[name]
            for p in cfg.primes:
                if p < st.min_p:
                    continue
                for r in cfg.r_values:
                    if st.r_one_only and r != 1:
                        continue
                    cells.append(Cell(name, p=p, r=r))
        elif name == "jackson":
            cells.extend(Cell(name, N=N) for N in JACKSON_N)
        else:
            cells.append(Cell(name, T=cfg.truncation))
    return cells


def _run_cell(cell: Cell, strategy: Strategy) -> Verdict | tuple[list[str], Verdict]:
    name = cell.target
    if name in REGISTRY:
        rep = verify_target(TargetId(name, cell.n, cell.d), strategy)
        return rep.modulus, rep.verdict
    if name in CLASSICAL:
        return check_supercongruence(ClassicalTarget(name, cell.p, cell.r))
    if name == "jackson":
        return verify_jackson(cell.N, JACKSON_POINTS)
    if name == "rahman":
        return verify_rahman(cell.T, RAHMAN_POINTS)
    return verify_rahman_specialized(cell.T)


def run_cell(args: tuple[Cell, Strategy]) -> dict:
    """Run one cell and return its report record."""
    cell, strategy = args
    modulus: Optional[list[str]] = None
    try:
        out = _run_cell(cell, strategy)
    except QCongError as exc:
        out = Verdict(INAPPLICABLE, strategy=strategy.kind, message=f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        modulus, verdict = out
    else:
        verdict = out
    if cell.p is not None and verdict.required is not None:
        modulus = [f"p^{verdict.required}"]
    rec = {"schema": SCHEMA, "target": cell.target, "kind": target_kind(cell.target)}
    for key in ("n", "d", "p", "r", "N", "T"):
        val = getattr(cell, key)
        if val is not None:
            rec[key] = val
    if modulus is not None:
        rec["modulus"] = modulus
    rec.update(verdict.as_dict())
    rec.pop("degree_bounds", None)
    return {k: rec[k] for k in _FIELDS if k in rec}


def emit_report(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), default=str)


def iter_records(cfg: RunConfig) -> Iterator[dict]:
    work = [(c, cfg.strategy) for c in expand_cells(cfg)]
    if cfg.jobs <= 1 or len(work) <= 1:
        yield from map(run_cell, work)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        # map yields in submission order, so output stays deterministic
        yield from pool.map(run_cell, work)


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    fh = open(cfg.report_path, "w") if cfg.report_path else None
    ok = True
    try:
        for rec in iter_records(cfg):
            line = emit_report(rec)
            print(line, file=fh or out, flush=True)
            if rec["status"] != VERIFIED:
                ok = False
    finally:
        if fh:
            fh.close()
    return 0 if ok else 1


# --- argument parsing --------------------------------------------------------

def parse_n_range(text: str) -> list[int]:
    parts = text.split(":")
    try:
        nums = [int(x) for x in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if len(nums) == 1:
        start = end = nums[0]
        step = 2
    elif len(nums) == 2:
        (start, end), step = nums, 2
    elif len(nums) == 3:
        start, end, step = nums
    else:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected start:end:step")
    if start < 1 or start % 2 == 0:
        raise argparse.ArgumentTypeError("n values must be odd and positive")
    if step <= 0 or step % 2:
        raise argparse.ArgumentTypeError("step must be a positive even integer")
    if end < start:
        raise argparse.ArgumentTypeError("empty range")
    return list(range(start, end + 1, step))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _d_list(text: str) -> list[int]:
    ds = _int_list(text)
    if not ds or any(d not in (1, 2) for d in ds):
        raise argparse.ArgumentTypeError("d must be 1, 2 or 1,2")
    return ds


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcong", description="Exact verification of q-supercongruences.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify targets over a parameter sweep")
    v.add_argument("--target", default="all", help="comma-separated target names, or 'all'")
    v.add_argument("--n", type=parse_n_range, default=parse_n_range("1:9:2"), help="odd n range start:end:step")
    v.add_argument("--d", type=_d_list, default=None, help="1, 2 or 1,2 (targets that take d)")
    v.add_argument("--primes", type=_int_list, default=[5, 7, 11, 13])
    v.add_argument("--r", type=_int_list, default=[1])
    v.add_argument("--strategy", choices=("specialize", "symbolic"), default="specialize")
    v.add_argument("--grid-margin", type=int, default=2)
    v.add_argument("--truncation", type=int, default=40)
    v.add_argument("--report", default=None, help="write records to this file instead of stdout")
    v.add_argument("--jobs", type=int, default=1)

    sub.add_parser("list-targets", help="list every target and its statement")
    return ap


def _config(ns: argparse.Namespace, ap: argparse.ArgumentParser) -> RunConfig:
    known = all_target_names()
    if ns.target.strip() == "all":
        targets = known
    else:
        targets = [t.strip() for t in ns.target.split(",") if t.strip()]
        unknown = [t for t in targets if t not in known]
        if unknown:
            ap.error(f"unknown target(s): {', '.join(unknown)}")
    if ns.grid_margin < 1:
        ap.error("--grid-margin must be at least 1")
    if ns.truncation < 0:
        ap.error("--truncation must be non-negative")
    if ns.jobs < 1:
        ap.error("--jobs must be at least 1")
    if any(r < 1 for r in ns.r):
        ap.error("--r values must be positive")
    return RunConfig(
        targets=targets,
        n_values=ns.n,
        d_values=ns.d,
        primes=ns.primes,
        r_values=ns.r,
        strategy=Strategy(ns.strategy, ns.grid_margin),
        truncation=ns.truncation,
        report_path=ns.report,
        jobs=ns.jobs,
    )


def list_targets(out=None) -> None:
    out = out or sys.stdout
    for name, t in REGISTRY.items():
        extra = f" [d in {','.join(map(str, t.d_values))}]" if t.d_values else ""
        print(f"{name:16s} {t.kind:10s} {t.statement}{extra}", file=out)
    for name, st in CLASSICAL.items():
        print(f"{name:16s} {st.kind:10s} {st.description} (p >= {st.min_p}{', r = 1' if st.r_one_only else ''})", file=out)
    for name, text in SERIES_TARGETS.items():
        print(f"{name:16s} {'identity':10s} {text}", file=out)


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    if ns.command == "list-targets":
        list_targets()
        return 0
    cfg = _config(ns, ap)
    try:
        return run(cfg)
    except OSError as exc:
        print(f"qcong: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
