"""Command-line runner.

Invocation:
  qident list
  qident run --config FILE [--parallelism N] [--out FILE] [--csv FILE]
  qident run --case ID --seed S --samples K --tol T [--param name=value]...

Environment: QIDENT_PRECISION=double|high selects the scalar backend.
Exit codes: 0 all pass, 1 any fail or error, 2 configuration/usage error.

Config files are JSON: either a list of case configs or {"cases": [...]};
each case config is {"case_id": str, "seed": int, "samples": int,
"tol": float, "params": {...}}.  Complex values are written as [re, im]
pairs, partitions as bracketed strings like "[3,1]", exact q-power tags as
{"qpow": m}.  Reports are emitted as JSON (source of truth) and optionally
flattened to CSV; NaN never appears in reports (error runs carry null sides).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

from . import __version__
from .errors import ConfigError, QidentError
from .identities import CASES, IdentityReport, run_case, sample_params
from .partitions import format_partition, parse_partition
from .policy import QPower


@dataclass(frozen=True)
class CaseConfig:
    """One requested batch of runs for a registry case."""

    case_id: str
    params: dict = field(default_factory=dict)
    tol: Optional[float] = None
    seed: int = 0
    samples: int = 1


@dataclass
class ReportSet:
    """All runs of one invocation plus summary counts and metadata."""

    runs: List[IdentityReport]
    summary: dict
    meta: dict


# ---------------------------------------------------------------------------
# Value encoding/decoding.
# ---------------------------------------------------------------------------

def _decode_value(kind, raw):
    if kind == "int":
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise ConfigError(f"expected integer, got {raw!r}")
        return raw
    if kind == "partition":
        if isinstance(raw, str):
            return parse_partition(raw)
        if isinstance(raw, (list, tuple)):
            return parse_partition("[" + ",".join(str(x) for x in raw) + "]")
        raise ConfigError(f"expected partition, got {raw!r}")
    if kind == "scalar":
        return _decode_scalar(raw)
    if kind == "vector":
        if not isinstance(raw, (list, tuple)):
            raise ConfigError(f"expected vector (list), got {raw!r}")
        return tuple(_decode_scalar(v) for v in raw)
    raise ConfigError(f"unknown schema kind {kind!r}")


def _decode_scalar(raw):
    if isinstance(raw, bool):
        raise ConfigError(f"expected scalar, got {raw!r}")
    if isinstance(raw, (int, float)):
        return float(raw)
    if isinstance(raw, complex):
        return raw
    if isinstance(raw, dict) and set(raw) == {"qpow"}:
        if not isinstance(raw["qpow"], int):
            raise ConfigError("qpow tag must hold an integer")
        return QPower(raw["qpow"])
    if isinstance(raw, (list, tuple)) and len(raw) == 2 \
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw):
        return complex(raw[0], raw[1])
    raise ConfigError(f"cannot interpret scalar value {raw!r}")


def _encode_value(v):
    if isinstance(v, QPower):
        return {"qpow": v.exponent}
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        if math.isnan(v):
            return None
        return v
    if isinstance(v, complex):
        if math.isnan(v.real) or math.isnan(v.imag):
            return None
        return [v.real, v.imag]
    if isinstance(v, (list, tuple)):
        return [_encode_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _encode_value(x) for k, x in v.items()}
    if isinstance(v, str):
        return v
    try:  # mpmath scalars
        return _encode_value(complex(v))
    except (TypeError, ValueError):
        return repr(v)


def _report_to_dict(rep: IdentityReport, sample_index: int, seed: int):
    return {
        "case_id": rep.case_id,
        "sample_index": sample_index,
        "seed": seed,
        "status": rep.status,
        "lhs": _encode_value(rep.lhs),
        "rhs": _encode_value(rep.rhs),
        "abs_residual": _encode_value(rep.abs_residual),
        "rel_residual": _encode_value(rep.rel_residual),
        "terms_used": rep.terms_used,
        "message": rep.message,
        "params": {k: _encode_value(v) for k, v in sorted(rep.params.items())},
    }


# ---------------------------------------------------------------------------
# Config handling.
# ---------------------------------------------------------------------------

def _validate_config(entry: dict) -> CaseConfig:
    if not isinstance(entry, dict):
        raise ConfigError(f"config entry must be an object, got {entry!r}")
    unknown = set(entry) - {"case_id", "params", "tol", "seed", "samples"}
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    case_id = entry.get("case_id")
    if case_id not in CASES:
        raise ConfigError(f"unknown case id: {case_id!r}")
    schema = CASES[case_id].schema
    raw_params = entry.get("params", {})
    if not isinstance(raw_params, dict):
        raise ConfigError("params must be an object")
    params = {}
    for name, raw in raw_params.items():
        if name not in schema:
            raise ConfigError(f"{case_id}: unknown parameter {name!r}")
        params[name] = _decode_value(schema[name], raw)
    tol = entry.get("tol")
    if tol is not None and not (isinstance(tol, (int, float)) and tol > 0):
        raise ConfigError("tol must be a positive number")
    seed = entry.get("seed", 0)
    if not isinstance(seed, int) or seed < 0 or seed >= 2**64:
        raise ConfigError("seed must be a 64-bit unsigned integer")
    samples = entry.get("samples", 1)
    if not isinstance(samples, int) or samples < 1:
        raise ConfigError("samples must be a positive integer")
    return CaseConfig(case_id=case_id, params=params,
                      tol=None if tol is None else float(tol),
                      seed=seed, samples=samples)


def load_configs(path: str) -> List[CaseConfig]:
    """Read and validate a JSON config file (raises ConfigError on any
    malformed entry before any evaluation starts)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in config file: {exc}")
    if isinstance(doc, dict) and "cases" in doc:
        doc = doc["cases"]
    if not isinstance(doc, list):
        raise ConfigError("config must be a list of case configs or {'cases': [...]}")
    return [_validate_config(entry) for entry in doc]


def _parse_param_option(case_id: str, text: str):
    if "=" not in text:
        raise ConfigError(f"--param needs name=value, got {text!r}")
    name, raw = text.split("=", 1)
    schema = CASES[case_id].schema
    if name not in schema:
        raise ConfigError(f"{case_id}: unknown parameter {name!r}")
    kind = schema[name]
    if kind == "partition":
        return name, _decode_value(kind, raw)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        raise ConfigError(f"cannot parse value for {name!r}: {raw!r}")
    return name, _decode_value(kind, value)


# ---------------------------------------------------------------------------
# Precision backend.
# ---------------------------------------------------------------------------

def _precision_mode() -> str:
    mode = os.environ.get("QIDENT_PRECISION", "double").lower()
    if mode not in ("double", "high"):
        raise ConfigError("QIDENT_PRECISION must be 'double' or 'high'")
    return mode


def _promote_params(params: dict, schema: dict):
    """Promote the scalar-valued parameters to mpmath arbitrary precision."""
    import mpmath

    def up(v):
        if isinstance(v, QPower):
            return v
        return mpmath.mpmathify(complex(v))

    out = dict(params)
    for name, kind in schema.items():
        if name not in out:
            continue
        if kind == "scalar":
            out[name] = up(out[name])
        elif kind == "vector":
            out[name] = tuple(up(v) for v in out[name])
    return out


# ---------------------------------------------------------------------------
# Execution.
# ---------------------------------------------------------------------------

def run(configs: List[CaseConfig], parallelism: int = 1,
        precision: Optional[str] = None) -> ReportSet:
    """Execute every config; deterministic output for fixed seeds, independent
    of parallelism (aggregation sorts by config order and sample index)."""
    if parallelism < 1:
        raise ConfigError("parallelism must be a positive integer")
    mode = precision if precision is not None else _precision_mode()

    tasks = []
    for ci, cfg in enumerate(configs):
        for si in range(cfg.samples):
            tasks.append((ci, si, cfg))

    def one(task):
        ci, si, cfg = task
        seed = cfg.seed + si
        params = sample_params(cfg.case_id, seed)
        params.update(cfg.params)
        if mode == "high":
            import mpmath

            with mpmath.workdps(50):
                params = _promote_params(params, CASES[cfg.case_id].schema)
                rep = run_case(cfg.case_id, params, cfg.tol)
        else:
            rep = run_case(cfg.case_id, params, cfg.tol)
        return ci, si, seed, rep

    if parallelism == 1 or len(tasks) <= 1:
        results = [one(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(one, tasks))
    results.sort(key=lambda r: (r[0], r[1]))

    runs = []
    counts = {"pass": 0, "fail": 0, "error": 0}
    run_dicts = []
    for ci, si, seed, rep in results:
        runs.append(rep)
        counts[rep.status] += 1
        run_dicts.append(_report_to_dict(rep, si, seed))
    meta = {
        "tool": "qident",
        "version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "precision": mode,
        "seeds": [cfg.seed for cfg in configs],
    }
    rset = ReportSet(runs=runs, summary=counts, meta=meta)
    rset.run_dicts = run_dicts  # serialized form, kept alongside
    return rset


def exit_code(rset: ReportSet) -> int:
    """Exit code as a pure function of the summary counts."""
    if rset.summary["fail"] or rset.summary["error"]:
        return 1
    return 0


def report_json(rset: ReportSet) -> str:
    doc = {"meta": rset.meta, "summary": rset.summary, "runs": rset.run_dicts}
    return json.dumps(doc, indent=2, allow_nan=False, sort_keys=False)


_CSV_FIELDS = ["case_id", "sample_index", "seed", "status", "lhs_re", "lhs_im",
               "rhs_re", "rhs_im", "abs_residual", "rel_residual",
               "terms_used", "message", "params"]


def write_csv(rset: ReportSet, path: str) -> None:
    """Flatten one report per row (JSON remains the source of truth)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=_CSV_FIELDS)
        w.writeheader()
        for rd in rset.run_dicts:
            lhs = rd["lhs"] or [None, None]
            rhs = rd["rhs"] or [None, None]
            w.writerow({
                "case_id": rd["case_id"],
                "sample_index": rd["sample_index"],
                "seed": rd["seed"],
                "status": rd["status"],
                "lhs_re": lhs[0], "lhs_im": lhs[1],
                "rhs_re": rhs[0], "rhs_im": rhs[1],
                "abs_residual": rd["abs_residual"],
                "rel_residual": rd["rel_residual"],
                "terms_used": rd["terms_used"],
                "message": rd["message"],
                "params": json.dumps(rd["params"], allow_nan=False),
            })


def list_cases():
    """All registry cases as (case_id, description, schema), stable order."""
    return [(c.case_id, c.description, dict(c.schema)) for c in CASES.values()]


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------

def _build_parser():
    ap = argparse.ArgumentParser(prog="qident",
                                 description="Numerical identity verification for "
                                             "q-series and BC_n-symmetric W functions.")
    sub = ap.add_subparsers(dest="command")
    sub.add_parser("list", help="list registry cases")
    rp = sub.add_parser("run", help="run identity checks")
    rp.add_argument("--config", help="JSON config file")
    rp.add_argument("--case", help="single case id")
    rp.add_argument("--seed", type=int, default=0)
    rp.add_argument("--samples", type=int, default=1)
    rp.add_argument("--tol", type=float, default=None)
    rp.add_argument("--param", action="append", default=[],
                    help="explicit parameter name=value (JSON value syntax)")
    rp.add_argument("--parallelism", type=int, default=1)
    rp.add_argument("--out", help="write JSON report to this file")
    rp.add_argument("--csv", help="write CSV report to this file")
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command == "list":
        for case_id, desc, schema in list_cases():
            names = ",".join(schema)
            print(f"{case_id:22s} {desc}  [params: {names}]")
        return 0
    if args.command != "run":
        ap.print_usage(sys.stderr)
        return 2
    try:
        if args.config and args.case:
            raise ConfigError("--config and --case are mutually exclusive")
        if args.config:
            configs = load_configs(args.config)
        elif args.case:
            if args.case not in CASES:
                raise ConfigError(f"unknown case id: {args.case!r}")
            params = dict(_parse_param_option(args.case, p) for p in args.param)
            configs = [CaseConfig(case_id=args.case, params=params, tol=args.tol,
                                  seed=args.seed, samples=args.samples)]
        else:
            raise ConfigError("run requires --config or --case")
        rset = run(configs, parallelism=args.parallelism)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    text = report_json(rset)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        write_csv(rset, args.csv)
    s = rset.summary
    print(f"pass={s['pass']} fail={s['fail']} error={s['error']}", file=sys.stderr)
    return exit_code(rset)


if __name__ == "__main__":
    sys.exit(main())
