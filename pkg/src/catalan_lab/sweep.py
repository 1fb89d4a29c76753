"""Sweep driver: expands a check selection over prime / index ranges,
runs the work items (optionally on a process pool) and aggregates a
deterministic, serializable report.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Dict, List, Optional, Tuple

from . import congruences
from .congruences import CongruenceId, verify_congruence
from .identities import IdentityId, verify_identity
from .modring import reduce_precision

__all__ = [
    "IDENTITY_TAGS",
    "CONGRUENCE_TAGS",
    "ALL_TAGS",
    "SweepConfig",
    "ReportRow",
    "SweepReport",
    "primes_in",
    "run_sweep",
]

IDENTITY_TAGS = tuple(t.value for t in IdentityId)
CONGRUENCE_TAGS = tuple(t.value for t in CongruenceId)
ALL_TAGS = IDENTITY_TAGS + CONGRUENCE_TAGS


def primes_in(lo: int, hi: int) -> List[int]:
    """All primes in [lo, hi], ascending (simple sieve)."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


@dataclass(frozen=True)
class SweepConfig:
    checks: Tuple[str, ...] = ("ALL",)
    p_min: int = 3
    p_max: int = 100
    n_max: int = 50
    modulus_override: Optional[int] = None
    jobs: int = 1
    format: str = "human"  # json | csv | human
    output_path: Optional[str] = None
    guard_digits: int = 2

    def __post_init__(self) -> None:
        if self.p_min < 3 or self.p_max < self.p_min:
            raise ValueError("need 3 <= p_min <= p_max")
        if self.n_max < 1:
            raise ValueError("need n_max >= 1")
        if self.jobs < 1:
            raise ValueError("need jobs >= 1")
        if self.format not in ("json", "csv", "human"):
            raise ValueError(f"unknown format {self.format!r}")
        tags = self.selected_tags()
        unknown = [t for t in tags if t not in ALL_TAGS]
        if unknown:
            raise ValueError(f"unknown check tags: {', '.join(unknown)}")

    def selected_tags(self) -> Tuple[str, ...]:
        if "ALL" in self.checks:
            return ALL_TAGS
        # keep canonical order, drop duplicates
        wanted = set(self.checks)
        return tuple(t for t in ALL_TAGS if t in wanted) + tuple(
            t for t in self.checks if t not in ALL_TAGS
        )


@dataclass(frozen=True)
class ReportRow:
    tag: str
    p: Optional[int]
    n: Optional[int]
    k: Optional[int]
    modulus: Optional[str]
    lhs: Optional[str]
    rhs: Optional[str]
    passed: Optional[bool]
    classification: str
    skip_reason: Optional[str]

    def sort_key(self):
        return (
            self.tag,
            self.p if self.p is not None else -1,
            self.n if self.n is not None else -1,
            self.k if self.k is not None else -1,
        )


@dataclass
class SweepReport:
    config: SweepConfig
    rows: List[ReportRow]
    generated_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat()
    )

    @property
    def summary(self) -> Dict[str, Dict[str, int]]:
        out: Dict[str, Dict[str, int]] = {}
        for row in self.rows:
            bucket = out.setdefault(row.tag, {"pass": 0, "fail": 0, "skipped": 0})
            if row.skip_reason is not None:
                bucket["skipped"] += 1
            elif row.passed:
                bucket["pass"] += 1
            else:
                bucket["fail"] += 1
        return out

    @property
    def failures(self) -> List[ReportRow]:
        return [r for r in self.rows if r.skip_reason is None and not r.passed]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    # ------------------------------------------------------------ rendering

    def _row_dict(self, row: ReportRow) -> dict:
        return {
            "tag": row.tag,
            "p": row.p,
            "n": row.n,
            "k": row.k,
            "modulus": row.modulus,
            "lhs": row.lhs,
            "rhs": row.rhs,
            "pass": row.passed,
            "class": row.classification,
            "skip_reason": row.skip_reason,
        }

    def to_json(self) -> str:
        doc = {
            "header": {
                "tool": "catalan-lab",
                "generated_at": self.generated_at,
                "config": {
                    "checks": list(self.config.selected_tags()),
                    "p_min": self.config.p_min,
                    "p_max": self.config.p_max,
                    "n_max": self.config.n_max,
                    "modulus_override": self.config.modulus_override,
                    "jobs": self.config.jobs,
                    "guard_digits": self.config.guard_digits,
                },
            },
            "summary": {tag: counts for tag, counts in sorted(self.summary.items())},
            "failures": [self._row_dict(r) for r in self.failures],
            "results": [self._row_dict(r) for r in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["tag", "p", "n", "k", "modulus", "lhs", "rhs", "pass", "class", "skip_reason"]
        )
        for row in self.rows:
            d = self._row_dict(row)
            writer.writerow(
                [
                    d["tag"],
                    "" if d["p"] is None else d["p"],
                    "" if d["n"] is None else d["n"],
                    "" if d["k"] is None else d["k"],
                    d["modulus"] or "",
                    d["lhs"] or "",
                    d["rhs"] or "",
                    "" if d["pass"] is None else str(d["pass"]).lower(),
                    d["class"],
                    d["skip_reason"] or "",
                ]
            )
        return buf.getvalue()

    def to_human(self) -> str:
        lines = []
        for tag, counts in sorted(self.summary.items()):
            lines.append(
                f"{tag:10s} pass={counts['pass']:6d} fail={counts['fail']:4d} "
                f"skipped={counts['skipped']:4d}"
            )
        failures = self.failures
        if failures:
            lines.append("")
            lines.append("FAILURES:")
            for row in failures:
                where = f"p={row.p}" if row.p is not None else f"n={row.n}"
                if row.k is not None:
                    where += f" k={row.k}"
                lines.append(
                    f"  {row.tag} {where} mod {row.modulus or 'exact'}: "
                    f"lhs={row.lhs} rhs={row.rhs} [{row.classification}]"
                )
        else:
            lines.append("all selected checks passed")
        return "\n".join(lines) + "\n"

    def render(self) -> str:
        if self.config.format == "json":
            return self.to_json()
        if self.config.format == "csv":
            return self.to_csv()
        return self.to_human()


# ------------------------------------------------------------------ execution


def _congruence_rows(tag: str, p: int, override: Optional[int], guard: int):
    cid = CongruenceId(tag)
    m = congruences.modulus_exponent(cid)
    result = verify_congruence(cid, p, guard_digits=guard)
    results = result if isinstance(result, list) else [result]
    rows = []
    for res in results:
        lhs, rhs = res.lhs, res.rhs
        passed = res.passed
        if override is not None and override < m:
            lhs = reduce_precision(lhs, override)
            rhs = reduce_precision(rhs, override)
            passed = lhs.value == rhs.value
        rows.append(
            ReportRow(
                tag=tag,
                p=p,
                n=None,
                k=res.k,
                modulus=str(lhs.modulus),
                lhs=str(lhs.value),
                rhs=str(rhs.value),
                passed=passed,
                classification=res.classification,
                skip_reason=None,
            )
        )
    return rows


def _identity_rows(tag: str, n: int):
    iid = IdentityId(tag)
    param_sets = []
    if iid is IdentityId.BELL:
        param_sets = [{"n": n, "j": j} for j in range(n + 1)]
    elif iid in (IdentityId.QUOT1, IdentityId.QUOT2, IdentityId.QUOT3):
        param_sets = [{"n": n, "k": k} for k in range(n + 1)]
    elif iid is IdentityId.SHEN:
        param_sets = [{"m": n}]
    else:
        param_sets = [{"n": n}]
    rows = []
    for params in param_sets:
        res = verify_identity(iid, **params)
        rows.append(
            ReportRow(
                tag=tag,
                p=None,
                n=n,
                k=params.get("j", params.get("k")),
                modulus=None,
                lhs=str(res.lhs),
                rhs=str(res.rhs),
                passed=res.passed,
                classification="identity",
                skip_reason=None,
            )
        )
    return rows


def _run_item(item) -> List[ReportRow]:
    kind, tag, value, override, guard = item
    if kind == "congruence":
        return _congruence_rows(tag, value, override, guard)
    return _identity_rows(tag, value)


def run_sweep(config: SweepConfig) -> SweepReport:
    """Execute every selected check over its domain within the configured
    ranges; out-of-domain primes become skip rows, never silent drops.
    """
    items = []
    skip_rows: List[ReportRow] = []
    primes = primes_in(config.p_min, config.p_max)
    for tag in config.selected_tags():
        if tag in CONGRUENCE_TAGS:
            cid = CongruenceId(tag)
            m = congruences.modulus_exponent(cid)
            for p in primes:
                reason = congruences.domain_violation(cid, p)
                if reason is None and config.modulus_override is not None:
                    if config.modulus_override > m:
                        reason = (
                            f"modulus override p^{config.modulus_override} exceeds "
                            f"available precision p^{m}"
                        )
                if reason is not None:
                    skip_rows.append(
                        ReportRow(
                            tag=tag,
                            p=p,
                            n=None,
                            k=None,
                            modulus=None,
                            lhs=None,
                            rhs=None,
                            passed=None,
                            classification=(
                                "conjecture" if congruences.is_conjectural(cid) else "proven"
                            ),
                            skip_reason=reason,
                        )
                    )
                else:
                    items.append(
                        ("congruence", tag, p, config.modulus_override, config.guard_digits)
                    )
        else:
            for n in range(1, config.n_max + 1):
                items.append(("identity", tag, n, None, 0))

    if config.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_run_item, items, chunksize=8))
    else:
        chunks = [_run_item(item) for item in items]

    rows = skip_rows + [row for chunk in chunks for row in chunk]
    rows.sort(key=ReportRow.sort_key)
    return SweepReport(config=config, rows=rows)
