"""Exhaustive verification of the classification over small poset pairs."""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .classifier import PairReport, verify_pair
from .duality import COVER_CAP
from .homset import HOM_CAP
from .poset import generate_posets


@dataclass
class SweepConfig:
    max_n: int = 4
    min_n: int | None = None  # defaults to max_n: sweep a single size layer
    hom_cap: int = HOM_CAP
    cover_cap: int = COVER_CAP
    workers: int = 1
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.min_n is None:
            self.min_n = self.max_n
        if not 1 <= self.min_n <= self.max_n:
            raise ValueError(f"need 1 <= min_n <= max_n, got {self.min_n}, {self.max_n}")
        if self.hom_cap < 1 or self.cover_cap < 1:
            raise ValueError("caps must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class SweepReport:
    pairs_checked: int
    agreements: int
    disagreements: list[PairReport]
    clause_tallies: dict[str, int]
    wall_time: float
    pairs: list[PairReport] = field(default_factory=list, repr=False)

    def to_dict(self, config: SweepConfig | None = None) -> dict:
        d = {
            "pairs_checked": self.pairs_checked,
            "agreements": self.agreements,
            "disagreements": [r.to_dict() for r in self.disagreements],
            "clause_tallies": dict(sorted(self.clause_tallies.items())),
            "wall_time": round(self.wall_time, 3),
        }
        if config is not None:
            d["config"] = {k: v for k, v in asdict(config).items() if k != "output"}
        return d

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["P", "Q", "size_P", "size_Q", "predicted", "clause", "computed", "agree"])
        for r in self.pairs:
            w.writerow([
                json.dumps(r.P.to_dict()["covers"]),
                json.dumps(r.Q.to_dict()["covers"]),
                r.P.n,
                r.Q.n,
                r.predicted,
                r.clause,
                r.computed,
                r.agree,
            ])
        return buf.getvalue()


def _check(args):
    P, Q, hom_cap, cover_cap = args
    return verify_pair(P, Q, hom_cap=hom_cap, cover_cap=cover_cap)


def sweep_posets(config: SweepConfig):
    return [
        P
        for n in range(config.min_n, config.max_n + 1)
        for P in generate_posets(n, max_n=max(config.max_n, 1))
    ]


def run_sweep(config: SweepConfig) -> SweepReport:
    """Verify every ordered pair of class representatives in the size range."""
    start = time.perf_counter()
    posets = sweep_posets(config)
    jobs = [(P, Q, config.hom_cap, config.cover_cap) for P in posets for Q in posets]
    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            reports = list(pool.map(_check, jobs, chunksize=16))
    else:
        reports = [_check(j) for j in jobs]
    bad = [r for r in reports if not r.agree]
    return SweepReport(
        pairs_checked=len(reports),
        agreements=len(reports) - len(bad),
        disagreements=bad,
        clause_tallies=dict(Counter(r.clause for r in reports)),
        wall_time=time.perf_counter() - start,
        pairs=reports,
    )
