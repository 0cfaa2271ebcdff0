"""Benchmark runner: generate, dispatch, time, write CSV."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from mscb.core import MSCBError
from mscb.dispatch import dispatch
from mscb.generate import GeneratorSpec, generate

HEADER = ("spec", "rep", "seed", "shape", "family", "solver", "n", "ell", "elapsed_ms", "cost", "error")


@dataclass(frozen=True)
class BenchRow:
    spec: int
    rep: int
    seed: int
    shape: str
    family: str
    solver: str
    n: int
    ell: int
    elapsed_ms: float
    cost: int | None
    error: str

    def as_tuple(self) -> tuple:
        cost = "" if self.cost is None else self.cost
        return (self.spec, self.rep, self.seed, self.shape, self.family, self.solver,
                self.n, self.ell, f"{self.elapsed_ms:.3f}", cost, self.error)


def _run_one(job: tuple[int, int, GeneratorSpec, str]) -> BenchRow:
    index, rep, spec, algo = job
    seed = spec.seed + rep
    ell = 0
    t0 = time.perf_counter()
    try:
        instance = generate(spec.with_seed(seed))
        ell = len(instance.bundles)
        t0 = time.perf_counter()
        result = dispatch(instance, algo)
        elapsed = (time.perf_counter() - t0) * 1000
        return BenchRow(index, rep, seed, spec.shape, spec.family, result.solver,
                        spec.n, ell, elapsed, result.cost, "")
    except (MSCBError, ValueError) as exc:
        elapsed = (time.perf_counter() - t0) * 1000
        return BenchRow(index, rep, seed, spec.shape, spec.family, algo,
                        spec.n, ell, elapsed, None, f"{type(exc).__name__}: {exc}")


def run_bench(
    specs: Sequence[GeneratorSpec], repetitions: int = 1, algo: str = "auto", jobs: int = 1
) -> list[BenchRow]:
    """One row per (spec, repetition); repetition ``r`` uses seed ``spec.seed + r``.

    Rows come back in spec order whatever ``jobs`` is.
    """
    if repetitions < 0:
        raise ValueError("repetitions must be non-negative")
    work = [(i, r, s, algo) for i, s in enumerate(specs) for r in range(repetitions)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(job) for job in work]


def write_csv(rows: Iterable[BenchRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(row.as_tuple())


def bench_csv(specs: Sequence[GeneratorSpec], repetitions: int = 1, algo: str = "auto", jobs: int = 1) -> str:
    buf = io.StringIO()
    write_csv(run_bench(specs, repetitions, algo, jobs), buf)
    return buf.getvalue()
