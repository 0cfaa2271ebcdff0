import csv
import io

from mscb.bench import HEADER, bench_csv, run_bench
from mscb.generate import GeneratorSpec


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_one_spec_three_reps():
    rows = _rows(bench_csv([GeneratorSpec(shape="path", n=6, family="connected-partition", seed=4)], 3))
    assert tuple(rows[0]) == HEADER
    assert len(rows) == 4
    assert [r[2] for r in rows[1:]] == ["4", "5", "6"]
    assert all(r[5] == "connected-path" and r[-1] == "" for r in rows[1:])


def test_empty_spec_set():
    assert _rows(bench_csv([], 5)) == [list(HEADER)]


def test_errors_are_recorded_and_run_continues():
    specs = [
        GeneratorSpec(shape="general", n=6, family="connected-partition"),
        GeneratorSpec(shape="tree", n=5, family="partition", bundles=2),
    ]
    rows = run_bench(specs, 2)
    assert len(rows) == 4
    assert all(r.error.startswith("SpecError") and r.cost is None for r in rows[:2])
    assert all(r.error == "" and r.cost is not None for r in rows[2:])


def test_deterministic_streams():
    specs = [GeneratorSpec(shape="tree", n=n, family="overlapping", bundles=3, seed=9) for n in (4, 8)]
    a = [(r.seed, r.cost, r.solver) for r in run_bench(specs, 2)]
    b = [(r.seed, r.cost, r.solver) for r in run_bench(specs, 2)]
    assert a == b


def test_parallel_rows_keep_spec_order():
    specs = [GeneratorSpec(shape="path", n=n, family="overlapping", bundles=2, seed=1) for n in (30, 3, 12)]
    serial = [(r.spec, r.rep, r.cost) for r in run_bench(specs, 2)]
    parallel = [(r.spec, r.rep, r.cost) for r in run_bench(specs, 2, jobs=2)]
    assert serial == parallel
    assert [s for s, _, _ in serial] == [0, 0, 1, 1, 2, 2]


def test_growing_path_suite_reports_elapsed():
    specs = [GeneratorSpec(shape="path", n=n, family="overlapping", bundles=n // 5, seed=2)
             for n in (50, 200, 800)]
    rows = run_bench(specs, 1)
    assert [r.n for r in rows] == [50, 200, 800]
    assert all(r.elapsed_ms >= 0 for r in rows)
