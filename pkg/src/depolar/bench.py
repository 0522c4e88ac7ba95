"""Benchmark harness: depolarized versus direct dual computations.

Each grid cell runs in its own process under an optional memory cap and
timeout; failures become data (status oom/timeout), never crashes.
"""

import csv
import io
import json
import multiprocessing
import resource
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields

from .complexes import SimplicialComplex
from .duality import alexander_dual_ideal, dual_complex_via_depolarization
from .families import FAMILY_BUILDERS as FAMILIES
from .homology import total_betti
from .ideals import InputError, ResourceLimit, support
from .polarization import polarize_ideal

CSV_SCHEMA = "schema=1"


@dataclass
class BenchRecord:
    family: str
    params: dict
    n: int = None
    n_prime: int = None
    gens_J: int = None
    gens_Jdual: int = None
    gens_IDelta: int = None
    t_Jdual_ms: float = None
    t_IDelta_ms: float = None
    t_alg1_ms: float = None
    size_res: int = None
    status: str = "ok"

    def ratio_gens(self):
        if self.gens_IDelta and self.gens_Jdual:
            return self.gens_IDelta / self.gens_Jdual
        return None

    def ratio_vars(self):
        if self.n_prime and self.n:
            return self.n_prime / self.n
        return None


def complex_dual_to(P):
    """The complex whose facet-complement ideal is the squarefree ideal P."""
    full = (1 << P.n) - 1
    facets = sorted(full ^ sum(1 << i for i in support(g)) for g in P.gens)
    return SimplicialComplex(P.ring.variables, facets)


def _measure_cell(family, params, size_res):
    J = FAMILIES[family](**params)
    out = {"n": J.n, "gens_J": len(J.gens)}
    t0 = time.perf_counter()
    Jdual = alexander_dual_ideal(J)
    out["t_Jdual_ms"] = (time.perf_counter() - t0) * 1000.0
    out["gens_Jdual"] = len(Jdual.gens)
    P, _ = polarize_ideal(J)
    out["n_prime"] = P.n
    t0 = time.perf_counter()
    Pdual = alexander_dual_ideal(P)
    out["t_IDelta_ms"] = (time.perf_counter() - t0) * 1000.0
    out["gens_IDelta"] = len(Pdual.gens)
    try:
        t0 = time.perf_counter()
        dual_complex_via_depolarization(complex_dual_to(P))
        out["t_alg1_ms"] = (time.perf_counter() - t0) * 1000.0
    except ResourceLimit:
        pass
    if size_res:
        out["size_res"] = sum(total_betti(J))
    return out


def _cell_worker(conn, family, params, mem_mb, size_res):
    try:
        if mem_mb:
            cap = mem_mb * 2 ** 20
            resource.setrlimit(resource.RLIMIT_AS, (cap, cap))
        payload = ("ok", _measure_cell(family, params, size_res))
    except (MemoryError, ResourceLimit):
        payload = ("oom", None)
    except Exception as exc:  # surfaced by the parent
        payload = ("error", repr(exc))
    try:
        conn.send(payload)
    except MemoryError:  # parent reads the dead pipe as oom
        pass


def run_cell(family, params, timeout_s=300, mem_mb=None, size_res=False):
    """Run one benchmark cell in a separate process; failures become status."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}")
    record = BenchRecord(family=family, params=dict(params))
    parent, child = multiprocessing.Pipe(duplex=False)
    proc = multiprocessing.Process(
        target=_cell_worker, args=(child, family, params, mem_mb, size_res))
    proc.start()
    child.close()
    try:
        if parent.poll(timeout_s):
            status, payload = parent.recv()
        else:
            status, payload = "timeout", None
    except EOFError:
        status, payload = "oom", None
    finally:
        parent.close()
        if proc.is_alive():
            proc.terminate()
        proc.join()
    if status == "error":
        raise RuntimeError(f"bench cell {family} {params} failed: {payload}")
    if status == "ok":
        for key, val in payload.items():
            setattr(record, key, val)
    else:
        record.status = status
    return record


def run_grid(cells, timeout_s=300, mem_mb=None, size_res=False, threads=1):
    """Run cells (family, params) pairs; rows come back in grid order."""
    cells = list(cells)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(
                lambda c: run_cell(c[0], c[1], timeout_s, mem_mb, size_res),
                cells))
    return [run_cell(f, p, timeout_s, mem_mb, size_res) for f, p in cells]


def bench_dual(cells, timeout_s=300, mem_mb=None, size_res=False, threads=1):
    """Run a benchmark grid and return (records, csv_text)."""
    records = run_grid(cells, timeout_s, mem_mb, size_res, threads)
    return records, records_to_csv(records)


def table_cells(table):
    """Preset benchmark grids, keyed "1" to "3"."""
    if table == "1":
        return [("power", {"n": n, "k": k})
                for n, k in [(5, 10), (5, 15), (5, 20), (5, 25), (5, 30),
                             (10, 5), (10, 10)]]
    if table == "2":
        return [("varpowers", {"n": n, "k": k})
                for n, k in [(10, 5), (10, 6), (10, 7), (10, 8)]]
    if table == "3":
        return [("jknm", {"n": n}) for n in range(6, 11)]
    raise KeyError(f"unknown table {table!r}")


def records_to_csv(records):
    """CSV with a schema tag line, fixed columns and derived ratio columns."""
    names = [f.name for f in fields(BenchRecord)] + ["ratio_gens", "ratio_vars"]
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([CSV_SCHEMA])
    writer.writerow(names)
    for r in records:
        row = []
        for name in names[:-2]:
            val = getattr(r, name)
            if name == "params":
                val = json.dumps(val, sort_keys=True)
            row.append("" if val is None else val)
        row.append("" if r.ratio_gens() is None else f"{r.ratio_gens():.6g}")
        row.append("" if r.ratio_vars() is None else f"{r.ratio_vars():.6g}")
        writer.writerow(row)
    return buf.getvalue()
