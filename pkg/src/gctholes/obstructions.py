"""Scans for partitions occurring in a plethysm but not in the orbit of
the determinant, as seen through symmetric Kronecker coefficients.

Both scans walk degree by degree.  With ``checkpoint`` set, the report is
rewritten atomically after every degree and finished degrees are skipped
when the same scan is restarted.  Within a degree, ``workers > 1``
distributes partitions over a process pool; results are merged back in
enumeration order so reports do not depend on the worker count.
"""
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import GuardError
from .kronecker import sym_kron
from .partitions import enumerate_partitions
from .plethysm import mult_sym_sym

__all__ = [
    "ScanReport",
    "problem1_scan",
    "det3_gap_scan",
    "padded_filter",
    "PROBLEM1_MAX_SIZE",
    "DET3_MAX_DEGREE",
]

PROBLEM1_MAX_SIZE = 20
DET3_MAX_DEGREE = 7


@dataclass
class ScanReport:
    params: dict
    candidates: list = field(default_factory=list)
    per_degree: list = field(default_factory=list)

    def to_json(self):
        return {"params": self.params, "candidates": self.candidates, "per_degree": self.per_degree}

    @classmethod
    def from_json(cls, data):
        return cls(data["params"], data["candidates"], data["per_degree"])

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def save(self, path):
        write_atomic(path, self.dumps())

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    @property
    def vanishing(self):
        """Candidates whose symmetric Kronecker coefficient is zero."""
        return [c for c in self.candidates if c["symkron"] == 0]


def write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def padded_filter(lam, n, m):
    """Necessary condition for the padded permanent: n*lam_1 >= (n-m)*|lam|."""
    if not n > m >= 1:
        raise ValueError(f"need n > m >= 1, got n={n}, m={m}")
    first = lam[0] if lam else 0
    return n * first >= (n - m) * sum(lam)


def _evaluate(args):
    lam, d, n = args
    rect = (d,) * n
    return list(lam), mult_sym_sym(lam, d, n), sym_kron(lam, rect)


def _run(params, n, d_max, max_rows, keep, workers, checkpoint):
    report = ScanReport(dict(params))
    if checkpoint and os.path.exists(checkpoint):
        previous = ScanReport.load(checkpoint)
        if previous.params == report.params:
            report = previous
    done = {entry["d"] for entry in report.per_degree}
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for d in range(1, d_max + 1):
            if d in done:
                continue
            start = time.perf_counter()
            jobs = [(lam, d, n) for lam in enumerate_partitions(d * n, max_rows)]
            if pool is None:
                results = map(_evaluate, jobs)
            else:
                results = pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            for part, pleth, sk in results:
                if keep(pleth, sk):
                    report.candidates.append({"partition": part, "plethysm": pleth, "symkron": sk})
            report.per_degree.append(
                {"d": d, "checked": len(jobs), "seconds": round(time.perf_counter() - start, 3)}
            )
            if checkpoint:
                report.save(checkpoint)
    finally:
        if pool is not None:
            pool.shutdown()
    return report


def problem1_scan(n, d_max, workers=1, checkpoint=None, max_size=PROBLEM1_MAX_SIZE):
    """Partitions of dn with at most n rows that occur in Sym^d Sym^n but
    have vanishing sk(lam, n x d, n x d), for d <= d_max."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    if n * d_max > max_size:
        raise GuardError(f"n*d_max={n * d_max} exceeds the guard {max_size}")
    params = {"scan": "problem1", "n": n, "d_max": d_max, "max_rows": n}
    return _run(params, n, d_max, n, lambda pleth, sk: pleth > 0 and sk == 0, workers, checkpoint)


def det3_gap_scan(d_max, workers=1, checkpoint=None, max_degree=DET3_MAX_DEGREE, max_rows=9):
    """Partitions of 3d with at most ``max_rows`` rows whose multiplicity in
    Sym^d Sym^3 exceeds sk(lam, 3 x d, 3 x d), for d <= d_max."""
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    if d_max > max_degree:
        raise GuardError(f"d_max={d_max} exceeds the guard {max_degree}")
    params = {"scan": "det3gap", "n": 3, "d_max": d_max, "max_rows": max_rows}
    return _run(params, 3, d_max, max_rows, lambda pleth, sk: pleth > sk, workers, checkpoint)
