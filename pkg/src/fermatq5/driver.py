"""Range verification with a JSONL certificate log and resumable checkpoints.

Primes are cut into shards of consecutive primes. Workers decide shards
independently; a single writer appends finished shards to the log strictly in
shard order, then atomically rewrites the checkpoint. The log is therefore
sorted by p and byte-identical for any worker count, and a killed run resumes
from the last committed shard.
"""
from __future__ import annotations

import json
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .criterion import WitnessCertificate, decide, verify_certificate
from .curve import CurveOverK, load_curve
from .primes import primes_in_range

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
DEFAULT_SHARD_SIZE = 10_000
THREADS_ENV = "FERMATQ5_THREADS"


@dataclass
class RangeSummary:
    lo: int
    hi: int
    certificates: int = 0
    failures: list[int] = field(default_factory=list)
    methods: Counter = field(default_factory=Counter)
    exceptional: list[int] = field(default_factory=list)
    resumed_from: int | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def fingerprint(curve: CurveOverK, n_max: int | None) -> dict:
    return {"n_max": n_max, "curve_sha256": curve.digest, "primality": "mr64-deterministic/probable-above"}


def _chunks(it: Iterable[int], size: int) -> Iterator[list[int]]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


_worker_curve: CurveOverK | None = None


def _init_worker(curve: CurveOverK) -> None:
    global _worker_curve
    _worker_curve = curve


def _run_shard(primes: list[int], n_max: int | None, curve: CurveOverK | None = None):
    curve = curve or _worker_curve
    return [(p, decide(p, curve, n_max)) for p in primes]


def _write_checkpoint(path: Path, state: dict) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w") as fh:
        json.dump(state, fh, sort_keys=True)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def read_checkpoint(path: Path) -> dict | None:
    try:
        with open(path) as fh:
            state = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return None
    return state if state.get("version") == CHECKPOINT_VERSION else None


def verify_range(
    lo: int,
    hi: int,
    out: str | Path,
    *,
    n_max: int | None = None,
    threads: int | None = None,
    shard_size: int = DEFAULT_SHARD_SIZE,
    resume: bool = False,
    checkpoint: str | Path | None = None,
    curve: CurveOverK | None = None,
    curve_path: str | Path | None = None,
    on_commit: Callable[[int, dict], None] | None = None,
) -> RangeSummary:
    """Certify every prime p in [lo, hi), writing one JSON line per certificate to ``out``.

    ``on_commit(shard_index, checkpoint_state)`` runs after each shard is
    durably committed; tests use it to simulate a crash.
    """
    if not 5 <= lo < hi:
        raise ValueError("need 5 <= lo < hi")
    if curve is None:
        curve = load_curve(curve_path)
    threads = threads or default_threads()
    out = Path(out)
    ckpt_path = Path(checkpoint) if checkpoint else out.with_name(out.name + ".ckpt")
    fp = fingerprint(curve, n_max)
    summary = RangeSummary(lo, hi)
    started = time.monotonic()

    state = read_checkpoint(ckpt_path) if resume else None
    if state and state["fingerprint"] == fp and (state["lo"], state["hi"]) == (lo, hi) and out.exists():
        with open(out, "r+b") as fh:
            fh.truncate(state["log_bytes"])
        start = state["next"]
        summary.resumed_from = start
        summary.certificates = state["certificates"]
        summary.failures = list(state["failures"])
        summary.methods.update(state["methods"])
        summary.exceptional = list(state["exceptional"])
        log.info("resuming at p >= %d (%d certificates already recorded)", start, summary.certificates)
    else:
        if resume:
            log.info("no matching checkpoint; starting a fresh run")
        out.write_bytes(b"")
        start = lo
        state = {
            "version": CHECKPOINT_VERSION, "fingerprint": fp, "lo": lo, "hi": hi, "next": lo,
            "log_bytes": 0, "certificates": 0, "failures": [], "methods": {}, "exceptional": [],
        }
        _write_checkpoint(ckpt_path, state)

    shards = _chunks(primes_in_range(start, hi), shard_size)

    def commit(index: int, results) -> None:
        with open(out, "ab") as fh:
            for p, cert in results:
                if cert is None:
                    summary.failures.append(p)
                    continue
                fh.write((cert.to_json() + "\n").encode())
                summary.certificates += 1
                summary.methods[cert.method] += 1
                if cert.method == "exceptional":
                    summary.exceptional.append(p)
            fh.flush()
            os.fsync(fh.fileno())
            size = fh.tell()
        state.update(
            next=results[-1][0] + 1, log_bytes=size, certificates=summary.certificates,
            failures=summary.failures, methods=dict(summary.methods), exceptional=summary.exceptional,
        )
        _write_checkpoint(ckpt_path, state)
        log.info("shard %d committed: p <= %d, %d certificates, %d failures",
                 index, results[-1][0], summary.certificates, len(summary.failures))
        if on_commit:
            on_commit(index, dict(state))

    if threads == 1:
        for i, shard in enumerate(shards):
            commit(i, _run_shard(shard, n_max, curve))
    else:
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(curve,)) as pool:
            pending = []
            for i, shard in enumerate(shards):
                pending.append(pool.submit(_run_shard, shard, n_max))
                # keep a bounded window of shards in flight; commit in order
                while len(pending) > 2 * threads:
                    commit(i - len(pending) + 1, pending.pop(0).result())
            base = i + 1 - len(pending) if pending else 0
            for j, fut in enumerate(pending):
                commit(base + j, fut.result())
    summary.elapsed = time.monotonic() - started
    return summary


def read_log(path: str | Path) -> list[WitnessCertificate]:
    with open(path) as fh:
        return [WitnessCertificate.from_json(line) for line in fh if line.strip()]


def recheck_log(path: str | Path, curve: CurveOverK | None = None) -> list[tuple[int, str]]:
    """Re-validate every certificate in a log; returns (line number, problem) pairs."""
    problems = []
    last_p = None
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                cert = WitnessCertificate.from_json(line)
            except (ValueError, KeyError) as exc:
                problems.append((lineno, f"unparseable: {exc}"))
                continue
            if cert.method == "exceptional" and curve is None:
                curve = load_curve()
            if last_p is not None and cert.p <= last_p:
                problems.append((lineno, f"p={cert.p} out of order or duplicated"))
            last_p = cert.p
            problems += [(lineno, f"p={cert.p}: {msg}") for msg in verify_certificate(cert, curve)]
    return problems
