"""Benchmark and statistics harness.

Reproduces the classic search-benchmark methodology at desk scale: load or
synthesize a corpus, extract seeded random patterns of each length, time each
registered algorithm over many runs (preprocessing included), cross-check
that all algorithms report identical occurrences, and emit the results as
csv, markdown, or json. A separate statistics mode reports mean occurrences
and mean verifications per 1,048,576 bytes of text, the standard measure of
filter false-positive pressure.

Pattern sampling and statistics are deterministic for a fixed seed; timed
runs execute serially so timings stay honest.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from .baselines import horspool_search, naive_search
from .bitvector import FilterParams
from .engine import SearchOutcome, search
from .errors import ConfigurationError, CorrectnessViolation

MIB = 1_048_576

DEFAULT_PATTERN_LENGTHS = (4, 8, 16, 32, 64, 128, 256, 512, 1024)

ALGORITHM_NAMES = ("wfr", "wfr2", "wfr3", "wfr4", "naive", "horspool")


@dataclass
class Corpus:
    """A text to search: raw bytes plus a label and provenance string."""

    name: str
    data: bytes
    source: str

    def __len__(self) -> int:
        return len(self.data)


def load_corpus(path: str | Path) -> Corpus:
    """Read a corpus file as raw bytes, no transformation.

    I/O failures propagate as OSError; an empty file is rejected."""
    path = Path(path)
    data = path.read_bytes()
    if not data:
        raise ConfigurationError(f"corpus file {path} is empty")
    return Corpus(name=path.name, data=data, source=f"file:{path}")


def synth_corpus(sigma: int, length: int, seed: int) -> Corpus:
    """Generate ``length`` bytes uniform over the first ``sigma`` byte values.

    Deterministic for a fixed seed."""
    if not 2 <= sigma <= 256:
        raise ConfigurationError(f"sigma must be in [2, 256], got {sigma}")
    if length < 1:
        raise ConfigurationError(f"corpus length must be positive, got {length}")
    rng = random.Random(f"corpus:{seed}")
    data = bytes(rng.choices(range(sigma), k=length))
    return Corpus(
        name=f"synth-s{sigma}",
        data=data,
        source=f"synthetic:sigma={sigma},length={length},seed={seed}",
    )


def sample_patterns(corpus: Corpus, m: int, count: int, seed: int) -> list[bytes]:
    """Extract ``count`` patterns of length ``m`` from seeded-uniform start
    offsets of the corpus, sampled with replacement."""
    n = len(corpus.data)
    if m < 1:
        raise ConfigurationError(f"pattern length must be positive, got {m}")
    if m > n:
        raise ConfigurationError(f"pattern length {m} exceeds corpus length {n}")
    rng = random.Random(f"patterns:{seed}:{m}")
    top = n - m
    return [corpus.data[off : off + m] for off in (rng.randint(0, top) for _ in range(count))]


@dataclass(frozen=True)
class Algorithm:
    """A registered search algorithm: stable id plus a runner.

    The runner takes (pattern, text) and returns a SearchOutcome; any
    preprocessing happens inside the runner so that timed runs include it.
    """

    id: str
    run: Callable[[bytes, bytes], SearchOutcome]


def _naive_runner(pattern: bytes, text: bytes) -> SearchOutcome:
    positions = naive_search(pattern, text)
    alignments = max(len(text) - len(pattern) + 1, 0)
    # The oracle verifies every alignment; byte comparisons are not tracked.
    return SearchOutcome(
        positions=positions,
        verification_count=alignments,
        attempt_count=alignments,
        total_shift=alignments,
    )


def make_algorithm(name: str, alpha: int = 16, shift_s: int = 2) -> Algorithm:
    """Resolve a registry name to a runnable Algorithm.

    Names: "wfr" (k=1), "wfr2".."wfr4" (chained), "naive", "horspool".
    ``alpha`` and ``shift_s`` apply to the wfr variants only.
    """
    if name == "naive":
        return Algorithm("naive", _naive_runner)
    if name == "horspool":
        return Algorithm("horspool", horspool_search)
    if name in ("wfr", "wfr2", "wfr3", "wfr4"):
        k = 1 if name == "wfr" else int(name[3:])
        params = FilterParams(alpha=alpha, shift_s=shift_s)

        def run(pattern: bytes, text: bytes, _params=params, _k=k) -> SearchOutcome:
            return search(pattern, text, params=_params, k=_k)

        return Algorithm(name, run)
    raise ConfigurationError(f"unknown algorithm {name!r} (known: {', '.join(ALGORITHM_NAMES)})")


@dataclass
class BenchConfig:
    """Benchmark shape: which lengths, how many runs, which algorithms."""

    pattern_lengths: Sequence[int] = DEFAULT_PATTERN_LENGTHS
    runs_per_length: int = 500
    seed: int = 0
    algorithms: Sequence[str] = ("wfr",)
    alpha: int = 16
    shift_s: int = 2

    def __post_init__(self) -> None:
        if self.runs_per_length < 1:
            raise ConfigurationError(f"runs_per_length must be >= 1, got {self.runs_per_length}")
        if not self.pattern_lengths:
            raise ConfigurationError("pattern_lengths must not be empty")
        if not self.algorithms:
            raise ConfigurationError("algorithms must not be empty")


@dataclass
class BenchCell:
    """Per-(algorithm, m) means over all runs."""

    mean_ms: float
    mean_verifications: float
    mean_occurrences: float
    mean_shift: float


@dataclass
class BenchRow:
    """One benchmark table row: an algorithm with one cell per pattern length."""

    algorithm: str
    cells: dict[int, BenchCell] = field(default_factory=dict)


@dataclass
class StatsRow:
    """Occurrence/verification statistics for one corpus, per pattern length.

    Values are means per run, normalized to a 1,048,576-byte text."""

    corpus: str
    occurrences_per_mib: dict[int, float] = field(default_factory=dict)
    verifications_per_mib: dict[int, float] = field(default_factory=dict)


def time_run(algorithm: Algorithm, pattern: bytes, text: bytes) -> tuple[float, SearchOutcome]:
    """Run once and return (wall-clock seconds including preprocessing, outcome)."""
    start = time.perf_counter()
    outcome = algorithm.run(pattern, text)
    return time.perf_counter() - start, outcome


def run_benchmark(
    config: BenchConfig,
    corpus: Corpus,
    algorithms: Sequence[Algorithm] | None = None,
) -> list[BenchRow]:
    """Time every configured algorithm over seeded patterns of every length.

    All algorithms are cross-checked per pattern: a diverging position list
    aborts the run with CorrectnessViolation. ``algorithms`` may carry
    pre-resolved Algorithm objects, overriding ``config.algorithms``.
    """
    if algorithms is None:
        algorithms = [make_algorithm(name, config.alpha, config.shift_s) for name in config.algorithms]
    n = len(corpus.data)
    for m in config.pattern_lengths:
        if m > n:
            raise ConfigurationError(f"pattern length {m} exceeds corpus length {n}")

    rows = [BenchRow(algorithm=a.id) for a in algorithms]
    for m in config.pattern_lengths:
        patterns = sample_patterns(corpus, m, config.runs_per_length, config.seed)
        sums = [[0.0, 0.0, 0.0, 0.0] for _ in algorithms]
        for pattern in patterns:
            reference: list[int] | None = None
            reference_id = ""
            for idx, algo in enumerate(algorithms):
                seconds, outcome = time_run(algo, pattern, corpus.data)
                if reference is None:
                    reference = outcome.positions
                    reference_id = algo.id
                elif outcome.positions != reference:
                    raise CorrectnessViolation(
                        f"algorithm {algo.id!r} found {len(outcome.positions)} occurrence(s) "
                        f"but {reference_id!r} found {len(reference)} for m={m}, "
                        f"pattern={pattern.hex()[:48]}..."
                    )
                acc = sums[idx]
                acc[0] += seconds
                acc[1] += outcome.verification_count
                acc[2] += outcome.occurrence_count
                acc[3] += outcome.mean_shift
        runs = len(patterns)
        for row, acc in zip(rows, sums):
            row.cells[m] = BenchCell(
                mean_ms=acc[0] / runs * 1000.0,
                mean_verifications=acc[1] / runs,
                mean_occurrences=acc[2] / runs,
                mean_shift=acc[3] / runs,
            )
    return rows


def verification_stats(
    corpus: Corpus,
    m_values: Sequence[int],
    runs: int,
    seed: int,
    params: FilterParams | None = None,
    k: int = 1,
) -> list[StatsRow]:
    """Mean occurrences and verifications per 1,048,576 bytes, per length.

    Counters come from instrumented wfr runs over seeded patterns; raw
    per-run counts are scaled by ``1048576 / len(corpus)``.
    """
    if runs < 1:
        raise ConfigurationError(f"runs must be >= 1, got {runs}")
    if params is None:
        params = FilterParams()
    n = len(corpus.data)
    scale = MIB / n
    row = StatsRow(corpus=corpus.name)
    for m in m_values:
        patterns = sample_patterns(corpus, m, runs, seed)
        total_occ = 0
        total_ver = 0
        for pattern in patterns:
            outcome = search(pattern, corpus.data, params=params, k=k)
            total_occ += outcome.occurrence_count
            total_ver += outcome.verification_count
        row.occurrences_per_mib[m] = total_occ / runs * scale
        row.verifications_per_mib[m] = total_ver / runs * scale
    return [row]


def _emit_bench_csv(rows: Sequence[BenchRow]) -> str:
    lines = ["algo,m,mean_ms,verifications,occurrences,mean_shift"]
    for row in rows:
        for m in sorted(row.cells):
            c = row.cells[m]
            lines.append(
                f"{row.algorithm},{m},{c.mean_ms!r},{c.mean_verifications!r},"
                f"{c.mean_occurrences!r},{c.mean_shift!r}"
            )
    return "\n".join(lines) + "\n"


def _emit_stats_csv(rows: Sequence[StatsRow]) -> str:
    lines = ["corpus,m,occurrences_per_mib,verifications_per_mib"]
    for row in rows:
        for m in sorted(row.occurrences_per_mib):
            lines.append(
                f"{row.corpus},{m},{row.occurrences_per_mib[m]!r},{row.verifications_per_mib[m]!r}"
            )
    return "\n".join(lines) + "\n"


def _markdown_table(m_values: Sequence[int], body: Sequence[tuple[str, list[str]]]) -> str:
    header = ["m"] + [str(m) for m in m_values]
    lines = ["| " + " | ".join(header) + " |", "| " + " | ".join(["---"] * len(header)) + " |"]
    for label, cells in body:
        lines.append("| " + " | ".join([label] + cells) + " |")
    return "\n".join(lines) + "\n"


def _emit_bench_markdown(rows: Sequence[BenchRow]) -> str:
    m_values = sorted({m for row in rows for m in row.cells})
    body = [
        (row.algorithm, [f"{row.cells[m].mean_ms:.3f}" if m in row.cells else "-" for m in m_values])
        for row in rows
    ]
    return _markdown_table(m_values, body)


def _emit_stats_markdown(rows: Sequence[StatsRow]) -> str:
    m_values = sorted({m for row in rows for m in row.occurrences_per_mib})
    body = []
    for row in rows:
        body.append(
            (f"{row.corpus}-occ", [f"{row.occurrences_per_mib[m]:.2f}" for m in m_values])
        )
        body.append(
            (f"{row.corpus}-ver", [f"{row.verifications_per_mib[m]:.2f}" for m in m_values])
        )
    return _markdown_table(m_values, body)


def _emit_bench_json(rows: Sequence[BenchRow]) -> str:
    payload = [
        {
            "algorithm": row.algorithm,
            "cells": [
                {
                    "m": m,
                    "mean_ms": row.cells[m].mean_ms,
                    "mean_verifications": row.cells[m].mean_verifications,
                    "mean_occurrences": row.cells[m].mean_occurrences,
                    "mean_shift": row.cells[m].mean_shift,
                }
                for m in sorted(row.cells)
            ],
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _emit_stats_json(rows: Sequence[StatsRow]) -> str:
    payload = [
        {
            "corpus": row.corpus,
            "cells": [
                {
                    "m": m,
                    "occurrences_per_mib": row.occurrences_per_mib[m],
                    "verifications_per_mib": row.verifications_per_mib[m],
                }
                for m in sorted(row.occurrences_per_mib)
            ],
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def emit_table(rows: Sequence[BenchRow] | Sequence[StatsRow], format: str = "markdown") -> str:
    """Render rows as ``csv``, ``markdown``, or ``json``.

    csv and json carry full float precision; markdown mirrors the classic
    layout with algorithms (or corpus-occ/corpus-ver) as rows and pattern
    lengths as columns. Output is deterministic for identical rows.
    """
    if not rows:
        raise ConfigurationError("no rows to emit")
    is_stats = isinstance(rows[0], StatsRow)
    if format == "csv":
        return _emit_stats_csv(rows) if is_stats else _emit_bench_csv(rows)
    if format == "markdown":
        return _emit_stats_markdown(rows) if is_stats else _emit_bench_markdown(rows)
    if format == "json":
        return _emit_stats_json(rows) if is_stats else _emit_bench_json(rows)
    raise ConfigurationError(f"unknown table format {format!r}")


def rows_from_json(text: str) -> list[BenchRow] | list[StatsRow]:
    """Parse ``emit_table(rows, "json")`` output back into row objects."""
    payload = json.loads(text)
    rows: list = []
    for entry in payload:
        if "algorithm" in entry:
            row = BenchRow(algorithm=entry["algorithm"])
            for cell in entry["cells"]:
                row.cells[cell["m"]] = BenchCell(
                    mean_ms=cell["mean_ms"],
                    mean_verifications=cell["mean_verifications"],
                    mean_occurrences=cell["mean_occurrences"],
                    mean_shift=cell["mean_shift"],
                )
        else:
            row = StatsRow(corpus=entry["corpus"])
            for cell in entry["cells"]:
                row.occurrences_per_mib[cell["m"]] = cell["occurrences_per_mib"]
                row.verifications_per_mib[cell["m"]] = cell["verifications_per_mib"]
        rows.append(row)
    return rows
