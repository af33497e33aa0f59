"""Command line entry point: search, bench, and stats subcommands.

Exit codes: 0 success, 1 no match (search only), 2 usage or configuration
error, 3 I/O error.
"""

from __future__ import annotations

import functools
import os
import sys

import click

from .bitvector import FilterParams
from .errors import ConfigurationError, CorrectnessViolation, InvalidPatternError
from .harness import (
    BenchConfig,
    DEFAULT_PATTERN_LENGTHS,
    emit_table,
    load_corpus,
    make_algorithm,
    run_benchmark,
    synth_corpus,
    verification_stats,
)

EXIT_NO_MATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

ALPHA_ENV = "WFR_DEFAULT_ALPHA"


def _mapped_errors(fn):
    """Map library errors to the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ConfigurationError, InvalidPatternError, CorrectnessViolation) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_IO)

    return wrapper


def _resolve_alpha(alpha: int | None) -> int:
    """Flag value if given, else WFR_DEFAULT_ALPHA from the environment, else 16."""
    if alpha is not None:
        return alpha
    raw = os.environ.get(ALPHA_ENV)
    if raw is None:
        return 16
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{ALPHA_ENV} must be an integer, got {raw!r}") from None


def _read_pattern(pattern: str | None, pattern_file: str | None) -> bytes:
    if (pattern is None) == (pattern_file is None):
        raise ConfigurationError("exactly one of --pattern or --pattern-file is required")
    if pattern is not None:
        return pattern.encode()
    with open(pattern_file, "rb") as fh:
        return fh.read()


def _parse_m_list(raw: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ConfigurationError(f"--m expects comma-separated integers, got {raw!r}") from None
    if not values or any(m < 1 for m in values):
        raise ConfigurationError(f"--m values must be positive, got {raw!r}")
    return values


def _resolve_corpus(text_path: str | None, synth: str | None, seed: int):
    if (text_path is None) == (synth is None):
        raise ConfigurationError("exactly one of --text or --synth is required")
    if text_path is not None:
        return load_corpus(text_path)
    try:
        sigma_part, length_part = synth.split(",")
        sigma, length = int(sigma_part), int(length_part)
    except ValueError:
        raise ConfigurationError(f"--synth expects SIGMA,LENGTH, got {synth!r}") from None
    return synth_corpus(sigma, length, seed)


@click.group()
def main():
    """Exact string search over byte files, with benchmark and stats modes."""


@main.command("search")
@click.argument("text_file", type=click.Path())
@click.option("--pattern", default=None, help="Pattern string (bytes taken verbatim).")
@click.option("--pattern-file", default=None, type=click.Path(), help="Read the pattern from a file (binary-safe).")
@click.option("--algo", type=click.Choice(["wfr", "naive", "horspool"]), default="wfr", help="Algorithm to run.")
@click.option("--k", type=int, default=1, help="Chained-loop width for wfr (1-4).")
@click.option("--alpha", type=int, default=None, help="Hash bit width for wfr (default 16 or WFR_DEFAULT_ALPHA).")
@click.option("--shift", "shift_s", type=int, default=2, help="Hash shift per character for wfr (1 or 2).")
@_mapped_errors
def cmd_search(text_file, pattern, pattern_file, algo, k, alpha, shift_s):
    """Print every occurrence of a pattern in TEXT_FILE, one 0-based byte
    offset per line, then a summary line. Exits 1 when there is no match."""
    needle = _read_pattern(pattern, pattern_file)
    if not needle:
        raise InvalidPatternError("pattern must be at least one byte")
    with open(text_file, "rb") as fh:
        text = fh.read()
    if algo == "wfr":
        if not 1 <= k <= 4:
            raise ConfigurationError(f"k must be in [1, 4], got {k}")
        if k > len(needle):
            raise ConfigurationError(f"k={k} exceeds pattern length m={len(needle)}")
        params = FilterParams(alpha=_resolve_alpha(alpha), shift_s=shift_s)
        algorithm = make_algorithm("wfr" if k == 1 else f"wfr{k}", params.alpha, params.shift_s)
    else:
        algorithm = make_algorithm(algo)
    outcome = algorithm.run(needle, text)
    for position in outcome.positions:
        click.echo(position)
    click.echo(f"occurrences={outcome.occurrence_count} verifications={outcome.verification_count}")
    if outcome.occurrence_count == 0:
        sys.exit(EXIT_NO_MATCH)


@main.command("bench")
@click.option("--text", "text_path", default=None, type=click.Path(), help="Corpus file (raw bytes).")
@click.option("--synth", default=None, metavar="SIGMA,LENGTH", help="Synthetic corpus instead of a file.")
@click.option("--m", "m_spec", default=",".join(str(m) for m in DEFAULT_PATTERN_LENGTHS), show_default=True, help="Comma-separated pattern lengths.")
@click.option("--runs", type=int, default=50, show_default=True, help="Patterns sampled per length.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for corpus synthesis and pattern sampling.")
@click.option("--algos", default="wfr,naive", show_default=True, help="Comma-separated algorithm names (wfr, wfr2-wfr4, naive, horspool).")
@click.option("--alpha", type=int, default=None, help="Hash bit width for wfr variants.")
@click.option("--shift", "shift_s", type=int, default=2, help="Hash shift per character for wfr variants.")
@click.option("--format", "fmt", type=click.Choice(["csv", "markdown", "json"]), default="markdown", show_default=True, help="Output format.")
@_mapped_errors
def cmd_bench(text_path, synth, m_spec, runs, seed, algos, alpha, shift_s, fmt):
    """Benchmark algorithms over seeded random patterns; timings include
    preprocessing. Means per (algorithm, length) go to standard output."""
    corpus = _resolve_corpus(text_path, synth, seed)
    config = BenchConfig(
        pattern_lengths=_parse_m_list(m_spec),
        runs_per_length=runs,
        seed=seed,
        algorithms=tuple(name.strip() for name in algos.split(",") if name.strip()),
        alpha=_resolve_alpha(alpha),
        shift_s=shift_s,
    )
    click.echo(
        f"corpus={corpus.source} runs={config.runs_per_length} seed={config.seed} "
        f"alpha={config.alpha} shift_s={config.shift_s}",
        err=True,
    )
    rows = run_benchmark(config, corpus)
    click.echo(emit_table(rows, fmt), nl=False)


@main.command("stats")
@click.option("--text", "text_path", default=None, type=click.Path(), help="Corpus file (raw bytes).")
@click.option("--synth", default=None, metavar="SIGMA,LENGTH", help="Synthetic corpus instead of a file.")
@click.option("--m", "m_spec", default=",".join(str(m) for m in DEFAULT_PATTERN_LENGTHS), show_default=True, help="Comma-separated pattern lengths.")
@click.option("--runs", type=int, default=50, show_default=True, help="Patterns sampled per length.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for corpus synthesis and pattern sampling.")
@click.option("--k", type=int, default=1, show_default=True, help="Chained-loop width.")
@click.option("--alpha", type=int, default=None, help="Hash bit width.")
@click.option("--shift", "shift_s", type=int, default=2, help="Hash shift per character.")
@click.option("--format", "fmt", type=click.Choice(["csv", "markdown", "json"]), default="markdown", show_default=True, help="Output format.")
@_mapped_errors
def cmd_stats(text_path, synth, m_spec, runs, seed, k, alpha, shift_s, fmt):
    """Report mean occurrences and verifications per 1,048,576 bytes for
    seeded random patterns of each length."""
    corpus = _resolve_corpus(text_path, synth, seed)
    params = FilterParams(alpha=_resolve_alpha(alpha), shift_s=shift_s)
    click.echo(
        f"corpus={corpus.source} runs={runs} seed={seed} alpha={params.alpha} "
        f"shift_s={params.shift_s} k={k}",
        err=True,
    )
    rows = verification_stats(corpus, _parse_m_list(m_spec), runs, seed, params=params, k=k)
    click.echo(emit_table(rows, fmt), nl=False)


if __name__ == "__main__":
    main()
