import pytest

from wfr.harness import synth_corpus


@pytest.fixture(scope="session")
def sigma4_mib():
    """1 MiB uniform synthetic corpus over byte values 0..3, built once per session."""
    return synth_corpus(4, 1_048_576, seed=1)
