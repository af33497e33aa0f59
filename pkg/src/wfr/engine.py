"""Weak-factor-recognition exact string search.

The engine finds every (possibly overlapping) occurrence of a byte pattern
``x`` of length ``m`` in a byte text ``y`` of length ``n``. Preprocessing
hashes all ``m*(m+1)/2`` nonempty factors (contiguous substrings) of the
pattern into a :class:`~wfr.bitvector.FactorFilter`: if ``z`` is a factor of
``x`` then the bit at ``hash_factor(z)`` is set. The converse need not hold,
so the filter recognizes a superset of the factor set: false positives are
possible, false negatives are not.

Searching slides a window of size ``m`` over the text. At each alignment the
window is scanned right to left while the hash of the growing suffix keeps
testing positive in the filter. A scan that fails at cursor position ``c``
proves that ``y[c..j]`` is not a factor of the pattern, so no occurrence can
start at or before ``c`` within the window and the window jumps past it. A
scan that survives all ``m`` characters triggers a direct byte-by-byte
verification. After a verification the window advances by a single character,
which is what makes the worst case (e.g. ``a^m`` in ``a^n``) cost O(n*m).

The suffix hash is built incrementally: folding one more character ``c`` on
the left of a suffix with hash ``v`` costs one shift-add,
``((v << shift_s) + c) mod 2**alpha``. The chained variant (``k > 1``) folds
``k`` characters between consecutive filter tests instead of one, trading
slightly shorter shifts for fewer table probes; the hash stream itself is
identical, so no occurrence can be missed for any ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitvector import FactorFilter, FilterParams
from .errors import ConfigurationError, InvalidPatternError

DEFAULT_PARAMS = FilterParams()

K_MIN = 1
K_MAX = 4


@dataclass
class SearchOutcome:
    """Occurrence positions plus exact instrumentation of one search run.

    positions: strictly increasing start indices of all occurrences.
    verification_count: number of byte-by-byte window verifications.
    attempt_count: number of window alignments opened.
    total_shift: sum of window advances in bytes, including the final
        advance that moves the window past the end of the text.
    check_comparisons: total byte comparisons spent in verifications.
    """

    positions: list[int] = field(default_factory=list)
    verification_count: int = 0
    attempt_count: int = 0
    total_shift: int = 0
    check_comparisons: int = 0

    @property
    def occurrence_count(self) -> int:
        return len(self.positions)

    @property
    def false_positive_count(self) -> int:
        """Verifications that did not yield an occurrence."""
        return self.verification_count - len(self.positions)

    @property
    def mean_shift(self) -> float:
        """Average window advance in bytes, 0.0 if no attempt was made."""
        if self.attempt_count == 0:
            return 0.0
        return self.total_shift / self.attempt_count


def hash_factor(z: bytes, params: FilterParams = DEFAULT_PARAMS) -> int:
    """Hash a byte sequence to an integer in ``[0, 2**alpha)``.

    The empty sequence hashes to 0 and
    ``hash_factor(z) == ((hash_factor(z[1:]) << shift_s) + z[0]) mod 2**alpha``.
    """
    s = params.shift_s
    mask = params.hash_mask
    v = 0
    for c in reversed(z):
        v = ((v << s) + c) & mask
    return v


def extend_hash(v: int, c: int, params: FilterParams = DEFAULT_PARAMS) -> int:
    """Fold byte ``c`` onto the left end of a sequence with hash ``v``.

    ``extend_hash(hash_factor(z), c) == hash_factor(bytes([c]) + z)``.
    """
    return ((v << params.shift_s) + c) & params.hash_mask


def preprocess(pattern: bytes, params: FilterParams = DEFAULT_PARAMS) -> FactorFilter:
    """Build the factor filter of ``pattern``: every nonempty factor's hash bit set.

    Costs O(m^2) time and ``2**alpha`` bits of space. The returned filter can
    be reused across any number of searches for the same pattern.
    """
    m = len(pattern)
    if m == 0:
        raise InvalidPatternError("pattern must be at least one byte")
    flt = FactorFilter(params)
    words = flt.words
    wshift = flt._word_shift
    wmask = flt._word_mask
    s = params.shift_s
    mask = params.hash_mask
    for i in range(m - 1, -1, -1):
        v = 0
        for j in range(i, -1, -1):
            v = ((v << s) + pattern[j]) & mask
            words[v >> wshift] |= 1 << (v & wmask)
    return flt


def _match_len(x: bytes, y: bytes, i: int) -> int:
    """Length of the longest common prefix of ``x`` and ``y[i:]``, capped at len(x)."""
    t = 0
    m = len(x)
    while t < m and x[t] == y[i + t]:
        t += 1
    return t


def check(pattern: bytes, text: bytes, i: int) -> bool:
    """True iff ``pattern`` occurs in ``text`` at start index ``i``.

    Performs at most ``len(pattern)`` byte comparisons.
    """
    m = len(pattern)
    if m == 0:
        raise InvalidPatternError("pattern must be at least one byte")
    if i < 0 or i + m > len(text):
        raise ValueError(f"alignment {i} out of range for n={len(text)}, m={m}")
    return _match_len(pattern, text, i) == m


def search(
    pattern: bytes,
    text: bytes,
    params: FilterParams | None = None,
    k: int = 1,
    factors: FactorFilter | None = None,
) -> SearchOutcome:
    """Find all occurrences of ``pattern`` in ``text``.

    ``k`` is the chained-loop width: the filter is probed once per ``k``
    characters folded into the window hash (``k == 1`` probes after every
    character). ``factors`` may carry a prebuilt filter from
    :func:`preprocess` to amortize preprocessing across texts; its params
    then govern the run, and a conflicting ``params`` argument is rejected.

    Returns a :class:`SearchOutcome`; if ``m > n`` the outcome is empty with
    zero attempts. Raises :class:`InvalidPatternError` for an empty pattern
    and :class:`ConfigurationError` for ``k`` outside ``[1, 4]`` or ``k > m``.
    """
    m = len(pattern)
    if m == 0:
        raise InvalidPatternError("pattern must be at least one byte")
    if factors is not None:
        if params is not None and params != factors.params:
            raise ConfigurationError("params conflict with the prebuilt filter's params")
        params = factors.params
    elif params is None:
        params = DEFAULT_PARAMS
    if not K_MIN <= k <= K_MAX:
        raise ConfigurationError(f"k must be in [{K_MIN}, {K_MAX}], got {k}")
    if k > m:
        raise ConfigurationError(f"k={k} exceeds pattern length m={m}")

    outcome = SearchOutcome()
    n = len(text)
    if m > n:
        return outcome
    if factors is None:
        factors = preprocess(pattern, params)

    # Hot loop: everything bound to locals, bit test inlined.
    words = factors.words
    wshift = factors._word_shift
    wmask = factors._word_mask
    s = params.shift_s
    hmask = params.hash_mask
    x = pattern
    y = text
    positions = outcome.positions
    verifications = 0
    attempts = 0
    shifts = 0
    comparisons = 0

    j = m - 1
    if k == 1:
        while j < n:
            attempts += 1
            i = j - m + 1
            cursor = j
            v = y[j]
            while cursor > i and words[v >> wshift] & (1 << (v & wmask)):
                cursor -= 1
                v = ((v << s) + y[cursor]) & hmask
            if cursor == i and words[v >> wshift] & (1 << (v & wmask)):
                verifications += 1
                t = _match_len(x, y, i)
                comparisons += t if t == m else t + 1
                if t == m:
                    positions.append(i)
            j = cursor + m
            shifts += cursor + 1 - i
    else:
        while j < n:
            attempts += 1
            i = j - m + 1
            # First group of k characters is folded before any filter probe.
            cursor = j + 1
            stop = cursor - k
            v = 0
            while cursor > stop:
                cursor -= 1
                v = ((v << s) + y[cursor]) & hmask
            if words[v >> wshift] & (1 << (v & wmask)):
                remaining = m - k
                while remaining:
                    if remaining >= k:
                        stop = cursor - k
                        remaining -= k
                    else:
                        stop = cursor - remaining
                        remaining = 0
                    while cursor > stop:
                        cursor -= 1
                        v = ((v << s) + y[cursor]) & hmask
                    if not words[v >> wshift] & (1 << (v & wmask)):
                        break
                else:
                    verifications += 1
                    t = _match_len(x, y, i)
                    comparisons += t if t == m else t + 1
                    if t == m:
                        positions.append(i)
            j = cursor + m
            shifts += cursor + 1 - i

    outcome.verification_count = verifications
    outcome.attempt_count = attempts
    outcome.total_shift = shifts
    outcome.check_comparisons = comparisons
    return outcome
