"""Factor analysis: Parikh vectors, abelian complexity, zero envelopes, balance.

Scanning an infinite word can only ever look at finite covering strings, so
every operation here takes an explicit source strategy saying *which* strings
are scanned and why that is enough:

* ``ExplicitPrefix(length)`` -- scan one prefix, no completeness claim;
* ``MorphicCover(power)``    -- for a fixed point of a uniform morphism of
  width L, scan the power-fold images of all length-2 factors; this provably
  sees every factor of length <= L**power;
* ``StabilizedDoubling(initial_length, max_length)`` -- scan a prefix,
  double it until the answer stops changing across a doubling, and fail
  loudly if the cap is reached first.

All scans are numpy passes over letter-count prefix sums; nothing here
depends on floating point.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

import numpy as np

from .words import (
    ConfigurationError,
    FiniteWord,
    MorphicFixedPoint,
    WordGenerator,
)

__all__ = [
    "StabilizationError",
    "FactorNotFoundError",
    "ParikhVector",
    "ZeroEnvelope",
    "DeltaStats",
    "WelldocReport",
    "ExplicitPrefix",
    "MorphicCover",
    "StabilizedDoubling",
    "default_source",
    "parikh",
    "parikh_set",
    "parikh_set_table",
    "abelian_complexity",
    "zero_envelope",
    "zero_envelope_table",
    "pf_delta_stats",
    "is_balanced",
    "welldoc_check",
]


class StabilizationError(RuntimeError):
    """Doubling reached its cap without two consecutive scans agreeing."""


class FactorNotFoundError(ValueError):
    """A word claimed to be a factor was never seen within the scan budget."""


class ParikhVector(tuple):
    """Per-letter occurrence counts of a factor; length is the sum of counts."""

    def __new__(cls, counts: Iterable[int]):
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValueError("counts must be nonnegative")
        return super().__new__(cls, counts)

    @property
    def length(self) -> int:
        return sum(self)

    def dot(self, weights: Sequence[int]) -> int:
        if len(weights) != len(self):
            raise ValueError("weights length does not match alphabet size")
        return sum(c * w for c, w in zip(self, weights))

    def __repr__(self) -> str:
        return f"ParikhVector{tuple(self)!r}"


def parikh(w: FiniteWord) -> ParikhVector:
    """Exact letter counts of w, indexed by letter."""
    counts = [0] * w.alphabet_size
    for s in w.symbols:
        counts[s] += 1
    return ParikhVector(counts)


@dataclass(frozen=True)
class ZeroEnvelope:
    """Minimum and maximum zero counts over the length-n factors of a binary word."""

    length: int
    z_min: int
    z_max: int

    def __post_init__(self):
        if not 0 <= self.z_min <= self.z_max <= self.length:
            raise ValueError("envelope out of range")


@dataclass(frozen=True)
class DeltaStats:
    """Zero-minus-one count statistics over length-n paperfolding factors."""

    max_delta: int
    delta_set: frozenset


@dataclass(frozen=True)
class WelldocReport:
    complete: bool
    residues_found: frozenset
    occurrences: int


# ---------------------------------------------------------------------------
# Factor sources
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitPrefix:
    length: int


@dataclass(frozen=True)
class MorphicCover:
    power: int


@dataclass(frozen=True)
class StabilizedDoubling:
    initial_length: int | None = None  # None: 64 * (largest window length)
    max_length: int = 2**20


FactorSource = ExplicitPrefix | MorphicCover | StabilizedDoubling

_PHI_SHORT_SCAN = 10_000  # prefix scanned to discover the length-2 factors

# Read-only per-generator caches; keys die with their generators.
_COVER_CACHE: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()
_ENVELOPE_CACHE: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()

R = TypeVar("R")


def default_source(g: WordGenerator, n: int) -> FactorSource:
    """The source a command should use when the caller does not care."""
    if isinstance(g, MorphicFixedPoint) and g.morphism.uniform_length:
        ell = g.morphism.uniform_length
        t = 1
        while ell**t < n:
            t += 1
        return MorphicCover(t)
    return StabilizedDoubling()


def _morphic_cover_strings(g: MorphicFixedPoint, power: int) -> list[np.ndarray]:
    per_gen = _COVER_CACHE.setdefault(g, {})
    if power in per_gen:
        return per_gen[power]
    m = g.morphism
    if not m.uniform_length:
        raise ConfigurationError("MorphicCover needs a uniform morphism")
    prefix = g.prefix_array(_PHI_SHORT_SCAN)
    pairs = sorted(set(zip(prefix[:-1].tolist(), prefix[1:].tolist())))
    strings = [m.power_array(np.array(p, dtype=np.uint8), power) for p in pairs]
    for s in strings:
        s.setflags(write=False)
    per_gen[power] = strings
    return strings


def _scan_source(
    g: WordGenerator,
    n_max: int,
    src: FactorSource,
    scan: Callable[[list[np.ndarray]], R],
) -> R:
    """Run a scan function over the covering strings demanded by src.

    For StabilizedDoubling the scan result must support ==; the result is
    accepted once it is unchanged across a doubling of the scanned prefix.
    """
    if n_max < 1:
        raise ValueError("window length must be >= 1")
    if isinstance(src, ExplicitPrefix):
        if src.length < n_max:
            raise ValueError("explicit prefix shorter than the window")
        return scan([g.prefix_array(src.length)])
    if isinstance(src, MorphicCover):
        if not isinstance(g, MorphicFixedPoint):
            raise ConfigurationError("MorphicCover only applies to morphic fixed points")
        ell = g.morphism.uniform_length
        if ell is None:
            raise ConfigurationError("MorphicCover needs a uniform morphism")
        if n_max > ell**src.power:
            raise ValueError(
                f"windows of length {n_max} are not covered by power {src.power}"
            )
        return scan(_morphic_cover_strings(g, src.power))
    if isinstance(src, StabilizedDoubling):
        length = src.initial_length if src.initial_length else 64 * n_max
        length = max(length, n_max)
        if 2 * length > src.max_length:
            raise StabilizationError(
                f"initial length {length} leaves no doubling below the cap "
                f"{src.max_length}"
            )
        previous = scan([g.prefix_array(length)])
        while 2 * length <= src.max_length:
            length *= 2
            current = scan([g.prefix_array(length)])
            if current == previous:
                return current
            previous = current
        raise StabilizationError(
            f"no stabilization for windows of length {n_max} below prefix cap "
            f"{src.max_length}"
        )
    raise TypeError(f"unknown factor source {src!r}")


# ---------------------------------------------------------------------------
# Window scans (numpy kernels)
# ---------------------------------------------------------------------------

def _count_prefix_sums(arr: np.ndarray, letter: int) -> np.ndarray:
    out = np.zeros(len(arr) + 1, dtype=np.int32)
    np.cumsum(arr == letter, out=out[1:])
    return out


def _distinct_zero_counts(strings: list[np.ndarray], n: int) -> tuple[int, ...]:
    seen = np.zeros(n + 1, dtype=bool)
    for arr in strings:
        if len(arr) < n:
            continue
        z = _count_prefix_sums(arr, 0)
        seen[z[n:] - z[:-n]] = True
    return tuple(np.flatnonzero(seen).tolist())


def _distinct_pair_counts(strings: list[np.ndarray], n: int) -> tuple[tuple[int, int], ...]:
    # Distinct (count of letter 1, count of letter 2) pairs over all windows.
    pairs: set[tuple[int, int]] = set()
    for arr in strings:
        if len(arr) < n:
            continue
        c1 = _count_prefix_sums(arr, 1)
        c2 = _count_prefix_sums(arr, 2)
        d1 = c1[n:] - c1[:-n]
        d2 = c2[n:] - c2[:-n]
        lo1 = int(d1.min())
        spread = int(d1.max()) - lo1
        # Scatter on (ones-count offset, twos-count) codes; the ones counts
        # of a fixed window length sit in a narrow band, so the code table
        # stays small even for long windows.
        codes = (d1 - lo1) * np.int32(n + 1) + d2
        seen = np.zeros((spread + 1) * (n + 1), dtype=bool)
        seen[codes] = True
        for c in np.flatnonzero(seen):
            pairs.add((int(c) // (n + 1) + lo1, int(c) % (n + 1)))
    return tuple(sorted(pairs))


def _sorted_parikhs(g: WordGenerator, distinct, n: int) -> tuple[ParikhVector, ...]:
    if g.alphabet_size == 2:
        vecs = [ParikhVector((z, n - z)) for z in distinct]
    else:
        vecs = [ParikhVector((n - c1 - c2, c1, c2)) for c1, c2 in distinct]
    return tuple(sorted(vecs))


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def parikh_set(g: WordGenerator, n: int, src: FactorSource | None = None):
    """All Parikh vectors of length-n factors discoverable under src.

    Returns a lexicographically sorted tuple of ParikhVector so comparisons
    and serialized output are deterministic.
    """
    if src is None:
        src = default_source(g, n)
    if g.alphabet_size == 2:
        scan = lambda strings: _distinct_zero_counts(strings, n)
    elif g.alphabet_size == 3:
        scan = lambda strings: _distinct_pair_counts(strings, n)
    else:
        raise ValueError("only alphabets of size 2 and 3 are supported")
    return _sorted_parikhs(g, _scan_source(g, n, src, scan), n)


def parikh_set_table(g: WordGenerator, n_max: int, src: FactorSource | None = None):
    """parikh_set for every n in 1..n_max, stabilized jointly.

    Under StabilizedDoubling the *whole table* must be unchanged across a
    doubling, so one scan budget covers the full sweep.  Returns a list
    indexed by n-1.
    """
    if src is None:
        src = default_source(g, n_max)
    if g.alphabet_size == 2:
        scan = lambda strings: tuple(
            _distinct_zero_counts(strings, n) for n in range(1, n_max + 1)
        )
    elif g.alphabet_size == 3:
        scan = lambda strings: tuple(
            _distinct_pair_counts(strings, n) for n in range(1, n_max + 1)
        )
    else:
        raise ValueError("only alphabets of size 2 and 3 are supported")
    table = _scan_source(g, n_max, src, scan)
    return [_sorted_parikhs(g, row, n) for n, row in enumerate(table, start=1)]


def abelian_complexity(g: WordGenerator, n: int, src: FactorSource | None = None) -> int:
    """Number of distinct Parikh vectors among length-n factors."""
    return len(parikh_set(g, n, src))


def _envelope_scan(strings: list[np.ndarray], n: int) -> tuple[int, int]:
    z_min, z_max = None, None
    for arr in strings:
        if len(arr) < n:
            continue
        z = _count_prefix_sums(arr, 0)
        d = z[n:] - z[:-n]
        lo, hi = int(d.min()), int(d.max())
        z_min = lo if z_min is None else min(z_min, lo)
        z_max = hi if z_max is None else max(z_max, hi)
    if z_min is None:
        raise ValueError("no covering string long enough for the window")
    return z_min, z_max


def zero_envelope(g: WordGenerator, n: int, src: FactorSource | None = None) -> ZeroEnvelope:
    """Min and max zero counts over length-n factors of a binary word."""
    if g.alphabet_size != 2:
        raise ValueError("zero envelopes are defined for binary words")
    if src is None:
        src = default_source(g, n)
    z_min, z_max = _scan_source(g, n, src, lambda s: _envelope_scan(s, n))
    return ZeroEnvelope(n, z_min, z_max)


def zero_envelope_table(
    g: WordGenerator, n_max: int, src: FactorSource | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """(z_min, z_max) arrays for every window length 1..n_max (index n-1).

    The table form exists because downstream representability sweeps need
    every length at once and the covering strings dominate the cost; it is
    stabilized jointly under StabilizedDoubling.  Tables are cached per
    (generator, source) grow-only, so repeated sweeps share one scan.
    """
    if g.alphabet_size != 2:
        raise ValueError("zero envelopes are defined for binary words")
    if src is None:
        src = default_source(g, n_max)

    per_gen = _ENVELOPE_CACHE.setdefault(g, {})
    cached = per_gen.get(src)
    if cached is not None and cached[0] >= n_max:
        return cached[1][:n_max], cached[2][:n_max]

    def scan(strings: list[np.ndarray]):
        zs = [_count_prefix_sums(arr, 0) for arr in strings]
        mins = np.empty(n_max, dtype=np.int64)
        maxs = np.empty(n_max, dtype=np.int64)
        for n in range(1, n_max + 1):
            lo, hi = None, None
            for z in zs:
                if len(z) - 1 < n:
                    continue
                d = z[n:] - z[:-n]
                m, M = int(d.min()), int(d.max())
                lo = m if lo is None else min(lo, m)
                hi = M if hi is None else max(hi, M)
            if lo is None:
                raise ValueError(f"no covering string long enough for n={n}")
            mins[n - 1], maxs[n - 1] = lo, hi
        return mins.tobytes(), maxs.tobytes()

    mins_b, maxs_b = _scan_source(g, n_max, src, scan)
    z_min = np.frombuffer(mins_b, dtype=np.int64).copy()
    z_max = np.frombuffer(maxs_b, dtype=np.int64).copy()
    z_min.setflags(write=False)
    z_max.setflags(write=False)
    per_gen[src] = (n_max, z_min, z_max)
    return z_min, z_max


def pf_delta_stats(n: int, src: FactorSource | None = None) -> DeltaStats:
    """Range of zeros-minus-ones over length-n paperfolding factors."""
    from .words import WORDS

    zset = parikh_set(WORDS["pf"], n, src)
    deltas = frozenset(v[0] - v[1] for v in zset)
    return DeltaStats(max(deltas), deltas)


def is_balanced(
    g: WordGenerator, max_len: int, c: int = 1, src: FactorSource | None = None
) -> bool:
    """True if per-letter counts of equal-length factors spread at most c apart,
    for every length up to max_len."""
    table = parikh_set_table(g, max_len, src)
    for row in table:
        for letter in range(g.alphabet_size):
            values = [v[letter] for v in row]
            if max(values) - min(values) > c:
                return False
    return True


def welldoc_check(
    g: WordGenerator, w: FiniteWord, modulus: int, scan_limit: int
) -> WelldocReport:
    """Scan occurrences g = u w v with |u| < scan_limit and collect the
    per-letter counts of u mod ``modulus``; complete when every residue
    vector in (Z/m)^k has been seen."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if w.alphabet_size != g.alphabet_size:
        raise ValueError("alphabet mismatch between factor and word")
    k = g.alphabet_size
    pattern = w.to_array()
    text = g.prefix_array(scan_limit + len(pattern))
    hits = np.flatnonzero(
        np.all(
            np.lib.stride_tricks.sliding_window_view(text, len(pattern)) == pattern,
            axis=1,
        )
    )
    hits = hits[hits < scan_limit]
    if len(hits) == 0:
        raise FactorNotFoundError(
            f"{w} not found in the first {scan_limit} positions"
        )
    sums = [_count_prefix_sums(text, letter) for letter in range(k)]
    residues = {
        tuple(int(sums[letter][p]) % modulus for letter in range(k)) for p in hits
    }
    return WelldocReport(
        complete=len(residues) == modulus**k,
        residues_found=frozenset(residues),
        occurrences=len(hits),
    )
