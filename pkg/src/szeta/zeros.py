"""Ingestion and indexing of zeta-zero ordinate files.

A zero file is ASCII, one ordinate per line in ascending order, '#' lines
and blank lines ignored, optionally with a leading index column (detected
from the first data line and then required throughout).  Ordinates must
carry at least six decimal places; anything else is rejected rather than
silently degraded, since downstream quadrature trusts these positions.
This module never computes zeros, it only reads, checks, and serves them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .special import riemann_siegel_theta

__all__ = [
    "ZeroCatalog",
    "ZeroFileError",
    "ZeroFileParseError",
    "ZeroFileFormatError",
    "ZeroFileOrderError",
    "ZeroFileEmptyError",
    "ZeroFileValidationError",
    "CoverageError",
    "ingest_zeros",
    "serialize_zeros",
    "count_zeros_below",
    "select_anchor",
]

FIRST_ZERO = 14.134725

# Per-zero tolerance on the centered counting residual
#   k - 1/2 - (theta(g_k)/pi + 1),
# which equals S(g_k) averaged across its unit jump.  Genuine data below
# t = 7e4 reaches +-1.11 at its worst excursions, so the per-point bound
# alone cannot prove indices are aligned; the mean checks below do that,
# since a displaced index moves every later residual by a full unit.
THETA_RESIDUAL_TOLERANCE = 1.25
THETA_RESIDUAL_MEAN_TOLERANCE = 0.25
THETA_RESIDUAL_WINDOW = 25
THETA_RESIDUAL_WINDOW_TOLERANCE = 0.8
THETA_RESIDUAL_TAIL = 10
THETA_RESIDUAL_TAIL_TOLERANCE = 0.5

_ORDINATE_RE = re.compile(r"^[+-]?\d+\.\d{6,}$")


class ZeroFileError(ValueError):
    """Any problem with a zero ordinate file."""

    def __init__(self, message: str, path=None, line_no: int | None = None):
        loc = f"{path or '<file>'}"
        if line_no is not None:
            loc += f":{line_no}"
        super().__init__(f"{loc}: {message}")
        self.path = path
        self.line_no = line_no


class ZeroFileParseError(ZeroFileError):
    """Line is not a readable ordinate (or index + ordinate) record."""


class ZeroFileFormatError(ZeroFileError):
    """Ordinate readable but malformed: too few decimals, bad range."""


class ZeroFileOrderError(ZeroFileError):
    """Ordinates not strictly increasing."""


class ZeroFileEmptyError(ZeroFileError):
    """No data lines at all."""


class ZeroFileValidationError(ZeroFileError):
    """Data inconsistent with the counting function (corrupt file)."""


class CoverageError(ValueError):
    """Query beyond the height range the catalog covers."""


@dataclass(frozen=True)
class ZeroCatalog:
    """Sorted zero ordinates plus provenance.

    gammas is the full strictly-increasing float64 array; coverage is the
    largest ordinate, the height up to which counting queries are valid.
    """

    gammas: np.ndarray
    path: str | None = None

    def __post_init__(self):
        if len(self.gammas) == 0:
            raise ValueError("empty catalog")
        self.gammas.setflags(write=False)

    @property
    def count(self) -> int:
        return len(self.gammas)

    @property
    def coverage(self) -> float:
        return float(self.gammas[-1])


def _parse_line(raw: str, expect_index: bool | None, path, line_no: int):
    tokens = raw.split()
    if expect_index is None:
        expect_index = len(tokens) == 2
    if len(tokens) != (2 if expect_index else 1):
        raise ZeroFileParseError(
            f"expected {'index + ordinate' if expect_index else 'one ordinate'}, "
            f"got {len(tokens)} fields",
            path,
            line_no,
        )
    if expect_index and not re.fullmatch(r"[+-]?\d+", tokens[0]):
        raise ZeroFileParseError(f"leading index field {tokens[0]!r} is not an integer", path, line_no)
    ordinate = tokens[-1]
    if not _ORDINATE_RE.match(ordinate):
        if re.fullmatch(r"[+-]?[\d.eE+-]+", ordinate) and "." in ordinate:
            raise ZeroFileFormatError(
                f"ordinate {ordinate!r} has fewer than 6 decimal places", path, line_no
            )
        raise ZeroFileParseError(f"unreadable ordinate {ordinate!r}", path, line_no)
    return float(ordinate), expect_index


def ingest_zeros(
    path,
    validate: bool = True,
    theta_tolerance: float = THETA_RESIDUAL_TOLERANCE,
    validation_sample: int = 1000,
) -> ZeroCatalog:
    """Read, parse, and cross-check a zero ordinate file.

    Validation samples up to `validation_sample` evenly spread indices and
    checks the centered theta-counting residual per zero and in the mean;
    an inserted, deleted, or displaced line shifts the residual tail by a
    full unit and fails one of the two checks.

    Args:
        path: file to read.
        validate: run the counting cross-check (recommended).
        theta_tolerance: per-zero residual bound.
        validation_sample: number of sampled indices.

    Returns:
        a ZeroCatalog.

    Raises:
        ZeroFileError subclasses on malformed or inconsistent files.
    """
    path = Path(path)
    values: list[float] = []
    expect_index: bool | None = None
    try:
        with open(path, "r", encoding="ascii") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                value, expect_index = _parse_line(line, expect_index, path, line_no)
                values.append(value)
    except UnicodeDecodeError as exc:
        raise ZeroFileParseError(f"not an ASCII text file ({exc.reason})", path) from exc
    if not values:
        raise ZeroFileEmptyError("no zero ordinates found", path)
    gammas = np.asarray(values, dtype=np.float64)
    if gammas[0] < FIRST_ZERO - 1e-6:
        raise ZeroFileFormatError(
            f"first ordinate {gammas[0]} is below the lowest zeta zero", path
        )
    steps = np.diff(gammas)
    if np.any(steps <= 0):
        bad = int(np.nonzero(steps <= 0)[0][0])
        raise ZeroFileOrderError(
            f"ordinates not strictly increasing at index {bad + 1} "
            f"({gammas[bad]} -> {gammas[bad + 1]})",
            path,
        )
    catalog = ZeroCatalog(gammas=gammas, path=str(path))
    if validate:
        _validate_against_counting(catalog, theta_tolerance, validation_sample)
    return catalog


def _validate_against_counting(catalog: ZeroCatalog, tolerance: float, sample: int):
    n = catalog.count
    idx = np.unique(np.linspace(0, n - 1, min(n, sample)).round().astype(np.int64))
    g = catalog.gammas[idx]
    residual = (idx + 1) - 0.5 - (riemann_siegel_theta(g) / np.pi + 1.0)
    worst = int(np.argmax(np.abs(residual)))
    if abs(residual[worst]) > tolerance:
        raise ZeroFileValidationError(
            f"counting residual {residual[worst]:+.3f} at zero #{idx[worst] + 1} "
            f"exceeds {tolerance} (corrupt or misindexed data)",
            catalog.path,
        )
    mean = float(residual.mean())
    if abs(mean) > THETA_RESIDUAL_MEAN_TOLERANCE:
        raise ZeroFileValidationError(
            f"mean counting residual {mean:+.3f} is biased (shifted data)", catalog.path
        )
    # A shift confined to one stretch of the file barely moves the global
    # mean; windowed means over the sample expose it wherever it starts.
    w = THETA_RESIDUAL_WINDOW
    if len(residual) >= w:
        windowed = np.convolve(residual, np.ones(w) / w, mode="valid")
        peak = int(np.argmax(np.abs(windowed)))
        if abs(windowed[peak]) > THETA_RESIDUAL_WINDOW_TOLERANCE:
            raise ZeroFileValidationError(
                f"counting residual averages {windowed[peak]:+.3f} around zero "
                f"#{idx[min(peak + w // 2, len(idx) - 1)] + 1} (locally shifted data)",
                catalog.path,
            )
    # A shift near the end of the file escapes both checks above, but it
    # always displaces the final residuals; their mean stays near 0 on
    # genuine data and lands near a whole unit after any unrepaired shift.
    if len(residual) > THETA_RESIDUAL_TAIL:
        tail = float(residual[-THETA_RESIDUAL_TAIL :].mean())
        if abs(tail) > THETA_RESIDUAL_TAIL_TOLERANCE:
            raise ZeroFileValidationError(
                f"counting residual averages {tail:+.3f} over the last "
                f"{THETA_RESIDUAL_TAIL} sampled zeros (shifted near end of file)",
                catalog.path,
            )


def serialize_zeros(catalog: ZeroCatalog, path) -> None:
    """Write ordinates so that ingest(serialize(c)) reproduces c.gammas.

    Uses the shortest round-trip decimal form, zero-padded to nine
    decimal places when shorter, so the file also satisfies the
    six-decimal ingestion rule.
    """
    path = Path(path)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# {catalog.count} zeta zero ordinates\n")
        for g in catalog.gammas:
            text = repr(float(g))
            frac = text.partition(".")[2]
            if "e" in text or "E" in text or len(frac) < 9:
                text = f"{g:.9f}"
            fh.write(text + "\n")


def count_zeros_below(catalog: ZeroCatalog, t: float) -> int:
    """N(t): zeros with ordinate <= t (ties count, per the gamma <= t rule).

    Args:
        catalog: zero data.
        t: height with 0 <= t <= catalog.coverage.
    """
    if t < 0.0:
        raise CoverageError(f"negative height {t}")
    if t > catalog.coverage:
        raise CoverageError(
            f"height {t} beyond catalog coverage {catalog.coverage:.6f}"
        )
    return int(np.searchsorted(catalog.gammas, t, side="right"))


def select_anchor(catalog: ZeroCatalog, cutoff: float) -> float:
    """The largest zero ordinate strictly below `cutoff`.

    Args:
        catalog: zero data; cutoff must not exceed its coverage, else the
            answer could be wrong rather than merely missing.
        cutoff: height bound, must exceed the first zero.

    Returns:
        the anchor ordinate as stored.
    """
    if cutoff > catalog.coverage:
        raise CoverageError(
            f"cutoff {cutoff} beyond catalog coverage {catalog.coverage:.6f}"
        )
    idx = int(np.searchsorted(catalog.gammas, cutoff, side="left")) - 1
    if idx < 0:
        raise CoverageError(f"no zero below cutoff {cutoff}")
    return float(catalog.gammas[idx])
