"""OEIS b-file serialization, bundled fixtures, and sequence comparison."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .oracle import CountTable

#: Environment variable overriding the b-file cache directory.
CACHE_ENV_VAR = "HYPERWALKS_OEIS_CACHE"

#: Sequence ids with bundled offline fixtures.
FIXTURE_IDS = ("A059231", "A082298", "A085363", "A086871")

_ID_PATTERN = re.compile(r"^A\d{6}$")


class BFileParseError(ValueError):
    """Malformed b-file text; carries the 1-based offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SequenceNotFound(LookupError):
    """No cached, bundled, or fetched b-file is available for the id."""


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) entries with strictly increasing indices."""

    entries: tuple[tuple[int, int], ...]
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        for (i, _), (k, _) in zip(self.entries, self.entries[1:]):
            if k <= i:
                raise ValueError(f"b-file indices must be strictly increasing, got {i} then {k}")

    @property
    def first_index(self) -> int:
        return self.entries[0][0]

    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)


def bfile_parse(text: str) -> BFile:
    """Parse b-file text: "index value" per line, '#' starts a comment."""
    entries: list[tuple[int, int]] = []
    comments: list[str] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", line_number)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", line_number) from None
        if entries and index <= entries[-1][0]:
            raise BFileParseError(
                f"index {index} does not increase past {entries[-1][0]}", line_number
            )
        entries.append((index, value))
    return BFile(tuple(entries), tuple(comments))


def bfile_emit(table: CountTable) -> str:
    """Render a count table as b-file text with indices starting at 0."""
    return "".join(f"{n} {value}\n" for n, value in enumerate(table.values))


def _fixture_text(sequence_id: str) -> Optional[str]:
    name = f"b{sequence_id[1:]}.txt"
    try:
        path = resources.files("hyperwalks.fixtures").joinpath(name)
        if path.is_file():
            return path.read_text()
    except (FileNotFoundError, ModuleNotFoundError):
        pass
    return None


def default_cache_dir() -> Optional[Path]:
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def oeis_fetch(
    sequence_id: str,
    cache_dir: Optional[Path] = None,
    allow_network: bool = False,
) -> BFile:
    """Return the b-file for an OEIS id from cache, bundle, or (optionally) the web.

    Lookup order: the cache directory, then the bundled fixtures (copied into
    the cache when one is configured), then oeis.org when allow_network is set.
    Offline use never touches the network.
    """
    sequence_id = sequence_id.strip().upper()
    if not _ID_PATTERN.match(sequence_id):
        raise SequenceNotFound(f"{sequence_id!r} is not a valid OEIS id (expected A followed by 6 digits)")
    if cache_dir is None:
        cache_dir = default_cache_dir()
    file_name = f"b{sequence_id[1:]}.txt"

    if cache_dir is not None:
        cached = Path(cache_dir) / file_name
        if cached.is_file():
            return bfile_parse(cached.read_text())

    text = _fixture_text(sequence_id)
    if text is None and allow_network:
        from urllib.request import urlopen

        url = f"https://oeis.org/{sequence_id}/{file_name}"
        with urlopen(url, timeout=10) as response:  # pragma: no cover - network
            text = response.read().decode()
    if text is None:
        raise SequenceNotFound(f"no cached or bundled b-file for {sequence_id}")

    if cache_dir is not None:
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        (Path(cache_dir) / file_name).write_text(text)
    return bfile_parse(text)


@dataclass(frozen=True)
class SequenceComparison:
    """Alignment of a b-file against an internally computed table."""

    sequence_id: str
    shift: Optional[int]  # b-file position of our n=1 term; None if unaligned
    compared: int
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.shift is not None and not self.mismatches and self.compared > 0


def compare_with_table(sequence_id: str, bf: BFile, values: Sequence[int]) -> SequenceComparison:
    """Compare b-file entries with table values, aligning offsets automatically.

    Tables index by semilength with the empty walk at 0; b-files may start at
    0 or 1.  The first b-file value is matched against the table's n=1 term
    (falling back one position when the b-file leads with the n=0 term), and
    the alignment shift is recorded.
    """
    if len(values) < 2 or not bf.entries:
        return SequenceComparison(sequence_id, None, 0, ("nothing to compare",))
    flat = bf.values()

    def compare_at(shift):
        mismatches = []
        compared = 0
        for offset in range(shift, len(flat)):
            n = 1 + (offset - shift)
            if n >= len(values):
                break
            compared += 1
            if flat[offset] != values[n]:
                mismatches.append(
                    f"{sequence_id} term {bf.entries[offset][0]} = {flat[offset]} "
                    f"!= table n={n} value {values[n]}"
                )
        return compared, tuple(mismatches)

    # A b-file may or may not lead with the empty-walk term; of the two
    # candidate alignments of its head with our n=1 term, keep the better one.
    candidates = [
        c for c in (0, 1) if len(flat) > c and flat[c] == values[1]
    ]
    if not candidates:
        return SequenceComparison(
            sequence_id, None, 0,
            (f"cannot align: b-file starts {flat[:3]}, table n=1 term is {values[1]}",),
        )
    results = {c: compare_at(c) for c in candidates}
    shift = min(candidates, key=lambda c: (len(results[c][1]), c))
    compared, mismatches = results[shift]
    return SequenceComparison(sequence_id, shift, compared, mismatches)
