"""OEIS b-file parsing and cross-checks against the computed families."""
from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Optional, Union

from .results import CheckResult
from .sequences import SequenceCache, default_cache

__all__ = ["BFile", "BFileError", "parse_bfile", "load_fixture", "oeis_check", "FAMILIES", "FIXTURES"]

FIXTURES = {
    "fibonacci": "A000045",
    "lucas": "A000032",
    "balancing": "A001109",
    "lucas_balancing": "A001541",
}


class BFileError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class BFile:
    seq_id: str
    entries: tuple  # ((index, value), ...)

    @property
    def first_index(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def __len__(self):
        return len(self.entries)


def parse_bfile(text: Union[str, bytes], seq_id: str = "") -> BFile:
    """Parse ``<index> <value>`` lines; blank lines and ``#`` comments are skipped.

    Indices must increase by exactly one from the first entry.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise BFileError(f"b-file is not ASCII: {exc}") from None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"expected '<index> <value>', got {raw!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"non-integer field in {raw!r}", lineno) from None
        if entries and index != entries[-1][0] + 1:
            raise BFileError(
                f"non-consecutive index {index} after {entries[-1][0]}", lineno
            )
        entries.append((index, value))
    return BFile(seq_id, tuple(entries))


def load_fixture(family: str) -> BFile:
    seq_id = FIXTURES[family]
    name = f"b{seq_id[1:]}.txt"
    data = resources.files("lucas_euler").joinpath("data", name).read_bytes()
    return parse_bfile(data, seq_id)


def read_bfile(path: Union[str, Path]) -> BFile:
    path = Path(path)
    stem = path.stem
    seq_id = "A" + stem[1:] if stem.startswith("b") and stem[1:].isdigit() else stem
    return parse_bfile(path.read_bytes(), seq_id)


def _families(cache: SequenceCache) -> dict[str, Callable[[int], int]]:
    return {
        "fibonacci": cache.fibonacci,
        "lucas": cache.lucas,
        "balancing": lambda n: int(cache.balancing_poly(n)(1)),
        "lucas_balancing": lambda n: int(cache.lucas_balancing_poly(n)(1)),
    }


FAMILIES = tuple(FIXTURES)


def oeis_check(family: str, bfile: BFile, cache: SequenceCache = default_cache) -> CheckResult:
    """Compare a family with every b-file entry.

    The b-file's first entry is matched to family index 0 first, then to
    index 1; the check passes if either convention agrees throughout.
    """
    fn = _families(cache).get(family)
    if fn is None:
        raise KeyError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if not bfile.entries:
        raise BFileError("b-file has no entries")
    start = time.perf_counter()
    attempts = []
    for convention, base in (("0-based", 0), ("1-based", 1)):
        mismatch = None
        for index, value in bfile.entries:
            n = index - bfile.first_index + base
            got = fn(n)
            if got != value:
                mismatch = {"convention": convention, "index": index, "expected": str(value), "computed": str(got)}
                break
        if mismatch is None:
            millis = round((time.perf_counter() - start) * 1000, 3)
            grid = {"bfile": bfile.seq_id, "terms": len(bfile), "convention": convention}
            return CheckResult(f"oeis:{family}", grid, "pass", None, millis)
        attempts.append(mismatch)
    millis = round((time.perf_counter() - start) * 1000, 3)
    grid = {"bfile": bfile.seq_id, "terms": len(bfile)}
    return CheckResult(f"oeis:{family}", grid, "fail", {"attempts": attempts}, millis)
