"""Plain-text export and import of subsets."""
from pathlib import Path
from typing import Optional
import logging
import re

from goldbach_toolkit.exceptions import CacheFormatError
from goldbach_toolkit.subsets.builder import IntegerSubset
from goldbach_toolkit.subsets.spec import SubsetSpec

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^# spec kind=(\w+) t=(-|\d+) seed=(-|\d+) limit=(\d+)$")


def format_subset(subset: IntegerSubset) -> str:
    """The spec header line followed by one element per line, newline-terminated."""
    lines = [subset.spec.header()]
    lines.extend(str(value) for value in subset.elements.tolist())
    return "\n".join(lines) + "\n"


def export_subset(subset: IntegerSubset, path: Optional[Path] = None) -> str:
    text = format_subset(subset)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info("Wrote %d elements to %s", len(subset), path)
    return text


def parse_subset(text: str) -> IntegerSubset:
    """
    Rebuild a subset from its text form.

    Raises:
        CacheFormatError: If the header line is missing or malformed, or a line is not an integer
        DomainError: If the elements violate the subset invariants
    """
    lines = text.splitlines()
    if not lines:
        raise CacheFormatError("Subset file is empty")
    match = _HEADER.match(lines[0].strip())
    if match is None:
        raise CacheFormatError(f"Invalid subset header: {lines[0]!r}")
    kind, t, seed, limit = match.groups()
    spec = SubsetSpec.from_options(
        kind,
        int(limit),
        t=None if t == "-" else int(t),
        seed=None if seed == "-" else int(seed),
    )
    elements = []
    for number, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            elements.append(int(line))
        except ValueError:
            raise CacheFormatError(f"Line {number}: not an integer: {line!r}")
    return IntegerSubset.from_elements(spec, elements)


def import_subset(path: Path) -> IntegerSubset:
    """
    Load a subset written by export_subset.

    Raises:
        FileNotFoundError: If the specified file doesn't exist
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    return parse_subset(path.read_text(encoding="utf-8"))
