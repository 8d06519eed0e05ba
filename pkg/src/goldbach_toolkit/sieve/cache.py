"""On-disk cache of sieved primes."""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional
import logging
import re
import numpy as np

from goldbach_toolkit.config import ToolkitConfig, load_config
from goldbach_toolkit.exceptions import CacheFormatError
from goldbach_toolkit.sieve.primes import PrimeTable, sieve_primes

logger = logging.getLogger(__name__)

_WORD = np.dtype("<u8")
_CACHE_NAME = re.compile(r"^primes-(\d+)\.bin$")


@dataclass
class PrimeCache:
    """
    Binary prime files: an 8-byte little-endian header holding the limit,
    followed by the primes as little-endian 64-bit values, ascending.
    """
    cache_dir: Path

    def path_for(self, limit: int) -> Path:
        return Path(self.cache_dir) / f"primes-{limit}.bin"

    def save(self, table: PrimeTable) -> Path:
        """
        Write `table` to its cache file.

        Returns:
            Path: the file written
        """
        path = self.path_for(table.limit)
        path.parent.mkdir(parents=True, exist_ok=True)
        header = np.array([table.limit], dtype=_WORD)
        with open(path, "wb") as cache_file:
            cache_file.write(header.tobytes())
            cache_file.write(table.primes.astype(_WORD).tobytes())
        logger.info("Cached %d primes up to %d at %s", len(table), table.limit, path)
        return path

    def load(self, path: Path) -> PrimeTable:
        """
        Load and validate a cache file.

        Returns:
            PrimeTable: the cached table

        Raises:
            FileNotFoundError: If the file doesn't exist
            CacheFormatError: If the header is missing, the size is not a whole
                number of words, or the values are not strictly increasing
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"File not found: {path}")
        size = path.stat().st_size
        if size < _WORD.itemsize or size % _WORD.itemsize:
            raise CacheFormatError(f"{path}: size {size} is not a header plus whole 64-bit words")
        words = np.fromfile(path, dtype=_WORD)
        limit = int(words[0])
        primes = words[1:].astype(np.int64)
        if primes.size:
            if primes[0] < 2 or int(primes[-1]) > limit:
                raise CacheFormatError(f"{path}: values outside [2, {limit}]")
            if np.any(np.diff(primes) <= 0):
                raise CacheFormatError(f"{path}: values are not strictly increasing")
        return PrimeTable(limit=limit, primes=primes)

    def find(self, limit: int) -> Optional[Path]:
        """The cached file with the smallest limit >= `limit`, if any."""
        directory = Path(self.cache_dir)
        if not directory.is_dir():
            return None
        candidates = []
        for entry in directory.iterdir():
            match = _CACHE_NAME.match(entry.name)
            if match and int(match.group(1)) >= limit:
                candidates.append((int(match.group(1)), entry))
        if not candidates:
            return None
        return min(candidates)[1]


def cached_sieve(limit: int, config: Optional[ToolkitConfig] = None) -> PrimeTable:
    """sieve_primes(limit), served from GOLDBACH_CACHE_DIR when one is configured."""
    config = config or load_config()
    if config.cache_dir is None:
        return sieve_primes(limit, config)
    cache = PrimeCache(config.cache_dir)
    found = cache.find(limit)
    if found is not None:
        logger.info("Prime cache hit: %s", found)
        return cache.load(found).prefix(limit)
    table = sieve_primes(limit, config)
    cache.save(table)
    return table
