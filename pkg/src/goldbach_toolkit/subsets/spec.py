"""Declarative recipes for prime-like subsets."""
from enum import Enum
from dataclasses import dataclass
from typing import Any, Dict, Optional

from goldbach_toolkit.exceptions import DomainError, UnsupportedSpecError
from goldbach_toolkit.rng import check_seed


class SubsetKind(Enum):
    PRIMES = "primes"
    SHIFT = "shift"
    JITTER = "jitter"


@dataclass(frozen=True)
class SubsetSpec:
    """
    A reproducible recipe: equal specs always build identical subsets.

    `t` is present only for SHIFT, `seed` only for JITTER.
    """
    kind: SubsetKind
    limit: int
    t: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.limit < 3:
            raise DomainError(f"Subset limit must be >= 3, got {self.limit}")
        if self.kind == SubsetKind.SHIFT:
            if self.t is None:
                raise UnsupportedSpecError("A shift subset needs a shift amount t")
            if self.t < 0:
                raise UnsupportedSpecError(f"Negative shifts are not supported, got t={self.t}")
        elif self.t is not None:
            raise UnsupportedSpecError(f"t is only meaningful for shift subsets, not {self.kind.value}")
        if self.kind == SubsetKind.JITTER:
            if self.seed is None:
                raise UnsupportedSpecError("A jitter subset needs a seed")
            check_seed(self.seed)
        elif self.seed is not None:
            raise UnsupportedSpecError(f"seed is only meaningful for jitter subsets, not {self.kind.value}")

    @classmethod
    def primes(cls, limit: int) -> "SubsetSpec":
        return cls(SubsetKind.PRIMES, limit)

    @classmethod
    def shift(cls, t: int, limit: int) -> "SubsetSpec":
        return cls(SubsetKind.SHIFT, limit, t=t)

    @classmethod
    def jitter(cls, seed: int, limit: int) -> "SubsetSpec":
        return cls(SubsetKind.JITTER, limit, seed=seed)

    @classmethod
    def from_options(cls, kind: str, limit: int, t: Optional[int] = None, seed: Optional[int] = None) -> "SubsetSpec":
        """Build a spec from loosely typed options (CLI flags, file headers)."""
        try:
            subset_kind = SubsetKind(kind)
        except ValueError:
            raise UnsupportedSpecError(f"Unknown subset kind: {kind}")
        return cls(subset_kind, limit, t=t, seed=seed)

    @property
    def reach(self) -> int:
        """Largest prime the construction may look at."""
        return self.limit + (self.t or 0)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "t": self.t, "seed": self.seed, "limit": self.limit}

    def header(self) -> str:
        t = "-" if self.t is None else self.t
        seed = "-" if self.seed is None else self.seed
        return f"# spec kind={self.kind.value} t={t} seed={seed} limit={self.limit}"
