"""Verification reports and their JSON form."""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional
import json
import logging

from goldbach_toolkit.subsets.spec import SubsetSpec

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """
    Outcome of checking every even in [from_even, to_even] against a subset.

    largest_failing_even plays the role of the subset's threshold N_Q:
    every even above it in the range has a witness.
    """
    spec: SubsetSpec
    from_even: int
    to_even: int
    counterexamples: List[int] = field(default_factory=list)
    max_min_witness: int = 0
    checked_count: int = 0
    elapsed: float = 0.0

    @property
    def largest_failing_even(self) -> Optional[int]:
        return max(self.counterexamples) if self.counterexamples else None

    def counterexamples_above(self, bound: int) -> List[int]:
        return [even for even in self.counterexamples if even > bound]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "range": [self.from_even, self.to_even],
            "counterexamples": list(self.counterexamples),
            "largest_failing_even": self.largest_failing_even,
            "max_min_witness": self.max_min_witness,
            "checked_count": self.checked_count,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }

    def outcome(self) -> Dict[str, Any]:
        """to_dict() without the timing, for comparing runs."""
        outcome = self.to_dict()
        outcome.pop("elapsed_ms")
        return outcome

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write_json(self, path: Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")
        logger.info("Wrote verification report to %s", path)
