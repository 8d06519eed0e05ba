"""
Seeded 64-bit generator shared by the jittered subsets and the Monte Carlo oracle.

The generator is splitmix64: the state advances by the golden gamma
0x9E3779B97F4A7C15 and every output is the state passed through the mixing
function below. Output i (counting from 0) of the stream seeded with s is
therefore mix64(s + (i + 1) * gamma) mod 2**64, which lets numpy produce any
window of the stream at once and lets any other language reproduce it.
"""
from dataclasses import dataclass
import numpy as np

from goldbach_toolkit.exceptions import DomainError

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1


def check_seed(seed: int) -> int:
    if not 0 <= seed <= MASK64:
        raise DomainError(f"Seed must be a 64-bit natural, got {seed}")
    return int(seed)


def mix64(z: np.ndarray) -> np.ndarray:
    """splitmix64 finaliser, elementwise on a uint64 array (wrapping arithmetic)."""
    z = np.asarray(z, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX_MULT_1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX_MULT_2)
        return z ^ (z >> np.uint64(31))


def splitmix_stream(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Outputs offset .. offset+count-1 of the stream seeded with `seed`."""
    seed = check_seed(seed)
    steps = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        states = np.uint64(seed) + np.uint64(GOLDEN_GAMMA) * steps
    return mix64(states)


def substream_draws(keys: np.ndarray, count: int) -> np.ndarray:
    """
    Draw `count` outputs from each substream keyed by `keys`.

    Returns:
        np.ndarray: uint64 matrix of shape (len(keys), count); row r is the
        splitmix64 stream seeded with keys[r]
    """
    keys = np.asarray(keys, dtype=np.uint64)
    steps = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        states = keys[:, None] + np.uint64(GOLDEN_GAMMA) * steps[None, :]
    return mix64(states)


def to_unit_interval(draws: np.ndarray) -> np.ndarray:
    """Top 53 bits of each draw as a float in [0, 1)."""
    return (np.asarray(draws, dtype=np.uint64) >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def to_signs(draws: np.ndarray) -> np.ndarray:
    """+1 where the top bit of a draw is clear, -1 where it is set."""
    top = np.asarray(draws, dtype=np.uint64) >> np.uint64(63)
    return np.where(top == 0, 1, -1).astype(np.int64)


@dataclass
class SplitMix64:
    """Sequential reference implementation, one draw at a time."""
    state: int

    def __post_init__(self):
        self.state = check_seed(self.state)

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_MULT_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_MULT_2) & MASK64
        return z ^ (z >> 31)
