# apps/unambiguous/models.py
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class UnambiguityWitness:
    verdict: bool
    # a word with two distinct successful paths, given as state sequences
    witness: Optional[str] = None
    paths: Optional[Tuple[Tuple[str, ...], Tuple[str, ...]]] = None

    def __bool__(self):
        return self.verdict


@dataclass(frozen=True)
class UnambiguousRecurrence:
    """Both sides of the criterion: a minimal-rank word fixing I, and one fixing T."""

    delta_strongly_connected: bool
    reversal_strongly_connected: bool
    # I·x = I and y·T = T with x, y of minimal nonzero rank
    witness_x: Optional[str]
    witness_y: Optional[str]
    minimal_rank: Optional[int]
    birecurrent: bool
