# apps/birecurrence/models.py
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from apps.automata.models import Dfa


@dataclass(frozen=True)
class WordSet:
    """A set of words given by its list when finite, or by an automaton otherwise."""

    automaton: Dfa
    words: Optional[Tuple[str, ...]] = None

    @property
    def finite(self) -> bool:
        return self.words is not None


@dataclass(frozen=True)
class RecurrentDecomposition:
    """S = X*P = QY* with X the left root and Y the right root."""

    left_root: WordSet
    prefix_part: WordSet
    right_root: Optional[WordSet] = None
    suffix_part: Optional[WordSet] = None

    @property
    def finite_type(self) -> bool:
        return (self.right_root is not None and self.left_root.finite
                and self.right_root.finite)


@dataclass(frozen=True)
class BirecurrenceCheck:
    verdict: bool
    reversal_strongly_connected: bool
    saturating_word: Optional[str]


@dataclass(frozen=True)
class BirecurrenceReport:
    recurrent: bool
    birecurrent: bool
    degree: Optional[int] = None
    # kernel classes of the saturating word inside T; None unless birecurrent
    saturation_classes: Optional[int] = None
    index: Optional[Fraction] = None
    dense: bool = False
    density: Optional[Fraction] = None
    finite_type: bool = False
    decomposition: Optional[RecurrentDecomposition] = None
    saturating_word: Optional[str] = None
    reversal_index: Optional[Fraction] = None
    left_root_degree: Optional[int] = None
    states: int = 0

    @property
    def k(self) -> Optional[int]:
        return self.saturation_classes


@dataclass(frozen=True)
class IndecomposabilityVerdict:
    # 'synchronized', 'left-root-of-dense-birecurrent', 'decomposable' or 'indeterminate'
    kind: str
    degree: Optional[int] = None
    # decomposable: X = Y∘Z with Z given here
    witness_code: Optional[Tuple[str, ...]] = None
    congruence: Optional[Tuple[Tuple[str, ...], ...]] = None
    # 'strong-synchronizability' or 'principal-congruence'
    method: Optional[str] = None
    # left-root case: terminal set T and the birecurrent set it defines
    terminal: Optional[Tuple[str, ...]] = None
    birecurrent_set: Optional[Dfa] = field(default=None, compare=False)
    finite_type: Optional[bool] = None
