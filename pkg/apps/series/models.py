# apps/series/models.py
"""
Linear representations (λ, μ, γ) over ℚ and the results built on them.

Vectors and matrices are numpy object arrays of Fractions (see
``apps.core.linalg``); the coefficient of a word w is λμ(w)γ.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from apps.automata.models import Alphabet, Dfa, ScalarOutputDfa
from apps.core.exceptions import InputError
from apps.core.linalg import identity, key
from apps.core.models import Outcome
from apps.monoid.models import GreenStructure


@dataclass(frozen=True, eq=False)
class LinearRepresentation:
    alphabet: Alphabet
    lam: np.ndarray
    mu: Mapping[str, np.ndarray]
    gamma: np.ndarray

    def __post_init__(self):
        n = len(self.lam)
        if len(self.gamma) != n:
            raise InputError(f"λ has dimension {n} but γ has dimension {len(self.gamma)}")
        for letter in self.alphabet:
            matrix = self.mu.get(letter)
            if matrix is None:
                raise InputError(f"no matrix for letter {letter!r}")
            if matrix.shape != (n, n):
                raise InputError(f"μ({letter}) has shape {matrix.shape}, expected {(n, n)}")

    @property
    def dim(self) -> int:
        return len(self.lam)

    def matrix(self, word: str) -> np.ndarray:
        result = identity(self.dim)
        for letter in self.alphabet.validate(word):
            result = result @ self.mu[letter]
        return result

    def row(self, word: str) -> np.ndarray:
        """λμ(word)."""
        vector = self.lam
        for letter in self.alphabet.validate(word):
            vector = vector @ self.mu[letter]
        return vector

    def column(self, word: str) -> np.ndarray:
        """μ(word)γ."""
        vector = self.gamma
        for letter in reversed(self.alphabet.validate(word)):
            vector = self.mu[letter] @ vector
        return vector

    def coefficient(self, word: str) -> Fraction:
        if not self.dim:
            return Fraction(0)
        return Fraction(self.row(word) @ self.gamma)

    @property
    def key(self) -> tuple:
        return (tuple(self.alphabet), key(self.lam), key(self.gamma)) + tuple(
            key(self.mu[letter]) for letter in self.alphabet)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearRepresentation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


@dataclass(frozen=True)
class MinimalRepresentation:
    """Result of the two-step reduction, with the words indexing each basis."""

    rep: LinearRepresentation
    # words w whose vectors λμ(w) span the first reduction, in length-lex order
    row_words: Tuple[str, ...]
    # words w whose vectors μ'(w)γ' span the second reduction
    column_words: Tuple[str, ...]
    original_dim: int


@dataclass(frozen=True)
class SyntacticData:
    rep: LinearRepresentation
    automaton: Dfa
    # words w such that the vectors 𝟙(w·T) form the basis of V_σ
    basis_witnesses: Tuple[str, ...]
    monoid: GreenStructure = field(compare=False)
    ek: Tuple[np.ndarray, ...] = field(compare=False)
    er: Tuple[np.ndarray, ...] = field(compare=False)

    @property
    def ek_dim(self) -> int:
        return len(self.ek)

    @property
    def er_dim(self) -> int:
        return len(self.er)

    def psi(self, i: int) -> np.ndarray:
        """ψ of the monoid element with id ``i``."""
        return self.rep.matrix(self.monoid.elements[i].witness)


@dataclass(frozen=True)
class ReducibilityVerdict:
    outcome: Outcome
    verdict: Optional[bool] = None
    ek_dim: int = 0
    er_dim: int = 0
    # a nonzero vector of EK when the verdict is negative
    certificate: Optional[Tuple[Fraction, ...]] = None
    # dimension of EK ∩ ER; zero is necessary for complete reducibility
    meet_dim: Optional[int] = None
    reason: str = ''


@dataclass(frozen=True)
class CodeStarReducibility:
    completely_reducible: bool
    bifix: bool


@dataclass(frozen=True)
class DecompositionTerm:
    coefficient: Fraction
    automaton: Dfa = field(compare=False)
    terminal: Tuple[str, ...] = ()


@dataclass(frozen=True)
class DecompositionResult:
    outcome: Outcome
    terms: Tuple[DecompositionTerm, ...] = ()
    verified_bound: Optional[int] = None
    reason: str = ''


@dataclass(frozen=True)
class IntegerSearch:
    outcome: Outcome
    coefficients: Optional[Dict[Tuple[str, ...], int]] = None
    max_coefficient: int = 0
    candidates: Tuple[Tuple[str, ...], ...] = ()
    reason: str = ''


@dataclass(frozen=True)
class CR2Term:
    coefficient: Fraction
    x: str
    y: str


@dataclass(frozen=True)
class CR2Trace:
    outcome: Outcome
    u: Optional[str] = None
    v: Optional[str] = None
    birecurrent: Optional[ScalarOutputDfa] = field(default=None, compare=False)
    x_terms: Dict[str, Fraction] = field(default_factory=dict)
    y_terms: Dict[str, Fraction] = field(default_factory=dict)
    terms: Tuple[CR2Term, ...] = ()
    verified_bound: Optional[int] = None
    # basis of a proper invariant subspace when the input is reducible
    invariant_subspace: Optional[List[Tuple[Fraction, ...]]] = None
    reason: str = ''


@dataclass(frozen=True)
class IrreducibleCount:
    outcome: Outcome
    count: Optional[int] = None
    dimensions: Tuple[int, ...] = ()
    group_order: Optional[int] = None
    reason: str = ''
