# apps/series/decomposition.py
"""
ℚ-linear decompositions into characteristic series of birecurrent sets.

For a recurrent set recognized by its minimal automaton (Q, i, T), the
candidates are the sets recognized with a terminal set saturated by a
word of minimal nonzero rank; 𝟙(T) is written over their indicator
vectors.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

import numpy as np

from apps.automata.models import Dfa, ScalarOutputDfa
from apps.automata.operations import is_strongly_connected, minimize
from apps.birecurrence.operations import birecurrence_check, saturated_terminal_sets
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InvariantViolation
from apps.core.linalg import RowBasis, indicator, key, span_basis
from apps.core.models import Outcome
from apps.monoid.operations import transition_monoid
from apps.series.models import DecompositionResult, DecompositionTerm, IntegerSearch
from apps.series.representation import direct_sum, representation_from_dfa, representation_from_scalar, series_agree
from apps.series.scalar import is_recurrent_series, level_sets, minimize_scalar
from apps.series.syntactic import is_completely_reducible

logger = logging.getLogger(__name__)

# (2K+1)^n candidate vectors at most for the integer search
INTEGER_SEARCH_LIMIT = 500_000


def _candidates(m: Dfa, cap: Optional[int]) -> List[Tuple[str, ...]]:
    g = transition_monoid(m, cap)
    return saturated_terminal_sets(m, g=g)


def _vector(m: Dfa, states) -> np.ndarray:
    return indicator(len(m.states), (m.index[q] for q in states))


def verify_terms(s: Dfa, terms: Tuple[DecompositionTerm, ...], bound: int) -> bool:
    """Σ c_i 𝟙(S_i) = 𝟙(S) on every word of length at most ``bound``."""
    combined = direct_sum([representation_from_dfa(t.automaton) for t in terms],
                          [t.coefficient for t in terms])
    return series_agree(combined, representation_from_dfa(s), bound)


def decompose_into_birecurrent(a: Dfa, bound: Optional[int] = None, cap: Optional[int] = None
                               ) -> DecompositionResult:
    """
    Write 𝟙(S) as Σ c_i 𝟙(S_i) with every S_i birecurrent.

    The saturated terminal sets are taken in order and a greedy basis of
    their indicator vectors is kept, so the coefficients are unique. No
    solution in that span gives a 'not found' outcome, which is not a
    negative verdict.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    m = minimize(a)
    check = is_completely_reducible(m, cap)
    if check.outcome != Outcome.VERDICT:
        return DecompositionResult(check.outcome, reason=check.reason)
    if not check.verdict:
        raise DomainError('the set is not completely reducible')

    if birecurrence_check(m, cap).verdict:
        terms = (DecompositionTerm(Fraction(1), m, tuple(q for q in m.states if q in m.terminal)),)
        return DecompositionResult(Outcome.VERDICT, terms, bound)

    candidates = _candidates(m, cap)
    vectors = [_vector(m, t) for t in candidates]
    chosen = span_basis(vectors, len(m.states))
    by_key = {}
    for t, v in zip(candidates, vectors):
        by_key.setdefault(key(v), t)
    picked = [by_key[key(c)] for c in chosen]
    coordinates = RowBasis(chosen, len(m.states)).coordinates(_vector(m, m.terminal))
    if coordinates is None:
        logger.warning("⚠️ 𝟙(T) is outside the span of the saturated terminal sets")
        return DecompositionResult(Outcome.NOT_FOUND, reason='𝟙(T) is not in the span of saturated terminal sets')

    terms = []
    for coefficient, terminal in zip(coordinates, picked):
        if coefficient == 0:
            continue
        part = minimize(m.with_terminal(terminal))
        if not birecurrence_check(part, cap).verdict:
            raise InvariantViolation(f"the set with terminal states {terminal} is not birecurrent")
        terms.append(DecompositionTerm(Fraction(coefficient), part, terminal))
    terms = tuple(terms)
    if not verify_terms(m, terms, bound):
        raise InvariantViolation(f"Σ c_i 𝟙(S_i) differs from 𝟙(S) on words of length at most {bound}")
    logger.info(f"🧩 Decomposed into {len(terms)} birecurrent sets")
    return DecompositionResult(Outcome.VERDICT, terms, bound)


def integer_combination_search(a: Dfa, max_coefficient: int = 2, cap: Optional[int] = None) -> IntegerSearch:
    """
    Integer coefficients in [-K, K] expressing 𝟙(T) over all saturated terminal sets.

    Only ever reports a combination or 'not found within the bound'.
    """
    m = minimize(a)
    if not is_strongly_connected(m):
        return IntegerSearch(Outcome.INAPPLICABLE, max_coefficient=max_coefficient,
                             reason='the set is not recurrent')
    candidates = tuple(_candidates(m, cap))
    size = (2 * max_coefficient + 1) ** len(candidates)
    if size > INTEGER_SEARCH_LIMIT:
        return IntegerSearch(Outcome.INDETERMINATE, max_coefficient=max_coefficient, candidates=candidates,
                             reason=f"{size} combinations exceed the search limit")
    matrix = np.array([[int(v) for v in _vector(m, t)] for t in candidates], dtype=np.int64)
    target = np.array([int(v) for v in _vector(m, m.terminal)], dtype=np.int64)
    values = range(-max_coefficient, max_coefficient + 1)
    for combination in product(values, repeat=len(candidates)):
        if np.array_equal(np.array(combination, dtype=np.int64) @ matrix, target):
            found = {t: c for t, c in zip(candidates, combination) if c}
            logger.info(f"🔍 Integer combination found: {found}")
            return IntegerSearch(Outcome.VERDICT, found, max_coefficient, candidates)
    logger.warning(f"⚠️ No integer combination with coefficients in [-{max_coefficient}, {max_coefficient}]")
    return IntegerSearch(Outcome.NOT_FOUND, max_coefficient=max_coefficient, candidates=candidates,
                         reason=f"no combination with coefficients bounded by {max_coefficient}")


def decompose_scalar(s: ScalarOutputDfa, bound: Optional[int] = None, cap: Optional[int] = None
                     ) -> DecompositionResult:
    """
    A recurrent series is Σ_α α·𝟙(level set of α); each level set is then decomposed.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    m = minimize_scalar(s)
    if not is_recurrent_series(m):
        return DecompositionResult(Outcome.INAPPLICABLE, reason='the series is not recurrent')
    terms = []
    for value, level in level_sets(m).items():
        result = decompose_into_birecurrent(level, bound, cap)
        if result.outcome != Outcome.VERDICT:
            return DecompositionResult(result.outcome, reason=f"level set of {value}: {result.reason}")
        terms.extend(DecompositionTerm(value * t.coefficient, t.automaton, t.terminal) for t in result.terms)
    terms = tuple(terms)
    combined = direct_sum([representation_from_dfa(t.automaton) for t in terms], [t.coefficient for t in terms])
    if not series_agree(combined, representation_from_scalar(m), bound):
        raise InvariantViolation(f"the level-set decomposition differs on words of length at most {bound}")
    logger.info(f"🧩 Series decomposed into {len(terms)} birecurrent sets")
    return DecompositionResult(Outcome.VERDICT, terms, bound)
