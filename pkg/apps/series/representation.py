# apps/series/representation.py
"""Building, reducing and comparing linear representations."""
import logging
from collections import deque
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from apps.automata.models import Dfa, Nfa, ScalarOutputDfa
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InvariantViolation
from apps.core.linalg import (RowBasis, SpanBuilder, identity, indicator, is_zero, key, qmatrix, qvector,
                              solve_left, unit_vector, zeros)
from apps.series.models import LinearRepresentation, MinimalRepresentation

logger = logging.getLogger(__name__)


def _adjacency(states, alphabet, edges) -> dict:
    order = {q: i for i, q in enumerate(states)}
    n = len(states)
    mu = {letter: zeros(n, n) for letter in alphabet}
    for source, letter, target in edges:
        mu[letter][order[source], order[target]] += 1
    return mu


def representation_from_dfa(a: Dfa) -> LinearRepresentation:
    """λ = 𝟙(i), μ(a) the transition matrices, γ = 𝟙(T); states keep their order."""
    order = a.index
    n = len(a.states)
    lam = unit_vector(n, order[a.initial]) if a.initial is not None else qvector([0] * n)
    gamma = indicator(n, (order[q] for q in a.terminal))
    return LinearRepresentation(a.alphabet, lam, _adjacency(a.states, a.alphabet, a.edges()), gamma)


def representation_from_unambiguous(a: Nfa) -> LinearRepresentation:
    """λ = 𝟙(I), 0/1 adjacency matrices, γ = 𝟙(T); the automaton must be unambiguous."""
    from apps.unambiguous.operations import require_unambiguous

    require_unambiguous(a)
    order = a.index
    n = len(a.states)
    return LinearRepresentation(a.alphabet, indicator(n, (order[q] for q in a.initials)),
                                _adjacency(a.states, a.alphabet, a.edges),
                                indicator(n, (order[q] for q in a.terminals)))


def representation_from_scalar(s: ScalarOutputDfa) -> LinearRepresentation:
    order = {q: i for i, q in enumerate(s.states)}
    n = len(s.states)
    lam = unit_vector(n, order[s.initial]) if s.initial is not None else qvector([0] * n)
    gamma = qvector(Fraction(s.tau.get(q, 0)) for q in s.states)
    edges = [(q, x, t) for (q, x), t in s.delta.items()]
    return LinearRepresentation(s.alphabet, lam, _adjacency(s.states, s.alphabet, edges), gamma)


def spanning_words(r: LinearRepresentation, start: np.ndarray,
                   step: Callable[[np.ndarray, str], np.ndarray],
                   extend: Callable[[str, str], str]) -> Tuple[List[str], List[np.ndarray]]:
    """
    Greedy basis of the span of an orbit, in breadth-first order.

    Only words whose vector enlarged the span are extended, so the
    search stops as soon as the span is closed.
    """
    builder = SpanBuilder(r.dim)
    words, vectors = [], []
    queue = deque([('', start)])
    while queue:
        word, vector = queue.popleft()
        if is_zero(vector) or not builder.add(vector):
            continue
        words.append(word)
        vectors.append(vector)
        for letter in r.alphabet:
            queue.append((extend(word, letter), step(vector, letter)))
    return words, vectors


def row_span(r: LinearRepresentation, start: Optional[np.ndarray] = None):
    """Words u with λμ(u) forming a basis of the span of all λμ(w)."""
    start = r.lam if start is None else start
    return spanning_words(r, start, lambda v, x: v @ r.mu[x], lambda w, x: w + x)


def column_span(r: LinearRepresentation, start: Optional[np.ndarray] = None):
    """Words v with μ(v)γ forming a basis of the span of all μ(w)γ."""
    start = r.gamma if start is None else start
    return spanning_words(r, start, lambda v, x: r.mu[x] @ v, lambda w, x: x + w)


def _basis(vectors: Sequence[Sequence], dim: int) -> RowBasis:
    try:
        return RowBasis([qvector(v) for v in vectors], dim)
    except ValueError as exc:
        raise DomainError(f"the given vectors are not a basis: {exc}") from exc


def in_row_basis(r: LinearRepresentation, rows: Sequence[Sequence]) -> LinearRepresentation:
    """
    Restrict r to the span of ``rows``, which must be invariant under the right action.

    λ must lie in the span; the new λ is its coordinate vector and the new
    γ is given by the products of the basis rows with γ.
    """
    basis = _basis(rows, r.dim)
    lam = basis.coordinates(r.lam)
    if lam is None:
        raise DomainError('λ is not in the span of the given rows')
    mu = {}
    for letter in r.alphabet:
        image = solve_left(basis.rows, basis.rows @ r.mu[letter])
        if image is None:
            raise DomainError(f"the span of the given rows is not invariant under μ({letter})")
        mu[letter] = image
    return LinearRepresentation(r.alphabet, lam, mu, qvector(basis.rows @ r.gamma))


def in_column_basis(r: LinearRepresentation, columns: Sequence[Sequence]) -> LinearRepresentation:
    """
    Restrict r to the span of ``columns``, which must be invariant under the left action.

    γ must lie in the span; λ becomes λC for C the matrix of the columns.
    """
    basis = _basis(columns, r.dim)
    gamma = basis.coordinates(r.gamma)
    if gamma is None:
        raise DomainError('γ is not in the span of the given columns')
    c = basis.rows.T
    mu = {}
    for letter in r.alphabet:
        transposed = solve_left(basis.rows, (r.mu[letter] @ c).T)
        if transposed is None:
            raise DomainError(f"the span of the given columns is not invariant under μ({letter})")
        mu[letter] = qmatrix(transposed.T.tolist(), shape=(len(basis), len(basis)))
    return LinearRepresentation(r.alphabet, qvector(r.lam @ c), mu, gamma)


def _empty(r: LinearRepresentation) -> LinearRepresentation:
    return LinearRepresentation(r.alphabet, qvector([]), {x: zeros(0, 0) for x in r.alphabet}, qvector([]))


def minimize_representation(r: LinearRepresentation, bound: Optional[int] = None) -> MinimalRepresentation:
    """
    Restrict to the span of the λμ(w), then to the span of the μ'(w)γ'.

    Both bases are grown in length-lex order. The result recognizes the
    same series, checked on words of length at most ``bound``.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    row_words, rows = row_span(r)
    if not rows:
        return MinimalRepresentation(_empty(r), (), (), r.dim)
    forward = in_row_basis(r, rows)
    column_words, columns = column_span(forward)
    if not columns:
        return MinimalRepresentation(_empty(r), tuple(row_words), (), r.dim)
    reduced = in_column_basis(forward, columns)
    if not series_agree(r, reduced, bound):
        raise InvariantViolation(f"the reduced representation differs on words of length at most {bound}")
    logger.info(f"📐 Minimal representation: dimension {r.dim} → {reduced.dim}")
    return MinimalRepresentation(reduced, tuple(row_words), tuple(column_words), r.dim)


def direct_sum(reps: Sequence[LinearRepresentation], coefficients: Optional[Iterable] = None
               ) -> LinearRepresentation:
    """Representation of Σ c_i·σ_i (block diagonal μ, scaled λ blocks)."""
    reps = list(reps)
    coefficients = list(coefficients) if coefficients is not None else [1] * len(reps)
    alphabet = reps[0].alphabet
    n = sum(r.dim for r in reps)
    lam, gamma = [], []
    mu = {letter: zeros(n, n) for letter in alphabet}
    offset = 0
    for c, r in zip(coefficients, reps):
        lam.extend(Fraction(c) * v for v in r.lam)
        gamma.extend(r.gamma)
        for letter in alphabet:
            mu[letter][offset:offset + r.dim, offset:offset + r.dim] = r.mu[letter]
        offset += r.dim
    return LinearRepresentation(alphabet, qvector(lam), mu, qvector(gamma))


def series_agree(first: LinearRepresentation, second: LinearRepresentation, max_len: int) -> bool:
    """
    True iff both series have the same coefficients on words of length at most ``max_len``.

    Walks pairs (λ₁μ₁(w), λ₂μ₂(w)) breadth-first and never revisits a pair,
    since a pair seen at a shorter length has already been checked further.
    """
    if list(first.alphabet) != list(second.alphabet):
        return False
    start = (first.lam, second.lam)
    seen = {(key(first.lam), key(second.lam))}
    level = [start]
    for length in range(max_len + 1):
        following = []
        for u, v in level:
            left = u @ first.gamma if first.dim else 0
            right = v @ second.gamma if second.dim else 0
            if left != right:
                return False
            if length == max_len:
                continue
            for letter in first.alphabet:
                pair = (u @ first.mu[letter], v @ second.mu[letter])
                marker = (key(pair[0]), key(pair[1]))
                if marker not in seen:
                    seen.add(marker)
                    following.append(pair)
        level = following
    return True


def spin(vector: np.ndarray, matrices: Sequence[np.ndarray]) -> List[np.ndarray]:
    """Basis of the smallest subspace containing ``vector`` and stable under v ↦ vM."""
    builder = SpanBuilder(len(vector))
    queue = deque([qvector(vector)])
    basis = []
    while queue:
        current = queue.popleft()
        if is_zero(current) or not builder.add(current):
            continue
        basis.append(current)
        queue.extend(current @ m for m in matrices)
    return basis


def algebra_dimension(matrices: Sequence[np.ndarray], n: int) -> int:
    """Dimension of the algebra spanned by all products of ``matrices`` (identity included)."""
    if not n:
        return 0
    operators = [_right_multiplication(m, n) for m in matrices]
    return len(spin(identity(n).reshape(-1), operators))


def _right_multiplication(m: np.ndarray, n: int) -> np.ndarray:
    """Matrix of X ↦ XM acting on row-major flattened n×n matrices (block diagonal)."""
    result = zeros(n * n, n * n)
    for block in range(n):
        result[block * n:(block + 1) * n, block * n:(block + 1) * n] = m
    return result


def invariant_subspace(r: LinearRepresentation) -> Optional[List[np.ndarray]]:
    """A proper nonzero subspace stable under every μ(a), spun from unit vectors, or None."""
    matrices = [r.mu[letter] for letter in r.alphabet]
    for i in range(r.dim):
        basis = spin(unit_vector(r.dim, i), matrices)
        if 0 < len(basis) < r.dim:
            return basis
    return None
