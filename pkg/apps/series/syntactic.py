# apps/series/syntactic.py
"""
The syntactic representation of a recognizable set and complete reducibility.

ψ acts on the span V_σ of the vectors 𝟙(w·T), where w·T is the set of
states p with p·w ∈ T, i.e. the states of the deterministic reversal.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from apps.automata.models import Alphabet, Dfa
from apps.automata.operations import literal_automaton, minimize
from apps.birecurrence.operations import birecurrence_check, is_recurrent
from apps.codes.operations import is_maximal_prefix
from apps.codes.predicates import is_bifix_code
from apps.core.exceptions import DomainError, InvariantViolation
from apps.core.linalg import RowBasis, intersection, key, left_nullspace, rank, span_basis
from apps.core.models import Outcome
from apps.monoid.operations import transition_monoid
from apps.series.models import CodeStarReducibility, ReducibilityVerdict, SyntacticData
from apps.series.representation import column_span, in_column_basis, representation_from_dfa

logger = logging.getLogger(__name__)


def _check_isomorphism(data: SyntacticData):
    """φ(u) = φ(v) ⇔ ψ(u) = ψ(v), on the witnesses of the transition monoid."""
    g = data.monoid
    keys = [key(data.psi(i)) for i in range(len(g))]
    if len(set(keys)) != len(keys):
        raise InvariantViolation('two distinct elements of φ(A*) have the same image under ψ')
    for i, row in enumerate(g.right):
        for letter, j in row.items():
            if key(data.psi(i) @ data.rep.mu[letter]) != keys[j]:
                raise InvariantViolation(
                    f"ψ({g.elements[i].witness}{letter}) differs from ψ of its witness {g.elements[j].witness!r}")


def _check_invariant(name: str, basis: Sequence[np.ndarray], data: SyntacticData):
    if not basis:
        return
    span = RowBasis(list(basis), data.rep.dim)
    for vector in basis:
        for letter in data.rep.alphabet:
            if not span.contains(vector @ data.rep.mu[letter]):
                raise InvariantViolation(f"{name} is not invariant under ψ({letter})")


def eventual_kernel(data: SyntacticData) -> List[np.ndarray]:
    """Intersection of the kernels of the elements of minimal nonzero rank."""
    g, n = data.monoid, data.rep.dim
    current = None
    for i in g.ideal:
        kernel = left_nullspace(data.psi(i))
        current = kernel if current is None else intersection(current, kernel, n)
        if not current:
            return []
    return list(current or [])


def eventual_range(data: SyntacticData) -> List[np.ndarray]:
    """Span of the images of the elements of minimal nonzero rank."""
    rows = [row for i in data.monoid.ideal for row in data.psi(i)]
    return span_basis(rows, data.rep.dim)


def syntactic_data(a: Dfa, cap: Optional[int] = None) -> SyntacticData:
    """
    Syntactic representation, its monoid and the eventual kernel and range.

    The monoid is enumerated on the minimal automaton; ψ of an element is
    ψ of its witness, and φ(A*) ≅ ψ(A*) is checked on all witnesses.
    """
    m = minimize(a)
    if not m.states:
        raise DomainError('the empty set has no syntactic representation')
    full = representation_from_dfa(m)
    words, columns = column_span(full)
    rep = in_column_basis(full, columns)
    g = transition_monoid(m, cap)
    data = SyntacticData(rep, m, tuple(words), g, (), ())

    _check_isomorphism(data)
    ranks = {rank(data.psi(i)) for i in g.ideal}
    if len(ranks) > 1:
        raise InvariantViolation(f"elements of the minimal ideal have ψ-ranks {sorted(ranks)}")
    ek, er = eventual_kernel(data), eventual_range(data)
    data = SyntacticData(rep, m, tuple(words), g, tuple(ek), tuple(er))
    _check_invariant('EK', ek, data)
    _check_invariant('ER', er, data)
    logger.info(f"📐 Syntactic representation: dimension {rep.dim}, EK {len(ek)}, ER {len(er)}")
    return data


def is_completely_reducible(a: Dfa, cap: Optional[int] = None) -> ReducibilityVerdict:
    """
    EK(S) = 0 for a recurrent set.

    Non-recurrent sets get an 'inapplicable' outcome together with the
    dimension of EK ∩ ER, whose vanishing is necessary.
    """
    data = syntactic_data(a, cap)
    meet = len(intersection(list(data.ek), list(data.er), data.rep.dim))
    if not is_recurrent(data.automaton):
        logger.warning("⚠️ Complete reducibility criterion inapplicable: the set is not recurrent")
        return ReducibilityVerdict(Outcome.INAPPLICABLE, ek_dim=data.ek_dim, er_dim=data.er_dim,
                                   meet_dim=meet, reason='the set is not recurrent')
    verdict = data.ek_dim == 0
    certificate = None
    if not verdict:
        vector = data.ek[0]
        for i in data.monoid.ideal:
            if any(v != 0 for v in vector @ data.psi(i)):
                raise InvariantViolation('the EK certificate is not in the kernel of every minimal-rank element')
        certificate = tuple(vector)
    if not verdict and birecurrence_check(data.automaton, cap).verdict:
        raise InvariantViolation('a birecurrent set has a nonzero eventual kernel')
    logger.info(f"📋 Completely reducible: {verdict} (EK dimension {data.ek_dim})")
    return ReducibilityVerdict(Outcome.VERDICT, verdict, data.ek_dim, data.er_dim, certificate, meet)


def code_star_reducibility(x: Sequence[str], alphabet: Optional[Alphabet] = None,
                           cap: Optional[int] = None) -> CodeStarReducibility:
    """For a finite maximal prefix code X: X* is completely reducible iff X is bifix."""
    words = sorted(set(x))
    alphabet = alphabet or Alphabet.from_words(words)
    if not is_maximal_prefix(words, alphabet=alphabet):
        raise DomainError('the code must be a finite maximal prefix code')
    verdict = is_completely_reducible(literal_automaton(words, alphabet), cap)
    bifix = bool(is_bifix_code(words))
    if verdict.verdict != bifix:
        raise InvariantViolation(f"X* completely reducible is {verdict.verdict} but X bifix is {bifix}")
    return CodeStarReducibility(bool(verdict.verdict), bifix)


def covers_minimal_ideal(a: Dfa, cap: Optional[int] = None) -> Tuple[bool, int]:
    """
    Whether φ(S) meets every H-class of the minimal ideal.

    Returns the answer and the number of H-classes inspected.
    """
    m = minimize(a)
    g = transition_monoid(m, cap)
    initial = m.index[m.initial]
    terminal = {m.index[q] for q in m.terminal}
    in_s = {e.id for e in g.elements if e.value.images[initial] in terminal}
    h_classes = sorted({g.h_class[i] for i in g.ideal})
    covered = all(any(i in in_s for i in g.h_members(h)) for h in h_classes)
    return covered, len(h_classes)
