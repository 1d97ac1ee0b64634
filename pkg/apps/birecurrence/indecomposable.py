# apps/birecurrence/indecomposable.py
"""
Indecomposable finite maximal prefix codes.

Such a code is either synchronized or the left root of a dense
birecurrent set; a decomposition X = Y∘Z shows up as a proper stable
equivalence of the minimal automaton of X*, either the one of strong
synchronizability or one generated by a single pair of states.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from apps.automata.models import Alphabet, Dfa
from apps.automata.operations import literal_automaton, minimize
from apps.birecurrence.models import IndecomposabilityVerdict
from apps.birecurrence.operations import birecurrence_check, is_dense
from apps.birecurrence.roots import _return_automata, _words, recurrent_decomposition
from apps.codes.operations import is_maximal_prefix
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InvariantViolation
from apps.monoid.operations import strongly_synchronizable_classes, transition_monoid

logger = logging.getLogger(__name__)


def principal_congruence(a: Dfa, p: str, q: str) -> List[Tuple[str, ...]]:
    """Least equivalence containing (p, q) and compatible with every letter."""
    parent: Dict[str, str] = {s: s for s in a.states}

    def find(s: str) -> str:
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    pending = [(p, q)]
    while pending:
        x, y = pending.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[ry] = rx
        for letter in a.alphabet:
            tx, ty = a.delta.get((x, letter)), a.delta.get((y, letter))
            if (tx is None) != (ty is None):
                # merging a defined and an undefined transition is never compatible
                return [tuple(a.states)]
            if tx is not None:
                pending.append((tx, ty))
    classes: Dict[str, List[str]] = {}
    for s in a.states:
        classes.setdefault(find(s), []).append(s)
    return [tuple(c) for c in classes.values()]


def quotient(a: Dfa, classes: Sequence[Tuple[str, ...]]) -> Dfa:
    """Quotient automaton; each class is named by its first state."""
    name = {s: c[0] for c in classes for s in c}
    delta = {(name[s], x): name[t] for (s, x), t in a.delta.items()}
    return Dfa(a.alphabet, tuple(c[0] for c in classes), name[a.initial],
               frozenset(name[s] for s in a.terminal), delta)


def _decomposition(m: Dfa, classes: Sequence[Tuple[str, ...]], method: str) -> IndecomposabilityVerdict:
    """Z generating {u | i·u ≡ i} for a proper stable equivalence; X ⊂ Z* and Z ≠ X, A."""
    merged = quotient(m, classes)
    code, _ = _return_automata(merged.with_terminal({merged.initial}))
    return IndecomposabilityVerdict('decomposable', witness_code=_words(code), congruence=tuple(classes),
                                    method=method)


def classify_indecomposable(x: Sequence[str], alphabet: Optional[Alphabet] = None,
                            max_states: Optional[int] = None, cap: Optional[int] = None
                            ) -> IndecomposabilityVerdict:
    """
    Classify a finite maximal prefix code.

    Decomposability is tested first through the stable equivalence of
    strong synchronizability, then through the principal congruences that
    identify the initial state with another state. Either yields
    'decomposable' with a code Z such that X ⊂ Z*. Otherwise the verdict
    is 'synchronized' (degree 1) or 'left-root-of-dense-birecurrent' with
    the terminal set T of the witnessing set.
    """
    words = sorted(set(x))
    alphabet = alphabet or Alphabet.from_words(words)
    if not is_maximal_prefix(words, alphabet=alphabet):
        raise DomainError('classification needs a finite maximal prefix code')
    m = minimize(literal_automaton(words, alphabet))
    max_states = max_states or birec_setting('CLASSIFY_MAX_STATES')
    if len(m.states) > max_states:
        logger.warning(f"⚠️ {len(m.states)} states exceed the classification bound {max_states}")
        return IndecomposabilityVerdict('indeterminate')

    g = transition_monoid(m, cap)
    rho = strongly_synchronizable_classes(m, g)
    if 1 < len(rho) < len(m.states):
        logger.info(f"🔍 Decomposable through strong synchronizability: {rho}")
        return _decomposition(m, rho, 'strong-synchronizability')

    for q in m.states:
        if q == m.initial:
            continue
        classes = principal_congruence(m, m.initial, q)
        if len(classes) > 1:
            logger.info(f"🔍 Decomposable through the congruence generated by ({m.initial}, {q})")
            return _decomposition(m, classes, 'principal-congruence')

    if g.minimal_rank == 1:
        return IndecomposabilityVerdict('synchronized', degree=1)
    if len(rho) != len(m.states):
        raise InvariantViolation(f"strongly synchronizable classes {rho} of an indecomposable code are not trivial")

    first = g.ideal[0]
    terminal = next(c for c in g.kernel_labels(first) if m.initial in c)
    s = m.with_terminal(terminal)
    if len(minimize(s).states) != len(m.states):
        raise InvariantViolation(f"the automaton with terminal set {terminal} is not minimal")
    if not birecurrence_check(s, cap).verdict or not is_dense(s, cap=cap):
        raise InvariantViolation(f"terminal set {terminal} does not give a dense birecurrent set")
    finite_type = recurrent_decomposition(s).finite_type
    logger.info(f"🔍 Indecomposable of degree {g.minimal_rank}; T = {terminal}, finite type {finite_type}")
    return IndecomposabilityVerdict('left-root-of-dense-birecurrent', degree=g.minimal_rank,
                                    terminal=tuple(terminal), birecurrent_set=minimize(s),
                                    finite_type=finite_type)
