# apps/birecurrence/operations.py
"""Recurrence and birecurrence verdicts, degree, index and density."""
import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from apps.automata.models import Alphabet, Dfa
from apps.automata.operations import deterministic_reversal, is_strongly_connected, literal_automaton, minimize
from apps.birecurrence.models import BirecurrenceCheck, BirecurrenceReport, RecurrentDecomposition
from apps.birecurrence.roots import left_root, right_root, verify_decomposition
from apps.codes.models import Bernoulli
from apps.codes.operations import average_length
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InternalInconsistency, InvariantViolation
from apps.monoid.models import GreenStructure
from apps.monoid.operations import find_saturating_word, transition_monoid

logger = logging.getLogger(__name__)

# distance between a Cesàro average and its limit that is logged as suspicious
CESARO_TOLERANCE = Fraction(1, 20)


def is_recurrent(s: Dfa) -> bool:
    """True iff the minimal automaton is strongly connected (false for the empty set)."""
    return is_strongly_connected(minimize(s))


def birecurrence_check(s: Dfa, cap: Optional[int] = None, g: Optional[GreenStructure] = None
                       ) -> BirecurrenceCheck:
    """
    Decide birecurrence twice and compare.

    (i) the deterministic reversal of the minimal automaton is strongly
    connected; (ii) T is saturated by a word of minimal nonzero rank.
    """
    m = minimize(s)
    if not is_strongly_connected(m):
        return BirecurrenceCheck(False, False, None)
    by_reversal = is_strongly_connected(deterministic_reversal(m))
    g = g or transition_monoid(m, cap)
    word = find_saturating_word(m, m.terminal, g)
    if by_reversal != (word is not None):
        logger.error(f"❌ Birecurrence methods disagree: reversal={by_reversal}, saturating word={word!r}")
        raise InternalInconsistency(
            f"reversal strongly connected is {by_reversal} but saturating word is {word!r}")
    return BirecurrenceCheck(by_reversal, by_reversal, word)


def is_birecurrent(s: Dfa, cap: Optional[int] = None) -> bool:
    return birecurrence_check(s, cap).verdict


def degree(s: Dfa, cap: Optional[int] = None) -> Optional[int]:
    """Minimal nonzero rank of the minimal automaton."""
    m = minimize(s)
    if not m.states:
        return None
    return transition_monoid(m, cap).minimal_rank


def is_dense(s: Dfa, g: Optional[GreenStructure] = None, cap: Optional[int] = None) -> bool:
    """The minimal automaton is complete and no word has rank 0."""
    m = minimize(s)
    if not m.states or not m.is_complete:
        return False
    g = g or transition_monoid(m, cap)
    return g.zero is None


def _index_by_kernel(m: Dfa, g: GreenStructure) -> Fraction:
    """d/k where k counts the kernel classes of a saturating word inside T."""
    values = set()
    for i in g.ideal:
        classes = g.kernel_labels(i)
        inside = [c for c in classes if set(c) <= m.terminal]
        if all(set(c) <= m.terminal or not set(c) & m.terminal for c in classes) and inside:
            values.add(Fraction(g.minimal_rank, len(inside)))
    if len(values) != 1:
        raise InvariantViolation(f"index depends on the saturating word: {sorted(values)}")
    return values.pop()


def _index_by_h_classes(m: Dfa, g: GreenStructure) -> Fraction:
    """Card(H) / Card(H ∩ φ(S)), the same for every H-class of the minimal ideal."""
    initial = m.index[m.initial]
    terminal = {m.index[q] for q in m.terminal}
    in_s = {e.id for e in g.elements if e.value.images[initial] in terminal}
    values = set()
    for h in sorted({g.h_class[i] for i in g.ideal}):
        members = g.h_members(h)
        meet = sum(1 for i in members if i in in_s)
        if not meet:
            raise InvariantViolation(f"φ(S) misses the H-class of {g.elements[members[0]].witness!r}")
        values.add(Fraction(len(members), meet))
    if len(values) != 1:
        raise InvariantViolation(f"Card(H)/Card(H∩φ(S)) varies over H-classes: {sorted(values)}")
    return values.pop()


def index(s: Dfa, cap: Optional[int] = None) -> Fraction:
    """Index of a dense birecurrent set, computed from kernels and from H-classes."""
    m = minimize(s)
    g = transition_monoid(m, cap) if m.states else None
    if g is None or not is_dense(m, g) or not birecurrence_check(m, g=g).verdict:
        raise DomainError('the index is defined for dense birecurrent sets')
    by_kernel = _index_by_kernel(m, g)
    by_groups = _index_by_h_classes(m, g)
    if by_kernel != by_groups:
        raise InternalInconsistency(f"index d/k = {by_kernel} but Card(H)/Card(H∩φ(S)) = {by_groups}")
    return by_kernel


def density(s: Dfa, pi: Optional[Bernoulli] = None, cap: Optional[int] = None) -> Fraction:
    """1/i(S); the same for every positive Bernoulli distribution."""
    return 1 / index(s, cap)


def cesaro_average(s: Dfa, pi: Optional[Bernoulli] = None, n: Optional[int] = None) -> Fraction:
    """(1/N) Σ_{k<N} π(S ∩ A^k), computed exactly by propagating π over the states."""
    n = n or birec_setting('CESARO_N')
    pi = pi or Bernoulli.uniform(s.alphabet)
    if s.initial is None:
        return Fraction(0)
    weights = {q: Fraction(0) for q in s.states}
    weights[s.initial] = Fraction(1)
    total = Fraction(0)
    for _ in range(n):
        total += sum((weights[q] for q in s.terminal), Fraction(0))
        following = {q: Fraction(0) for q in s.states}
        for (q, letter), t in s.delta.items():
            if weights[q]:
                following[t] += weights[q] * Fraction(pi.probs[letter])
        weights = following
    return total / n


def code_star_density(x: Sequence[str], pi: Optional[Bernoulli] = None, alphabet: Optional[Alphabet] = None,
                      n: Optional[int] = None) -> Tuple[Fraction, Fraction]:
    """
    Cesàro average of X* next to 1/λ(X) for a finite maximal prefix code X.

    Returns:
        (average over the first ``n`` lengths, 1/λ(X))
    """
    words = sorted(set(x))
    alphabet = alphabet or (Alphabet(tuple(sorted(pi.probs))) if pi else Alphabet.from_words(words))
    pi = pi or Bernoulli.uniform(alphabet)
    expected = 1 / average_length(words, pi, alphabet)
    average = cesaro_average(literal_automaton(words, alphabet), pi, n)
    if abs(average - expected) > CESARO_TOLERANCE:
        logger.warning(f"⚠️ Cesàro average {float(average):.4f} of X* is far from 1/λ(X) = {expected}")
    return average, expected


def saturated_terminal_sets(a: Dfa, word: Optional[str] = None, g: Optional[GreenStructure] = None,
                            cap: Optional[int] = None) -> List[Tuple[str, ...]]:
    """
    Nonempty unions of kernel classes of words of minimal nonzero rank.

    With ``word`` only its kernel is used; otherwise every element of the
    minimal ideal contributes, in witness order, without repetitions.
    """
    if not is_strongly_connected(a):
        raise DomainError('saturated terminal sets need a strongly connected automaton')
    g = g or transition_monoid(a, cap)
    if word is not None:
        element = g.element_of(word)
        if element not in set(g.ideal):
            raise DomainError(f"{word!r} does not have minimal nonzero rank")
        kernels = [g.kernel_labels(element)]
    else:
        kernels = []
        for i in g.ideal:
            kernel = g.kernel_labels(i)
            if kernel not in kernels:
                kernels.append(kernel)
    order = a.index
    found: List[Tuple[str, ...]] = []
    for classes in kernels:
        for size in range(1, len(classes) + 1):
            for chosen in combinations(classes, size):
                union = tuple(sorted({q for c in chosen for q in c}, key=order.__getitem__))
                if union not in found:
                    found.append(union)
    return found


def birecurrence_report(s: Dfa, bound: Optional[int] = None, cap: Optional[int] = None) -> BirecurrenceReport:
    """
    Everything the workbench knows about the set recognized by ``s``.

    Args:
        s: deterministic automaton
        bound: length bound for the X*P = QY* = S verification
        cap: monoid enumeration cap

    Returns:
        BirecurrenceReport
    """
    m = minimize(s)
    if not is_strongly_connected(m):
        logger.info(f"📋 Not recurrent ({len(m.states)} minimal states)")
        return BirecurrenceReport(recurrent=False, birecurrent=False, states=len(m.states),
                                  degree=transition_monoid(m, cap).minimal_rank if m.states else None)
    g = transition_monoid(m, cap)
    check = birecurrence_check(m, g=g)
    decomposition: RecurrentDecomposition = left_root(m)
    fields = dict(recurrent=True, birecurrent=check.verdict, degree=g.minimal_rank, states=len(m.states),
                  saturating_word=check.saturating_word)
    if not check.verdict:
        logger.info("📋 Recurrent, not birecurrent")
        return BirecurrenceReport(decomposition=decomposition, **fields)

    decomposition = right_root(m, decomposition)
    verify_decomposition(m, decomposition, bound)
    classes = g.kernel_labels(g.element_of(check.saturating_word))
    fields.update(decomposition=decomposition, finite_type=decomposition.finite_type,
                  saturation_classes=sum(1 for c in classes if set(c) <= m.terminal))
    dense = is_dense(m, g)
    fields['dense'] = dense
    if dense:
        value = index(m, cap)
        reversal_value = index(deterministic_reversal(m), cap)
        if reversal_value != value:
            raise InvariantViolation(f"index of S is {value} but index of its reversal is {reversal_value}")
        fields.update(index=value, density=1 / value, reversal_index=reversal_value,
                      left_root_degree=_left_root_degree(m, cap))
        if fields['left_root_degree'] != g.minimal_rank:
            raise InvariantViolation(
                f"degree {g.minimal_rank} differs from the degree {fields['left_root_degree']} of the left root")
    logger.info(f"📋 Birecurrent: degree {g.minimal_rank}, dense {dense}, finite type {decomposition.finite_type}")
    return BirecurrenceReport(**fields)


def _left_root_degree(m: Dfa, cap: Optional[int]) -> Optional[int]:
    """Degree of X*, recognized by the minimal automaton with the initial state as only terminal."""
    return transition_monoid(minimize(m.with_terminal({m.initial})), cap).minimal_rank
