# apps/codes/operations.py
"""Measures and maximality of finite prefix codes; pure squares."""
import logging
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional

from apps.automata.models import Alphabet
from apps.automata.operations import literal_automaton
from apps.codes.models import Bernoulli, PureSquare
from apps.codes.predicates import is_prefix_code
from apps.core.exceptions import DomainError, InvariantViolation, NotPrefixCode

logger = logging.getLogger(__name__)


def proper_prefixes(words: Iterable[str]) -> FrozenSet[str]:
    """Proper prefixes of the words, ε included."""
    return frozenset(w[:i] for w in words for i in range(len(w)))


def proper_suffixes(words: Iterable[str]) -> FrozenSet[str]:
    return frozenset(w[i + 1:] for w in words for i in range(len(w)))


def _resolve(words: Iterable[str], alphabet: Optional[Alphabet], pi: Optional[Bernoulli]):
    words = frozenset(words)
    alphabet = alphabet or (Alphabet(tuple(sorted(pi.probs))) if pi else Alphabet.from_words(words))
    pi = pi or Bernoulli.uniform(alphabet)
    return words, alphabet, pi


def is_maximal_prefix(x: Iterable[str], pi: Optional[Bernoulli] = None,
                      alphabet: Optional[Alphabet] = None) -> bool:
    """
    True iff the finite prefix code x is maximal.

    π(X) = 1 and completeness of the literal automaton are both computed
    and must agree.
    """
    words, alphabet, pi = _resolve(x, alphabet, pi)
    check = is_prefix_code(words)
    if not check:
        raise NotPrefixCode(check.witness)
    by_measure = pi.of_set(words) == 1
    by_automaton = literal_automaton(sorted(words), alphabet).is_complete
    if by_measure != by_automaton:
        raise InvariantViolation(
            f"maximality: π(X)=1 is {by_measure} but literal automaton completeness is {by_automaton}")
    return by_measure


def average_length(x: Iterable[str], pi: Optional[Bernoulli] = None,
                   alphabet: Optional[Alphabet] = None) -> Fraction:
    """λ(X) = Σ |x| π(x), checked against π(P) for P the proper prefixes."""
    words, alphabet, pi = _resolve(x, alphabet, pi)
    if not is_maximal_prefix(words, pi, alphabet):
        raise DomainError('average length needs a maximal prefix code')
    direct = sum((len(w) * pi.of_word(w) for w in words), Fraction(0))
    by_prefixes = pi.of_set(proper_prefixes(words))
    if direct != by_prefixes:
        raise InvariantViolation(f"average length {direct} differs from π(P) = {by_prefixes}")
    return direct


def pure_square(z: Iterable[str], w: str) -> PureSquare:
    """Validate that w² is a pure square for z."""
    z = frozenset(z)
    if not w:
        raise DomainError('a pure square needs a nonempty word w')
    x = w + w
    if x not in z:
        raise DomainError(f"{x!r} does not belong to the code")
    clash = sorted(y for y in z if y != x and y.startswith(w) and y.endswith(w))
    if clash:
        raise DomainError(f"{x!r} is not a pure square: {clash[0]!r} also begins and ends with {w!r}")
    return PureSquare(z, w)


def pure_squares(z: Iterable[str]) -> List[PureSquare]:
    """All pure squares of z, ordered by the word x = w² in length-lex order."""
    z = frozenset(z)
    check = is_prefix_code(z)
    if not check:
        raise NotPrefixCode(check.witness)
    found = []
    for x in sorted(z, key=lambda y: (len(y), y)):
        half = len(x) // 2
        if len(x) % 2 or x[:half] != x[half:]:
            continue
        w = x[:half]
        if all(y == x or not (y.startswith(w) and y.endswith(w)) for y in z):
            found.append(PureSquare(z, w))
    return found
