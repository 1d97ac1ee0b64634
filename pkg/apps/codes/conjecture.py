# apps/codes/conjecture.py
"""
Bounded search for the factorization 𝟙(J) = 𝟙(P)𝟙(M), 𝟙(K) = 𝟙(N)𝟙(Q)
and 𝟙(M)(1-𝟙(A)) = (1-𝟙(A))𝟙(N) of a dense birecurrent set of finite type,
with J the proper prefixes of the left root and K the proper suffixes of
the right root.

A failure only means no witness exists within the bound.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Optional

from apps.automata.models import Alphabet, Dfa
from apps.birecurrence.models import RecurrentDecomposition
from apps.birecurrence.operations import index, is_dense, birecurrence_check
from apps.birecurrence.roots import recurrent_decomposition
from apps.codes.models import Bernoulli, NoncommPoly
from apps.codes.operations import proper_prefixes, proper_suffixes
from apps.core.conf import birec_setting
from apps.core.exceptions import InvariantViolation
from apps.core.models import Outcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjectureResult:
    outcome: Outcome
    m: Optional[FrozenSet[str]] = None
    n: Optional[FrozenSet[str]] = None
    reason: str = ''
    index: Optional[Fraction] = None
    # π(M) under the uniform and one non-uniform distribution; both equal i(S)
    measures: Dict[str, Fraction] = field(default_factory=dict, compare=False)

    @property
    def found(self) -> bool:
        return self.outcome == Outcome.VERDICT


def skewed(alphabet: Alphabet) -> Bernoulli:
    """A fixed non-uniform distribution: weights 1, 2, ..., k normalized."""
    total = sum(range(1, len(alphabet) + 1))
    return Bernoulli({letter: Fraction(i, total) for i, letter in enumerate(alphabet, start=1)})


def _as_set(polynomial: Optional[NoncommPoly]) -> Optional[FrozenSet[str]]:
    if polynomial is None or not polynomial.is_characteristic():
        return None
    return polynomial.support()


def conjecture_search(s: Dfa, max_len: Optional[int] = None,
                      decomposition: Optional[RecurrentDecomposition] = None) -> ConjectureResult:
    """
    Look for M and N by dividing polynomials instead of enumerating subsets.

    Args:
        s: automaton of a dense birecurrent set of finite type
        max_len: bound on the length of the words of M and N
        decomposition: the roots of ``s`` when already computed

    Returns:
        ConjectureResult with outcome 'verdict' when M and N are found,
        'not_found' otherwise and 'inapplicable' when the hypotheses fail
    """
    max_len = max_len if max_len is not None else birec_setting('BOUND')
    if not birecurrence_check(s).verdict or not is_dense(s):
        return ConjectureResult(Outcome.INAPPLICABLE, reason='the set is not dense birecurrent')
    d = decomposition or recurrent_decomposition(s)
    if not (d.finite_type and d.prefix_part.finite and d.suffix_part.finite):
        return ConjectureResult(Outcome.INAPPLICABLE, reason='the set is not of finite type')

    x, y = d.left_root.words, d.right_root.words
    p, q = NoncommPoly.of_set(d.prefix_part.words), NoncommPoly.of_set(d.suffix_part.words)
    j, k = NoncommPoly.of_set(proper_prefixes(x)), NoncommPoly.of_set(proper_suffixes(y))
    m = _as_set(j.left_divide(p))
    n = _as_set(k.right_divide(q))
    if m is None or n is None:
        logger.warning("⚠️ No 0/1 quotient for 𝟙(P)⁻¹𝟙(J) or 𝟙(K)𝟙(Q)⁻¹")
        return ConjectureResult(Outcome.NOT_FOUND, reason='a quotient is not the characteristic polynomial of a set')
    if max(map(len, m | n), default=0) > max_len:
        return ConjectureResult(Outcome.NOT_FOUND, reason=f"M or N has words longer than {max_len}")

    a = NoncommPoly.letters(s.alphabet)
    if NoncommPoly.of_set(m) * (1 - a) != (1 - a) * NoncommPoly.of_set(n):
        logger.warning("⚠️ M and N found but 𝟙(M)(1-𝟙(A)) ≠ (1-𝟙(A))𝟙(N)")
        return ConjectureResult(Outcome.NOT_FOUND, m=m, n=n, reason='the commutation identity fails')

    value = index(s)
    measures = {
        'uniform': Bernoulli.uniform(s.alphabet).of_set(m),
        'skewed': skewed(s.alphabet).of_set(m),
    }
    if any(v != value for v in measures.values()):
        raise InvariantViolation(f"π(M) = {sorted(set(measures.values()))} differs from the index {value}")
    logger.info(f"🔍 Factorization found: |M| = {len(m)}, |N| = {len(n)}, π(M) = i(S) = {value}")
    return ConjectureResult(Outcome.VERDICT, m=m, n=n, index=value, measures=measures)
