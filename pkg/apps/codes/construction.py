# apps/codes/construction.py
"""
Birecurrent sets of finite type built from pure squares.

For a pure square w² of a finite maximal prefix code Z with G = Zw⁻¹ and
D = w⁻¹Z:

    𝟙(δ_w(Z)) = (1+w)(𝟙(Z)-1+(𝟙(G)-1)w(𝟙(D)-1))+1
    𝟙(γ_w(Z)) = (𝟙(Z)-1+(𝟙(G)-1)w(𝟙(D)-1))(1+w)+1
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from apps.automata.models import Alphabet, Dfa, Nfa
from apps.automata.operations import determinize, literal_automaton, minimize
from apps.birecurrence.models import RecurrentDecomposition
from apps.birecurrence.operations import birecurrence_check, is_dense
from apps.birecurrence.roots import recurrent_decomposition, verify_decomposition
from apps.codes.models import NoncommPoly, PureSquare
from apps.codes.operations import is_maximal_prefix, proper_prefixes, pure_square, pure_squares
from apps.codes.predicates import is_bifix_code, is_suffix_code
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InvariantViolation

logger = logging.getLogger(__name__)


def _middle(ps: PureSquare) -> NoncommPoly:
    one = NoncommPoly.one()
    w = NoncommPoly({ps.w: 1})
    return (NoncommPoly.of_set(ps.code) - one
            + (NoncommPoly.of_set(ps.G) - one) * w * (NoncommPoly.of_set(ps.D) - one))


def _support(polynomial: NoncommPoly, name: str) -> FrozenSet[str]:
    for word, c in polynomial:
        if c != 1:
            raise InvariantViolation(f"{name}: coefficient {c} on {word or 'eps'!r}; not a valid pure square")
    return polynomial.support()


def delta_polynomial(ps: PureSquare) -> NoncommPoly:
    return (1 + NoncommPoly({ps.w: 1})) * _middle(ps) + 1


def gamma_polynomial(ps: PureSquare) -> NoncommPoly:
    return _middle(ps) * (1 + NoncommPoly({ps.w: 1})) + 1


def delta_w(ps: PureSquare, alphabet: Optional[Alphabet] = None) -> FrozenSet[str]:
    """δ_w(Z), asserted to be a finite maximal prefix code."""
    x = _support(delta_polynomial(ps), f"δ_{ps.w}")
    alphabet = alphabet or Alphabet.from_words(ps.code)
    if not is_maximal_prefix(x, alphabet=alphabet):
        raise InvariantViolation(f"δ_{ps.w}(Z) is not a maximal prefix code")
    return x


def gamma_w(ps: PureSquare, alphabet: Optional[Alphabet] = None) -> FrozenSet[str]:
    """
    γ_w(Z).

    For bifix Z it is a suffix code, equal to the reversal of δ_w̃(Z̃); for a
    prefix code that is not suffix (the second stage of the iteration) no
    such property holds and only the 0/1 coefficients are checked.
    """
    y = _support(gamma_polynomial(ps), f"γ_{ps.w}")
    if is_bifix_code(ps.code):
        if not is_suffix_code(y):
            raise InvariantViolation(f"γ_{ps.w}(Z) is not a suffix code")
        mirrored = PureSquare(frozenset(z[::-1] for z in ps.code), ps.w[::-1])
        expected = frozenset(u[::-1] for u in _support(delta_polynomial(mirrored), 'δ on the reversal'))
        if expected != y:
            raise InvariantViolation(f"γ_{ps.w}(Z) differs from the reversal of δ on the reversed code")
    return y


def proper_prefix_polynomial(ps: PureSquare, alphabet: Optional[Alphabet] = None) -> NoncommPoly:
    """
    (1+w)(𝟙(R)+(𝟙(G)-1)w𝟙(U)) with R, U the proper prefixes of Z and D.

    Checked to be 𝟙(P) for P the proper prefixes of δ_w(Z), and to satisfy
    𝟙(X)-1 = 𝟙(P)(𝟙(A)-1).
    """
    alphabet = alphabet or Alphabet.from_words(ps.code)
    w = NoncommPoly({ps.w: 1})
    r = NoncommPoly.of_set(proper_prefixes(ps.code))
    u = NoncommPoly.of_set(proper_prefixes(ps.D))
    p = (1 + w) * (r + (NoncommPoly.of_set(ps.G) - 1) * w * u)
    x = delta_w(ps, alphabet)
    if p != NoncommPoly.of_set(proper_prefixes(x)):
        raise InvariantViolation('the proper prefixes of δ_w(Z) do not match the factorized polynomial')
    if NoncommPoly.of_set(x) - 1 != p * (NoncommPoly.letters(alphabet) - 1):
        raise InvariantViolation('𝟙(X) - 1 differs from 𝟙(P)(𝟙(A) - 1)')
    return p


def _star_automaton(x: FrozenSet[str], terminal_words: Tuple[str, ...], alphabet: Alphabet) -> Dfa:
    """Minimal automaton of X*P for a finite maximal prefix code X and prefixes P of X."""
    literal = literal_automaton(sorted(x), alphabet)
    terminal = {literal.run(p) for p in terminal_words}
    if None in terminal:
        raise DomainError('every word of P must be a proper prefix of X')
    return minimize(literal.with_terminal(terminal))


@dataclass(frozen=True)
class DpSet:
    automaton: Dfa
    decomposition: RecurrentDecomposition
    x: FrozenSet[str]
    y: FrozenSet[str]


def dp_set(ps: PureSquare, alphabet: Optional[Alphabet] = None, bound: Optional[int] = None) -> DpSet:
    """
    S = δ_w(Z)*{ε, w}, a dense birecurrent set of finite type.

    Verifies X*(1+w) = (1+w)Y* with Y = γ_w(Z) on words up to ``bound``.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    if not is_bifix_code(ps.code):
        raise DomainError('the construction needs a bifix code Z')
    alphabet = alphabet or Alphabet.from_words(ps.code)
    x, y = delta_w(ps, alphabet), gamma_w(ps, alphabet)
    one_plus_w = 1 + NoncommPoly({ps.w: 1})
    left = NoncommPoly.of_set(x).star(bound).multiply(one_plus_w, bound)
    right = one_plus_w.multiply(NoncommPoly.of_set(y).star(bound), bound)
    if left != right:
        raise InvariantViolation(f"X*(1+w) differs from (1+w)Y* on words of length at most {bound}")
    s = _star_automaton(x, ('', ps.w), alphabet)
    if not birecurrence_check(s).verdict or not is_dense(s):
        raise InvariantViolation('δ_w(Z)*{ε, w} is not a dense birecurrent set')
    decomposition = recurrent_decomposition(s)
    if not decomposition.finite_type:
        raise InvariantViolation('δ_w(Z)*{ε, w} is not of finite type')
    verify_decomposition(s, decomposition, bound)
    logger.info(f"🏗️ dp set for w={ps.w}: {len(s.states)} states, |X| = {len(x)}")
    return DpSet(s, decomposition, x, y)


def flower_automaton(code: FrozenSet[str], alphabet: Alphabet, center: str = 'c') -> Nfa:
    """Unambiguous automaton of X* with one petal per word of X."""
    states = [center]
    edges = set()
    for number, word in enumerate(sorted(code, key=alphabet.sort_key), start=1):
        previous = center
        for position, letter in enumerate(word[:-1], start=1):
            state = f"{number}.{position}"
            states.append(state)
            edges.add((previous, letter, state))
            previous = state
        edges.add((previous, word[-1], center))
    return Nfa(alphabet, tuple(states), frozenset({center}), frozenset({center}), frozenset(edges))


def _path(prefix: str, word: str, start: str, end: Optional[str]) -> Tuple[List[str], set]:
    """States and edges of a path spelling ``word`` from ``start``; ends in ``end`` or a fresh state."""
    states, edges, previous = [], set(), start
    for position, letter in enumerate(word, start=1):
        last = position == len(word)
        state = end if last and end is not None else f"{prefix}{position}"
        if state != end:
            states.append(state)
        edges.add((previous, letter, state))
        previous = state
    return states, edges


def vincent_automaton(u: FrozenSet[str], w: str, alphabet: Alphabet) -> Nfa:
    """{ε, w²}U*{ε, w}: a path spelling w² into the center of the flower of U*, and a tail spelling w."""
    flower = flower_automaton(u, alphabet)
    head_states, head_edges = _path('h', w + w, 'start', 'c')
    tail_states, tail_edges = _path('t', w, 'c', None)
    # the center is initial too, for the ε of {ε, w²}
    return Nfa(alphabet, ('start',) + flower.states + tuple(head_states) + tuple(tail_states),
               frozenset({'start', 'c'}), frozenset({'c', tail_states[-1]}),
               flower.edges | frozenset(head_edges) | frozenset(tail_edges))


@dataclass(frozen=True)
class VincentReport:
    automaton: Dfa
    nfa: Nfa = field(compare=False)
    x: FrozenSet[str]
    y: FrozenSet[str]
    u: FrozenSet[str]
    identities: Tuple[str, ...]
    birecurrent: bool
    finite_type: bool


def vincent_iteration(z: FrozenSet[str], w: str, alphabet: Optional[Alphabet] = None,
                      bound: Optional[int] = None) -> VincentReport:
    """
    V = {ε, w²}U*{ε, w} with U = γ_{w²}(δ_w(Z)).

    Checks that w⁴ is a pure square of X = δ_w(Z) and of Y = γ_w(Z), the
    identities relating G', D', G'', D'' to G and D, and that V is
    birecurrent of finite type.
    """
    from apps.unambiguous.operations import is_unambiguous

    z = frozenset(z)
    alphabet = alphabet or Alphabet.from_words(z)
    if not is_bifix_code(z) or not is_maximal_prefix(z, alphabet=alphabet):
        raise DomainError('the iteration needs a finite maximal bifix code')
    try:
        first = pure_square(z, w)
    except DomainError as exc:
        raise DomainError(f"first stage: {exc.message}") from exc
    x, y = delta_w(first, alphabet), gamma_w(first, alphabet)
    w2 = w + w
    try:
        on_x, on_y = pure_square(x, w2), pure_square(y, w2)
    except DomainError as exc:
        raise DomainError(f"second stage: {exc.message}") from exc
    if all(ps.w != w2 for ps in pure_squares(x)):
        raise InvariantViolation('w⁴ is not listed among the pure squares of δ_w(Z)')

    one, wp = NoncommPoly.one(), NoncommPoly({w: 1})
    g, d = NoncommPoly.of_set(first.G) - one, NoncommPoly.of_set(first.D) - one
    checks: Dict[str, bool] = {
        "G' = X(w²)⁻¹": NoncommPoly.of_set(on_x.G) - one == (one + wp) * g,
        "D' = (w²)⁻¹X": NoncommPoly.of_set(on_x.D) - one == (one + wp) * d,
        "G'' = Y(w²)⁻¹": NoncommPoly.of_set(on_y.G) - one == g * (one + wp),
        "D'' = (w²)⁻¹Y": NoncommPoly.of_set(on_y.D) - one == d * (one + wp),
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InvariantViolation(f"identities fail: {', '.join(failed)}")

    u = gamma_w(on_x, alphabet)
    nfa = vincent_automaton(u, w, alphabet)
    check = is_unambiguous(nfa)
    if not check.verdict:
        raise InvariantViolation(f"the automaton of V is ambiguous on {check.witness!r}")
    automaton = minimize(determinize(nfa))
    birecurrent = birecurrence_check(automaton).verdict
    finite_type = birecurrent and recurrent_decomposition(automaton).finite_type
    if not (birecurrent and finite_type):
        raise InvariantViolation('V is not a birecurrent set of finite type')
    logger.info(f"🏗️ Vincent iteration: |U| = {len(u)}, minimal automaton of V has {len(automaton.states)} states")
    return VincentReport(automaton, nfa, x, y, u, tuple(checks), birecurrent, finite_type)


@dataclass(frozen=True)
class FamilyMember:
    n: int
    z: FrozenSet[str]
    x: FrozenSet[str]
    p: Tuple[str, ...]
    automaton: Dfa


def power_family(n: int, alphabet: Alphabet = Alphabet(('a', 'b'))) -> FamilyMember:
    """
    Z = {aⁿ, aⁿ⁻¹b, ..., ab, b}, X = Z², P = {ε, a, ..., aⁿ⁻¹}.

    S = X*P is birecurrent of degree 2; 𝟙(Z)𝟙(P) = 𝟙(P)𝟙(Z̃) is checked.
    """
    if n < 2:
        raise DomainError('the family starts at n = 2')
    a, b = alphabet.letters[:2]
    z = frozenset([a * n] + [a * k + b for k in range(n)])
    x = frozenset(u + v for u in z for v in z)
    p = tuple(a * k for k in range(n))
    zp = NoncommPoly.of_set(z) * NoncommPoly.of_set(p)
    pz = NoncommPoly.of_set(p) * NoncommPoly.of_set(u[::-1] for u in z)
    if zp != pz:
        raise InvariantViolation('𝟙(Z)𝟙(P) differs from 𝟙(P)𝟙(Z̃)')
    return FamilyMember(n, z, x, p, _star_automaton(x, p, alphabet))
