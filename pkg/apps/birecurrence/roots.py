# apps/birecurrence/roots.py
"""Left and right roots of a recurrent set: S = X*P = QY*."""
import logging
from dataclasses import replace
from typing import List, Optional, Tuple

import networkx as nx

from apps.automata.models import Dfa
from apps.automata.operations import (deterministic_reversal, determinize, enumerate_accepted,
                                      is_strongly_connected, minimize, reverse, state_graph, trim)
from apps.birecurrence.models import RecurrentDecomposition, WordSet
from apps.codes.models import NoncommPoly
from apps.core.conf import birec_setting
from apps.core.exceptions import DomainError, InvariantViolation

logger = logging.getLogger(__name__)


def _fresh_label(a: Dfa, base: str) -> str:
    label = f"{base}_0"
    while label in a.index:
        label += '_'
    return label


def _return_automata(m: Dfa) -> Tuple[Dfa, Dfa]:
    """
    Automata of the first-return code X to the initial state and of P.

    A fresh copy of the initial state starts every path; the initial state
    itself keeps only incoming edges, so accepted paths never return twice.
    """
    i = m.initial
    start = _fresh_label(m, i)
    delta = {}
    for (q, letter), t in m.delta.items():
        if q != i:
            delta[(q, letter)] = t
    for letter in m.alphabet:
        if (i, letter) in m.delta:
            delta[(start, letter)] = m.delta[(i, letter)]
    states = (start,) + m.states
    code = trim(Dfa(m.alphabet, states, start, frozenset({i}), delta))
    # P: proper prefixes of X ending in T, so paths must not enter i
    prefix_delta = {k: t for k, t in delta.items() if t != i}
    prefix_terminal = {q for q in m.terminal if q != i} | ({start} if i in m.terminal else set())
    prefixes = trim(Dfa(m.alphabet, states, start, frozenset(prefix_terminal), prefix_delta))
    return code, prefixes


def _is_finite_language(a: Dfa) -> bool:
    t = trim(a)
    return nx.is_directed_acyclic_graph(state_graph(t))


def _words(a: Dfa) -> Optional[Tuple[str, ...]]:
    """All accepted words when the language is finite, else None."""
    t = trim(a)
    if not _is_finite_language(t):
        return None
    return tuple(enumerate_accepted(t, len(t.states)))


def left_root(s: Dfa) -> RecurrentDecomposition:
    """
    X is the prefix code of first returns to the initial state of the minimal
    automaton, P the proper prefixes p of X with i·p terminal.
    """
    m = minimize(s)
    if not is_strongly_connected(m):
        raise DomainError('left root needs a recurrent set')
    code, prefixes = _return_automata(m)
    left = WordSet(code, _words(code))
    prefix_part = WordSet(prefixes, _words(prefixes))
    logger.debug("left root: %s", 'finite' if left.finite else 'infinite')
    return RecurrentDecomposition(left, prefix_part)


def _reversed(ws: WordSet) -> WordSet:
    automaton = minimize(determinize(reverse(ws.automaton)))
    words = None if ws.words is None else tuple(sorted((w[::-1] for w in ws.words),
                                                       key=automaton.alphabet.sort_key))
    return WordSet(automaton, words)


def right_root(s: Dfa, left: Optional[RecurrentDecomposition] = None) -> RecurrentDecomposition:
    """Adds Y and Q, obtained from the reversal: Ỹ and Q̃ are the left root and P of S̃."""
    left = left or left_root(s)
    m = minimize(s)
    mirror = deterministic_reversal(m)
    if not is_strongly_connected(mirror):
        raise DomainError('right root needs a set whose reversal is recurrent')
    mirrored = left_root(mirror)
    return replace(left, right_root=_reversed(mirrored.left_root),
                   suffix_part=_reversed(mirrored.prefix_part))


def recurrent_decomposition(s: Dfa) -> RecurrentDecomposition:
    """Both roots of a birecurrent set."""
    return right_root(s)


def is_finite_type(s: Dfa) -> bool:
    return recurrent_decomposition(s).finite_type


def verify_decomposition(s: Dfa, decomposition: RecurrentDecomposition, bound: Optional[int] = None
                         ) -> List[str]:
    """
    Check X*P = S and QY* = S on all words of length at most ``bound``.

    Only finite roots are expanded; returns the identities checked.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    target = NoncommPoly.of_set(enumerate_accepted(s, bound))
    checked = []
    d = decomposition
    if d.left_root.finite and d.prefix_part.finite:
        product = NoncommPoly.of_set(d.left_root.words).star(bound).multiply(
            NoncommPoly.of_set(d.prefix_part.words), bound)
        if product != target:
            raise InvariantViolation(f"X*P differs from S on words of length at most {bound}")
        checked.append('S = X*P')
    if d.right_root is not None and d.right_root.finite and d.suffix_part.finite:
        product = NoncommPoly.of_set(d.suffix_part.words).multiply(
            NoncommPoly.of_set(d.right_root.words).star(bound), bound)
        if product != target:
            raise InvariantViolation(f"QY* differs from S on words of length at most {bound}")
        checked.append('S = QY*')
    return checked
