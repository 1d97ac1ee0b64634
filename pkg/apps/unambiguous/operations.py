# apps/unambiguous/operations.py
"""Unambiguity test and the recurrence criteria for unambiguous automata."""
import logging
from collections import deque
from typing import Dict, Optional, Tuple

import numpy as np

from apps.automata.models import Nfa
from apps.automata.operations import (deterministic_reversal, determinize, is_strongly_connected,
                                      is_trim, minimize, reverse, trim)
from apps.birecurrence.operations import birecurrence_check
from apps.core.exceptions import AmbiguityError, DomainError, InternalInconsistency
from apps.monoid.operations import generators, transition_monoid
from apps.unambiguous.models import UnambiguityWitness, UnambiguousRecurrence

logger = logging.getLogger(__name__)

Node = Tuple[str, str, bool]


def _path_count(a: Nfa, word: str) -> int:
    """Number of successful paths labelled ``word``: 𝟙(I)μ(word)𝟙(T) over the integers."""
    gens = generators(a)
    order = a.index
    vector = np.zeros(len(a.states), dtype=np.int64)
    vector[[order[q] for q in a.initials]] = 1
    for letter in word:
        vector = vector @ gens[letter].matrix
    return int(sum(vector[order[q]] for q in a.terminals))


def is_unambiguous(a: Nfa) -> UnambiguityWitness:
    """
    Breadth-first search in the automaton of pairs.

    A node (p, q, split) records two paths with the same label ending in p
    and q; ``split`` is set once the paths have differed. The automaton is
    ambiguous iff a node (t, t', True) with t, t' terminal is reachable.
    """
    t = trim(a)
    starts = [(p, q, p != q) for p in t.states if p in t.initials for q in t.states if q in t.initials]
    parent: Dict[Node, Optional[Tuple[Node, str]]] = {s: None for s in starts}
    queue = deque(starts)
    found = None
    while queue:
        node = queue.popleft()
        p, q, split = node
        if split and p in t.terminals and q in t.terminals:
            found = node
            break
        for letter in t.alphabet:
            for p2 in t.successors(p, letter):
                for q2 in t.successors(q, letter):
                    following = (p2, q2, split or p2 != q2)
                    if following not in parent:
                        parent[following] = (node, letter)
                        queue.append(following)
    if found is None:
        return UnambiguityWitness(True)

    word, first, second, node = [], [found[0]], [found[1]], found
    while parent[node] is not None:
        node, letter = parent[node]
        word.append(letter)
        first.append(node[0])
        second.append(node[1])
    witness = ''.join(reversed(word))
    paths = (tuple(reversed(first)), tuple(reversed(second)))
    if _path_count(t, witness) < 2:
        raise InternalInconsistency(f"witness {witness!r} has fewer than two successful paths")
    logger.info(f"🔍 Ambiguous on {witness or 'eps'!r}")
    return UnambiguityWitness(False, witness, paths)


def require_unambiguous(a: Nfa) -> Nfa:
    check = is_unambiguous(a)
    if not check.verdict:
        raise AmbiguityError(check.witness, check.paths)
    return a


def unambiguous_recurrence(a: Nfa, cap: Optional[int] = None) -> UnambiguousRecurrence:
    """
    Look for x of minimal nonzero rank with I·x = I and y with y·T = T.

    The existence of x is equivalent to strong connectivity of the subset
    automaton, the existence of y to that of the deterministic reversal;
    both pairs are computed and must agree. When x and y exist the
    recognized set is birecurrent, which is checked on the minimal
    automaton.
    """
    if not is_trim(a):
        raise DomainError('the automaton is not trim')
    require_unambiguous(a)
    if not is_strongly_connected(a):
        raise DomainError('the automaton is not strongly connected')

    g = transition_monoid(a, cap)
    initials, terminals = frozenset(a.initials), frozenset(a.terminals)
    mirror = reverse(a)
    witness_x = next((g.elements[i].witness for i in g.ideal
                      if a.image(initials, g.elements[i].witness) == initials), None)
    witness_y = next((g.elements[i].witness for i in g.ideal
                      if mirror.image(terminals, g.elements[i].witness[::-1]) == terminals), None)

    forward = is_strongly_connected(determinize(a))
    backward = is_strongly_connected(deterministic_reversal(a))
    if forward != (witness_x is not None) or backward != (witness_y is not None):
        logger.error(f"❌ Criterion disagrees with the subset automata: x={witness_x!r} y={witness_y!r}")
        raise InternalInconsistency(
            f"subset automata strongly connected ({forward}, {backward}) but witnesses ({witness_x!r}, {witness_y!r})")

    birecurrent = birecurrence_check(minimize(determinize(a)), cap).verdict
    if forward and backward and not birecurrent:
        raise InternalInconsistency('both witnesses exist but the recognized set is not birecurrent')
    logger.info(f"📋 Unambiguous automaton: minimal rank {g.minimal_rank}, x={witness_x!r}, y={witness_y!r}")
    return UnambiguousRecurrence(forward, backward, witness_x, witness_y, g.minimal_rank, birecurrent)
