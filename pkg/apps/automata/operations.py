# apps/automata/operations.py
"""Standard constructions on automata: trim, subset construction, reversal, minimization."""
import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from apps.automata.models import EPSILON_TOKEN, Alphabet, Dfa, Nfa
from apps.codes.predicates import is_prefix_code
from apps.core.exceptions import DomainError, InputError, NotPrefixCode

logger = logging.getLogger(__name__)

Automaton = Union[Dfa, Nfa]


def _edges(a: Automaton) -> Iterable[Tuple[str, str, str]]:
    return a.edges() if isinstance(a, Dfa) else a.edges


def _initials(a: Automaton) -> frozenset:
    if isinstance(a, Dfa):
        return frozenset() if a.initial is None else frozenset({a.initial})
    return a.initials


def _terminals(a: Automaton) -> frozenset:
    return a.terminal if isinstance(a, Dfa) else a.terminals


def state_graph(a: Automaton) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(a.states)
    graph.add_edges_from((source, target) for source, _, target in _edges(a))
    return graph


def useful_states(a: Automaton) -> set:
    graph = state_graph(a)
    accessible = set(_initials(a))
    for state in _initials(a):
        accessible |= nx.descendants(graph, state)
    coaccessible = set(_terminals(a))
    for state in _terminals(a):
        coaccessible |= nx.ancestors(graph, state)
    return accessible & coaccessible


def trim(a: Automaton) -> Automaton:
    """Restriction to states that are both accessible and coaccessible."""
    keep = useful_states(a)
    states = tuple(q for q in a.states if q in keep)
    if isinstance(a, Dfa):
        delta = {(q, x): t for (q, x), t in a.delta.items() if q in keep and t in keep}
        initial = a.initial if a.initial in keep else None
        return Dfa(a.alphabet, states, initial, frozenset(a.terminal & keep), delta,
                   {q: m for q, m in a.members.items() if q in keep})
    edges = frozenset(e for e in a.edges if e[0] in keep and e[2] in keep)
    return Nfa(a.alphabet, states, frozenset(a.initials & keep), frozenset(a.terminals & keep), edges)


def is_trim(a: Automaton) -> bool:
    return len(useful_states(a)) == len(a.states)


def access_order(a: Dfa) -> List[str]:
    """States reachable from the initial state, in breadth-first order."""
    if a.initial is None:
        return []
    order, seen, queue = [], {a.initial}, deque([a.initial])
    while queue:
        state = queue.popleft()
        order.append(state)
        for letter in a.alphabet:
            target = a.delta.get((state, letter))
            if target is not None and target not in seen:
                seen.add(target)
                queue.append(target)
    return order


def determinize(a: Automaton) -> Dfa:
    """
    Accessible subset construction.

    States are numbered '1', '2', ... in breadth-first order and
    ``members`` maps each to its subset of states of ``a``. The empty
    subset is never a state.
    """
    nfa = a.as_nfa() if isinstance(a, Dfa) else a
    order = nfa.index
    start = tuple(sorted(nfa.initials, key=order.__getitem__))
    if not start:
        return Dfa(nfa.alphabet, (), None, frozenset(), {}, {})
    labels: Dict[Tuple[str, ...], str] = {start: '1'}
    queue = deque([start])
    delta = {}
    while queue:
        subset = queue.popleft()
        for letter in nfa.alphabet:
            image = nfa.image(subset, letter)
            if not image:
                continue
            target = tuple(sorted(image, key=order.__getitem__))
            if target not in labels:
                labels[target] = str(len(labels) + 1)
                queue.append(target)
            delta[(labels[subset], letter)] = labels[target]
    members = {label: subset for subset, label in labels.items()}
    terminal = frozenset(label for subset, label in labels.items() if set(subset) & nfa.terminals)
    logger.debug("subset construction: %d states", len(labels))
    return Dfa(nfa.alphabet, tuple(labels.values()), '1', terminal, delta, members)


def reverse(a: Automaton) -> Nfa:
    edges = frozenset((target, letter, source) for source, letter, target in _edges(a))
    return Nfa(a.alphabet, a.states, _terminals(a), _initials(a), edges)


def deterministic_reversal(s: Dfa) -> Dfa:
    """determinize(reverse(trim(s))): subset states are sets of states of ``s``."""
    return determinize(reverse(trim(s)))


def minimize(a: Dfa) -> Dfa:
    """
    Minimal (trim) automaton of L(a) by Moore refinement.

    Each class is labelled by its earliest member in breadth-first order
    and states are listed in breadth-first order; ``members`` keeps the
    merged states.
    """
    t = trim(a)
    if t.initial is None:
        return Dfa(a.alphabet, (), None, frozenset(), {}, {})
    order = access_order(t)
    block = {q: int(q in t.terminal) for q in order}
    while True:
        signatures: Dict[tuple, int] = {}
        refined = {}
        for q in order:
            signature = (block[q],) + tuple(
                block[t.delta[(q, x)]] if (q, x) in t.delta else -1 for x in t.alphabet)
            refined[q] = signatures.setdefault(signature, len(signatures))
        if len(signatures) == len(set(block.values())):
            block = refined
            break
        block = refined
    representative: Dict[int, str] = {}
    for q in order:
        representative.setdefault(block[q], q)
    states = tuple(representative[block[q]] for q in order if representative[block[q]] == q)
    delta = {(representative[block[q]], x): representative[block[target]]
             for (q, x), target in t.delta.items()}
    terminal = frozenset(representative[block[q]] for q in t.terminal)
    members = {rep: tuple(q for q in order if block[q] == b) for b, rep in representative.items()}
    logger.debug("minimized %d states to %d", len(a.states), len(states))
    return Dfa(a.alphabet, states, states[0], terminal, delta, members)


def are_isomorphic(a: Dfa, b: Dfa) -> bool:
    """Isomorphism of accessible Dfas, found by a simultaneous breadth-first walk."""
    if len(access_order(a)) != len(access_order(b)) or list(a.alphabet) != list(b.alphabet):
        return False
    if a.initial is None or b.initial is None:
        return a.initial is None and b.initial is None
    mapping = {a.initial: b.initial}
    queue = deque([a.initial])
    while queue:
        p = queue.popleft()
        q = mapping[p]
        if (p in a.terminal) != (q in b.terminal):
            return False
        for letter in a.alphabet:
            pt, qt = a.delta.get((p, letter)), b.delta.get((q, letter))
            if (pt is None) != (qt is None):
                return False
            if pt is None:
                continue
            if pt in mapping:
                if mapping[pt] != qt:
                    return False
            else:
                mapping[pt] = qt
                queue.append(pt)
    return len(set(mapping.values())) == len(mapping)


def is_strongly_connected(a: Automaton) -> bool:
    """True iff trim removes nothing and the state graph is strongly connected."""
    if not a.states or not is_trim(a):
        return False
    return nx.is_strongly_connected(state_graph(a))


def enumerate_accepted(a: Automaton, max_len: int) -> List[str]:
    """Accepted words of length at most ``max_len``, in length-lex order."""
    if isinstance(a, Dfa):
        level = [('', a.initial)] if a.initial is not None else []
        accepting = lambda state: state in a.terminal
        advance = lambda state, letter: a.delta.get((state, letter))
    else:
        start = a.initials
        level = [('', start)] if start else []
        accepting = lambda states: bool(states & a.terminals)
        advance = lambda states, letter: a.image(states, letter) or None
    words = []
    for length in range(max_len + 1):
        words.extend(word for word, state in level if accepting(state))
        if length == max_len:
            break
        level = [(word + letter, target) for word, state in level for letter in a.alphabet
                 for target in [advance(state, letter)] if target is not None]
    return words


def languages_agree(a: Automaton, b: Automaton, max_len: int) -> bool:
    return enumerate_accepted(a, max_len) == enumerate_accepted(b, max_len)


def literal_automaton(x: Sequence[str], alphabet: Optional[Alphabet] = None) -> Dfa:
    """
    Literal automaton of X* for a finite prefix code X.

    States are the proper prefixes of words of X (ε is labelled ``eps``),
    ε is both initial and terminal, and p·a = pa when pa is a proper
    prefix, p·a = ε when pa ∈ X.
    """
    words = sorted(set(x), key=lambda w: (len(w), w))
    alphabet = alphabet or Alphabet.from_words(words)
    for word in words:
        alphabet.validate(word)
    check = is_prefix_code(words)
    if not check:
        raise NotPrefixCode(check.witness)
    if not words:
        raise DomainError('the empty set generates only the empty word')
    prefixes = sorted({w[:i] for w in words for i in range(len(w))}, key=alphabet.sort_key)
    if EPSILON_TOKEN in prefixes:
        raise InputError(f"the word {EPSILON_TOKEN!r} collides with the label of the empty word")
    label = lambda p: p if p else EPSILON_TOKEN
    code, proper = set(words), set(prefixes)
    delta = {}
    for p in prefixes:
        for letter in alphabet:
            if p + letter in code:
                delta[(label(p), letter)] = EPSILON_TOKEN
            elif p + letter in proper:
                delta[(label(p), letter)] = label(p + letter)
    states = tuple(label(p) for p in prefixes)
    return Dfa(alphabet, states, EPSILON_TOKEN, frozenset({EPSILON_TOKEN}), delta)
