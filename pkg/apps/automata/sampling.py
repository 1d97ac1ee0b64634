# apps/automata/sampling.py
"""Seeded random automata for property checks."""
from typing import Optional

import numpy as np

from apps.automata.models import Alphabet, Dfa, Nfa
from apps.automata.operations import is_strongly_connected


def random_dfa(rng: np.random.Generator, n_states: int, alphabet: Alphabet,
               density: float = 0.8) -> Dfa:
    """Partial Dfa on states '1'..'n'; each transition is defined with probability ``density``."""
    states = tuple(str(i + 1) for i in range(n_states))
    delta = {}
    for q in states:
        for letter in alphabet:
            if rng.random() < density:
                delta[(q, letter)] = states[int(rng.integers(n_states))]
    terminal = frozenset(q for q in states if rng.random() < 0.5) or frozenset({states[0]})
    return Dfa(alphabet, states, states[0], terminal, delta)


def random_strongly_connected_dfa(rng: np.random.Generator, max_states: int, alphabet: Alphabet,
                                  density: float = 0.8, attempts: int = 1000) -> Optional[Dfa]:
    """Rejection sampling of a strongly connected partial Dfa with 1..max_states states."""
    for _ in range(attempts):
        a = random_dfa(rng, int(rng.integers(1, max_states + 1)), alphabet, density)
        if is_strongly_connected(a):
            return a
    return None


def random_nfa(rng: np.random.Generator, n_states: int, alphabet: Alphabet,
               edge_probability: float = 0.25) -> Nfa:
    states = tuple(str(i + 1) for i in range(n_states))
    edges = frozenset((p, letter, q) for p in states for letter in alphabet for q in states
                      if rng.random() < edge_probability)
    initials = frozenset(q for q in states if rng.random() < 0.3) or frozenset({states[0]})
    terminals = frozenset(q for q in states if rng.random() < 0.3) or frozenset({states[-1]})
    return Nfa(alphabet, states, initials, terminals, edges)
