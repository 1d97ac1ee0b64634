# apps/automata/models.py
"""
Automata over a finite alphabet.

Letters are single characters and words are plain ``str`` values; the
empty word is ``''`` and prints as ``eps``. States are string labels;
their order in ``states`` is meaningful (it fixes matrix indices).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from apps.core.exceptions import InputError

EPSILON = ''
EPSILON_TOKEN = 'eps'


def format_word(word: str) -> str:
    return word if word else EPSILON_TOKEN


def reverse_word(word: str) -> str:
    return word[::-1]


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise InputError('alphabet is empty')
        if len(set(self.letters)) != len(self.letters):
            raise InputError(f"alphabet repeats a letter: {' '.join(self.letters)}")
        for letter in self.letters:
            if len(letter) != 1 or letter.isspace() or letter == '#':
                raise InputError(f"letters must be single characters, got {letter!r}")

    @classmethod
    def of(cls, letters: Iterable[str]) -> 'Alphabet':
        return cls(tuple(letters))

    @classmethod
    def from_words(cls, words: Iterable[str]) -> 'Alphabet':
        return cls(tuple(sorted({letter for word in words for letter in word})))

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter) -> bool:
        return letter in self.letters

    @cached_property
    def _rank(self) -> Dict[str, int]:
        return {letter: i for i, letter in enumerate(self.letters)}

    def validate(self, word: str) -> str:
        for letter in word:
            if letter not in self._rank:
                raise InputError(f"unknown letter {letter!r} in {word!r}")
        return word

    def sort_key(self, word: str) -> Tuple[int, Tuple[int, ...]]:
        """Length-lexicographic (shortlex) order induced by the letter order."""
        return len(word), tuple(self._rank[letter] for letter in word)

    def words(self, max_len: int) -> Iterator[str]:
        """All words of length at most ``max_len`` in length-lex order."""
        for length in range(max_len + 1):
            for letters in product(self.letters, repeat=length):
                yield ''.join(letters)


@dataclass(frozen=True)
class Dfa:
    """Partial deterministic automaton; ``delta`` misses undefined transitions."""

    alphabet: Alphabet
    states: Tuple[str, ...]
    initial: Optional[str]
    terminal: FrozenSet[str]
    delta: Mapping[Tuple[str, str], str]
    members: Mapping[str, Tuple[str, ...]] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        known = set(self.states)
        if len(known) != len(self.states):
            raise InputError('duplicate state label')
        if self.initial is not None and self.initial not in known:
            raise InputError(f"initial state {self.initial!r} is not a state")
        if not set(self.terminal) <= known:
            raise InputError('terminal states must be states')
        for (state, letter), target in self.delta.items():
            if state not in known or target not in known:
                raise InputError(f"transition {state} {letter} {target} uses an unknown state")
            if letter not in self.alphabet:
                raise InputError(f"unknown letter {letter!r}")

    @cached_property
    def index(self) -> Dict[str, int]:
        return {state: i for i, state in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)

    def step(self, state: Optional[str], letter: str) -> Optional[str]:
        if state is None:
            return None
        return self.delta.get((state, letter))

    def run(self, word: str, start: Optional[str] = None) -> Optional[str]:
        state = self.initial if start is None else start
        for letter in word:
            state = self.delta.get((state, letter))
            if state is None:
                return None
        return state

    def accepts(self, word: str) -> bool:
        self.alphabet.validate(word)
        if self.initial is None:
            return False
        return self.run(word) in self.terminal

    @property
    def is_complete(self) -> bool:
        return all((q, a) in self.delta for q in self.states for a in self.alphabet)

    def edges(self) -> Iterator[Tuple[str, str, str]]:
        for state in self.states:
            for letter in self.alphabet:
                target = self.delta.get((state, letter))
                if target is not None:
                    yield state, letter, target

    def with_terminal(self, terminal: Iterable[str]) -> 'Dfa':
        return Dfa(self.alphabet, self.states, self.initial, frozenset(terminal), self.delta, self.members)

    def with_initial(self, initial: Optional[str]) -> 'Dfa':
        return Dfa(self.alphabet, self.states, initial, self.terminal, self.delta, self.members)

    def as_nfa(self) -> 'Nfa':
        return Nfa(self.alphabet, self.states,
                   frozenset() if self.initial is None else frozenset({self.initial}),
                   self.terminal, frozenset(self.edges()))


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    states: Tuple[str, ...]
    initials: FrozenSet[str]
    terminals: FrozenSet[str]
    edges: FrozenSet[Tuple[str, str, str]]

    def __post_init__(self):
        known = set(self.states)
        if len(known) != len(self.states):
            raise InputError('duplicate state label')
        if not (set(self.initials) <= known and set(self.terminals) <= known):
            raise InputError('initial and terminal states must be states')
        for source, letter, target in self.edges:
            if source not in known or target not in known:
                raise InputError(f"edge {source} {letter} {target} uses an unknown state")
            if letter not in self.alphabet:
                raise InputError(f"unknown letter {letter!r}")

    @cached_property
    def index(self) -> Dict[str, int]:
        return {state: i for i, state in enumerate(self.states)}

    @cached_property
    def _successors(self) -> Dict[Tuple[str, str], Tuple[str, ...]]:
        table: Dict[Tuple[str, str], list] = {}
        for source, letter, target in self.edges:
            table.setdefault((source, letter), []).append(target)
        return {k: tuple(sorted(v, key=self.index.__getitem__)) for k, v in table.items()}

    def __len__(self) -> int:
        return len(self.states)

    def successors(self, state: str, letter: str) -> Tuple[str, ...]:
        return self._successors.get((state, letter), ())

    def sorted_edges(self) -> Tuple[Tuple[str, str, str], ...]:
        order = self.index
        rank = {a: i for i, a in enumerate(self.alphabet)}
        return tuple(sorted(self.edges, key=lambda e: (order[e[0]], rank[e[1]], order[e[2]])))

    def image(self, states: Iterable[str], word: str) -> FrozenSet[str]:
        current = set(states)
        for letter in word:
            current = {t for s in current for t in self.successors(s, letter)}
        return frozenset(current)

    def accepts(self, word: str) -> bool:
        self.alphabet.validate(word)
        return bool(self.image(self.initials, word) & self.terminals)

    @property
    def is_deterministic(self) -> bool:
        return len(self.initials) <= 1 and all(len(v) <= 1 for v in self._successors.values())


@dataclass(frozen=True)
class ScalarOutputDfa:
    """Deterministic automaton whose output on a state is a rational number."""

    alphabet: Alphabet
    states: Tuple[str, ...]
    initial: Optional[str]
    delta: Mapping[Tuple[str, str], str]
    tau: Mapping[str, Fraction]

    def __post_init__(self):
        known = set(self.states)
        if self.initial is not None and self.initial not in known:
            raise InputError(f"initial state {self.initial!r} is not a state")
        for (state, letter), target in self.delta.items():
            if state not in known or target not in known or letter not in self.alphabet:
                raise InputError(f"bad transition {state} {letter} {target}")

    @property
    def dfa(self) -> Dfa:
        support = frozenset(q for q, v in self.tau.items() if v != 0)
        return Dfa(self.alphabet, self.states, self.initial, support, self.delta)

    def coefficient(self, word: str) -> Fraction:
        self.alphabet.validate(word)
        state = self.dfa.run(word) if self.initial is not None else None
        if state is None:
            return Fraction(0)
        return Fraction(self.tau.get(state, 0))

    def values(self) -> Tuple[Fraction, ...]:
        """Distinct nonzero outputs, in increasing order."""
        return tuple(sorted({Fraction(v) for v in self.tau.values() if v != 0}))
