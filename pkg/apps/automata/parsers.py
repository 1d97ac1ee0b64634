# apps/automata/parsers.py
"""
Text format for automata.

    # comment
    kind dfa              (optional: dfa, nfa or scalar; otherwise chosen from the contents)
    alphabet a b
    states 1 2 3          (optional; otherwise order of first appearance)
    initial 1             (several lines allowed for nondeterministic automata;
                           a bare `initial` declares that there is none)
    final 2 3
    output 2 1/2          (scalar-output automata instead of final)
    trans 1 a 2
"""
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from apps.automata.models import Alphabet, Dfa, Nfa, ScalarOutputDfa
from apps.core.exceptions import BirecError, InputError, ParseError

logger = logging.getLogger(__name__)

KEYWORDS = ('kind', 'alphabet', 'states', 'initial', 'final', 'output', 'trans')
KINDS = ('dfa', 'nfa', 'scalar')


class _Collected:
    def __init__(self):
        self.kind: Optional[str] = None
        self.no_initial = False
        self.alphabet: Optional[Tuple[str, ...]] = None
        self.states: List[str] = []
        self.declared = False
        self.initials: List[Tuple[str, int]] = []
        self.finals: List[str] = []
        self.outputs: Dict[str, Fraction] = {}
        self.edges: List[Tuple[str, str, str, int]] = []

    def see(self, state: str):
        if state not in self.states:
            self.states.append(state)


def _collect(text: str, source: Optional[str]) -> _Collected:
    data = _Collected()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        fail = lambda msg: ParseError(msg, line=number, source=source)
        if keyword not in KEYWORDS:
            raise fail(f"unknown keyword {keyword!r}")
        if keyword == 'kind':
            if data.kind is not None:
                raise fail('kind given twice')
            if len(args) != 1 or args[0] not in KINDS:
                raise fail(f"kind must be one of {', '.join(KINDS)}")
            data.kind = args[0]
        elif keyword == 'alphabet':
            if data.alphabet is not None:
                raise fail('alphabet given twice')
            try:
                data.alphabet = Alphabet(tuple(args)).letters
            except InputError as exc:
                raise fail(exc.message) from exc
        elif keyword == 'states':
            if data.declared or data.states:
                raise fail('states must be declared once, before use')
            if len(set(args)) != len(args):
                raise fail('duplicate state label')
            data.states, data.declared = list(args), True
        elif keyword == 'initial' and not args:
            data.no_initial = True
        elif keyword in ('initial', 'final'):
            if not args:
                raise fail(f"{keyword} needs at least one state")
            for state in args:
                _check_state(data, state, fail)
                if keyword == 'initial':
                    data.initials.append((state, number))
                else:
                    data.finals.append(state)
        elif keyword == 'output':
            if len(args) != 2:
                raise fail('output needs a state and a value')
            _check_state(data, args[0], fail)
            if args[0] in data.outputs:
                raise fail(f"output of {args[0]} given twice")
            try:
                data.outputs[args[0]] = Fraction(args[1])
            except (ValueError, ZeroDivisionError) as exc:
                raise fail(f"bad rational {args[1]!r}") from exc
        else:
            if len(args) != 3:
                raise fail('trans needs source, letter and target')
            source_state, letter, target = args
            if data.alphabet is None:
                raise fail('alphabet must come before transitions')
            if letter not in data.alphabet:
                raise fail(f"unknown letter {letter!r}")
            _check_state(data, source_state, fail)
            _check_state(data, target, fail)
            data.edges.append((source_state, letter, target, number))
    if data.alphabet is None:
        raise ParseError('missing alphabet line', source=source)
    return data


def _check_state(data: _Collected, state: str, fail):
    if data.declared and state not in data.states:
        raise fail(f"undeclared state {state!r}")
    data.see(state)


def parse_automaton(text: str, kind: str = 'auto', source: Optional[str] = None
                    ) -> Union[Dfa, Nfa, ScalarOutputDfa]:
    """
    Parse an automaton.

    Args:
        text: file contents
        kind: 'dfa', 'nfa', 'scalar' or 'auto' (chosen from the contents)
        source: file name used in error messages

    Returns:
        Dfa, Nfa or ScalarOutputDfa
    """
    data = _collect(text, source)
    if kind == 'auto' and data.kind is not None:
        kind = data.kind
    if data.no_initial and data.initials:
        raise ParseError('a bare initial line excludes initial states', line=data.initials[0][1], source=source)
    if kind == 'auto':
        pairs = [(s, x) for s, x, _, _ in data.edges]
        if data.outputs:
            kind = 'scalar'
        elif len(data.initials) > 1 or len(set(pairs)) != len(pairs):
            kind = 'nfa'
        else:
            kind = 'dfa'
    alphabet = Alphabet(data.alphabet)
    states = tuple(data.states)

    if kind == 'nfa':
        seen = set()
        for s, x, t, number in data.edges:
            if (s, x, t) in seen:
                raise ParseError(f"duplicate transition {s} {x} {t}", line=number, source=source)
            seen.add((s, x, t))
        return Nfa(alphabet, states, frozenset(s for s, _ in data.initials),
                   frozenset(data.finals), frozenset(seen))

    if len(data.initials) != 1 and not (data.no_initial and not data.initials):
        line = data.initials[1][1] if len(data.initials) > 1 else None
        raise ParseError('a deterministic automaton needs exactly one initial state',
                         line=line, source=source)
    delta = {}
    for s, x, t, number in data.edges:
        if (s, x) in delta:
            raise ParseError(f"duplicate transition from ({s}, {x})", line=number, source=source)
        delta[(s, x)] = t
    initial = data.initials[0][0] if data.initials else None
    if kind == 'scalar':
        if data.finals:
            raise ParseError('use output lines instead of final in a scalar automaton', source=source)
        return ScalarOutputDfa(alphabet, states, initial, delta, dict(data.outputs))
    if data.outputs:
        raise ParseError('output lines need a scalar automaton', source=source)
    return Dfa(alphabet, states, initial, frozenset(data.finals), delta)


def load_automaton(path: Union[str, Path], kind: str = 'auto') -> Union[Dfa, Nfa, ScalarOutputDfa]:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        automaton = parse_automaton(text, kind=kind, source=path.name)
    except BirecError:
        logger.error(f"❌ Failed to parse {path.name}")
        raise
    logger.debug(f"Loaded {path.name}: {len(automaton.states)} states")
    return automaton


def dump_automaton(a: Union[Dfa, Nfa, ScalarOutputDfa]) -> str:
    """Inverse of ``parse_automaton``: kind, state order and transitions are preserved."""
    kind = 'nfa' if isinstance(a, Nfa) else 'scalar' if isinstance(a, ScalarOutputDfa) else 'dfa'
    lines = [f"kind {kind}", f"alphabet {' '.join(a.alphabet)}"]
    if a.states:
        lines.append(f"states {' '.join(a.states)}")
    if isinstance(a, Nfa):
        order = a.index
        lines.append(f"initial {' '.join(sorted(a.initials, key=order.__getitem__))}".rstrip())
        if a.terminals:
            lines.append(f"final {' '.join(sorted(a.terminals, key=order.__getitem__))}")
        lines.extend(f"trans {s} {x} {t}" for s, x, t in a.sorted_edges())
        return '\n'.join(lines) + '\n'
    lines.append('initial' if a.initial is None else f"initial {a.initial}")
    if isinstance(a, ScalarOutputDfa):
        for state in a.states:
            value = Fraction(a.tau.get(state, 0))
            if value:
                lines.append(f"output {state} {value}")
    elif a.terminal:
        lines.append(f"final {' '.join(q for q in a.states if q in a.terminal)}")
    lines.extend(f"trans {q} {x} {a.delta[(q, x)]}"
                 for q in a.states for x in a.alphabet if (q, x) in a.delta)
    return '\n'.join(lines) + '\n'
