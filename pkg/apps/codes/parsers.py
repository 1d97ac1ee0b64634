# apps/codes/parsers.py
"""
Text formats of the codes app.

Code files hold one word per line (``eps`` for the empty word), polynomial
files one ``<rational> <word>`` term per line, Bernoulli files one
``prob <letter> <p/q>`` line per letter. ``#`` starts a comment.
"""
import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Optional, Tuple, Union

from apps.automata.models import EPSILON_TOKEN, Alphabet
from apps.codes.models import Bernoulli, NoncommPoly
from apps.core.exceptions import InputError, ParseError

logger = logging.getLogger(__name__)


def _lines(text: str) -> Iterator[Tuple[int, list]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _word(token: str) -> str:
    return '' if token == EPSILON_TOKEN else token


def _rational(token: str, number: int, source: Optional[str]) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {token!r}", line=number, source=source) from exc


def _read(path: Union[str, Path]) -> Tuple[str, str]:
    path = Path(path)
    try:
        return path.read_text(encoding='utf-8'), path.name
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def parse_code(text: str, source: Optional[str] = None) -> Tuple[str, ...]:
    """Words of a code file, in file order; repeated words are rejected."""
    words = []
    for number, tokens in _lines(text):
        if len(tokens) != 1:
            raise ParseError('one word per line', line=number, source=source)
        word = _word(tokens[0])
        if word in words:
            raise ParseError(f"repeated word {tokens[0]!r}", line=number, source=source)
        words.append(word)
    return tuple(words)


def parse_polynomial(text: str, source: Optional[str] = None) -> NoncommPoly:
    terms = {}
    for number, tokens in _lines(text):
        if len(tokens) != 2:
            raise ParseError('expected "<rational> <word>"', line=number, source=source)
        word = _word(tokens[1])
        terms[word] = terms.get(word, 0) + _rational(tokens[0], number, source)
    return NoncommPoly(terms)


def parse_bernoulli(text: str, source: Optional[str] = None) -> Bernoulli:
    probs = {}
    for number, tokens in _lines(text):
        if len(tokens) != 3 or tokens[0] != 'prob':
            raise ParseError('expected "prob <letter> <p/q>"', line=number, source=source)
        letter = tokens[1]
        if len(letter) != 1:
            raise ParseError(f"letters are single characters, got {letter!r}", line=number, source=source)
        if letter in probs:
            raise ParseError(f"probability of {letter!r} given twice", line=number, source=source)
        probs[letter] = _rational(tokens[2], number, source)
    if not probs:
        raise ParseError('no probabilities', source=source)
    return Bernoulli(probs)


def load_code(path: Union[str, Path]) -> Tuple[str, ...]:
    text, name = _read(path)
    words = parse_code(text, name)
    logger.debug(f"Loaded code {name}: {len(words)} words")
    return words


def load_polynomial(path: Union[str, Path]) -> NoncommPoly:
    return parse_polynomial(*_read(path))


def load_bernoulli(path: Union[str, Path]) -> Bernoulli:
    return parse_bernoulli(*_read(path))


def dump_code(words, alphabet: Optional[Alphabet] = None) -> str:
    """One word per line in length-lex order (alphabet order when given)."""
    key = alphabet.sort_key if alphabet else (lambda w: (len(w), w))
    return ''.join(f"{w or EPSILON_TOKEN}\n" for w in sorted(words, key=key))


def dump_polynomial(polynomial: NoncommPoly) -> str:
    return ''.join(f"{c} {w or EPSILON_TOKEN}\n" for w, c in polynomial)


def dump_bernoulli(pi: Bernoulli) -> str:
    return ''.join(f"prob {letter} {Fraction(p)}\n" for letter, p in sorted(pi.probs.items()))
