# apps/codes/models.py
"""Noncommutative polynomials with rational coefficients, Bernoulli measures, pure squares."""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple, Union

from apps.automata.models import Alphabet, format_word
from apps.core.exceptions import DomainError, InputError
from apps.core.linalg import format_fraction

Scalar = Union[int, Fraction]


class NoncommPoly:
    """Finite ℚ-linear combination of words; zero coefficients are never stored."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[str, Scalar]] = None):
        cleaned = {}
        for word, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[word] = coefficient
        self._terms = cleaned

    @classmethod
    def one(cls) -> 'NoncommPoly':
        return cls({'': 1})

    @classmethod
    def of_set(cls, words: Iterable[str]) -> 'NoncommPoly':
        """Characteristic polynomial 𝟙(X) of a finite set."""
        return cls({word: 1 for word in set(words)})

    @classmethod
    def letters(cls, alphabet: Alphabet) -> 'NoncommPoly':
        return cls.of_set(alphabet)

    @property
    def terms(self) -> Mapping[str, Fraction]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[Tuple[str, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0])))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NoncommPoly({'': other})
        return isinstance(other, NoncommPoly) and self._terms == other._terms

    __hash__ = None

    def coefficient(self, word: str) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def support(self) -> FrozenSet[str]:
        return frozenset(self._terms)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    @property
    def constant(self) -> Fraction:
        return self.coefficient('')

    def _coerce(self, other) -> 'NoncommPoly':
        if isinstance(other, NoncommPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return NoncommPoly({'': other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = dict(self._terms)
        for word, c in other._terms.items():
            result[word] = result.get(word, 0) + c
        return NoncommPoly(result)

    __radd__ = __add__

    def __neg__(self):
        return NoncommPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def multiply(self, other: 'NoncommPoly', max_len: Optional[int] = None) -> 'NoncommPoly':
        """Product, optionally dropping words longer than ``max_len``."""
        result: Dict[str, Fraction] = defaultdict(Fraction)
        for u, c in self._terms.items():
            for v, d in other._terms.items():
                if max_len is not None and len(u) + len(v) > max_len:
                    continue
                result[u + v] += c * d
        return NoncommPoly(result)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.multiply(other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.multiply(self)

    def __pow__(self, exponent: int):
        result = NoncommPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def truncate(self, max_len: int) -> 'NoncommPoly':
        return NoncommPoly({w: c for w, c in self._terms.items() if len(w) <= max_len})

    def star(self, max_len: int) -> 'NoncommPoly':
        """Σ_k self^k truncated to words of length at most ``max_len``."""
        if self.constant:
            raise DomainError('star needs a polynomial without constant term')
        result, power = NoncommPoly.one(), NoncommPoly.one()
        while True:
            power = power.multiply(self, max_len)
            if not power:
                return result
            result = result + power

    def reverse(self) -> 'NoncommPoly':
        return NoncommPoly({w[::-1]: c for w, c in self._terms.items()})

    def is_characteristic(self) -> bool:
        return all(c == 1 for c in self._terms.values())

    def as_set(self) -> FrozenSet[str]:
        if not self.is_characteristic():
            bad = next(w for w, c in self if c != 1)
            raise DomainError(f"coefficient {self.coefficient(bad)} on {format_word(bad)!r} is not 0 or 1")
        return self.support()

    def measure(self, pi: 'Bernoulli') -> Fraction:
        return sum((c * pi.of_word(w) for w, c in self._terms.items()), Fraction(0))

    def left_divide(self, divisor: 'NoncommPoly') -> Optional['NoncommPoly']:
        """
        The polynomial M with ``divisor * M == self``, or None.

        Terms are cleared by increasing length; the constant term of the
        divisor must be nonzero.
        """
        head = divisor.constant
        if not head:
            raise DomainError('left division needs a divisor with a nonzero constant term')
        remainder = dict(self._terms)
        quotient: Dict[str, Fraction] = {}
        for length in range(self.degree() + 1):
            for word in sorted(w for w in remainder if len(w) == length):
                c = remainder.pop(word, 0)
                if not c:
                    continue
                q = c / head
                quotient[word] = q
                for u, d in divisor._terms.items():
                    if u:
                        remainder[u + word] = remainder.get(u + word, 0) - d * q
            remainder = {w: c for w, c in remainder.items() if c}
        if remainder:
            return None
        result = NoncommPoly(quotient)
        return result if divisor * result == self else None

    def right_divide(self, divisor: 'NoncommPoly') -> Optional['NoncommPoly']:
        """The polynomial M with ``M * divisor == self``, or None."""
        quotient = self.reverse().left_divide(divisor.reverse())
        return None if quotient is None else quotient.reverse()

    def __repr__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for word, c in self:
            shown = format_word(word) if word else '1'
            if c == 1:
                parts.append(shown)
            elif c == -1:
                parts.append(f"-{shown}")
            else:
                parts.append(f"{format_fraction(c)}·{shown}")
        return ' + '.join(parts).replace('+ -', '- ')


@dataclass(frozen=True)
class Bernoulli:
    """Positive Bernoulli distribution π on the letters, extended multiplicatively."""

    probs: Mapping[str, Fraction]

    def __post_init__(self):
        for letter, p in self.probs.items():
            if not 0 < Fraction(p) <= 1:
                raise InputError(f"probability of {letter!r} must lie in (0, 1], got {p}")
        if sum(Fraction(p) for p in self.probs.values()) != 1:
            raise InputError('letter probabilities must add up to 1')

    @classmethod
    def uniform(cls, alphabet: Alphabet) -> 'Bernoulli':
        return cls({letter: Fraction(1, len(alphabet)) for letter in alphabet})

    def __hash__(self):
        return hash(tuple(sorted(self.probs.items())))

    def of_word(self, word: str) -> Fraction:
        value = Fraction(1)
        for letter in word:
            if letter not in self.probs:
                raise InputError(f"no probability for letter {letter!r}")
            value *= Fraction(self.probs[letter])
        return value

    def of_set(self, words: Iterable[str]) -> Fraction:
        return sum((self.of_word(w) for w in set(words)), Fraction(0))


@dataclass(frozen=True)
class PureSquare:
    code: FrozenSet[str]
    w: str

    @property
    def x(self) -> str:
        return self.w + self.w

    @property
    def left_quotient(self) -> FrozenSet[str]:
        """G = Z w⁻¹."""
        return frozenset(z[:-len(self.w)] for z in self.code if z.endswith(self.w))

    @property
    def right_quotient(self) -> FrozenSet[str]:
        """D = w⁻¹ Z."""
        return frozenset(z[len(self.w):] for z in self.code if z.startswith(self.w))

    G = left_quotient
    D = right_quotient
