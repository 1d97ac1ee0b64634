# apps/codes/predicates.py
"""Prefix, suffix and bifix tests on finite sets of words."""
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from apps.core.exceptions import DomainError


@dataclass(frozen=True)
class CodeCheck:
    verdict: bool
    # (u, v) with u a proper prefix (or suffix) of v, or a repeated word
    witness: Optional[Tuple[str, str]] = None

    def __bool__(self):
        return self.verdict


def prefix_witness(words: Iterable[str]) -> Optional[Tuple[str, str]]:
    """
    A pair (u, v) with u a prefix of v, or None.

    In lexicographic order a word is immediately followed by its
    extensions, so comparing neighbours is enough.
    """
    ordered = sorted(words)
    for first, second in zip(ordered, ordered[1:]):
        if second.startswith(first):
            return first, second
    return None


def is_prefix_code(words: Iterable[str]) -> CodeCheck:
    words = list(words)
    if '' in words:
        raise DomainError('the empty word cannot belong to a code')
    witness = prefix_witness(words)
    return CodeCheck(witness is None, witness)


def is_suffix_code(words: Iterable[str]) -> CodeCheck:
    check = is_prefix_code(w[::-1] for w in words)
    if check.witness is None:
        return check
    u, v = check.witness
    return CodeCheck(check.verdict, (u[::-1], v[::-1]))


def is_bifix_code(words: Iterable[str]) -> CodeCheck:
    words = list(words)
    prefix = is_prefix_code(words)
    if not prefix:
        return prefix
    return is_suffix_code(words)
