# apps/monoid/models.py
"""
Elements of transition monoids and the Green structure of a finite monoid.

A deterministic automaton acts by partial maps on its states, an
unambiguous one by 0/1 matrices. Both expose the same small interface
(``then``, ``key``, ``rank``, ``row_sets``, ``column_sets``) so the
monoid code does not care which one it holds.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from apps.core.exceptions import AmbiguityError
from apps.core.linalg import rank as exact_rank


@dataclass(frozen=True)
class PartialMap:
    # images[p] is the index of p·w, or -1 when undefined
    images: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> 'PartialMap':
        return cls(tuple(range(n)))

    @property
    def key(self):
        return self.images

    def then(self, other: 'PartialMap') -> 'PartialMap':
        """Apply self, then other."""
        return PartialMap(tuple(-1 if q < 0 else other.images[q] for q in self.images))

    @cached_property
    def rank(self) -> int:
        return len({q for q in self.images if q >= 0})

    @property
    def is_zero(self) -> bool:
        return all(q < 0 for q in self.images)

    def kernel(self) -> List[Tuple[int, ...]]:
        """Classes {p : p·w = q} of the domain, ordered by their smallest state."""
        classes: Dict[int, List[int]] = {}
        for p, q in enumerate(self.images):
            if q >= 0:
                classes.setdefault(q, []).append(p)
        return sorted((tuple(c) for c in classes.values()), key=lambda c: c[0])

    def image(self) -> Tuple[int, ...]:
        return tuple(sorted({q for q in self.images if q >= 0}))

    def column_sets(self) -> List[Tuple[int, ...]]:
        return self.kernel()

    def row_sets(self) -> List[Tuple[int, ...]]:
        return [(q,) for q in self.image()]


@dataclass(frozen=True, eq=False)
class BoolMatrix:
    matrix: np.ndarray

    @classmethod
    def identity(cls, n: int) -> 'BoolMatrix':
        return cls(np.eye(n, dtype=np.int64))

    @cached_property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, BoolMatrix) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def then(self, other: 'BoolMatrix') -> 'BoolMatrix':
        product = self.matrix @ other.matrix
        if product.size and product.max() > 1:
            raise AmbiguityError('')
        return BoolMatrix(product)

    @cached_property
    def rank(self) -> int:
        """Rank over the rationals."""
        return exact_rank(self.matrix.astype(object))

    @property
    def is_zero(self) -> bool:
        return not self.matrix.any()

    def image(self) -> Tuple[int, ...]:
        """Indices of the nonzero columns."""
        return tuple(np.flatnonzero(self.matrix.any(axis=0)).tolist())

    def column_sets(self) -> List[Tuple[int, ...]]:
        """Distinct nonzero columns, each given by the rows holding a 1."""
        columns = {tuple(np.flatnonzero(self.matrix[:, j]).tolist()) for j in range(self.matrix.shape[1])}
        return sorted(c for c in columns if c)

    def row_sets(self) -> List[Tuple[int, ...]]:
        rows = {tuple(np.flatnonzero(self.matrix[i, :]).tolist()) for i in range(self.matrix.shape[0])}
        return sorted(r for r in rows if r)


MonoidValue = Union[PartialMap, BoolMatrix]


@dataclass(frozen=True)
class MonoidElement:
    id: int
    value: MonoidValue = field(compare=False)
    # length-lex minimal word representing the element
    witness: str


@dataclass(frozen=True)
class SuschkevitchGroup:
    idempotent: int
    members: Tuple[int, ...]
    table: Dict[Tuple[int, int], int] = field(compare=False)

    @property
    def order(self) -> int:
        return len(self.members)


@dataclass
class GreenStructure:
    """
    Finite monoid φ(A*) with its Green classes.

    Class ids of R, L, H and D are numbered by the smallest element id
    they contain, so they follow witness order.
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    elements: List[MonoidElement]
    right: List[Dict[str, int]]
    left: List[Dict[str, int]]
    r_class: List[int]
    l_class: List[int]
    h_class: List[int]
    d_class: List[int]
    ranks: List[int]
    idempotents: Tuple[int, ...]
    zero: Optional[int]
    minimal_rank: Optional[int]
    ideal: Tuple[int, ...]
    suschkevitch: Optional[SuschkevitchGroup]
    index: Dict[object, int] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.elements)

    def element_of(self, word: str) -> int:
        current = 0
        for letter in word:
            current = self.right[current][letter]
        return current

    def product(self, i: int, j: int) -> int:
        value = self.elements[i].value.then(self.elements[j].value)
        return self.index[value.key]

    def is_idempotent(self, i: int) -> bool:
        return self.product(i, i) == i

    def h_members(self, h: int) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.h_class) if c == h)

    def labels(self, indices: Tuple[int, ...]) -> Tuple[str, ...]:
        return tuple(self.states[i] for i in indices)

    def kernel_labels(self, i: int) -> List[Tuple[str, ...]]:
        return [self.labels(c) for c in self.elements[i].value.column_sets()]

    def image_labels(self, i: int) -> List[Tuple[str, ...]]:
        return [self.labels(r) for r in self.elements[i].value.row_sets()]

    @property
    def has_zero(self) -> bool:
        return self.zero is not None
