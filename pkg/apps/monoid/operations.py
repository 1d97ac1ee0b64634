# apps/monoid/operations.py
"""Transition monoid enumeration, Green's relations and kernel/saturation queries."""
import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from apps.automata.models import Dfa, Nfa
from apps.automata.operations import is_strongly_connected
from apps.core.conf import birec_setting
from apps.core.exceptions import AmbiguityError, DomainError, ResourceCapExceeded
from apps.monoid.models import (BoolMatrix, GreenStructure, MonoidElement, PartialMap,
                                SuschkevitchGroup)

logger = logging.getLogger(__name__)


def generators(a: Union[Dfa, Nfa]) -> Dict[str, Union[PartialMap, BoolMatrix]]:
    """φ(letter) for every letter: partial maps for a Dfa, 0/1 matrices for an Nfa."""
    order = a.index
    if isinstance(a, Dfa):
        return {letter: PartialMap(tuple(order[a.delta[(q, letter)]] if (q, letter) in a.delta else -1
                                         for q in a.states))
                for letter in a.alphabet}
    n = len(a.states)
    result = {}
    for letter in a.alphabet:
        matrix = np.zeros((n, n), dtype=np.int64)
        for source, x, target in a.edges:
            if x == letter:
                matrix[order[source], order[target]] = 1
        result[letter] = BoolMatrix(matrix)
    return result


def evaluate(a: Union[Dfa, Nfa], word: str):
    """φ(word) computed directly, without enumerating the monoid."""
    gens = generators(a)
    value = (PartialMap.identity(len(a.states)) if isinstance(a, Dfa)
             else BoolMatrix.identity(len(a.states)))
    for letter in a.alphabet.validate(word):
        value = value.then(gens[letter])
    return value


def _class_ids(n: int, edges: Iterable[Tuple[int, int]]) -> List[int]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    components = sorted((min(c), c) for c in nx.strongly_connected_components(graph))
    ids = [0] * n
    for number, (_, members) in enumerate(components):
        for i in members:
            ids[i] = number
    return ids


def transition_monoid(a: Union[Dfa, Nfa], cap: Optional[int] = None) -> GreenStructure:
    """
    Enumerate φ(A*) breadth-first and compute its Green structure.

    Args:
        a: trim Dfa (partial maps) or trim unambiguous Nfa (0/1 matrices)
        cap: maximum number of elements; defaults to settings.BIREC['CAP']

    Returns:
        GreenStructure whose element ids follow length-lex witness order
    """
    cap = cap or birec_setting('CAP')
    gens = generators(a)
    n = len(a.states)
    identity = PartialMap.identity(n) if isinstance(a, Dfa) else BoolMatrix.identity(n)
    elements = [MonoidElement(0, identity, '')]
    index = {identity.key: 0}
    right: List[Dict[str, int]] = []
    position = 0
    while position < len(elements):
        current = elements[position]
        row = {}
        for letter in a.alphabet:
            try:
                value = current.value.then(gens[letter])
            except AmbiguityError:
                raise AmbiguityError(current.witness + letter)
            target = index.get(value.key)
            if target is None:
                if len(elements) >= cap:
                    raise ResourceCapExceeded(cap)
                target = len(elements)
                index[value.key] = target
                elements.append(MonoidElement(target, value, current.witness + letter))
            row[letter] = target
        right.append(row)
        position += 1
        if position % 10000 == 0:
            logger.debug("monoid enumeration: %d elements", len(elements))

    size = len(elements)
    left = [{letter: index[gens[letter].then(m.value).key] for letter in a.alphabet} for m in elements]
    right_edges = [(i, j) for i, row in enumerate(right) for j in row.values()]
    left_edges = [(i, j) for i, row in enumerate(left) for j in row.values()]
    r_class = _class_ids(size, right_edges)
    l_class = _class_ids(size, left_edges)
    d_class = _class_ids(size, right_edges + left_edges)
    h_ids: Dict[Tuple[int, int], int] = {}
    h_class = [h_ids.setdefault((r_class[i], l_class[i]), len(h_ids)) for i in range(size)]

    # rank is constant on D-classes
    d_rank: Dict[int, int] = {}
    for m in elements:
        if d_class[m.id] not in d_rank:
            d_rank[d_class[m.id]] = m.value.rank
    ranks = [d_rank[d_class[i]] for i in range(size)]

    idempotents = tuple(m.id for m in elements if m.value.then(m.value).key == m.value.key)
    zero = next((m.id for m in elements if m.value.is_zero), None)
    nonzero = [r for r in ranks if r > 0]
    minimal_rank = min(nonzero) if nonzero else None
    ideal = tuple(i for i in range(size) if minimal_rank is not None and ranks[i] == minimal_rank)

    green = GreenStructure(
        states=tuple(a.states), alphabet=tuple(a.alphabet), elements=elements, right=right, left=left,
        r_class=r_class, l_class=l_class, h_class=h_class, d_class=d_class, ranks=ranks,
        idempotents=idempotents, zero=zero, minimal_rank=minimal_rank, ideal=ideal,
        suschkevitch=None, index=index)
    green.suschkevitch = _suschkevitch(green)
    logger.info(f"📊 Monoid: {size} elements, minimal rank {minimal_rank}, ideal {len(ideal)} elements")
    return green


def _suschkevitch(g: GreenStructure) -> Optional[SuschkevitchGroup]:
    chosen = next((i for i in g.ideal if i in set(g.idempotents)), None)
    if chosen is None:
        return None
    members = g.h_members(g.h_class[chosen])
    table = {(x, y): g.product(x, y) for x in members for y in members}
    return SuschkevitchGroup(chosen, members, table)


def rank(element: MonoidElement) -> int:
    return element.value.rank


def minimal_nonzero_rank(g: GreenStructure) -> Optional[int]:
    return g.minimal_rank


def minimal_images(g: GreenStructure) -> List[Tuple[str, ...]]:
    """Distinct images of the elements of minimal nonzero rank, in witness order."""
    images: List[Tuple[str, ...]] = []
    for i in g.ideal:
        image = g.labels(g.elements[i].value.image())
        if image not in images:
            images.append(image)
    return images


def kernel_of(a: Dfa, word: str) -> List[Tuple[str, ...]]:
    """Partition {p : p·w = q} of Dom(w); empty when w maps no state."""
    value = evaluate(a, word)
    return [tuple(a.states[p] for p in c) for c in value.kernel()]


def _saturates(classes: Sequence[Iterable[str]], t: Iterable[str]) -> bool:
    t = set(t)
    covered = set()
    for c in classes:
        c = set(c)
        if c & t and not c <= t:
            return False
        if c <= t:
            covered |= c
    return covered == t


def is_saturated(a: Dfa, t: Iterable[str], word: str) -> bool:
    """True iff t is a union of classes of the kernel of ``word``."""
    return _saturates(kernel_of(a, word), t)


def find_saturating_word(a: Dfa, t: Iterable[str], g: Optional[GreenStructure] = None
                         ) -> Optional[str]:
    """Length-lex least minimal-rank witness whose kernel saturates t, or None."""
    g = g or transition_monoid(a)
    t = tuple(t)
    for i in g.ideal:
        if _saturates(g.kernel_labels(i), t):
            return g.elements[i].witness
    return None


def synchronizable(a: Dfa, p: str, q: str) -> bool:
    """True iff p·v = q·v (both defined) for some word v."""
    start = (p, q)
    seen, queue = {start}, deque([start])
    while queue:
        x, y = queue.popleft()
        if x == y:
            return True
        for letter in a.alphabet:
            nx_, ny = a.delta.get((x, letter)), a.delta.get((y, letter))
            if nx_ is None or ny is None:
                continue
            pair = (nx_, ny)
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return False


def strongly_synchronizable_classes(a: Dfa, g: Optional[GreenStructure] = None) -> List[Tuple[str, ...]]:
    """
    Stable equivalence of strong synchronizability.

    Two states are equivalent iff every element of minimal rank maps them
    to the same state.
    """
    if not a.is_complete:
        raise DomainError('strongly synchronizable classes need a complete automaton')
    if not is_strongly_connected(a):
        raise DomainError('strongly synchronizable classes need a strongly connected automaton')
    g = g or transition_monoid(a)
    signature = {q: tuple(g.elements[i].value.images[a.index[q]] for i in g.ideal) for q in a.states}
    classes: Dict[tuple, List[str]] = {}
    for q in a.states:
        classes.setdefault(signature[q], []).append(q)
    return [tuple(c) for c in classes.values()]


def acts_transitively(g: GreenStructure, h: int) -> bool:
    """True iff the group H-class ``h`` permutes the common image of its elements transitively."""
    members = g.h_members(h)
    unit = next((m for m in members if g.is_idempotent(m)), None)
    if unit is None:
        raise DomainError(f"H-class {h} is not a group")
    first = g.elements[unit].value
    if isinstance(first, PartialMap):
        image = set(first.image())
        for state in image:
            orbit = {g.elements[m].value.images[state] for m in members}
            if orbit != image:
                return False
        return True
    rows = first.row_sets()
    # rows of h are the rows of the idempotent multiplied by h
    for row in rows:
        vector = np.zeros(first.matrix.shape[0], dtype=np.int64)
        vector[list(row)] = 1
        orbit = {tuple(np.flatnonzero(vector @ g.elements[m].value.matrix).tolist()) for m in members}
        if orbit != set(rows):
            return False
    return True
