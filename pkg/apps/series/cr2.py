# apps/series/cr2.py
"""
Constructive decomposition of an irreducible recurrent series.

Starting from a minimal absolutely irreducible representation (λ, μ, γ),
a word u is found such that the orbit R(λμ(u)) is a minimal invariant
set of nonzero vectors, and symmetrically a word v for the orbit of
μ(v)γ under the left action. The birecurrent series T has coefficients
(T, w) = λμ(uwv) and

    S = Σ_{x,y} (X, x)(Y, y) x⁻¹Ty⁻¹

for polynomials X, Y with λμ(u)μ(X) = λ and μ(Y)μ(v)γ = γ.
"""
import logging
from collections import deque
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import networkx as nx
import numpy as np

from apps.automata.models import ScalarOutputDfa
from apps.core.conf import birec_setting
from apps.core.exceptions import InvariantViolation, ResourceCapExceeded
from apps.core.linalg import RowBasis, is_zero, key
from apps.core.models import Outcome
from apps.series.models import CR2Term, CR2Trace, LinearRepresentation
from apps.series.representation import (algebra_dimension, column_span, direct_sum, invariant_subspace,
                                        minimize_representation, representation_from_scalar, row_span,
                                        series_agree)
from apps.series.scalar import is_recurrent_series

logger = logging.getLogger(__name__)

Step = Callable[[np.ndarray, str], np.ndarray]


class Orbit:
    """Nonzero vectors reachable from a start vector, with the BFS word reaching each."""

    def __init__(self, r: LinearRepresentation, start: np.ndarray, step: Step,
                 extend: Callable[[str, str], str], cap: int):
        self.r = r
        self.step = step
        self.graph = nx.DiGraph()
        self.order: List[tuple] = []
        self.vectors: Dict[tuple, np.ndarray] = {}
        self.words: Dict[tuple, str] = {}
        self._explore(start, extend, cap)

    def _explore(self, start, extend, cap):
        if is_zero(start):
            return
        self._add(start, '')
        queue = deque([key(start)])
        while queue:
            source = queue.popleft()
            for letter in self.r.alphabet:
                image = self.step(self.vectors[source], letter)
                if is_zero(image):
                    continue
                target = key(image)
                if target not in self.vectors:
                    if len(self.order) >= cap:
                        raise ResourceCapExceeded(cap, 'orbit vectors')
                    self._add(image, extend(self.words[source], letter))
                    queue.append(target)
                self.graph.add_edge(source, target)

    def _add(self, vector, word):
        k = key(vector)
        self.order.append(k)
        self.vectors[k] = vector
        self.words[k] = word
        self.graph.add_node(k)

    def minimal_component(self) -> List[tuple]:
        """The sink component met first in breadth-first order, starting with that vector."""
        condensed = nx.condensation(self.graph)
        mapping = condensed.graph['mapping']
        first = next(k for k in self.order if condensed.out_degree(mapping[k]) == 0)
        component = mapping[first]
        return [k for k in self.order if mapping[k] == component]


def _scalar_automaton(orbit: Orbit, members: List[tuple], output: Callable[[np.ndarray], Fraction]
                      ) -> ScalarOutputDfa:
    label = {k: str(i + 1) for i, k in enumerate(members)}
    delta = {}
    for k in members:
        for letter in orbit.r.alphabet:
            image = orbit.step(orbit.vectors[k], letter)
            if not is_zero(image):
                delta[(label[k], letter)] = label[key(image)]
    tau = {label[k]: Fraction(output(orbit.vectors[k])) for k in members}
    return ScalarOutputDfa(orbit.r.alphabet, tuple(label[k] for k in members), '1', delta, tau)


def _coordinates(words: List[str], vectors: List[np.ndarray], target: np.ndarray, dim: int,
                 name: str) -> Dict[str, Fraction]:
    coordinates = RowBasis(vectors, dim).coordinates(target)
    if coordinates is None:
        raise InvariantViolation(f"{name} is not in the span of its orbit")
    return {w: Fraction(c) for w, c in zip(words, coordinates) if c != 0}


def cr2_constructive(r: LinearRepresentation, bound: Optional[int] = None,
                     cap: Optional[int] = None) -> CR2Trace:
    """
    Build T, X and Y for an absolutely irreducible series and verify the reconstruction.

    Args:
        r: any representation of the series; it is minimized first
        bound: words up to this length are compared after reconstruction
        cap: maximum size of each orbit

    Returns:
        CR2Trace; the outcome is 'indeterminate' when the minimal
        representation is not absolutely irreducible, with an invariant
        subspace when one was found by spinning.
    """
    bound = bound if bound is not None else birec_setting('BOUND')
    cap = cap or birec_setting('CAP')
    rep = minimize_representation(r, bound).rep
    n = rep.dim
    if not n:
        return CR2Trace(Outcome.INDETERMINATE, reason='the series is zero')
    matrices = [rep.mu[letter] for letter in rep.alphabet]
    dimension = algebra_dimension(matrices, n)
    if dimension != n * n:
        subspace = invariant_subspace(rep)
        found = [tuple(v) for v in subspace] if subspace else None
        logger.warning(f"⚠️ Algebra of dimension {dimension} < {n * n}: not absolutely irreducible")
        return CR2Trace(Outcome.INDETERMINATE, invariant_subspace=found,
                        reason=f"the matrices span an algebra of dimension {dimension}, not {n * n}")

    rows = Orbit(rep, rep.lam, lambda v, x: v @ rep.mu[x], lambda w, x: w + x, cap)
    right_members = rows.minimal_component()
    u = rows.words[right_members[0]]
    columns = Orbit(rep, rep.gamma, lambda v, x: rep.mu[x] @ v, lambda w, x: x + w, cap)
    left_members = columns.minimal_component()
    v = columns.words[left_members[0]]
    lam_u, gamma_v = rep.row(u), rep.column(v)
    logger.info(f"🔁 Minimal orbits reached by u={u or 'eps'} ({len(right_members)} vectors) "
                f"and v={v or 'eps'} ({len(left_members)} vectors)")

    t = _scalar_automaton(rows, right_members, lambda p: p @ gamma_v)
    reversal = _scalar_automaton(columns, left_members, lambda c: lam_u @ c)
    if not is_recurrent_series(t) or not is_recurrent_series(reversal):
        raise InvariantViolation('the series T or its reversal is not recurrent')

    x_words, x_vectors = row_span(rep, lam_u)
    x_terms = _coordinates(x_words, x_vectors, rep.lam, n, 'λ')
    y_words, y_vectors = column_span(rep, gamma_v)
    y_terms = _coordinates(y_words, y_vectors, rep.gamma, n, 'γ')
    terms = tuple(CR2Term(cx * cy, x, y) for x, cx in x_terms.items() for y, cy in y_terms.items())

    base = representation_from_scalar(t)
    quotients = [LinearRepresentation(base.alphabet, base.row(term.x), base.mu, base.column(term.y))
                 for term in terms]
    if not series_agree(direct_sum(quotients, [term.coefficient for term in terms]), r, bound):
        raise InvariantViolation(f"Σ (X,x)(Y,y) x⁻¹Ty⁻¹ differs on words of length at most {bound}")
    logger.info(f"✅ Reconstruction verified with {len(terms)} terms up to length {bound}")
    return CR2Trace(Outcome.VERDICT, u, v, t, x_terms, y_terms, terms, bound)
