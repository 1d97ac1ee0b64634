# apps/series/irreducible.py
"""
Counting irreducible constituents of the syntactic representation.

The count equals the count for the restriction of ψ to the Suschkevitch
group G acting on Ve, for e an idempotent of the minimal ideal. The
representation of G is split by spinning vectors into invariant
subspaces; complements are kernels of G-averaged projections. A summand
whose matrices span the full matrix algebra is certified irreducible.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from apps.automata.models import Dfa
from apps.birecurrence.operations import is_recurrent
from apps.core.conf import birec_setting
from apps.core.exceptions import InvariantViolation
from apps.core.linalg import identity, left_nullspace, qmatrix, qvector, solve_left, span_basis, unit_vector, zeros
from apps.core.models import Outcome
from apps.series.models import IrreducibleCount
from apps.series.representation import algebra_dimension, spin
from apps.series.syntactic import syntactic_data

logger = logging.getLogger(__name__)


class GroupRepresentation:
    """Matrices of a finite group acting on row vectors, with the inverse of each member."""

    def __init__(self, matrices: Sequence[np.ndarray], inverses: Sequence[int]):
        self.matrices = list(matrices)
        self.inverses = list(inverses)

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0] if self.matrices else 0

    def restrict(self, basis: Sequence[np.ndarray]) -> 'GroupRepresentation':
        rows = qmatrix([list(v) for v in basis], shape=(len(basis), self.dim))
        restricted = []
        for m in self.matrices:
            image = solve_left(rows, rows @ m)
            if image is None:
                raise InvariantViolation('subspace is not invariant under the group')
            restricted.append(image)
        return GroupRepresentation(restricted, self.inverses)

    def complement(self, basis: Sequence[np.ndarray]) -> List[np.ndarray]:
        """An invariant complement of span(basis): the kernel of the averaged projection."""
        n, k = self.dim, len(basis)
        full = span_basis(list(basis) + [unit_vector(n, i) for i in range(n)], n)
        change = qmatrix([list(v) for v in full], shape=(n, n))
        keep = zeros(n, n)
        for i in range(k):
            keep[i, i] = Fraction(1)
        inverse = solve_left(change, identity(n))
        projection = inverse @ keep @ change
        averaged = zeros(n, n)
        for m, j in zip(self.matrices, self.inverses):
            averaged = averaged + self.matrices[j] @ projection @ m
        averaged = averaged * Fraction(1, len(self.matrices))
        return left_nullspace(averaged)


def _split(rep: GroupRepresentation, rng: np.random.Generator, attempts: int) -> Optional[List[int]]:
    n = rep.dim
    if n == 0:
        return []
    if algebra_dimension(rep.matrices, n) == n * n:
        return [n]
    candidates = [unit_vector(n, i) for i in range(n)]
    candidates += [qvector(int(x) for x in rng.integers(-3, 4, size=n)) for _ in range(attempts)]
    for vector in candidates:
        basis = spin(vector, rep.matrices)
        if 0 < len(basis) < n:
            break
    else:
        logger.debug("no invariant subspace found in dimension %d", n)
        return None
    complement = rep.complement(basis)
    if len(complement) + len(basis) != n:
        raise InvariantViolation('averaged projection has the wrong rank')
    first = _split(rep.restrict(basis), rng, attempts)
    second = _split(rep.restrict(complement), rng, attempts)
    if first is None or second is None:
        return None
    return first + second


def count_irreducible_components(a: Dfa, seed: Optional[int] = None, attempts: Optional[int] = None,
                                 cap: Optional[int] = None) -> IrreducibleCount:
    """
    Number of irreducible constituents of ψ for a recurrent completely reducible set.

    The count is reported only when every summand is certified absolutely
    irreducible; otherwise the outcome is 'indeterminate'.
    """
    seed = birec_setting('SEED') if seed is None else seed
    attempts = birec_setting('SPLIT_ATTEMPTS') if attempts is None else attempts
    data = syntactic_data(a, cap)
    if not is_recurrent(data.automaton):
        return IrreducibleCount(Outcome.INAPPLICABLE, reason='the set is not recurrent')
    if data.ek_dim:
        return IrreducibleCount(Outcome.INAPPLICABLE, reason='the set is not completely reducible')
    group = data.monoid.suschkevitch
    if group is None:
        return IrreducibleCount(Outcome.INDETERMINATE, reason='the minimal ideal has no idempotent')

    n = data.rep.dim
    e = data.psi(group.idempotent)
    ve = span_basis(list(e), n)
    position = {g: i for i, g in enumerate(group.members)}
    inverses = [position[next(h for h in group.members if group.table[(g, h)] == group.idempotent)]
                for g in group.members]
    rep = GroupRepresentation([data.psi(g) for g in group.members], inverses).restrict(ve)
    logger.info(f"🧮 Suschkevitch group of order {group.order} acting on Ve of dimension {len(ve)}")

    dimensions = _split(rep, np.random.default_rng(seed), attempts)
    if dimensions is None:
        logger.warning("⚠️ Could not certify a decomposition into irreducible constituents")
        return IrreducibleCount(Outcome.INDETERMINATE, group_order=group.order,
                                reason='splitting found no invariant subspace in a summand not certified irreducible')
    logger.info(f"✅ {len(dimensions)} irreducible constituents")
    return IrreducibleCount(Outcome.VERDICT, len(dimensions), tuple(dimensions), group.order)
